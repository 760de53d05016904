#include "hopfq/cli.hpp"

#include <algorithm>
#include <cmath>

#include <CLI11.hpp>

#include "hopfq/document.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/invariant_checks.hpp"
#include "hopfq/state_spec.hpp"

namespace hopfq {
namespace {

struct Options {
  std::string state;
  bool renormalize = false;
  bool csv = false;
  double tol = tol::kSeparability;
  int cut = 1;
  int qubits = 3;
  std::uint64_t count = 1;
  std::uint64_t seed = 1;
  std::size_t bins = 0;
  std::uint64_t trials = CheckConfig{}.trials;
};

PureState load(const Options& o) { return make_state(parse_state_spec(o.state), o.renormalize); }

int cmd_analyze(const Options& o, std::ostream& out) {
  const PureState s = load(o);
  out << serialize(analysis_document(s, o.tol));
  return kExitOk;
}

int cmd_coords(const Options& o, std::ostream& out) {
  const PureState s = load(o);
  if (o.cut > s.qubits()) {
    throw ContractViolation("--cut " + std::to_string(o.cut) + " on a " + std::to_string(s.qubits()) + "-qubit state");
  }
  const Document doc = coordinates_document(s, o.cut);
  if (!o.csv) {
    out << serialize(doc);
    return kExitOk;
  }
  const BasePoint base = hopf_base(s, o.cut);
  out << "index,value\n";
  for (std::size_t i = 1; i <= base.dim(); ++i) out << 'X' << i << ',' << format_number(base.x(i)) << '\n';
  out << "sum_sq," << format_number(base.norm_sq()) << '\n';
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  std::vector<double> values;
  values.reserve(o.count);
  const bool per_sample = o.bins == 0;
  if (per_sample) out << (o.qubits == 3 ? "index,e_avg,e_cut1,e_cut2,e_cut3\n" : "index,e_avg\n");
  for (std::uint64_t i = 0; i < o.count; ++i) {
    const PureState s = random_state(o.qubits, trial_seed(o.seed, i));
    if (o.qubits == 2) {
      const double e = e_from_base(hopf_base(s));
      values.push_back(e);
      if (per_sample) out << i << ',' << format_number(e) << '\n';
      continue;
    }
    const double e1 = e_hopf(s, 1), e2 = e_hopf(s, 2), e3 = e_hopf(s, 3);
    const double avg = (e1 + e2 + e3) / 3.0;
    values.push_back(avg);
    if (per_sample) {
      out << i << ',' << format_number(avg) << ',' << format_number(e1) << ',' << format_number(e2) << ','
          << format_number(e3) << '\n';
    }
  }
  if (per_sample) return kExitOk;
  std::vector<std::uint64_t> counts(o.bins, 0);
  for (double v : values) {
    const auto k = static_cast<std::size_t>(std::clamp(v, 0.0, 1.0) * static_cast<double>(o.bins));
    ++counts[std::min(k, o.bins - 1)];
  }
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t k = 0; k < o.bins; ++k) {
    const double width = 1.0 / static_cast<double>(o.bins);
    out << format_number(static_cast<double>(k) * width) << ',' << format_number(static_cast<double>(k + 1) * width)
        << ',' << counts[k] << '\n';
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  CheckConfig config;
  config.trials = o.trials;
  config.seed = o.seed;
  const CheckSummary summary = run_checks(config);
  for (const SuiteResult& s : summary.suites) {
    out << s.name << ": " << s.passed << '/' << s.total << (s.ok() ? "" : " FAILED") << '\n';
  }
  if (const SuiteResult* f = summary.first_failure()) {
    out << "counterexample [" << f->name << "]: " << *f->counterexample << '\n';
    return kExitInvariant;
  }
  out << "all " << summary.suites.size() << " suites passed\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-fibration geometry of 1-, 2- and 3-qubit pure states", "hopfq"};
  app.require_subcommand(1);
  Options o;

  const auto add_state = [&o](CLI::App* cmd) {
    cmd->add_option("state", o.state, "re,im pairs, ghz, w, bell00, |bits>, or @file")->required();
    cmd->add_flag("--renormalize", o.renormalize, "rescale an unnormalized input instead of rejecting it");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis document for one state");
  add_state(analyze);
  analyze->add_option("--tol", o.tol, "separability tolerance")->check(CLI::PositiveNumber);
  analyze->add_flag("--csv", o.csv, "accepted for symmetry; the analysis is always a document");

  CLI::App* coords = app.add_subcommand("coords", "Hopf base coordinates of one cut");
  add_state(coords);
  coords->add_option("--cut", o.cut, "qubit placed in the first-qubit role")->check(CLI::Range(1, 3));
  coords->add_flag("--csv", o.csv, "index,value table instead of a document");

  CLI::App* sample = app.add_subcommand("sample", "entanglement of Haar-random states as CSV");
  sample->add_option("n", o.qubits, "qubit count")->required()->check(CLI::Range(2, 3));
  sample->add_option("count", o.count, "number of samples")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "campaign seed");
  sample->add_option("--histogram", o.bins, "bin e_avg over [0, 1] instead of listing samples")
      ->check(CLI::PositiveNumber);
  sample->add_flag("--csv", o.csv, "accepted for symmetry; output is always CSV");

  CLI::App* check = app.add_subcommand("check", "randomized invariant suites");
  check->add_option("--trials", o.trials, "trials per suite")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "campaign seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (coords->parsed()) return cmd_coords(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    return cmd_check(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  }
}

}  // namespace hopfq

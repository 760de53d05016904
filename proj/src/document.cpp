#include "hopfq/document.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "hopfq/errors.hpp"

namespace hopfq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view token, double& out) {
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && !token.empty();
}

FieldValue parse_value(std::string_view text) {
  std::vector<double> numbers;
  std::istringstream in{std::string(text)};
  for (std::string token; in >> token;) {
    double x = 0.0;
    if (!parse_number(token, x)) return std::string(text);
    numbers.push_back(x);
  }
  if (numbers.empty()) return std::string(text);
  return numbers;
}

std::vector<double> coords_of(const BasePoint& p) { return {p.coords().begin(), p.coords().end()}; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

void add_density(Section& s, const DensityMatrix2& rho) {
  std::vector<double> re, im;
  for (const Complex& z : rho.m) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  s.add("density.re", std::move(re));
  s.add("density.im", std::move(im));
  s.add("density.det", rho.det());
}

void add_h1(Section& s, const ExtendedValue& h) {
  if (h.is_infinite()) {
    s.add("h1", std::string("infinity"));
  } else {
    const auto c = h.value().coeffs();
    s.add("h1", std::vector<double>(c.begin(), c.end()));
  }
}

void add_chain(Document& doc, const PureState& state, double tol) {
  const ChainReport chain = iterated_analysis(state, tol);
  Section& s = doc.section("chain");
  s.add("stages", static_cast<double>(chain.stages.size()));
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    const ChainStage& st = chain.stages[i];
    const std::string p = "stage" + std::to_string(i + 1) + ".";
    s.add(p + "qubits", static_cast<double>(st.qubits));
    s.add(p + "base", coords_of(st.base));
    s.add(p + "e", st.e);
    s.add(p + "continued", bool_text(st.continued));
  }
  s.add("bloch_points", static_cast<double>(chain.bloch_points.size()));
  for (std::size_t i = 0; i < chain.bloch_points.size(); ++i) {
    s.add("bloch" + std::to_string(i + 1), coords_of(chain.bloch_points[i]));
  }
  s.add("fully_separable", bool_text(chain.fully_separable));
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_number(double x) {
  double out = 0.0;
  parse_number(format_number(x), out);
  return out;
}

Section& Section::add(std::string key, std::vector<double> numbers) {
  for (double& x : numbers) x = round_number(x);
  fields.push_back({std::move(key), std::move(numbers)});
  return *this;
}

Section& Section::add(std::string key, double number) { return add(std::move(key), std::vector<double>{number}); }

Section& Section::add(std::string key, std::string text) {
  fields.push_back({std::move(key), std::move(text)});
  return *this;
}

const Field* Section::find(std::string_view key) const {
  const auto it = std::find_if(fields.begin(), fields.end(), [&](const Field& f) { return f.key == key; });
  return it == fields.end() ? nullptr : &*it;
}

Section& Document::section(std::string name) {
  sections.push_back({std::move(name), {}});
  return sections.back();
}

const Section* Document::find(std::string_view name) const {
  const auto it = std::find_if(sections.begin(), sections.end(), [&](const Section& s) { return s.name == name; });
  return it == sections.end() ? nullptr : &*it;
}

const std::vector<double>& Document::numbers(std::string_view section, std::string_view key) const {
  const Section* s = find(section);
  const Field* f = s ? s->find(key) : nullptr;
  if (!f || !std::holds_alternative<std::vector<double>>(f->value)) {
    throw ParseError("no numeric field " + std::string(section) + "." + std::string(key));
  }
  return std::get<std::vector<double>>(f->value);
}

const std::string& Document::text(std::string_view section, std::string_view key) const {
  const Section* s = find(section);
  const Field* f = s ? s->find(key) : nullptr;
  if (!f || !std::holds_alternative<std::string>(f->value)) {
    throw ParseError("no text field " + std::string(section) + "." + std::string(key));
  }
  return std::get<std::string>(f->value);
}

std::string serialize(const Document& doc) {
  std::ostringstream out;
  out << "# " << doc.title << '\n';
  for (const Section& s : doc.sections) {
    out << '[' << s.name << "]\n";
    for (const Field& f : s.fields) {
      out << f.key << " =";
      if (const auto* nums = std::get_if<std::vector<double>>(&f.value)) {
        for (double x : *nums) out << ' ' << format_number(x);
      } else {
        out << ' ' << std::get<std::string>(f.value);
      }
      out << '\n';
    }
  }
  return out.str();
}

Document parse_document(std::string_view text) {
  Document doc;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("# ")) throw ParseError("document must start with '# <title>'");
  doc.title = line.substr(2);
  for (int lineno = 2; std::getline(in, line); ++lineno) {
    const std::string_view l = trim(line);
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
      doc.section(std::string(l.substr(1, l.size() - 2)));
      continue;
    }
    const auto eq = l.find(" =");
    if (eq == std::string_view::npos || doc.sections.empty()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value' inside a section");
    }
    doc.sections.back().fields.push_back(
        {std::string(trim(l.substr(0, eq))), parse_value(trim(l.substr(eq + 2)))});
  }
  return doc;
}

Document analysis_document(const PureState& state, double tol) {
  Document doc;
  doc.title = "hopfq analysis";
  const int n = state.qubits();

  Section& input = doc.section("input");
  input.add("qubits", static_cast<double>(n));
  std::vector<double> re, im;
  for (const Complex& a : state.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  input.add("amplitudes.re", std::move(re));
  input.add("amplitudes.im", std::move(im));
  input.add("norm_sq", state.norm_sq());

  for (int cut = 1; cut <= std::max(n, 1); ++cut) {
    const PureState front = bring_to_front(state, cut);
    const BasePoint base = hopf_base(front);
    Section& s = doc.section("cut " + std::to_string(cut));
    s.add("base", coords_of(base));
    s.add("base_norm_sq", base.norm_sq());
    add_h1(s, h1_value(front));
    add_density(s, n == 1 ? bloch_density(base) : partial_trace_keep(state, cut));
    if (n >= 2) s.add("e", e_from_base(base));
    if (n == 2) s.add("residual", separability_2qubit(front));
    if (n == 3) {
      const auto r = separability_conditions(state, cut);
      s.add("residuals", std::vector<double>(r.begin(), r.end()));
    }
  }

  if (n == 3) {
    const EntanglementReport rep = classify(state, tol);
    Section& s = doc.section("report");
    s.add("e_per_cut", std::vector<double>(rep.e_per_cut.begin(), rep.e_per_cut.end()));
    s.add("e_avg", rep.e_avg);
    s.add("minor_measure", rep.minor_measure);
    s.add("classification", rep.classification.to_string());
  } else if (n == 2) {
    Section& s = doc.section("report");
    s.add("e", e_from_base(hopf_base(state)));
    s.add("residual", separability_2qubit(state));
    s.add("classification", std::string(separability_2qubit(state) < tol ? "separable" : "entangled"));
  }
  if (n >= 2) add_chain(doc, state, tol);
  return doc;
}

Document coordinates_document(const PureState& state, int cut) {
  Document doc;
  doc.title = "hopfq coordinates";
  const BasePoint base = hopf_base(state, cut);
  Section& s = doc.section("coords");
  s.add("qubits", static_cast<double>(state.qubits()));
  s.add("cut", static_cast<double>(cut));
  for (std::size_t i = 1; i <= base.dim(); ++i) s.add("X" + std::to_string(i), base.x(i));
  s.add("sum_sq", base.norm_sq());
  return doc;
}

}  // namespace hopfq

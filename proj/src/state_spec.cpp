#include "hopfq/state_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "hopfq/errors.hpp"

namespace hopfq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

double parse_real(std::string_view text, std::string_view token) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("bad number '" + std::string(text) + "' in amplitude '" + std::string(token) + "'");
  }
  return value;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    out += line.substr(0, line.find('#'));
    out += '\n';
  }
  return out;
}

std::vector<Complex> parse_inline(std::string_view spec) {
  const std::string_view body = trim(spec);
  if (body.empty()) throw ParseError("empty state spec");

  const std::string name = lower(body);
  const auto copy = [](const PureState& s) { return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()); };
  if (name == "ghz") return copy(PureState::ghz());
  if (name == "w") return copy(PureState::w());
  if (name == "bell00") return copy(PureState::bell00());

  if (body.front() == '|') {
    std::string_view bits = body.substr(1);
    if (bits.ends_with("⟩")) {
      bits.remove_suffix(std::string_view("⟩").size());
    } else if (bits.ends_with(">")) {
      bits.remove_suffix(1);
    } else {
      throw ParseError("unterminated basis label '" + std::string(body) + "'");
    }
    if (bits.empty() || bits.size() > 3 || bits.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError("basis label must be 1 to 3 binary digits: '" + std::string(body) + "'");
    }
    return copy(PureState::basis(bits));
  }

  std::vector<Complex> amps;
  std::istringstream in{std::string(body)};
  for (std::string token; in >> token;) {
    const auto comma = token.find(',');
    if (comma == std::string::npos) throw ParseError("amplitude '" + token + "' is not a re,im pair");
    const std::string_view t(token);
    amps.emplace_back(parse_real(t.substr(0, comma), t), parse_real(t.substr(comma + 1), t));
  }
  if (amps.size() != 2 && amps.size() != 4 && amps.size() != 8) {
    throw ParseError("expected 2, 4 or 8 amplitudes, got " + std::to_string(amps.size()));
  }
  return amps;
}

}  // namespace

std::vector<Complex> parse_state_spec(std::string_view spec) {
  const std::string_view body = trim(spec);
  if (!body.empty() && body.front() == '@') {
    const std::string path(trim(body.substr(1)));
    std::ifstream file(path);
    if (!file) throw ParseError("cannot read state file '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    const std::string contents = strip_comments(text.str());
    if (!trim(contents).empty() && trim(contents).front() == '@') throw ParseError("state files cannot reference other files");
    return parse_inline(contents);
  }
  return parse_inline(body);
}

PureState make_state(std::vector<Complex> amplitudes, bool renormalize, double tolerance) {
  if (renormalize) return PureState::normalized(std::move(amplitudes));
  return PureState(std::move(amplitudes), tolerance);
}

}  // namespace hopfq

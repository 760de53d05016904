#pragma once

// Plain-text report format used by the CLI:
//
//   # hopfq analysis
//   [input]
//   qubits = 3
//   amplitudes.re = 0.707106781187 0 0 0 0 0 0 0.707106781187
//   ...
//
// Numbers are written with 12 significant digits and stored already rounded,
// so parse_document(serialize(doc)) == doc exactly. A value is numeric when
// every space-separated token parses as a number; otherwise it is text.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfq/entanglement.hpp"
#include "hopfq/hopf_maps.hpp"
#include "hopfq/qubit_states.hpp"

namespace hopfq {

using FieldValue = std::variant<std::vector<double>, std::string>;

struct Field {
  std::string key;
  FieldValue value;
  friend bool operator==(const Field&, const Field&) = default;
};

struct Section {
  std::string name;
  std::vector<Field> fields;

  Section& add(std::string key, std::vector<double> numbers);
  Section& add(std::string key, double number);
  Section& add(std::string key, std::string text);
  // nullptr if absent.
  const Field* find(std::string_view key) const;

  friend bool operator==(const Section&, const Section&) = default;
};

struct Document {
  std::string title;
  std::vector<Section> sections;

  Section& section(std::string name);
  const Section* find(std::string_view name) const;
  // Numbers of section.key; throws ParseError if missing or textual.
  const std::vector<double>& numbers(std::string_view section, std::string_view key) const;
  const std::string& text(std::string_view section, std::string_view key) const;

  friend bool operator==(const Document&, const Document&) = default;
};

// 12 significant digits, negative zero printed as 0.
std::string format_number(double x);
// The double that format_number(x) parses back to.
double round_number(double x);

std::string serialize(const Document& doc);
// Throws ParseError.
Document parse_document(std::string_view text);

// Everything the library reports about one state.
Document analysis_document(const PureState& state, double tol = tol::kSeparability);

// Hopf base coordinates of one cut plus their squared sum.
Document coordinates_document(const PureState& state, int cut);

}  // namespace hopfq

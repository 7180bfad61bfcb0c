#pragma once

// JSON formats for inputs, corrections, reports and graph lists. Indices in
// files are 1-based; rationals are [numerator, denominator] (or an integer).

#include "pbw/complexes.hpp"
#include "pbw/kgraphs.hpp"
#include "pbw/pbw.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbw {

using json = nlohmann::json;

struct InputSpec {
  enum class Kind { poisson, lie };
  Kind kind = Kind::poisson;
  int dimension = 0;
  std::vector<std::string> variables;
  PoissonBivector poisson;        // always filled (linear one for lie input)
  std::optional<LieAlgebra> lie;  // lie input only
};

Rational parse_rational(const json &j, const std::string &where);
json rational_json(const Rational &q);

InputSpec parse_input(const json &j);
InputSpec parse_input_text(const std::string &text);
InputSpec load_input(const std::string &path);
json input_json(const InputSpec &in);

// Higher-order terms added to R_ij: h^order * sum c * word.
struct Corrections {
  int dimension = 0;
  int hbar_order = 0;
  std::map<std::pair<int, int>, std::map<int, std::map<Word, Rational>>> terms; // 0-based, i < j
  friend bool operator==(const Corrections &, const Corrections &) = default;
};

Corrections parse_corrections(const json &j);
Corrections load_corrections(const std::string &path);
json corrections_json(const Corrections &c);
Corrections corrections_from(const CorrectionResult &r, int m);
RelationSet apply_corrections(const RelationSet &r, const Corrections &c);

json element_json(const Element &e);
json relations_json(const RelationSet &r);
json report_json(const PBWReport &r);
json graph_json(const AdmissibleGraph &g);

std::string read_file(const std::string &path);

} // namespace pbw

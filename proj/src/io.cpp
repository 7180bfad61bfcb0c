#include "pbw/io.hpp"

#include "pbw/errors.hpp"

#include <fstream>
#include <sstream>

namespace pbw {

namespace {

const json &field(const json &j, const char *name, const std::string &where) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(where + ": missing field '" + name + "'");
  return j.at(name);
}

int int_field(const json &j, const char *name, const std::string &where) {
  const json &v = field(j, name, where);
  if (!v.is_number_integer())
    throw ParseError(where + "." + name + ": expected an integer");
  return v.get<int>();
}

int index_field(const json &j, const char *name, int n, const std::string &where) {
  const int v = int_field(j, name, where);
  if (v < 1 || v > n)
    throw ParseError(where + "." + name + ": index " + std::to_string(v) + " outside 1.." +
                     std::to_string(n));
  return v - 1;
}

std::string at(const std::string &where, const char *list, std::size_t i) {
  return where + "." + list + "[" + std::to_string(i) + "]";
}

} // namespace

Rational parse_rational(const json &j, const std::string &where) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    const long den = j[1].get<long>();
    if (den == 0)
      throw ParseError(where + ": zero denominator");
    Rational q(j[0].get<long>(), den);
    q.canonicalize();
    return q;
  }
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
    try {
      Rational q(mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()));
      if (sgn(q.get_den()) == 0)
        throw ParseError(where + ": zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument &) {
      throw ParseError(where + ": malformed big-integer rational");
    }
  }
  if (j.is_string()) {
    try {
      Rational q(j.get<std::string>());
      if (sgn(q.get_den()) == 0)
        throw ParseError(where + ": zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument &) {
      throw ParseError(where + ": malformed rational '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError(where + ": expected a rational: integer, [numerator, denominator] or \"p/q\"");
}

json rational_json(const Rational &q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
    return json::array({q.get_num().get_si(), q.get_den().get_si()});
  return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

InputSpec parse_input(const json &j) {
  const std::string where = "input";
  InputSpec in;
  const json &kind = field(j, "kind", where);
  if (kind == "poisson")
    in.kind = InputSpec::Kind::poisson;
  else if (kind == "lie")
    in.kind = InputSpec::Kind::lie;
  else
    throw ParseError(where + ".kind: expected \"poisson\" or \"lie\"");
  in.dimension = int_field(j, "dimension", where);
  const int n = in.dimension;
  if (n < 1)
    throw ParseError(where + ".dimension: must be positive");
  if (j.contains("variables")) {
    const json &vars = j.at("variables");
    if (!vars.is_array() || static_cast<int>(vars.size()) != n)
      throw ParseError(where + ".variables: expected " + std::to_string(n) + " names");
    for (const auto &v : vars) {
      if (!v.is_string())
        throw ParseError(where + ".variables: names must be strings");
      in.variables.push_back(v.get<std::string>());
    }
  } else {
    for (int i = 1; i <= n; ++i)
      in.variables.push_back("x" + std::to_string(i));
  }
  const json &entries = field(j, "entries", where);
  if (!entries.is_array())
    throw ParseError(where + ".entries: expected a list");

  const auto ev = even_variables(n);
  in.poisson = PoissonBivector(n);
  if (in.kind == InputSpec::Kind::lie) {
    LieAlgebra g(n);
    std::map<std::pair<int, int>, std::map<int, Rational>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string w = at(where, "entries", e);
      const int i = index_field(entries[e], "i", n, w);
      const int jj = index_field(entries[e], "j", n, w);
      const int k = index_field(entries[e], "k", n, w);
      if (i >= jj)
        throw ParseError(w + ": need i < j");
      const Rational v = parse_rational(field(entries[e], "value", w), w + ".value");
      seen[{i, jj}][k] += v;
    }
    for (const auto &[ij, row] : seen)
      for (const auto &[k, v] : row)
        g.set(ij.first, ij.second, k, v);
    in.poisson = g.poisson();
    in.lie = std::move(g);
    return in;
  }

  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string w = at(where, "entries", e);
    const int i = index_field(entries[e], "i", n, w);
    const int jj = index_field(entries[e], "j", n, w);
    if (i >= jj)
      throw ParseError(w + ": need i < j");
    const json &terms = field(entries[e], "terms", w);
    if (!terms.is_array())
      throw ParseError(w + ".terms: expected a list");
    SuperPoly p = in.poisson.entry(i, jj);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string wt = at(w, "terms", t);
      const Rational c = parse_rational(field(terms[t], "coefficient", wt), wt + ".coefficient");
      const json &mono = field(terms[t], "monomial", wt);
      if (!mono.is_array())
        throw ParseError(wt + ".monomial: expected a list of variable indices");
      Monomial m(n, 0);
      for (const auto &v : mono) {
        if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > n)
          throw ParseError(wt + ".monomial: index outside 1.." + std::to_string(n));
        ++m[v.get<int>() - 1];
      }
      p.add(m, c);
    }
    if (p.is_zero())
      in.poisson.entries.erase({i, jj});
    else
      in.poisson.set(i, jj, p);
  }
  return in;
}

InputSpec parse_input_text(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

std::string read_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

InputSpec load_input(const std::string &path) { return parse_input_text(read_file(path)); }

json input_json(const InputSpec &in) {
  json j;
  j["kind"] = in.kind == InputSpec::Kind::lie ? "lie" : "poisson";
  j["dimension"] = in.dimension;
  j["variables"] = in.variables;
  json entries = json::array();
  if (in.lie) {
    for (const auto &[ij, row] : in.lie->constants)
      for (const auto &[k, v] : row)
        entries.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"k", k + 1},
                           {"value", rational_json(v)}});
  } else {
    for (const auto &[ij, p] : in.poisson.entries) {
      json terms = json::array();
      for (const auto &[m, c] : p.terms()) {
        json mono = json::array();
        for (int v = 0; v < in.dimension; ++v)
          for (int e = 0; e < m[v]; ++e)
            mono.push_back(v + 1);
        terms.push_back({{"coefficient", rational_json(c)}, {"monomial", mono}});
      }
      entries.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"terms", terms}});
    }
  }
  j["entries"] = entries;
  return j;
}

Corrections parse_corrections(const json &j) {
  const std::string where = "corrections";
  if (!j.is_object() || j.value("format", "") != "pbw-corrections")
    throw ParseError(where + ": expected format \"pbw-corrections\"");
  Corrections c;
  c.dimension = int_field(j, "dimension", where);
  c.hbar_order = int_field(j, "hbar_order", where);
  const int n = c.dimension;
  const json &list = field(j, "corrections", where);
  if (!list.is_array())
    throw ParseError(where + ".corrections: expected a list");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string w = at(where, "corrections", e);
    const int i = index_field(list[e], "i", n, w);
    const int jj = index_field(list[e], "j", n, w);
    if (i >= jj)
      throw ParseError(w + ": need i < j");
    const int order = int_field(list[e], "order", w);
    if (order < 1 || order > c.hbar_order)
      throw ParseError(w + ".order: outside 1..hbar_order");
    const json &terms = field(list[e], "terms", w);
    if (!terms.is_array())
      throw ParseError(w + ".terms: expected a list");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string wt = at(w, "terms", t);
      const Rational q = parse_rational(field(terms[t], "coefficient", wt), wt + ".coefficient");
      const json &word = field(terms[t], "word", wt);
      if (!word.is_array())
        throw ParseError(wt + ".word: expected a list of variable indices");
      Word wd;
      for (const auto &v : word) {
        if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > n)
          throw ParseError(wt + ".word: index outside 1.." + std::to_string(n));
        wd.push_back(v.get<int>() - 1);
      }
      auto &slot = c.terms[{i, jj}][order][wd];
      slot += q;
      if (sgn(slot) == 0)
        c.terms[{i, jj}][order].erase(wd);
    }
  }
  return c;
}

Corrections load_corrections(const std::string &path) {
  try {
    return parse_corrections(json::parse(read_file(path)));
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON in corrections: ") + e.what());
  }
}

json corrections_json(const Corrections &c) {
  json list = json::array();
  for (const auto &[ij, orders] : c.terms)
    for (const auto &[order, words] : orders) {
      if (words.empty())
        continue;
      json terms = json::array();
      for (const auto &[w, q] : words) {
        json word = json::array();
        for (int v : w)
          word.push_back(v + 1);
        terms.push_back({{"coefficient", rational_json(q)}, {"word", word}});
      }
      list.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"order", order},
                      {"terms", terms}});
    }
  return {{"format", "pbw-corrections"},
          {"dimension", c.dimension},
          {"hbar_order", c.hbar_order},
          {"corrections", list}};
}

Corrections corrections_from(const CorrectionResult &r, int m) {
  Corrections c;
  c.dimension = r.relations.n;
  c.hbar_order = std::max(r.relations.order, m);
  for (const auto &[ij, om] : r.omega)
    for (const auto &[w, s] : om.terms())
      c.terms[ij][m][w] += s.coefficient(0);
  return c;
}

RelationSet apply_corrections(const RelationSet &r, const Corrections &c) {
  if (c.dimension != r.n)
    throw ParseError("corrections: dimension " + std::to_string(c.dimension) +
                     " does not match the input dimension " + std::to_string(r.n));
  RelationSet out = r.with_order(std::max(r.order, c.hbar_order));
  for (const auto &[ij, orders] : c.terms) {
    Element rel = out.relation(ij.first, ij.second);
    for (const auto &[order, words] : orders)
      for (const auto &[w, q] : words)
        rel.add(w, Scalar::hbar_power(order, out.order, q));
    out.set(ij.first, ij.second, rel);
  }
  return out;
}

json element_json(const Element &e) {
  json terms = json::array();
  for (const auto &[w, s] : e.terms()) {
    json word = json::array();
    for (int l : w)
      word.push_back(l + 1);
    for (int k = 0; k <= s.order(); ++k)
      if (sgn(s[k]) != 0)
        terms.push_back({{"word", word}, {"hbar", k}, {"coefficient", rational_json(s[k])}});
  }
  return {{"text", e.str()}, {"terms", terms}};
}

json relations_json(const RelationSet &r) {
  json list = json::array();
  for (const auto &[ij, e] : r.rhs)
    list.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"rhs", element_json(e)}});
  return {{"dimension", r.n}, {"hbar_order", r.order}, {"relations", list}};
}

json report_json(const PBWReport &r) {
  json graded = json::array();
  for (const auto &g : r.graded)
    graded.push_back({{"degree", g.degree},
                      {"hbar", g.hbar},
                      {"dimension", g.dimension},
                      {"expected", g.expected}});
  json defects = json::array();
  for (const auto &d : r.defects)
    defects.push_back({{"overlap", {d.k + 1, d.j + 1, d.i + 1}},
                       {"first_order", d.first_order},
                       {"defect", element_json(d.defect)}});
  json j{{"verdict", r.verdict()},
         {"N", r.N},
         {"M", r.M},
         {"dimension", r.n},
         {"approximate", r.approximate},
         {"dims", r.dims},
         {"expected", r.expected},
         {"graded", graded},
         {"defects", defects}};
  j["hbar_weight"] = r.hbar_weight ? json(*r.hbar_weight) : json(nullptr);
  return j;
}

json graph_json(const AdmissibleGraph &g) {
  json vertices = json::array();
  for (int v = 0; v < g.m + 2; ++v)
    vertices.push_back({{"id", v}, {"kind", v < g.m ? "aerial" : "ground"}});
  json edges = json::array();
  for (const auto &[s, t] : g.edges)
    edges.push_back({s, t});
  return {{"m", g.m}, {"mode", to_string(g.mode)}, {"vertices", vertices},
          {"edges", edges}, {"key", g.key()}};
}

} // namespace pbw

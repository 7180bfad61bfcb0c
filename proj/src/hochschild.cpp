#include "pbw/hochschild.hpp"

#include "pbw/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace pbw {

TruncatedAlgebra::TruncatedAlgebra(std::vector<std::string> names,
                                   std::vector<std::optional<SparseVec>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  if (table_.size() != names_.size() * names_.size())
    throw std::invalid_argument("TruncatedAlgebra: product table has the wrong size");
}

std::shared_ptr<const TruncatedAlgebra> TruncatedAlgebra::polynomial(int n, int max_degree) {
  const CoalgebraSpec spec{CoalgebraKind::symmetric, false, n};
  const auto keys = basis(spec, max_degree);
  std::map<BasisKey, int> index;
  std::vector<std::string> names;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) {
    index.emplace(keys[i], i);
    names.push_back(keys[i].empty() ? "1" : key_str(spec, keys[i]));
  }
  std::vector<std::optional<SparseVec>> table;
  for (const auto &a : keys)
    for (const auto &b : keys) {
      BasisKey k = a;
      k.insert(k.end(), b.begin(), b.end());
      std::sort(k.begin(), k.end());
      if (static_cast<int>(k.size()) > max_degree)
        table.emplace_back(std::nullopt);
      else
        table.emplace_back(SparseVec{{index.at(k), Rational(1)}});
    }
  auto alg = std::make_shared<TruncatedAlgebra>(std::move(names), std::move(table));
  alg->n_ = n;
  alg->keys_ = keys;
  return alg;
}

const std::optional<SparseVec> &TruncatedAlgebra::product(int i, int j) const {
  return table_.at(static_cast<std::size_t>(i) * dim() + j);
}

SparseVec TruncatedAlgebra::multiply(const SparseVec &a, const SparseVec &b) const {
  SparseVec r;
  for (const auto &[i, ca] : a)
    for (const auto &[j, cb] : b) {
      const auto &p = product(i, j);
      if (!p)
        throw DegreeOverflow("product " + name(i) + " * " + name(j) + " leaves the truncation",
                             {i, j});
      axpy(r, ca * cb, *p);
    }
  return r;
}

std::shared_ptr<const TruncatedAlgebra> TruncatedAlgebra::with_product(int i, int j,
                                                                      SparseVec v) const {
  auto copy = std::make_shared<TruncatedAlgebra>(*this);
  copy->table_.at(static_cast<std::size_t>(i) * dim() + j) = std::move(v);
  return copy;
}

bool TruncatedAlgebra::is_associative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) {
        try {
          SparseVec a{{i, Rational(1)}}, b{{j, Rational(1)}}, c{{k, Rational(1)}};
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            return false;
        } catch (const DegreeOverflow &) {
        }
      }
  return true;
}

std::optional<int> TruncatedAlgebra::index_of(const BasisKey &monomial) const {
  BasisKey k = monomial;
  std::sort(k.begin(), k.end());
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k,
                             [](const BasisKey &a, const BasisKey &b) {
                               if (a.size() != b.size())
                                 return a.size() < b.size();
                               return a < b;
                             });
  if (it != keys_.end() && *it == k)
    return static_cast<int>(it - keys_.begin());
  for (int i = 0; i < static_cast<int>(keys_.size()); ++i)
    if (keys_[i] == k)
      return i;
  return std::nullopt;
}

SparseVec TruncatedAlgebra::derivative(int var, int i) const {
  if (keys_.empty())
    throw std::logic_error("TruncatedAlgebra::derivative: not a polynomial algebra");
  BasisKey k = keys_.at(i);
  const auto c = std::count(k.begin(), k.end(), var);
  if (c == 0)
    return {};
  k.erase(std::find(k.begin(), k.end(), var));
  return SparseVec{{*index_of(k), Rational(static_cast<long>(c))}};
}

std::string TruncatedAlgebra::str(const SparseVec &v) const {
  if (v.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[i, c] : v) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.get_str() << ")*" << name(i);
  }
  return os.str();
}

struct Cochain::Cache {
  std::mutex mutex;
  std::map<std::vector<int>, SparseVec> values;
  std::map<std::vector<int>, std::pair<std::string, std::vector<int>>> overflow;
};

Cochain::Cochain(AlgebraPtr alg, int arity, Rule rule)
    : alg_(std::move(alg)), arity_(arity), rule_(std::move(rule)),
      cache_(std::make_shared<Cache>()) {
  if (arity_ < 0)
    throw std::invalid_argument("Cochain: negative arity");
}

SparseVec Cochain::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw std::invalid_argument("Cochain: tuple length differs from arity");
  std::vector<int> key(tuple.begin(), tuple.end());
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->values.find(key); it != cache_->values.end())
      return it->second;
    if (auto it = cache_->overflow.find(key); it != cache_->overflow.end())
      throw DegreeOverflow(it->second.first, it->second.second);
  }
  try {
    SparseVec v = rule_(tuple);
    std::lock_guard lock(cache_->mutex);
    cache_->values.emplace(std::move(key), v);
    return v;
  } catch (const DegreeOverflow &e) {
    std::lock_guard lock(cache_->mutex);
    cache_->overflow.emplace(std::move(key), std::make_pair(std::string(e.what()), e.tuple()));
    throw;
  }
}

SparseVec Cochain::eval(const std::vector<SparseVec> &args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw std::invalid_argument("Cochain: argument count differs from arity");
  SparseVec out;
  std::vector<int> tuple(arity_);
  std::function<void(int, Rational)> rec = [&](int pos, Rational c) {
    if (pos == arity_) {
      axpy(out, c, (*this)(tuple));
      return;
    }
    for (const auto &[i, ci] : args[pos]) {
      tuple[pos] = i;
      rec(pos + 1, c * ci);
    }
  };
  rec(0, Rational(1));
  return out;
}

Cochain Cochain::random(AlgebraPtr alg, int arity, unsigned seed, int range, double density) {
  auto table = std::make_shared<std::map<std::vector<int>, SparseVec>>();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-range, range);
  std::bernoulli_distribution keep(density);
  for (const auto &t : basis_tuples(alg->dim(), arity)) {
    SparseVec v;
    for (int i = 0; i < alg->dim(); ++i)
      if (keep(rng)) {
        int c = coef(rng);
        if (c != 0)
          v[i] = c;
      }
    (*table)[t] = std::move(v);
  }
  return Cochain(std::move(alg), arity, [table](std::span<const int> t) {
    return table->at(std::vector<int>(t.begin(), t.end()));
  });
}

std::vector<std::vector<int>> basis_tuples(int dim, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(length, 0);
  if (length == 0)
    return {{}};
  if (dim == 0)
    return {};
  while (true) {
    out.push_back(t);
    int p = length - 1;
    while (p >= 0 && ++t[p] == dim)
      t[p--] = 0;
    if (p < 0)
      break;
  }
  return out;
}

Cochain identity_cochain(const AlgebraPtr &alg) {
  return Cochain(alg, 1, [](std::span<const int> t) { return SparseVec{{t[0], Rational(1)}}; });
}

Cochain product_cochain(const AlgebraPtr &alg) {
  return Cochain(alg, 2, [alg](std::span<const int> t) {
    return alg->multiply(SparseVec{{t[0], Rational(1)}}, SparseVec{{t[1], Rational(1)}});
  });
}

namespace {

SparseVec unit_vec(int i) { return SparseVec{{i, Rational(1)}}; }

} // namespace

Cochain hochschild_differential(const Cochain &psi) {
  const int k = psi.arity();
  auto alg = psi.algebra();
  return Cochain(alg, k + 1, [psi, alg, k](std::span<const int> t) {
    SparseVec out;
    std::vector<SparseVec> args;
    // a_0 psi(a_1..a_k)
    for (int i = 1; i <= k; ++i)
      args.push_back(unit_vec(t[i]));
    axpy(out, 1, alg->multiply(unit_vec(t[0]), psi.eval(args)));
    for (int i = 0; i < k; ++i) {
      args.clear();
      for (int j = 0; j < i; ++j)
        args.push_back(unit_vec(t[j]));
      args.push_back(alg->multiply(unit_vec(t[i]), unit_vec(t[i + 1])));
      for (int j = i + 2; j <= k; ++j)
        args.push_back(unit_vec(t[j]));
      axpy(out, (i + 1) % 2 == 0 ? 1 : -1, psi.eval(args));
    }
    args.clear();
    for (int i = 0; i < k; ++i)
      args.push_back(unit_vec(t[i]));
    axpy(out, (k + 1) % 2 == 0 ? 1 : -1, alg->multiply(psi.eval(args), unit_vec(t[k])));
    return out;
  });
}

Cochain gerstenhaber_circle(const Cochain &a, const Cochain &b) {
  if (a.algebra() != b.algebra())
    throw ContextError("gerstenhaber_circle: cochains over different algebras");
  const int k = a.arity() - 1, l = b.arity() - 1;
  const int arity = k + l + 1;
  if (arity < 0)
    return Cochain(a.algebra(), 0, [](std::span<const int>) { return SparseVec{}; });
  return Cochain(a.algebra(), arity, [a, b, k, l](std::span<const int> t) {
    SparseVec out;
    for (int i = 0; i <= k; ++i) {
      std::vector<SparseVec> args;
      for (int j = 0; j < i; ++j)
        args.push_back(unit_vec(t[j]));
      args.push_back(b(t.subspan(i, l + 1)));
      for (int j = i + l + 1; j < static_cast<int>(t.size()); ++j)
        args.push_back(unit_vec(t[j]));
      const bool odd = ((i * l) % 2) != 0;
      axpy(out, odd ? -1 : 1, a.eval(args));
    }
    return out;
  });
}

Cochain operator+(const Cochain &a, const Cochain &b) {
  if (a.algebra() != b.algebra() || a.arity() != b.arity())
    throw ContextError("Cochain sum: incompatible operands");
  return Cochain(a.algebra(), a.arity(), [a, b](std::span<const int> t) {
    SparseVec v = a(t);
    axpy(v, 1, b(t));
    return v;
  });
}

Cochain scaled(const Cochain &a, const Rational &r) {
  return Cochain(a.algebra(), a.arity(), [a, r](std::span<const int> t) {
    SparseVec v;
    axpy(v, r, a(t));
    return v;
  });
}

Cochain operator-(const Cochain &a, const Cochain &b) { return a + scaled(b, -1); }

Cochain gerstenhaber_bracket(const Cochain &a, const Cochain &b) {
  const int k = a.arity() - 1, l = b.arity() - 1;
  const bool odd = ((k * l) % 2) != 0;
  Cochain ab = gerstenhaber_circle(a, b);
  Cochain ba = gerstenhaber_circle(b, a);
  return odd ? ab + ba : ab - ba;
}

std::optional<std::vector<int>> first_difference(const Cochain &a, const Cochain &b) {
  if (a.arity() != b.arity())
    throw ContextError("first_difference: arities differ");
  for (const auto &t : basis_tuples(a.algebra()->dim(), a.arity())) {
    try {
      if (a(t) != b(t))
        return t;
    } catch (const DegreeOverflow &) {
    }
  }
  return std::nullopt;
}

bool is_zero_on_range(const Cochain &a) {
  Cochain zero(a.algebra(), a.arity(), [](std::span<const int>) { return SparseVec{}; });
  return !first_difference(a, zero);
}

namespace {

int permutation_sign(const std::vector<int> &p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        s = -s;
  return s;
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

} // namespace

Cochain hkr(const Polyvector &gamma, const AlgebraPtr &alg) {
  if (gamma.space() != PolyvectorSpace::dual)
    throw ContextError("hkr: expects a polyvector on V");
  if (alg->variables() != gamma.dim())
    throw ContextError("hkr: algebra and polyvector dimensions differ");
  int k = 0;
  if (!gamma.is_zero()) {
    auto a = gamma.arity();
    if (!a)
      throw GradingError("hkr: polyvector is not of a single arity");
    k = *a;
  }
  auto terms = std::make_shared<std::vector<Polyvector::Term>>(gamma.terms());
  const Rational norm = 1 / factorial(k);
  return Cochain(alg, k, [alg, terms, norm, k](std::span<const int> t) {
    SparseVec out;
    for (const auto &term : *terms) {
      auto coeff_idx = alg->index_of(term.coords);
      if (!coeff_idx)
        throw DegreeOverflow("hkr: coefficient leaves the truncation", term.coords);
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        SparseVec v{{*coeff_idx, term.coefficient * permutation_sign(perm)}};
        for (int s = 0; s < k && !v.empty(); ++s)
          v = alg->multiply(v, alg->derivative(term.directions[perm[s]], t[s]));
        axpy(out, norm, v);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  });
}

Cochain antisymmetrize(const Cochain &c) {
  const int k = c.arity();
  return Cochain(c.algebra(), k, [c, k](std::span<const int> t) {
    SparseVec out;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> u(k);
      for (int s = 0; s < k; ++s)
        u[s] = t[perm[s]];
      axpy(out, permutation_sign(perm), c(u));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  });
}

SymmetricCobarPair::SymmetricCobarPair(int n, int max_weight)
    : full({CoalgebraKind::symmetric, false, n}, max_weight, SignRule::positional),
      reduced({CoalgebraKind::symmetric, true, n}, max_weight, SignRule::positional) {}

CobarCochain random_cobar_cochain(int n, int max_weight, int k, unsigned seed) {
  const auto keys = basis({CoalgebraKind::symmetric, false, n}, max_weight);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(keys.size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> count(0, 3);
  CobarCochain psi;
  psi.k = k;
  for (const auto &key : keys) {
    CoTensor t;
    const int terms = key.empty() ? 1 + count(rng) : count(rng);
    for (int s = 0; s < terms; ++s) {
      std::vector<BasisKey> w;
      for (int j = 0; j < k; ++j)
        w.push_back(keys[pick(rng)]);
      add_term(t, w, coef(rng));
    }
    psi.values[key] = std::move(t);
  }
  return psi;
}

namespace {

Element cotensor_element(const CobarComplex &c, const CoTensor &t) {
  Element e(c.context(), c.hbar_order());
  for (const auto &[w, q] : t) {
    Word word;
    for (const auto &k : w)
      word.push_back(c.letter(k));
    e.add(word, q);
  }
  return e;
}

// p^{(x) k}: drop words containing the unit letter and re-index.
Element project(const SymmetricCobarPair &c, const Element &e) {
  const Context &from = *c.full.context();
  Element out(c.reduced.context(), c.reduced.hbar_order());
  for (const auto &[w, q] : e.terms()) {
    Word nw;
    bool unit = false;
    for (int l : w) {
      if (from[l].key.empty()) {
        unit = true;
        break;
      }
      nw.push_back(c.reduced.letter(from[l].key));
    }
    if (!unit)
      out.add(nw, q);
  }
  return out;
}

Derivation full_derivation(const SymmetricCobarPair &c, const CobarCochain &psi) {
  Derivation d;
  d.degree = psi.k - 1;
  d.rule = SignRule::positional;
  for (const auto &[key, t] : psi.values) {
    auto id = c.full.context()->find_key(key);
    if (!id)
      throw ContextError("phi1: cochain value on a key outside S(W)_{<=B}");
    Element v = cotensor_element(c.full, t);
    for (const auto &[w, q] : v.terms())
      if (static_cast<int>(w.size()) != psi.k)
        throw GradingError("phi1: cochain value of the wrong tensor length");
    if (!v.is_zero())
      d.values.emplace(*id, std::move(v));
  }
  return d;
}

} // namespace

Phi1Result phi1(const SymmetricCobarPair &c, const CobarCochain &psi) {
  Derivation full = full_derivation(c, psi);
  Phi1Result r;
  r.derivation.degree = psi.k - 1;
  r.derivation.rule = SignRule::positional;
  const Context &red = *c.reduced.context();
  for (int s = 0; s < red.size(); ++s) {
    const int f = c.full.letter(red[s].key);
    auto it = full.values.find(f);
    if (it == full.values.end())
      continue;
    Element v = project(c, it->second);
    if (!v.is_zero())
      r.derivation.values.emplace(s, std::move(v));
  }
  return r;
}

Phi1Defect phi1_defect(const SymmetricCobarPair &c, const CobarCochain &psi) {
  const Derivation D = full_derivation(c, psi);
  const Derivation P = phi1(c, psi).derivation;
  const Rational comm = (psi.k - 1) % 2 == 0 ? 1 : -1; // (-1)^{|delta||D|}

  Phi1Defect res{Element(c.reduced.context(), c.reduced.hbar_order()), 1, 1, {}};
  if (auto it = D.values.find(c.full.letter({})); it != D.values.end())
    res.unit_image = project(c, it->second);
  const Element &a = res.unit_image;
  bool signs_fixed = a.is_zero();

  const Context &red = *c.reduced.context();
  for (int s = 0; s < red.size(); ++s) {
    Element sf = c.full.letter_element(red[s].key);
    Element lhs = project(c, c.full.undeformed(D.apply(sf)) -
                                 D.apply(c.full.undeformed(sf)).scaled(comm));
    Element sr = c.reduced.word({s});
    Element rhs = c.reduced.undeformed(P.apply(sr)) - P.apply(c.reduced.undeformed(sr)).scaled(comm);
    Element defect = lhs - rhs;

    const Element as = a * sr, sa = sr * a;
    auto matches = [&](int l, int r) {
      return defect == as.scaled(Rational(l)) + sa.scaled(Rational(r));
    };
    if (!signs_fixed) {
      bool found = false;
      for (int l : {1, -1})
        for (int r : {1, -1})
          if (!found && matches(l, r)) {
            res.sign_left = l;
            res.sign_right = r;
            found = true;
          }
      if (!found)
        throw ConventionError("phi1_defect: defect on " + red[s].symbol +
                              " is not an inner derivation of the expected form: " +
                              defect.str());
      signs_fixed = true;
    } else if (!matches(res.sign_left, res.sign_right)) {
      throw ConventionError("phi1_defect: inconsistent sign on " + red[s].symbol + ": " +
                            defect.str());
    }
    res.defect.emplace(s, std::move(defect));
  }
  return res;
}

} // namespace pbw

#include "pbw/tensor.hpp"

#include "pbw/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pbw {

Context::Context(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (int i = 0; i < size(); ++i) {
    if (!by_symbol_.emplace(gens_[i].symbol, i).second)
      throw ContextError("duplicate generator symbol '" + gens_[i].symbol + "'");
    by_key_.emplace(gens_[i].key, i);
  }
}

std::optional<int> Context::find(const std::string &symbol) const {
  auto it = by_symbol_.find(symbol);
  if (it == by_symbol_.end())
    return std::nullopt;
  return it->second;
}

std::optional<int> Context::find_key(const std::vector<int> &key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end())
    return std::nullopt;
  return it->second;
}

int Context::id_of_key(const std::vector<int> &key) const {
  auto id = find_key(key);
  if (!id) {
    std::string k;
    for (int i : key)
      k += std::to_string(i + 1);
    throw ContextError("no generator with key {" + k + "}");
  }
  return *id;
}

std::shared_ptr<const Context> Context::coordinates(int n, const std::string &prefix) {
  std::vector<Generator> g;
  for (int i = 0; i < n; ++i)
    g.push_back({prefix + std::to_string(i + 1), 0, {i}});
  return std::make_shared<const Context>(std::move(g));
}

int word_degree(const Context &ctx, const Word &w) {
  int d = 0;
  for (int l : w)
    d += ctx[l].degree;
  return d;
}

Element::Element(ContextPtr ctx, int order) : ctx_(std::move(ctx)), order_(order) {
  if (!ctx_)
    throw ContextError("Element: null context");
  if (order < 0)
    throw ContextError("Element: negative truncation order");
}

Element Element::unit(ContextPtr ctx, int order) {
  Element e(std::move(ctx), order);
  e.add(Word{}, Scalar(1, order));
  return e;
}

Element Element::letter(ContextPtr ctx, int id, int order) {
  Element e(std::move(ctx), order);
  e.add(Word{id}, Scalar(1, order));
  return e;
}

Element Element::monomial(ContextPtr ctx, Word w, const Scalar &c) {
  Element e(std::move(ctx), c.order());
  e.add(w, c);
  return e;
}

Scalar Element::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(order_) : it->second;
}

void Element::add(const Word &w, const Scalar &c) {
  if (c.order() != order_)
    throw ContextError("Element: coefficient truncation order mismatch");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void Element::add(const Word &w, const Rational &c) { add(w, Scalar(c, order_)); }

void Element::check_compatible(const Element &o) const {
  if (ctx_ != o.ctx_)
    throw ContextError("Element: generator contexts differ");
  if (order_ != o.order_)
    throw ContextError("Element: truncation orders differ");
}

Element &Element::operator+=(const Element &o) {
  check_compatible(o);
  for (const auto &[w, c] : o.terms_)
    add(w, c);
  return *this;
}

Element &Element::operator-=(const Element &o) {
  check_compatible(o);
  for (const auto &[w, c] : o.terms_)
    add(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element r(*this);
  for (auto &[w, c] : r.terms_)
    c = -c;
  return r;
}

Element Element::scaled(const Scalar &s) const {
  Element r(ctx_, order_);
  for (const auto &[w, c] : terms_)
    r.add(w, c * s);
  return r;
}

Element Element::scaled(const Rational &q) const {
  Element r(ctx_, order_);
  if (sgn(q) == 0)
    return r;
  for (const auto &[w, c] : terms_)
    r.add(w, c * q);
  return r;
}

Element operator*(const Element &a, const Element &b) {
  a.check_compatible(b);
  Element r(a.ctx_, a.order_);
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

bool operator==(const Element &a, const Element &b) {
  return a.ctx_ == b.ctx_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

int Element::valuation() const {
  int v = -1;
  for (const auto &[w, c] : terms_) {
    int cv = c.valuation();
    if (v < 0 || cv < v)
      v = cv;
  }
  return v;
}

Element Element::hbar_layer(int k) const {
  Element r(ctx_, order_);
  for (const auto &[w, c] : terms_)
    r.add(w, Scalar(c.coefficient(k), order_));
  return r;
}

Element Element::truncated(int m) const {
  Element r(ctx_, order_);
  for (const auto &[w, c] : terms_)
    r.add(w, c.truncated(m));
  return r;
}

std::string word_str(const Context &ctx, const Word &w) {
  if (w.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += "*";
    s += ctx[w[i]].symbol;
  }
  return s;
}

std::string Element::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << word_str(*ctx_, w);
  }
  return os.str();
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  const std::size_t n = perm.size();
  if (degrees.size() != n)
    throw std::invalid_argument("koszul_sign: size mismatch");
  int sign = 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (perm[a] > perm[b] && (degrees[perm[a]] & 1) && (degrees[perm[b]] & 1))
        sign = -sign;
  return sign;
}

Element sym(const ContextPtr &ctx, Word monomial, int order) {
  std::sort(monomial.begin(), monomial.end());
  for (int l : monomial)
    if ((*ctx)[l].degree != 0)
      throw GradingError("sym: monomial contains a letter of nonzero degree");
  Element r(ctx, order);
  // Distinct orderings of a multiset each occur (k!/|orbit|) times among the
  // k! permutations, so every distinct word gets weight 1/#distinct-orderings.
  std::vector<Word> words;
  do
    words.push_back(monomial);
  while (std::next_permutation(monomial.begin(), monomial.end()));
  const Rational w(1, static_cast<unsigned long>(words.size()));
  for (const auto &wd : words)
    r.add(wd, Scalar(w, order));
  return r;
}

Element sym(const ContextPtr &ctx, const CommPoly &p, int order) {
  Element r(ctx, order);
  for (const auto &[m, c] : p)
    r += sym(ctx, m, order).scaled(c);
  return r;
}

CommPoly abelianize(const Element &e) {
  CommPoly out;
  const Context &ctx = *e.context();
  for (const auto &[w, c] : e.terms()) {
    for (int l : w)
      if (ctx[l].degree != 0)
        throw GradingError("abelianize: letter '" + ctx[l].symbol + "' has nonzero degree");
    Word m = w;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        out.erase(it);
    }
  }
  return out;
}

} // namespace pbw

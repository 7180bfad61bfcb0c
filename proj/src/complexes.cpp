#include "pbw/complexes.hpp"

#include "pbw/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pbw {

int sign_parity(const Context &ctx, SignRule rule, const Word &w) {
  if (rule == SignRule::positional)
    return static_cast<int>(w.size()) & 1;
  return word_degree(ctx, w) & 1;
}

void Derivation::apply_word(const Word &w, const Scalar &c, Element &out) const {
  const Context &ctx = *out.context();
  int prefix_parity = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    auto it = values.find(w[t]);
    if (it != values.end() && !it->second.is_zero()) {
      const bool neg = (degree & 1) && prefix_parity;
      for (const auto &[vw, vc] : it->second.terms()) {
        Word nw(w.begin(), w.begin() + t);
        nw.insert(nw.end(), vw.begin(), vw.end());
        nw.insert(nw.end(), w.begin() + t + 1, w.end());
        Scalar coef = c * vc;
        out.add(nw, neg ? -coef : coef);
      }
    }
    if (rule == SignRule::positional)
      prefix_parity ^= 1;
    else
      prefix_parity ^= (ctx[w[t]].degree & 1);
  }
}

Element Derivation::apply(const Element &e) const {
  Element out(e.context(), e.order());
  for (const auto &[w, c] : e.terms())
    apply_word(w, c, out);
  return out;
}

Element inner_derivation(const Element &a, const Element &x, SignRule rule) {
  Element out(x.context(), x.order());
  const Context &ctx = *x.context();
  for (const auto &[wa, ca] : a.terms())
    for (const auto &[wx, cx] : x.terms()) {
      Word l = wa, r = wx;
      l.insert(l.end(), wx.begin(), wx.end());
      r.insert(r.end(), wa.begin(), wa.end());
      Scalar c = ca * cx;
      out.add(l, c);
      const bool odd = sign_parity(ctx, rule, wa) && sign_parity(ctx, rule, wx);
      out.add(r, odd ? c : -c);
    }
  return out;
}

Element commutator(const Derivation &d1, const Derivation &d2, const Element &x) {
  Element a = d1.apply(d2.apply(x));
  Element b = d2.apply(d1.apply(x));
  if ((d1.degree & 1) && (d2.degree & 1))
    return a + b;
  return a - b;
}

namespace {

std::string letter_symbol(const CoalgebraSpec &spec, const BasisKey &k) {
  if (spec.kind == CoalgebraKind::exterior && k.size() == 1)
    return "x" + std::to_string(k[0] + 1);
  if (spec.kind == CoalgebraKind::symmetric)
    return k.empty() ? "1" : key_str(spec, k);
  return key_str(spec, k);
}

int symmetric_dimension(int n, int d) {
  if (d < 0)
    return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
               static_cast<unsigned long>(n - 1));
  return static_cast<int>(b.get_si());
}

} // namespace

CobarComplex::CobarComplex(CoalgebraSpec spec, int max_letter_weight, SignRule frame,
                           int hbar_order)
    : spec_(spec), max_w_(max_letter_weight), frame_(frame), order_(hbar_order) {
  if (spec_.kind == CoalgebraKind::exterior)
    max_w_ = std::min(max_w_, spec_.dim);
  std::vector<Generator> gens;
  for (const auto &k : pbw::basis(spec_, max_w_)) {
    int deg = spec_.kind == CoalgebraKind::exterior ? 1 - static_cast<int>(k.size()) : 1;
    gens.push_back({letter_symbol(spec_, k), deg, k});
  }
  ctx_ = std::make_shared<const Context>(std::move(gens));

  d0_.degree = 1;
  d0_.rule = frame_;
  for (int id = 0; id < ctx_->size(); ++id) {
    const BasisKey &k = (*ctx_)[id].key;
    Element v(ctx_, order_);
    for (const auto &[pair, c] : coproduct(spec_, k)) {
      Rational coef = c;
      if (frame_ == SignRule::koszul && spec_.kind == CoalgebraKind::exterior &&
          weight(pair[0]) % 2 == 0)
        coef = -coef;
      v.add(Word{ctx_->id_of_key(pair[0]), ctx_->id_of_key(pair[1])}, coef);
    }
    if (!v.is_zero())
      d0_.values.emplace(id, std::move(v));
  }
}

int CobarComplex::word_weight(const Word &w) const {
  int s = 0;
  for (int l : w)
    s += letter_weight(l);
  return s;
}

Element CobarComplex::word(const Word &w, const Rational &c) const {
  Element e(ctx_, order_);
  e.add(w, c);
  return e;
}

Element CobarComplex::letter_element(const BasisKey &k) const { return word({letter(k)}); }

void CobarComplex::set_deformation(Derivation d) {
  if (d.degree != 1)
    throw GradingError("cobar deformation must have degree +1");
  for (const auto &[id, v] : d.values)
    if (v.context() != ctx_ || v.order() != order_)
      throw ContextError("cobar deformation built over a different context");
  d.rule = frame_;
  deformation_ = std::move(d);
}

Element CobarComplex::differential(const Element &e) const {
  Element out = d0_.apply(e);
  if (deformation_)
    out += deformation_->apply(e);
  return out;
}

std::vector<Word> CobarComplex::basis(int degree, int weight) const {
  if (!spec_.reduced)
    throw std::invalid_argument("CobarComplex::basis: slices need a reduced coalgebra");
  std::vector<Word> out;
  Word cur;
  const std::size_t cap = max_slice_size();
  std::function<void(int, int)> rec = [&](int remaining, int deg) {
    if (remaining == 0) {
      if (deg == degree) {
        out.push_back(cur);
        if (out.size() > cap)
          check_slice_size(out.size(), "cobar basis");
      }
      return;
    }
    for (int id = 0; id < ctx_->size(); ++id) {
      const int lw = letter_weight(id);
      if (lw > remaining)
        continue;
      cur.push_back(id);
      rec(remaining - lw, deg + (*ctx_)[id].degree);
      cur.pop_back();
    }
  };
  rec(weight, 0);
  return out;
}

CobarComplex exterior_cobar(int n, SignRule frame, int hbar_order) {
  return CobarComplex({CoalgebraKind::exterior, true, n}, n, frame, hbar_order);
}

namespace {

SparseVec to_vec(const Element &e, const std::map<Word, int> &index, int layer = 0) {
  SparseVec v;
  for (const auto &[w, c] : e.terms()) {
    const Rational &q = c.coefficient(layer);
    if (sgn(q) == 0)
      continue;
    auto it = index.find(w);
    if (it == index.end())
      throw std::logic_error("cobar: differential left the slice");
    v[it->second] = q;
  }
  return v;
}

std::map<Word, int> index_of(const std::vector<Word> &b) {
  std::map<Word, int> m;
  for (int i = 0; i < static_cast<int>(b.size()); ++i)
    m.emplace(b[i], i);
  return m;
}

} // namespace

CohomologySlice truncated_cohomology(const CobarComplex &c, int degree, int weight,
                                     bool with_representatives) {
  CohomologySlice s;
  s.degree = degree;
  s.weight = weight;
  const auto prev = c.basis(degree - 1, weight);
  const auto cur = c.basis(degree, weight);
  const auto next = c.basis(degree + 1, weight);
  const auto cur_idx = index_of(cur);
  const auto next_idx = index_of(next);

  std::vector<SparseVec> out_images;
  for (const auto &w : cur)
    out_images.push_back(to_vec(c.undeformed(c.word(w)), next_idx));
  RowEchelon out_e;
  for (const auto &v : out_images)
    out_e.insert(v);

  RowEchelon in_e;
  for (const auto &w : prev)
    in_e.insert(to_vec(c.undeformed(c.word(w)), cur_idx));

  s.cochains = static_cast<int>(cur.size());
  s.rank_out = out_e.rank();
  s.rank_in = in_e.rank();
  s.dimension = s.cochains - s.rank_out - s.rank_in;

  if (with_representatives) {
    for (const auto &kv : out_e.relations()) {
      if (!in_e.insert(kv))
        continue;
      Element e(c.context(), c.hbar_order());
      for (const auto &[i, q] : kv)
        e.add(cur[i], q);
      s.representatives.push_back(std::move(e));
    }
  }
  return s;
}

std::optional<Word> square_zero_witness(const CobarComplex &c, int degree, int weight,
                                        bool deformed) {
  for (const auto &w : c.basis(degree, weight)) {
    Element e = c.word(w);
    Element dd = deformed ? c.differential(c.differential(e)) : c.undeformed(c.undeformed(e));
    if (!dd.is_zero())
      return w;
  }
  return std::nullopt;
}

namespace {

// Basis of the total-weight-W part of the degree-d deformed slice:
// entries (h-power i, word of weight W - i).
struct DeformedSlice {
  std::vector<std::pair<int, Word>> entries;
  std::map<std::pair<int, Word>, int> index;
};

DeformedSlice deformed_slice(const CobarComplex &c, int degree, int total_weight) {
  DeformedSlice s;
  const int top = std::min(total_weight, c.hbar_order());
  for (int i = 0; i <= top; ++i)
    for (auto &w : c.basis(degree, total_weight - i)) {
      s.index.emplace(std::make_pair(i, w), static_cast<int>(s.entries.size()));
      s.entries.emplace_back(i, std::move(w));
    }
  check_slice_size(s.entries.size(), "deformed cobar slice");
  return s;
}

SparseVec deformed_vec(const Element &e, const DeformedSlice &target) {
  SparseVec v;
  for (const auto &[w, sc] : e.terms())
    for (int k = 0; k <= sc.order(); ++k) {
      if (sgn(sc[k]) == 0)
        continue;
      auto it = target.index.find({k, w});
      if (it == target.index.end())
        throw std::logic_error("deformed cobar: differential does not preserve total weight");
      v[it->second] = sc[k];
    }
  return v;
}

std::vector<SparseVec> deformed_images(const CobarComplex &c, const DeformedSlice &src,
                                       const DeformedSlice &tgt) {
  std::vector<SparseVec> out;
  for (const auto &[i, w] : src.entries) {
    Element e(c.context(), c.hbar_order());
    e.add(w, Scalar::hbar_power(i, c.hbar_order()));
    out.push_back(deformed_vec(c.differential(e), tgt));
  }
  return out;
}

int min_degree(const CobarComplex &c, int weight) {
  const int mw = c.max_letter_weight();
  const int min_len = (weight + mw - 1) / mw;
  return min_len - weight;
}

} // namespace

bool FiltrationReport::ok() const {
  if (!square_zero)
    return false;
  for (const auto &r : graded)
    if (r.graded_dimension != r.expected)
      return false;
  for (const auto &r : negative)
    if (r.dimension != 0)
      return false;
  return true;
}

FiltrationReport filtration_graded_check(const CobarComplex &c, int i_max, int max_weight) {
  if (c.spec().kind != CoalgebraKind::exterior || !c.spec().reduced)
    throw std::invalid_argument("filtration_graded_check: expects the cobar complex of Lambda^-(V)");
  FiltrationReport rep;
  const int n = c.spec().dim;
  for (int w = 0; w <= max_weight && rep.square_zero; ++w)
    for (int d = min_degree(c, w); d <= -2; ++d)
      if (auto wit = square_zero_witness(c, d, w, true)) {
        rep.square_zero = false;
        rep.witness = wit;
        break;
      }

  for (int W = 0; W <= max_weight; ++W) {
    if (W > c.hbar_order())
      rep.hbar_truncated = true;
    const DeformedSlice s0 = deformed_slice(c, 0, W);
    const DeformedSlice sm1 = deformed_slice(c, -1, W);
    RowEchelon e;
    for (const auto &v : deformed_images(c, sm1, s0))
      e.insert(v);
    const int rank_im = e.rank();
    const int top = std::min(W, c.hbar_order());
    // F_i for i = top+1 is zero; add h-levels from the top down.
    std::vector<int> f(top + 2, 0);
    for (int i = top; i >= 0; --i) {
      for (const auto &[key, idx] : s0.index)
        if (key.first == i)
          e.insert(SparseVec{{idx, Rational(1)}});
      f[i] = e.rank() - rank_im;
    }
    for (int i = 0; i <= std::min(i_max, top); ++i)
      rep.graded.push_back({W, i, f[i] - f[i + 1], symmetric_dimension(n, W - i)});

    for (int k = -1; k >= min_degree(c, W); --k) {
      const DeformedSlice sk = deformed_slice(c, k, W);
      const DeformedSlice sk1 = deformed_slice(c, k + 1, W);
      const DeformedSlice skm = deformed_slice(c, k - 1, W);
      const int r_out = rank_of(deformed_images(c, sk, sk1));
      const int r_in = rank_of(deformed_images(c, skm, sk));
      rep.negative.push_back(
          {W, k, static_cast<int>(sk.entries.size()) - r_out - r_in});
    }
  }
  return rep;
}

LiftResult lift_cycle(const CobarComplex &c, const Element &x, int k) {
  if (x.context() != c.context())
    throw ContextError("lift_cycle: element built over a different context");
  if (!c.undeformed(x).is_zero())
    throw PreconditionError("lift_cycle: x is not a d_0-cycle");
  LiftResult res{false, x, 0, std::nullopt};

  if (x.is_zero()) {
    res.ok = true;
    return res;
  }
  const int degree = word_degree(*c.context(), x.terms().begin()->first);
  for (const auto &[w, cf] : x.terms())
    if (word_degree(*c.context(), w) != degree)
      throw GradingError("lift_cycle: x is not homogeneous");

  for (int m = 0; m < k; ++m) {
    Element r = c.differential(res.lift).hbar_layer(m + 1);
    if (r.is_zero())
      continue;
    std::set<int> weights;
    for (const auto &[w, cf] : r.terms())
      weights.insert(c.word_weight(w));
    std::vector<Word> cand, tgt;
    for (int wt : weights) {
      for (auto &w : c.basis(degree, wt))
        cand.push_back(std::move(w));
      for (auto &w : c.basis(degree + 1, wt))
        tgt.push_back(std::move(w));
    }
    const auto tidx = index_of(tgt);
    RowEchelon e;
    for (const auto &w : cand)
      e.insert(to_vec(c.undeformed(c.word(w)), tidx));
    SparseVec rhs = to_vec(-r, tidx);
    auto combo = e.express(rhs);
    if (!combo) {
      res.ok = false;
      res.failed_step = m + 1;
      res.obstruction = -r;
      return res;
    }
    for (const auto &[j, q] : *combo)
      res.lift.add(cand[j], Scalar::hbar_power(m + 1, c.hbar_order(), q));
  }
  res.ok = true;
  return res;
}

BarComplex::BarComplex(int n, int max_degree, bool unital)
    : n_(n), max_degree_(max_degree), unital_(unital) {
  CoalgebraSpec s{CoalgebraKind::symmetric, !unital, n};
  std::vector<Generator> gens;
  for (const auto &k : pbw::basis(s, max_degree))
    gens.push_back({k.empty() ? "1" : key_str(s, k), 0, k});
  ctx_ = std::make_shared<const Context>(std::move(gens));
}

int BarComplex::unit() const {
  if (!unital_)
    throw std::invalid_argument("BarComplex: algebra has no unit");
  return ctx_->id_of_key({});
}

Element BarComplex::word(const std::vector<BasisKey> &monomials, const Rational &c) const {
  Word w;
  for (const auto &m : monomials) {
    BasisKey k = m;
    std::sort(k.begin(), k.end());
    w.push_back(ctx_->id_of_key(k));
  }
  Element e(ctx_, 0);
  e.add(w, c);
  return e;
}

int BarComplex::multiply(int a, int b) const {
  BasisKey k = (*ctx_)[a].key;
  const BasisKey &kb = (*ctx_)[b].key;
  k.insert(k.end(), kb.begin(), kb.end());
  std::sort(k.begin(), k.end());
  if (static_cast<int>(k.size()) > max_degree_)
    throw DegreeOverflow("bar complex: product " + (*ctx_)[a].symbol + " * " +
                             (*ctx_)[b].symbol + " exceeds degree bound",
                         {a, b});
  return ctx_->id_of_key(k);
}

Element BarComplex::differential(const Element &e) const {
  Element out(ctx_, e.order());
  for (const auto &[w, c] : e.terms()) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word nw(w.begin(), w.begin() + i);
      nw.push_back(multiply(w[i], w[i + 1]));
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      out.add(nw, (i % 2 == 0) ? c : -c);
    }
  }
  return out;
}

Element BarComplex::homotopy(const Element &e) const {
  const int one = unit();
  Element out(ctx_, e.order());
  for (const auto &[w, c] : e.terms()) {
    Word nw{one};
    nw.insert(nw.end(), w.begin(), w.end());
    out.add(nw, c);
  }
  return out;
}

std::vector<Word> BarComplex::basis(int length, int degree) const {
  std::vector<Word> out;
  Word cur;
  std::function<void(int, int)> rec = [&](int left, int deg) {
    if (left == 0) {
      if (deg == 0)
        out.push_back(cur);
      return;
    }
    for (int id = 0; id < ctx_->size(); ++id) {
      int lw = static_cast<int>((*ctx_)[id].key.size());
      if (lw > deg)
        continue;
      cur.push_back(id);
      rec(left - 1, deg - lw);
      cur.pop_back();
    }
  };
  rec(length, degree);
  return out;
}

} // namespace pbw

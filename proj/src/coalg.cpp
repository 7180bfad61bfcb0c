#include "pbw/coalg.hpp"

#include "pbw/errors.hpp"

#include <algorithm>
#include <functional>

namespace pbw {

void add_term(CoTensor &t, const std::vector<BasisKey> &w, const Rational &c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      t.erase(it);
  }
}

bool is_valid_key(const CoalgebraSpec &spec, const BasisKey &b) {
  if (spec.reduced && b.empty())
    return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0 || b[i] >= spec.dim)
      return false;
    if (i > 0) {
      if (spec.kind == CoalgebraKind::exterior && b[i - 1] >= b[i])
        return false;
      if (spec.kind == CoalgebraKind::symmetric && b[i - 1] > b[i])
        return false;
    }
  }
  return true;
}

int weight(const BasisKey &b) { return static_cast<int>(b.size()); }

std::string key_str(const CoalgebraSpec &spec, const BasisKey &b) {
  if (b.empty())
    return "1";
  std::string s = spec.kind == CoalgebraKind::exterior ? "xi" : "x";
  if (spec.kind == CoalgebraKind::exterior) {
    for (int i : b)
      s += std::to_string(i + 1);
    return s;
  }
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i)
    out += (i ? "*x" : "x") + std::to_string(b[i] + 1);
  return out;
}

std::vector<BasisKey> basis(const CoalgebraSpec &spec, int max_weight, int min_weight) {
  std::vector<BasisKey> out;
  if (min_weight < 0)
    min_weight = spec.reduced ? 1 : 0;
  BasisKey cur;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < spec.dim; ++i) {
      cur.push_back(i);
      rec(spec.kind == CoalgebraKind::exterior ? i + 1 : i, remaining - 1);
      cur.pop_back();
    }
  };
  for (int w = std::max(min_weight, spec.reduced ? 1 : 0); w <= max_weight; ++w)
    rec(0, w);
  return out;
}

int shuffle_sign(const BasisKey &j, const BasisKey &k) {
  // Inversions of the concatenation J,K.
  int inv = 0;
  for (int a : j)
    for (int b : k)
      if (a > b)
        ++inv;
  return (inv & 1) ? -1 : 1;
}

CoTensor coproduct(const CoalgebraSpec &spec, const BasisKey &b, ShuffleSign sign) {
  if (!is_valid_key(spec, b))
    throw std::invalid_argument("coproduct: invalid basis element " + key_str(spec, b));
  CoTensor out;
  const int k = weight(b);
  // Positional splittings: every subset of positions goes left.
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    BasisKey left, right;
    for (int p = 0; p < k; ++p)
      ((mask >> p) & 1u ? left : right).push_back(b[p]);
    if (spec.reduced && (left.empty() || right.empty()))
      continue;
    int s = 1;
    if (spec.kind == CoalgebraKind::exterior) {
      s = shuffle_sign(left, right);
      if (sign == ShuffleSign::flipped && weight(left) % 2 == 0)
        s = -s;
    }
    add_term(out, {left, right}, Rational(s));
  }
  return out;
}

CoTensor coproduct_in_slot(const CoalgebraSpec &spec, const CoTensor &t, int pos,
                           ShuffleSign sign) {
  CoTensor out;
  for (const auto &[w, c] : t) {
    const CoTensor d = coproduct(spec, w.at(pos), sign);
    for (const auto &[pair, dc] : d) {
      std::vector<BasisKey> nw(w.begin(), w.begin() + pos);
      nw.push_back(pair[0]);
      nw.push_back(pair[1]);
      nw.insert(nw.end(), w.begin() + pos + 1, w.end());
      add_term(out, nw, c * dc);
    }
  }
  return out;
}

CoassociativityResult check_coassociativity(const CoalgebraSpec &spec, int max_weight,
                                            ShuffleSign sign) {
  CoassociativityResult res;
  for (const auto &b : basis(spec, max_weight)) {
    CoTensor d;
    add_term(d, {b}, 1);
    d = coproduct_in_slot(spec, d, 0, sign);
    CoTensor left = coproduct_in_slot(spec, d, 0, sign);
    CoTensor right = coproduct_in_slot(spec, d, 1, sign);
    if (left != right) {
      res.ok = false;
      res.witness = b;
      res.left = std::move(left);
      res.right = std::move(right);
      return res;
    }
  }
  return res;
}

std::optional<int> cocompleteness_filtration(const CoalgebraSpec &spec, const BasisKey &b,
                                             int n_max) {
  if (!spec.reduced)
    throw std::invalid_argument(
        "cocompleteness_filtration: the reduced coproduct is undefined on a counital coalgebra");
  CoTensor t;
  add_term(t, {b}, 1);
  for (int n = 1; n <= n_max; ++n) {
    // Iterated reduced coproduct: always split the last factor.
    CoTensor next;
    for (const auto &[w, c] : t) {
      CoTensor one;
      add_term(one, w, c);
      for (const auto &[nw, nc] : coproduct_in_slot(spec, one, static_cast<int>(w.size()) - 1))
        add_term(next, nw, nc);
    }
    t = std::move(next);
    if (t.empty())
      return n;
  }
  return std::nullopt;
}

CoTensor project_reduced(const CoTensor &t) {
  CoTensor out;
  for (const auto &[w, c] : t) {
    bool has_unit = std::any_of(w.begin(), w.end(), [](const BasisKey &k) { return k.empty(); });
    if (!has_unit)
      add_term(out, w, c);
  }
  return out;
}

} // namespace pbw

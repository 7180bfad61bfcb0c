#pragma once

// Symmetric and exterior coalgebras S(W), S+(W), Lambda(V), Lambda^-(V) on a
// basis of dimension n.

#include "pbw/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbw {

enum class CoalgebraKind { symmetric, exterior };

// Basis element: sorted multiset (symmetric) or strictly increasing index set
// (exterior). The empty key is the counit element 1 of the full coalgebra.
using BasisKey = std::vector<int>;

struct CoalgebraSpec {
  CoalgebraKind kind = CoalgebraKind::symmetric;
  bool reduced = false;
  int dim = 1;
};

// Sign used for the exterior splittings.
enum class ShuffleSign {
  standard, // eps(J,K): sign of the permutation I -> (J,K)
  flipped,  // standard sign negated on splits with |J| even (negative control)
};

// Tensor power elements: word of basis keys -> coefficient.
using CoTensor = std::map<std::vector<BasisKey>, Rational>;

void add_term(CoTensor &t, const std::vector<BasisKey> &w, const Rational &c);

bool is_valid_key(const CoalgebraSpec &spec, const BasisKey &b);
int weight(const BasisKey &b);
std::string key_str(const CoalgebraSpec &spec, const BasisKey &b);

// All basis elements of weight in [min_weight, max_weight].
std::vector<BasisKey> basis(const CoalgebraSpec &spec, int max_weight, int min_weight = -1);

// Sign of moving I into (J followed by K); both J and K sorted.
int shuffle_sign(const BasisKey &j, const BasisKey &k);

// Delta(b) as a sum of two-letter words.
CoTensor coproduct(const CoalgebraSpec &spec, const BasisKey &b,
                   ShuffleSign sign = ShuffleSign::standard);

// Apply the coproduct in slot `pos` of every word.
CoTensor coproduct_in_slot(const CoalgebraSpec &spec, const CoTensor &t, int pos,
                           ShuffleSign sign = ShuffleSign::standard);

struct CoassociativityResult {
  bool ok = true;
  std::optional<BasisKey> witness;
  CoTensor left, right; // at the witness
};

CoassociativityResult check_coassociativity(const CoalgebraSpec &spec, int max_weight,
                                            ShuffleSign sign = ShuffleSign::standard);

// Smallest n with the n-fold iterated reduced coproduct of b equal to zero
// (n = 1 means the reduced coproduct itself vanishes). nullopt when it is
// still nonzero after n_max iterations. Throws on a counital coalgebra.
std::optional<int> cocompleteness_filtration(const CoalgebraSpec &spec, const BasisKey &b,
                                             int n_max);

// Projection S(W) -> S+(W): kills every word containing the unit key.
CoTensor project_reduced(const CoTensor &t);

} // namespace pbw

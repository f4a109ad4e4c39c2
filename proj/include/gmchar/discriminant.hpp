// discriminant.hpp: weighted degree of the discriminant divisor in a
// miniversal deformation, with a symbolic-resultant oracle, plus the
// chi_delta0 and chi_K building blocks assembled from it.
#pragma once

#include <vector>

#include "gmchar/singularities.hpp"

namespace gmchar {

// G_m-weight of disc(f) for the miniversal family of y^2 = x^n (or any
// weighted-homogeneous setup in which the deformation coefficient a_i of
// x^i carries weight (n - i) * w_x): the discriminant of the generic
// monic degree-n polynomial is weighted-homogeneous of degree w_x*n*(n-1).
Int disc_weighted_degree(long n, long w_x);

// Independent check of disc_weighted_degree for 2 <= n <= 8: expands
// Res(f, f') for the generic monic f symbolically over Z, verifies every
// monomial has the same weighted degree (NotWeightedHomogeneous
// otherwise), and returns that degree's magnitude w_x*n*(n-1).
Int disc_oracle(long n, long w_x);

// Evaluates the same symbolic Res(f, f') at concrete coefficients
// a_0..a_{n-1}; equals (-1)^(n(n-1)/2) disc(f) for monic f.
Int resultant_eval(long n, const std::vector<Int>& a);

// chi_{delta_0} of the deformation family of `model` with attachment
// subset S, all nodes nonseparating:
//   singular_delta_weight(model) - sum_{i in S} w(n_i).
Int chi_delta0_from_model(const SingularityModel& model, const AttachmentConfig& attach);

// Weight decomposition of T^1 for the A_even(k) miniversal family of the
// attached curve: deformation weights 2i - 4k - 2 (i = 0..2k-1), the node
// smoothing weight +1, and the crimping weights 1, 3, ..., 2k-3 (k >= 2).
struct T1Decomposition {
  std::vector<Int> deformation_weights;
  std::vector<Int> node_weights;
  std::vector<Int> crimping_weights;
  Int total() const;
};
T1Decomposition t1_decomposition_a_even(long k);

// chi_K = det T^1 weight for A_even(k), k >= 2: evaluates to
// -3k^2 - 8k + 2, matching 13*chi_lambda - 2*chi_delta.
Int chi_k_direct_a_even(long k);

}  // namespace gmchar

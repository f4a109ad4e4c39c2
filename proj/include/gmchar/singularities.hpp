// singularities.hpp: catalog of curve-singularity families and the
// characters of their one-parameter deformation families.
//
// Each catalogued model knows its lambda-character, the weight Delta of
// the discriminant divisor of its miniversal deformation, and the weight
// w(n_i) of each boundary branch node.  Attaching the curve to the rest
// of a stable curve along a subset S of its branches gives
//   chi_delta = Delta - sum_{i in S} w(n_i),
// and chi_lambda2 = 13*chi_lambda - chi_delta.
//
// Branch numbering: branch 1 is always the smooth branch transverse to
// the rest.  For D_even(k) it carries weight k and branches 2, 3 are the
// tangent pair (weight 1 each); for D_odd(k) it carries weight 2k - 1
// and branch 2 is the cuspidal branch (weight 1); for E7 it carries
// weight 2 and branch 2 is the cuspidal branch (weight 1).  Each node
// weight is the G_m-weight of the uniformizer of its branch.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gmchar/character.hpp"
#include "gmchar/semigroup.hpp"

namespace gmchar {

enum class Family {
  AEven,        // y^2 = x^(2k+1)
  AOdd,         // y^2 = x^(2k+2)
  DOdd,         // x(y^2 - x^(2k-1))
  DEven,        // x(y^2 - x^(2k))
  E6,           // y^3 = x^4
  E7,           // y(y^2 - x^3)
  E8,           // y^3 = x^5
  Toric,        // x^(pb) = y^(qb)
  Unibranch,    // monomial curve with prescribed gap sequence
  EllipticMFold,
  Ribbon,
  ChainOddOdd,  // A_{2i+1/2j+1} dangling chain
  ChainOddEven, // A_{2i+1/2j} dangling chain
};

struct SingularityModel {
  Family family;
  long k = 0;              // A/D series index
  long p = 0, q = 0, b = 1;  // toric exponents and branch multiplicity
  std::vector<long> gaps;  // unibranch gap sequence
  long m = 0;              // elliptic m-fold point
  long g = 0, ell = 0;     // ribbon genus and twisting parameter
  long i = 0, j = 0;       // chain indices

  static SingularityModel a_even(long k);
  static SingularityModel a_odd(long k);
  static SingularityModel d_odd(long k);
  static SingularityModel d_even(long k);
  static SingularityModel e6();
  static SingularityModel e7();
  static SingularityModel e8();
  static SingularityModel toric(long p, long q, long b);
  static SingularityModel unibranch(std::vector<long> gaps);
  static SingularityModel elliptic_mfold(long m);
  static SingularityModel ribbon(long g, long ell);
  static SingularityModel chain_odd_odd(long i, long j);
  static SingularityModel chain_odd_even(long i, long j);

  int branch_count() const;
  // Weight w(n_i) of each branch node, indexed by branch.  Defined for
  // the Delta-catalogued families; MissingClosedForm otherwise.
  std::vector<Int> node_weights() const;
  // Weight Delta of the discriminant divisor in the miniversal family.
  Int singular_delta_weight() const;
  std::string label() const;
};

// Attachment data: which branches meet the rest of the curve, and
// (optionally) which boundary class delta_h each attached node maps to
// (0 = nonseparating, h > 0 = separating off genus h).  The class list
// aligns with the attached set in increasing branch order.
struct AttachmentConfig {
  std::set<int> attached;
  std::optional<std::vector<long>> node_classes;

  static AttachmentConfig none() { return {}; }
  static AttachmentConfig all_of(const SingularityModel& m);
  static AttachmentConfig subset(std::initializer_list<int> s) {
    return AttachmentConfig{std::set<int>(s), std::nullopt};
  }
};

// Character of the deformation family of a catalogued singularity with
// attachment subset S.  delta_parts is populated from the node classes
// (all mass on delta_0 when no separating data is given).
Character chi_family(const SingularityModel& model, const AttachmentConfig& attach);

// Unibranch monomial curve with gap sequence {b_1 < ... < b_k}: requires
// b_1 = 1 and symmetry (AsymmetricGaps otherwise).
//   chi_lambda  = sum b_i
//   chi_lambda2 = (2k-1)^2 + sum b_i - (attached ? 0 : 1)
Character chi_unibranch(const std::vector<long>& gaps, bool attached);

// Ribbon of genus g >= 3 with twisting parameter 1 <= ell <= g - 2:
// characters computed by direct weight-list summation,
//   chi_lambda = g*c, chi_lambda2 = (5g-4)*c, c = ell - (g-1)/2.
Character chi_ribbon(long g, long ell);

// chi_delta / chi_lambda for the n-ribbon over a genus-g spine; requires
// n >= 2 and (n-1) | 2g.  Equals 12(2g+n-1)n / (n^2 + (4g-3)n + 2 - 2g).
Rational n_ribbon_delta_ratio(long g, long n);

// Cross-identification of the n-ribbon ratio with the slope of the
// monomial curve y^n = x^(2g/(n-1)+1) (when the exponents are coprime).
struct NRibbonComparison {
  long p = 0, q = 0;                 // exponents of the companion curve
  Rational ratio;                    // n_ribbon_delta_ratio(g, n)
  std::optional<Rational> slope_isolated;  // matches ratio
  std::optional<Rational> slope_attached;  // the inequivalent variant
};
NRibbonComparison n_ribbon_toric_comparison(long g, long n);

// Elliptic m-fold point, m >= 1: chi = (1, m + 1), so chi_delta = 12 - m.
Character chi_elliptic_mfold(long m);

// Dangling chains (lambda and delta only in the source tables):
//   A_{2i+1/2j+1}: lambda = (j^2+j-i^2-i)/2, delta = 4j^2+6j-4i^2-6i+1
//   A_{2i+1/2j}:   lambda = j^2-(i^2+i)/2,   delta = 8j^2+4j-4i^2-6i-1
// Requires j > i >= 1.
Character chi_chain(const SingularityModel& model);

// chi_lambda2 by direct enumeration of the weights of an H^0(omega^2)
// basis.  Defined for AEven and DEven (attached convention), Unibranch
// (isolated convention, genus >= 2) and Ribbon; must agree with the
// 13*lambda - delta route of the corresponding chi_family /
// chi_unibranch / chi_ribbon call.
Int chi_lambda2_direct(const SingularityModel& model);

}  // namespace gmchar

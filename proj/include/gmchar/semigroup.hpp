// semigroup.hpp: numerical semigroups <p, q> with gcd(p, q) = 1.
//
// Gap lists drive the unibranch character computations; the closed-form
// sum of gaps (p-1)(q-1)(2pq-p-q-1)/12 is cross-checked against a direct
// representability scan.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gmchar/rational.hpp"

namespace gmchar {

struct NumericalSemigroup {
  long p = 0;
  long q = 0;
  std::vector<long> gaps;  // increasing
  long frobenius() const { return gaps.empty() ? -1 : gaps.back(); }
  long genus() const { return static_cast<long>(gaps.size()); }
};

// Enumerates the gaps of <p, q> by scanning representability of every
// n in [1, pq].  Requires p, q >= 2 coprime (NotCoprime / OutOfRange).
// The closed forms F = pq - p - q and g = (p-1)(q-1)/2 are asserted
// against the scan before returning.
NumericalSemigroup gaps_two_generated(long p, long q);

// (p-1)(q-1)(2pq - p - q - 1)/12, the sum of the gaps of <p, q>.
Int sum_of_gaps_closed_form(long p, long q);

// Sum of an explicit gap list.
Int sum_of_gaps(const std::vector<long>& gaps);

// Symmetry: n is a gap iff 2k - 1 - n is not, where k = #gaps.  True for
// every two-generated semigroup; meaningful for arbitrary gap lists.
bool is_symmetric(const std::vector<long>& gaps);

// Apery set of <p, q> with respect to q: the i-th entry (i = 0..q-1) is
// the least semigroup element congruent to i mod q, namely the unique
// multiple i'*p with i'*p = i mod q.
std::vector<long> apery_set(long p, long q);

// Gap enumeration through the Apery set: each Apery element a contributes
// the gaps a - q*j for j = 1..floor(a/q).  No representability scan.
std::vector<long> gaps_via_apery(long p, long q);

// Minimal generators of the numerical semigroup complementing `gaps`;
// returns (p, q) when the semigroup is two-generated, nullopt otherwise.
std::optional<std::pair<long, long>> two_generators_from_gaps(const std::vector<long>& gaps);

}  // namespace gmchar

// semigroup.cpp
#include "gmchar/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace gmchar {

namespace {

void require_coprime_pair(long p, long q) {
  if (p < 2 || q < 2) throw OutOfRange("numerical semigroup requires p, q >= 2");
  if (std::gcd(p, q) != 1) throw NotCoprime("gcd(p, q) != 1");
}

}  // namespace

NumericalSemigroup gaps_two_generated(long p, long q) {
  require_coprime_pair(p, q);
  const long bound = p * q;
  std::vector<char> reachable(static_cast<size_t>(bound) + 1, 0);
  reachable[0] = 1;
  for (long n = 1; n <= bound; ++n) {
    if ((n >= p && reachable[n - p]) || (n >= q && reachable[n - q])) reachable[n] = 1;
  }
  NumericalSemigroup s;
  s.p = p;
  s.q = q;
  for (long n = 1; n <= bound; ++n)
    if (!reachable[n]) s.gaps.push_back(n);
  if (s.frobenius() != p * q - p - q)
    throw DomainError("gap scan disagrees with Frobenius closed form");
  if (s.genus() != (p - 1) * (q - 1) / 2)
    throw DomainError("gap scan disagrees with genus closed form");
  return s;
}

Int sum_of_gaps_closed_form(long p, long q) {
  require_coprime_pair(p, q);
  Int n = Int(p - 1) * Int(q - 1) * (2 * Int(p) * Int(q) - p - q - 1);
  return exact_div(n, 12);
}

Int sum_of_gaps(const std::vector<long>& gaps) {
  Int s = 0;
  for (long g : gaps) s += g;
  return s;
}

bool is_symmetric(const std::vector<long>& gaps) {
  const long k = static_cast<long>(gaps.size());
  if (k == 0) return true;
  const long frob = 2 * k - 1;
  std::vector<char> is_gap(static_cast<size_t>(frob) + 1, 0);
  for (long g : gaps) {
    if (g < 1 || g > frob) return false;  // symmetric gaps live in [1, 2k-1]
    is_gap[g] = 1;
  }
  for (long n = 0; n <= frob; ++n)
    if (is_gap[n] == is_gap[frob - n]) return false;
  return true;
}

std::vector<long> apery_set(long p, long q) {
  require_coprime_pair(p, q);
  std::vector<long> ap(static_cast<size_t>(q), -1);
  for (long i = 0; i < q; ++i) {
    long a = i * p;
    ap[a % q] = a;
  }
  return ap;
}

std::vector<long> gaps_via_apery(long p, long q) {
  std::vector<long> gaps;
  for (long a : apery_set(p, q))
    for (long j = 1; j <= a / q; ++j) gaps.push_back(a - q * j);
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

std::optional<std::pair<long, long>> two_generators_from_gaps(const std::vector<long>& gaps) {
  if (gaps.empty()) return std::nullopt;
  const long frob = gaps.back();
  const long bound = 2 * frob + 2;
  std::vector<char> in_sg(static_cast<size_t>(bound) + 1, 1);
  for (long g : gaps) {
    if (g < 1 || g > frob) return std::nullopt;
    in_sg[g] = 0;
  }
  std::vector<long> gens;
  for (long n = 1; n <= bound; ++n) {
    if (!in_sg[n]) continue;
    bool decomposable = false;
    for (long m = 1; !decomposable && m <= n - m; ++m)
      if (in_sg[m] && in_sg[n - m]) decomposable = true;
    if (!decomposable) gens.push_back(n);
    if (gens.size() > 2) return std::nullopt;
  }
  if (gens.size() != 2) return std::nullopt;
  long p = gens[0], q = gens[1];
  if (std::gcd(p, q) != 1) return std::nullopt;
  // Confirm the candidate pair reproduces the given gaps exactly.
  if (gaps_two_generated(p, q).gaps != gaps) return std::nullopt;
  return std::make_pair(p, q);
}

}  // namespace gmchar

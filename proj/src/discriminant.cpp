// discriminant.cpp
#include "gmchar/discriminant.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>

namespace gmchar {

Int disc_weighted_degree(long n, long w_x) {
  if (n < 2 || w_x < 1) throw OutOfRange("disc_weighted_degree: need n >= 2, w_x >= 1");
  return Int(w_x) * n * (n - 1);
}

namespace {

// Sparse polynomial in the coefficients a_0..a_{n-1} of the generic monic
// polynomial, n <= 8.  Exponent vectors are packed 8 bits per variable
// into a uint64_t key (individual exponents stay below 2n - 1 <= 15).
using Poly = std::unordered_map<uint64_t, Int>;

uint64_t mul_key(uint64_t a, uint64_t b) { return a + b; }

void add_term(Poly& p, uint64_t key, const Int& c) {
  auto [it, inserted] = p.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Entry of the Sylvester matrix of f = x^n + a_{n-1} x^{n-1} + ... + a_0
// and f': either 0, an integer, or a single variable a_i.
struct Entry {
  bool zero = true;
  Int coeff;
  int var = -1;  // -1: constant
};

std::vector<std::vector<Entry>> sylvester_matrix(long n) {
  const long dim = 2 * n - 1;
  std::vector<std::vector<Entry>> m(static_cast<size_t>(dim),
                                    std::vector<Entry>(static_cast<size_t>(dim)));
  // f has coefficients c_n..c_0 = 1, a_{n-1}, ..., a_0 (degree n);
  // f' has coefficients n, (n-1)a_{n-1}, ..., 1*a_1 (degree n - 1).
  for (long r = 0; r < n - 1; ++r) {    // n-1 shifted copies of f
    for (long d = 0; d <= n; ++d) {     // d = power drop: column r + d holds c_{n-d}
      Entry& e = m[r][r + d];
      e.zero = false;
      if (d == 0) {
        e.coeff = 1;
      } else {
        e.var = static_cast<int>(n - d);  // a_{n-d}
        e.coeff = 1;
      }
    }
  }
  for (long r = 0; r < n; ++r) {        // n shifted copies of f'
    for (long d = 0; d <= n - 1; ++d) { // column (n - 1 + r) + d holds (n-d) c_{n-d}
      Entry& e = m[n - 1 + r][r + d];
      e.zero = false;
      if (d == 0) {
        e.coeff = n;
      } else {
        e.var = static_cast<int>(n - d);
        e.coeff = n - d;
      }
    }
  }
  return m;
}

// Determinant by row-major expansion with memoization on the set of used
// columns: after processing rows 0..r-1, each reachable column mask of
// popcount r carries the signed minor polynomial.
Poly sylvester_determinant(long n) {
  const auto m = sylvester_matrix(n);
  const int dim = static_cast<int>(m.size());
  std::unordered_map<uint32_t, Poly> state;
  state.emplace(0u, Poly{{0u, Int(1)}});
  for (int r = 0; r < dim; ++r) {
    std::unordered_map<uint32_t, Poly> next;
    for (const auto& [mask, minor] : state) {
      for (int c = 0; c < dim; ++c) {
        if (mask & (1u << c)) continue;
        const Entry& e = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        if (e.zero) continue;
        // Parity of used columns above c gives the expansion sign.
        const int sign = __builtin_popcount(mask >> (c + 1)) % 2 == 0 ? 1 : -1;
        const uint64_t shift = e.var < 0 ? 0 : (uint64_t(1) << (8 * e.var));
        Poly& acc = next[mask | (1u << c)];
        for (const auto& [key, coeff] : minor) {
          Int c2 = coeff * e.coeff;
          if (sign < 0) c2 = -c2;
          add_term(acc, mul_key(key, shift), c2);
        }
      }
    }
    state = std::move(next);
  }
  const uint32_t full = dim == 32 ? 0xffffffffu : ((uint32_t(1) << dim) - 1);
  auto it = state.find(full);
  if (it == state.end() || it->second.empty())
    throw DomainError("sylvester_determinant: expansion vanished");
  return std::move(it->second);
}

const Poly& cached_sylvester(long n) {
  static std::unordered_map<long, Poly> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, sylvester_determinant(n)).first;
  return it->second;
}

}  // namespace

Int disc_oracle(long n, long w_x) {
  if (n < 2 || n > 8) throw OutOfRange("disc_oracle: supported range is 2 <= n <= 8");
  if (w_x < 1) throw OutOfRange("disc_oracle: need w_x >= 1");
  const Poly& res = cached_sylvester(n);
  // weight(a_i) = (i - n) * w_x; every monomial of Res(f, f') must land
  // on the single weighted degree -w_x*n*(n-1).
  const Int expected = -disc_weighted_degree(n, w_x);
  for (const auto& [key, coeff] : res) {
    (void)coeff;
    Int deg = 0;
    for (long i = 0; i < n; ++i) {
      const long e = static_cast<long>((key >> (8 * i)) & 0xff);
      deg += Int(e) * (i - n) * w_x;
    }
    if (deg != expected)
      throw NotWeightedHomogeneous("disc_oracle: monomial of weighted degree " +
                                   to_string(deg) + ", expected " + to_string(expected));
  }
  return -expected;
}

Int resultant_eval(long n, const std::vector<Int>& a) {
  if (n < 2 || n > 8) throw OutOfRange("resultant_eval: supported range is 2 <= n <= 8");
  if (a.size() != static_cast<size_t>(n))
    throw OutOfRange("resultant_eval: need exactly n coefficients a_0..a_{n-1}");
  const Poly& res = cached_sylvester(n);
  Int v = 0;
  for (const auto& [key, coeff] : res) {
    Int term = coeff;
    for (long i = 0; i < n; ++i) {
      const long e = static_cast<long>((key >> (8 * i)) & 0xff);
      for (long t = 0; t < e; ++t) term *= a[static_cast<size_t>(i)];
    }
    v += term;
  }
  return v;
}

Int chi_delta0_from_model(const SingularityModel& model, const AttachmentConfig& attach) {
  const int n = model.branch_count();
  for (int i : attach.attached)
    if (i < 1 || i > n) throw InvalidSubset("attachment subset exceeds branch range");
  const auto w = model.node_weights();
  Int v = model.singular_delta_weight();
  for (int i : attach.attached) v -= w[static_cast<size_t>(i - 1)];
  return v;
}

Int T1Decomposition::total() const {
  Int s = 0;
  for (const auto& v : deformation_weights) s += v;
  for (const auto& v : node_weights) s += v;
  for (const auto& v : crimping_weights) s += v;
  return s;
}

T1Decomposition t1_decomposition_a_even(long k) {
  if (k < 2) throw OutOfRange("t1_decomposition_a_even: need k >= 2");
  T1Decomposition d;
  for (long i = 0; i <= 2 * k - 1; ++i) d.deformation_weights.push_back(Int(2 * i - 4 * k - 2));
  d.node_weights.push_back(Int(1));
  for (long w = 1; w <= 2 * k - 3; w += 2) d.crimping_weights.push_back(Int(w));
  return d;
}

Int chi_k_direct_a_even(long k) { return t1_decomposition_a_even(k).total(); }

}  // namespace gmchar

// golden_forms.cpp
#include "gmchar/golden_forms.hpp"

namespace gmchar {
namespace golden {

namespace {

std::string at_k(const char* base, long k) {
  return std::string(base) + " k=" + std::to_string(k);
}

Rational rat(long num, long den) { return Rational(Int(num), Int(den)); }

}  // namespace

std::vector<FormRow> character_forms(long k) {
  const Int K(k);
  std::vector<FormRow> rows;
  rows.push_back({at_k("A_{2k}", k),
                  Rational(K * K),
                  Rational(5 * K * K - 4 * K + 1),
                  Rational(8 * K * K + 4 * K - 1),
                  Rational(3 * K * K + 8 * K - 2, 8 * K * K + 4 * K - 1),
                  Rational(8 * K * K + 4 * K - 1, K * K)});
  rows.push_back({at_k("A_{2k+1}", k),
                  Rational(K * K + K, Int(2)),
                  Rational(5 * K * K + K, Int(2)),
                  Rational(4 * K * K + 6 * K),
                  Rational(3 * K + 11, 8 * K + 12),
                  Rational(8 * K + 12, K + 1)});
  rows.push_back({at_k("D_{2k+1}", k),
                  Rational(K * K),
                  Rational(5 * K * K - 2 * K),
                  Rational(8 * K * K + 2 * K),
                  Rational(3 * K + 4, 8 * K + 2),
                  Rational(8 * K + 2, K)});
  rows.push_back({at_k("D_{2k+2}", k),
                  Rational(K * K + K, Int(2)),
                  Rational(5 * K * K + 3 * K, Int(2)),
                  Rational(4 * K * K + 5 * K),
                  Rational(3 * K + 7, 8 * K + 10),
                  Rational(8 * K + 10, K + 1)});
  return rows;
}

std::vector<FormRow> character_fixed_rows() {
  std::vector<FormRow> rows;
  rows.push_back({"E6", Rational(8), Rational(33), Rational(71), rat(38, 71), rat(71, 8)});
  rows.push_back({"E7", Rational(7), Rational(31), Rational(60), rat(29, 60), rat(60, 7)});
  rows.push_back({"E8", Rational(14), Rational(63), Rational(119), rat(8, 17), rat(17, 2)});
  rows.push_back({"y^3-x^6", Rational(7), Rational(34), Rational(57), rat(23, 57), rat(57, 7)});
  rows.push_back(
      {"y^3-x^7", Rational(31), Rational(152), Rational(251), rat(99, 251), rat(251, 31)});
  rows.push_back(
      {"y^3-x^8", Rational(42), Rational(211), Rational(335), rat(124, 335), rat(335, 42)});
  // Ribbon row at (g, ell) = (4, 1): c = ell - (g-1)/2 = -1/2, with
  // lambda = g*c, lambda2 = (5g-4)*c, delta = (8g+4)*c, alpha =
  // (3g+8)/(8g+4), slope = 8 + 4/g.
  rows.push_back({"ribbon(g=4,l=1)", Rational(-2), Rational(-8), Rational(-18), rat(5, 9),
                  Rational(9)});
  return rows;
}

std::vector<FormRow> dangling_forms(long k) {
  const Int K(k);
  std::vector<FormRow> rows;
  rows.push_back({at_k("A_{2k}^{}", k),
                  Rational(K * K),
                  Rational(5 * K * K - 4 * K),
                  Rational(8 * K * K + 4 * K),
                  Rational(3 * K * K + 8 * K, 8 * K * K + 4 * K),
                  Rational(8 * K + 4, K)});
  rows.push_back({at_k("A_{2k+1}^{}", k),
                  Rational(K * K + K, Int(2)),
                  Rational(5 * K * K + K - 4, Int(2)),
                  Rational(4 * K * K + 6 * K + 2),
                  Rational(3 * K * K + 11 * K + 8, 8 * K * K + 12 * K + 4),
                  Rational(8 * K * K + 12 * K + 4, K * K + K)});
  rows.push_back({at_k("A_{2k+1}^{1}", k),
                  Rational(K * K + K, Int(2)),
                  Rational(5 * K * K + K - 2, Int(2)),
                  Rational(4 * K * K + 6 * K + 1),
                  Rational(3 * K * K + 11 * K + 4, 8 * K * K + 12 * K + 2),
                  Rational(8 * K * K + 12 * K + 2, K * K + K)});
  rows.push_back({at_k("D_{2k+1}^{1}", k),
                  Rational(K * K),
                  Rational(5 * K * K - 2 * K - 1),
                  Rational(8 * K * K + 2 * K + 1),
                  Rational(3 * K * K + 4 * K + 2, 8 * K * K + 2 * K + 1),
                  Rational(8 * K * K + 2 * K + 1, K * K)});
  rows.push_back({at_k("D_{2k+2}^{1}", k),
                  Rational(K * K + K, Int(2)),
                  Rational(5 * K * K + 3 * K - 4, Int(2)),
                  Rational(4 * K * K + 5 * K + 2),
                  Rational(3 * K * K + 7 * K + 8, 8 * K * K + 10 * K + 4),
                  Rational(8 * K * K + 10 * K + 4, K * K + K)});
  rows.push_back({at_k("D_{2k+2}^{1,2}", k),
                  Rational(K * K + K, Int(2)),
                  Rational(5 * K * K + 3 * K - 2, Int(2)),
                  Rational(4 * K * K + 5 * K + 1),
                  Rational(3 * K * K + 7 * K + 4, 8 * K * K + 10 * K + 2),
                  Rational(8 * K * K + 10 * K + 2, K * K + K)});
  return rows;
}

std::vector<FormRow> dangling_fixed_rows() {
  std::vector<FormRow> rows;
  rows.push_back({"E6^{}", Rational(8), Rational(32), Rational(72), rat(5, 9), Rational(9)});
  rows.push_back({"E7^{1}", Rational(7), Rational(30), Rational(61), rat(31, 61), rat(61, 7)});
  rows.push_back({"E8^{}", Rational(14), Rational(62), Rational(120), rat(29, 60), rat(60, 7)});
  return rows;
}

std::vector<FormRow> chain_forms(long i, long j) {
  const Int I(i), J(j);
  std::vector<FormRow> rows;
  rows.push_back({"A_{" + std::to_string(2 * i + 1) + "/" + std::to_string(2 * j + 1) + "}",
                  Rational(J * J + J - I * I - I, Int(2)),
                  std::nullopt,
                  Rational(4 * J * J + 6 * J - 4 * I * I - 6 * I + 1),
                  std::nullopt,
                  std::nullopt});
  rows.push_back({"A_{" + std::to_string(2 * i + 1) + "/" + std::to_string(2 * j) + "}",
                  Rational(J * J - (I * I + I) / 2),
                  std::nullopt,
                  Rational(8 * J * J + 4 * J - 4 * I * I - 6 * I - 1),
                  std::nullopt,
                  std::nullopt});
  return rows;
}

std::vector<std::pair<std::string, Rational>> predicted_alphas() {
  return {
      {"A_2", rat(9, 11)},     {"A_3", rat(7, 10)},     {"A_4", rat(2, 3)},
      {"A_5^{1}", rat(19, 29)}, {"A_{3/4}", rat(19, 29)}, {"A_{3/5}", rat(12, 19)},
      {"A_5", rat(17, 28)},    {"A_6", rat(49, 83)},    {"A_7^{1}", rat(32, 55)},
      {"A_{3/6}", rat(42, 73)}, {"D_4", rat(5, 9)},      {"D_5", rat(5, 9)},
      {"D_6^{1,2}", rat(5, 9)}, {"A_{3/7}", rat(5, 9)},  {"A_{5/7}", rat(5, 9)},
      {"A_{5/6}", rat(5, 9)},  {"A_7", rat(5, 9)},
  };
}

}  // namespace golden
}  // namespace gmchar

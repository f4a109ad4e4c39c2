// singularities.cpp
#include "gmchar/singularities.hpp"

#include <numeric>

#include "gmchar/intersection.hpp"

namespace gmchar {

namespace {

void require_index(long k, const char* what) {
  if (k < 1) throw OutOfRange(std::string(what) + ": index must be >= 1");
}

// Gap-sequence validation shared by Unibranch and chi_unibranch: strictly
// increasing, b_1 = 1, symmetric about the Frobenius number 2k - 1.
void validate_gaps(const std::vector<long>& gaps) {
  if (gaps.empty() || gaps.front() != 1)
    throw AsymmetricGaps("gap sequence must start with b_1 = 1");
  for (size_t i = 1; i < gaps.size(); ++i)
    if (gaps[i] <= gaps[i - 1]) throw AsymmetricGaps("gap sequence must be strictly increasing");
  if (!is_symmetric(gaps)) throw AsymmetricGaps("gap sequence is not symmetric");
}

void validate_ribbon(long g, long ell) {
  if (g < 3) throw OutOfRange("ribbon: g must be >= 3");
  if (ell < 1 || ell > g - 2) throw OutOfRange("ribbon: ell must lie in [1, g-2]");
}

void validate_chain(long i, long j) {
  if (i < 1 || j <= i) throw OutOfRange("chain: indices must satisfy j > i >= 1");
}

}  // namespace

SingularityModel SingularityModel::a_even(long k) {
  require_index(k, "A_even");
  SingularityModel m;
  m.family = Family::AEven;
  m.k = k;
  return m;
}

SingularityModel SingularityModel::a_odd(long k) {
  require_index(k, "A_odd");
  SingularityModel m;
  m.family = Family::AOdd;
  m.k = k;
  return m;
}

SingularityModel SingularityModel::d_odd(long k) {
  require_index(k, "D_odd");
  SingularityModel m;
  m.family = Family::DOdd;
  m.k = k;
  return m;
}

SingularityModel SingularityModel::d_even(long k) {
  require_index(k, "D_even");
  SingularityModel m;
  m.family = Family::DEven;
  m.k = k;
  return m;
}

SingularityModel SingularityModel::e6() { return SingularityModel{.family = Family::E6}; }
SingularityModel SingularityModel::e7() { return SingularityModel{.family = Family::E7}; }
SingularityModel SingularityModel::e8() { return SingularityModel{.family = Family::E8}; }

SingularityModel SingularityModel::toric(long p, long q, long b) {
  family_toric(p, q, b);  // validates (p, q, b)
  SingularityModel m;
  m.family = Family::Toric;
  m.p = p;
  m.q = q;
  m.b = b;
  return m;
}

SingularityModel SingularityModel::unibranch(std::vector<long> gaps) {
  validate_gaps(gaps);
  SingularityModel m;
  m.family = Family::Unibranch;
  m.gaps = std::move(gaps);
  return m;
}

SingularityModel SingularityModel::elliptic_mfold(long m_) {
  require_index(m_, "elliptic m-fold");
  SingularityModel m;
  m.family = Family::EllipticMFold;
  m.m = m_;
  return m;
}

SingularityModel SingularityModel::ribbon(long g, long ell) {
  validate_ribbon(g, ell);
  SingularityModel m;
  m.family = Family::Ribbon;
  m.g = g;
  m.ell = ell;
  return m;
}

SingularityModel SingularityModel::chain_odd_odd(long i, long j) {
  validate_chain(i, j);
  SingularityModel m;
  m.family = Family::ChainOddOdd;
  m.i = i;
  m.j = j;
  return m;
}

SingularityModel SingularityModel::chain_odd_even(long i, long j) {
  validate_chain(i, j);
  SingularityModel m;
  m.family = Family::ChainOddEven;
  m.i = i;
  m.j = j;
  return m;
}

int SingularityModel::branch_count() const {
  switch (family) {
    case Family::AEven:
    case Family::E6:
    case Family::E8:
    case Family::Unibranch:
      return 1;
    case Family::AOdd:
    case Family::DOdd:
    case Family::E7:
      return 2;
    case Family::DEven:
      return 3;
    case Family::Toric:
      return static_cast<int>(b);
    case Family::EllipticMFold:
      return static_cast<int>(m);
    case Family::Ribbon:
      return 0;
    case Family::ChainOddOdd:
    case Family::ChainOddEven:
      return 1;
  }
  throw DomainError("branch_count: unknown family");
}

std::vector<Int> SingularityModel::node_weights() const {
  switch (family) {
    case Family::AEven:
    case Family::E6:
    case Family::E8:
    case Family::Unibranch:
      return {Int(1)};
    case Family::AOdd:
      return {Int(1), Int(1)};
    case Family::DOdd:
      return {Int(2 * k - 1), Int(1)};
    case Family::DEven:
      return {Int(k), Int(1), Int(1)};
    case Family::E7:
      return {Int(2), Int(1)};
    case Family::Toric:
      return std::vector<Int>(static_cast<size_t>(b), Int(1));
    default:
      throw MissingClosedForm("node_weights: not catalogued for " + label());
  }
}

Int SingularityModel::singular_delta_weight() const {
  switch (family) {
    case Family::AEven:
      return Int(8) * k * k + 4 * k;  // = 2 (2k+1)(2k), weight of disc(y^2 - x^(2k+1))
    case Family::AOdd:
      return Int(2 * k + 1) * (2 * k + 2);
    case Family::DOdd:
      return Int(8) * k * k + 4 * k;
    case Family::DEven:
      return Int(2 * k + 1) * (2 * k + 2);
    case Family::E6:
      return Int(72);
    case Family::E7:
      return Int(63);
    case Family::E8:
      return Int(120);
    case Family::Unibranch: {
      // 12 sum(b_i) - (2k-1)^2 + 1 for genus k = #gaps
      const Int s = sum_of_gaps(gaps);
      const Int f = 2 * Int(gaps.size()) - 1;
      return 12 * s - f * f + 1;
    }
    case Family::Toric: {
      if (b == 1) {
        SingularityModel u = unibranch(gaps_two_generated(p, q).gaps);
        return u.singular_delta_weight();
      }
      return family_toric(p, q, b).delta0.num();
    }
    default:
      throw MissingClosedForm("singular_delta_weight: not catalogued for " + label());
  }
}

std::string SingularityModel::label() const {
  switch (family) {
    case Family::AEven:
      return "A_" + std::to_string(2 * k);
    case Family::AOdd:
      return "A_" + std::to_string(2 * k + 1);
    case Family::DOdd:
      return "D_" + std::to_string(2 * k + 1);
    case Family::DEven:
      return "D_" + std::to_string(2 * k + 2);
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
    case Family::E8:
      return "E8";
    case Family::Toric:
      return "T(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(b) + ")";
    case Family::Unibranch: {
      std::string s = "U{";
      for (size_t i = 0; i < gaps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(gaps[i]);
      }
      return s + "}";
    }
    case Family::EllipticMFold:
      return "elliptic " + std::to_string(m) + "-fold";
    case Family::Ribbon:
      return "ribbon(g=" + std::to_string(g) + ",l=" + std::to_string(ell) + ")";
    case Family::ChainOddOdd:
      return "A_{" + std::to_string(2 * i + 1) + "/" + std::to_string(2 * j + 1) + "}";
    case Family::ChainOddEven:
      return "A_{" + std::to_string(2 * i + 1) + "/" + std::to_string(2 * j) + "}";
  }
  throw DomainError("label: unknown family");
}

AttachmentConfig AttachmentConfig::all_of(const SingularityModel& m) {
  AttachmentConfig a;
  for (int i = 1; i <= m.branch_count(); ++i) a.attached.insert(i);
  return a;
}

namespace {

Int catalog_chi_lambda(const SingularityModel& model) {
  switch (model.family) {
    case Family::AEven:
    case Family::DOdd:
      return Int(model.k) * model.k;
    case Family::AOdd:
    case Family::DEven:
      return exact_div(Int(model.k) * (model.k + 1), 2);
    case Family::E6:
      return Int(8);
    case Family::E7:
      return Int(7);
    case Family::E8:
      return Int(14);
    case Family::Unibranch:
      return sum_of_gaps(model.gaps);
    case Family::Toric: {
      if (model.b == 1) return sum_of_gaps_closed_form(model.p, model.q);
      Rational l = family_toric(model.p, model.q, model.b).lambda;
      if (!l.is_integer()) throw DomainError("toric chi_lambda is not integral");
      return l.num();
    }
    default:
      throw MissingClosedForm("chi_lambda: not catalogued for " + model.label());
  }
}

Character chi_from_delta_catalog(const SingularityModel& model, const AttachmentConfig& attach) {
  const int n = model.branch_count();
  for (int i : attach.attached)
    if (i < 1 || i > n) throw InvalidSubset("attachment subset exceeds branch range");
  const std::vector<Int> w = model.node_weights();
  const Int delta_weight = model.singular_delta_weight();

  DeltaParts parts;
  parts[0] = delta_weight;
  if (attach.node_classes) {
    if (attach.node_classes->size() != attach.attached.size())
      throw InvalidSubset("node_classes size must match attachment subset");
    size_t pos = 0;
    for (int i : attach.attached) {
      long cls = (*attach.node_classes)[pos++];
      if (cls < 0) throw InvalidSubset("node class must be >= 0");
      parts[cls] -= w[static_cast<size_t>(i - 1)];
    }
  } else {
    for (int i : attach.attached) parts[0] -= w[static_cast<size_t>(i - 1)];
  }

  Int chi_delta = 0;
  for (const auto& [h, v] : parts) chi_delta += v;

  const Int lambda = catalog_chi_lambda(model);
  return Character::from_lambda_delta(lambda, chi_delta, std::move(parts));
}

}  // namespace

Character chi_family(const SingularityModel& model, const AttachmentConfig& attach) {
  switch (model.family) {
    case Family::AEven:
    case Family::AOdd:
    case Family::DOdd:
    case Family::DEven:
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::Toric:
    case Family::Unibranch:
      return chi_from_delta_catalog(model, attach);
    case Family::EllipticMFold: {
      if (attach.attached != AttachmentConfig::all_of(model).attached)
        throw MissingClosedForm("elliptic m-fold: only the fully attached form is catalogued");
      return chi_elliptic_mfold(model.m);
    }
    case Family::Ribbon: {
      if (!attach.attached.empty())
        throw InvalidSubset("ribbon: no branches to attach");
      return chi_ribbon(model.g, model.ell);
    }
    case Family::ChainOddOdd:
    case Family::ChainOddEven: {
      if (attach.attached != std::set<int>{1})
        throw MissingClosedForm("chain: only the attached form is catalogued");
      return chi_chain(model);
    }
  }
  throw DomainError("chi_family: unknown family");
}

Character chi_unibranch(const std::vector<long>& gaps, bool attached) {
  validate_gaps(gaps);
  const Int s = sum_of_gaps(gaps);
  const Int f = 2 * Int(gaps.size()) - 1;  // Frobenius number 2k - 1
  Int lambda2 = f * f + s;
  if (!attached) lambda2 -= 1;
  return Character::from_lambda_lambda2(s, lambda2);
}

Character chi_ribbon(long g, long ell) {
  validate_ribbon(g, ell);
  // H^0(omega): weights k - g + ell + 1, k = 0..g-1.
  Int lambda = 0;
  for (long k = 0; k < g; ++k) lambda += k - g + ell + 1;
  // H^0(omega^2): weights 2*ell - j (j = 0..2g-2) and ell - i (i = 1..g-2).
  Int lambda2 = 0;
  for (long j = 0; j <= 2 * g - 2; ++j) lambda2 += 2 * ell - j;
  for (long i = 1; i <= g - 2; ++i) lambda2 += ell - i;
  // c = ell - (g-1)/2 may be half-integral; the closed forms g*c and
  // (5g-4)*c are exact over the rationals.
  const Rational c(2 * ell - g + 1, 2);
  if (Rational(lambda) != Rational(g) * c || Rational(lambda2) != Rational(5 * g - 4) * c)
    throw DomainError("ribbon weight sums disagree with closed form");
  return Character::from_lambda_lambda2(lambda, lambda2);
}

Rational n_ribbon_delta_ratio(long g, long n) {
  if (g < 1 || n < 2) throw OutOfRange("n_ribbon_delta_ratio: need g >= 1, n >= 2");
  if ((2 * g) % (n - 1) != 0)
    throw DivisibilityViolation("n_ribbon_delta_ratio: (n-1) must divide 2g");
  const Int N(n), G(g);
  return Rational(12 * (2 * G + N - 1) * N, N * N + (4 * G - 3) * N + 2 - 2 * G);
}

NRibbonComparison n_ribbon_toric_comparison(long g, long n) {
  NRibbonComparison cmp;
  cmp.ratio = n_ribbon_delta_ratio(g, n);
  cmp.p = n;
  cmp.q = 2 * g / (n - 1) + 1;
  if (cmp.p >= 2 && cmp.q >= 2 && std::gcd(cmp.p, cmp.q) == 1) {
    const auto gaps = gaps_two_generated(cmp.p, cmp.q).gaps;
    cmp.slope_isolated = slope(chi_unibranch(gaps, false));
    cmp.slope_attached = slope(chi_unibranch(gaps, true));
  }
  return cmp;
}

Character chi_elliptic_mfold(long m) {
  require_index(m, "elliptic m-fold");
  return Character::from_lambda_lambda2(Int(1), Int(m + 1));
}

Character chi_chain(const SingularityModel& model) {
  validate_chain(model.i, model.j);
  const Int I(model.i), J(model.j);
  Int lambda, delta;
  if (model.family == Family::ChainOddOdd) {
    lambda = exact_div(J * J + J - I * I - I, 2);
    delta = 4 * J * J + 6 * J - 4 * I * I - 6 * I + 1;
  } else if (model.family == Family::ChainOddEven) {
    lambda = J * J - exact_div(I * I + I, 2);
    delta = 8 * J * J + 4 * J - 4 * I * I - 6 * I - 1;
  } else {
    throw DomainError("chi_chain: not a chain model");
  }
  return Character::from_lambda_delta(lambda, delta);
}

Int chi_lambda2_direct(const SingularityModel& model) {
  switch (model.family) {
    case Family::AEven: {
      // Attached curve: weights 2k + 2i (i = 0..k-1) and i (i = 0..2k-2).
      Int s = 0;
      for (long i = 0; i < model.k; ++i) s += 2 * model.k + 2 * i;
      for (long i = 0; i <= 2 * model.k - 2; ++i) s += i;
      return s;
    }
    case Family::DEven: {
      // Attached curve: weights i (i = 0..2k) and i (i = 0..k).
      Int s = 0;
      for (long i = 0; i <= 2 * model.k; ++i) s += i;
      for (long i = 0; i <= model.k; ++i) s += i;
      return s;
    }
    case Family::Unibranch: {
      // Isolated curve: weights 2*b_k - j over j in [0, 2*b_k - 2] minus
      // gaps.  This list matches 13*lambda - delta only from genus 2 up:
      // at genus 1 ({1}, the <2,3> cusp) the single gap falls outside the
      // monomial range, so that case is not catalogued here.
      validate_gaps(model.gaps);
      if (model.gaps.size() < 2)
        throw MissingClosedForm("chi_lambda2_direct: unibranch weight list needs genus >= 2");
      const long bk = model.gaps.back();
      std::vector<char> is_gap(static_cast<size_t>(2 * bk - 1), 0);
      for (long g : model.gaps) is_gap[static_cast<size_t>(g)] = 1;
      Int s = 0;
      for (long j = 0; j <= 2 * bk - 2; ++j)
        if (!is_gap[static_cast<size_t>(j)]) s += 2 * bk - j;
      return s;
    }
    case Family::Ribbon:
      return chi_ribbon(model.g, model.ell).chi_lambda2();
    default:
      throw MissingClosedForm("chi_lambda2_direct: no weight list catalogued for " + model.label());
  }
}

}  // namespace gmchar

// tables.cpp
#include "gmchar/tables.hpp"

#include "gmchar/singularities.hpp"

namespace gmchar {

std::optional<Rational> TableRow::column(const std::string& name) const {
  for (const auto& [n, v] : columns)
    if (n == name) return v;
  return std::nullopt;
}

namespace {

TableRow character_row(std::string label, const Character& c) {
  TableRow row;
  row.label = std::move(label);
  row.columns.emplace_back("lambda", Rational(c.chi_lambda()));
  row.columns.emplace_back("lambda2", Rational(c.chi_lambda2()));
  row.columns.emplace_back("delta", Rational(c.chi_delta()));
  row.columns.emplace_back("alpha", *alpha_value(c).value);
  row.columns.emplace_back("slope", slope(c));
  return row;
}

TableRow lambda_delta_row(std::string label, const Character& c) {
  TableRow row;
  row.label = std::move(label);
  row.columns.emplace_back("lambda", Rational(c.chi_lambda()));
  row.columns.emplace_back("delta", Rational(c.chi_delta()));
  return row;
}

Character attached(const SingularityModel& m) {
  return chi_family(m, AttachmentConfig::all_of(m));
}

Character with_subset(const SingularityModel& m, std::initializer_list<int> s) {
  return chi_family(m, AttachmentConfig::subset(s));
}

std::string at_k(const char* base, long k) {
  return std::string(base) + " k=" + std::to_string(k);
}

void require_k_max(long k_max) {
  if (k_max < 1) throw OutOfRange("emit_table: k_max must be >= 1");
}

}  // namespace

std::vector<TableRow> emit_table_characters(long k_max) {
  require_k_max(k_max);
  std::vector<TableRow> rows;
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("A_{2k}", k), attached(SingularityModel::a_even(k))));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("A_{2k+1}", k), attached(SingularityModel::a_odd(k))));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("D_{2k+1}", k), attached(SingularityModel::d_odd(k))));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("D_{2k+2}", k), attached(SingularityModel::d_even(k))));
  rows.push_back(character_row("E6", attached(SingularityModel::e6())));
  rows.push_back(character_row("E7", attached(SingularityModel::e7())));
  rows.push_back(character_row("E8", attached(SingularityModel::e8())));
  rows.push_back(character_row("y^3-x^6", attached(SingularityModel::toric(2, 1, 3))));
  rows.push_back(character_row("y^3-x^7", attached(SingularityModel::toric(3, 7, 1))));
  rows.push_back(character_row("y^3-x^8", attached(SingularityModel::toric(3, 8, 1))));
  rows.push_back(character_row("ribbon(g=4,l=1)", chi_ribbon(4, 1)));
  return rows;
}

std::vector<TableRow> emit_table_dangling(long k_max) {
  require_k_max(k_max);
  std::vector<TableRow> rows;
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("A_{2k}^{}", k),
                                 with_subset(SingularityModel::a_even(k), {})));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("A_{2k+1}^{}", k),
                                 with_subset(SingularityModel::a_odd(k), {})));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("A_{2k+1}^{1}", k),
                                 with_subset(SingularityModel::a_odd(k), {1})));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("D_{2k+1}^{1}", k),
                                 with_subset(SingularityModel::d_odd(k), {1})));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("D_{2k+2}^{1}", k),
                                 with_subset(SingularityModel::d_even(k), {1})));
  for (long k = 1; k <= k_max; ++k)
    rows.push_back(character_row(at_k("D_{2k+2}^{1,2}", k),
                                 with_subset(SingularityModel::d_even(k), {1, 2})));
  rows.push_back(character_row("E6^{}", with_subset(SingularityModel::e6(), {})));
  rows.push_back(character_row("E7^{1}", with_subset(SingularityModel::e7(), {1})));
  rows.push_back(character_row("E8^{}", with_subset(SingularityModel::e8(), {})));
  for (long i = 1; i <= k_max; ++i)
    for (long j = i + 1; j <= k_max + 1; ++j) {
      SingularityModel m = SingularityModel::chain_odd_odd(i, j);
      rows.push_back(lambda_delta_row(m.label(), chi_chain(m)));
    }
  for (long i = 1; i <= k_max; ++i)
    for (long j = i + 1; j <= k_max + 1; ++j) {
      SingularityModel m = SingularityModel::chain_odd_even(i, j);
      rows.push_back(lambda_delta_row(m.label(), chi_chain(m)));
    }
  return rows;
}

std::vector<TableRow> emit_predictions() {
  struct Entry {
    std::string label;
    Character chi;
  };
  const std::vector<Entry> entries = {
      {"A_2", attached(SingularityModel::a_even(1))},
      {"A_3", attached(SingularityModel::a_odd(1))},
      {"A_4", attached(SingularityModel::a_even(2))},
      {"A_5^{1}", with_subset(SingularityModel::a_odd(2), {1})},
      {"A_{3/4}", chi_chain(SingularityModel::chain_odd_even(1, 2))},
      {"A_{3/5}", chi_chain(SingularityModel::chain_odd_odd(1, 2))},
      {"A_5", attached(SingularityModel::a_odd(2))},
      {"A_6", attached(SingularityModel::a_even(3))},
      {"A_7^{1}", with_subset(SingularityModel::a_odd(3), {1})},
      {"A_{3/6}", chi_chain(SingularityModel::chain_odd_even(1, 3))},
      {"D_4", attached(SingularityModel::d_even(1))},
      {"D_5", attached(SingularityModel::d_odd(2))},
      {"D_6^{1,2}", with_subset(SingularityModel::d_even(2), {1, 2})},
      {"A_{3/7}", chi_chain(SingularityModel::chain_odd_odd(1, 3))},
      {"A_{5/7}", chi_chain(SingularityModel::chain_odd_odd(2, 3))},
      {"A_{5/6}", chi_chain(SingularityModel::chain_odd_even(2, 3))},
      {"A_7", attached(SingularityModel::a_odd(3))},
  };
  std::vector<TableRow> rows;
  for (const auto& e : entries) {
    TableRow row;
    row.label = e.label;
    row.columns.emplace_back("alpha", *alpha_value(e.chi).value);
    if (e.label == "A_{5/6}")
      row.note = "WARN: predicted 5/9, chain closed form gives " +
                 alpha_value(e.chi).value->str();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gmchar

// golden_forms.hpp: closed-form table entries as polynomial expressions
// in the series index, transcribed independently of the catalog route.
// Used only as cross-check oracles; the emitters never read these.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmchar/rational.hpp"

namespace gmchar {
namespace golden {

struct FormRow {
  std::string label;
  Rational lambda;
  std::optional<Rational> lambda2;
  Rational delta;
  std::optional<Rational> alpha;
  std::optional<Rational> slope;
};

// Attached-family table at index k (labels match emit_table_characters).
std::vector<FormRow> character_forms(long k);
// Fixed rows of the attached-family table.
std::vector<FormRow> character_fixed_rows();
// Partially attached series at index k (labels match emit_table_dangling).
std::vector<FormRow> dangling_forms(long k);
// Fixed rows of the dangling table.
std::vector<FormRow> dangling_fixed_rows();
// Chain rows at indices (i, j): lambda and delta only.
std::vector<FormRow> chain_forms(long i, long j);
// The seventeen alpha predictions in table order; the A_{5/6} entry
// carries the predicted value 5/9 (not the chain value).
std::vector<std::pair<std::string, Rational>> predicted_alphas();

}  // namespace golden
}  // namespace gmchar

// tables.hpp: the character, dangling-attachment and alpha-prediction
// tables, every entry recomputed through the catalog.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmchar/character.hpp"

namespace gmchar {

struct TableRow {
  std::string label;
  std::vector<std::pair<std::string, Rational>> columns;
  std::string note;  // nonempty only on flagged rows

  std::optional<Rational> column(const std::string& name) const;
};

// Character table of the attached singularity families: the four A/D
// series instantiated at k = 1..k_max, then E6, E7, E8, the monomial
// curves y^3 = x^6, x^7, x^8, and the genus-4, ell = 1 ribbon.  Columns:
// lambda, lambda2, delta, alpha, slope.
std::vector<TableRow> emit_table_characters(long k_max);

// Dangling-attachment table: the six partially attached A/D series at
// k = 1..k_max, the fixed E6^{}, E7^{1}, E8^{} rows, then the dangling
// chains A_{2i+1/2j+1} and A_{2i+1/2j} for 1 <= i < j <= k_max + 1
// (lambda and delta columns only).
std::vector<TableRow> emit_table_dangling(long k_max);

// alpha-value predictions for the low-alpha singularity types, each
// recomputed from its catalog model.  The A_{5/6} row is flagged: the
// chain closed forms give 32/55 where the prediction list says 5/9.
std::vector<TableRow> emit_predictions();

}  // namespace gmchar

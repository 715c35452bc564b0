#pragma once

#include "dp2/adetype.hpp"
#include "dp2/rational.hpp"

#include <optional>
#include <vector>

namespace dp2 {

// One row of the classification of singular Du Val del Pezzo surfaces of
// degree 2: singularity type, number of lines, delta invariant.
// `lines` is the printed value; `model_lines` the count forced by the
// lattice (they differ for exactly two rows, A2 and A2+A1, where the
// printed counts 31 and 20 are off; the enumeration gives 32 and 24).
struct TableRow {
    AdeType type;
    int lines = 0;
    int model_lines = 0;
    Rat delta;
};

// All 45 rows, in table order (six types occur with two line counts).
const std::vector<TableRow>& main_table();

std::vector<const TableRow*> rows_for_type(const AdeType& type);
const TableRow* find_row(const AdeType& type, std::optional<int> lines);

}  // namespace dp2

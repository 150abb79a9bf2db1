#pragma once

#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix identity_matrix(int size);

/// In-place reduced row echelon form.  Pivot columns are searched in the
/// order given by col_order (every column must appear exactly once).
/// Returns (row, column) pivots in elimination order.
std::vector<std::pair<int, int>> rref(RatMatrix& m, const std::vector<int>& col_order);

/// rref with the natural column order 0..cols-1.
std::vector<std::pair<int, int>> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Basis of {v : m v = 0}, one vector per free column, deterministic.
std::vector<std::vector<Rat>> kernel_basis(RatMatrix m);

} // namespace hilb

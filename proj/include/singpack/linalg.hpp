#pragma once

#include "singpack/rational.hpp"

#include <vector>

namespace singpack {

/// Dense exact-rational matrix, row major. Small sizes only.
using RationalMatrix = std::vector<RationalVec>;

/// Reduced row echelon form in place. Returns the pivot columns.
std::vector<int> rref(RationalMatrix& m);

int matrix_rank(RationalMatrix m);

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// in ascending free-column order (the free coordinate is set to 1).
std::vector<RationalVec> kernel_basis(RationalMatrix m);

RationalVec mat_vec(const RationalMatrix& m, const RationalVec& x);

} // namespace singpack

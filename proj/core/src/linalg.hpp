#pragma once

#include "nambu/rational.hpp"

#include <cstddef>
#include <vector>

namespace nambu::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns. Zero rows are
/// dropped.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols);

/// Basis of {v : M v = 0}, returned in reduced row echelon form.
Matrix nullspace(Matrix m, std::size_t cols);

} // namespace nambu::detail

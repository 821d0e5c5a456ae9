#pragma once

#include "asa/matrix.hpp"

#include <vector>

namespace asa {

/// Smith normal form: left * M * right == diag(diagonal) (padded with zeros
/// to M's shape). The diagonal has min(rows, cols) nonnegative entries forming
/// a divisor chain; zeros come last.
struct SnfResult {
    std::vector<BigInt> diagonal;
    IntegerMatrix left_transform;
    IntegerMatrix right_transform;
    /// Inverse of right_transform; lets callers express kernel vectors in
    /// the right_transform basis without a second solve.
    IntegerMatrix right_inverse;

    std::size_t rank() const;
};

struct SnfOptions {
    bool track_left = true;
    bool track_right = true;
};

/// Pivot is the entry of smallest nonzero absolute value in the active block,
/// ties broken by row-major position. Deterministic.
SnfResult smith_normal_form(const IntegerMatrix& m, SnfOptions options = {});

/// Lattice of integer vectors v with m * v == 0, as columns of the result.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

} // namespace asa

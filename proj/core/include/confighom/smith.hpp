#pragma once

#include "confighom/int_matrix.hpp"
#include "confighom/integers.hpp"

#include <cstddef>
#include <vector>

namespace confighom {

// Diagonal of the Smith normal form of an integer matrix.
// Invariants: diagonal has length min(rows, cols), entries are nonnegative,
// each nonzero entry divides the next, and all zeros come last.
struct SmithResult {
    std::vector<Int> diagonal;
    std::size_t rank = 0; // number of nonzero diagonal entries
};

SmithResult smith_normal_form(IntMatrix a);

// Rank of the matrix over Q (= number of nonzero invariant factors).
std::size_t integer_rank(const IntMatrix& a);

// Rank over the field with `p` elements: nonzero invariant factors not
// divisible by p still contribute, the rest die.
std::size_t rank_mod_p(const IntMatrix& a, std::int64_t p);

} // namespace confighom

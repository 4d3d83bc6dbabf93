#pragma once

#include "confighom/coefficients.hpp"
#include "confighom/graded_group.hpp"
#include "confighom/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace confighom {

// Finite chain complex of free abelian groups in nonnegative degrees.
// boundary(q) maps degree q to degree q-1; construction checks shapes and
// that consecutive boundaries compose to zero.
class ChainComplex {
public:
    // dims[q] = number of basis cells in degree q (trailing zeros allowed);
    // boundaries[q-1] = matrix of boundary(q), shape dims[q-1] x dims[q].
    static ChainComplex create(std::vector<std::size_t> dims,
                               std::vector<IntMatrix> boundaries);

    std::size_t top_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
    std::size_t dim(std::size_t q) const { return q < dims_.size() ? dims_[q] : 0; }
    std::size_t total_cells() const;

    // Zero matrix of the right shape when q is 0 or beyond the top.
    IntMatrix boundary(std::size_t q) const;

    // Optional cell labels, one list per degree, parallel to the bases.
    void set_labels(std::vector<std::vector<std::string>> labels);
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }

    GradedGroup homology(const Coefficients& coeffs, bool reduced = false) const;

private:
    ChainComplex() = default;
    std::vector<std::size_t> dims_;
    std::vector<IntMatrix> boundaries_; // boundaries_[q-1] is boundary(q)
    std::vector<std::vector<std::string>> labels_;
};

// Cells of a subcomplex, one sorted index list per degree. Degrees past the
// list are treated as empty.
using SubcomplexCells = std::vector<std::vector<std::size_t>>;

// Complex computing homology relative to the given subcomplex, obtained by
// deleting its cells. Rejects cell sets that are not boundary-closed.
ChainComplex quotient_complex(const ChainComplex& total,
                              const SubcomplexCells& sub);

GradedGroup relative_homology(const ChainComplex& total,
                              const SubcomplexCells& sub,
                              const Coefficients& coeffs);

} // namespace confighom

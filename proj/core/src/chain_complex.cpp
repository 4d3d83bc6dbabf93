#include "confighom/chain_complex.hpp"

#include "confighom/smith.hpp"

#include <algorithm>
#include <numeric>

namespace confighom {

ChainComplex ChainComplex::create(std::vector<std::size_t> dims,
                                  std::vector<IntMatrix> boundaries) {
    if (dims.empty()) dims.push_back(0);
    if (boundaries.size() + 1 != dims.size())
        throw ValidationError("need exactly one boundary matrix per positive degree");
    for (std::size_t q = 1; q < dims.size(); ++q) {
        const IntMatrix& d = boundaries[q - 1];
        if (d.rows() != dims[q - 1] || d.cols() != dims[q])
            throw ValidationError("boundary(" + std::to_string(q) +
                                  ") has shape " + std::to_string(d.rows()) + "x" +
                                  std::to_string(d.cols()) + ", expected " +
                                  std::to_string(dims[q - 1]) + "x" +
                                  std::to_string(dims[q]));
    }
    for (std::size_t q = 2; q < dims.size(); ++q)
        if (!IntMatrix::multiply(boundaries[q - 2], boundaries[q - 1]).is_zero())
            throw ValidationError("boundary(" + std::to_string(q - 1) +
                                  ") o boundary(" + std::to_string(q) +
                                  ") is nonzero");
    ChainComplex c;
    c.dims_ = std::move(dims);
    c.boundaries_ = std::move(boundaries);
    return c;
}

std::size_t ChainComplex::total_cells() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

IntMatrix ChainComplex::boundary(std::size_t q) const {
    if (q >= 1 && q < dims_.size()) return boundaries_[q - 1];
    return IntMatrix(dim(q == 0 ? 0 : q - 1), dim(q));
}

void ChainComplex::set_labels(std::vector<std::vector<std::string>> labels) {
    if (labels.size() != dims_.size())
        throw ValidationError("label lists must cover every degree");
    for (std::size_t q = 0; q < dims_.size(); ++q)
        if (labels[q].size() != dims_[q])
            throw ValidationError("degree " + std::to_string(q) +
                                  " has " + std::to_string(dims_[q]) +
                                  " cells but " + std::to_string(labels[q].size()) +
                                  " labels");
    labels_ = std::move(labels);
}

GradedGroup ChainComplex::homology(const Coefficients& coeffs, bool reduced) const {
    GradedGroup out(coeffs, reduced);

    // rank of boundary(q) over the chosen ring, q = 0 .. top+1
    std::vector<std::size_t> ranks(dims_.size() + 1, 0);
    std::vector<SmithResult> smith(dims_.size() + 1);
    for (std::size_t q = 1; q < dims_.size(); ++q) {
        switch (coeffs.kind) {
            case Coefficients::Kind::Fp:
                ranks[q] = rank_mod_p(boundaries_[q - 1], coeffs.p);
                break;
            case Coefficients::Kind::Z:
                smith[q] = smith_normal_form(boundaries_[q - 1]);
                ranks[q] = smith[q].rank;
                break;
            case Coefficients::Kind::Q:
                ranks[q] = integer_rank(boundaries_[q - 1]);
                break;
        }
    }

    for (std::size_t q = 0; q < dims_.size(); ++q) {
        DegreeEntry e;
        e.rank = static_cast<long>(dims_[q]) - static_cast<long>(ranks[q]) -
                 static_cast<long>(ranks[q + 1]);
        if (e.rank < 0)
            throw ValidationError("rank bookkeeping went negative; complex invalid");
        if (coeffs.kind == Coefficients::Kind::Z && q + 1 < dims_.size())
            for (const Int& d : smith[q + 1].diagonal)
                if (d > 1) e.torsion.push_back(d);
        if (reduced && q == 0) {
            if (e.rank == 0 && total_cells() > 0)
                throw ValidationError("reduced degree 0 needs a connected component");
            if (total_cells() > 0) e.rank -= 1;
        }
        out.set_entry(static_cast<long>(q), std::move(e));
    }
    return out;
}

ChainComplex quotient_complex(const ChainComplex& total, const SubcomplexCells& sub) {
    const std::size_t degrees = total.top_degree() + 1;
    if (sub.size() > degrees)
        throw ValidationError("subcomplex lists a degree the complex lacks");

    // keep[q][i] says whether cell i of degree q survives; kept index maps
    // re-number the survivors.
    std::vector<std::vector<bool>> keep(degrees);
    std::vector<std::vector<std::size_t>> new_index(degrees);
    std::vector<std::size_t> dims(degrees, 0);
    for (std::size_t q = 0; q < degrees; ++q) {
        keep[q].assign(total.dim(q), true);
        if (q < sub.size()) {
            std::size_t prev = 0;
            bool first = true;
            for (std::size_t i : sub[q]) {
                if (i >= total.dim(q))
                    throw ValidationError("subcomplex cell index out of range");
                if (!first && i <= prev)
                    throw ValidationError("subcomplex cell lists must be sorted, unique");
                keep[q][i] = false;
                prev = i;
                first = false;
            }
        }
        new_index[q].assign(total.dim(q), 0);
        for (std::size_t i = 0; i < total.dim(q); ++i)
            if (keep[q][i]) new_index[q][i] = dims[q]++;
    }

    // Boundary-closed check: a deleted cell may not appear in the boundary of
    // a kept cell with the roles reversed, i.e. boundaries of deleted cells
    // must consist of deleted cells.
    for (std::size_t q = 1; q < degrees; ++q) {
        IntMatrix d = total.boundary(q);
        for (std::size_t j = 0; j < total.dim(q); ++j) {
            if (keep[q][j]) continue;
            for (std::size_t i = 0; i < total.dim(q - 1); ++i)
                if (d.at(i, j) != 0 && keep[q - 1][i])
                    throw ValidationError(
                        "subcomplex is not boundary-closed at degree " +
                        std::to_string(q));
        }
    }

    std::vector<IntMatrix> boundaries;
    for (std::size_t q = 1; q < degrees; ++q) {
        IntMatrix d = total.boundary(q);
        IntMatrix nd(dims[q - 1], dims[q]);
        for (std::size_t j = 0; j < total.dim(q); ++j) {
            if (!keep[q][j]) continue;
            for (std::size_t i = 0; i < total.dim(q - 1); ++i)
                if (keep[q - 1][i]) nd.at(new_index[q - 1][i], new_index[q][j]) = d.at(i, j);
        }
        boundaries.push_back(std::move(nd));
    }
    return ChainComplex::create(std::move(dims), std::move(boundaries));
}

GradedGroup relative_homology(const ChainComplex& total, const SubcomplexCells& sub,
                              const Coefficients& coeffs) {
    return quotient_complex(total, sub).homology(coeffs, false);
}

} // namespace confighom

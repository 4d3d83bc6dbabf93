#pragma once

#include "confighom/chain_complex.hpp"
#include "confighom/coefficients.hpp"
#include "confighom/graded_group.hpp"
#include "confighom/integers.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace confighom::spsym {

// One disc generator SP^power(D_disc) inside a cell. Indices are 1-based.
struct DiscPower {
    long disc = 1;
    long power = 1;
    auto operator<=>(const DiscPower&) const = default;
};

// Basis cell v0^rho * e_{i_1} * ... * e_{i_t} * SP^{s_1}D_{j_1} * ... of the
// symmetric-product complex of a two-complex with one 0-cell v0, circles e_i
// and discs D_j. Weight rho + t + sum(s) is the symmetric-product level; the
// cell dimension is t + 2 sum(s).
struct SymCell {
    long rho = 0;
    std::vector<long> circles;    // strictly increasing circle indices
    std::vector<DiscPower> discs; // strictly increasing disc indices

    long weight() const;
    long degree() const;
    std::string label() const;
    auto operator<=>(const SymCell&) const = default;
};

using Chain = std::map<SymCell, Int>;

std::string chain_to_string(const Chain& c);

// Star product. Circle generators anticommute and square to zero; disc
// generators commute, and equal-disc powers merge with a binomial factor:
// SP^s D * SP^t D = C(s+t, t) SP^{s+t} D.
Chain star_product(const SymCell& a, const SymCell& b);
Chain star_product(const Chain& a, const Chain& b);

// Boundary values for disc generators. Attaching chains give the boundary of
// SP^1 D_j on the circle basis. Boundaries of higher powers are either all
// zero or user-supplied per (disc, power); the complex builder checks that
// whatever is supplied still squares to zero.
struct BoundaryData {
    std::vector<std::vector<Int>> disc_attach; // [disc][circle]
    bool use_table = false;                    // false: zero rule for powers >= 2
    std::map<std::pair<long, long>, Chain> table; // (disc, power) -> chain
};

struct TwoComplexPresentation {
    long w = 0;          // number of circles
    long disc_count = 0; // number of 2-cells
    BoundaryData boundary;

    static TwoComplexPresentation point();
    static TwoComplexPresentation sphere(); // one disc on the point
    static TwoComplexPresentation wedge_of_circles(long w);
    static TwoComplexPresentation from_json_string(const std::string& text);

    void validate() const;
};

// All weight-n cells, sorted by (degree, cell order). With
// include_reduced_only, restrict to rho = 0: the basis of the quotient by the
// level-(n-1) subspace.
std::vector<SymCell> enumerate_cells(const TwoComplexPresentation& p, long n,
                                     bool include_reduced_only);

// Cellular chain complex of the level-n symmetric product (reduced: of the
// quotient by level n-1). Boundary extends the generator data through the
// star product by the graded Leibniz rule; d(v0) = d(e_i) = 0 since the
// complex has a single 0-cell.
ChainComplex sp_chain_complex(const TwoComplexPresentation& p, long n,
                              bool reduced);

// Closed form for the reduced level-n symmetric product of a closed oriented
// genus-g surface: the homology of its Jacobian 2g-torus shifted up by
// 2n - 2g. Valid for n >= 2g only; lower n is rejected.
GradedGroup mattuck_reduced_sp(long g, long n, const Coefficients& field);

// The level-(n-1) product includes into level n split-injectively on
// homology, so field Betti numbers must be degreewise monotone in the level.
struct MonotonicityReport {
    struct Entry {
        long n = 0;
        long q = 0;
        long prev_dim = 0;
        long cur_dim = 0;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

MonotonicityReport steenrod_monotonicity_check(const TwoComplexPresentation& p,
                                               long n_max,
                                               const Coefficients& field);

// Relative homology family H(level i, level i-1) for i = 0..max_level;
// level 0 is the one-point convention (a single class in degree 0).
std::vector<GradedGroup> sp_relative_family(const TwoComplexPresentation& p,
                                            long max_level,
                                            const Coefficients& field);

} // namespace confighom::spsym

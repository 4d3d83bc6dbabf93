#pragma once

#include "confighom/chain_complex.hpp"
#include "confighom/coefficients.hpp"
#include "confighom/graded_group.hpp"

#include <string>
#include <vector>

namespace confighom::tsp {

// Cell model of the level-n truncated symmetric product of a circle: one cell
// sigma^k per degree 0..n with d(sigma^k) = (1 + (-1)^k) sigma^(k-1). The
// k-skeleton is the level-k model, and the space is real projective n-space.
ChainComplex tp_circle_complex(long n);

// Reduced homology table of a level quotient TP^n/TP^(n-1), tagged with its
// level. Level 0 denotes the two-point space, so its reduced table is one
// class in degree 0.
struct ReducedTPTable {
    long level = 0;
    GradedGroup table; // reduced, field coefficients

    std::string to_json_string(int indent = 2) const;
    static ReducedTPTable from_json_string(const std::string& text);
    bool operator==(const ReducedTPTable& o) const {
        return level == o.level && table == o.table;
    }
};

// A family of reduced tables indexed by level: family[l].level == l.
using ReducedTPFamily = std::vector<ReducedTPTable>;

// For the circle the level-n quotient is an n-sphere.
ReducedTPTable reduced_tp_circle(long n, const Coefficients& field);

// Levels 0..n of reduced_tp_circle, ready for the wedge combinator.
ReducedTPFamily circle_reduced_family(long n, const Coefficients& field);

// Reduced level-n table of a wedge of factors: direct sum over all
// compositions (r_1,...,r_m) of n of the tensor of the factor tables at
// those levels. Zero parts contribute the level-0 two-point table, the unit.
ReducedTPTable wedge_reduced_tp(const std::vector<ReducedTPFamily>& factors,
                                long n, const Coefficients& field);

// Mod-2 splitting check: dim H_q(level k) should equal dim H_q(level k-1)
// plus the reduced level-k dimension, for every degree q and 1 <= k <= n.
struct SplittingReport {
    struct Entry {
        long k = 0;
        long q = 0;
        long full_dim = 0;
        long split_dim = 0; // previous level plus reduced quotient
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

SplittingReport mod2_tp_splitting_check(const std::vector<GradedGroup>& full_tables,
                                        const ReducedTPFamily& reduced_tables);

} // namespace confighom::tsp

#pragma once

#include "confighom/coefficients.hpp"
#include "confighom/graded_group.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace confighom::bounds {

enum class BoundKind { upper_bound_cohdim, lower_bound_connectivity, stability_range };

std::string to_string(BoundKind kind);

// A single evaluated bound. Connectivity -1 means "no claim"; `infinite`
// marks contractible-style answers that no integer represents.
struct BoundResult {
    long value = -1;
    bool infinite = false;
    BoundKind kind = BoundKind::lower_bound_connectivity;
    std::string source;                  // stable formula identifier
    std::vector<std::string> hypotheses; // the assumptions the value relies on

    std::string to_json_string(int indent = 2) const;
    std::string to_pretty() const;
};

// Largest cohomological degree that can be nonzero for the k-point
// configuration space of a d-manifold whose quotient M/(U u dM) is
// r-connected: (d-1)k - r for punctured/bounded M, one more when closed.
BoundResult cohdim_bound(long d, long k, long r, bool punctured_or_boundary);

enum class ConnectivityFormula {
    nakaoka,             // quotient of a k-fold smash by the fat diagonal
    reduced_sp,          // reduced symmetric products of an r-connected space
    reduced_sp_2complex, // reduced symmetric products of a wedge-plus-discs complex
    r_lower,             // lower bound for the least pair degree R_k
};

struct ConnectivityParams {
    long k = -1;
    long n = -1;
    long r = -1;
    long w = -1;
    bool punctured_or_boundary = false;
};

BoundResult connectivity_formulas(ConnectivityFormula name,
                                  const ConnectivityParams& params);

// Mod-2 cohomological dimension of configurations in d-space:
// (k - alpha(k))(d-1) with alpha(k) the binary digit sum.
BoundResult mod2_cohdim_disc(long d, long k);

// Dimension table indexed by (level i, homological degree q).
struct BigradedTable {
    Coefficients field;
    std::map<std::pair<long, long>, long> entries;

    void add(long i, long q, long dim);
    long dim(long i, long q) const;
    bool is_zero() const { return entries.empty(); }
    // Least q+0 total degree with a nonzero dimension; -1 when empty.
    long min_total_degree() const;
    std::string to_pretty() const;
};

// First-page assembly for the level-n approximation: sum over i + 2j = n of
// (level-i relative table of X) tensor (level-j relative table of the
// suspension of X). Level 0 always means the one-point convention, whatever
// the families carry there. The differential on this page is not modeled.
BigradedTable bcm_e1_assemble(const std::vector<GradedGroup>& sp_rel_X,
                              const std::vector<GradedGroup>& sp_rel_SX, long n,
                              const Coefficients& field);

// Connectivity read off a first page: least total degree minus one.
BoundResult e1_connectivity(const BigradedTable& e1);

// Cohomological-dimension consequence for surface configuration spaces:
// 2k - connectivity - 1, one more when the surface is closed (the closed
// pair adds the next level down, one degree lower).
BoundResult e1_connectivity_bound(const BigradedTable& e1, long k,
                                  bool closed_surface);

enum class StabilityKind { arnold, riemann_surface, scanning };
enum class SFunction { arnold, riemann_surface };

// Degree ranges in which adding a point changes nothing: floor(k/2) for
// planar configurations, k-1 for punctured Riemann surfaces, and the
// scanning comparison s(k-1) for closed surfaces under a chosen s.
BoundResult stability_ranges(StabilityKind kind, long k,
                             SFunction s = SFunction::arnold);

} // namespace confighom::bounds

#pragma once

#include "confighom/coefficients.hpp"
#include "confighom/errors.hpp"
#include "confighom/integers.hpp"

#include <map>
#include <string>
#include <vector>

namespace confighom {

// One graded piece: free rank plus torsion orders in invariant-factor form
// (each order divides the next; 1s are never stored). Over a field the
// torsion list is empty and `rank` is the dimension.
struct DegreeEntry {
    long rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const DegreeEntry& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
};

// A nonnegatively graded abelian group with a declared coefficient ring,
// e.g. the homology of a space. `reduced` records whether degree 0 carries
// the reduced or unreduced group; tables with different flags never mix.
class GradedGroup {
public:
    GradedGroup() = default;
    GradedGroup(Coefficients coeffs, bool reduced)
        : coefficients_(coeffs), reduced_(reduced) {}

    static GradedGroup single(Coefficients coeffs, bool reduced, long degree,
                              long rank = 1);

    const Coefficients& coefficients() const { return coefficients_; }
    bool reduced() const { return reduced_; }

    // Same entries under the other degree-0 convention. Used when a quotient
    // complex already computed the reduced group and only the tag differs.
    GradedGroup with_reduced(bool reduced) const {
        GradedGroup g = *this;
        g.reduced_ = reduced;
        return g;
    }

    void set_entry(long degree, DegreeEntry entry);
    void add_free(long degree, long rank);
    void add_torsion(long degree, const Int& order);

    DegreeEntry entry(long degree) const;
    long rank(long degree) const { return entry(degree).rank; }
    bool is_zero() const { return entries_.empty(); }
    long max_degree() const; // -1 when the group is zero
    const std::map<long, DegreeEntry>& entries() const { return entries_; }

    // Alternating sum of free ranks. Torsion contributes nothing, so over Z
    // this agrees with the Euler characteristic of any field reduction.
    long euler_characteristic() const;

    bool operator==(const GradedGroup& o) const;
    bool operator!=(const GradedGroup& o) const { return !(*this == o); }

    std::string to_json_string(int indent = 2) const;
    static GradedGroup from_json_string(const std::string& text);
    std::string to_csv() const;
    // symbol carries its own separator, e.g. "H_" for homology, "H^" for
    // cohomology.
    std::string to_pretty(const std::string& symbol = "H_") const;

private:
    Coefficients coefficients_ = Coefficients::integers();
    bool reduced_ = false;
    std::map<long, DegreeEntry> entries_; // nontrivial degrees only
};

// Degreewise direct sum; arguments must share coefficients and reduced flag.
GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);

// Graded tensor product (ranks convolve). Valid over a field, or over Z when
// both arguments are torsion-free; a torsion argument over Z is rejected
// because the Tor correction is not representable here.
GradedGroup tensor(const GradedGroup& a, const GradedGroup& b);

// Shift every degree up by `k` (k < 0 allowed while no degree drops below 0).
GradedGroup shift(const GradedGroup& a, long k);

// Rewrite a list of cyclic orders in invariant-factor form.
std::vector<Int> normalize_torsion(std::vector<Int> orders);

} // namespace confighom

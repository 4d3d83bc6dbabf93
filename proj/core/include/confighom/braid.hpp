#pragma once

#include "confighom/coefficients.hpp"
#include "confighom/graded_group.hpp"
#include "confighom/integers.hpp"

#include <string>
#include <vector>

namespace confighom::braid {

// Everything duality needs to know about M and the removed set U: the open
// manifold whose configuration spaces we compute is M - U. The quotient
// M/(U u dM) is the space whose truncated-product tables feed the pipeline;
// quotient_model names where those tables come from.
struct SpaceDescriptor {
    long d = 1;          // dimension of M
    bool closed = false; // M closed (then has_boundary must be false)
    long punctures = 0;  // |U|
    bool has_boundary = false;
    bool orientable = true;
    long quotient_connectivity = 0;
    std::string quotient_model; // "circle" | "wedge:<w>" | "user:<path>"

    // True when U u dM is nonempty: selects which lower level the duality
    // pairs against (k-1 instead of k-2).
    bool boundary_case() const { return punctures > 0 || has_boundary; }

    void validate() const;
    std::string to_json_string(int indent = 2) const;
    static SpaceDescriptor from_json_string(const std::string& text);
};

// Which coefficient systems the duality supports for a given space.
enum class GateVerdict { allowed, f2_only, twisted_required };

struct CoefficientGate {
    Coefficients requested;
    GateVerdict verdict = GateVerdict::allowed;
    std::string reason;

    // Mod-2 always passes; any other ring needs the configuration spaces
    // orientable, which happens exactly for even-dimensional orientable M.
    static CoefficientGate evaluate(const SpaceDescriptor& desc,
                                    const Coefficients& requested);
    // Space-level summary: allowed means every untwisted ring works.
    static GateVerdict summary(const SpaceDescriptor& desc);
};

// Degree flip i -> top - i. Applying it twice gives the table back.
GradedGroup duality_index_flip(const GradedGroup& table, long top);

// Cohomology of the k-point configuration space of M - U via the duality
// H^i = H_{kd-i}(level-k pair of the quotient model).
GradedGroup braid_cohomology(const SpaceDescriptor& desc, long k,
                             const Coefficients& coeffs);

// Number of ordered r-tuples of nonnegative integers with sum s.
Int ordered_partition_count(long r, long s);

// One-puncture splitting (mod 2): H^j of the closed manifold's configuration
// space from the punctured one, H^j(B(M,n)) = H^j(B(M-p,n)) + H^{j-d}(B(M-p,n-1)).
// base[m] = cohomology table of the m-point configuration space of M - p.
GradedGroup puncture_split_mod2(const std::vector<GradedGroup>& base, long d,
                                long n);

// k-puncture splitting over a field:
// H^j(B(M-{p_1..p_k},n)) = sum over r of base[r] shifted by (n-r)(d-1),
// with multiplicity p(k-1, n-r). Mod 2 always; other fields need d even
// and M orientable.
GradedGroup multi_puncture_split(const std::vector<GradedGroup>& base, long d,
                                 long k, long n, const Coefficients& field,
                                 bool orientable);

// Euler-characteristic consequence of the long exact sequence relating the
// closed and once-punctured configuration spaces.
struct EulerReport {
    long chi_closed = 0;
    long chi_punctured_n = 0;
    long chi_punctured_nminus1 = 0;
    long chi_expected = 0; // punctured_n + (-1)^d * punctured_(n-1)
    bool pass = false;
    std::string to_string() const;
};

EulerReport les_euler_check(const GradedGroup& closed_table,
                            const GradedGroup& punctured_n_table,
                            const GradedGroup& punctured_nminus1_table, long d,
                            const Coefficients& field);

} // namespace confighom::braid

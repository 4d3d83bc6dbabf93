#include "confighom/bounds.hpp"

#include "confighom/errors.hpp"
#include "confighom/integers.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace confighom::bounds {

using nlohmann::json;

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::upper_bound_cohdim: return "upper_bound_cohdim";
        case BoundKind::lower_bound_connectivity: return "lower_bound_connectivity";
        case BoundKind::stability_range: return "stability_range";
    }
    return "";
}

std::string BoundResult::to_json_string(int indent) const {
    json j;
    if (infinite)
        j["value"] = "infinite";
    else
        j["value"] = value;
    j["kind"] = bounds::to_string(kind);
    j["source"] = source;
    j["hypotheses"] = hypotheses;
    return j.dump(indent);
}

std::string BoundResult::to_pretty() const {
    std::ostringstream out;
    out << bounds::to_string(kind) << " = ";
    if (infinite)
        out << "infinite";
    else
        out << value;
    out << "  [" << source << "]";
    for (const std::string& h : hypotheses) out << "\n  assuming " << h;
    out << "\n";
    return out.str();
}

namespace {

[[noreturn]] void reject(const std::string& tag, const std::string& msg) {
    throw HypothesisError(tag, msg);
}

} // namespace

BoundResult cohdim_bound(long d, long k, long r, bool punctured_or_boundary) {
    if (d < 1) reject("dimension-positive", "needs manifold dimension d >= 1");
    if (k < 2) reject("at-least-two-points", "the bound is stated for k >= 2");
    if (r < 0) reject("connectivity-nonnegative", "needs quotient connectivity r >= 0");
    BoundResult b;
    b.kind = BoundKind::upper_bound_cohdim;
    b.source = "duality-cohdim";
    b.value = (d - 1) * k - r + (punctured_or_boundary ? 0 : 1);
    b.hypotheses = {"d >= 1", "k >= 2",
                    "quotient of M by removed set and boundary is r-connected",
                    punctured_or_boundary ? "removed set or boundary nonempty"
                                          : "M closed and unpunctured"};
    return b;
}

BoundResult connectivity_formulas(ConnectivityFormula name,
                                  const ConnectivityParams& p) {
    BoundResult b;
    b.kind = BoundKind::lower_bound_connectivity;
    switch (name) {
        case ConnectivityFormula::nakaoka:
            if (p.r < 0) reject("connectivity-nonnegative", "needs r >= 0");
            if (p.k < 1) reject("at-least-one-factor", "needs k >= 1");
            b.source = "smash-quotient-connectivity";
            b.value = p.r + p.k - 1;
            b.hypotheses = {"space is r-connected with r >= 0", "k >= 1"};
            return b;
        case ConnectivityFormula::reduced_sp:
            if (p.r < 1) reject("simply-connected-input", "needs r >= 1");
            if (p.n < 1) reject("level-positive", "needs n >= 1");
            b.source = "reduced-sp-connectivity";
            b.value = 2 * p.n + p.r - 2;
            b.hypotheses = {"space is r-connected with r >= 1", "n >= 1"};
            return b;
        case ConnectivityFormula::reduced_sp_2complex:
            if (p.n < 1) reject("level-positive", "needs n >= 1");
            if (p.w < 0) reject("circle-count-nonnegative", "needs w >= 0");
            b.source = "reduced-sp-two-complex-connectivity";
            b.value = 2 * p.n - std::min(p.w, p.n) - 1;
            b.hypotheses = {"two-complex built from w circles and discs", "n >= 1"};
            return b;
        case ConnectivityFormula::r_lower:
            if (p.k < 1) reject("at-least-one-point", "needs k >= 1");
            if (p.r < 0) reject("connectivity-nonnegative", "needs r >= 0");
            b.source = "least-pair-degree-lower";
            b.value = p.punctured_or_boundary ? p.k + p.r - 1 : p.k + p.r - 2;
            b.hypotheses = {"quotient is r-connected",
                            p.punctured_or_boundary
                                ? "removed set or boundary nonempty"
                                : "M closed and unpunctured"};
            return b;
    }
    throw ValidationError("unknown connectivity formula");
}

BoundResult mod2_cohdim_disc(long d, long k) {
    if (d < 2) reject("dimension-at-least-two", "needs d >= 2");
    if (k < 1) reject("at-least-one-point", "needs k >= 1");
    BoundResult b;
    b.kind = BoundKind::upper_bound_cohdim;
    b.source = "mod2-cohdim-euclidean";
    b.value = (k - popcount_long(k)) * (d - 1);
    b.hypotheses = {"configurations in d-space, d >= 2", "mod-2 coefficients"};
    return b;
}

void BigradedTable::add(long i, long q, long dim) {
    if (dim < 0) throw ValidationError("bigraded dimensions are nonnegative");
    if (dim == 0) return;
    entries[{i, q}] += dim;
}

long BigradedTable::dim(long i, long q) const {
    auto it = entries.find({i, q});
    return it == entries.end() ? 0 : it->second;
}

long BigradedTable::min_total_degree() const {
    long best = -1;
    for (const auto& [key, dim] : entries) {
        if (dim == 0) continue;
        if (best < 0 || key.second < best) best = key.second;
    }
    return best;
}

std::string BigradedTable::to_pretty() const {
    std::ostringstream out;
    if (entries.empty()) return "E1 = 0\n";
    for (const auto& [key, dim] : entries)
        out << "E1(level " << key.first << ", degree " << key.second
            << ") = " << dim << "\n";
    return out.str();
}

BigradedTable bcm_e1_assemble(const std::vector<GradedGroup>& sp_rel_X,
                              const std::vector<GradedGroup>& sp_rel_SX, long n,
                              const Coefficients& field) {
    if (n < 0) throw ValidationError("level must be >= 0");
    if (!field.is_field())
        throw ValidationError("first-page assembly works over a field");
    if (static_cast<long>(sp_rel_X.size()) <= n)
        throw ValidationError("need relative tables for levels 0.." +
                              std::to_string(n) + " of the space");
    if (static_cast<long>(sp_rel_SX.size()) <= n / 2)
        throw ValidationError("need relative tables for levels 0.." +
                              std::to_string(n / 2) + " of the suspension");

    const GradedGroup point = GradedGroup::single(field, false, 0, 1);
    auto level = [&](const std::vector<GradedGroup>& fam, long l) -> GradedGroup {
        if (l == 0) return point; // level 0 is a basepoint by convention
        const GradedGroup& t = fam[static_cast<std::size_t>(l)];
        if (t.coefficients() != field)
            throw ValidationError("relative tables must match the stated field");
        return t.with_reduced(false);
    };

    BigradedTable out;
    out.field = field;
    for (long i = 0; i <= n; ++i) {
        if ((n - i) % 2 != 0) continue;
        const long j = (n - i) / 2;
        GradedGroup term = tensor(level(sp_rel_X, i), level(sp_rel_SX, j));
        for (const auto& [q, e] : term.entries()) out.add(i, q, e.rank);
    }
    return out;
}

BoundResult e1_connectivity(const BigradedTable& e1) {
    BoundResult b;
    b.kind = BoundKind::lower_bound_connectivity;
    b.source = "first-page-vanishing-line";
    b.hypotheses = {"first page of the level filtration; differentials can "
                    "only increase the vanishing range"};
    if (e1.is_zero()) {
        b.infinite = true;
        return b;
    }
    b.value = e1.min_total_degree() - 1;
    return b;
}

BoundResult e1_connectivity_bound(const BigradedTable& e1, long k,
                                  bool closed_surface) {
    if (k < 1) reject("at-least-one-point", "needs k >= 1");
    BoundResult conn = e1_connectivity(e1);
    BoundResult b;
    b.kind = BoundKind::upper_bound_cohdim;
    b.source = "surface-cohdim-from-first-page";
    b.hypotheses = {"surface configuration spaces (d = 2)",
                    closed_surface
                        ? "closed surface: the pair drops two levels, adding "
                          "classes one degree lower"
                        : "punctured or bounded surface"};
    if (conn.infinite) {
        b.value = -1; // nothing survives, no nonzero cohomology at all
        return b;
    }
    b.value = 2 * k - conn.value - 1 + (closed_surface ? 1 : 0);
    return b;
}

BoundResult stability_ranges(StabilityKind kind, long k, SFunction s) {
    if (k < 1) reject("at-least-one-point", "needs k >= 1");
    BoundResult b;
    b.kind = BoundKind::stability_range;
    switch (kind) {
        case StabilityKind::arnold:
            b.source = "planar-stability";
            b.value = k / 2;
            b.hypotheses = {"configurations in the plane"};
            return b;
        case StabilityKind::riemann_surface:
            b.source = "punctured-surface-stability";
            b.value = k - 1;
            b.hypotheses = {"punctured Riemann surface"};
            return b;
        case StabilityKind::scanning:
            b.source = "scanning-stability";
            b.value = (s == SFunction::arnold) ? (k - 1) / 2 : k - 2;
            b.hypotheses = {"closed surface via the scanning comparison",
                            s == SFunction::arnold ? "planar stability function"
                                                   : "punctured-surface "
                                                     "stability function"};
            return b;
    }
    throw ValidationError("unknown stability kind");
}

} // namespace confighom::bounds

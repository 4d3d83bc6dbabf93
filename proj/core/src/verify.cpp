#include "confighom/verify.hpp"

#include "confighom/bounds.hpp"
#include "confighom/braid.hpp"
#include "confighom/chain_complex.hpp"
#include "confighom/registry.hpp"
#include "confighom/smith.hpp"
#include "confighom/spsym.hpp"
#include "confighom/tsp.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>

namespace confighom::verify {

using nlohmann::json;

namespace {

GradedGroup registry_table(const std::vector<registry::Entry>& reg,
                           const std::string& name) {
    const registry::Entry& e = registry::find(reg, name);
    json j = json::parse(e.payload_json);
    if (!j.contains("table"))
        throw ValidationError("known-values entry " + name + " has no table");
    return GradedGroup::from_json_string(j["table"].dump());
}

std::vector<GradedGroup> registry_family(const std::vector<registry::Entry>& reg,
                                         const std::string& name) {
    const registry::Entry& e = registry::find(reg, name);
    json j = json::parse(e.payload_json);
    if (!j.contains("tables"))
        throw ValidationError("known-values entry " + name + " has no family");
    std::vector<GradedGroup> out;
    for (const auto& t : j["tables"])
        out.push_back(GradedGroup::from_json_string(t.dump()));
    return out;
}

std::string describe(const GradedGroup& got, const GradedGroup& want) {
    return "got " + got.to_json_string(0) + ", want " + want.to_json_string(0);
}

// Count r-tuples of nonnegative integers summing to s, the slow way.
long enumerate_compositions(long r, long s) {
    if (r == 0) return s == 0 ? 1 : 0;
    long total = 0;
    for (long first = 0; first <= s; ++first)
        total += enumerate_compositions(r - 1, s - first);
    return total;
}

} // namespace

std::string Report::to_string() const {
    std::ostringstream out;
    long passed = 0;
    for (const CheckResult& c : checks) {
        if (c.pass) {
            out << "ok " << c.name << "\n";
            ++passed;
        } else {
            out << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    out << "corpus: " << checks.size() << " checks, " << passed << " passed\n";
    return out.str();
}

Report run_corpus() {
    const Coefficients F2 = Coefficients::mod(2);
    const Coefficients F3 = Coefficients::mod(3);
    const Coefficients Q = Coefficients::rationals();
    const Coefficients Z = Coefficients::integers();
    const auto reg = registry::load_known_values();

    std::vector<std::pair<std::string, std::function<std::string()>>> checks;

    checks.emplace_back("invariant-factors-basics", [&]() -> std::string {
        SmithResult a = smith_normal_form(IntMatrix{{0}});
        if (a.diagonal != std::vector<Int>{0} || a.rank != 0)
            return "1x1 zero matrix mishandled";
        SmithResult b = smith_normal_form(IntMatrix{{2}});
        if (b.diagonal != std::vector<Int>{2} || b.rank != 1)
            return "1x1 [2] mishandled";
        SmithResult c = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
        if (c.diagonal != (std::vector<Int>{2, 4}) || c.rank != 2)
            return "[[2,4],[6,8]] should reduce to diag(2,4)";
        return "";
    });

    checks.emplace_back("circle-model-closed-form", [&]() -> std::string {
        for (long n = 0; n <= 50; ++n) {
            GradedGroup got = tsp::tp_circle_complex(n).homology(Z);
            GradedGroup want(Z, false);
            want.add_free(0, 1);
            for (long q = 1; q < n; ++q)
                if (q % 2 == 1) want.add_torsion(q, 2);
            if (n >= 1 && n % 2 == 1) want.add_free(n, 1);
            if (got != want)
                return "level " + std::to_string(n) + ": " + describe(got, want);
        }
        return "";
    });

    checks.emplace_back("circle-braid-known-values", [&]() -> std::string {
        GradedGroup circle = registry_table(reg, "braid-closed-circle-f2");
        GradedGroup point = registry_table(reg, "braid-punctured-circle-f2");
        braid::SpaceDescriptor closed;
        closed.d = 1;
        closed.closed = true;
        closed.orientable = true;
        closed.quotient_model = "circle";
        for (long k : {1L, 2L, 3L, 5L, 30L}) {
            GradedGroup got = braid::braid_cohomology(closed, k, F2);
            if (got != circle)
                return "closed circle, k=" + std::to_string(k) + ": " +
                       describe(got, circle);
        }
        braid::SpaceDescriptor punctured;
        punctured.d = 1;
        punctured.punctures = 1;
        punctured.quotient_model = "circle";
        for (long k : {1L, 5L, 30L}) {
            GradedGroup got = braid::braid_cohomology(punctured, k, F2);
            if (got != point)
                return "punctured circle, k=" + std::to_string(k) + ": " +
                       describe(got, point);
        }
        braid::SpaceDescriptor interval;
        interval.d = 1;
        interval.has_boundary = true;
        interval.quotient_model = "circle";
        GradedGroup got = braid::braid_cohomology(interval, 4, F2);
        if (got != point) return "interval, k=4: " + describe(got, point);
        return "";
    });

    checks.emplace_back("sphere-pair-three-way", [&]() -> std::string {
        for (long d = 2; d <= 12; ++d) {
            GradedGroup want =
                registry_table(reg, "braid-sphere-pair-d" + std::to_string(d) + "-f2");
            std::vector<GradedGroup> base = {
                registry_table(reg, "point-f2"), // no points
                registry_table(reg, "point-f2"), // one point in d-space
                registry_table(reg,
                               "braid-euclidean-pair-d" + std::to_string(d - 1) + "-f2"),
            };
            GradedGroup split = braid::puncture_split_mod2(base, d, 2);
            if (split != want)
                return "splitting route, d=" + std::to_string(d) + ": " +
                       describe(split, want);
            braid::SpaceDescriptor desc;
            desc.d = d;
            desc.closed = true;
            desc.orientable = true;
            desc.quotient_connectivity = d - 1;
            desc.quotient_model =
                "user:sphere_models/sphere_d" + std::to_string(d) + "_f2.json";
            GradedGroup dual = braid::braid_cohomology(desc, 2, F2);
            if (dual != want)
                return "duality route, d=" + std::to_string(d) + ": " +
                       describe(dual, want);
        }
        return "";
    });

    checks.emplace_back("complex-projective-model", [&]() -> std::string {
        auto sphere = spsym::TwoComplexPresentation::sphere();
        for (long n = 0; n <= 20; ++n) {
            GradedGroup got = spsym::sp_chain_complex(sphere, n, false).homology(Z);
            GradedGroup want(Z, false);
            for (long q = 0; q <= n; ++q) want.add_free(2 * q, 1);
            if (got != want)
                return "level " + std::to_string(n) + ": " + describe(got, want);
            if (n >= 1) {
                ChainComplex reduced = spsym::sp_chain_complex(sphere, n, true);
                GradedGroup rgot = reduced.homology(Z);
                GradedGroup rwant(Z, false);
                rwant.add_free(2 * n, 1);
                if (rgot != rwant)
                    return "reduced level " + std::to_string(n) + ": " +
                           describe(rgot, rwant);
                auto cells = spsym::enumerate_cells(sphere, n, true);
                if (cells.empty() || cells.front().degree() != 2 * n)
                    return "reduced level " + std::to_string(n) +
                           " should start in degree " + std::to_string(2 * n);
            }
        }
        return "";
    });

    checks.emplace_back("wedge-betti-numbers", [&]() -> std::string {
        for (long w = 0; w <= 4; ++w) {
            auto p = spsym::TwoComplexPresentation::wedge_of_circles(w);
            for (long n = 0; n <= 6; ++n)
                for (const Coefficients& field : {F2, Q, F3}) {
                    GradedGroup got = spsym::sp_chain_complex(p, n, false).homology(field);
                    GradedGroup want(field, false);
                    for (long q = 0; q <= std::min(w, n); ++q)
                        want.add_free(q, binomial(w, q).get_si());
                    if (got != want)
                        return "w=" + std::to_string(w) + ", n=" + std::to_string(n) +
                               ", " + field.to_string() + ": " + describe(got, want);
                }
        }
        return "";
    });

    checks.emplace_back("level-monotonicity", [&]() -> std::string {
        std::vector<spsym::TwoComplexPresentation> presets = {
            spsym::TwoComplexPresentation::sphere(),
            spsym::TwoComplexPresentation::wedge_of_circles(1),
            spsym::TwoComplexPresentation::wedge_of_circles(2),
            spsym::TwoComplexPresentation::wedge_of_circles(3),
        };
        for (std::size_t i = 0; i < presets.size(); ++i)
            for (const Coefficients& field : {F2, Q}) {
                auto report = spsym::steenrod_monotonicity_check(presets[i], 6, field);
                if (!report.all_pass)
                    return "preset " + std::to_string(i) + " over " +
                           field.to_string() + " lost a class going up a level";
            }
        return "";
    });

    checks.emplace_back("jacobian-closed-form", [&]() -> std::string {
        GradedGroup a = spsym::mattuck_reduced_sp(1, 2, Q);
        GradedGroup want(Q, true);
        want.add_free(2, 1);
        want.add_free(3, 2);
        want.add_free(4, 1);
        if (a != want) return "genus 1, level 2: " + describe(a, want);
        GradedGroup b = spsym::mattuck_reduced_sp(1, 3, Q);
        long min_deg = b.entries().begin()->first;
        if (min_deg != 4) return "genus 1, level 3: lowest degree should be 4";
        GradedGroup c = spsym::mattuck_reduced_sp(2, 4, Q);
        long total = 0;
        for (const auto& [q, e] : c.entries()) {
            total += e.rank;
            if (e.rank != binomial(4, q - 4).get_si())
                return "genus 2, level 4: degree " + std::to_string(q) +
                       " should have dim C(4," + std::to_string(q - 4) + ")";
        }
        if (total != 16) return "genus 2, level 4: total dim should be 16";
        return "";
    });

    checks.emplace_back("plane-arrangement-rational-splitting", [&]() -> std::string {
        auto base = registry_family(reg, "planar-braid-rational-family");
        for (long n = 1; n <= 15; ++n) {
            GradedGroup got = braid::multi_puncture_split(base, 2, 2, n, Q, true);
            long want_h1 = n >= 2 ? 2 : 1;
            if (got.rank(0) != 1 || got.rank(1) != want_h1)
                return "n=" + std::to_string(n) + ": degree-(0,1) dims (" +
                       std::to_string(got.rank(0)) + "," +
                       std::to_string(got.rank(1)) + "), want (1," +
                       std::to_string(want_h1) + ")";
        }
        return "";
    });

    checks.emplace_back("composition-count-identities", [&]() -> std::string {
        for (long s = 0; s <= 20; ++s) {
            if (braid::ordered_partition_count(1, s) != 1)
                return "p(1," + std::to_string(s) + ") should be 1";
            if (braid::ordered_partition_count(2, s) != s + 1)
                return "p(2," + std::to_string(s) + ") should be s+1";
        }
        for (long r = 1; r <= 20; ++r)
            if (braid::ordered_partition_count(r, 1) != r)
                return "p(" + std::to_string(r) + ",1) should be r";
        for (long r = 0; r <= 4; ++r)
            for (long s = 0; s <= 8; ++s) {
                if (r == 0 && s > 0) continue;
                if (braid::ordered_partition_count(r, s) !=
                    enumerate_compositions(r, s))
                    return "p(" + std::to_string(r) + "," + std::to_string(s) +
                           ") disagrees with enumeration";
            }
        return "";
    });

    checks.emplace_back("bound-remark-values", [&]() -> std::string {
        for (long d = 2; d <= 12; ++d) {
            if (bounds::cohdim_bound(d, 2, d - 1, true).value != d - 1)
                return "punctured two-point bound should be d-1 at d=" +
                       std::to_string(d);
            if (bounds::cohdim_bound(d, 2, d - 1, false).value != d)
                return "closed two-point bound should be d at d=" + std::to_string(d);
        }
        for (long d = 2; d <= 10; ++d)
            for (long k = 2; k <= 64; ++k)
                if (bounds::mod2_cohdim_disc(d, k).value >
                    bounds::cohdim_bound(d, k, d - 1, true).value)
                    return "mod-2 bound exceeds the duality bound at d=" +
                           std::to_string(d) + ", k=" + std::to_string(k);
        if (bounds::stability_ranges(bounds::StabilityKind::arnold, 7).value != 3)
            return "planar stability at k=7 should be 3";
        for (long k = 1; k <= 10; ++k) {
            if (bounds::stability_ranges(bounds::StabilityKind::riemann_surface, k)
                    .value != k - 1)
                return "punctured-surface stability should be k-1";
            if (bounds::stability_ranges(bounds::StabilityKind::scanning, k,
                                         bounds::SFunction::riemann_surface)
                    .value != k - 2)
                return "scanning stability under the surface function should be k-2";
        }
        if (bounds::stability_ranges(bounds::StabilityKind::scanning, 3,
                                     bounds::SFunction::arnold)
                .value != 1)
            return "scanning stability under the planar function at k=3 should be 1";
        return "";
    });

    checks.emplace_back("first-page-circle-collapse", [&]() -> std::string {
        auto circle = spsym::TwoComplexPresentation::wedge_of_circles(1);
        auto sphere = spsym::TwoComplexPresentation::sphere();
        for (long n = 0; n <= 20; ++n) {
            auto relX = spsym::sp_relative_family(circle, n, F2);
            auto relSX = spsym::sp_relative_family(sphere, n / 2, F2);
            bounds::BigradedTable e1 = bounds::bcm_e1_assemble(relX, relSX, n, F2);
            long total = 0;
            for (const auto& [key, dim] : e1.entries) {
                total += dim;
                if (key.second != n)
                    return "n=" + std::to_string(n) + ": class off total degree n";
            }
            if (total != 1)
                return "n=" + std::to_string(n) + ": first page should be one class";
            if (tsp::reduced_tp_circle(n, F2).table.rank(n) != 1)
                return "reduced circle table out of step at n=" + std::to_string(n);
        }
        return "";
    });

    checks.emplace_back("two-complex-cohdim-values", [&]() -> std::string {
        for (long k = 1; k <= 20; ++k) {
            const long w = k;
            auto wedge = spsym::TwoComplexPresentation::wedge_of_circles(w);
            auto relX = spsym::sp_relative_family(wedge, k, F2);
            // Levels of the suspended wedge: compositions of j across w
            // sphere factors, each smash contributing one class in degree 2j.
            std::vector<GradedGroup> relSX;
            for (long j = 0; j <= k / 2; ++j) {
                GradedGroup t(F2, false);
                t.add_free(2 * j, weak_composition_count(w, j).get_si());
                relSX.push_back(std::move(t));
            }
            bounds::BigradedTable e1 = bounds::bcm_e1_assemble(relX, relSX, k, F2);
            if (bounds::e1_connectivity(e1).value != k - 1)
                return "k=" + std::to_string(k) + ": first-page connectivity " +
                       std::to_string(bounds::e1_connectivity(e1).value) +
                       ", want k-1";
            if (bounds::e1_connectivity_bound(e1, k, false).value != k)
                return "k=" + std::to_string(k) + ": punctured bound should be k";
            if (bounds::e1_connectivity_bound(e1, k, true).value != k + 1)
                return "k=" + std::to_string(k) + ": closed bound should be k+1";
        }
        return "";
    });

    checks.emplace_back("mod2-splitting-circle", [&]() -> std::string {
        std::vector<GradedGroup> full;
        for (long k = 0; k <= 5; ++k)
            full.push_back(tsp::tp_circle_complex(k).homology(F2));
        auto report =
            tsp::mod2_tp_splitting_check(full, tsp::circle_reduced_family(5, F2));
        if (!report.all_pass) return "circle family splitting failed";
        return "";
    });

    checks.emplace_back("euler-exactness-families", [&]() -> std::string {
        braid::SpaceDescriptor closed;
        closed.d = 1;
        closed.closed = true;
        closed.quotient_model = "circle";
        braid::SpaceDescriptor punctured = closed;
        punctured.closed = false;
        punctured.punctures = 1;
        auto rep = braid::les_euler_check(braid::braid_cohomology(closed, 3, F2),
                                          braid::braid_cohomology(punctured, 3, F2),
                                          braid::braid_cohomology(punctured, 2, F2),
                                          1, F2);
        if (!rep.pass) return "circle family: " + rep.to_string();
        for (long d = 2; d <= 6; ++d) {
            auto rep2 = braid::les_euler_check(
                registry_table(reg, "braid-sphere-pair-d" + std::to_string(d) + "-f2"),
                registry_table(reg,
                               "braid-euclidean-pair-d" + std::to_string(d - 1) + "-f2"),
                registry_table(reg, "point-f2"), d, F2);
            if (!rep2.pass)
                return "sphere family d=" + std::to_string(d) + ": " + rep2.to_string();
        }
        return "";
    });

    checks.emplace_back("duality-involution", [&]() -> std::string {
        std::vector<GradedGroup> tables = {
            registry_table(reg, "braid-sphere-pair-d5-f2"),
            tsp::tp_circle_complex(6).homology(Z),
        };
        for (const GradedGroup& t : tables) {
            long top = t.max_degree();
            GradedGroup twice =
                braid::duality_index_flip(braid::duality_index_flip(t, top), top);
            if (twice != t.with_reduced(false))
                return "flip applied twice changed a table";
        }
        return "";
    });

    checks.emplace_back("json-roundtrip", [&]() -> std::string {
        std::vector<GradedGroup> tables = {
            registry_table(reg, "braid-sphere-pair-d3-f2"),
            registry_table(reg, "surface-braid-h1-g2"),
            tsp::tp_circle_complex(5).homology(Z),
        };
        for (const GradedGroup& t : tables)
            if (GradedGroup::from_json_string(t.to_json_string()) != t)
                return "graded-group JSON does not round-trip";
        tsp::ReducedTPTable r = tsp::reduced_tp_circle(7, F2);
        if (!(tsp::ReducedTPTable::from_json_string(r.to_json_string()) == r))
            return "reduced-table JSON does not round-trip";
        return "";
    });

    Report report;
    for (auto& [name, fn] : checks) {
        CheckResult result;
        result.name = name;
        try {
            std::string detail = fn();
            result.pass = detail.empty();
            result.detail = detail;
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        if (!result.pass) report.all_pass = false;
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace confighom::verify

#include <doctest.h>

#include <confighom/bounds.hpp>
#include <confighom/braid.hpp>
#include <confighom/coefficients.hpp>
#include <confighom/errors.hpp>
#include <confighom/integers.hpp>
#include <confighom/spsym.hpp>
#include <confighom/tsp.hpp>

#include <string>
#include <vector>

using namespace confighom;

namespace {

long reduced_sp_two_complex_value(long n, long w) {
    bounds::ConnectivityParams p;
    p.n = n;
    p.w = w;
    return bounds::connectivity_formulas(
               bounds::ConnectivityFormula::reduced_sp_2complex, p)
        .value;
}

} // namespace

TEST_CASE("cohomological-dimension bound values and hypotheses") {
    for (long d = 2; d <= 12; ++d) {
        bounds::BoundResult punctured = bounds::cohdim_bound(d, 2, d - 1, true);
        CHECK(punctured.value == d - 1);
        bounds::BoundResult closed = bounds::cohdim_bound(d, 2, d - 1, false);
        CHECK(closed.value == d);
        CHECK(closed.kind == bounds::BoundKind::upper_bound_cohdim);
        CHECK(!closed.hypotheses.empty());
    }
    CHECK(bounds::cohdim_bound(2, 5, 0, true).value == 5);

    CHECK_THROWS_AS(bounds::cohdim_bound(0, 2, 0, true), HypothesisError);
    CHECK_THROWS_AS(bounds::cohdim_bound(2, 1, 0, true), HypothesisError);
    CHECK_THROWS_AS(bounds::cohdim_bound(2, 2, -1, true), HypothesisError);
    try {
        bounds::cohdim_bound(2, 1, 0, true);
    } catch (const HypothesisError& e) {
        CHECK(e.reason == "at-least-two-points");
    }
}

TEST_CASE("duality-based bound is sharp for the configuration spaces we can compute") {
    // Sphere pairs realize the closed bound: H^d(B(S^d, 2); F2) is nonzero and
    // the bound with r = d-1 is exactly d.
    const Coefficients f2 = Coefficients::mod(2);
    braid::SpaceDescriptor sphere;
    sphere.d = 2;
    sphere.closed = true;
    sphere.quotient_model = "user:sphere_models/sphere_d2_f2.json";
    GradedGroup pair = braid::braid_cohomology(sphere, 2, f2);
    CHECK(pair.max_degree() == bounds::cohdim_bound(2, 2, 1, false).value);

    // Circle configurations realize the boundary-case bound with d = 1, r = 0:
    // their top degree is (d-1)k - r = 0 once a point is removed.
    braid::SpaceDescriptor arc;
    arc.d = 1;
    arc.punctures = 1;
    arc.quotient_model = "circle";
    GradedGroup h = braid::braid_cohomology(arc, 5, f2);
    CHECK(h.max_degree() == bounds::cohdim_bound(1, 5, 0, true).value);
}

TEST_CASE("connectivity formulas with their rejection tags") {
    bounds::ConnectivityParams p;
    p.r = 2;
    p.k = 3;
    CHECK(bounds::connectivity_formulas(bounds::ConnectivityFormula::nakaoka, p)
              .value == 4);
    p.r = 0;
    p.k = 1;
    CHECK(bounds::connectivity_formulas(bounds::ConnectivityFormula::nakaoka, p)
              .value == 0);
    p.k = 0;
    CHECK_THROWS_AS(
        bounds::connectivity_formulas(bounds::ConnectivityFormula::nakaoka, p),
        HypothesisError);

    bounds::ConnectivityParams sp;
    sp.r = 1;
    sp.n = 3;
    CHECK(bounds::connectivity_formulas(bounds::ConnectivityFormula::reduced_sp, sp)
              .value == 5);
    sp.r = 0;
    try {
        bounds::connectivity_formulas(bounds::ConnectivityFormula::reduced_sp, sp);
        FAIL("expected rejection");
    } catch (const HypothesisError& e) {
        CHECK(e.reason == "simply-connected-input");
    }

    CHECK(reduced_sp_two_complex_value(4, 2) == 5);
    CHECK(reduced_sp_two_complex_value(4, 9) == 3);

    bounds::ConnectivityParams rl;
    rl.k = 4;
    rl.r = 1;
    rl.punctured_or_boundary = true;
    CHECK(bounds::connectivity_formulas(bounds::ConnectivityFormula::r_lower, rl)
              .value == 4);
    rl.punctured_or_boundary = false;
    CHECK(bounds::connectivity_formulas(bounds::ConnectivityFormula::r_lower, rl)
              .value == 3);
}

TEST_CASE("two-complex connectivity matches the reduced product complexes") {
    // The formula is exactly one less than the lowest reduced cell degree, and
    // with vanishing differentials that cell realizes it.
    for (long w = 0; w <= 3; ++w)
        for (long n = 1; n <= 4; ++n) {
            spsym::TwoComplexPresentation p;
            p.w = w;
            p.disc_count = 1;
            p.boundary.disc_attach = {std::vector<Int>(w, 0)};
            GradedGroup h = spsym::sp_chain_complex(p, n, true)
                                .homology(Coefficients::mod(2));
            REQUIRE(!h.is_zero());
            long min_degree = h.max_degree();
            for (const auto& [q, e] : h.entries())
                min_degree = std::min(min_degree, q);
            CHECK(min_degree - 1 == reduced_sp_two_complex_value(n, w));
        }
}

TEST_CASE("least-pair-degree lower bound holds on the circle model") {
    // For the circle the least degree with nonzero reduced pair homology is
    // exactly k (the level quotient is a k-sphere): the lower bound k + r - 1
    // with r = 0 is met, and the closed variant stays below it.
    const Coefficients f2 = Coefficients::mod(2);
    for (long k = 1; k <= 8; ++k) {
        tsp::ReducedTPTable t = tsp::reduced_tp_circle(k, f2);
        long least = -1;
        for (const auto& [q, e] : t.table.entries())
            if (e.rank > 0 && (least < 0 || q < least)) least = q;
        bounds::ConnectivityParams p;
        p.k = k;
        p.r = 0;
        p.punctured_or_boundary = true;
        CHECK(least >= bounds::connectivity_formulas(
                           bounds::ConnectivityFormula::r_lower, p)
                           .value);
        p.punctured_or_boundary = false;
        CHECK(least >= bounds::connectivity_formulas(
                           bounds::ConnectivityFormula::r_lower, p)
                           .value);
    }
}

TEST_CASE("mod-2 cohomological dimension in euclidean space") {
    CHECK(bounds::mod2_cohdim_disc(2, 1).value == 0);
    CHECK(bounds::mod2_cohdim_disc(2, 2).value == 1);
    CHECK(bounds::mod2_cohdim_disc(2, 3).value == 1);
    CHECK(bounds::mod2_cohdim_disc(2, 4).value == 3);
    CHECK(bounds::mod2_cohdim_disc(3, 8).value == 14);
    // Powers of two leave a single binary digit.
    for (long m = 1; m <= 6; ++m)
        CHECK(bounds::mod2_cohdim_disc(4, 1L << m).value == ((1L << m) - 1) * 3);
    // Never above the duality bound with r = d-1 in the punctured case.
    for (long d = 2; d <= 10; ++d)
        for (long k = 2; k <= 64; ++k)
            CHECK(bounds::mod2_cohdim_disc(d, k).value <=
                  bounds::cohdim_bound(d, k, d - 1, true).value);
    CHECK_THROWS_AS(bounds::mod2_cohdim_disc(1, 3), HypothesisError);
    CHECK_THROWS_AS(bounds::mod2_cohdim_disc(3, 0), HypothesisError);
}

TEST_CASE("bigraded tables and first-page assembly") {
    const Coefficients f2 = Coefficients::mod(2);
    bounds::BigradedTable empty;
    empty.field = f2;
    CHECK(empty.is_zero());
    CHECK(empty.min_total_degree() == -1);
    CHECK(bounds::e1_connectivity(empty).infinite);
    CHECK(bounds::e1_connectivity_bound(empty, 3, false).value == -1);
    CHECK_THROWS_AS(empty.add(0, 0, -1), ValidationError);

    // Circle against its suspension: one class survives in each level, total
    // degree equal to the level.
    auto rel_circle = spsym::sp_relative_family(
        spsym::TwoComplexPresentation::wedge_of_circles(1), 8, f2);
    auto rel_sphere = spsym::sp_relative_family(
        spsym::TwoComplexPresentation::sphere(), 4, f2);
    for (long n = 0; n <= 8; ++n) {
        bounds::BigradedTable e1 =
            bounds::bcm_e1_assemble(rel_circle, rel_sphere, n, f2);
        long total = 0;
        for (const auto& [key, dim] : e1.entries) total += dim;
        CHECK(total == 1);
        CHECK(e1.min_total_degree() == n);
        CHECK(bounds::e1_connectivity(e1).value == n - 1);
    }

    CHECK_THROWS_AS(bounds::bcm_e1_assemble(rel_circle, rel_sphere, 9, f2),
                    ValidationError);
    CHECK_THROWS_AS(
        bounds::bcm_e1_assemble(rel_circle, rel_sphere, 4, Coefficients::integers()),
        ValidationError);
}

TEST_CASE("first-page connectivity bounds for wedge surfaces") {
    // For the wedge of k circles with synthetic suspension tables, the least
    // surviving degree at level k is k, giving connectivity k-1 and the
    // cohomological-dimension bounds k (punctured) and k+1 (closed).
    const Coefficients f2 = Coefficients::mod(2);
    for (long k = 1; k <= 8; ++k) {
        auto rel_wedge = spsym::sp_relative_family(
            spsym::TwoComplexPresentation::wedge_of_circles(k), k, f2);
        std::vector<GradedGroup> rel_susp;
        for (long j = 0; j <= k / 2; ++j) {
            GradedGroup t(f2, false);
            t.add_free(2 * j, weak_composition_count(k, j).get_si());
            rel_susp.push_back(std::move(t));
        }
        bounds::BigradedTable e1 = bounds::bcm_e1_assemble(rel_wedge, rel_susp, k, f2);
        bounds::BoundResult conn = bounds::e1_connectivity(e1);
        CHECK(conn.value == k - 1);
        CHECK(bounds::e1_connectivity_bound(e1, k, false).value == k);
        CHECK(bounds::e1_connectivity_bound(e1, k, true).value == k + 1);
    }
    CHECK_THROWS_AS(
        bounds::e1_connectivity_bound(bounds::BigradedTable{}, 0, false),
        HypothesisError);
}

TEST_CASE("stability ranges") {
    CHECK(bounds::stability_ranges(bounds::StabilityKind::arnold, 7).value == 3);
    CHECK(bounds::stability_ranges(bounds::StabilityKind::arnold, 8).value == 4);
    CHECK(bounds::stability_ranges(bounds::StabilityKind::riemann_surface, 8).value ==
          7);
    CHECK(bounds::stability_ranges(bounds::StabilityKind::scanning, 3,
                                   bounds::SFunction::arnold)
              .value == 1);
    CHECK(bounds::stability_ranges(bounds::StabilityKind::scanning, 8,
                                   bounds::SFunction::riemann_surface)
              .value == 6);
    CHECK_THROWS_AS(bounds::stability_ranges(bounds::StabilityKind::arnold, 0),
                    HypothesisError);
}

TEST_CASE("bound results serialize with kind, source and hypotheses") {
    bounds::BoundResult b = bounds::cohdim_bound(2, 5, 0, true);
    const std::string js = b.to_json_string();
    CHECK(js.find("upper_bound_cohdim") != std::string::npos);
    CHECK(js.find("duality-cohdim") != std::string::npos);
    const std::string pretty = b.to_pretty();
    CHECK(pretty.find("= 5") != std::string::npos);
    CHECK(pretty.find("assuming") != std::string::npos);

    bounds::BigradedTable empty;
    CHECK(bounds::e1_connectivity(empty).to_json_string().find("infinite") !=
          std::string::npos);
}

#include <doctest.h>

#include <confighom/coefficients.hpp>
#include <confighom/spsym.hpp>

#include "support/quotient_oracle.hpp"

using namespace confighom;

TEST_CASE("oracle sanity: wedge triangulations have circle homology") {
    for (int w = 1; w <= 3; ++w) {
        oracle::HomologySummary h =
            oracle::integral_homology(oracle::wedge_circles(w));
        REQUIRE(h.free_ranks.size() == 2);
        CHECK(h.free_ranks[0] == 1);
        CHECK(h.free_ranks[1] == w);
        CHECK(h.torsion[0].empty());
        CHECK(h.torsion[1].empty());
    }
}

TEST_CASE("oracle sanity: the product triangulation satisfies the Kunneth counts") {
    for (int w = 1; w <= 2; ++w) {
        oracle::SquareComplex sq =
            oracle::product_square(oracle::wedge_circles(w));
        oracle::HomologySummary h = oracle::integral_homology(sq.complex);
        REQUIRE(h.free_ranks.size() == 3);
        CHECK(h.free_ranks[0] == 1);
        CHECK(h.free_ranks[1] == 2 * w);
        CHECK(h.free_ranks[2] == w * w);
        for (const auto& t : h.torsion) CHECK(t.empty());

        // The swap really is an involution without fixed simplex problems.
        for (std::size_t v = 0; v < sq.involution.size(); ++v)
            CHECK(sq.involution[sq.involution[v]] == static_cast<int>(v));
    }
}

TEST_CASE("symmetric squares match the independent simplicial quotient") {
    // Level 1 is the space itself; no quotient machinery involved.
    for (long w = 1; w <= 2; ++w) {
        GradedGroup sp1 =
            spsym::sp_chain_complex(
                spsym::TwoComplexPresentation::wedge_of_circles(w), 1, false)
                .homology(Coefficients::integers());
        CHECK(sp1.rank(0) == 1);
        CHECK(sp1.rank(1) == w);
    }

    for (int w = 1; w <= 2; ++w) {
        oracle::HomologySummary brute = oracle::symmetric_square_homology(w);
        GradedGroup fast =
            spsym::sp_chain_complex(
                spsym::TwoComplexPresentation::wedge_of_circles(w), 2, false)
                .homology(Coefficients::integers());
        for (long q = 0; q < static_cast<long>(brute.free_ranks.size()); ++q) {
            CHECK(brute.free_ranks[q] == fast.rank(q));
            const auto& tor = brute.torsion[q];
            const auto& expected = fast.entry(q).torsion;
            REQUIRE(tor.size() == expected.size());
            for (std::size_t i = 0; i < tor.size(); ++i)
                CHECK(Int(tor[i]) == expected[i]);
        }
        for (long q = static_cast<long>(brute.free_ranks.size());
             q <= fast.max_degree(); ++q)
            CHECK(fast.entry(q).trivial());
    }
}

#include <doctest.h>

#include <confighom/chain_complex.hpp>
#include <confighom/errors.hpp>
#include <confighom/graded_group.hpp>
#include <confighom/int_matrix.hpp>
#include <confighom/smith.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace confighom;

namespace {

std::vector<Int> nonzero_diagonal(const SmithResult& s) {
    std::vector<Int> out;
    for (const Int& v : s.diagonal)
        if (v != 0) out.push_back(v);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        int span) {
    std::uniform_int_distribution<int> entry(-span, span);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
    return m;
}

// Row/column operations that multiply by unimodular matrices.
void random_unimodular_ops(std::mt19937_64& rng, IntMatrix& m, int count) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> which(0, 5);
    for (int step = 0; step < count; ++step) {
        const bool on_rows = which(rng) % 2 == 0;
        const std::size_t n = on_rows ? m.rows() : m.cols();
        if (n < 2) continue;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t i = pick(rng), j = pick(rng);
        switch (which(rng) / 2) {
        case 0: { // add multiple of line j to line i
            if (i == j) break;
            const Int k = coeff(rng);
            if (on_rows)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(i, c) += k * m.at(j, c);
            else
                for (std::size_t r = 0; r < m.rows(); ++r)
                    m.at(r, i) += k * m.at(r, j);
            break;
        }
        case 1: { // swap lines
            if (i == j) break;
            if (on_rows)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    std::swap(m.at(i, c), m.at(j, c));
            else
                for (std::size_t r = 0; r < m.rows(); ++r)
                    std::swap(m.at(r, i), m.at(r, j));
            break;
        }
        default: { // negate a line
            if (on_rows)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(i, c) = -m.at(i, c);
            else
                for (std::size_t r = 0; r < m.rows(); ++r)
                    m.at(r, i) = -m.at(r, i);
            break;
        }
        }
    }
}

Int determinant(const IntMatrix& a, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return a.at(rows[0], cols[0]);
    Int det = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        if (a.at(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        Int term = a.at(rows[0], cols[j]) * determinant(a, sub_rows, sub_cols);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// gcd of all k x k minors; 0 when every minor vanishes.
Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    subsets(a.rows(), k, row_sets);
    subsets(a.cols(), k, col_sets);
    Int g = 0;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            Int d = determinant(a, rs, cs);
            g = gcd(g, d);
        }
    return abs(g);
}

ChainComplex truncated_projective_model(std::size_t n) {
    std::vector<std::size_t> dims(n + 1, 1);
    std::vector<IntMatrix> boundaries;
    for (std::size_t q = 1; q <= n; ++q)
        boundaries.push_back(IntMatrix{{q % 2 == 0 ? 2L : 0L}});
    return ChainComplex::create(dims, boundaries);
}

} // namespace

TEST_CASE("smith normal form on frozen examples") {
    CHECK(smith_normal_form(IntMatrix{{0}}).rank == 0);
    CHECK(nonzero_diagonal(smith_normal_form(IntMatrix{{2}})) == std::vector<Int>{2});
    CHECK(nonzero_diagonal(smith_normal_form(IntMatrix{{2, 4}, {6, 8}})) ==
          std::vector<Int>{2, 4});
    CHECK(nonzero_diagonal(smith_normal_form(IntMatrix{{1, 2}, {3, 4}})) ==
          std::vector<Int>{1, 2});
    CHECK(nonzero_diagonal(smith_normal_form(IntMatrix{{2, 0}, {0, 3}})) ==
          std::vector<Int>{1, 6});
    // Rectangular with a zero row.
    SmithResult s = smith_normal_form(IntMatrix{{4, 6, 10}, {0, 0, 0}});
    CHECK(s.rank == 1);
    CHECK(s.diagonal == std::vector<Int>{2, 0});
}

TEST_CASE("smith diagonal matches determinantal divisors") {
    std::mt19937_64 rng(0xC0FFEE01);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    for (int trial = 0; trial < 250; ++trial) {
        IntMatrix a = random_matrix(rng, size(rng), size(rng), 9);
        SmithResult s = smith_normal_form(a);
        Int prev = 1;
        std::size_t expected_rank = 0;
        for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
            Int dk = determinantal_divisor(a, k);
            if (dk == 0) break;
            CHECK(s.diagonal[k - 1] == dk / prev);
            prev = dk;
            expected_rank = k;
        }
        CHECK(s.rank == expected_rank);
        for (std::size_t k = expected_rank; k < s.diagonal.size(); ++k)
            CHECK(s.diagonal[k] == 0);
    }
}

TEST_CASE("smith diagonal divisibility chain and unimodular invariance") {
    std::mt19937_64 rng(0xC0FFEE02);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 120; ++trial) {
        IntMatrix a = random_matrix(rng, size(rng), size(rng), 20);
        SmithResult s = smith_normal_form(a);
        REQUIRE(s.diagonal.size() == std::min(a.rows(), a.cols()));
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            if (s.diagonal[i + 1] != 0) {
                REQUIRE(s.diagonal[i] != 0);
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            }
        }
        IntMatrix b = a;
        random_unimodular_ops(rng, b, 30);
        SmithResult t = smith_normal_form(b);
        CHECK(s.diagonal == t.diagonal);
        CHECK(integer_rank(a) == s.rank);
        CHECK(rank_mod_p(a, 1000003) <= s.rank);
    }
}

TEST_CASE("rank over prime fields agrees with invariant factors") {
    std::mt19937_64 rng(0xC0FFEE03);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 5, 12);
        SmithResult s = smith_normal_form(a);
        for (std::int64_t p : {2, 3, 5, 1000003}) {
            std::size_t expected = 0;
            for (const Int& v : s.diagonal)
                if (v != 0 && v % p != 0) ++expected;
            CHECK(rank_mod_p(a, p) == expected);
        }
    }
}

TEST_CASE("chain complex construction is validated") {
    CHECK_THROWS_AS(ChainComplex::create({1, 1}, {}), ValidationError);
    CHECK_THROWS_AS(ChainComplex::create({2, 1}, {IntMatrix{{1}, {0}, {0}}}),
                    ValidationError);
    // Boundaries composing to something nonzero are rejected.
    CHECK_THROWS_AS(
        ChainComplex::create({1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}}),
        ValidationError);
}

TEST_CASE("circle complex homology, plain and reduced") {
    ChainComplex circle =
        ChainComplex::create({2, 2}, {IntMatrix{{-1, -1}, {1, 1}}});
    GradedGroup h = circle.homology(Coefficients::integers());
    CHECK(h.rank(0) == 1);
    CHECK(h.rank(1) == 1);
    CHECK(h.entry(0).torsion.empty());
    GradedGroup reduced = circle.homology(Coefficients::integers(), true);
    CHECK(reduced.rank(0) == 0);
    CHECK(reduced.rank(1) == 1);
    CHECK(reduced.reduced());
}

TEST_CASE("one cell per degree with alternating doubled boundaries") {
    ChainComplex c = truncated_projective_model(2);
    GradedGroup hz = c.homology(Coefficients::integers());
    CHECK(hz.rank(0) == 1);
    CHECK(hz.entry(1).rank == 0);
    CHECK(hz.entry(1).torsion == std::vector<Int>{2});
    CHECK(hz.entry(2).trivial());
    GradedGroup h2 = c.homology(Coefficients::mod(2));
    CHECK(h2.rank(0) == 1);
    CHECK(h2.rank(1) == 1);
    CHECK(h2.rank(2) == 1);
    GradedGroup hq = c.homology(Coefficients::rationals());
    CHECK(hq.rank(0) == 1);
    CHECK(hq.rank(1) == 0);
    CHECK(hq.rank(2) == 0);
}

TEST_CASE("relative homology via quotient complexes") {
    ChainComplex c = truncated_projective_model(4);

    SubcomplexCells through_degree_3 = {{0}, {0}, {0}, {0}};
    GradedGroup rel = relative_homology(c, through_degree_3,
                                        Coefficients::integers());
    CHECK(rel.rank(4) == 1);
    CHECK(rel.entry(3).trivial());

    SubcomplexCells through_degree_2 = {{0}, {0}, {0}};
    GradedGroup rel2 = relative_homology(c, through_degree_2,
                                         Coefficients::integers());
    CHECK(rel2.entry(3).rank == 0);
    CHECK(rel2.entry(3).torsion == std::vector<Int>{2});
    CHECK(rel2.entry(4).trivial());
    GradedGroup rel2_mod2 = relative_homology(c, through_degree_2,
                                              Coefficients::mod(2));
    CHECK(rel2_mod2.rank(3) == 1);
    CHECK(rel2_mod2.rank(4) == 1);

    // Striking everything leaves the zero group.
    SubcomplexCells everything = {{0}, {0}, {0}, {0}, {0}};
    CHECK(relative_homology(c, everything, Coefficients::integers()).is_zero());
}

TEST_CASE("quotient complexes reject bad subcomplexes") {
    ChainComplex circle =
        ChainComplex::create({2, 2}, {IntMatrix{{-1, -1}, {1, 1}}});
    // Edge without its endpoints is not boundary-closed.
    CHECK_THROWS_AS(quotient_complex(circle, {{}, {0}}), ValidationError);
    // Out-of-range cell index.
    CHECK_THROWS_AS(quotient_complex(circle, {{5}}), ValidationError);
    // Unsorted index list.
    CHECK_THROWS_AS(quotient_complex(circle, {{1, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("random two-step complexes: euler counts and coefficient comparisons") {
    std::mt19937_64 rng(0xC0FFEE04);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t a = size(rng), b = size(rng), c = size(rng);
        ChainComplex cx = ChainComplex::create(
            {a, b, c}, {IntMatrix(a, b), random_matrix(rng, b, c, 6)});

        GradedGroup hz = cx.homology(Coefficients::integers());
        GradedGroup hq = cx.homology(Coefficients::rationals());
        const long euler = static_cast<long>(a) - static_cast<long>(b) +
                           static_cast<long>(c);
        CHECK(hz.euler_characteristic() == euler);
        CHECK(hq.euler_characteristic() == euler);

        for (long q = 0; q <= 2; ++q) {
            CHECK(hq.rank(q) == hz.rank(q));
            CHECK(hq.entry(q).torsion.empty());
        }
        for (std::int64_t p : {2, 3, 5}) {
            GradedGroup hp = cx.homology(Coefficients::mod(p));
            CHECK(hp.euler_characteristic() == euler);
            for (long q = 0; q <= 2; ++q) {
                long expected = hz.rank(q);
                for (const Int& t : hz.entry(q).torsion)
                    if (t % p == 0) ++expected;
                if (q > 0)
                    for (const Int& t : hz.entry(q - 1).torsion)
                        if (t % p == 0) ++expected;
                CHECK(hp.rank(q) == expected);
            }
        }
    }
}

TEST_CASE("graded groups normalize torsion and validate operations") {
    GradedGroup g(Coefficients::integers(), false);
    DegreeEntry e;
    e.rank = 1;
    e.torsion = {6, 4};
    g.set_entry(1, e);
    CHECK(g.entry(1).torsion == std::vector<Int>{2, 12});

    CHECK(normalize_torsion({2, 3}) == std::vector<Int>{6});
    CHECK(normalize_torsion({4, 6, 10}) == std::vector<Int>{2, 2, 60});
    CHECK(normalize_torsion({1, 1}) == std::vector<Int>{});

    GradedGroup field(Coefficients::mod(2), false);
    DegreeEntry bad;
    bad.rank = 0;
    bad.torsion = {2};
    CHECK_THROWS_AS(field.set_entry(0, bad), ValidationError);

    CHECK_THROWS_AS(shift(g, -2), ValidationError);
    GradedGroup other(Coefficients::mod(2), false);
    CHECK_THROWS_AS(direct_sum(g, other), ValidationError);
    CHECK_THROWS_AS(tensor(g, g), ValidationError); // torsion over Z
}

TEST_CASE("tensor of two circles gives the torus ranks") {
    GradedGroup circle(Coefficients::rationals(), false);
    circle.add_free(0, 1);
    circle.add_free(1, 1);
    GradedGroup torus = tensor(circle, circle);
    CHECK(torus.rank(0) == 1);
    CHECK(torus.rank(1) == 2);
    CHECK(torus.rank(2) == 1);
    CHECK(torus.euler_characteristic() == 0);
}

TEST_CASE("graded group serialization round-trips") {
    GradedGroup g(Coefficients::integers(), false);
    g.add_free(0, 1);
    g.add_free(3, 2);
    g.add_torsion(1, 2);
    g.add_torsion(1, 4);
    GradedGroup back = GradedGroup::from_json_string(g.to_json_string());
    CHECK(back == g);

    CHECK(g.to_csv() == "degree,rank,torsion\n0,1,\n1,0,2 4\n3,2,\n");
    const std::string pretty = g.to_pretty("H_");
    CHECK(pretty.find("H_0 = Z") != std::string::npos);
    CHECK(pretty.find("H_1 = Z/2 + Z/4") != std::string::npos);
    CHECK(pretty.find("H_3 = Z^2") != std::string::npos);

    GradedGroup zero(Coefficients::mod(5), true);
    CHECK(GradedGroup::from_json_string(zero.to_json_string()) == zero);
    CHECK(zero.to_pretty("H~").find("H~* = 0") != std::string::npos);
    CHECK(zero.max_degree() == -1);
}

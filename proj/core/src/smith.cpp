#include "confighom/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace confighom {
namespace {

// Position of a nonzero entry of minimal absolute value in the submatrix
// starting at (t, t); returns false when that submatrix is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            Int mag = abs(v);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pr = i;
                pc = j;
                if (best == 1) return true;
            }
        }
    return found;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
}

// Quotient rounded to the nearest integer, so the remainder v - q*p has
// absolute value at most |p|/2. Keeping remainders small is what stops
// entries from blowing up during the elimination.
Int nearest_quotient(const Int& v, const Int& p) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    if (2 * abs(r) > abs(p)) {
        if ((r < 0) == (p < 0))
            ++q;
        else
            --q;
    }
    return q;
}

} // namespace

SmithResult smith_normal_form(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t dim = std::min(m, n);
    SmithResult out;
    out.diagonal.assign(dim, Int(0));

    for (std::size_t t = 0; t < dim; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(a, t, pr, pc)) break; // residual is zero

        // Each round moves the smallest residual entry into the pivot, then
        // reduces the pivot column and row with nearest-integer quotients.
        // Any leftover remainder has absolute value at most half the pivot,
        // so the pivot at least halves whenever a round repeats; the row
        // addition in the divisibility step feeds a non-multiple into the
        // same shrinking process. Hence the loop terminates, and quotients
        // never involve the large fill-in entries directly.
        for (;;) {
            swap_rows(a, t, pr);
            swap_cols(a, t, pc);
            const Int p = a.at(t, t);

            bool remainder = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = nearest_quotient(a.at(i, t), p);
                if (q != 0)
                    for (std::size_t j = t; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) remainder = true;
            }
            if (!remainder) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a.at(t, j) == 0) continue;
                    Int q = nearest_quotient(a.at(t, j), p);
                    if (q != 0)
                        for (std::size_t i = t; i < m; ++i)
                            a.at(i, j) -= q * a.at(i, t);
                    if (a.at(t, j) != 0) remainder = true;
                }
            }
            if (!remainder) {
                // Row and column are clear; make the pivot divide the rest of
                // the residual so the diagonal comes out in divisibility
                // order up to the final repair pass.
                bool fed = false;
                for (std::size_t i = t + 1; i < m && !fed; ++i)
                    for (std::size_t j = t + 1; j < n && !fed; ++j)
                        if (a.at(i, j) % p != 0) {
                            for (std::size_t c = t; c < n; ++c)
                                a.at(t, c) += a.at(i, c);
                            fed = true;
                        }
                if (!fed) break;
            }
            find_pivot(a, t, pr, pc); // pivot itself is nonzero, so this succeeds
        }
        out.diagonal[t] = abs(a.at(t, t));
    }

    // Repair the divisibility chain: diag(a, b) and diag(gcd, lcm) are
    // equivalent, so bubble gcd/lcm passes until each entry divides the next.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            Int &x = out.diagonal[i], &y = out.diagonal[i + 1];
            if (x == 0 || y == 0 || y % x == 0) continue;
            Int g = gcd(x, y);
            Int l = x / g * y;
            x = g;
            y = l;
            changed = true;
        }
    }

    for (const Int& d : out.diagonal)
        if (d != 0) ++out.rank;
    return out;
}

std::size_t integer_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

std::size_t rank_mod_p(const IntMatrix& a, std::int64_t p) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::int64_t> w(m * n);
    Int pp(static_cast<long>(p));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int r = a.at(i, j) % pp;
            if (r < 0) r += pp;
            w[i * n + j] = r.get_si();
        }

    auto mulmod = [p](std::int64_t x, std::int64_t y) {
        return static_cast<std::int64_t>(
            static_cast<__int128>(x) * static_cast<__int128>(y) % p);
    };
    auto inv = [&, p](std::int64_t x) { // Fermat: x^(p-2) mod p
        std::int64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && w[piv * n + col] == 0) ++piv;
        if (piv == m) continue;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(w[piv * n + j], w[rank * n + j]);
        std::int64_t ip = inv(w[rank * n + col]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            std::int64_t f = mulmod(w[i * n + col], ip);
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) {
                std::int64_t v = w[i * n + j] - mulmod(f, w[rank * n + j]);
                w[i * n + j] = v < 0 ? v + p : v;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace confighom

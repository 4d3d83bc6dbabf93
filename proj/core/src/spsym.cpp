#include "confighom/spsym.hpp"

#include "confighom/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace confighom::spsym {

using nlohmann::json;

long SymCell::weight() const {
    long s = rho + static_cast<long>(circles.size());
    for (const DiscPower& d : discs) s += d.power;
    return s;
}

long SymCell::degree() const {
    long s = static_cast<long>(circles.size());
    for (const DiscPower& d : discs) s += 2 * d.power;
    return s;
}

std::string SymCell::label() const {
    std::vector<std::string> parts;
    if (rho == 1)
        parts.push_back("v0");
    else if (rho > 1)
        parts.push_back("v0^" + std::to_string(rho));
    for (long i : circles) parts.push_back("e" + std::to_string(i));
    for (const DiscPower& d : discs)
        parts.push_back("SP" + std::to_string(d.power) + "D" + std::to_string(d.disc));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "·" + parts[i];
    return out;
}

std::string chain_to_string(const Chain& c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [cell, coeff] : c) {
        if (coeff > 0 && !first) out << " + ";
        if (coeff < 0) out << (first ? "-" : " - ");
        Int mag = abs(coeff);
        if (mag != 1) out << mag.get_str() << "*";
        out << cell.label();
        first = false;
    }
    return out.str();
}

namespace {

void validate_cell(const SymCell& c) {
    if (c.rho < 0) throw ValidationError("cell has negative v0 multiplicity");
    for (std::size_t i = 0; i < c.circles.size(); ++i) {
        if (c.circles[i] < 1)
            throw ValidationError("circle indices are 1-based");
        if (i && c.circles[i] <= c.circles[i - 1])
            throw ValidationError("circle indices must be strictly increasing");
    }
    for (std::size_t i = 0; i < c.discs.size(); ++i) {
        if (c.discs[i].disc < 1 || c.discs[i].power < 1)
            throw ValidationError("disc factors need 1-based index and power >= 1");
        if (i && c.discs[i].disc <= c.discs[i - 1].disc)
            throw ValidationError("disc indices must be strictly increasing");
    }
}

void add_term(Chain& chain, const SymCell& cell, const Int& coeff) {
    if (coeff == 0) return;
    Int& v = chain[cell];
    v += coeff;
    if (v == 0) chain.erase(cell);
}

} // namespace

Chain star_product(const SymCell& a, const SymCell& b) {
    validate_cell(a);
    validate_cell(b);

    // Koszul sign: each pair of circle generators that must cross to restore
    // increasing order flips the sign; a repeated circle kills the product.
    long crossings = 0;
    for (long x : a.circles)
        for (long y : b.circles) {
            if (x == y) return {};
            if (x > y) ++crossings;
        }

    SymCell out;
    out.rho = a.rho + b.rho;
    out.circles.resize(a.circles.size() + b.circles.size());
    std::merge(a.circles.begin(), a.circles.end(), b.circles.begin(),
               b.circles.end(), out.circles.begin());

    Int coeff = (crossings % 2 == 0) ? 1 : -1;
    std::size_t i = 0, j = 0;
    while (i < a.discs.size() || j < b.discs.size()) {
        if (j == b.discs.size() ||
            (i < a.discs.size() && a.discs[i].disc < b.discs[j].disc)) {
            out.discs.push_back(a.discs[i++]);
        } else if (i == a.discs.size() || b.discs[j].disc < a.discs[i].disc) {
            out.discs.push_back(b.discs[j++]);
        } else {
            long s = a.discs[i].power, t = b.discs[j].power;
            coeff *= binomial(s + t, t);
            out.discs.push_back({a.discs[i].disc, s + t});
            ++i;
            ++j;
        }
    }
    Chain result;
    add_term(result, out, coeff);
    return result;
}

Chain star_product(const Chain& a, const Chain& b) {
    Chain result;
    for (const auto& [ca, va] : a)
        for (const auto& [cb, vb] : b)
            for (const auto& [cell, coeff] : star_product(ca, cb))
                add_term(result, cell, va * vb * coeff);
    return result;
}

TwoComplexPresentation TwoComplexPresentation::point() { return {}; }

TwoComplexPresentation TwoComplexPresentation::sphere() {
    TwoComplexPresentation p;
    p.disc_count = 1;
    p.boundary.disc_attach.push_back({});
    return p;
}

TwoComplexPresentation TwoComplexPresentation::wedge_of_circles(long w) {
    if (w < 0) throw ValidationError("circle count must be >= 0");
    TwoComplexPresentation p;
    p.w = w;
    return p;
}

void TwoComplexPresentation::validate() const {
    if (w < 0 || disc_count < 0)
        throw ValidationError("presentation needs w >= 0 and disc_count >= 0");
    if (static_cast<long>(boundary.disc_attach.size()) != disc_count)
        throw ValidationError("need one attaching chain per disc");
    for (const auto& row : boundary.disc_attach) {
        if (static_cast<long>(row.size()) != w)
            throw ValidationError("attaching chains need one coefficient per circle");
        if (!boundary.use_table)
            for (const Int& c : row)
                if (c != 0)
                    throw ValidationError(
                        "zero boundary rule requires zero attaching chains; "
                        "supply a boundary table for nonzero attachments");
    }
    for (const auto& [key, chain] : boundary.table) {
        auto [disc, power] = key;
        if (!boundary.use_table)
            throw ValidationError("boundary table present but rule is zero");
        if (disc < 1 || disc > disc_count)
            throw ValidationError("boundary table disc index out of range");
        if (power < 2)
            throw ValidationError("boundary table covers powers >= 2 only");
        for (const auto& [cell, coeff] : chain) {
            validate_cell(cell);
            (void)coeff;
            for (long i : cell.circles)
                if (i > w) throw ValidationError("boundary chain uses unknown circle");
            for (const DiscPower& dp : cell.discs)
                if (dp.disc > disc_count)
                    throw ValidationError("boundary chain uses unknown disc");
            if (cell.weight() != power)
                throw ValidationError("boundary chain term has weight " +
                                      std::to_string(cell.weight()) + ", expected " +
                                      std::to_string(power));
            if (cell.degree() != 2 * power - 1)
                throw ValidationError("boundary chain term has degree " +
                                      std::to_string(cell.degree()) + ", expected " +
                                      std::to_string(2 * power - 1));
        }
    }
}

TwoComplexPresentation TwoComplexPresentation::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad presentation JSON: ") + e.what());
    }
    TwoComplexPresentation p;
    p.w = j.value("w", 0L);
    if (j.contains("discs")) {
        for (const auto& disc : j["discs"]) {
            std::vector<Int> row;
            for (const auto& c : disc.at("attach")) row.emplace_back(c.get<long>());
            p.boundary.disc_attach.push_back(std::move(row));
        }
    }
    p.disc_count = static_cast<long>(p.boundary.disc_attach.size());
    if (j.contains("higher_power_rule") && !j["higher_power_rule"].is_string()) {
        p.boundary.use_table = true;
        for (const auto& entry : j["higher_power_rule"].at("table")) {
            long disc = entry.at("disc").get<long>();
            long power = entry.at("power").get<long>();
            Chain chain;
            for (const auto& term : entry.at("chain")) {
                SymCell cell;
                cell.rho = term.value("rho", 0L);
                if (term.contains("circles"))
                    for (const auto& c : term["circles"]) cell.circles.push_back(c.get<long>());
                if (term.contains("discs"))
                    for (const auto& dpj : term["discs"])
                        cell.discs.push_back(
                            {dpj.at("disc").get<long>(), dpj.at("power").get<long>()});
                add_term(chain, cell, Int(term.at("coeff").get<long>()));
            }
            p.boundary.table[{disc, power}] = std::move(chain);
        }
    } else if (j.contains("higher_power_rule") &&
               j["higher_power_rule"].get<std::string>() != "zero") {
        throw ValidationError("higher_power_rule must be \"zero\" or a table");
    }
    p.validate();
    return p;
}

std::vector<SymCell> enumerate_cells(const TwoComplexPresentation& p, long n,
                                     bool include_reduced_only) {
    p.validate();
    if (n < 0) throw ValidationError("level must be >= 0");

    std::vector<SymCell> cells;
    std::vector<long> chosen_circles;

    // Assign powers s_j >= 0 to discs j..disc_count, then absorb the leftover
    // weight into v0 unless only reduced cells are wanted.
    auto assign_discs = [&](auto&& self, long disc, long remaining,
                            std::vector<DiscPower>& acc) -> void {
        if (disc > p.disc_count) {
            if (include_reduced_only && remaining != 0) return;
            SymCell c;
            c.rho = remaining;
            c.circles = chosen_circles;
            c.discs = acc;
            cells.push_back(std::move(c));
            return;
        }
        self(self, disc + 1, remaining, acc);
        for (long s = 1; s <= remaining; ++s) {
            acc.push_back({disc, s});
            self(self, disc + 1, remaining - s, acc);
            acc.pop_back();
        }
    };
    auto choose_circles = [&](auto&& self, long next, long remaining) -> void {
        std::vector<DiscPower> acc;
        assign_discs(assign_discs, 1, remaining, acc);
        if (remaining == 0) return;
        for (long i = next; i <= p.w; ++i) {
            chosen_circles.push_back(i);
            self(self, i + 1, remaining - 1);
            chosen_circles.pop_back();
        }
    };
    choose_circles(choose_circles, 1, n);

    std::sort(cells.begin(), cells.end(), [](const SymCell& a, const SymCell& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    return cells;
}

namespace {

// Boundary of a single generator SP^s D_j from the presentation data.
Chain generator_boundary(const TwoComplexPresentation& p, long disc, long power) {
    if (power == 1) {
        Chain out;
        const auto& row = p.boundary.disc_attach[static_cast<std::size_t>(disc - 1)];
        for (long i = 1; i <= p.w; ++i) {
            const Int& c = row[static_cast<std::size_t>(i - 1)];
            if (c == 0) continue;
            SymCell e;
            e.circles.push_back(i);
            add_term(out, e, c);
        }
        return out;
    }
    if (!p.boundary.use_table) return {};
    auto it = p.boundary.table.find({disc, power});
    return it == p.boundary.table.end() ? Chain{} : it->second;
}

// Graded Leibniz rule across the cell's factors. Only disc generators have
// nonzero boundary; the sign is (-1)^(degree of the factors to the left).
Chain cell_boundary(const TwoComplexPresentation& p, const SymCell& cell) {
    Chain out;
    const long t = static_cast<long>(cell.circles.size());
    long degree_before = t;
    for (std::size_t l = 0; l < cell.discs.size(); ++l) {
        Chain df = generator_boundary(p, cell.discs[l].disc, cell.discs[l].power);
        if (!df.empty()) {
            SymCell prefix{cell.rho, cell.circles,
                           {cell.discs.begin(), cell.discs.begin() + static_cast<long>(l)}};
            SymCell suffix{0, {},
                           {cell.discs.begin() + static_cast<long>(l) + 1, cell.discs.end()}};
            Chain term = star_product(star_product(Chain{{prefix, 1}}, df),
                                      Chain{{suffix, 1}});
            Int sign = (degree_before % 2 == 0) ? 1 : -1;
            for (const auto& [c, v] : term) add_term(out, c, sign * v);
        }
        degree_before += 2 * cell.discs[l].power;
    }
    return out;
}

} // namespace

ChainComplex sp_chain_complex(const TwoComplexPresentation& p, long n, bool reduced) {
    std::vector<SymCell> cells = enumerate_cells(p, n, reduced);

    long top = 0;
    for (const SymCell& c : cells) top = std::max(top, c.degree());
    std::vector<std::map<SymCell, std::size_t>> index(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
    for (const SymCell& c : cells) {
        auto q = static_cast<std::size_t>(c.degree());
        index[q][c] = dims[q]++;
        labels[q].push_back(c.label());
    }

    std::vector<IntMatrix> boundaries;
    for (std::size_t q = 1; q <= static_cast<std::size_t>(top); ++q) {
        IntMatrix d(dims[q - 1], dims[q]);
        for (const auto& [cell, col] : index[q]) {
            for (const auto& [bcell, coeff] : cell_boundary(p, cell)) {
                // In the reduced complex, images that fall into the
                // level-(n-1) subspace (rho >= 1) are quotiented away.
                if (reduced && bcell.rho >= 1) continue;
                auto it = index[q - 1].find(bcell);
                if (it == index[q - 1].end())
                    throw ValidationError("boundary left the weight-" +
                                          std::to_string(n) + " basis at cell " +
                                          cell.label());
                d.at(it->second, col) = coeff;
            }
        }
        boundaries.push_back(std::move(d));
    }

    ChainComplex complex = ChainComplex::create(std::move(dims), std::move(boundaries));
    complex.set_labels(std::move(labels));
    return complex;
}

GradedGroup mattuck_reduced_sp(long g, long n, const Coefficients& field) {
    if (g < 1)
        throw HypothesisError("genus-at-least-one",
                              "closed form needs genus >= 1, got " + std::to_string(g));
    if (n < 2 * g)
        throw HypothesisError(
            "level-at-least-2g",
            "closed form is valid for level >= 2*genus; got level " +
                std::to_string(n) + " < " + std::to_string(2 * g));
    if (!field.is_field())
        throw ValidationError("closed form is tabulated over a field");
    GradedGroup out(field, true);
    const long shift = 2 * n - 2 * g;
    for (long q = 0; q <= 2 * g; ++q) {
        Int dim = binomial(2 * g, q);
        out.add_free(shift + q, dim.get_si());
    }
    return out;
}

MonotonicityReport steenrod_monotonicity_check(const TwoComplexPresentation& p,
                                               long n_max, const Coefficients& field) {
    if (!field.is_field())
        throw ValidationError("monotonicity check compares field dimensions");
    if (n_max < 1) throw ValidationError("need n_max >= 1");

    MonotonicityReport report;
    GradedGroup prev = sp_chain_complex(p, 0, false).homology(field);
    for (long n = 1; n <= n_max; ++n) {
        GradedGroup cur = sp_chain_complex(p, n, false).homology(field);
        long qmax = std::max(prev.max_degree(), cur.max_degree());
        for (long q = 0; q <= qmax; ++q) {
            MonotonicityReport::Entry e;
            e.n = n;
            e.q = q;
            e.prev_dim = prev.rank(q);
            e.cur_dim = cur.rank(q);
            e.pass = e.prev_dim <= e.cur_dim;
            if (!e.pass) report.all_pass = false;
            if (e.prev_dim != 0 || e.cur_dim != 0 || !e.pass)
                report.entries.push_back(e);
        }
        prev = std::move(cur);
    }
    return report;
}

std::vector<GradedGroup> sp_relative_family(const TwoComplexPresentation& p,
                                            long max_level,
                                            const Coefficients& field) {
    if (max_level < 0) throw ValidationError("need max_level >= 0");
    std::vector<GradedGroup> family;
    family.push_back(GradedGroup::single(field, false, 0, 1)); // level 0: a point
    for (long l = 1; l <= max_level; ++l)
        family.push_back(sp_chain_complex(p, l, true).homology(field));
    return family;
}

} // namespace confighom::spsym

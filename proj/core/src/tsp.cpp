#include "confighom/tsp.hpp"

#include "confighom/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace confighom::tsp {

using nlohmann::json;

ChainComplex tp_circle_complex(long n) {
    if (n < 0) throw ValidationError("truncation level must be >= 0");
    std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 1);
    std::vector<IntMatrix> boundaries;
    std::vector<std::vector<std::string>> labels;
    labels.push_back({"sigma^0"});
    for (long k = 1; k <= n; ++k) {
        IntMatrix d(1, 1);
        d.at(0, 0) = (k % 2 == 0) ? 2 : 0;
        boundaries.push_back(std::move(d));
        labels.push_back({"sigma^" + std::to_string(k)});
    }
    ChainComplex c = ChainComplex::create(std::move(dims), std::move(boundaries));
    c.set_labels(std::move(labels));
    return c;
}

std::string ReducedTPTable::to_json_string(int indent) const {
    json j = json::parse(table.to_json_string(0));
    j["level"] = level;
    return j.dump(indent);
}

ReducedTPTable ReducedTPTable::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad reduced-table JSON: ") + e.what());
    }
    if (!j.contains("level"))
        throw ValidationError("reduced-table JSON needs a level field");
    ReducedTPTable out;
    out.level = j["level"].get<long>();
    out.table = GradedGroup::from_json_string(text);
    if (!out.table.reduced())
        throw ValidationError("reduced-table JSON must set reduced: true");
    if (out.level >= 1 && out.table.rank(0) != 0)
        throw ValidationError("reduced table of level >= 1 cannot have degree-0 classes");
    return out;
}

ReducedTPTable reduced_tp_circle(long n, const Coefficients& field) {
    if (n < 0) throw ValidationError("truncation level must be >= 0");
    if (!field.is_field())
        throw ValidationError("reduced level tables are kept over a field");
    // Level n is an n-sphere; level 0 is the two-point space by convention.
    return {n, GradedGroup::single(field, true, n, 1)};
}

ReducedTPFamily circle_reduced_family(long n, const Coefficients& field) {
    ReducedTPFamily fam;
    for (long l = 0; l <= n; ++l) fam.push_back(reduced_tp_circle(l, field));
    return fam;
}

namespace {

void check_family(const ReducedTPFamily& fam, long n, const Coefficients& field) {
    if (static_cast<long>(fam.size()) <= n)
        throw ValidationError("factor family must supply levels 0.." +
                              std::to_string(n));
    for (long l = 0; l <= n; ++l) {
        const ReducedTPTable& t = fam[static_cast<std::size_t>(l)];
        if (t.level != l)
            throw ValidationError("factor family must be indexed by level");
        if (t.table.coefficients() != field)
            throw ValidationError("factor family coefficients mismatch");
        if (!t.table.reduced())
            throw ValidationError("factor tables must be reduced");
    }
}

} // namespace

ReducedTPTable wedge_reduced_tp(const std::vector<ReducedTPFamily>& factors,
                                long n, const Coefficients& field) {
    if (n < 0) throw ValidationError("level must be >= 0");
    if (!field.is_field())
        throw ValidationError("wedge combinator works over a field");
    for (const ReducedTPFamily& f : factors) check_family(f, n, field);

    const GradedGroup unit = GradedGroup::single(field, true, 0, 1);
    GradedGroup sum(field, true);

    // Walk all compositions of n into factors.size() parts, tensoring the
    // chosen level table of each factor.
    std::vector<long> parts(factors.size(), 0);
    auto recurse = [&](auto&& self, std::size_t idx, long remaining) -> void {
        if (idx == factors.size()) {
            if (remaining != 0) return;
            GradedGroup term = unit;
            for (std::size_t i = 0; i < factors.size(); ++i)
                term = tensor(term, factors[i][static_cast<std::size_t>(parts[i])].table);
            sum = direct_sum(sum, term);
            return;
        }
        for (long r = 0; r <= remaining; ++r) {
            parts[idx] = r;
            self(self, idx + 1, remaining - r);
        }
    };
    recurse(recurse, 0, n);
    return {n, sum};
}

SplittingReport mod2_tp_splitting_check(const std::vector<GradedGroup>& full_tables,
                                        const ReducedTPFamily& reduced_tables) {
    if (full_tables.empty())
        throw ValidationError("splitting check needs the level-0 table");
    if (reduced_tables.size() < full_tables.size())
        throw ValidationError("splitting check needs a reduced table per level");
    for (const GradedGroup& t : full_tables)
        if (!t.coefficients().is_mod2())
            throw ValidationError("splitting check is a mod-2 statement");

    SplittingReport report;
    long qmax = 0;
    for (const GradedGroup& t : full_tables) qmax = std::max(qmax, t.max_degree());
    for (const ReducedTPTable& t : reduced_tables)
        qmax = std::max(qmax, t.table.max_degree());

    for (std::size_t k = 1; k < full_tables.size(); ++k) {
        for (long q = 0; q <= qmax; ++q) {
            SplittingReport::Entry e;
            e.k = static_cast<long>(k);
            e.q = q;
            e.full_dim = full_tables[k].rank(q);
            e.split_dim = full_tables[k - 1].rank(q) + reduced_tables[k].table.rank(q);
            e.pass = e.full_dim == e.split_dim;
            if (!e.pass) report.all_pass = false;
            if (e.full_dim != 0 || e.split_dim != 0 || !e.pass)
                report.entries.push_back(e);
        }
    }
    return report;
}

} // namespace confighom::tsp

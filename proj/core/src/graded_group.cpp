#include "confighom/graded_group.hpp"

#include <json.hpp>

#include <sstream>

namespace confighom {

using nlohmann::json;

std::vector<Int> normalize_torsion(std::vector<Int> orders) {
    for (const Int& t : orders)
        if (t < 1) throw ValidationError("torsion order must be >= 1");
    // Same gcd/lcm bubbling that repairs a Smith diagonal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
            if (orders[i + 1] % orders[i] == 0) continue;
            Int g = gcd(orders[i], orders[i + 1]);
            Int l = orders[i] / g * orders[i + 1];
            orders[i] = g;
            orders[i + 1] = l;
            changed = true;
        }
    }
    std::erase(orders, Int(1));
    return orders;
}

GradedGroup GradedGroup::single(Coefficients coeffs, bool reduced, long degree,
                                long rank) {
    GradedGroup g(coeffs, reduced);
    g.add_free(degree, rank);
    return g;
}

void GradedGroup::set_entry(long degree, DegreeEntry entry) {
    if (degree < 0) throw ValidationError("negative degree in graded group");
    if (entry.rank < 0) throw ValidationError("negative rank in graded group");
    if (!entry.torsion.empty()) {
        if (coefficients_.is_field())
            throw ValidationError("torsion is meaningless over a field");
        entry.torsion = normalize_torsion(std::move(entry.torsion));
    }
    if (entry.trivial())
        entries_.erase(degree);
    else
        entries_[degree] = std::move(entry);
}

void GradedGroup::add_free(long degree, long rank) {
    if (rank == 0) return;
    DegreeEntry e = entry(degree);
    e.rank += rank;
    set_entry(degree, std::move(e));
}

void GradedGroup::add_torsion(long degree, const Int& order) {
    DegreeEntry e = entry(degree);
    e.torsion.push_back(order);
    set_entry(degree, std::move(e));
}

DegreeEntry GradedGroup::entry(long degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? DegreeEntry{} : it->second;
}

long GradedGroup::max_degree() const {
    return entries_.empty() ? -1 : entries_.rbegin()->first;
}

long GradedGroup::euler_characteristic() const {
    long chi = 0;
    for (const auto& [q, e] : entries_) chi += (q % 2 == 0 ? e.rank : -e.rank);
    return chi;
}

bool GradedGroup::operator==(const GradedGroup& o) const {
    return coefficients_ == o.coefficients_ && reduced_ == o.reduced_ &&
           entries_ == o.entries_;
}

std::string GradedGroup::to_json_string(int indent) const {
    json j;
    j["coefficients"] = coefficients_.to_string();
    j["reduced"] = reduced_;
    j["entries"] = json::array();
    for (const auto& [q, e] : entries_) {
        json entry;
        entry["degree"] = q;
        entry["rank"] = e.rank;
        entry["torsion"] = json::array();
        for (const Int& t : e.torsion) entry["torsion"].push_back(t.get_str());
        j["entries"].push_back(entry);
    }
    return j.dump(indent);
}

GradedGroup GradedGroup::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad graded-group JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coefficients") || !j.contains("entries"))
        throw ValidationError("graded-group JSON needs coefficients and entries");
    GradedGroup g(Coefficients::parse(j["coefficients"].get<std::string>()),
                  j.value("reduced", false));
    long last = -1;
    for (const auto& entry : j["entries"]) {
        long q = entry.at("degree").get<long>();
        if (q <= last)
            throw ValidationError("graded-group degrees must be strictly increasing");
        last = q;
        DegreeEntry e;
        e.rank = entry.value("rank", 0L);
        if (entry.contains("torsion"))
            for (const auto& t : entry["torsion"]) {
                if (t.is_number_integer())
                    e.torsion.emplace_back(t.get<long>());
                else
                    e.torsion.emplace_back(t.get<std::string>());
            }
        g.set_entry(q, std::move(e));
    }
    return g;
}

std::string GradedGroup::to_csv() const {
    std::ostringstream out;
    out << "degree,rank,torsion\n";
    for (const auto& [q, e] : entries_) {
        out << q << ',' << e.rank << ',';
        for (std::size_t i = 0; i < e.torsion.size(); ++i) {
            if (i) out << ' ';
            out << e.torsion[i].get_str();
        }
        out << '\n';
    }
    return out.str();
}

std::string GradedGroup::to_pretty(const std::string& symbol) const {
    std::ostringstream out;
    const std::string ring = coefficients_.to_string();
    if (entries_.empty()) {
        out << symbol << "* = 0  (" << ring << (reduced_ ? ", reduced" : "")
            << ")\n";
        return out.str();
    }
    for (const auto& [q, e] : entries_) {
        out << symbol << q << " = ";
        bool first = true;
        if (e.rank > 0) {
            out << ring;
            if (e.rank > 1) out << "^" << e.rank;
            first = false;
        }
        for (const Int& t : e.torsion) {
            if (!first) out << " + ";
            out << "Z/" << t.get_str();
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
    if (a.coefficients() != b.coefficients())
        throw ValidationError("direct sum needs matching coefficients");
    if (a.reduced() != b.reduced())
        throw ValidationError("direct sum needs matching reduced flags");
    GradedGroup out = a;
    for (const auto& [q, e] : b.entries()) {
        DegreeEntry merged = out.entry(q);
        merged.rank += e.rank;
        merged.torsion.insert(merged.torsion.end(), e.torsion.begin(),
                              e.torsion.end());
        out.set_entry(q, std::move(merged));
    }
    return out;
}

GradedGroup tensor(const GradedGroup& a, const GradedGroup& b) {
    if (a.coefficients() != b.coefficients())
        throw ValidationError("tensor needs matching coefficients");
    if (a.reduced() != b.reduced())
        throw ValidationError("tensor needs matching reduced flags");
    if (!a.coefficients().is_field())
        for (const GradedGroup* g : {&a, &b})
            for (const auto& [q, e] : g->entries())
                if (!e.torsion.empty())
                    throw ValidationError(
                        "tensor over Z requires torsion-free arguments");
    GradedGroup out(a.coefficients(), a.reduced());
    for (const auto& [p, ea] : a.entries())
        for (const auto& [q, eb] : b.entries())
            out.add_free(p + q, ea.rank * eb.rank);
    return out;
}

GradedGroup shift(const GradedGroup& a, long k) {
    GradedGroup out(a.coefficients(), a.reduced());
    for (const auto& [q, e] : a.entries()) {
        if (q + k < 0)
            throw ValidationError("shift would push a class below degree 0");
        out.set_entry(q + k, e);
    }
    return out;
}

} // namespace confighom

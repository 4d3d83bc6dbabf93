#include "confighom/braid.hpp"

#include "confighom/chain_complex.hpp"
#include "confighom/registry.hpp"
#include "confighom/tsp.hpp"

#include <json.hpp>

#include <sstream>

namespace confighom::braid {

using nlohmann::json;

void SpaceDescriptor::validate() const {
    if (d < 1) throw ValidationError("manifold dimension must be >= 1");
    if (punctures < 0) throw ValidationError("puncture count must be >= 0");
    if (closed && has_boundary)
        throw ValidationError("a closed manifold has no boundary");
    if (quotient_connectivity < -1)
        throw ValidationError("connectivity below -1 is meaningless");
}

std::string SpaceDescriptor::to_json_string(int indent) const {
    json j;
    j["d"] = d;
    j["closed"] = closed;
    j["punctures"] = punctures;
    j["has_boundary"] = has_boundary;
    j["orientable"] = orientable;
    j["quotient_connectivity"] = quotient_connectivity;
    j["quotient_model"] = quotient_model;
    return j.dump(indent);
}

SpaceDescriptor SpaceDescriptor::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad descriptor JSON: ") + e.what());
    }
    SpaceDescriptor desc;
    desc.d = j.value("d", 1L);
    desc.closed = j.value("closed", false);
    desc.punctures = j.value("punctures", 0L);
    desc.has_boundary = j.value("has_boundary", false);
    desc.orientable = j.value("orientable", true);
    desc.quotient_connectivity = j.value("quotient_connectivity", 0L);
    desc.quotient_model = j.value("quotient_model", std::string{});
    desc.validate();
    return desc;
}

CoefficientGate CoefficientGate::evaluate(const SpaceDescriptor& desc,
                                          const Coefficients& requested) {
    CoefficientGate gate;
    gate.requested = requested;
    if (requested.is_mod2()) {
        gate.verdict = GateVerdict::allowed;
        gate.reason = "mod-2 coefficients are always untwisted";
    } else if (desc.d % 2 == 0 && desc.orientable) {
        gate.verdict = GateVerdict::allowed;
        gate.reason = "configuration spaces of an even-dimensional orientable "
                      "manifold are orientable";
    } else {
        gate.verdict = GateVerdict::twisted_required;
        gate.reason = std::string("the duality needs sign-twisted integer ") +
                      "coefficients when the manifold is " +
                      (desc.d % 2 ? "odd-dimensional" : "non-orientable") +
                      "; only mod-2 tables are untwisted here";
    }
    return gate;
}

GateVerdict CoefficientGate::summary(const SpaceDescriptor& desc) {
    return (desc.d % 2 == 0 && desc.orientable) ? GateVerdict::allowed
                                                : GateVerdict::f2_only;
}

GradedGroup duality_index_flip(const GradedGroup& table, long top) {
    if (table.max_degree() > top)
        throw ValidationError("table reaches degree " +
                              std::to_string(table.max_degree()) +
                              " above the duality range " + std::to_string(top));
    GradedGroup out(table.coefficients(), false);
    for (long i = 0; i <= top; ++i) out.set_entry(i, table.entry(top - i));
    return out;
}

namespace {

struct UserModel {
    Coefficients coeffs = Coefficients::integers();
    std::vector<tsp::ReducedTPTable> levels; // levels[l].level == l
};

UserModel load_user_model(const std::string& path) {
    const std::string text = registry::read_file(registry::resolve_data_path(path));
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError("bad quotient-model JSON in " + path + ": " + e.what());
    }
    if (!j.contains("coefficients") || !j.contains("levels"))
        throw ValidationError("quotient-model file needs coefficients and levels");
    UserModel model;
    model.coeffs = Coefficients::parse(j["coefficients"].get<std::string>());
    for (const auto& lvl : j["levels"]) {
        auto table = tsp::ReducedTPTable::from_json_string(lvl.dump());
        if (table.level != static_cast<long>(model.levels.size()))
            throw ValidationError("quotient-model levels must be 0,1,2,... in order");
        if (table.table.coefficients() != model.coeffs)
            throw ValidationError("quotient-model level table coefficients mismatch");
        model.levels.push_back(std::move(table));
    }
    return model;
}

GradedGroup relative_table_circle(const SpaceDescriptor& desc, long k,
                                  const Coefficients& coeffs) {
    if (desc.d != 1)
        throw ValidationError("circle quotient model implies a one-dimensional "
                              "manifold; descriptor says d = " +
                              std::to_string(desc.d));
    ChainComplex complex = tsp::tp_circle_complex(k);
    const long cutoff = desc.boundary_case() ? k - 1 : k - 2;
    SubcomplexCells sub;
    for (long q = 0; q <= cutoff; ++q) sub.push_back({0});
    return relative_homology(complex, sub, coeffs);
}

GradedGroup relative_table_wedge(const SpaceDescriptor& desc, long w, long k,
                                 const Coefficients& coeffs) {
    if (!desc.boundary_case())
        throw ValidationError(
            "a wedge quotient model encodes a punctured or bounded manifold; "
            "for a closed one use a chain-level model (circle) or user tables");
    if (!coeffs.is_field())
        throw ValidationError("wedge quotient tables exist over fields; request "
                              "mod-2 or rational coefficients, or supply user "
                              "tables for integral data");
    std::vector<tsp::ReducedTPFamily> factors(
        static_cast<std::size_t>(w), tsp::circle_reduced_family(k, coeffs));
    return tsp::wedge_reduced_tp(factors, k, coeffs).table.with_reduced(false);
}

GradedGroup relative_table_user(const SpaceDescriptor& desc,
                                const std::string& path, long k,
                                const Coefficients& coeffs) {
    UserModel model = load_user_model(path);
    if (model.coeffs != coeffs)
        throw ValidationError("quotient-model file is over " +
                              model.coeffs.to_string() + ", requested " +
                              coeffs.to_string());
    auto level = [&](long l) -> const GradedGroup& {
        if (l < 0 || l >= static_cast<long>(model.levels.size()))
            throw ValidationError("quotient-model file " + path +
                                  " lacks level " + std::to_string(l) +
                                  "; supply reduced tables for levels 0.." +
                                  std::to_string(k));
        return model.levels[static_cast<std::size_t>(l)].table;
    };
    if (desc.boundary_case()) return level(k).with_reduced(false);
    if (k == 1) {
        // Pair against the empty level: absolute homology, so restore the
        // degree-0 class the reduced table dropped.
        GradedGroup abs = level(1).with_reduced(false);
        abs.add_free(0, 1);
        return abs;
    }
    if (!coeffs.is_mod2())
        throw ValidationError(
            "closed-case tables from reduced levels use the mod-2 splitting; "
            "request mod-2 coefficients or supply a chain-level model");
    return direct_sum(level(k), level(k - 1)).with_reduced(false);
}

} // namespace

GradedGroup braid_cohomology(const SpaceDescriptor& desc, long k,
                             const Coefficients& coeffs) {
    desc.validate();
    if (k < 1) throw ValidationError("number of points must be >= 1");

    CoefficientGate gate = CoefficientGate::evaluate(desc, coeffs);
    if (gate.verdict == GateVerdict::twisted_required)
        throw HypothesisError("twisted-coefficients-required", gate.reason);

    GradedGroup rel;
    if (desc.quotient_model == "circle") {
        rel = relative_table_circle(desc, k, coeffs);
    } else if (desc.quotient_model.rfind("wedge:", 0) == 0) {
        long w = 0;
        try {
            w = std::stol(desc.quotient_model.substr(6));
        } catch (const std::exception&) {
            throw ValidationError("bad wedge model string: " + desc.quotient_model);
        }
        if (w < 0) throw ValidationError("wedge model needs w >= 0");
        rel = relative_table_wedge(desc, w, k, coeffs);
    } else if (desc.quotient_model.rfind("user:", 0) == 0) {
        rel = relative_table_user(desc, desc.quotient_model.substr(5), k, coeffs);
    } else if (desc.quotient_model.empty()) {
        throw ValidationError(
            "descriptor has no quotient_model; supply \"circle\", \"wedge:<w>\" "
            "or \"user:<path>\" pointing at reduced level tables");
    } else {
        throw ValidationError("unknown quotient model: " + desc.quotient_model);
    }
    return duality_index_flip(rel, k * desc.d);
}

Int ordered_partition_count(long r, long s) {
    if (r < 0 || s < 0)
        throw ValidationError("partition count takes nonnegative arguments");
    if (r == 0 && s > 0)
        throw ValidationError("no 0-tuple has a positive sum");
    return weak_composition_count(r, s);
}

GradedGroup puncture_split_mod2(const std::vector<GradedGroup>& base, long d,
                                long n) {
    if (d < 1) throw ValidationError("dimension must be >= 1");
    if (n < 1) throw ValidationError("splitting needs n >= 1");
    if (static_cast<long>(base.size()) <= n)
        throw ValidationError("need base tables for levels n and n-1; have " +
                              std::to_string(base.size()) + " levels");
    for (const GradedGroup& t : base)
        if (!t.coefficients().is_mod2())
            throw ValidationError("one-puncture splitting is a mod-2 statement");

    const GradedGroup& top = base[static_cast<std::size_t>(n)];
    const GradedGroup& prev = base[static_cast<std::size_t>(n - 1)];
    GradedGroup out = top.with_reduced(false);
    for (const auto& [q, e] : prev.entries()) out.add_free(q + d, e.rank);
    return out;
}

GradedGroup multi_puncture_split(const std::vector<GradedGroup>& base, long d,
                                 long k, long n, const Coefficients& field,
                                 bool orientable) {
    if (d < 1) throw ValidationError("dimension must be >= 1");
    if (k < 1) throw ValidationError("need at least one puncture");
    if (n < 0) throw ValidationError("need n >= 0");
    if (!field.is_field())
        throw ValidationError("multi-puncture splitting is stated over a field");
    if (!field.is_mod2() && !(d % 2 == 0 && orientable))
        throw HypothesisError(
            "field-splitting-needs-even-orientable",
            "over a field other than mod-2 the splitting needs an "
            "even-dimensional orientable manifold");
    if (static_cast<long>(base.size()) <= n)
        throw ValidationError("need base tables for levels 0..n; have " +
                              std::to_string(base.size()) + " levels");
    for (const GradedGroup& t : base)
        if (t.coefficients() != field)
            throw ValidationError("base tables must match the requested field");

    GradedGroup out(field, false);
    for (long r = 0; r <= n; ++r) {
        Int mult = weak_composition_count(k - 1, n - r);
        if (mult == 0) continue;
        const long shift_by = (n - r) * (d - 1);
        for (const auto& [q, e] : base[static_cast<std::size_t>(r)].entries())
            out.add_free(q + shift_by, e.rank * mult.get_si());
    }
    return out;
}

std::string EulerReport::to_string() const {
    std::ostringstream out;
    out << "chi(closed) = " << chi_closed << ", chi(punctured, n) = "
        << chi_punctured_n << ", chi(punctured, n-1) = " << chi_punctured_nminus1
        << ", expected = " << chi_expected << ": "
        << (pass ? "consistent" : "INCONSISTENT");
    return out.str();
}

EulerReport les_euler_check(const GradedGroup& closed_table,
                            const GradedGroup& punctured_n_table,
                            const GradedGroup& punctured_nminus1_table, long d,
                            const Coefficients& field) {
    for (const GradedGroup* t :
         {&closed_table, &punctured_n_table, &punctured_nminus1_table})
        if (t->coefficients() != field)
            throw ValidationError("all three tables must be over the stated field");
    EulerReport rep;
    rep.chi_closed = closed_table.euler_characteristic();
    rep.chi_punctured_n = punctured_n_table.euler_characteristic();
    rep.chi_punctured_nminus1 = punctured_nminus1_table.euler_characteristic();
    rep.chi_expected = rep.chi_punctured_n +
                       (d % 2 == 0 ? rep.chi_punctured_nminus1
                                   : -rep.chi_punctured_nminus1);
    rep.pass = rep.chi_closed == rep.chi_expected;
    return rep;
}

} // namespace confighom::braid

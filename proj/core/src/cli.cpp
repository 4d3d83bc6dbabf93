#include "confighom/cli.hpp"

#include "confighom/bounds.hpp"
#include "confighom/braid.hpp"
#include "confighom/errors.hpp"
#include "confighom/registry.hpp"
#include "confighom/spsym.hpp"
#include "confighom/tsp.hpp"
#include "confighom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>

namespace confighom::cli {

namespace {

Coefficients parse_coeffs(const std::string& text) {
    if (text == "F2") return Coefficients::mod(2);
    if (!text.empty() && text[0] == 'F' && text.find(':') == std::string::npos &&
        text.size() > 1 && std::isdigit(static_cast<unsigned char>(text[1])))
        return Coefficients::mod(std::stoll(text.substr(1)));
    return Coefficients::parse(text);
}

void print_table(const GradedGroup& table, const std::string& format,
                 const std::string& symbol, std::ostream& out) {
    if (format == "json")
        out << table.to_json_string() << "\n";
    else if (format == "csv")
        out << table.to_csv();
    else
        out << table.to_pretty(symbol);
}

void print_bound(const bounds::BoundResult& b, const std::string& format,
                 std::ostream& out) {
    if (format == "json")
        out << b.to_json_string() << "\n";
    else
        out << b.to_pretty();
}

spsym::TwoComplexPresentation preset_presentation(const std::string& preset) {
    if (preset == "s2") return spsym::TwoComplexPresentation::sphere();
    if (preset == "point") return spsym::TwoComplexPresentation::point();
    if (preset.rfind("wedge:", 0) == 0)
        return spsym::TwoComplexPresentation::wedge_of_circles(
            std::stol(preset.substr(6)));
    throw ValidationError("unknown presentation preset: " + preset +
                          " (use s2, point, or wedge:<w>)");
}

struct Options {
    std::string verb;

    // homology
    std::string kind;
    std::string preset;
    std::string presentation_path;
    long level = 0;
    bool reduced = false;

    // braid
    std::string braid_preset;
    std::string descriptor_path;
    std::string model;
    long k = 0;
    long d = 1;
    long punctures = 0;
    bool closed = false;
    bool has_boundary = false;
    bool non_orientable = false;
    long quotient_connectivity = 0;

    // bounds
    std::string bound_op;
    std::string formula_name;
    std::string stability_kind;
    std::string s_function = "arnold";
    long n = 0;
    long r = 0;
    long w = 0;
    bool punctured = false;
    bool closed_surface = false;

    // verify / table
    std::string corpus_dir;
    std::string input_path;

    std::string coeffs = "Z";
    std::string format = "pretty";
};

int do_homology(const Options& opt, std::ostream& out) {
    const Coefficients coeffs = parse_coeffs(opt.coeffs);
    if (opt.kind == "tp") {
        if (!opt.preset.empty() && opt.preset != "circle")
            throw ValidationError("only the circle has a built-in truncated model");
        if (opt.reduced) {
            tsp::ReducedTPTable table = tsp::reduced_tp_circle(opt.level, coeffs);
            if (opt.format == "json")
                out << table.to_json_string() << "\n";
            else
                print_table(table.table, opt.format, "H~", out);
            return 0;
        }
        print_table(tsp::tp_circle_complex(opt.level).homology(coeffs), opt.format,
                    "H_", out);
        return 0;
    }
    if (opt.kind != "sp")
        throw ValidationError("homology kind must be sp or tp");
    spsym::TwoComplexPresentation p =
        opt.presentation_path.empty()
            ? preset_presentation(opt.preset.empty() ? "s2" : opt.preset)
            : spsym::TwoComplexPresentation::from_json_string(
                  registry::read_file(opt.presentation_path));
    GradedGroup table =
        spsym::sp_chain_complex(p, opt.level, opt.reduced).homology(coeffs);
    if (opt.reduced) table = table.with_reduced(true);
    print_table(table, opt.format, opt.reduced ? "H~" : "H_", out);
    return 0;
}

int do_braid(const Options& opt, std::ostream& out) {
    const Coefficients coeffs = parse_coeffs(opt.coeffs);
    braid::SpaceDescriptor desc;
    if (!opt.braid_preset.empty()) {
        if (opt.braid_preset == "closed-circle") {
            desc.d = 1;
            desc.closed = true;
            desc.quotient_model = "circle";
        } else if (opt.braid_preset == "punctured-circle") {
            desc.d = 1;
            desc.punctures = 1;
            desc.quotient_model = "circle";
        } else {
            throw ValidationError("unknown braid preset: " + opt.braid_preset +
                                  " (use closed-circle or punctured-circle)");
        }
    } else if (!opt.descriptor_path.empty()) {
        desc = braid::SpaceDescriptor::from_json_string(
            registry::read_file(opt.descriptor_path));
    } else {
        desc.d = opt.d;
        desc.closed = opt.closed;
        desc.punctures = opt.punctures;
        desc.has_boundary = opt.has_boundary;
        desc.orientable = !opt.non_orientable;
        desc.quotient_connectivity = opt.quotient_connectivity;
        desc.quotient_model = opt.model;
    }
    print_table(braid::braid_cohomology(desc, opt.k, coeffs), opt.format, "H^",
                out);
    return 0;
}

int do_bounds(const Options& opt, std::ostream& out) {
    if (opt.bound_op == "cohdim") {
        print_bound(bounds::cohdim_bound(opt.d, opt.k, opt.r, opt.punctured),
                    opt.format, out);
        return 0;
    }
    if (opt.bound_op == "connectivity") {
        bounds::ConnectivityParams params;
        params.k = opt.k;
        params.n = opt.n;
        params.r = opt.r;
        params.w = opt.w;
        params.punctured_or_boundary = opt.punctured;
        bounds::ConnectivityFormula name;
        if (opt.formula_name == "nakaoka")
            name = bounds::ConnectivityFormula::nakaoka;
        else if (opt.formula_name == "reduced-sp")
            name = bounds::ConnectivityFormula::reduced_sp;
        else if (opt.formula_name == "reduced-sp-2complex")
            name = bounds::ConnectivityFormula::reduced_sp_2complex;
        else if (opt.formula_name == "r-lower")
            name = bounds::ConnectivityFormula::r_lower;
        else
            throw ValidationError("unknown connectivity formula: " +
                                  opt.formula_name);
        print_bound(bounds::connectivity_formulas(name, params), opt.format, out);
        return 0;
    }
    if (opt.bound_op == "mod2-disc") {
        print_bound(bounds::mod2_cohdim_disc(opt.d, opt.k), opt.format, out);
        return 0;
    }
    if (opt.bound_op == "stability") {
        bounds::StabilityKind kind;
        if (opt.stability_kind == "arnold")
            kind = bounds::StabilityKind::arnold;
        else if (opt.stability_kind == "riemann-surface")
            kind = bounds::StabilityKind::riemann_surface;
        else if (opt.stability_kind == "scanning")
            kind = bounds::StabilityKind::scanning;
        else
            throw ValidationError("unknown stability kind: " + opt.stability_kind);
        bounds::SFunction s = opt.s_function == "riemann-surface"
                                  ? bounds::SFunction::riemann_surface
                                  : bounds::SFunction::arnold;
        print_bound(bounds::stability_ranges(kind, opt.k, s), opt.format, out);
        return 0;
    }
    if (opt.bound_op == "e1-circle") {
        const Coefficients F2 = Coefficients::mod(2);
        auto relX = spsym::sp_relative_family(
            spsym::TwoComplexPresentation::wedge_of_circles(1), opt.n, F2);
        auto relSX = spsym::sp_relative_family(
            spsym::TwoComplexPresentation::sphere(), opt.n / 2, F2);
        bounds::BigradedTable e1 = bounds::bcm_e1_assemble(relX, relSX, opt.n, F2);
        out << e1.to_pretty();
        print_bound(bounds::e1_connectivity(e1), opt.format, out);
        return 0;
    }
    throw ValidationError("unknown bounds operation: " + opt.bound_op);
}

int do_verify(const Options& opt, std::ostream& out) {
    if (!opt.corpus_dir.empty())
        setenv("CONFIGHOM_CORPUS_DIR", opt.corpus_dir.c_str(), 1);
    verify::Report report = verify::run_corpus();
    out << report.to_string();
    return report.all_pass ? 0 : 1;
}

int do_table(const Options& opt, std::ostream& out) {
    const std::string text = registry::read_file(opt.input_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad table JSON: ") + e.what());
    }
    if (j.contains("level")) {
        tsp::ReducedTPTable table = tsp::ReducedTPTable::from_json_string(text);
        if (opt.format == "json")
            out << table.to_json_string() << "\n";
        else
            print_table(table.table, opt.format, "H~", out);
        return 0;
    }
    print_table(GradedGroup::from_json_string(text), opt.format, "H_", out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    Options opt;
    CLI::App app{"exact homology of symmetric products, truncated symmetric "
                 "products, and configuration spaces"};
    app.require_subcommand(1);

    CLI::App* homology =
        app.add_subcommand("homology", "homology tables of sp/tp models");
    homology->add_option("kind", opt.kind, "sp or tp")->required();
    homology->add_option("--preset", opt.preset, "s2 | wedge:<w> | point | circle");
    homology->add_option("--presentation", opt.presentation_path,
                         "two-complex presentation JSON file");
    homology->add_option("-n,--level", opt.level, "product level")->required();
    homology->add_option("--coeffs", opt.coeffs, "Z | Q | F2 | Fp:<p>");
    homology->add_flag("--reduced", opt.reduced, "quotient by the previous level");
    homology->add_option("--format", opt.format)
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    CLI::App* braid_cmd =
        app.add_subcommand("braid", "configuration-space cohomology via duality");
    braid_cmd->add_option("--preset", opt.braid_preset,
                          "closed-circle | punctured-circle");
    braid_cmd->add_option("--descriptor", opt.descriptor_path,
                          "space descriptor JSON file");
    braid_cmd->add_option("-k,--points", opt.k, "number of points")->required();
    braid_cmd->add_option("--d", opt.d, "manifold dimension");
    braid_cmd->add_option("--punctures", opt.punctures);
    braid_cmd->add_flag("--closed", opt.closed);
    braid_cmd->add_flag("--boundary", opt.has_boundary);
    braid_cmd->add_flag("--non-orientable", opt.non_orientable);
    braid_cmd->add_option("--quotient-connectivity", opt.quotient_connectivity);
    braid_cmd->add_option("--model", opt.model, "circle | wedge:<w> | user:<path>");
    braid_cmd->add_option("--coeffs", opt.coeffs)->default_val("F2");
    braid_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "connectivity/cohomological-dimension bounds");
    bounds_cmd
        ->add_option("op", opt.bound_op,
                     "cohdim | connectivity | mod2-disc | stability | e1-circle")
        ->required();
    bounds_cmd->add_option("--d", opt.d);
    bounds_cmd->add_option("--k", opt.k);
    bounds_cmd->add_option("--n", opt.n);
    bounds_cmd->add_option("--r", opt.r);
    bounds_cmd->add_option("--w", opt.w);
    bounds_cmd->add_flag("--punctured", opt.punctured,
                         "removed set or boundary nonempty");
    bounds_cmd->add_option("--name", opt.formula_name,
                           "nakaoka | reduced-sp | reduced-sp-2complex | r-lower");
    bounds_cmd->add_option("--kind", opt.stability_kind,
                           "arnold | riemann-surface | scanning");
    bounds_cmd->add_option("--s", opt.s_function, "arnold | riemann-surface");
    bounds_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"pretty", "json"}));

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the deterministic check corpus");
    verify_cmd->add_option("--corpus", opt.corpus_dir,
                           "override the known-values directory");

    CLI::App* table_cmd = app.add_subcommand("table", "reformat a stored table");
    table_cmd->add_option("--in", opt.input_path, "table JSON file")->required();
    table_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (homology->parsed()) return do_homology(opt, out);
        if (braid_cmd->parsed()) return do_braid(opt, out);
        if (bounds_cmd->parsed()) return do_bounds(opt, out);
        if (verify_cmd->parsed()) return do_verify(opt, out);
        if (table_cmd->parsed()) return do_table(opt, out);
        err << "no command given\n";
        return 2;
    } catch (const HypothesisError& e) {
        err << "rejected hypothesis [" << e.reason << "]: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace confighom::cli

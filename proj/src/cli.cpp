#include "hilbpow/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hilbpow/nested.hpp"
#include "hilbpow/selftest.hpp"

namespace hilbpow::cli {

namespace {

nlohmann::json error_object(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string read_input(const std::string& path, const char* what) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw IoError(std::string("cannot read ") + what + ": " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("invalid JSON in ") + what + ": " + e.what());
    }
}

void emit_series(const MultiSeries& s, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << series_to_json(s).dump(2) << "\n";
    else
        out << s.to_string() << "\n";
}

std::string factor_line(int nvars, const Exponent& k) {
    if (nvars == 1) return "T^" + std::to_string(k[0]);
    std::string s;
    for (int i = 0; i < nvars; ++i) {
        if (k[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "T" + std::to_string(i + 1) + "^" + std::to_string(k[i]);
    }
    return s.empty() ? "1" : s;
}

struct Options {
    std::string ring = "motivic";
    std::string cls;
    std::string curve_class;
    std::string format = "text";
    std::string input;
    std::string spec_path;
    std::string oracle;
    std::vector<int> weights;
    int dim = 1;
    int depth = 2;
    int trunc = 6;
    int upto = 8;
    int order = 2;
};

void add_format_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

int run_orbifold(Options& opt, std::ostream& out) {
    const OrbifoldSpec spec =
        orbifold_spec_from_json(parse_json(read_input(opt.spec_path, "spec"), "spec"));
    const MultiSeries result = integrate(spec);
    if (opt.oracle != "toric") {
        emit_series(result, opt.format, out);
        return 0;
    }
    if (spec.fixed_points.empty())
        throw Error("spec has no \"fixed_points\" list for the toric oracle");
    const MultiSeries oracle = toric_euler_global(spec.fixed_points, spec.trunc);
    const MultiSeries euler_side =
        spec.ring == RingId::Integer ? result : specialize(result, RingId::Integer);
    const bool match = euler_side == oracle;
    if (opt.format == "json") {
        nlohmann::json doc = {
            {"series", series_to_json(result)},
            {"oracle", {{"kind", "toric"}, {"match", match}, {"series", series_to_json(oracle)}}}};
        out << doc.dump(2) << "\n";
    } else {
        emit_series(result, opt.format, out);
        out << (match ? "oracle: match\n" : "oracle: MISMATCH\n");
        if (!match) out << "oracle series: " << oracle.to_string() << "\n";
    }
    return match ? 0 : 1;
}

int run_nested(Options& opt, std::ostream& out) {
    if (!opt.spec_path.empty()) {
        const nlohmann::json j = parse_json(read_input(opt.spec_path, "spec"), "spec");
        const OrbifoldSpec spec = orbifold_spec_from_json(j, opt.depth);
        const NestedContext ctx{opt.depth, spec.ring, spec.trunc};
        emit_series(nested_integrate(spec, ctx), opt.format, out);
        return 0;
    }
    if (opt.curve_class.empty()) throw Error("nested needs either --curve-class or --spec");
    const RingId ring = ring_from_name(opt.ring);
    const NestedContext ctx{opt.depth, ring, opt.trunc};
    emit_series(nested_global_smooth(parse_element(opt.curve_class, ring), 1, ctx), opt.format,
                out);
    return 0;
}

int run_oracle(CLI::App& oracle_cmd, Options& opt, std::ostream& out) {
    SemigroupModel model;
    nlohmann::json meta;
    if (oracle_cmd.got_subcommand("partitions")) {
        model = smooth_semigroup(opt.dim);
        meta = {{"kind", "partitions"}, {"dim", opt.dim}, {"upto", opt.upto}};
    } else {
        model = abelian_quotient_semigroup(static_cast<int>(opt.weights.size()),
                                           {CyclicFactor{opt.order, opt.weights}});
        meta = {{"kind", "quotient"},
                {"order", opt.order},
                {"weights", opt.weights},
                {"upto", opt.upto},
                {"generators", model.generators}};
    }
    std::vector<std::string> counts;
    for (int n = 0; n <= opt.upto; ++n)
        counts.push_back(count_monomial_ideals(model, n).get_str());
    if (opt.format == "json") {
        meta["counts"] = counts;
        out << meta.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? " " : "") << counts[i];
        out << "\n";
    }
    return 0;
}

int dispatch(CLI::App& app, Options& opt, std::ostream& out) {
    if (app.got_subcommand("punctual")) {
        const RingId ring = ring_from_name(opt.ring);
        emit_series(punctual_series(SmoothModel{opt.dim}, ring, opt.trunc), opt.format, out);
        return 0;
    }
    if (app.got_subcommand("global")) {
        const RingId ring = ring_from_name(opt.ring);
        const RingElement cls = parse_element(opt.cls, ring);
        emit_series(global_smooth_series(cls, opt.dim, ring, opt.trunc), opt.format, out);
        return 0;
    }
    if (app.got_subcommand("zeta")) {
        const RingId ring = ring_from_name(opt.ring);
        emit_series(kapranov_zeta(parse_element(opt.cls, ring), opt.trunc), opt.format, out);
        return 0;
    }
    if (app.got_subcommand("pow")) {
        const MultiSeries a =
            series_from_json(parse_json(read_input(opt.input, "series"), "series"));
        emit_series(pow(a, parse_element(opt.cls, a.ring())), opt.format, out);
        return 0;
    }
    if (app.got_subcommand("decompose")) {
        const MultiSeries a =
            series_from_json(parse_json(read_input(opt.input, "series"), "series"));
        const PowerDecomposition d = decompose(a);
        if (opt.format == "json") {
            out << decomposition_to_json(d).dump(2) << "\n";
        } else {
            for (const auto& [k, s] : d.factors)
                out << factor_line(d.nvars, k) << ": " << s.to_string() << "\n";
        }
        return 0;
    }
    if (app.got_subcommand("orbifold")) return run_orbifold(opt, out);
    if (app.got_subcommand("nested")) return run_nested(opt, out);
    if (app.got_subcommand("oracle")) return run_oracle(*app.get_subcommand("oracle"), opt, out);
    if (app.got_subcommand("selftest")) return selftest::run_and_report(out) ? 0 : 1;
    throw Error("unreachable: unhandled subcommand");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact power structures and Hilbert scheme series"};
    app.require_subcommand(1);
    Options opt;

    auto* punctual = app.add_subcommand("punctual", "punctual series of a smooth germ");
    punctual->add_option("--ring", opt.ring, "coefficient ring")->required();
    punctual->add_option("--dim", opt.dim, "germ dimension")->required();
    punctual->add_option("--trunc", opt.trunc, "truncation order")->required();
    add_format_flag(punctual, opt);

    auto* global = app.add_subcommand("global", "Hilbert series of a smooth variety");
    global->add_option("--ring", opt.ring)->required();
    global->add_option("--dim", opt.dim)->required();
    global->add_option("--class", opt.cls, "class of the variety")->required();
    global->add_option("--trunc", opt.trunc)->required();
    add_format_flag(global, opt);

    auto* zeta = app.add_subcommand("zeta", "symmetric-power zeta series of a class");
    zeta->add_option("--ring", opt.ring)->required();
    zeta->add_option("--class", opt.cls)->required();
    zeta->add_option("--trunc", opt.trunc)->required();
    add_format_flag(zeta, opt);

    auto* powc = app.add_subcommand("pow", "raise a series to a ring element");
    powc->add_option("--input", opt.input, "series JSON file, or - for stdin")->required();
    powc->add_option("--class", opt.cls, "exponent")->required();
    add_format_flag(powc, opt);

    auto* dec = app.add_subcommand("decompose", "factor a series as prod (1-T^k)^(-s_k)");
    dec->add_option("--input", opt.input, "series JSON file, or - for stdin")->required();
    add_format_flag(dec, opt);

    auto* orb = app.add_subcommand("orbifold", "stratified orbifold series");
    auto* integ = orb->add_subcommand("integrate", "integrate a stratified spec");
    integ->add_option("spec", opt.spec_path, "spec JSON file")->required();
    integ->add_option("--oracle", opt.oracle, "also run an independent oracle")
        ->check(CLI::IsMember({"toric"}));
    add_format_flag(integ, opt);
    orb->require_subcommand(1);

    auto* nested = app.add_subcommand("nested", "depth-r nested series");
    nested->add_option("--ring", opt.ring)->capture_default_str();
    nested->add_option("--depth", opt.depth)->required();
    nested->add_option("--trunc", opt.trunc)->capture_default_str();
    nested->add_option("--curve-class", opt.curve_class, "class of a smooth curve");
    nested->add_option("--spec", opt.spec_path, "orbifold spec JSON file");
    add_format_flag(nested, opt);

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration oracles");
    auto* parts = oracle->add_subcommand("partitions", "monomial ideal counts, smooth model");
    parts->add_option("--dim", opt.dim)->required();
    parts->add_option("--upto", opt.upto)->required();
    add_format_flag(parts, opt);
    auto* quot = oracle->add_subcommand("quotient", "monomial ideal counts, cyclic quotient");
    quot->add_option("--order", opt.order)->required();
    quot->add_option("--weights", opt.weights, "comma-separated weights")
        ->required()
        ->delimiter(',');
    quot->add_option("--upto", opt.upto)->required();
    add_format_flag(quot, opt);
    oracle->require_subcommand(1);

    app.add_subcommand("selftest", "run the acceptance suite");

    std::vector<const char*> argv;
    argv.push_back("hilbpow");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        return dispatch(app, opt, out);
    } catch (const ValidationError& e) {
        nlohmann::json obj = error_object("validation", e.what());
        obj["error"]["issues"] = e.issues;
        err << obj.dump(2) << "\n";
        return 1;
    } catch (const ParseError& e) {
        nlohmann::json obj = error_object("parse", e.what());
        obj["error"]["position"] = e.position;
        err << obj.dump(2) << "\n";
        return 1;
    } catch (const UnsupportedModelError& e) {
        err << error_object("unsupported-model", e.what()).dump(2) << "\n";
        return 1;
    } catch (const IoError& e) {
        err << error_object("io", e.what()).dump(2) << "\n";
        return 1;
    } catch (const Error& e) {
        err << error_object("domain", e.what()).dump(2) << "\n";
        return 1;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace hilbpow::cli

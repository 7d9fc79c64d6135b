#include "crossline/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "crossline/harness.hpp"
#include "crossline/svg.hpp"

namespace crossline {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CROSSLINE_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0;
}

FieldTag parse_field(const std::string& name) {
    auto tag = field_from_name(name);
    if (!tag) throw Error("unknown field: " + name + " (use rat, gauss or quat)");
    return *tag;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void write_document(const std::string& doc, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << doc;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    f << doc;
}

int cmd_cr(const std::string& field, const std::string& points, const std::string& transform,
           std::ostream& out) {
    FieldTag tag = parse_field(field);
    auto parts = split(points, ';');
    if (parts.size() != 4) throw Error("cr expects exactly 4 points separated by ';'");
    ExtendedScalar v[4];
    for (int i = 0; i < 4; ++i) v[i] = parse_extended(parts[i], tag);
    if (!transform.empty()) {
        LineTransform t = line_transform_from_json(transform, tag);
        for (auto& x : v) x = apply_line_transform(t, x);
    }
    ExtendedScalar r = cross_ratio(CrossRatioInput::make(v[0], v[1], v[2], v[3]));
    out << format_extended(r) << "\n";
    return 0;
}

int cmd_ratio(const std::string& field, const std::string& points, std::ostream& out) {
    FieldTag tag = parse_field(field);
    auto parts = split(points, ';');
    if (parts.size() == 2) {
        Scalar a = parse_scalar(parts[0], tag), b = parse_scalar(parts[1], tag);
        out << format_scalar(ratio2(a, b)) << "\n";
        return 0;
    }
    if (parts.size() == 3) {
        Scalar a = parse_scalar(parts[0], tag), b = parse_scalar(parts[1], tag),
               c = parse_scalar(parts[2], tag);
        out << format_scalar(ratio3(a, b, c)) << "\n";
        return 0;
    }
    throw Error("ratio expects 2 points (r(A:B)) or 3 points (r(A,B;C))");
}

int cmd_construct(const std::string& op, const std::string& field, const std::string& a_text,
                  const std::string& b_text, const std::string& aux_text,
                  const std::string& svg_path, const std::string& trace_path, std::ostream& out) {
    FieldTag tag = parse_field(field);
    if (op != "add" && op != "mul") throw Error("construct --op must be add or mul");

    // Canonical frame O = (0,0), I = (1,0); CLI points are labels on it.
    const Scalar z = Scalar::zero(tag), o = Scalar::one(tag);
    LineFrame frame = LineFrame::make(PlanePoint{z, z}, PlanePoint{o, z});
    Scalar a = parse_scalar(a_text, tag);
    Scalar b = parse_scalar(b_text, tag);
    std::optional<PlanePoint> aux;
    if (!aux_text.empty()) aux = parse_point(aux_text, tag);

    ConstructionResult res = op == "add" ? geometric_add(frame, point_of(frame, a),
                                                         point_of(frame, b), aux)
                                         : geometric_mul(frame, point_of(frame, a),
                                                         point_of(frame, b), aux);
    for (const auto& s : res.trace.steps) {
        out << "  " << s.id << ": ";
        if (s.is_point()) {
            out << "point " << format_point(s.point());
        } else {
            out << "line through " << format_point(s.line().base) << " dir ["
                << format_scalar(s.line().dir.dx) << " ; " << format_scalar(s.line().dir.dy)
                << "]";
        }
        out << "   (" << s.rule << ")\n";
    }
    out << "result: " << format_point(res.point) << "  label "
        << format_scalar(label(frame, res.point)) << "\n";

    if (!trace_path.empty()) write_document(trace_to_json(res.trace), trace_path, out);
    if (!svg_path.empty()) emit_svg_file(res.trace, svg_path);
    return 0;
}

struct VerifyOptions {
    std::string suite;
    std::string field = "rat";
    long samples = 200;
    std::uint64_t seed = default_seed();
    int workers = 1;
    bool json = false;
    std::string desargues_case;
    std::string kinds;
    std::string identities;
    std::string mutation = "none";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    SuiteConfig cfg;
    auto suite = suite_from_name(opt.suite);
    if (!suite) throw UnknownSuiteError(opt.suite);
    cfg.suite = *suite;
    cfg.field = parse_field(opt.field);
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    if (!opt.desargues_case.empty()) {
        if (opt.desargues_case == "parallel") cfg.desargues_case = DesarguesCase::Parallel;
        else if (opt.desargues_case == "pencil") cfg.desargues_case = DesarguesCase::Pencil;
        else throw Error("unknown case: " + opt.desargues_case);
    }
    if (!opt.kinds.empty()) cfg.transform_kinds = split(opt.kinds, ',');
    if (!opt.identities.empty()) {
        for (const auto& name : split(opt.identities, ',')) {
            auto id = identity_from_name(name);
            if (!id) throw Error("unknown identity: " + name);
            cfg.identities.push_back(*id);
        }
    }
    auto mutation = mutation_from_name(opt.mutation);
    if (!mutation) throw Error("unknown mutation: " + opt.mutation);
    cfg.mutation = *mutation;

    SuiteReport report = run_suite(cfg);
    out << (opt.json ? report_to_json(report) + "\n" : report_to_text(report));
    return report.failed > 0 ? 1 : 0;
}

int cmd_conformance(std::uint64_t seed, long samples, const std::string& out_path, bool json,
                    std::ostream& out) {
    ConformanceReport rep = conformance_report(seed, samples);
    write_document(json ? conformance_to_json(rep) + "\n" : conformance_to_text(rep), out_path,
                   out);
    return 0;
}

int cmd_render(const std::string& trace_path, const std::string& out_path) {
    std::ifstream in(trace_path, std::ios::binary);
    if (!in) throw Error("cannot open " + trace_path);
    std::stringstream buf;
    buf << in.rdbuf();
    ConstructionTrace trace = trace_from_json(buf.str());
    replay_trace(trace); // reject tampered documents before rendering
    emit_svg_file(trace, out_path);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cross-ratio calculus on lines of Desargues affine planes"};
    app.name("crossline");
    app.require_subcommand(1);

    std::string field = "rat", points, op, a_text, b_text, aux_text, svg_path, trace_path;
    std::string transform;
    VerifyOptions vopt;
    std::uint64_t seed = default_seed();
    long samples = 100;
    std::string out_path;
    bool json = false;

    auto* cr = app.add_subcommand("cr", "cross-ratio of four labels (one slot may be inf)");
    cr->add_option("--field", field, "rat | gauss | quat");
    cr->add_option("--points", points, "four ';'-separated scalar literals")->required();
    cr->add_option("--transform", transform,
                   "JSON line-transform descriptor applied to the points first");

    auto* ratio = app.add_subcommand("ratio", "ratio of two labels r(A:B) or three r(A,B;C)");
    ratio->add_option("--field", field, "rat | gauss | quat");
    ratio->add_option("--points", points, "two or three ';'-separated literals")->required();

    auto* construct =
        app.add_subcommand("construct", "run a geometric addition/multiplication construction");
    construct->add_option("--op", op, "add | mul")->required();
    construct->add_option("--a", a_text, "label of A")->required();
    construct->add_option("--b", b_text, "label of B")->required();
    construct->add_option("--aux", aux_text, "auxiliary point [x ; y] off the base line");
    construct->add_option("--field", field, "rat | gauss | quat");
    construct->add_option("--svg", svg_path, "write the construction drawing (rationals only)");
    construct->add_option("--trace-out", trace_path, "write the trace JSON document");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", vopt.suite, "suite id")->required();
    verify->add_option("--field", vopt.field, "rat | gauss | quat");
    verify->add_option("--samples", vopt.samples, "samples per suite element");
    verify->add_option("--seed", vopt.seed, "PRNG seed (default $CROSSLINE_SEED)");
    verify->add_option("--workers", vopt.workers, "parallel workers (report-invariant)");
    verify->add_flag("--json", vopt.json, "emit the JSON report");
    verify->add_option("--case", vopt.desargues_case, "desargues: parallel | pencil");
    verify->add_option("--kinds", vopt.kinds, "comma-separated transform kinds");
    verify->add_option("--identities", vopt.identities, "comma-separated identity ids");
    verify->add_option("--mutation", vopt.mutation,
                       "shipped mutation fixture: none | cr-reorder | dilation-right | "
                       "inversion-both-sided");

    auto* conformance = app.add_subcommand("conformance", "identity-by-field conformance table");
    conformance->add_option("--seed", seed, "PRNG seed (default $CROSSLINE_SEED)");
    conformance->add_option("--samples", samples, "samples per identity and field");
    conformance->add_option("--out", out_path, "write to a file instead of stdout");
    conformance->add_flag("--json", json, "emit JSON");

    auto* render = app.add_subcommand("render", "render a trace JSON document as SVG");
    render->add_option("--trace", trace_path, "trace JSON path")->required();
    render->add_option("--out", out_path, "SVG output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cr->parsed()) return cmd_cr(field, points, transform, out);
        if (ratio->parsed()) return cmd_ratio(field, points, out);
        if (construct->parsed())
            return cmd_construct(op, field, a_text, b_text, aux_text, svg_path, trace_path, out);
        if (verify->parsed()) return cmd_verify(vopt, out);
        if (conformance->parsed()) return cmd_conformance(seed, samples, out_path, json, out);
        if (render->parsed()) return cmd_render(trace_path, out_path);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace crossline

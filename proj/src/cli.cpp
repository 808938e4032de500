#include "natq/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "natq/error.hpp"
#include "natq/gpa.hpp"
#include "natq/harness.hpp"
#include "natq/io.hpp"
#include "natq/quivers.hpp"

namespace natq {

namespace {

struct Options {
    std::string command;
    std::string target;
    std::string input;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::optional<unsigned> truncate;
    std::string out_path;
};

std::string field_name(const Field& f) {
    return f.degree() == 1 ? "F_" + std::to_string(f.p()) : "F_" + std::to_string(f.p()) + "^" + std::to_string(f.degree());
}

json matrix_json(const IntMatrix& m) { return json(m); }

void write_matrix(std::ostream& o, const IntMatrix& m) {
    for (auto& row : m) {
        o << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) o << (j ? " " : "") << row[j];
        o << "]\n";
    }
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (auto c : v) a.push_back(int(c));
    return a;
}

json vertices_json(const QuiverMatrices& q) {
    json vs = json::array();
    for (std::size_t i = 0; i < q.labels.size(); ++i)
        vs.push_back({{"vertex", i + 1}, {"n", q.labels[i].first}, {"d", q.labels[i].second}});
    return vs;
}

std::string block_name(const QuiverMatrices& q, std::size_t i) {
    auto [n, d] = q.labels[i];
    return "M_" + std::to_string(n) + "(F_" + std::to_string(q.p) + "^" + std::to_string(d * q.base_degree) + ")";
}

int emit_quiver(const Options& o, const AlgebraAnalysis& an, QuiverKind kind, std::ostream& out) {
    QuiverMatrices q;
    const std::optional<IntMatrix>* m = nullptr;
    switch (kind) {
        case QuiverKind::Natural: q = natural_quiver(an); m = &q.t; break;
        case QuiverKind::Ext: q = ext_quiver(an); m = &q.m; break;
        case QuiverKind::Diagram: q = diagram(an); m = &q.h; break;
        case QuiverKind::Gpa: break;
    }
    if (o.format == "dot") {
        out << emit_dot(q, kind);
    } else if (o.format == "json") {
        out << json{{"quiver", quiver_kind_name(kind)}, {"vertices", vertices_json(q)}, {"matrix", matrix_json(**m)}}
                   .dump(2)
            << "\n";
    } else {
        out << quiver_kind_name(kind) << " (entry [i][j] counts arrows i -> j)\n";
        for (std::size_t i = 0; i < q.s; ++i) out << "  vertex " << i + 1 << ": " << block_name(q, i) << "\n";
        write_matrix(out, **m);
    }
    return 0;
}

int cmd_info(const Options& o, const AlgebraAnalysis& an, std::ostream& out) {
    const Algebra& a = an.algebra;
    HereditaryReport hr = is_hereditary(an);
    json blocks = json::array();
    for (auto& b : an.wedd.blocks) blocks.push_back({{"n", b.n}, {"d", b.d}, {"dim", b.dim()}});
    if (o.format == "json") {
        out << json{{"field", field_name(*a.field())},
                    {"dim", a.dim()},
                    {"radical_dim", an.rad.radical.size()},
                    {"nilpotency_index", an.rad.nilpotency_index},
                    {"blocks", blocks},
                    {"splitting", an.splitting()},
                    {"hereditary", hr.hereditary}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "field: " << field_name(*a.field()) << "\n"
        << "dim: " << a.dim() << "\n"
        << "radical dim: " << an.rad.radical.size() << "\n"
        << "nilpotency index: " << an.rad.nilpotency_index << "\n"
        << "blocks: " << an.wedd.blocks.size() << "\n";
    for (std::size_t i = 0; i < an.wedd.blocks.size(); ++i) {
        auto& b = an.wedd.blocks[i];
        out << "  block " << i + 1 << ": n = " << b.n << ", d = " << b.d << ", dim " << b.dim() << "\n";
    }
    out << "splitting over k: " << (an.splitting() ? "yes" : "no") << "\n"
        << "hereditary: " << (hr.hereditary ? "yes" : "no") << "\n";
    return 0;
}

int cmd_radical(const Options& o, const AlgebraAnalysis& an, std::ostream& out) {
    json dims = json::array();
    for (auto& p : an.rad.powers) dims.push_back(p.size());
    if (o.format == "json") {
        json basis = json::array();
        for (auto& r : an.rad.radical.rows()) basis.push_back(vec_json(r));
        out << json{{"dim", an.rad.radical.size()},
                    {"nilpotency_index", an.rad.nilpotency_index},
                    {"power_dims", dims},
                    {"basis", basis}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "radical dim: " << an.rad.radical.size() << "\n"
        << "nilpotency index: " << an.rad.nilpotency_index << "\n"
        << "dims of r, r^2, ...: " << dims.dump() << "\n";
    for (auto& r : an.rad.radical.rows()) out << "  " << vec_json(r).dump() << "\n";
    return 0;
}

int cmd_wedderburn(const Options& o, const AlgebraAnalysis& an, std::ostream& out) {
    const Algebra& top = an.rad.top.algebra;
    json blocks = json::array();
    for (auto& b : an.wedd.blocks)
        blocks.push_back({{"n", b.n},
                          {"d", b.d},
                          {"dim", b.dim()},
                          {"central_idempotent", vec_json(b.central_idempotent)},
                          {"primitive_idempotent", vec_json(b.primitive_idempotent)},
                          {"primitive_idempotent_lift", vec_json(an.sigma(b.primitive_idempotent))}});
    if (o.format == "json") {
        out << json{{"semisimple_dim", top.dim()}, {"semisimple_basis", top.labels()}, {"blocks", blocks}}.dump(2)
            << "\n";
        return 0;
    }
    out << "A/r: dim " << top.dim() << ", " << an.wedd.blocks.size() << " simple blocks\n";
    for (std::size_t i = 0; i < an.wedd.blocks.size(); ++i) {
        auto& b = an.wedd.blocks[i];
        out << "  block " << i + 1 << ": M_" << b.n << "(D), dim_k D = " << b.d << ", dim " << b.dim() << "\n"
            << "    central idempotent " << vec_json(b.central_idempotent).dump() << "\n"
            << "    primitive idempotent " << vec_json(b.primitive_idempotent).dump() << "\n";
    }
    return 0;
}

int cmd_basic(const Options& o, const AlgebraAnalysis& an, std::ostream& out) {
    BasicAlgebraData b = basic_algebra(an);
    if (o.format == "json") {
        out << dump_algebra_file(
            algebra_to_json(b.algebra, json{{"kind", "basic algebra"}, {"source_dim", an.algebra.dim()}}));
        return 0;
    }
    out << "basic algebra: dim " << b.algebra.dim() << " (from dim " << an.algebra.dim() << ")\n";
    for (std::size_t i = 0; i < b.algebra.dim(); ++i) out << "  " << b.algebra.labels()[i] << "\n";
    return 0;
}

void write_gpa(const Options& o, const GPAlgebra& g, std::ostream& out) {
    if (o.format == "json") {
        out << dump_algebra_file(gpa_to_json(g));
        return;
    }
    out << "generalized path algebra: dim " << g.realization.dim() << "\n";
    for (std::size_t d = 0; d < g.grading.size(); ++d) out << "  degree " << d << ": dim " << g.grading[d].size() << "\n";
}

int cmd_surjection(const Options& o, const AlgebraAnalysis& an, std::ostream& out) {
    SurjectionReport sr = gabriel_surjection(an);
    json gens = json::array();
    for (auto& g : sr.generators) gens.push_back(vec_json(g));
    json j{{"gpa_dim", sr.gpa.realization.dim()},
           {"algebra_dim", an.algebra.dim()},
           {"kernel_dim", sr.kernel_dim},
           {"truncation_s", sr.truncation_s},
           {"homomorphism", sr.homomorphism},
           {"surjective", sr.surjective},
           {"ker_in_J", sr.ker_in_J},
           {"ker_in_J2", sr.ker_in_J2},
           {"Js_in_ker", sr.Js_in_ker},
           {"filtration", sr.filtration},
           {"degree_zero_is_section", sr.degree_zero_is_section},
           {"natural_quiver", matrix_json(*sr.quivers.t)},
           {"generators", gens}};
    if (o.format == "json") {
        out << j.dump(2) << "\n";
        return 0;
    }
    for (auto key : {"gpa_dim", "algebra_dim", "kernel_dim", "truncation_s", "homomorphism", "surjective", "ker_in_J",
                     "ker_in_J2", "Js_in_ker", "filtration", "degree_zero_is_section"})
        out << key << ": " << j[key].dump() << "\n";
    out << "natural quiver:\n";
    write_matrix(out, *sr.quivers.t);
    return 0;
}

int cmd_verify(const Options& o, const AlgebraAnalysis& an, std::ostream& out) {
    RelationReport rep = verify_target(an, o.target, o.target != "all");
    if (o.format == "json") {
        json checks = json::array();
        for (auto& c : rep.checks)
            checks.push_back(
                {{"group", c.group}, {"name", c.name}, {"status", check_status_name(c.status)}, {"detail", c.detail}});
        auto s = summarize(rep);
        out << json{{"target", o.target},
                    {"seed", o.seed},
                    {"checks", checks},
                    {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}}}
                   .dump(2)
            << "\n";
    } else {
        out << "verify " << o.target << " (seed " << o.seed << ")\n" << format_report_text(rep);
    }
    return rep.ok() ? 0 : 1;
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
    if (!o.seed_given) err << "notice: no --seed given; using seed 0\n";
    if (o.command == "gpa") {
        std::string text = read_text_file(o.input);
        std::size_t first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || text[first] != '{') {
            QuiverPresentation q = parse_presentation(text);
            if (!q.relations.empty())
                fail(ErrorKind::MalformedRelation, "gpa takes a presentation without relations");
            write_gpa(o, generalized_path_algebra(q, o.truncate), out);
            return 0;
        }
        // An algebra file: the generalized path algebra of its natural quiver.
        AlgebraAnalysis an = analyze(load_algebra(o.input), o.seed);
        write_gpa(o, gabriel_surjection(an).gpa, out);
        return 0;
    }
    AlgebraAnalysis an = analyze(load_algebra(o.input, o.truncate), o.seed);
    if (o.command == "info") return cmd_info(o, an, out);
    if (o.command == "radical") return cmd_radical(o, an, out);
    if (o.command == "wedderburn") return cmd_wedderburn(o, an, out);
    if (o.command == "ext-quiver") return emit_quiver(o, an, QuiverKind::Ext, out);
    if (o.command == "natural-quiver") return emit_quiver(o, an, QuiverKind::Natural, out);
    if (o.command == "diagram") return emit_quiver(o, an, QuiverKind::Diagram, out);
    if (o.command == "basic") return cmd_basic(o, an, out);
    if (o.command == "surjection") return cmd_surjection(o, an, out);
    if (o.command == "verify") return cmd_verify(o, an, out);
    fail(ErrorKind::Internal, "unhandled command " + o.command);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"natq: radicals, Wedderburn blocks, quivers and generalized path algebras of finite algebras"};
    app.name("natq");
    app.require_subcommand(1);
    Options o;
    std::string seed_text;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"info", "summary of the algebra"},
        {"radical", "Jacobson radical and its powers"},
        {"wedderburn", "simple blocks of A/r"},
        {"ext-quiver", "Ext-quiver (splitting algebras)"},
        {"natural-quiver", "natural quiver"},
        {"diagram", "diagram (valued quiver counts)"},
        {"basic", "basic algebra"},
        {"gpa", "generalized path algebra of a decorated presentation"},
        {"surjection", "surjection from the generalized path algebra of the natural quiver"},
        {"verify", "run relation checks"}};
    std::vector<std::string> targets{"all"};
    for (auto& g : verify_groups()) targets.push_back(g);
    for (auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (name == "verify")
            sub->add_option("target", o.target, "check group")->required()->check(CLI::IsMember(targets));
        sub->add_option("--input", o.input, "algebra file (.json) or presentation")->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--seed", seed_text, "seed for randomized splitting (default 0)");
        sub->add_option("--truncate", o.truncate, "truncation for cyclic quivers");
        sub->add_option("--out", o.out_path, "write output to this file");
        sub->callback([&o, name = name] { o.command = name; });
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
        if (!seed_text.empty()) {
            std::size_t used = 0;
            if (seed_text.find_first_not_of("0123456789") != std::string::npos)
                throw CLI::ValidationError("--seed", "must be an unsigned integer");
            o.seed = std::stoull(seed_text, &used);
            o.seed_given = true;
        }
        bool quiver_cmd = o.command == "ext-quiver" || o.command == "natural-quiver" || o.command == "diagram";
        if (o.format == "dot" && !quiver_cmd)
            throw CLI::ValidationError("--format", "dot output is only available for quiver commands");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range&) {
        err << "usage error: --seed out of range\n";
        return 2;
    }
    try {
        if (o.out_path.empty()) return dispatch(o, out, err);
        std::ostringstream buf;
        int code = dispatch(o, buf, err);
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) fail(ErrorKind::ParseError, "cannot write '" + o.out_path + "'");
        f << buf.str();
        return code;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "Internal: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace natq

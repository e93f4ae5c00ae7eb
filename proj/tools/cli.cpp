#include "cli.hpp"

#include "arqkit/degrees.hpp"
#include "arqkit/diagrams.hpp"
#include "arqkit/error.hpp"
#include "arqkit/knitting.hpp"
#include "arqkit/matrices.hpp"
#include "arqkit/quiver.hpp"
#include "arqkit/sectional.hpp"
#include "arqkit/translation_quiver.hpp"
#include "arqkit/tubes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#ifndef ARQKIT_FIXTURE_DIR
#define ARQKIT_FIXTURE_DIR "fixtures"
#endif

namespace fs = std::filesystem;

namespace arqkit::cli {

std::string fixture_dir()
{
    if (const char* env = std::getenv("ARQKIT_FIXTURES"); env && *env)
        return env;
    return ARQKIT_FIXTURE_DIR;
}

namespace {

const std::map<std::string, std::string> corpus_notes = {
    {"a3.qv", "linear quiver 1 -> 2 -> 3"},
    {"a3.arq", "AR quiver of the linear A3 quiver"},
    {"twisted.qv", "quiver with a loop b, b^2 = 0"},
    {"twisted.arq", "AR quiver of the twisted quiver"},
    {"standard.arq", "standard example, cylinder identified"},
    {"standard_seeds.arq", "two seed meshes and schedule reproducing standard.arq"},
    {"fdelta.arq", "F(Delta) subquiver of the standard example"},
    {"perp_t.arq", "perp-T subquiver"},
    {"perp_t_prime.arq", "perp-T' subquiver"},
    {"d5.qv", "D5 quiver"},
    {"d5.arq", "preinjective component of D5"},
    {"d5_omega.arq", "resolving subcategory of the D5 example"},
    {"add_p1_i4.arq", "add(P1 + I4)"},
    {"kronecker.qv", "Kronecker quiver"},
    {"helical.qv", "quiver of the helical example"},
    {"helical.arq", "helical component window"},
    {"six_vertex.qv", "six-vertex quiver with a double arrow"},
    {"local_kronecker.arq", "component with a valuation (2,2) arrow"},
    {"cycle4.g", "4-cycle graph"},
    {"tube2.arq", "stable tube of rank 2, four rows"},
    {"corrupted_cycle.arq", "3-cycle of double arrows without tau"},
};

std::string resolve(const std::string& path)
{
    if (fs::exists(path))
        return path;
    fs::path alt = fs::path(fixture_dir()) / path;
    if (fs::exists(alt))
        return alt.string();
    throw Error("cannot open '" + path + "'");
}

std::string slurp(const std::string& path)
{
    std::ifstream in(resolve(path), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TranslationQuiver load_ar(const std::string& path) { return parse_ar_quiver(slurp(path)); }
Quiver load_quiver(const std::string& path) { return parse_quiver(slurp(path)); }

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty())
            out.push_back(cur);
    return out;
}

std::string window_report(const TranslationQuiver& w)
{
    std::ostringstream os;
    os << "vertices " << w.size() << '\n';
    os << "arrows " << w.arrows().size() << '\n';
    os << "tau-pairs " << w.tau_pairs().size() << '\n';
    for (const auto& v : w.vertices()) {
        os << "  " << v.id << " \"" << v.label << "\"";
        if (v.dim)
            os << ' ' << to_string(*v.dim);
        os << '\n';
    }
    ValidationReport r = validate(w);
    os << r.errors() << " errors, " << r.warnings() << " warnings\n" << r.to_string();
    return os.str();
}

std::string render(const TranslationQuiver& w, const std::string& format)
{
    if (format == "dot")
        return export_dot(w);
    if (format == "report")
        return window_report(w);
    return export_ar_quiver(w);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw Error("cannot write '" + out_path + "'");
    f << text;
}

int vertex_of(const TranslationQuiver& w, const std::string& id)
{
    auto v = w.find(id);
    if (!v)
        throw Error("unknown vertex '" + id + "'");
    return *v;
}

const std::vector<std::string> formats = {"dot", "interchange", "report"};

struct Options {
    std::string format;
    std::string file;
    std::string out;
    std::string quiver;
    std::string seeds;
    std::string graph;
    std::string direction = "right";
    std::string matrix_direction = "left";
    int cap = default_slice_cap;
    std::string seed;
    std::string base;
    std::string sigma;
    std::string family;
    std::string arrow;
    std::string side = "both";
    std::string at;
    std::string dest;
    std::string action = "list";
    int rank = 1;
    int height = 6;
    int n = 1;
    unsigned max_power = 64;
    bool combinatorial = false;
    bool growth = false;
    bool global = false;
    bool cycles = false;
    bool ray = false;
};

int cmd_validate(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    ValidationReport r = validate(w);
    if (o.format.empty() || o.format == "report")
        out << o.file << ": " << w.size() << " vertices, " << r.errors() << " errors, " << r.warnings()
            << " warnings\n"
            << r.to_string();
    else
        out << render(w, o.format);
    return r.errors() ? 1 : 0;
}

int cmd_knit(const Options& o, std::ostream& out)
{
    TranslationQuiver w;
    if (!o.seeds.empty()) {
        if (o.direction != "right")
            throw Error("seed knitting runs rightwards only");
        w = knit_from_seeds(parse_seeds(slurp(o.seeds)), o.cap);
    } else {
        if (o.quiver.empty())
            throw CLI::ValidationError("knit", "one of --quiver or --seeds is required");
        Quiver q = load_quiver(o.quiver);
        w = knit_hereditary(q, o.direction == "left" ? KnitDirection::Left : KnitDirection::Right, o.cap);
    }
    emit(render(w, o.format), o.out, out);
    return 0;
}

UndirectedGraph graph_input(const Options& o)
{
    if (!o.graph.empty())
        return parse_graph(slurp(o.graph));
    if (!o.quiver.empty())
        return load_quiver(o.quiver).underlying_graph();
    throw CLI::ValidationError("graph", "one of --graph or --quiver is required");
}

int cmd_classify(const Options& o, std::ostream& out)
{
    out << classify(graph_input(o)).name() << '\n';
    return 0;
}

int cmd_cartan(const Options& o, std::ostream& out)
{
    out << cartan(graph_input(o)).to_string();
    return 0;
}

void print_subgraph(const TranslationQuiver& w, const SectionalSubgraph& s, std::ostream& out)
{
    out << "type: " << subgraph_type(w, s).describe() << '\n';
    out << "window type: " << window_semantic_type(w, s).name() << '\n';
    out << "vertices:";
    for (int v : s.vertices)
        out << ' ' << w.vertex(v).id;
    out << '\n';
    if (s.boundary_open()) {
        out << "open:";
        for (int v : s.open)
            out << ' ' << w.vertex(v).id;
        out << '\n';
    }
}

int cmd_subgraph_type(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    if (!o.seed.empty()) {
        print_subgraph(w, full_sectional_subgraph(w, vertex_of(w, o.seed)), out);
        return 0;
    }
    LeftSubgraphType l = left_subgraph_type(w);
    out << "left subgraph type: " << l.type.describe() << (l.helical ? " (helical)" : "") << '\n';
    if (!l.sigma.vertices.empty())
        print_subgraph(w, l.sigma, out);
    return 0;
}

int cmd_orbits(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    out << tau_orbits(w).to_string(w);
    return 0;
}

int cmd_verdict(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    out << verdict_report(finiteness_verdict(w));
    if (o.growth)
        out << growth_analysis(w).to_string(w);
    return 0;
}

int cmd_coxeter(const Options& o, std::ostream& out)
{
    Quiver q = load_quiver(o.quiver);
    if (o.combinatorial) {
        out << "C\n" << coxeter_combinatorial(q).to_string();
        out << "C^-1\n" << inverse_coxeter_combinatorial(q).to_string();
        return 0;
    }
    CoxeterPair c = coxeter(q);
    out << "C\n" << c.c.to_string() << "C^-1\n" << c.c_inv.to_string();
    return 0;
}

int cmd_translation_matrix(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    std::vector<int> sigma;
    for (const auto& id : split(o.sigma, ','))
        sigma.push_back(vertex_of(w, id));
    if (sigma.empty())
        throw CLI::ValidationError("--sigma", "expected a comma-separated vertex list");
    out << translation_matrix(w, sigma, o.matrix_direction == "right" ? Direction::Right : Direction::Left).to_string();
    return 0;
}

int cmd_identity_check(const Options& o, std::ostream& out)
{
    bool ok = true;
    for (const auto& c : identity_checks(o.family)) {
        out << c.statement << ": " << (c.pass ? "PASS" : "FAIL") << '\n';
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}

int cmd_defect(const Options& o, std::ostream& out)
{
    DefectData d = defect(load_quiver(o.quiver), o.max_power);
    out << "d = " << d.d << '\n';
    out << "h = " << to_string(d.h, ' ') << '\n';
    out << "defect = " << to_string(d.partial, ' ') << '\n';
    return 0;
}

int cmd_tube_make(const Options& o, std::ostream& out)
{
    emit(render(stable_tube(o.rank, o.height), o.format), o.out, out);
    return 0;
}

int cmd_tube_insert(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    int x = vertex_of(w, o.at);
    TranslationQuiver r = o.ray ? ray_insertion(w, x, o.n) : coray_insertion(w, x, o.n);
    emit(render(r, o.format), o.out, out);
    return 0;
}

int cmd_tube_recognize(const Options& o, std::ostream& out)
{
    auto p = recognize_tube(load_ar(o.file));
    if (!p) {
        out << "not a tube\n";
        return 1;
    }
    out << "rank " << p->rank << " insertions [";
    for (std::size_t i = 0; i < p->insertions.size(); ++i)
        out << (i ? "," : "") << p->insertions[i];
    out << "]\n";
    return 0;
}

int cmd_tree_type(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    TreeType t = tree_type(w, vertex_of(w, o.base), static_cast<std::size_t>(o.cap));
    out << "type: " << t.type.describe() << (t.tree.truncated ? " (truncated)" : "") << '\n';
    for (auto [a, b] : t.tree.arrows)
        out << t.tree.vertices[a] << " -> " << t.tree.vertices[b] << '\n';
    return 0;
}

int cmd_degrees(const Options& o, std::ostream& out)
{
    TranslationQuiver w = load_ar(o.file);
    std::vector<std::pair<int, int>> arrows;
    if (!o.arrow.empty()) {
        auto ends = split(o.arrow, ',');
        if (ends.size() != 2)
            throw CLI::ValidationError("--arrow", "expected src,dst");
        int s = vertex_of(w, ends[0]), d = vertex_of(w, ends[1]);
        if (w.valuation(s, d) == 0)
            throw Error("no arrow " + ends[0] + " -> " + ends[1]);
        arrows.emplace_back(s, d);
    } else {
        for (const auto& a : w.arrows())
            arrows.emplace_back(a.src, a.dst);
    }
    for (auto [s, d] : arrows) {
        out << w.vertex(s).id << " -> " << w.vertex(d).id << '\n';
        if (o.side != "right") {
            DegreeBound b = o.global ? infer_global_left_degree(w, s, d) : infer_left_degree(w, s, d);
            out << "  left " << b.to_string() << " [" << b.certificate(w) << "]\n";
        }
        if (o.side != "left") {
            DegreeBound b = infer_right_degree(w, s, d);
            out << "  right " << b.to_string() << " [" << b.certificate(w) << "]\n";
        }
    }
    if (o.cycles) {
        auto findings = cycle_degree_consistency(w);
        out << findings.size() << " cycle contradictions\n";
        for (const auto& f : findings) {
            out << f.rule;
            for (const auto& id : f.ids)
                out << ' ' << id;
            out << ": " << f.message << '\n';
        }
    }
    return 0;
}

int cmd_export_dot(const Options& o, std::ostream& out)
{
    emit(render(load_ar(o.file), o.format.empty() ? "dot" : o.format), o.out, out);
    return 0;
}

std::vector<std::string> corpus_files()
{
    std::vector<std::string> names;
    fs::path dir = fixture_dir();
    if (!fs::is_directory(dir))
        throw Error("fixture directory '" + dir.string() + "' not found");
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file())
            names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

int cmd_fixtures(const Options& o, std::ostream& out)
{
    if (o.action == "path") {
        out << fixture_dir() << '\n';
        return 0;
    }
    auto names = corpus_files();
    if (o.action == "list") {
        for (const auto& n : names) {
            auto it = corpus_notes.find(n);
            out << n;
            if (it != corpus_notes.end())
                out << "  " << it->second;
            out << '\n';
        }
        return 0;
    }
    if (o.dest.empty())
        throw CLI::ValidationError("--dest", "install needs a destination directory");
    fs::create_directories(o.dest);
    for (const auto& n : names)
        fs::copy_file(fs::path(fixture_dir()) / n, fs::path(o.dest) / n, fs::copy_options::overwrite_existing);
    out << "installed " << names.size() << " fixtures to " << o.dest << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Combinatorics of Auslander-Reiten quivers", "arqkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

    int (*handler)(const Options&, std::ostream&) = nullptr;
    auto on = [&handler](CLI::App* sub, int (*h)(const Options&, std::ostream&)) {
        sub->callback([&handler, h] { handler = h; });
        return sub;
    };
    auto file_arg = [&o](CLI::App* sub) { sub->add_option("file", o.file, "AR interchange file")->required(); };

    auto* validate_cmd = on(app.add_subcommand("validate", "Check an AR interchange file"), cmd_validate);
    file_arg(validate_cmd);

    auto* knit = on(app.add_subcommand("knit", "Knit a component"), cmd_knit);
    knit->add_option("--quiver", o.quiver, "Acyclic quiver file");
    knit->add_option("--seeds", o.seeds, "Seed meshes with schedule");
    knit->add_option("--direction", o.direction)->check(CLI::IsMember({"right", "left"}));
    knit->add_option("--cap", o.cap, "tau-steps per orbit")->check(CLI::PositiveNumber);
    knit->add_option("--out", o.out, "Output file");

    auto* cls = on(app.add_subcommand("classify", "Dynkin/Euclidean type of a graph"), cmd_classify);
    cls->add_option("--graph", o.graph);
    cls->add_option("--quiver", o.quiver);
    auto* car = on(app.add_subcommand("cartan", "Cartan matrix of a graph"), cmd_cartan);
    car->add_option("--graph", o.graph);
    car->add_option("--quiver", o.quiver);

    auto* sub = on(app.add_subcommand("subgraph-type", "Full sectional subgraph type"), cmd_subgraph_type);
    file_arg(sub);
    sub->add_option("--seed", o.seed, "Start vertex; left subgraph type when absent");

    file_arg(on(app.add_subcommand("orbits", "tau-orbit classes and orbit graph"), cmd_orbits));

    auto* ver = on(app.add_subcommand("verdict", "Finiteness verdict per component"), cmd_verdict);
    file_arg(ver);
    ver->add_flag("--growth", o.growth, "Also report length growth along orbits");

    auto* cox = on(app.add_subcommand("coxeter", "Coxeter matrix and inverse"), cmd_coxeter);
    cox->add_option("--quiver", o.quiver)->required();
    cox->add_flag("--combinatorial", o.combinatorial, "Use the path-count formulas");

    auto* tm = on(app.add_subcommand("translation-matrix", "Translation matrix on a slice"), cmd_translation_matrix);
    file_arg(tm);
    tm->add_option("--sigma", o.sigma, "Comma-separated slice vertices")->required();
    tm->add_option("--direction", o.matrix_direction)->check(CLI::IsMember({"right", "left"}));

    auto* ic = on(app.add_subcommand("identity-check", "Matrix identities for a Dynkin family"), cmd_identity_check);
    ic->add_option("--family", o.family, "A2..A8, D4..D8, E6..E8")->required();

    auto* def = on(app.add_subcommand("defect", "Defect of a Euclidean quiver"), cmd_defect);
    def->add_option("--quiver", o.quiver)->required();
    def->add_option("--max-power", o.max_power);

    auto* tube = app.add_subcommand("tube", "Tube constructions");
    tube->require_subcommand(1);
    auto* make = on(tube->add_subcommand("make", "Stable tube window"), cmd_tube_make);
    make->add_option("--rank", o.rank)->required()->check(CLI::PositiveNumber);
    make->add_option("--height", o.height)->required()->check(CLI::PositiveNumber);
    make->add_option("--out", o.out);
    auto* ins = on(tube->add_subcommand("insert", "Coray or ray insertion"), cmd_tube_insert);
    file_arg(ins);
    ins->add_option("--at", o.at)->required();
    ins->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    ins->add_flag("--ray", o.ray, "Ray insertion instead of coray insertion");
    ins->add_option("--out", o.out);
    file_arg(on(tube->add_subcommand("recognize", "Rank and insertions of a tube window"), cmd_tube_recognize));

    auto* tt = on(app.add_subcommand("tree-type", "Tree type from a base vertex"), cmd_tree_type);
    file_arg(tt);
    tt->add_option("--base", o.base)->required();
    tt->add_option("--cap", o.cap)->check(CLI::PositiveNumber);

    auto* deg = on(app.add_subcommand("degrees", "Degree bounds with certificates"), cmd_degrees);
    file_arg(deg);
    deg->add_option("--arrow", o.arrow, "src,dst");
    deg->add_option("--side", o.side)->check(CLI::IsMember({"left", "right", "both"}));
    deg->add_flag("--global", o.global, "Left degree over all tau-shifts");
    deg->add_flag("--cycles", o.cycles, "Report oriented cycles of infinite degree");

    auto* dot = on(app.add_subcommand("export-dot", "Graphviz rendering"), cmd_export_dot);
    file_arg(dot);
    dot->add_option("--out", o.out);

    auto* fx = on(app.add_subcommand("fixtures", "List or install the fixture corpus"), cmd_fixtures);
    fx->add_option("action", o.action)->check(CLI::IsMember({"list", "install", "path"}));
    fx->add_option("--dest", o.dest);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        return handler(o, out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const fs::filesystem_error& e) {
        err << e.what() << '\n';
        return 1;
    }
}

} // namespace arqkit::cli

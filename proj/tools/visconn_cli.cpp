// Command-line front end: file formats in, edge lists / reports / SVG out.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "visconn/constructive.hpp"
#include "visconn/io.hpp"

namespace {

using namespace visconn;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << content;
    }
}

Graph to_graph(const GeomGraph& g) {
    Graph out(g.n());
    for (const auto& [i, j] : g.edges) out.add_edge(i, j);
    return out;
}

// Split a labelled point file into its A and B classes.
std::pair<PointSet, PointSet> ab_classes(const LabelledPoints& lp) {
    if (!lp.has_labels()) throw ParseError("input needs A/B labels");
    PointSet a = lp.of_label(0), b = lp.of_label(1);
    if (a.empty() || b.empty()) throw ParseError("both A and B classes must be nonempty");
    return {a, b};
}

std::string serialize_paths(const PathSystem& sys) {
    std::string out = std::to_string(sys.count()) + "\n";
    for (const auto& path : sys.paths) {
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(path[k]);
        }
        out += '\n';
    }
    return out;
}

std::string format_graph(const GeomGraph& g, const std::string& format) {
    if (format == "svg") return svg_graph(g);
    return serialize_edge_list(to_graph(g));
}

struct Options {
    std::string in, in2, edges, edges2, out, format = "edges";
    std::uint64_t seed = 0;
    int n = 8, bound = 12, m = 2, ell = 0, rays = 3, trials = 100, v = 0, w = 1, threads = 1;
};

int dispatch(CLI::App& app, Options& o) {
    auto got = [&](const std::string& path) { return app.get_subcommand(path)->parsed(); };
    auto sub = [&](const char* name) -> CLI::App* { return app.get_subcommand(name); };

    if (sub("vis")->parsed() && sub("vis")->get_subcommand("build")->parsed()) {
        LabelledPoints lp = parse_point_file(slurp(o.in));
        Graph g = visibility_graph(lp.points);
        if (o.format == "svg") {
            GeomGraph gg{lp.points, g.edges(), lp.labels};
            emit(o.out, svg_graph(gg));
        } else {
            emit(o.out, serialize_edge_list(g));
        }
        return 0;
    }
    if (sub("bivis")->parsed() && sub("bivis")->get_subcommand("build")->parsed()) {
        auto [a, b] = ab_classes(parse_point_file(slurp(o.in)));
        emit(o.out, format_graph(bivisibility_graph(a, b), o.format));
        return 0;
    }
    if (sub("analyze")->parsed()) {
        LabelledPoints lp = parse_point_file(slurp(o.in));
        Report r = check_instance(lp.points);
        r.claims.clear();  // measurement only; `verify instance` judges claims
        emit(o.out, serialize_report(r));
        return 0;
    }
    if (sub("paths")->parsed()) {
        LabelledPoints lp = parse_point_file(slurp(o.in));
        PathSystem sys;
        if (sub("paths")->get_subcommand("onebend")->parsed()) {
            sys = one_bend_paths(lp.points, o.v, o.w);
        } else {
            sys = four_paths(visibility_graph(lp.points), o.v, o.w);
        }
        emit(o.out, serialize_paths(sys));
        return 0;
    }
    if (sub("cut")->parsed()) {
        auto [a, b] = ab_classes(parse_point_file(slurp(o.in)));
        Line l = ham_sandwich(a, b);
        emit(o.out, "a=" + l.a.str() + "\nb=" + l.b.str() + "\nc=" + l.c.str() + "\n");
        return 0;
    }
    if (sub("tree")->parsed()) {
        auto [a, b] = ab_classes(parse_point_file(slurp(o.in)));
        GeomGraph g;
        if (sub("tree")->get_subcommand("anchored")->parsed()) {
            g = line_anchored_tree(a, b);
        } else if (sub("tree")->get_subcommand("bivis")->parsed()) {
            g = noncrossing_spanning_tree(a, b);
        } else {
            g = ray_cover_forest(a, b);
        }
        emit(o.out, format_graph(g, o.format));
        return 0;
    }
    if (sub("subgraph")->parsed()) {
        auto [a, b] = ab_classes(parse_point_file(slurp(o.in)));
        emit(o.out, format_graph(large_noncrossing_subgraph(a, b), o.format));
        return 0;
    }
    if (sub("join")->parsed()) {
        LabelledPoints lp1 = parse_point_file(slurp(o.in));
        LabelledPoints lp2 = parse_point_file(slurp(o.in2));
        if (!lp1.has_labels() || !lp2.has_labels()) throw ParseError("join needs labelled inputs");
        GeomGraph g1{lp1.points, parse_edge_list(slurp(o.edges)).edges(), lp1.labels};
        GeomGraph g2{lp2.points, parse_edge_list(slurp(o.edges2)).edges(), lp2.labels};
        auto [i, j] = join_separated_graphs(g1, g2);
        emit(o.out, "i=" + std::to_string(i) + "\nj=" + std::to_string(j + g1.n()) + "\n");
        return 0;
    }
    if (sub("gen")->parsed()) {
        LabelledPoints lp;
        if (sub("gen")->get_subcommand("pencil")->parsed()) {
            lp.points = pencil_config(o.ell ? o.ell : 3, o.rays);
        } else if (sub("gen")->get_subcommand("elliptic")->parsed()) {
            TripleConfig tc = default_elliptic_config(o.m);
            std::vector<Point> pts(tc.a.begin(), tc.a.end());
            pts.insert(pts.end(), tc.b.begin(), tc.b.end());
            pts.insert(pts.end(), tc.c.begin(), tc.c.end());
            lp.points = PointSet(pts);
            lp.labels.assign(static_cast<std::size_t>(tc.a.size()), 0);
            lp.labels.insert(lp.labels.end(), static_cast<std::size_t>(tc.b.size()), 1);
            lp.labels.insert(lp.labels.end(), static_cast<std::size_t>(tc.c.size()), 2);
        } else {
            GenConfig cfg{o.seed, o.n, o.bound, {}};
            if (o.ell > 0) cfg.max_collinear_cap = o.ell;
            lp.points = random_point_set(cfg);
        }
        emit(o.out, serialize_point_file(lp));
        return 0;
    }
    if (sub("verify")->parsed()) {
        if (sub("verify")->get_subcommand("hunt")->parsed()) {
            HuntConfig cfg;
            cfg.trials = o.trials;
            cfg.base = GenConfig{o.seed, o.n, o.bound, {}};
            cfg.threads = o.threads;
            HuntOutcome outcome = hunt(cfg);
            std::string text = serialize_report(outcome.summary);
            text += "candidates=" + std::to_string(outcome.candidates.size()) + "\n";
            emit(o.out, text);
            for (const HuntCandidate& c : outcome.candidates) {
                LabelledPoints lp;
                lp.points = c.points;
                std::string path = "candidate-" + std::to_string(c.cfg.seed) + ".txt";
                emit(path, serialize_point_file(lp) + "# report\n# " + c.report.descriptor + "\n" +
                               serialize_report(c.report));
            }
            return (outcome.summary.has_failure() || !outcome.candidates.empty()) ? 2 : 0;
        }
        Report r;
        if (sub("verify")->get_subcommand("bivis")->parsed()) {
            auto [a, b] = ab_classes(parse_point_file(slurp(o.in)));
            r = check_bivisibility(a, b);
        } else {
            LabelledPoints lp = parse_point_file(slurp(o.in));
            r = check_instance(lp.points);
        }
        emit(o.out, serialize_report(r));
        return r.has_failure() ? 2 : 0;
    }
    if (sub("plot")->parsed()) {
        LabelledPoints lp = parse_point_file(slurp(o.in));
        if (!o.edges.empty()) {
            GeomGraph g{lp.points, parse_edge_list(slurp(o.edges)).edges(), lp.labels};
            emit(o.out, svg_graph(g));
        } else if (lp.has_labels()) {
            GeomGraph g{lp.points, {}, lp.labels};
            emit(o.out, svg_graph(g));
        } else {
            emit(o.out, svg_points(lp.points));
        }
        return 0;
    }
    (void)got;
    std::cerr << app.help();
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"visibility-graph connectivity toolkit"};
    app.require_subcommand(0, 1);
    Options o;

    app.add_option("--in", o.in);
    app.add_option("--in2", o.in2);
    app.add_option("--edges", o.edges);
    app.add_option("--edges2", o.edges2);
    app.add_option("--out", o.out);
    app.add_option("--format", o.format)->check(CLI::IsMember({"edges", "report", "svg"}));
    app.add_option("--seed", o.seed);
    app.add_option("--n", o.n);
    app.add_option("--bound", o.bound);
    app.add_option("--m", o.m);
    app.add_option("--ell", o.ell);
    app.add_option("--rays", o.rays);
    app.add_option("--trials", o.trials);
    app.add_option("--v", o.v);
    app.add_option("--w", o.w);
    app.add_option("--threads", o.threads);

    auto* vis = app.add_subcommand("vis");
    vis->add_subcommand("build");
    auto* bivis = app.add_subcommand("bivis");
    bivis->add_subcommand("build");
    app.add_subcommand("analyze");
    auto* paths = app.add_subcommand("paths");
    paths->add_subcommand("onebend");
    paths->add_subcommand("four");
    auto* cut = app.add_subcommand("cut");
    cut->add_subcommand("hamsandwich");
    auto* tree = app.add_subcommand("tree");
    tree->add_subcommand("anchored");
    tree->add_subcommand("bivis");
    tree->add_subcommand("forest");
    auto* subg = app.add_subcommand("subgraph");
    subg->add_subcommand("pavel");
    app.add_subcommand("join");
    auto* gen = app.add_subcommand("gen");
    gen->add_subcommand("pencil");
    gen->add_subcommand("elliptic");
    gen->add_subcommand("random");
    auto* verify = app.add_subcommand("verify");
    verify->add_subcommand("instance");
    verify->add_subcommand("bivis");
    verify->add_subcommand("hunt");
    app.add_subcommand("plot");

    for (auto* s : app.get_subcommands({})) {
        s->fallthrough();  // global flags usable after subcommand names
        for (auto* ss : s->get_subcommands({})) ss->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(app, o);
    } catch (const visconn::ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 1;
    } catch (const visconn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperham/connect_embed.hpp"
#include "hyperham/fractional_matching.hpp"
#include "hyperham/generators.hpp"
#include "hyperham/hypergraph_io.hpp"
#include "hyperham/params.hpp"
#include "hyperham/search.hpp"
#include "hyperham/sweep.hpp"
#include "json.hpp"

using namespace hyperham;
using nlohmann::json;

namespace {

constexpr int kContract = 2;
constexpr int kBudget = 3;
constexpr int kIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = std::numeric_limits<double>::infinity();
    std::string format = "json";
    bool no_timing = false;

    SearchBudget budget() const { return {budget_nodes, budget_seconds}; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("failed writing " + path);
}

json vertices_json(std::span<const Vertex> v) { return json(std::vector<Vertex>(v.begin(), v.end())); }

json rational_list(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_string(r));
    return a;
}

void emit(const Globals& g, json j, const std::string& text) {
    if (g.no_timing) j.erase("seconds");
    if (g.format == "text") std::cout << text << '\n';
    else std::cout << j.dump(2) << '\n';
}

json params_json(const ThresholdParams& p) {
    return {{"k", p.k},
            {"l", p.l},
            {"ctmod", p.ctmod},
            {"ceilkl", p.ceilkl},
            {"dcover", to_string(p.dcover)},
            {"dconnect", to_string(p.dconnect)},
            {"weights", p.weights},
            {"W", p.weight_sum},
            {"t_abs", p.t_abs},
            {"connect_len", p.connect_len}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperham: positive-codegree Hamilton l-cycle toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--budget-nodes", g.budget_nodes, "Search node limit")->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", g.budget_seconds, "Search time limit")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--no-timing", g.no_timing, "Omit wall-clock fields");

    std::function<int()> action;
    unsigned k = 3, l = 2, n = 9;
    std::string graph_file, out_file;

    auto* gen = app.add_subcommand("gen", "Generate a hypergraph");
    std::string kind = "random";
    double p = 0.5;
    unsigned part_size = 4;
    gen->add_option("--kind", kind)->check(CLI::IsMember({"random", "extremal", "complete", "partite"}));
    gen->add_option("-k", k);
    gen->add_option("-l", l);
    gen->add_option("-n", n);
    gen->add_option("-p", p)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--part-size", part_size, "Class size for --kind partite");
    gen->add_option("-o,--output", out_file);
    gen->callback([&] {
        action = [&] {
            Hypergraph h;
            if (kind == "random") h = random_kgraph(k, n, p, g.seed);
            else if (kind == "extremal") h = extremal_construction(k, l, n).graph;
            else if (kind == "complete") h = complete_kgraph(k, n);
            else {
                std::vector<VertexSet> cls;
                for (unsigned i = 0; i < k; ++i) cls.push_back(VertexSet::range(i * part_size, (i + 1) * part_size));
                h = random_partite(k, cls, k * part_size, p, g.seed);
            }
            write_output(out_file, to_text(h));
            return 0;
        };
    });

    auto* params = app.add_subcommand("params", "Threshold constants for (k, l)");
    params->add_option("-k", k);
    params->add_option("-l", l);
    params->callback([&] {
        action = [&] {
            std::cout << params_json(threshold_params(k, l)).dump(2) << '\n';
            return 0;
        };
    });

    auto* stats = app.add_subcommand("stats", "Degree statistics");
    stats->add_option("graph", graph_file)->required();
    stats->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            const auto dp = min_positive_codegree(h);
            json j{{"k", h.k()},
                   {"n", h.n()},
                   {"m", h.edge_count()},
                   {"delta", h.n() + 1 >= h.k() ? json(min_codegree(h)) : json(nullptr)},
                   {"delta_plus", dp ? json(*dp) : json(nullptr)},
                   {"isolated", isolated_vertices(h).members()}};
            std::ostringstream t;
            t << "k=" << h.k() << " n=" << h.n() << " m=" << h.edge_count() << " delta_plus="
              << (dp ? std::to_string(*dp) : "NA") << " isolated=" << isolated_vertices(h).size();
            emit(g, j, t.str());
            return 0;
        };
    });

    SearchOptions sopt;
    bool no_frontier = false;
    auto* ham = app.add_subcommand("ham", "Exact Hamilton l-cycle search");
    ham->add_option("graph", graph_file)->required();
    ham->add_option("-l", l)->required();
    ham->add_option("--workers", sopt.workers);
    ham->add_flag("--no-frontier", no_frontier, "Disable the frontier-degree prune");
    ham->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            sopt.budget = g.budget();
            sopt.frontier_prune = !no_frontier;
            const auto r = find_hamilton_lcycle(h, l, sopt);
            json j{{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}, {"seconds", r.seconds}};
            j["cycle"] = r.value ? json(r.value->to_line()) : json(nullptr);
            emit(g, j, r.value ? r.value->to_line() : to_string(r.outcome));
            return r.outcome == SearchOutcome::BudgetExhausted ? kBudget : 0;
        };
    });

    auto* sis = app.add_subcommand("sis", "Maximum strong independent set");
    sis->add_option("graph", graph_file)->required();
    sis->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            const auto r = max_strong_independent_set(h, g.budget());
            json j{{"outcome", to_string(r.outcome)},
                   {"size", r.value->size()},
                   {"set", r.value->members()},
                   {"nodes", r.nodes},
                   {"seconds", r.seconds}};
            emit(g, j, std::to_string(r.value->size()));
            return r.outcome == SearchOutcome::BudgetExhausted ? kBudget : 0;
        };
    });

    std::vector<Vertex> xs, ys, forbidden, allowed;
    bool allowed_given = false;
    auto* connect = app.add_subcommand("connect", "Greedy connecting path between two ends");
    connect->add_option("graph", graph_file)->required();
    connect->add_option("-l", l)->required();
    connect->add_option("--x", xs)->required()->delimiter(',');
    connect->add_option("--y", ys)->required()->delimiter(',');
    connect->add_option("--forbidden", forbidden)->delimiter(',');
    connect->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            const auto r = connect_ends(h, threshold_params(h.k(), l), OrderedEnd(xs), OrderedEnd(ys),
                                        VertexSet(forbidden), g.seed);
            json j{{"success", r.path.has_value()}, {"attempts", r.attempts}};
            j["path"] = r.path ? json(r.path->to_line()) : json(nullptr);
            emit(g, j, r.path ? r.path->to_line() : "failure");
            return 0;
        };
    });

    std::size_t length = 1;
    auto* exact = app.add_subcommand("connectexact", "Exact l-path search between two ends");
    exact->add_option("graph", graph_file)->required();
    exact->add_option("--x", xs)->required()->delimiter(',');
    exact->add_option("--y", ys)->required()->delimiter(',');
    exact->add_option("-m,--length", length)->required();
    auto* allowed_opt = exact->add_option("--allowed", allowed, "Interior pool (default: all other vertices)")->delimiter(',');
    exact->callback([&] {
        allowed_given = allowed_opt->count() > 0;
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            sopt.budget = g.budget();
            const VertexSet pool = allowed_given ? VertexSet(allowed) : VertexSet::range(0, h.n());
            const auto r = find_lpath_between(h, OrderedEnd(xs), OrderedEnd(ys), length, pool, sopt);
            json j{{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}, {"seconds", r.seconds}};
            j["path"] = r.value ? json(r.value->to_line()) : json(nullptr);
            emit(g, j, r.value ? r.value->to_line() : to_string(r.outcome));
            return r.outcome == SearchOutcome::BudgetExhausted ? kBudget : 0;
        };
    });

    std::string tau_text = "1";
    auto* peel = app.add_subcommand("peel", "Peel to minimum positive codegree above tau");
    peel->add_option("graph", graph_file)->required();
    peel->add_option("--tau", tau_text, "Threshold as p/q");
    peel->add_option("-o,--output", out_file, "Write the peeled graph");
    peel->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            const auto r = peel_to_positive_codegree(h, parse_rational(tau_text));
            const auto dp = min_positive_codegree(r.graph);
            json j{{"edges_before", h.edge_count()},
                   {"edges_after", r.graph.edge_count()},
                   {"deletions", r.deletions},
                   {"ratio_trace", rational_list(r.ratio_trace)},
                   {"ratio_non_decreasing", ratio_non_decreasing(r.ratio_trace)},
                   {"delta_plus", dp ? json(*dp) : json(nullptr)}};
            if (!out_file.empty()) write_output(out_file, to_text(r.graph));
            emit(g, j, std::to_string(r.graph.edge_count()) + " edges left");
            return 0;
        };
    });

    auto* frac = app.add_subcommand("fracmatch", "Weighted perfect fractional matching or Farkas certificate");
    frac->add_option("graph", graph_file)->required();
    frac->add_option("-l", l)->required();
    frac->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            const auto prm = threshold_params(h.k(), l);
            const auto r = find_min_max_pfm(h, prm);
            json j;
            if (const auto* m = std::get_if<MinMaxMatching>(&r)) {
                j["status"] = "perfect";
                j["M"] = to_string(m->max_value);
                json a = json::array();
                for (const auto& x : m->matching.assignment)
                    a.push_back({{"edge", x.var.edge}, {"head", x.var.head}, {"q", to_string(x.q)}});
                j["assignment"] = std::move(a);
            } else {
                j["status"] = "infeasible";
                j["certificate"] = rational_list(std::get<FarkasCertificate>(r).y);
            }
            emit(g, j, j["status"].get<std::string>());
            return 0;
        };
    });

    std::vector<Vertex> t_set, tuple;
    std::uint64_t samples = 0;
    auto* absorb = app.add_subcommand("absorb", "Absorbing-tuple check or sampled density");
    absorb->add_option("graph", graph_file)->required();
    absorb->add_option("-l", l)->required();
    absorb->add_option("--T", t_set, "The absorbed (k-l)-set")->required()->delimiter(',');
    absorb->add_option("--tuple", tuple, "Ordered t_abs-tuple to test")->delimiter(',');
    absorb->add_option("--samples", samples, "Sample random tuples instead");
    absorb->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            sopt.budget = g.budget();
            json j;
            std::string text;
            if (samples > 0) {
                const auto s = sample_absorbing_density(h, l, VertexSet(t_set), samples, g.seed, sopt);
                j = {{"samples", s.samples}, {"hits", s.hits}, {"estimate", to_string(s.estimate)}, {"t_abs", s.t_abs}};
                text = to_string(s.estimate);
            } else {
                const bool ok = is_absorbing_tuple(h, l, tuple, VertexSet(t_set), sopt);
                j = {{"absorbing", ok}};
                text = ok ? "true" : "false";
            }
            emit(g, j, text);
            return 0;
        };
    });

    TileOptions topt;
    std::string mode = "direct", d_text = "1/4";
    auto* tile = app.add_subcommand("tile", "Vertex-disjoint l-path tiling");
    tile->add_option("graph", graph_file)->required();
    tile->add_option("-l", l)->required();
    tile->add_option("--beta", topt.beta)->check(CLI::Range(0.0, 1.0));
    tile->add_option("--mode", mode)->check(CLI::IsMember({"direct", "cluster"}));
    tile->add_option("--clusters", topt.clusters);
    tile->add_option("--density", d_text, "Cluster density threshold as p/q");
    tile->callback([&] {
        action = [&] {
            const auto h = load_hypergraph(graph_file);
            topt.mode = mode == "cluster" ? TileMode::Cluster : TileMode::Direct;
            topt.seed = g.seed;
            topt.d = parse_rational(d_text);
            const auto r = tile_paths(h, threshold_params(h.k(), l), topt);
            json paths = json::array();
            for (const auto& pth : r.paths) paths.push_back(pth.to_line());
            json j{{"mode", to_string(topt.mode)},
                   {"lp_status", r.lp_status},
                   {"fell_back", r.fell_back},
                   {"clusters_used", r.clusters_used},
                   {"coverage", to_string(r.coverage)},
                   {"path_count", r.paths.size()},
                   {"paths", std::move(paths)}};
            emit(g, j, to_string(r.coverage));
            return 0;
        };
    });

    SweepConfig cfg;
    std::string generator = "random";
    auto* sweep = app.add_subcommand("sweep", "Threshold sweep to CSV");
    sweep->add_option("-k", cfg.k);
    sweep->add_option("-l", cfg.l);
    sweep->add_option("--n", cfg.n_list, "Vertex counts")->required()->delimiter(',');
    sweep->add_option("--generator", generator)->check(CLI::IsMember({"random", "extremal", "complete"}));
    sweep->add_option("--p", cfg.p_grid, "Edge probabilities")->delimiter(',');
    sweep->add_option("--trials", cfg.trials);
    sweep->add_option("--workers", cfg.workers);
    sweep->add_option("-o,--output", out_file);
    sweep->callback([&] {
        action = [&] {
            cfg.generator = parse_generator(generator);
            cfg.seed = g.seed;
            cfg.budget = g.budget();
            cfg.timing = !g.no_timing;
            if (out_file.empty() || out_file == "-") {
                run_sweep(cfg, &std::cout);
                return 0;
            }
            std::ofstream out(out_file);
            if (!out) throw IoError("cannot write " + out_file);
            run_sweep(cfg, &out);
            return 0;
        };
    });

    std::string csv_file;
    auto* summ = app.add_subcommand("summarize", "Summarize a sweep CSV");
    summ->add_option("csv", csv_file)->required();
    summ->callback([&] {
        action = [&] {
            std::istringstream in(read_file(csv_file));
            const auto cells = summarize(read_sweep_csv(in));
            if (g.format == "text") std::cout << summary_text(cells);
            else std::cout << summary_json(cells) << '\n';
            return 0;
        };
    });

    std::string title = "Hamilton l-cycles against minimum positive codegree";
    auto* plot = app.add_subcommand("plot", "Render a sweep CSV to SVG");
    plot->add_option("csv", csv_file)->required();
    plot->add_option("-o,--output", out_file)->required();
    plot->add_option("--title", title);
    plot->callback([&] {
        action = [&] {
            std::istringstream in(read_file(csv_file));
            const auto rows = read_sweep_csv(in);
            const auto cells = summarize(rows);
            const double dcover = threshold_params(rows.front().k, rows.front().l).dcover.get_d();
            write_output(out_file, threshold_svg(cells, dcover, title));
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        return action();
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::logic_error& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return kContract;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
}

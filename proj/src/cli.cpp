#include "mlnet/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mlnet/betweenness.hpp"
#include "mlnet/core.hpp"
#include "mlnet/io.hpp"
#include "mlnet/louvain.hpp"
#include "mlnet/pareto.hpp"
#include "mlnet/portfolio.hpp"

namespace mlnet {

namespace {

struct Options {
    std::string edges;
    std::string actors;
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t layer_cap = kDefaultLayerCap;
    std::uint64_t path_cap = 1000000;
};

std::string legend(const MultilayerNetwork& net) {
    std::string s = "legend:";
    for (LayerId l = 0; l < net.layer_count(); ++l) {
        s += ' ';
        s += static_cast<char>(std::toupper(static_cast<unsigned char>(net.layer_name(l)[0])));
        s += '=';
        s += net.layer_name(l);
    }
    return s;
}

void add_legend(const MultilayerNetwork& net, ReportTable& table) {
    if (initials_unique(net)) table.comments.push_back(legend(net));
}

std::string vector_string(const LengthVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.counts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v.counts[i]);
    }
    s += ')';
    return s;
}

std::string route_string(const MultilayerNetwork& net, const LayeredPath& path) {
    std::string s = net.actor_label(path.nodes.front());
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        s += " -[" + net.layer_name(path.steps[i]) + "]-> ";
        s += net.actor_label(path.nodes[i + 1]);
    }
    return s;
}

ReportTable stats_table(const MultilayerNetwork& net) {
    ReportTable t;
    t.columns = {"layer", "edges", "components", "avg_degree", "active_actors"};
    for (LayerId l = 0; l < net.layer_count(); ++l) {
        LayerStats s = layer_stats(net, l);
        t.rows.push_back({Cell::str(net.layer_name(l)),
                          Cell::num(static_cast<std::int64_t>(s.edge_count)),
                          Cell::num(static_cast<std::int64_t>(s.component_count)),
                          Cell::rat(s.avg_degree_active),
                          Cell::num(static_cast<std::int64_t>(s.active_actor_count))});
    }
    return t;
}

LayerSet parse_layer_names(const MultilayerNetwork& net, const std::string& csv) {
    LayerSet set;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto l = net.find_layer(name);
        if (!l) throw Error(errc::unknown_layer, "unknown layer '" + name + "'");
        set.insert(*l);
    }
    return set;
}

ReportTable flatten_stats_table(const MultilayerNetwork& net, const LayerSet& combo) {
    ReportTable t;
    add_legend(net, t);
    t.columns = {"layers", "actors",   "edges",      "edges_directed",
                 "avg_degree", "diameter", "components"};
    FlatStats s = flatten_stats(net, combo);
    t.rows.push_back({Cell::str(combination_label(net, combo)),
                      Cell::num(static_cast<std::int64_t>(s.actor_count)),
                      Cell::num(static_cast<std::int64_t>(s.edge_count)),
                      Cell::num(static_cast<std::int64_t>(2 * s.edge_count)),
                      Cell::rat(s.avg_degree_all),
                      Cell::num(static_cast<std::int64_t>(s.diameter)),
                      Cell::num(static_cast<std::int64_t>(s.component_count))});
    return t;
}

ReportTable betweenness_table(const MultilayerNetwork& net, bool compare) {
    ReportTable t;
    if (compare) {
        t.columns = {"actor", "classic_rank", "ml_rank", "delta"};
        for (const RankDelta& r : rank_delta_report(net))
            t.rows.push_back({Cell::str(net.actor_label(r.actor)), Cell::num(r.classic_rank),
                              Cell::num(r.ml_rank), Cell::num(r.delta)});
    } else {
        t.columns = {"actor", "ml_count", "classic_fractional", "classic_count"};
        for (const BetweennessScore& s : betweenness_scores(net))
            t.rows.push_back({Cell::str(net.actor_label(s.actor)),
                              Cell::num(static_cast<std::int64_t>(s.ml_count)),
                              Cell::dbl(s.classic_fractional),
                              Cell::num(static_cast<std::int64_t>(s.classic_count))});
    }
    return t;
}

ReportTable paths_table(const MultilayerNetwork& net, const std::string& src,
                        const std::string& dst, std::uint64_t cap) {
    auto s = net.find_actor(src);
    if (!s) throw Error(errc::unknown_actor, "unknown actor '" + src + "'");
    auto d = net.find_actor(dst);
    if (!d) throw Error(errc::unknown_actor, "unknown actor '" + dst + "'");
    ReportTable t;
    t.columns = {"source", "target", "vector", "total", "route"};
    for (const LayeredPath& p : enumerate_efficient_paths(net, *s, *d, cap)) {
        LengthVector v = p.vector(net.layer_count());
        t.rows.push_back({Cell::str(src), Cell::str(dst), Cell::str(vector_string(v)),
                          Cell::num(v.total()), Cell::str(route_string(net, p))});
    }
    return t;
}

ReportTable coverage_table(const MultilayerNetwork& net) {
    ReportTable t;
    add_legend(net, t);
    t.columns = {"target", "combination", "probability"};

    // targets ordered by their best achievable coverage, descending;
    // within a target the frontier rows are shown best first
    std::vector<std::pair<LayerId, std::vector<CoverageResult>>> groups;
    for (LayerId target = 0; target < net.layer_count(); ++target) {
        if (net.edge_count(target) == 0) continue;  // undefined conditional
        auto frontier = coverage_frontier(net, target);
        std::reverse(frontier.begin(), frontier.end());
        groups.emplace_back(target, std::move(frontier));
    }
    std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return ratio_less(b.second.front().probability, a.second.front().probability);
    });
    for (const auto& [target, frontier] : groups)
        for (const CoverageResult& r : frontier)
            t.rows.push_back({Cell::str(net.layer_name(target)),
                              Cell::str(combination_label(net, r.combination)),
                              Cell::rat(r.probability)});
    return t;
}

ReportTable jaccard_table(const MultilayerNetwork& net, bool disjoint_pair) {
    ReportTable t;
    add_legend(net, t);
    if (disjoint_pair) {
        t.columns = {"left", "right", "jaccard"};
        JaccardResult r = best_disjoint_pair(net);
        t.rows.push_back({Cell::str(combination_label(net, r.left)),
                          Cell::str(combination_label(net, r.right)), Cell::rat(r.index)});
        return t;
    }
    t.columns = {"target", "combination", "jaccard"};
    std::vector<JaccardResult> rows;
    for (LayerId target = 0; target < net.layer_count(); ++target) {
        if (net.edge_count(target) == 0) continue;
        rows.push_back(most_similar(net, target));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return ratio_less(b.index, a.index); });
    for (const JaccardResult& r : rows)
        t.rows.push_back({Cell::str(net.layer_name(r.left.to_vector().front())),
                          Cell::str(combination_label(net, r.right)), Cell::rat(r.index)});
    return t;
}

ReportTable clusterability_table(const MultilayerNetwork& net, std::uint64_t seed) {
    ReportTable t;
    add_legend(net, t);
    t.columns = {"combination", "clusters", "modularity"};
    for (const ClusterabilityRow& row : clusterability_sweep(net, seed))
        t.rows.push_back({Cell::str(combination_label(net, row.combination)),
                          Cell::num(static_cast<std::int64_t>(row.cluster_count)),
                          row.modularity ? Cell::rat(*row.modularity) : Cell::none()});
    return t;
}

void emit(const ReportTable& table, const Options& opt, std::ostream& out) {
    std::ostringstream buffer;
    if (opt.format == "json")
        write_json(table, buffer);
    else
        write_csv(table, buffer);
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw Error(errc::parse, "cannot open output file " + opt.out);
        f << buffer.str();
    } else {
        out << buffer.str();
    }
}

void emit_raw(const std::string& text, const Options& opt, std::ostream& out) {
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw Error(errc::parse, "cannot open output file " + opt.out);
        f << text;
    } else {
        out << text;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"multi-layer network analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--edges", opt.edges, "edge list file (actorA,actorB,layer per line)")
        ->required();
    app.add_option("--actors", opt.actors, "optional actor list file (one label per line)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "write the report to a file instead of stdout");
    app.add_option("--seed", opt.seed, "seed for the modularity optimizer")
        ->capture_default_str();
    app.add_option("--layer-cap", opt.layer_cap, "maximum number of layers accepted")
        ->capture_default_str();
    app.add_option("--path-cap", opt.path_cap, "maximum number of paths enumerated")
        ->capture_default_str();

    auto* stats = app.add_subcommand("stats", "per-layer edge/component/degree table");
    auto* flatten = app.add_subcommand("flatten-stats", "statistics of a merged combination");
    std::string flatten_layers;
    flatten->add_option("--layers", flatten_layers,
                        "comma separated layer names (default: all layers)");
    auto* betweenness = app.add_subcommand("betweenness", "classic and multi-layer betweenness");
    bool compare = false;
    betweenness->add_flag("--compare", compare, "emit the rank comparison report");
    auto* paths = app.add_subcommand("paths", "efficient multi-layer paths between two actors");
    std::string src, dst;
    paths->add_option("source", src, "source actor label")->required();
    paths->add_option("target", dst, "target actor label")->required();
    auto* coverage_cmd = app.add_subcommand("coverage", "best covering combinations per layer");
    auto* jaccard_cmd = app.add_subcommand("jaccard", "most similar combination per layer");
    bool pair = false;
    jaccard_cmd->add_flag("--pair", pair, "emit the best disjoint pair of combinations");
    auto* cluster = app.add_subcommand("clusterability", "modularity across all combinations");
    auto* export_cmd = app.add_subcommand("export", "write the network back as an edge list");
    std::string actors_out;
    export_cmd->add_option("--actors-out", actors_out, "also write the actor list to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        std::optional<std::filesystem::path> actors_path;
        if (!opt.actors.empty()) actors_path = opt.actors;
        MultilayerNetwork net = load_network(opt.edges, actors_path, opt.layer_cap);

        if (stats->parsed()) {
            emit(stats_table(net), opt, out);
        } else if (flatten->parsed()) {
            LayerSet combo = flatten_layers.empty() ? net.all_layers()
                                                    : parse_layer_names(net, flatten_layers);
            emit(flatten_stats_table(net, combo), opt, out);
        } else if (betweenness->parsed()) {
            emit(betweenness_table(net, compare), opt, out);
        } else if (paths->parsed()) {
            emit(paths_table(net, src, dst, opt.path_cap), opt, out);
        } else if (coverage_cmd->parsed()) {
            emit(coverage_table(net), opt, out);
        } else if (jaccard_cmd->parsed()) {
            emit(jaccard_table(net, pair), opt, out);
        } else if (cluster->parsed()) {
            emit(clusterability_table(net, opt.seed), opt, out);
        } else if (export_cmd->parsed()) {
            std::ostringstream edges;
            write_edge_list(net, edges);
            if (!actors_out.empty()) {
                std::ofstream f(actors_out, std::ios::binary);
                if (!f) throw Error(errc::parse, "cannot open output file " + actors_out);
                write_actor_list(net, f);
            }
            emit_raw(edges.str(), opt, out);
        }
        return 0;
    } catch (const Error& e) {
        err << "error [" << e.category() << "]: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error [internal]: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mlnet

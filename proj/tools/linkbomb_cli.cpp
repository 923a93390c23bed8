// Command-line front end. Every subcommand writes CSV to stdout unless told otherwise.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkbomb/linkbomb.hpp"

namespace lb = linkbomb;

namespace {

struct Common {
    std::string graph;
    double alpha = 0.85;
    double tol = 1e-12;
    std::size_t max_iter = 10'000;

    lb::PageRankConfig pagerank() const { return {.alpha = alpha, .tolerance = tol, .max_iterations = max_iter}; }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--graph", c.graph, "edge-list file")->required()->check(CLI::ExistingFile);
    app->add_option("--alpha", c.alpha, "navigation probability")->required();
    app->add_option("--tol", c.tol, "L1 stopping tolerance");
    app->add_option("--max-iter", c.max_iter, "iteration cap");
}

std::vector<lb::Node> ids(const std::string& text) { return lb::parse_id_list(text); }

void run_pagerank(const Common& c) {
    const auto g = lb::load_edge_list(c.graph);
    const auto prv = lb::compute_pagerank(g, c.pagerank());
    if (prv.alpha_one_warning) std::cerr << "warning: alpha = 1, scores are only meaningful on acyclic graphs\n";
    std::cout << "node,score,rank\n";
    for (lb::Node v = 0; v < g.node_count(); ++v) {
        std::cout << v << ',' << lb::format_double(prv[v]) << ',' << lb::rank_of(prv, v) << '\n';
    }
}

void run_flow(const Common& c, lb::Node source, lb::Node target, const std::string& exclude,
              std::optional<std::size_t> oracle) {
    const auto g = lb::load_edge_list(c.graph);
    lb::FlowQuery q{source, target, exclude.empty() ? std::vector<lb::Node>{} : ids(exclude), c.alpha};
    const auto linear = lb::flow_fraction(g, q, c.tol);
    std::cout << "source,target,excluded,alpha,fraction";
    if (oracle) std::cout << ",oracle_fraction,tail_bound";
    std::cout << '\n';
    std::cout << source << ',' << target << ',' << lb::join_ids(q.excluded, ';') << ',' << lb::format_double(c.alpha)
              << ',' << lb::format_double(linear.fraction);
    if (oracle) {
        const auto brute = lb::flow_fraction_bruteforce(g, q, *oracle);
        std::cout << ',' << lb::format_double(brute.fraction) << ',' << lb::format_double(brute.tail_bound);
    }
    std::cout << '\n';
}

void print_result_header() { std::cout << "victim_before,victim_after,magnitude,gain,rank_before,rank_after"; }

void print_result(const lb::AttackResult& r) {
    std::cout << lb::format_double(r.victim_before) << ',' << lb::format_double(r.victim_after) << ','
              << lb::format_double(r.magnitude) << ',' << lb::format_double(r.gain()) << ',' << r.rank_before << ','
              << r.rank_after;
}

void run_attack(const Common& c, lb::Node victim, const std::string& attackers, const std::string& pattern) {
    const auto g = lb::load_edge_list(c.graph);
    const auto spec = lb::build_pattern(lb::parse_pattern(pattern), ids(attackers), victim);
    const auto r = lb::attack_magnitude(g, spec, c.pagerank());
    std::cout << "victim,attackers,pattern,";
    print_result_header();
    std::cout << '\n' << victim << ',' << lb::join_ids(spec.attackers, ';') << ',' << lb::to_string(spec.pattern) << ',';
    print_result(r);
    std::cout << '\n';
}

void run_disguise(const Common& c, lb::Node victim, const std::string& attackers, std::size_t ell) {
    const auto g = lb::load_edge_list(c.graph);
    const auto plan = lb::optimal_disguised_joint(g, ids(attackers), victim, ell, c.pagerank());
    std::cout << "victim,attackers,ell,chosen_node,";
    print_result_header();
    std::cout << '\n' << victim << ',' << lb::join_ids(plan.attackers, ';') << ',' << ell << ',' << plan.chosen_node
              << ',';
    print_result(plan.result);
    std::cout << '\n';
}

void run_farm(const Common& c, const std::string& farm, lb::Node target) {
    const auto g = lb::load_edge_list(c.graph);
    const auto spec = lb::optimal_link_farm(g, ids(farm), target, c.pagerank());
    const auto r = lb::attack_magnitude(g, spec, c.pagerank());
    std::cout << "target,farm,target_link,";
    print_result_header();
    std::cout << '\n' << target << ',' << lb::join_ids(spec.attackers, ';') << ',' << spec.assignment.back().front().head
              << ',';
    print_result(r);
    std::cout << '\n';
}

void run_experiment(const std::string& config, const std::string& out_dir, std::size_t threads) {
    auto cfg = lb::load_experiment_config(config);
    if (threads) cfg.threads = threads;
    const auto result = lb::run_experiment(cfg);
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
        return f;
    };
    {
        auto f = open("trials.csv");
        lb::write_trials_csv(f, cfg, result);
    }
    {
        auto f = open("summary.csv");
        lb::write_summary_csv(f, result);
    }
    {
        auto f = open("histograms.csv");
        lb::write_histograms_csv(f, result);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PageRank link-attack toolkit"};
    app.require_subcommand(1);

    Common common;

    auto* pr = app.add_subcommand("pagerank", "scores and ranks of every node");
    add_common(pr, common);

    lb::Node source = 0, target = 0, victim = 0;
    std::string exclude, attackers, pattern = "individual", farm;
    std::optional<std::size_t> oracle;
    std::size_t ell = 1;

    auto* flow = app.add_subcommand("flow", "flow fraction between two nodes");
    add_common(flow, common);
    flow->add_option("--source", source)->required();
    flow->add_option("--target", target)->required();
    flow->add_option("--exclude", exclude, "comma-separated forbidden intermediates");
    flow->add_option("--oracle", oracle, "also enumerate paths up to this length");

    auto* attack = app.add_subcommand("attack", "apply a named attack pattern");
    add_common(attack, common);
    attack->add_option("--victim", victim)->required();
    attack->add_option("--attackers", attackers)->required();
    attack->add_option("--pattern", pattern)->required();

    auto* disguise = app.add_subcommand("disguise", "best attack whose paths to the victim have length >= ell");
    add_common(disguise, common);
    disguise->add_option("--victim", victim)->required();
    disguise->add_option("--attackers", attackers)->required();
    disguise->add_option("--ell", ell)->required();

    auto* farm_cmd = app.add_subcommand("farm", "optimal link farm around a target");
    add_common(farm_cmd, common);
    farm_cmd->add_option("--farm", farm)->required();
    farm_cmd->add_option("--target", target)->required();

    lb::GeneratorConfig gen;
    std::string model = "random", out;
    std::optional<double> edges;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random graph");
    gen_cmd->add_option("--model", model)->check(CLI::IsMember({"random", "ba", "mwdta"}))->required();
    gen_cmd->add_option("--n", gen.n)->required();
    gen_cmd->add_option("--p", gen.p, "edge probability (random)");
    gen_cmd->add_option("--m", gen.m, "out-edges per node (ba) or mean out-degree (mwdta)");
    gen_cmd->add_option("--beta", gen.beta, "uniform attachment share (mwdta)");
    gen_cmd->add_option("--max-out-degree", gen.max_out_degree);
    gen_cmd->add_option("--edges", edges, "expected edge count, overrides --p/--m");
    gen_cmd->add_option("--seed", gen.seed)->required();
    gen_cmd->add_option("--out", out)->required();

    std::string config;
    std::size_t threads = 0;
    auto* exp = app.add_subcommand("experiment", "run a seeded attack experiment");
    exp->add_option("--config", config)->required()->check(CLI::ExistingFile);
    exp->add_option("--out", out)->required();
    exp->add_option("--threads", threads, "worker threads (0 = config value)");

    std::size_t bins = 50;
    auto* hist = app.add_subcommand("hist", "histogram of pagerank scores");
    add_common(hist, common);
    hist->add_option("--bins", bins);

    CLI11_PARSE(app, argc, argv);

    try {
        if (pr->parsed()) run_pagerank(common);
        else if (flow->parsed()) run_flow(common, source, target, exclude, oracle);
        else if (attack->parsed()) run_attack(common, victim, attackers, pattern);
        else if (disguise->parsed()) run_disguise(common, victim, attackers, ell);
        else if (farm_cmd->parsed()) run_farm(common, farm, target);
        else if (gen_cmd->parsed()) {
            gen.model = lb::parse_model(model);
            gen.target_expected_edges = edges;
            lb::save_edge_list(out, lb::generate(gen));
        } else if (exp->parsed()) run_experiment(config, out, threads);
        else if (hist->parsed()) {
            const auto g = lb::load_edge_list(common.graph);
            lb::write_histogram_csv(std::cout, lb::pagerank_histogram(lb::compute_pagerank(g, common.pagerank()), bins));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

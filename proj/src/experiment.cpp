#include "linkbomb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "linkbomb/format.hpp"
#include "linkbomb/random.hpp"

namespace linkbomb {

void ExperimentConfig::validate() const {
    if (n_attackers == 0) throw std::invalid_argument("need at least one attacker");
    if (n_attackers + 1 > generator.n) throw std::invalid_argument("n_attackers + 1 exceeds node count");
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    if (alphas.empty()) throw std::invalid_argument("alpha sweep is empty");
    for (const double a : alphas) {
        if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("experiment alphas must lie in [0, 1)");
    }
    if (histogram_bins == 0) throw std::invalid_argument("histogram bins must be positive");
    for (const auto& band : {attacker_band, victim_band}) {
        if (!(band.lo >= 0.0 && band.lo < band.hi && band.hi <= 1.0)) {
            throw std::invalid_argument("quantile band must satisfy 0 <= lo < hi <= 1");
        }
    }
    for (const auto p : attacks) {
        if (p == AttackPattern::custom) throw std::invalid_argument("experiments use named attack patterns");
    }
}

Histogram pagerank_histogram(const PageRankVector& prv, std::size_t bins) {
    if (bins == 0) throw std::invalid_argument("bins must be positive");
    Histogram h;
    h.counts.assign(bins, 0);
    if (prv.size() == 0) return h;
    h.lo = prv.scores.minCoeff();
    h.hi = prv.scores.maxCoeff();
    const double width = h.bin_width();
    for (Eigen::Index i = 0; i < prv.scores.size(); ++i) {
        std::size_t bin = 0;
        if (width > 0.0) {
            bin = std::min(bins - 1, static_cast<std::size_t>((prv.scores(i) - h.lo) / width));
        }
        ++h.counts[bin];
    }
    return h;
}

const AttackMetrics& TrialRecord::metrics(AttackPattern pattern) const {
    for (const auto& m : attacks) {
        if (m.pattern == pattern) return m;
    }
    throw std::out_of_range("trial has no metrics for pattern " + std::string(to_string(pattern)));
}

namespace {

std::vector<AttackPattern> attack_order(const ExperimentConfig& cfg) {
    std::vector<AttackPattern> order{AttackPattern::individual};
    for (const auto p : cfg.attacks) {
        if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
    }
    return order;
}

/// Node ids whose position in ascending-score order falls inside the band.
std::vector<Node> band_members(const std::vector<Node>& ascending, const QuantileBand& band) {
    const double n = static_cast<double>(ascending.size());
    const auto first = static_cast<std::size_t>(std::floor(band.lo * n));
    const auto last = std::min(ascending.size(), static_cast<std::size_t>(std::ceil(band.hi * n)));
    return {ascending.begin() + static_cast<std::ptrdiff_t>(first), ascending.begin() + static_cast<std::ptrdiff_t>(last)};
}

std::vector<Node> draw_without_replacement(Rng& rng, std::vector<Node> pool, std::size_t count) {
    if (pool.size() < count) throw std::invalid_argument("not enough nodes to select from");
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + uniform_index(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

struct Selected {
    Node victim;
    std::vector<Node> attackers;
};

Selected select_nodes(const ExperimentConfig& cfg, const DirectedMultigraph& g, const PageRankConfig& pr, Rng& rng) {
    const auto n = g.node_count();
    std::vector<Node> all(n);
    std::iota(all.begin(), all.end(), Node{0});
    if (cfg.selection == Selection::uniform_random) {
        auto picked = draw_without_replacement(rng, all, cfg.n_attackers + 1);
        Selected s{picked.front(), {picked.begin() + 1, picked.end()}};
        return s;
    }
    const auto scores = compute_pagerank(g, pr);
    std::stable_sort(all.begin(), all.end(), [&](Node a, Node b) { return scores[a] < scores[b]; });
    const auto victims = band_members(all, cfg.victim_band);
    if (victims.empty()) throw std::invalid_argument("victim quantile band is empty");
    const Node victim = victims[uniform_index(rng, victims.size())];
    auto pool = band_members(all, cfg.attacker_band);
    std::erase(pool, victim);
    return {victim, draw_without_replacement(rng, std::move(pool), cfg.n_attackers)};
}

} // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial_index, double alpha) {
    cfg.validate();
    TrialRecord rec;
    rec.trial_index = trial_index;
    rec.seed = derive_seed(cfg.master_seed, trial_index);
    rec.alpha = alpha;

    GeneratorConfig gen = cfg.generator;
    gen.seed = derive_seed(rec.seed, 1);
    const auto g = generate(gen);

    const PageRankConfig pr{.alpha = alpha, .tolerance = cfg.tolerance};
    Rng rng(derive_seed(rec.seed, 2));
    auto [victim, attackers] = select_nodes(cfg, g, pr, rng);
    rec.victim = victim;
    rec.attackers = attackers;

    auto stripped = g;
    for (const Node a : attackers) stripped.clear_out_edges(a);
    const auto baseline = compute_pagerank(stripped, pr);
    rec.p0_before = baseline[victim];
    double attacker_sum = 0.0;
    for (const Node a : attackers) attacker_sum += baseline[a];
    rec.pA = attacker_sum / static_cast<double>(attackers.size());
    const double mean = baseline.scores.mean();
    rec.sigma_p = std::sqrt((baseline.scores.array() - mean).square().mean());
    rec.rank_before = rank_of(baseline, victim);
    rec.histogram = pagerank_histogram(baseline, cfg.histogram_bins);

    for (const auto pattern : attack_order(cfg)) {
        const auto spec = build_pattern(pattern, attackers, victim);
        const auto after = compute_pagerank(apply_attack(stripped, spec), pr);
        AttackMetrics m;
        m.pattern = pattern;
        m.magnitude = after[victim] - rec.p0_before;
        m.gain = m.magnitude / rec.p0_before;
        if (rec.sigma_p > 0.0) m.normalized_gain = m.magnitude / rec.sigma_p;
        m.rank_after = rank_of(after, victim);
        rec.attacks.push_back(m);
    }
    const auto& ind = rec.attacks.front();
    for (auto& m : rec.attacks) {
        if (m.gain != 0.0) m.discrepancy = ind.gain / m.gain;
        if (ind.normalized_gain && m.normalized_gain) {
            m.normalized_discrepancy = *ind.normalized_gain - *m.normalized_gain;
        }
    }
    return rec;
}

namespace {

struct Moments {
    std::size_t n = 0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double x) {
        ++n;
        sum += x;
        sum_sq += x * x;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double stddev() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return var > 0.0 ? std::sqrt(var) : 0.0;
    }
};

} // namespace

std::vector<SummaryCell> summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials) {
    std::vector<SummaryCell> cells;
    for (const double alpha : cfg.alphas) {
        for (const auto pattern : attack_order(cfg)) {
            Moments gain, ngain, disc, ndisc, rank;
            std::size_t rank1 = 0;
            for (const auto& t : trials) {
                if (t.alpha != alpha) continue;
                const auto& m = t.metrics(pattern);
                gain.add(m.gain);
                if (m.normalized_gain) ngain.add(*m.normalized_gain);
                if (m.discrepancy) disc.add(*m.discrepancy);
                if (m.normalized_discrepancy) ndisc.add(*m.normalized_discrepancy);
                rank.add(static_cast<double>(m.rank_after));
                rank1 += m.rank_after == 1 ? 1 : 0;
            }
            SummaryCell c;
            c.model = cfg.generator.model;
            c.alpha = alpha;
            c.pattern = pattern;
            c.trials = gain.n;
            c.mean_gain = gain.mean();
            c.std_gain = gain.stddev();
            c.mean_normalized_gain = ngain.mean();
            c.std_normalized_gain = ngain.stddev();
            c.discrepancy_defined = disc.n;
            c.mean_discrepancy = disc.mean();
            c.std_discrepancy = disc.stddev();
            c.mean_normalized_discrepancy = ndisc.mean();
            c.std_normalized_discrepancy = ndisc.stddev();
            c.mean_rank_after = rank.mean();
            c.rank1_fraction = gain.n ? static_cast<double>(rank1) / static_cast<double>(gain.n) : 0.0;
            cells.push_back(c);
        }
    }
    return cells;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t jobs = cfg.alphas.size() * cfg.trials;
    ExperimentResult result;
    result.trials.resize(jobs);
    std::vector<std::exception_ptr> errors(jobs);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
            const double alpha = cfg.alphas[job / cfg.trials];
            const std::size_t trial = job % cfg.trials;
            try {
                result.trials[job] = run_trial(cfg, trial, alpha);
            } catch (...) {
                errors[job] = std::current_exception();
            }
        }
    };
    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, jobs);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }
    for (std::size_t job = 0; job < jobs; ++job) {
        if (!errors[job]) continue;
        const std::string where = "trial " + std::to_string(job % cfg.trials) + " (alpha " +
                                  format_double(cfg.alphas[job / cfg.trials]) + ")";
        try {
            std::rethrow_exception(errors[job]);
        } catch (const std::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
    }
    result.summary = summarize(cfg, result.trials);
    return result;
}

void write_trials_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result) {
    out << "trial,seed,model,n,alpha,victim,attackers,attack,p0,pA,sigma_p,rank_before,"
           "magnitude,G,G_norm,D,D_norm,D_defined,rank_after\n";
    for (const auto& t : result.trials) {
        for (const auto& m : t.attacks) {
            out << t.trial_index << ',' << t.seed << ',' << to_string(cfg.generator.model) << ','
                << cfg.generator.n << ',' << format_double(t.alpha) << ',' << t.victim << ','
                << join_ids(t.attackers, ';') << ',' << to_string(m.pattern) << ',' << format_double(t.p0_before)
                << ',' << format_double(t.pA) << ',' << format_double(t.sigma_p) << ',' << t.rank_before << ','
                << format_double(m.magnitude) << ',' << format_double(m.gain) << ','
                << format_optional(m.normalized_gain) << ',' << format_optional(m.discrepancy) << ','
                << format_optional(m.normalized_discrepancy) << ',' << (m.discrepancy ? 1 : 0) << ','
                << m.rank_after << '\n';
        }
    }
}

void write_summary_csv(std::ostream& out, const ExperimentResult& result) {
    out << "model,alpha,attack,trials,mean_G,std_G,mean_G_norm,std_G_norm,D_defined,mean_D,std_D,"
           "mean_D_norm,std_D_norm,mean_rank_after,rank1_fraction\n";
    for (const auto& c : result.summary) {
        out << to_string(c.model) << ',' << format_double(c.alpha) << ',' << to_string(c.pattern) << ','
            << c.trials << ',' << format_double(c.mean_gain) << ',' << format_double(c.std_gain) << ','
            << format_double(c.mean_normalized_gain) << ',' << format_double(c.std_normalized_gain) << ','
            << c.discrepancy_defined << ',' << format_double(c.mean_discrepancy) << ','
            << format_double(c.std_discrepancy) << ',' << format_double(c.mean_normalized_discrepancy) << ','
            << format_double(c.std_normalized_discrepancy) << ',' << format_double(c.mean_rank_after) << ','
            << format_double(c.rank1_fraction) << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
    out << "bin_lo,bin_hi,count\n";
    const double w = h.bin_width();
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        const double lo = h.lo + w * static_cast<double>(i);
        const double hi = i + 1 == h.counts.size() ? h.hi : h.lo + w * static_cast<double>(i + 1);
        out << format_double(lo) << ',' << format_double(hi) << ',' << h.counts[i] << '\n';
    }
}

void write_histograms_csv(std::ostream& out, const ExperimentResult& result) {
    out << "trial,alpha,bin,bin_lo,bin_hi,count\n";
    for (const auto& t : result.trials) {
        const auto& h = t.histogram;
        const double w = h.bin_width();
        for (std::size_t i = 0; i < h.counts.size(); ++i) {
            const double lo = h.lo + w * static_cast<double>(i);
            const double hi = i + 1 == h.counts.size() ? h.hi : h.lo + w * static_cast<double>(i + 1);
            out << t.trial_index << ',' << format_double(t.alpha) << ',' << i << ',' << format_double(lo) << ','
                << format_double(hi) << ',' << h.counts[i] << '\n';
        }
    }
}

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

QuantileBand parse_band(const std::string& value) {
    const auto parts = parse_double_list(value);
    if (parts.size() != 2) throw std::invalid_argument("quantile band needs 'lo,hi'");
    return {parts[0], parts[1]};
}

std::size_t parse_count(const std::string& value) {
    std::size_t pos = 0;
    const auto x = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("bad integer '" + value + "'");
    return static_cast<std::size_t>(x);
}

double parse_real(const std::string& value) {
    const auto parts = parse_double_list(value);
    if (parts.size() != 1) throw std::invalid_argument("expected one number, got '" + value + "'");
    return parts.front();
}

} // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try {
            if (key == "model") cfg.generator.model = parse_model(value);
            else if (key == "n") cfg.generator.n = parse_count(value);
            else if (key == "p") cfg.generator.p = parse_real(value);
            else if (key == "m") cfg.generator.m = parse_count(value);
            else if (key == "beta") cfg.generator.beta = parse_real(value);
            else if (key == "max_out_degree") cfg.generator.max_out_degree = parse_count(value);
            else if (key == "target_expected_edges") cfg.generator.target_expected_edges = parse_real(value);
            else if (key == "n_attackers") cfg.n_attackers = parse_count(value);
            else if (key == "alphas") cfg.alphas = parse_double_list(value);
            else if (key == "trials") cfg.trials = parse_count(value);
            else if (key == "attacks") {
                cfg.attacks.clear();
                std::stringstream ss(value);
                std::string name;
                while (std::getline(ss, name, ',')) cfg.attacks.push_back(parse_pattern(trim(name)));
            } else if (key == "selection") {
                if (value == "uniform_random") cfg.selection = Selection::uniform_random;
                else if (value == "by_prominence_quantile") cfg.selection = Selection::by_prominence_quantile;
                else throw std::invalid_argument("unknown selection '" + value + "'");
            } else if (key == "attacker_quantile") cfg.attacker_band = parse_band(value);
            else if (key == "victim_quantile") cfg.victim_band = parse_band(value);
            else if (key == "master_seed") cfg.master_seed = std::stoull(value);
            else if (key == "bins") cfg.histogram_bins = parse_count(value);
            else if (key == "tolerance") cfg.tolerance = parse_real(value);
            else if (key == "threads") cfg.threads = parse_count(value);
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_experiment_config(in);
}

} // namespace linkbomb

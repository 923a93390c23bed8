#ifndef LINKBOMB_EXPERIMENT_HPP
#define LINKBOMB_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "linkbomb/attack.hpp"
#include "linkbomb/generators.hpp"
#include "linkbomb/pagerank.hpp"

namespace linkbomb {

enum class Selection { uniform_random, by_prominence_quantile };

/// Fraction band [lo, hi] of nodes ordered by ascending baseline score.
struct QuantileBand {
    double lo = 0.0;
    double hi = 1.0;
};

struct ExperimentConfig {
    GeneratorConfig generator;
    std::size_t n_attackers = 10;
    std::vector<double> alphas{0.85};
    std::size_t trials = 20;
    std::vector<AttackPattern> attacks{AttackPattern::individual, AttackPattern::cycle};
    Selection selection = Selection::uniform_random;
    QuantileBand attacker_band;
    QuantileBand victim_band;
    std::uint64_t master_seed = 1;
    std::size_t histogram_bins = 50;
    double tolerance = 1e-12;
    /// 0 picks the hardware concurrency.
    std::size_t threads = 0;

    void validate() const;
};

struct Histogram {
    double lo = 0;
    double hi = 0;
    std::vector<std::size_t> counts;

    double bin_width() const { return counts.empty() ? 0.0 : (hi - lo) / static_cast<double>(counts.size()); }
};

/// Equal-width bins over [min score, max score]; a constant vector fills bin 0.
Histogram pagerank_histogram(const PageRankVector& prv, std::size_t bins);

struct AttackMetrics {
    AttackPattern pattern = AttackPattern::individual;
    double magnitude = 0;
    /// G = magnitude / p0.
    double gain = 0;
    /// magnitude / sigma_p; missing when sigma_p = 0.
    std::optional<double> normalized_gain;
    /// G(individual) / G(this); missing when G(this) = 0.
    std::optional<double> discrepancy;
    std::optional<double> normalized_discrepancy;
    std::size_t rank_after = 0;
};

struct TrialRecord {
    std::size_t trial_index = 0;
    std::uint64_t seed = 0;
    double alpha = 0;
    Node victim = 0;
    std::vector<Node> attackers;
    double p0_before = 0;
    /// Mean baseline score of the attackers.
    double pA = 0;
    /// Population standard deviation of all baseline scores.
    double sigma_p = 0;
    std::size_t rank_before = 0;
    std::vector<AttackMetrics> attacks;
    Histogram histogram;

    const AttackMetrics& metrics(AttackPattern pattern) const;
};

/// Graph, selection and histograms for trial `trial_index` at one alpha.
TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial_index, double alpha);

struct SummaryCell {
    GraphModel model = GraphModel::random;
    double alpha = 0;
    AttackPattern pattern = AttackPattern::individual;
    std::size_t trials = 0;
    double mean_gain = 0, std_gain = 0;
    double mean_normalized_gain = 0, std_normalized_gain = 0;
    std::size_t discrepancy_defined = 0;
    double mean_discrepancy = 0, std_discrepancy = 0;
    double mean_normalized_discrepancy = 0, std_normalized_discrepancy = 0;
    double mean_rank_after = 0;
    double rank1_fraction = 0;
};

struct ExperimentResult {
    std::vector<TrialRecord> trials;
    std::vector<SummaryCell> summary;
};

/// All trials for every alpha, ordered by (alpha, trial). Trials run concurrently.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::vector<SummaryCell> summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials);

void write_trials_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result);
void write_summary_csv(std::ostream& out, const ExperimentResult& result);
void write_histograms_csv(std::ostream& out, const ExperimentResult& result);
void write_histogram_csv(std::ostream& out, const Histogram& h);

/// `key = value` lines with `#` comments; unknown keys are rejected.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

} // namespace linkbomb

#endif // LINKBOMB_EXPERIMENT_HPP

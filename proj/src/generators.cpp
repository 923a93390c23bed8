#include "linkbomb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkbomb/random.hpp"

namespace linkbomb {

std::string_view to_string(GraphModel model) {
    switch (model) {
    case GraphModel::random: return "random";
    case GraphModel::ba: return "ba";
    case GraphModel::mwdta: return "mwdta";
    }
    return "random";
}

GraphModel parse_model(std::string_view name) {
    for (auto m : {GraphModel::random, GraphModel::ba, GraphModel::mwdta}) {
        if (to_string(m) == name) return m;
    }
    throw std::invalid_argument("unknown graph model '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t kMwdtaCore = 3;

double mean_out_degree(const GeneratorConfig& cfg) {
    if (cfg.target_expected_edges) {
        if (!(*cfg.target_expected_edges > 0)) throw std::invalid_argument("target edge count must be positive");
        return *cfg.target_expected_edges / static_cast<double>(cfg.n);
    }
    return static_cast<double>(cfg.m);
}

/// Urn in which node v appears in_degree(v) + 1 times.
class AttachmentUrn {
public:
    void add_node(Node v) { slots_.push_back(v); }
    void add_in_edge(Node v) { slots_.push_back(v); }
    Node draw(Rng& rng) const { return slots_[uniform_index(rng, slots_.size())]; }

private:
    std::vector<Node> slots_;
};

/// Truncated power law P(k) ~ k^-tau on [1, kmax] with tau fitted to `mean`.
class OutDegreeLaw {
public:
    OutDegreeLaw(double mean, std::size_t kmax) : cdf_(kmax) {
        if (kmax == 0) throw std::invalid_argument("max_out_degree must be positive");
        const double upper = (static_cast<double>(kmax) + 1.0) / 2.0;
        if (!(mean >= 1.0 && mean <= upper)) {
            throw std::invalid_argument("mean out-degree must lie in [1, (max_out_degree + 1) / 2]");
        }
        double lo = 0.0;
        double hi = 50.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = (lo + hi) / 2.0;
            (mean_for(mid) > mean ? lo : hi) = mid;
        }
        tabulate((lo + hi) / 2.0);
    }

    std::size_t draw(Rng& rng) const {
        const double u = uniform01(rng);
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1) + 1;
    }

private:
    double mean_for(double tau) const {
        double z = 0.0;
        double s = 0.0;
        for (std::size_t k = 1; k <= cdf_.size(); ++k) {
            const double w = std::pow(static_cast<double>(k), -tau);
            z += w;
            s += w * static_cast<double>(k);
        }
        return s / z;
    }

    void tabulate(double tau) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= cdf_.size(); ++k) {
            acc += std::pow(static_cast<double>(k), -tau);
            cdf_[k - 1] = acc;
        }
        for (auto& c : cdf_) c /= acc;
    }

    std::vector<double> cdf_;
};

/// Draws `count` distinct targets below `limit` using `pick`.
template <typename Pick>
std::vector<Node> distinct_targets(Rng& rng, std::size_t count, std::size_t limit, Pick&& pick) {
    count = std::min(count, limit);
    std::vector<Node> out;
    std::vector<char> used(limit, 0);
    while (out.size() < count) {
        const Node t = pick(rng);
        if (!used[t]) {
            used[t] = 1;
            out.push_back(t);
        }
    }
    return out;
}

} // namespace

double expected_edges(const GeneratorConfig& cfg) {
    const double n = static_cast<double>(cfg.n);
    switch (cfg.model) {
    case GraphModel::random: return cfg.target_expected_edges.value_or(cfg.p * n * (n - 1.0));
    case GraphModel::ba:
    case GraphModel::mwdta: return cfg.target_expected_edges.value_or(static_cast<double>(cfg.m) * n);
    }
    return 0.0;
}

DirectedMultigraph gen_er(const GeneratorConfig& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("n must be positive");
    const double n = static_cast<double>(cfg.n);
    const double p = cfg.target_expected_edges ? *cfg.target_expected_edges / (n * (n - 1.0)) : cfg.p;
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    DirectedMultigraph g(cfg.n);
    Rng rng(cfg.seed);
    for (Node u = 0; u < cfg.n; ++u) {
        for (Node v = 0; v < cfg.n; ++v) {
            if (u != v && bernoulli(rng, p)) g.add_edge(u, v);
        }
    }
    return g;
}

DirectedMultigraph gen_ba(const GeneratorConfig& cfg) {
    const double mean = mean_out_degree(cfg);
    if (mean < 1.0) throw std::invalid_argument("ba needs at least one out-edge per node");
    const auto m = static_cast<std::size_t>(std::floor(mean));
    // Fractional means (normalized configs) give each new node one extra edge
    // with probability equal to the fractional part.
    const double extra = mean - static_cast<double>(m);
    if (cfg.n <= m) throw std::invalid_argument("ba needs n > m");

    DirectedMultigraph g(cfg.n);
    Rng rng(cfg.seed);
    AttachmentUrn urn;
    for (Node j = 0; j <= m; ++j) {
        urn.add_node(j);
        for (Node i = 0; i < j; ++i) {
            g.add_edge(j, i);
            urn.add_in_edge(i);
        }
    }
    for (Node v = m + 1; v < cfg.n; ++v) {
        const std::size_t want = m + (extra > 0.0 && bernoulli(rng, extra) ? 1 : 0);
        const auto targets = distinct_targets(rng, want, v, [&](Rng& r) { return urn.draw(r); });
        for (const Node t : targets) {
            g.add_edge(v, t);
            urn.add_in_edge(t);
        }
        urn.add_node(v);
    }
    return g;
}

DirectedMultigraph gen_mwdta(const GeneratorConfig& cfg) {
    if (cfg.n < kMwdtaCore) throw std::invalid_argument("mwdta needs n >= 3");
    if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
    double mean = mean_out_degree(cfg);
    if (cfg.target_expected_edges) {
        // The core contributes one edge per node; spread the rest over later nodes.
        mean = (*cfg.target_expected_edges - static_cast<double>(kMwdtaCore)) /
               static_cast<double>(cfg.n - kMwdtaCore);
    }
    const OutDegreeLaw law(mean, cfg.max_out_degree);

    DirectedMultigraph g(cfg.n);
    Rng rng(cfg.seed);
    AttachmentUrn urn;
    for (Node j = 0; j < kMwdtaCore; ++j) urn.add_node(j);
    for (Node j = 0; j < kMwdtaCore; ++j) {
        const Node next = (j + 1) % kMwdtaCore;
        g.add_edge(j, next);
        urn.add_in_edge(next);
    }
    for (Node v = kMwdtaCore; v < cfg.n; ++v) {
        const auto degree = law.draw(rng);
        auto pick = [&](Rng& r) -> Node { return bernoulli(r, cfg.beta) ? uniform_index(r, v) : urn.draw(r); };
        const auto targets = distinct_targets(rng, degree, v, pick);
        for (const Node t : targets) {
            g.add_edge(v, t);
            urn.add_in_edge(t);
        }
        // Early nodes have fewer predecessors than their drawn degree; the
        // surplus becomes parallel edges so the degree law is kept.
        for (std::size_t extra = targets.size(); extra < degree; ++extra) {
            const Node t = pick(rng);
            g.add_edge(v, t);
            urn.add_in_edge(t);
        }
        urn.add_node(v);
    }
    return g;
}

DirectedMultigraph generate(const GeneratorConfig& cfg) {
    switch (cfg.model) {
    case GraphModel::random: return gen_er(cfg);
    case GraphModel::ba: return gen_ba(cfg);
    case GraphModel::mwdta: return gen_mwdta(cfg);
    }
    throw std::invalid_argument("unknown graph model");
}

} // namespace linkbomb

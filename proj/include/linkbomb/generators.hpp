#ifndef LINKBOMB_GENERATORS_HPP
#define LINKBOMB_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "linkbomb/graph.hpp"

namespace linkbomb {

enum class GraphModel { random, ba, mwdta };

std::string_view to_string(GraphModel model);
GraphModel parse_model(std::string_view name);

struct GeneratorConfig {
    GraphModel model = GraphModel::random;
    std::size_t n = 1000;
    /// Edge probability per ordered pair (random).
    double p = 0.005;
    /// Out-edges per new node (ba); mean out-degree (mwdta).
    std::size_t m = 5;
    /// Share of uniform attachment in the mwdta mixture.
    double beta = 0.3;
    /// Largest out-degree an mwdta node may draw.
    std::size_t max_out_degree = 100;
    std::uint64_t seed = 0;
    /// When set, overrides p (random) or the mean out-degree (ba, mwdta).
    std::optional<double> target_expected_edges;
};

/// G(n, p) over ordered pairs without self-loops.
DirectedMultigraph gen_er(const GeneratorConfig& cfg);

/**
 * Preferential attachment. Nodes 0..m form a core where node j links to every
 * earlier node; every later node draws m distinct earlier targets with
 * probability proportional to in_degree + 1. Edges point backwards, so the
 * result is acyclic.
 */
DirectedMultigraph gen_ba(const GeneratorConfig& cfg);

/**
 * Mixed attachment with heavy-tailed out-degrees. A 3-node directed cycle
 * seeds the graph; each later node draws its out-degree from a power law on
 * [1, max_out_degree] whose exponent is fitted to the requested mean, then
 * attaches each edge uniformly with probability beta and in proportion to
 * in_degree + 1 otherwise. Draws beyond the number of earlier nodes become
 * parallel edges. Every node ends with out-degree >= 1.
 */
DirectedMultigraph gen_mwdta(const GeneratorConfig& cfg);

DirectedMultigraph generate(const GeneratorConfig& cfg);

/// Expected total edge count the config asks for.
double expected_edges(const GeneratorConfig& cfg);

} // namespace linkbomb

#endif // LINKBOMB_GENERATORS_HPP

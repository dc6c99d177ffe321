#pragma once

#include <map>
#include <string>
#include <unordered_map>

#include "gkm/element.hpp"

namespace gkm {

/// Finite lower portion of a crystal graph: every node within root-part
/// height `depth` of the f-closure of the seed, with cached statistics.
/// Edges record f_i(from) = to. Nodes sitting on the height bound whose
/// f-images were left unexpanded are flagged truncated.
struct CrystalGraph {
    struct Node {
        Element elem;
        Weight wt;
        std::vector<ExtInt> eps;
        std::vector<ExtInt> phi;
        bool truncated = false;
    };
    struct Edge {
        size_t from;
        size_t to;
        size_t i;
    };

    std::vector<Node> nodes; // discovery order
    std::vector<Edge> edges;
    size_t seed = 0;
    long long depth = 0;
    std::unordered_map<std::string, size_t> by_key;

    size_t truncated_count() const;
    /// Node index by element key, or npos.
    size_t find(const std::string& key) const;
    static constexpr size_t npos = static_cast<size_t>(-1);
};

/// Deterministic BFS from the seed applying every lowering operator,
/// deduplicating by element equality. Nodes are kept while their root-part
/// height stays <= depth; the frontier at the bound is marked truncated when
/// it still has nonzero f-images.
CrystalGraph generate_component(const Crystal& crystal, const Element& seed, long long depth);

/// Deterministic export: "dot" or "json", nodes sorted by canonical key.
/// Throws UnknownFormat for anything else.
std::string export_graph(const CrystalGraph& g, const std::string& format);

/// Node count per weight, sorted by (height, weight) for stable output.
std::vector<std::pair<Weight, size_t>> weight_multiplicities(const CrystalGraph& g);

/// Canonical relabeling of the graph as a deterministic edge-labeled
/// automaton rooted at the seed. Two components generated from possibly
/// different realizations are weight-and-edge-label isomorphic iff their
/// signatures are equal.
std::string canonical_signature(const CrystalGraph& g);

} // namespace gkm

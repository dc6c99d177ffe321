#pragma once

#include <json.hpp>

#include <optional>

#include "gkm/graph.hpp"
#include "gkm/quiver_geom.hpp"

namespace gkm {

using Json = nlohmann::ordered_json;

/// Array-of-arrays of integers -> validated datum. Index names are "1".."n".
CartanDatum parse_matrix_json(const Json& j);

/// {"vertices": [id...], "arrow_pairs": [{"id","from","to"}...]}; each listed
/// pair implicitly contributes its reversal.
QuiverPresentation parse_quiver_json(const Json& j);

/// {"<vertex-or-index-name>": nonneg int, ...}; missing names default to 0.
std::vector<long long> parse_weight_json(const Json& j, const CartanDatum& datum);

/// {"quiver": ..., "dims": {...}, "framing_dims": {...},
///  "x": {"<pair-id>": [[..]], "<pair-id>_bar": [[..]], ...},
///  "t": {...}, "s": {...}}
/// with every matrix a row-major array of strings "p/q". Missing matrices
/// default to zero; framing_dims defaults to zero.
RepPoint parse_rep_point_json(const Json& j);

Json datum_to_json(const CartanDatum& datum);
Json multiplicities_to_json(const std::vector<std::pair<Weight, size_t>>& table,
                            const CartanDatum& datum);

/// Structured mirror of the JSON graph document; parsing an exported graph
/// and re-serializing it is byte-identical.
struct GraphDoc {
    struct Node {
        std::string id;
        std::vector<long long> base, alpha;
        std::vector<ExtInt> eps, phi;
        bool truncated = false;
        // window-model elements also carry their support and base weight
        std::optional<std::map<long long, long long>> slots;
        std::optional<std::vector<long long>> lambda;
        bool operator==(const Node& other) const = default;
    };
    struct Edge {
        std::string from, to;
        size_t i = 0;
        bool operator==(const Edge& other) const = default;
    };
    std::string seed;
    long long depth = 0;
    size_t truncated_count = 0;
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    bool operator==(const GraphDoc& other) const = default;
};

GraphDoc parse_graph_json(const std::string& text);
std::string graph_doc_to_json(const GraphDoc& doc);

} // namespace gkm

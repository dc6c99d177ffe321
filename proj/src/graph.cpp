#include "gkm/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace gkm {

size_t CrystalGraph::truncated_count() const {
    size_t n = 0;
    for (const auto& node : nodes) n += node.truncated ? 1 : 0;
    return n;
}

size_t CrystalGraph::find(const std::string& key) const {
    auto it = by_key.find(key);
    return it == by_key.end() ? npos : it->second;
}

CrystalGraph generate_component(const Crystal& crystal, const Element& seed, long long depth) {
    if (depth < 0) throw Error(Errc::ShapeMismatch, "depth must be nonnegative");
    CrystalGraph g;
    g.depth = depth;

    auto add_node = [&](const Element& el) -> size_t {
        auto it = g.by_key.find(el.key());
        if (it != g.by_key.end()) return it->second;
        CrystalGraph::Node node{el, crystal.wt(el), {}, {}, false};
        for (size_t i = 0; i < crystal.rank(); ++i) {
            node.eps.push_back(crystal.eps(i, el));
            node.phi.push_back(crystal.phi(i, el));
        }
        g.nodes.push_back(std::move(node));
        g.by_key.emplace(el.key(), g.nodes.size() - 1);
        return g.nodes.size() - 1;
    };

    g.seed = add_node(seed);
    std::deque<size_t> queue{g.seed};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        const long long height = g.nodes[cur].wt.height();
        for (size_t i = 0; i < crystal.rank(); ++i) {
            auto img = crystal.f(i, g.nodes[cur].elem);
            if (!img) continue;
            if (height >= depth) {
                g.nodes[cur].truncated = true;
                continue;
            }
            bool fresh = g.by_key.find(img->key()) == g.by_key.end();
            size_t tgt = add_node(*img);
            g.edges.push_back({cur, tgt, i});
            if (fresh) queue.push_back(tgt);
        }
    }
    return g;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

/// Node order sorted by canonical key; returns old index -> sorted position.
std::vector<size_t> sorted_order(const CrystalGraph& g) {
    std::vector<size_t> order(g.nodes.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return g.nodes[a].elem.key() < g.nodes[b].elem.key();
    });
    return order;
}

std::string export_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (size_t k : sorted_order(g)) {
        const auto& node = g.nodes[k];
        os << "  \"" << dot_escape(node.elem.key()) << "\" [label=\"wt=" << node.wt.str()
           << "\"];\n";
    }
    struct Line {
        std::string from, to;
        size_t i;
    };
    std::vector<Line> lines;
    for (const auto& e : g.edges)
        lines.push_back({g.nodes[e.from].elem.key(), g.nodes[e.to].elem.key(), e.i});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.from, a.i, a.to) < std::tie(b.from, b.i, b.to);
    });
    for (const auto& l : lines)
        os << "  \"" << dot_escape(l.from) << "\" -> \"" << dot_escape(l.to) << "\" [label=\""
           << (l.i + 1) << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json ext_list(const std::vector<ExtInt>& xs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (ExtInt x : xs) {
        if (x.finite())
            arr.push_back(x.value());
        else
            arr.push_back("-inf");
    }
    return arr;
}

std::string export_json(const CrystalGraph& g) {
    nlohmann::ordered_json doc;
    doc["seed"] = g.nodes.empty() ? "" : g.nodes[g.seed].elem.key();
    doc["depth"] = g.depth;
    doc["truncated_count"] = g.truncated_count();
    auto nodes = nlohmann::ordered_json::array();
    for (size_t k : sorted_order(g)) {
        const auto& node = g.nodes[k];
        nlohmann::ordered_json jn;
        jn["id"] = node.elem.key();
        jn["wt"] = {{"base", node.wt.base()}, {"alpha", node.wt.alpha()}};
        jn["eps"] = ext_list(node.eps);
        jn["phi"] = ext_list(node.phi);
        jn["truncated"] = node.truncated;
        if (node.elem.kind() == Element::Kind::Window ||
            node.elem.kind() == Element::Kind::Highest) {
            auto slots = nlohmann::ordered_json::object();
            for (const auto& [pos, n] : node.elem.support())
                slots[std::to_string(pos)] = n;
            jn["slots"] = std::move(slots);
            if (node.elem.kind() == Element::Kind::Highest)
                jn["lambda"] = node.elem.lambda();
        }
        nodes.push_back(std::move(jn));
    }
    doc["nodes"] = std::move(nodes);
    struct Line {
        std::string from, to;
        size_t i;
    };
    std::vector<Line> lines;
    for (const auto& e : g.edges)
        lines.push_back({g.nodes[e.from].elem.key(), g.nodes[e.to].elem.key(), e.i});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.from, a.i, a.to) < std::tie(b.from, b.i, b.to);
    });
    auto edges = nlohmann::ordered_json::array();
    for (const auto& l : lines)
        edges.push_back({{"from", l.from}, {"to", l.to}, {"i", l.i + 1}});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

} // namespace

std::string export_graph(const CrystalGraph& g, const std::string& format) {
    if (format == "dot") return export_dot(g);
    if (format == "json") return export_json(g);
    throw Error(Errc::UnknownFormat, "unsupported export format '" + format + "'");
}

std::vector<std::pair<Weight, size_t>> weight_multiplicities(const CrystalGraph& g) {
    std::map<std::pair<long long, std::string>, std::pair<Weight, size_t>> acc;
    for (const auto& node : g.nodes) {
        auto key = std::make_pair(node.wt.height(), node.wt.str());
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, std::make_pair(node.wt, size_t{1}));
        else
            it->second.second++;
    }
    std::vector<std::pair<Weight, size_t>> out;
    out.reserve(acc.size());
    for (auto& [k, v] : acc) out.push_back(std::move(v));
    return out;
}

std::string canonical_signature(const CrystalGraph& g) {
    if (g.nodes.empty()) return "empty";
    // Out-edges keyed by label are deterministic, so BFS discovery order by
    // ascending label is a canonical relabeling of the rooted graph.
    std::vector<std::map<size_t, size_t>> succ(g.nodes.size());
    for (const auto& e : g.edges) succ[e.from][e.i] = e.to;

    std::vector<size_t> canon(g.nodes.size(), CrystalGraph::npos);
    std::vector<size_t> order;
    canon[g.seed] = 0;
    order.push_back(g.seed);
    std::ostringstream os;
    for (size_t q = 0; q < order.size(); ++q) {
        size_t cur = order[q];
        const auto& node = g.nodes[cur];
        os << q << " wt=" << node.wt.str() << " trunc=" << node.truncated;
        for (size_t i = 0; i < node.eps.size(); ++i)
            os << " s" << i << "=" << node.eps[i].str() << "/" << node.phi[i].str();
        os << '\n';
        for (const auto& [i, tgt] : succ[cur]) {
            if (canon[tgt] == CrystalGraph::npos) {
                canon[tgt] = order.size();
                order.push_back(tgt);
            }
            os << q << " -" << (i + 1) << "-> " << canon[tgt] << '\n';
        }
    }
    if (order.size() != g.nodes.size()) os << "unreachable=" << (g.nodes.size() - order.size());
    return os.str();
}

} // namespace gkm

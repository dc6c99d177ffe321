#include "gkm/json_io.hpp"

namespace gkm {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(Errc::ParseError, what);
}

long long as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) parse_fail(what + " must be an integer");
    return j.get<long long>();
}

} // namespace

CartanDatum parse_matrix_json(const Json& j) {
    if (!j.is_array()) parse_fail("matrix must be an array of arrays");
    std::vector<std::vector<long long>> m;
    for (const auto& row : j) {
        if (!row.is_array()) parse_fail("matrix row must be an array");
        std::vector<long long> r;
        for (const auto& v : row) r.push_back(as_int(v, "matrix entry"));
        m.push_back(std::move(r));
    }
    return CartanDatum::validate(std::move(m));
}

QuiverPresentation parse_quiver_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        parse_fail("quiver needs a \"vertices\" array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (v.is_string())
            vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            vertices.push_back(std::to_string(v.get<long long>()));
        else
            parse_fail("vertex ids must be strings or integers");
    }

    std::vector<ArrowPair> pairs;
    if (j.contains("arrow_pairs")) {
        if (!j["arrow_pairs"].is_array()) parse_fail("\"arrow_pairs\" must be an array");
        auto vertex_pos = [&](const Json& v) -> size_t {
            std::string name = v.is_string() ? v.get<std::string>()
                                             : std::to_string(as_int(v, "vertex reference"));
            for (size_t k = 0; k < vertices.size(); ++k)
                if (vertices[k] == name) return k;
            parse_fail("arrow endpoint '" + name + "' is not a vertex");
        };
        for (const auto& a : j["arrow_pairs"]) {
            if (!a.is_object() || !a.contains("id") || !a.contains("from") || !a.contains("to"))
                parse_fail("arrow pair needs id/from/to");
            pairs.push_back({a["id"].is_string() ? a["id"].get<std::string>()
                                                 : a["id"].dump(),
                             vertex_pos(a["from"]), vertex_pos(a["to"])});
        }
    }
    return QuiverPresentation(std::move(vertices), std::move(pairs));
}

std::vector<long long> parse_weight_json(const Json& j, const CartanDatum& datum) {
    if (!j.is_object()) parse_fail("weight must be an object {vertex: integer}");
    std::vector<long long> lambda(datum.rank(), 0);
    for (const auto& [name, value] : j.items()) {
        size_t i = datum.index_of(name); // throws UnknownIndex
        lambda[i] = as_int(value, "weight entry");
        if (lambda[i] < 0)
            throw Error(Errc::NonDominantWeight,
                        "weight entry for '" + name + "' is negative");
    }
    return lambda;
}

namespace {

QMat parse_matrix_of_rationals(const Json& j, size_t rows, size_t cols,
                               const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        parse_fail(what + " must have " + std::to_string(rows) + " rows");
    QMat m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            parse_fail(what + " row " + std::to_string(r) + " must have " +
                       std::to_string(cols) + " entries");
        for (size_t c = 0; c < cols; ++c) {
            const auto& v = j[r][c];
            if (v.is_string())
                m.at(r, c) = rat_parse(v.get<std::string>());
            else if (v.is_number_integer())
                m.at(r, c) = Rat(static_cast<long>(v.get<long long>()));
            else
                parse_fail(what + " entries must be integers or \"p/q\" strings");
        }
    }
    return m;
}

} // namespace

RepPoint parse_rep_point_json(const Json& j) {
    if (!j.is_object() || !j.contains("quiver") || !j.contains("dims"))
        parse_fail("representation point needs \"quiver\" and \"dims\"");
    QuiverPresentation quiver = parse_quiver_json(j["quiver"]);
    const size_t n = quiver.num_vertices();

    auto read_dims = [&](const char* field) {
        std::vector<size_t> dims(n, 0);
        if (!j.contains(field)) return dims;
        if (!j[field].is_object()) parse_fail(std::string(field) + " must be an object");
        for (const auto& [name, value] : j[field].items()) {
            long long d = as_int(value, std::string(field) + " entry");
            if (d < 0) parse_fail(std::string(field) + " entries must be nonnegative");
            dims[quiver.vertex_of(name)] = static_cast<size_t>(d);
        }
        return dims;
    };

    std::vector<size_t> dim_v = read_dims("dims");
    std::vector<size_t> dim_w = read_dims("framing_dims");
    RepPoint p{std::move(quiver), std::move(dim_v), std::move(dim_w), {}, {}, {}, {}};

    const Json empty = Json::object();
    const Json& x = j.contains("x") ? j["x"] : empty;
    for (const auto& pr : p.quiver.pairs()) {
        size_t rows = p.dim_v[pr.to], cols = p.dim_v[pr.from];
        p.x_pair.push_back(x.contains(pr.id)
                               ? parse_matrix_of_rationals(x[pr.id], rows, cols, "x[" + pr.id + "]")
                               : QMat(rows, cols));
        std::string bar = pr.id + "_bar";
        p.x_bar.push_back(x.contains(bar)
                              ? parse_matrix_of_rationals(x[bar], cols, rows, "x[" + bar + "]")
                              : QMat(cols, rows));
    }
    const Json& t = j.contains("t") ? j["t"] : empty;
    const Json& s = j.contains("s") ? j["s"] : empty;
    for (size_t i = 0; i < n; ++i) {
        const std::string& name = p.quiver.vertices()[i];
        p.t.push_back(t.contains(name) ? parse_matrix_of_rationals(t[name], p.dim_w[i],
                                                                   p.dim_v[i], "t[" + name + "]")
                                       : QMat(p.dim_w[i], p.dim_v[i]));
        p.s.push_back(s.contains(name) ? parse_matrix_of_rationals(s[name], p.dim_v[i],
                                                                   p.dim_w[i], "s[" + name + "]")
                                       : QMat(p.dim_v[i], p.dim_w[i]));
    }
    p.validate();
    return p;
}

Json datum_to_json(const CartanDatum& datum) {
    Json doc;
    doc["vertices"] = datum.names();
    Json rows = Json::array();
    for (const auto& row : datum.matrix()) rows.push_back(row);
    doc["matrix"] = std::move(rows);
    Json real = Json::array(), imaginary = Json::array();
    for (size_t i : datum.real_indices()) real.push_back(datum.names()[i]);
    for (size_t i : datum.imaginary_indices()) imaginary.push_back(datum.names()[i]);
    doc["real"] = std::move(real);
    doc["imaginary"] = std::move(imaginary);
    return doc;
}

Json multiplicities_to_json(const std::vector<std::pair<Weight, size_t>>& table,
                            const CartanDatum& datum) {
    Json arr = Json::array();
    for (const auto& [wt, count] : table) {
        Json row;
        row["weight"] = {{"base", wt.base()}, {"alpha", wt.alpha()}};
        Json pairings = Json::object();
        for (size_t i = 0; i < datum.rank(); ++i)
            pairings[datum.names()[i]] = pairing(datum, wt, i);
        row["pairings"] = std::move(pairings);
        row["count"] = count;
        arr.push_back(std::move(row));
    }
    return arr;
}

namespace {

std::vector<ExtInt> parse_ext_list(const Json& j, const std::string& what) {
    if (!j.is_array()) parse_fail(what + " must be an array");
    std::vector<ExtInt> out;
    for (const auto& v : j) {
        if (v.is_string() && v.get<std::string>() == "-inf")
            out.push_back(ExtInt::neg_inf());
        else if (v.is_number_integer())
            out.push_back(ExtInt(v.get<long long>()));
        else
            parse_fail(what + " entries must be integers or \"-inf\"");
    }
    return out;
}

} // namespace

GraphDoc parse_graph_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        parse_fail(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object()) parse_fail("graph document must be an object");
    GraphDoc doc;
    doc.seed = j.value("seed", std::string{});
    doc.depth = j.contains("depth") ? as_int(j["depth"], "depth") : 0;
    doc.truncated_count =
        j.contains("truncated_count")
            ? static_cast<size_t>(as_int(j["truncated_count"], "truncated_count"))
            : 0;
    for (const auto& jn : j.value("nodes", Json::array())) {
        GraphDoc::Node node;
        node.id = jn.at("id").get<std::string>();
        node.base = jn.at("wt").at("base").get<std::vector<long long>>();
        node.alpha = jn.at("wt").at("alpha").get<std::vector<long long>>();
        node.eps = parse_ext_list(jn.at("eps"), "eps");
        node.phi = parse_ext_list(jn.at("phi"), "phi");
        node.truncated = jn.value("truncated", false);
        if (jn.contains("slots")) {
            std::map<long long, long long> slots;
            for (const auto& [pos, n] : jn["slots"].items())
                slots[std::stoll(pos)] = as_int(n, "slot entry");
            node.slots = std::move(slots);
        }
        if (jn.contains("lambda"))
            node.lambda = jn["lambda"].get<std::vector<long long>>();
        doc.nodes.push_back(std::move(node));
    }
    for (const auto& je : j.value("edges", Json::array())) {
        GraphDoc::Edge edge;
        edge.from = je.at("from").get<std::string>();
        edge.to = je.at("to").get<std::string>();
        edge.i = static_cast<size_t>(as_int(je.at("i"), "edge label"));
        doc.edges.push_back(std::move(edge));
    }
    return doc;
}

std::string graph_doc_to_json(const GraphDoc& doc) {
    Json j;
    j["seed"] = doc.seed;
    j["depth"] = doc.depth;
    j["truncated_count"] = doc.truncated_count;
    auto nodes = Json::array();
    for (const auto& node : doc.nodes) {
        Json jn;
        jn["id"] = node.id;
        jn["wt"] = {{"base", node.base}, {"alpha", node.alpha}};
        auto ext = [](const std::vector<ExtInt>& xs) {
            Json arr = Json::array();
            for (ExtInt x : xs) {
                if (x.finite())
                    arr.push_back(x.value());
                else
                    arr.push_back("-inf");
            }
            return arr;
        };
        jn["eps"] = ext(node.eps);
        jn["phi"] = ext(node.phi);
        jn["truncated"] = node.truncated;
        if (node.slots) {
            auto slots = Json::object();
            for (const auto& [pos, n] : *node.slots) slots[std::to_string(pos)] = n;
            jn["slots"] = std::move(slots);
        }
        if (node.lambda) jn["lambda"] = *node.lambda;
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    auto edges = Json::array();
    for (const auto& edge : doc.edges)
        edges.push_back({{"from", edge.from}, {"to", edge.to}, {"i", edge.i}});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

} // namespace gkm

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gkm/json_io.hpp"
#include "gkm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

gkm::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gkm::Error(gkm::Errc::ParseError, "cannot open '" + path + "'");
    try {
        return gkm::Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw gkm::Error(gkm::Errc::ParseError, path + ": " + ex.what());
    }
}

struct CrystalConfig {
    std::string matrix_path;
    std::string quiver_path;
    std::string weight_path;
    long long depth = 8;
    std::string iota_spec;
    unsigned seed = 1;

    void attach(CLI::App* cmd) {
        auto* m = cmd->add_option("--matrix", matrix_path, "Cartan matrix JSON file");
        auto* q = cmd->add_option("--quiver", quiver_path, "quiver JSON file");
        m->excludes(q);
        cmd->add_option("--weight", weight_path, "dominant weight JSON file")->required();
        cmd->add_option("--depth", depth, "root-part height bound")
            ->envname("GKM_DEPTH")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--iota", iota_spec,
                        "comma-separated ground sequence cycle (index names)");
        cmd->add_option("--seed", seed, "seed for the randomized alternate-iota check");
    }

    std::shared_ptr<const gkm::CartanDatum> datum() const {
        if (matrix_path.empty() == quiver_path.empty())
            throw gkm::Error(gkm::Errc::ParseError, "give exactly one of --matrix/--quiver");
        if (!matrix_path.empty())
            return std::make_shared<const gkm::CartanDatum>(
                gkm::parse_matrix_json(load_json(matrix_path)));
        return std::make_shared<const gkm::CartanDatum>(
            gkm::cartan_from_quiver(gkm::parse_quiver_json(load_json(quiver_path))));
    }

    std::vector<size_t> iota(const gkm::CartanDatum& datum) const {
        if (iota_spec.empty()) return gkm::InfinityCrystal::default_iota(datum);
        std::vector<size_t> cycle;
        std::string token;
        std::istringstream is(iota_spec);
        while (std::getline(is, token, ','))
            if (!token.empty()) cycle.push_back(datum.index_of(token));
        return cycle;
    }
};

int cmd_cartan_from_quiver(const std::string& path) {
    auto quiver = gkm::parse_quiver_json(load_json(path));
    std::cout << gkm::datum_to_json(gkm::cartan_from_quiver(quiver)).dump(2) << "\n";
    return kExitOk;
}

int cmd_generate(const CrystalConfig& cfg, const std::string& format) {
    auto datum = cfg.datum();
    auto lambda = gkm::parse_weight_json(load_json(cfg.weight_path), *datum);
    gkm::HighestWeightCrystal crystal(datum, lambda, cfg.iota(*datum));
    auto graph = gkm::generate_component(crystal, crystal.seed(), cfg.depth);
    std::cout << gkm::export_graph(graph, format);
    std::cerr << "nodes: " << graph.nodes.size() << "\nedges: " << graph.edges.size()
              << "\ntruncated: " << graph.truncated_count() << "\n";
    return kExitOk;
}

int cmd_verify(const CrystalConfig& cfg) {
    auto datum = cfg.datum();
    auto lambda = gkm::parse_weight_json(load_json(cfg.weight_path), *datum);
    auto iota = cfg.iota(*datum);
    gkm::HighestWeightCrystal crystal(datum, lambda, iota);
    auto graph = gkm::generate_component(crystal, crystal.seed(), cfg.depth);
    auto report = gkm::verify_component(crystal, graph);

    // alternate-iota cross check at small depth: the generated component must
    // be weight-and-edge-label isomorphic for any valid ground sequence
    {
        std::vector<size_t> alt = iota;
        std::mt19937 rng(cfg.seed);
        std::shuffle(alt.begin(), alt.end(), rng);
        std::rotate(alt.begin(), alt.begin() + (alt.size() > 1 ? 1 : 0), alt.end());
        long long iso_depth = std::min<long long>(cfg.depth, 4);
        gkm::HighestWeightCrystal alt_crystal(datum, lambda, alt);
        auto g1 = gkm::generate_component(crystal, crystal.seed(), iso_depth);
        auto g2 = gkm::generate_component(alt_crystal, alt_crystal.seed(), iso_depth);
        bool iso = gkm::canonical_signature(g1) == gkm::canonical_signature(g2);
        report.items.push_back({"iota-isomorphism", iso, g1.nodes.size(),
                                iso ? "" : "components differ between ground sequences"});
    }

    std::cout << report.render();
    std::cout << "nodes: " << graph.nodes.size() << ", edges: " << graph.edges.size()
              << ", truncated: " << graph.truncated_count() << "\n";
    return report.all_pass() ? kExitOk : kExitVerify;
}

int cmd_multiplicities(const CrystalConfig& cfg) {
    auto datum = cfg.datum();
    auto lambda = gkm::parse_weight_json(load_json(cfg.weight_path), *datum);
    gkm::HighestWeightCrystal crystal(datum, lambda, cfg.iota(*datum));
    auto table = gkm::multiplicities(crystal, cfg.depth);
    std::cout << gkm::multiplicities_to_json(table, *datum).dump(2) << "\n";
    return kExitOk;
}

int cmd_quiver_check(const std::string& path) {
    gkm::RepPoint p = gkm::parse_rep_point_json(load_json(path));
    gkm::Json doc;

    auto mu = gkm::moment_map(p);
    bool mu_zero = true;
    gkm::Json mu_json = gkm::Json::object();
    for (size_t i = 0; i < mu.size(); ++i) {
        mu_zero = mu_zero && mu[i].is_zero();
        mu_json[p.quiver.vertices()[i]] = mu[i].str();
    }
    doc["mu"] = std::move(mu_json);
    doc["mu_zero"] = mu_zero;

    gkm::Json regular = gkm::Json::object();
    bool regular_all = true;
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        const auto& pr = p.quiver.pairs()[k];
        if (!pr.is_loop()) continue;
        bool ok = gkm::check_regular_semisimple(p.x_bar[k]);
        regular[pr.id + "_bar"] = ok;
        regular_all = regular_all && ok;
    }
    doc["regular_semisimple"] = std::move(regular);

    auto flag = gkm::check_flag_condition(p);
    doc["flag"] = flag.exists;
    doc["member"] = mu_zero && flag.exists && regular_all;

    auto stability = gkm::check_stability(p);
    doc["stable"] = stability.stable;
    if (!stability.stable) {
        gkm::Json witness = gkm::Json::object();
        for (size_t i = 0; i < stability.witness.size(); ++i)
            if (stability.witness[i].cols() > 0)
                witness[p.quiver.vertices()[i]] = stability.witness[i].str();
        doc["unstable_subspace"] = std::move(witness);
    }

    gkm::Json eps = gkm::Json::object();
    for (size_t i = 0; i < p.quiver.num_vertices(); ++i)
        eps[p.quiver.vertices()[i]] = gkm::eps_omega(p, i);
    doc["eps_omega"] = std::move(eps);

    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"highest weight crystal generator and quiver variety checker"};
    app.require_subcommand(1);

    auto* cartan = app.add_subcommand("cartan", "Cartan datum utilities");
    cartan->require_subcommand(1);
    std::string quiver_path;
    auto* from_quiver = cartan->add_subcommand("from-quiver", "derive a datum from a quiver");
    from_quiver->add_option("quiver", quiver_path, "quiver JSON file")->required();

    auto* crystal = app.add_subcommand("crystal", "crystal graph commands");
    crystal->require_subcommand(1);
    CrystalConfig gen_cfg, verify_cfg, mult_cfg;
    std::string format = "json";
    auto* generate = crystal->add_subcommand("generate", "generate a component graph");
    gen_cfg.attach(generate);
    generate->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    auto* verify = crystal->add_subcommand("verify", "run the invariant suite");
    verify_cfg.attach(verify);
    auto* mult = crystal->add_subcommand("multiplicities", "weight multiplicity table");
    mult_cfg.attach(mult);

    auto* quiver = app.add_subcommand("quiver", "representation point checks");
    quiver->require_subcommand(1);
    std::string point_path;
    auto* check = quiver->add_subcommand("check", "evaluate the geometric conditions");
    check->add_option("point", point_path, "representation point JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (from_quiver->parsed()) return cmd_cartan_from_quiver(quiver_path);
        if (generate->parsed()) return cmd_generate(gen_cfg, format);
        if (verify->parsed()) return cmd_verify(verify_cfg);
        if (mult->parsed()) return cmd_multiplicities(mult_cfg);
        if (check->parsed()) return cmd_quiver_check(point_path);
    } catch (const gkm::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

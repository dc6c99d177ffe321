#include "gkm/verify.hpp"

#include <sstream>

#include "gkm/quiver_geom.hpp"

namespace gkm {

bool VerifyReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

const VerifyReport::Item* VerifyReport::item(const std::string& name) const {
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

std::string VerifyReport::render() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass ? "[PASS] " : "[FAIL] ") << it.name << " (exercised=" << it.exercised
           << ")";
        if (!it.detail.empty()) os << " " << it.detail;
        os << '\n';
    }
    return os.str();
}

VerifyReport verify_edges(const CrystalGraph& g, const Crystal& crystal) {
    VerifyReport report;
    VerifyReport::Item item{"mutual-inverse", true, 0, ""};
    for (const auto& edge : g.edges) {
        item.exercised++;
        const Element& src = g.nodes[edge.from].elem;
        const Element& tgt = g.nodes[edge.to].elem;
        auto down = crystal.f(edge.i, src);
        auto up = crystal.e(edge.i, tgt);
        if (!down || !(*down == tgt) || !up || !(*up == src)) {
            item.pass = false;
            if (item.detail.empty())
                item.detail = "edge " + src.key() + " -" + std::to_string(edge.i + 1) + "-> " +
                              tgt.key() + " does not invert";
        }
    }
    report.items.push_back(std::move(item));
    return report;
}

namespace {

/// Raising string length max{k >= 0 : e_i^k b != 0}, bounded by the root
/// part height.
long long string_length(const Crystal& crystal, size_t i, Element b, long long bound) {
    long long l = 0;
    while (l <= bound) {
        auto up = crystal.e(i, b);
        if (!up) return l;
        b = *up;
        ++l;
    }
    return l;
}

} // namespace

VerifyReport verify_component(const HighestWeightCrystal& crystal, const CrystalGraph& g) {
    VerifyReport report;
    const CartanDatum& datum = crystal.datum();
    const size_t rank = datum.rank();

    auto push = [&](VerifyReport::Item item) { report.items.push_back(std::move(item)); };

    {
        std::vector<Element> elems;
        elems.reserve(g.nodes.size());
        for (const auto& node : g.nodes) elems.push_back(node.elem);
        AxiomReport ax = check_axioms(crystal, elems);
        push({"axioms", ax.passed(), ax.checks,
              ax.passed() ? "" : ax.violations.front().condition + " at " +
                                     ax.violations.front().element});
    }

    report.items.push_back(verify_edges(g, crystal).items.front());

    {
        VerifyReport::Item item{"phi-nonneg", true, 0, ""};
        for (const auto& node : g.nodes)
            for (size_t i = 0; i < rank; ++i) {
                item.exercised++;
                if (node.phi[i] < ExtInt(0)) {
                    item.pass = false;
                    item.detail = "phi_" + std::to_string(i + 1) + "(" + node.elem.key() +
                                  ") = " + node.phi[i].str();
                }
            }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"f-vanishing", true, 0, ""};
        for (const auto& node : g.nodes)
            for (size_t i = 0; i < rank; ++i) {
                item.exercised++;
                bool absent = !crystal.f(i, node.elem).has_value();
                if (absent != (node.phi[i] == ExtInt(0))) {
                    item.pass = false;
                    item.detail = "f absent xor phi = 0 at " + node.elem.key();
                }
            }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"imag-eps", true, 0, ""};
        for (const auto& node : g.nodes)
            for (size_t i : datum.imaginary_indices()) {
                item.exercised++;
                if (node.eps[i] != ExtInt(0)) {
                    item.pass = false;
                    item.detail = "eps_" + std::to_string(i + 1) + "(" + node.elem.key() +
                                  ") = " + node.eps[i].str();
                }
            }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"imag-raising", true, 0, ""};
        for (const auto& node : g.nodes)
            for (size_t i : datum.imaginary_indices()) {
                long long aii = datum.matrix()[i][i];
                if (pairing(datum, node.wt, i) > -aii) continue;
                item.exercised++;
                if (crystal.e(i, node.elem).has_value()) {
                    item.pass = false;
                    item.detail = "raising image exists at " + node.elem.key();
                }
            }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"connected", true, 0, ""};
        const std::string seed_key = g.nodes[g.seed].elem.key();
        for (const auto& node : g.nodes) {
            item.exercised++;
            Element cur = node.elem;
            long long guard = node.wt.height() + 1;
            while (!(cur.key() == seed_key) && guard-- > 0) {
                std::optional<Element> parent;
                for (size_t i = 0; i < rank && !parent; ++i) parent = crystal.e(i, cur);
                if (!parent || g.find(parent->key()) == CrystalGraph::npos) break;
                cur = *parent;
            }
            if (!(cur.key() == seed_key)) {
                item.pass = false;
                item.detail = "no raising path from " + node.elem.key() + " to the seed";
            }
        }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"highest-unique", true, 0, ""};
        size_t hits = 0;
        for (const auto& node : g.nodes) {
            bool highest = true;
            for (size_t i = 0; i < rank && highest; ++i)
                highest = node.eps[i] == ExtInt(0) && !crystal.e(i, node.elem).has_value();
            if (highest) {
                hits++;
                if (!(node.elem == g.nodes[g.seed].elem)) item.pass = false;
            }
        }
        item.exercised = hits;
        if (hits != 1) item.pass = false;
        if (!item.pass) item.detail = std::to_string(hits) + " highest elements found";
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"string-length", true, 0, ""};
        for (const auto& node : g.nodes)
            for (size_t i : datum.real_indices()) {
                item.exercised++;
                long long l = string_length(crystal, i, node.elem, node.wt.height());
                if (ExtInt(l) != node.eps[i]) {
                    item.pass = false;
                    item.detail = "eps_" + std::to_string(i + 1) + "(" + node.elem.key() +
                                  ") = " + node.eps[i].str() + " but string length " +
                                  std::to_string(l);
                }
            }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"eps-condition", true, 0, ""};
        Weight lambda(crystal.lambda_pairings(),
                      std::vector<long long>(rank, 0));
        for (const auto& node : g.nodes)
            for (size_t i = 0; i < rank; ++i) {
                long long l = string_length(crystal, i, node.elem, node.wt.height());
                std::vector<long long> alpha = node.wt.alpha();
                alpha[i] -= l;
                if (alpha[i] < 0) {
                    item.pass = false;
                    item.detail = "string longer than the root part at " + node.elem.key();
                    continue;
                }
                item.exercised++;
                if (!check_eps_condition(datum, crystal.lambda_pairings(), alpha, i, l)) {
                    item.pass = false;
                    item.detail = "weight inequality fails at " + node.elem.key() + " i=" +
                                  std::to_string(i + 1) + " l=" + std::to_string(l);
                }
            }
        push(std::move(item));
    }

    {
        VerifyReport::Item item{"window-invariance", true, 0, ""};
        HighestWeightCrystal wide1(crystal.datum_ptr(), crystal.lambda_pairings(),
                                   crystal.infinity().iota(), crystal.infinity().margin() + 1);
        HighestWeightCrystal wide2(crystal.datum_ptr(), crystal.lambda_pairings(),
                                   crystal.infinity().iota(), crystal.infinity().margin() + 2);
        for (const auto& node : g.nodes)
            for (size_t i = 0; i < rank; ++i)
                for (const Crystal* wide : {static_cast<const Crystal*>(&wide1),
                                            static_cast<const Crystal*>(&wide2)}) {
                    item.exercised++;
                    bool ok = wide->eps(i, node.elem) == node.eps[i] &&
                              wide->phi(i, node.elem) == node.phi[i];
                    auto f0 = crystal.f(i, node.elem), f1 = wide->f(i, node.elem);
                    auto e0 = crystal.e(i, node.elem), e1 = wide->e(i, node.elem);
                    ok = ok && f0.has_value() == f1.has_value() &&
                         (!f0 || *f0 == *f1) && e0.has_value() == e1.has_value() &&
                         (!e0 || *e0 == *e1);
                    if (!ok) {
                        item.pass = false;
                        item.detail = "window extension changed results at " + node.elem.key();
                    }
                }
        push(std::move(item));
    }

    return report;
}

} // namespace gkm

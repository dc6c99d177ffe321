#include "gkm/checks.hpp"

#include <set>
#include <sstream>

namespace gkm {

namespace {

bool weight_shift_ok(const Weight& from, const Weight& to, size_t i, long long dir) {
    // dir = +1 for e (wt + alpha_i), -1 for f (wt - alpha_i)
    if (from.base() != to.base()) return false;
    for (size_t j = 0; j < from.rank(); ++j) {
        long long expect = from.alpha()[j] - (j == i ? dir : 0);
        if (to.alpha()[j] != expect) return false;
    }
    return true;
}

} // namespace

std::string AxiomReport::summary() const {
    std::ostringstream os;
    os << checks << " checks, " << violations.size() << " violations, "
       << exterior_partners << " exterior partners";
    return os.str();
}

AxiomReport check_axioms(const Crystal& crystal, std::span<const Element> fragment) {
    AxiomReport report;
    std::set<std::string> keys;
    for (const Element& b : fragment) keys.insert(b.key());

    auto violate = [&](const char* cond, const Element& b, size_t i, std::string detail) {
        report.violations.push_back({cond, b.key(), i, std::move(detail)});
    };

    for (const Element& b : fragment) {
        Weight w = crystal.wt(b);
        for (size_t i = 0; i < crystal.rank(); ++i) {
            const bool real = crystal.datum().is_real(i);
            const long long aii = crystal.datum().matrix()[i][i];
            ExtInt ep = crystal.eps(i, b);
            ExtInt ph = crystal.phi(i, b);
            auto up = crystal.e(i, b);
            auto down = crystal.f(i, b);
            report.checks++;

            // (iii)
            if (ph != ep + ExtInt(pairing(crystal.datum(), w, i)))
                violate("(iii)", b, i,
                        "phi = " + ph.str() + " but eps + <h_i, wt> = " +
                            (ep + ExtInt(pairing(crystal.datum(), w, i))).str());

            // (vii)
            if (ph.is_neg_inf() && (up || down))
                violate("(vii)", b, i, "phi = -inf but an operator is nonzero");

            if (up) {
                if (!keys.count(up->key())) report.exterior_partners++;
                // (i)
                if (!weight_shift_ok(w, crystal.wt(*up), i, +1))
                    violate("(i)", b, i, "wt(e b) != wt(b) + alpha_i");
                // (v)
                ExtInt ep2 = crystal.eps(i, *up), ph2 = crystal.phi(i, *up);
                if (real) {
                    if (ep2 != ep - 1 || ph2 != ph + ExtInt(1))
                        violate("(v)(a)", b, i, "eps/phi increments wrong on e");
                } else {
                    if (ep2 != ep || ph2 != ph + ExtInt(aii))
                        violate("(v)(b)", b, i, "eps/phi increments wrong on e");
                }
                // (iv): e b = b' must give f b' = b
                auto back = crystal.f(i, *up);
                if (!back || !(*back == b))
                    violate("(iv)", b, i, "f(e b) != b");
            }
            if (down) {
                if (!keys.count(down->key())) report.exterior_partners++;
                // (ii)
                if (!weight_shift_ok(w, crystal.wt(*down), i, -1))
                    violate("(ii)", b, i, "wt(f b) != wt(b) - alpha_i");
                // (vi)
                ExtInt ep2 = crystal.eps(i, *down), ph2 = crystal.phi(i, *down);
                if (real) {
                    if (ep2 != ep + ExtInt(1) || ph2 != ph - 1)
                        violate("(vi)(a)", b, i, "eps/phi increments wrong on f");
                } else {
                    if (ep2 != ep || ph2 != ph - aii)
                        violate("(vi)(b)", b, i, "eps/phi increments wrong on f");
                }
                // (iv)
                auto back = crystal.e(i, *down);
                if (!back || !(*back == b))
                    violate("(iv)", b, i, "e(f b) != b");
            }
        }
    }
    return report;
}

std::string MorphismReport::summary() const {
    std::ostringstream os;
    os << (morphism ? "morphism" : "not a morphism") << ", "
       << (strict ? "strict" : "not strict") << ", "
       << (embedding ? "embedding" : "not injective") << ", " << violations.size()
       << " violations";
    return os.str();
}

MorphismReport check_strict_morphism(const std::function<Element(const Element&)>& map,
                                     std::span<const Element> fragment,
                                     const Crystal& source, const Crystal& target) {
    MorphismReport report;
    auto violate = [&](const char* cond, const Element& b, size_t i, std::string detail) {
        report.violations.push_back({cond, b.key(), i, std::move(detail)});
    };

    std::set<std::string> images;
    for (const Element& b : fragment) {
        Element psi = map(b);
        if (!images.insert(psi.key()).second) report.embedding = false;

        if (!(source.wt(b) == target.wt(psi))) {
            report.morphism = false;
            violate("wt", b, 0, "wt not preserved");
        }
        for (size_t i = 0; i < source.rank(); ++i) {
            if (source.eps(i, b) != target.eps(i, psi) ||
                source.phi(i, b) != target.phi(i, psi)) {
                report.morphism = false;
                violate("stats", b, i, "eps/phi not preserved");
            }

            auto fb = source.f(i, b);
            auto f_psi = target.f(i, psi);
            if (fb) {
                if (!f_psi || !(map(*fb) == *f_psi)) {
                    report.morphism = false;
                    report.strict = false;
                    violate("f", b, i, "psi(f b) != f psi(b)");
                }
            } else if (f_psi) {
                // psi(0) = 0 convention: f b = 0 must map to f psi(b) = 0
                report.strict = false;
                violate("f0", b, i, "f b = 0 but f psi(b) != 0");
            }

            auto eb = source.e(i, b);
            auto e_psi = target.e(i, psi);
            if (eb) {
                if (!e_psi || !(map(*eb) == *e_psi)) {
                    report.strict = false;
                    violate("e", b, i, "psi(e b) != e psi(b)");
                }
            } else if (e_psi) {
                report.strict = false;
                violate("e0", b, i, "e b = 0 but e psi(b) != 0");
            }
        }
    }
    return report;
}

} // namespace gkm

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; everything here is
// exact arithmetic, so "tolerance" means equality and the stated runtime
// bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gkm/json_io.hpp"
#include "gkm/quiver_geom.hpp"
#include "gkm/verify.hpp"
#include "oracles.hpp"

using namespace gkm;
using testing::a2_datum;
using testing::imaginary_datum;
using testing::mixed_datum;
using testing::sl2_datum;

namespace {

struct Failure {
    std::string message;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw Failure{message};
}

struct DataSet {
    DatumPtr datum;
    std::vector<long long> lambda;
    std::string label;
};

std::vector<DataSet> acceptance_data() {
    return {
        {sl2_datum(), {2}, "[[2]]"},
        {imaginary_datum(0), {1}, "[[0]]"},
        {imaginary_datum(-2), {2}, "[[-2]]"},
        {a2_datum(), {1, 1}, "[[2,-1],[-1,2]]"},
        {mixed_datum(0), {1, 1}, "[[2,-1],[-1,0]]"},
    };
}

std::vector<Element> letter_fragment(const ElementaryCrystal& b, const CartanDatum& datum) {
    std::vector<Element> frag;
    for (long long n = 0; n >= -3; --n) frag.push_back(b.letter(n));
    if (datum.is_real(b.index()))
        for (long long n = 1; n <= 2; ++n) frag.push_back(b.letter(n));
    return frag;
}

// ---------------------------------------------------------------- criterion 1

std::string criterion_axioms() {
    auto start = std::chrono::steady_clock::now();
    size_t fragments = 0;
    for (const auto& ds : acceptance_data()) {
        const auto& datum = ds.datum;
        const size_t rank = datum->rank();

        std::vector<std::shared_ptr<const ElementaryCrystal>> letters;
        for (size_t i = 0; i < rank; ++i)
            letters.push_back(std::make_shared<ElementaryCrystal>(datum, i));
        auto t = std::make_shared<TLambdaCrystal>(datum, ds.lambda);
        auto c = std::make_shared<CCrystal>(datum);

        auto expect_pass = [&](const Crystal& cr, std::span<const Element> frag,
                               const std::string& what) {
            auto report = check_axioms(cr, frag);
            require(report.passed(), ds.label + " " + what + ": " + report.summary());
            fragments++;
        };

        std::vector<Element> single{t->element()};
        expect_pass(*t, single, "t_lambda");
        single = {c->element()};
        expect_pass(*c, single, "c");

        for (size_t i = 0; i < rank; ++i)
            expect_pass(*letters[i], letter_fragment(*letters[i], *datum),
                        "b_" + std::to_string(i + 1));

        // pairwise tensors: letters x letters, letters x c, t x c
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j) {
                TensorCrystal tc({letters[i], letters[j]});
                std::vector<Element> frag;
                for (const Element& a : letter_fragment(*letters[i], *datum))
                    for (const Element& b : letter_fragment(*letters[j], *datum))
                        frag.push_back(tc.make({a, b}));
                expect_pass(tc, frag,
                            "b_" + std::to_string(i + 1) + "*b_" + std::to_string(j + 1));
            }
        for (size_t i = 0; i < rank; ++i) {
            TensorCrystal tc({letters[i], c});
            std::vector<Element> frag;
            for (const Element& a : letter_fragment(*letters[i], *datum))
                frag.push_back(tc.make({a, c->element()}));
            expect_pass(tc, frag, "b*c");
        }
        {
            TensorCrystal tc({t, c});
            std::vector<Element> frag{tc.make({t->element(), c->element()})};
            expect_pass(tc, frag, "t*c");
        }

        // triple tensors: b x t x c and b x b x b
        for (size_t i = 0; i < rank; ++i) {
            TensorCrystal tc({letters[i], t, c});
            std::vector<Element> frag;
            for (const Element& a : letter_fragment(*letters[i], *datum))
                frag.push_back(tc.make({a, t->element(), c->element()}));
            expect_pass(tc, frag, "b*t*c");
        }
        {
            size_t j = rank > 1 ? 1 : 0;
            TensorCrystal tc({letters[0], letters[j], letters[0]});
            std::vector<Element> frag;
            for (long long m = 0; m >= -2; --m)
                for (long long n = 0; n >= -2; --n)
                    for (long long k = 0; k >= -2; --k)
                        frag.push_back(tc.make({letters[0]->letter(m), letters[j]->letter(n),
                                                letters[0]->letter(k)}));
            expect_pass(tc, frag, "b*b*b");
        }

        // generated component, every materialized node
        HighestWeightCrystal hw(datum, ds.lambda);
        auto graph = generate_component(hw, hw.seed(), 4);
        std::vector<Element> nodes;
        for (const auto& node : graph.nodes) nodes.push_back(node.elem);
        expect_pass(hw, nodes, "component");
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    require(elapsed < 10000, "axiom suite took " + std::to_string(elapsed) + " ms");
    std::ostringstream os;
    os << fragments << " fragments, " << elapsed << " ms";
    return os.str();
}

// ---------------------------------------------------------------- criterion 2

std::string criterion_closed_forms() {
    std::mt19937 rng(2024);
    size_t trials = 0, neg_inf_cases = 0;
    for (long long aii : {2LL, 0LL, -2LL, -4LL}) {
        auto datum = imaginary_datum(aii);
        auto mock = std::make_shared<testing::MockStatsCrystal>(
            testing::MockStatsCrystal::randomized(datum, 1000, rng));
        auto c = std::make_shared<CCrystal>(datum);
        TensorCrystal tc({mock, c});
        const bool real = datum->is_real(0);
        for (long long id = 1; id + 1 < 1000; ++id, ++trials) {
            Element b = mock->element(id);
            Element x = tc.make({b, c->element()});
            long long wt_i = mock->stats(b).wt_pairings[0];
            ExtInt eps_b = mock->eps(0, b);
            ExtInt phi_b = mock->phi(0, b);
            if (eps_b.is_neg_inf()) neg_inf_cases++;

            require(tc.wt(x) == mock->wt(b), "wt(b*c) != wt(b)");
            require(tc.eps(0, x) == max(eps_b, ExtInt(-wt_i)), "eps closed form");
            require(tc.phi(0, x) == max(phi_b, ExtInt(0)), "phi closed form");

            auto fx = tc.f(0, x);
            auto fb = mock->f(0, b);
            if (phi_b > ExtInt(0) && fb)
                require(fx && *fx == tc.make({*fb, c->element()}), "f closed form");
            else
                require(!fx.has_value(), "f must vanish");

            auto ex = tc.e(0, x);
            auto eb = mock->e(0, b);
            bool gate = real ? phi_b >= ExtInt(0) : phi_b + ExtInt(aii) > ExtInt(0);
            if (gate && eb)
                require(ex && *ex == tc.make({*eb, c->element()}), "e closed form");
            else
                require(!ex.has_value(), "e must vanish");
        }
    }
    require(neg_inf_cases > 50, "the corpus must include -inf statistics");
    return std::to_string(trials) + " trials, " +
                  std::to_string(neg_inf_cases) + " with -inf";
}

// ---------------------------------------------------------------- criterion 3

std::string criterion_sl2() {
    auto datum = sl2_datum();
    for (long long n = 0; n <= 5; ++n) {
        HighestWeightCrystal hw(datum, {n});
        auto g = generate_component(hw, hw.seed(), 10);
        testing::ChainCrystal chain(datum, n);
        auto oracle = generate_component(chain, chain.element(0), 10);
        require(g.nodes.size() == static_cast<size_t>(n) + 1,
                "n=" + std::to_string(n) + ": wrong node count");
        require(g.edges.size() == static_cast<size_t>(n), "wrong edge count");
        require(canonical_signature(g) == canonical_signature(oracle),
                "n=" + std::to_string(n) + ": component differs from the chain oracle");
        for (const auto& [wt, count] : multiplicities(hw, 10))
            require(count == 1, "weight multiplicity != 1");
    }
    return "n = 0..5 against the chain oracle";
}

// ---------------------------------------------------------------- criterion 4

std::string criterion_a2() {
    auto datum = a2_datum();
    HighestWeightCrystal hw(datum, {1, 0});
    auto g = generate_component(hw, hw.seed(), 5);
    testing::A2VectorCrystal oracle(datum);
    auto og = generate_component(oracle, oracle.element(1), 5);
    require(g.nodes.size() == 3, "expected 3 nodes");
    require(canonical_signature(g) == canonical_signature(og),
            "component differs from the vector representation oracle");
    auto table = multiplicities(hw, 5);
    require(table.size() == 3, "expected 3 distinct weights");
    for (const auto& [wt, count] : table) require(count == 1, "multiplicity != 1");
    return "3 nodes, multiplicities all 1";
}

// ---------------------------------------------------------------- criterion 5

std::string criterion_rank_one_imaginary() {
    const long long depth = 6;
    for (long long aii : {0LL, -2LL}) {
        auto datum = imaginary_datum(aii);
        {
            HighestWeightCrystal hw(datum, {0});
            auto g = generate_component(hw, hw.seed(), depth);
            require(g.nodes.size() == 1 && g.edges.empty(),
                    "zero pairing must give a singleton");
        }
        HighestWeightCrystal hw(datum, {1});
        for (long long d = 0; d <= depth; ++d) {
            auto g = generate_component(hw, hw.seed(), d);
            require(g.nodes.size() == static_cast<size_t>(d) + 1,
                    "chain must have one node per height");
            require(g.edges.size() == static_cast<size_t>(d), "chain edge count");
        }
        Element cur = hw.seed();
        for (int k = 0; k < depth; ++k) {
            Element next = *hw.f(0, cur);
            require(*hw.e(0, next) == cur, "chain edges must be two-sided");
            cur = next;
        }
    }

    // the imaginary middle case must fire somewhere in the tensor corpus
    size_t middle_hits = 0;
    for (long long aii : {-2LL, -4LL}) {
        auto datum = imaginary_datum(aii);
        auto b = std::make_shared<ElementaryCrystal>(datum, 0);
        TensorCrystal tc({b, b});
        for (long long m = 0; m >= -3; --m)
            for (long long n = 0; n >= -3; --n) {
                Element x = tc.make({b->letter(m), b->letter(n)});
                ExtInt ph = b->phi(0, b->letter(m));
                ExtInt er = b->eps(0, b->letter(n));
                bool middle = er < ph && ph <= er - aii;
                if (middle) {
                    require(!tc.e(0, x).has_value(), "middle case must vanish");
                    middle_hits++;
                }
            }
    }
    require(middle_hits >= 1, "imaginary middle case never exercised");
    return "chains exact, middle case hit " + std::to_string(middle_hits) + " times";
}

// ---------------------------------------------------------------- criterion 6

std::string criterion_structure_laws() {
    size_t graphs = 0;
    for (const auto& ds : acceptance_data()) {
        for (long long extra = 0; extra <= 1; ++extra) {
            std::vector<long long> lambda = ds.lambda;
            lambda[0] += extra;
            HighestWeightCrystal hw(ds.datum, lambda);
            auto g = generate_component(hw, hw.seed(), 4);
            auto report = verify_component(hw, g);
            for (const char* law : {"phi-nonneg", "f-vanishing", "imag-eps", "imag-raising",
                                    "connected", "axioms", "mutual-inverse",
                                    "highest-unique", "string-length"}) {
                const auto* item = report.item(law);
                require(item && item->pass,
                        ds.label + ": " + law + " failed: " + (item ? item->detail : ""));
            }
            graphs++;
        }
    }
    return std::to_string(graphs) + " graphs, zero violations";
}

// ---------------------------------------------------------------- criterion 7

std::string criterion_realization_robustness() {
    size_t checks = 0;
    for (const auto& ds : acceptance_data()) {
        // raw window elements first
        InfinityCrystal inf0(ds.datum, {});
        InfinityCrystal inf1(ds.datum, {}, 1);
        InfinityCrystal inf2(ds.datum, {}, 2);
        auto wg = generate_component(inf0, inf0.ground(), 3);
        for (const auto& node : wg.nodes)
            for (size_t i = 0; i < ds.datum->rank(); ++i)
                for (const InfinityCrystal* wide : {&inf1, &inf2}) {
                    require(wide->eps(i, node.elem) == node.eps[i], "window eps changed");
                    require(wide->phi(i, node.elem) == node.phi[i], "window phi changed");
                    require(*wide->f(i, node.elem) == *inf0.f(i, node.elem),
                            "window f changed");
                    auto e0 = inf0.e(i, node.elem), e1 = wide->e(i, node.elem);
                    require(e0.has_value() == e1.has_value() && (!e0 || *e0 == *e1),
                            "window e changed");
                    checks++;
                }

        HighestWeightCrystal base(ds.datum, ds.lambda);
        HighestWeightCrystal wide1(ds.datum, ds.lambda, {}, 1);
        HighestWeightCrystal wide2(ds.datum, ds.lambda, {}, 2);
        auto g = generate_component(base, base.seed(), 4);
        for (const auto& node : g.nodes)
            for (size_t i = 0; i < ds.datum->rank(); ++i)
                for (const HighestWeightCrystal* wide : {&wide1, &wide2}) {
                    require(wide->eps(i, node.elem) == node.eps[i], "eps changed");
                    require(wide->phi(i, node.elem) == node.phi[i], "phi changed");
                    auto f0 = base.f(i, node.elem), f1 = wide->f(i, node.elem);
                    auto e0 = base.e(i, node.elem), e1 = wide->e(i, node.elem);
                    require(f0.has_value() == f1.has_value() && (!f0 || *f0 == *f1),
                            "f changed under window extension");
                    require(e0.has_value() == e1.has_value() && (!e0 || *e0 == *e1),
                            "e changed under window extension");
                    checks++;
                }

        if (ds.datum->rank() == 2) {
            HighestWeightCrystal swapped(ds.datum, ds.lambda, {1, 0});
            auto g2 = generate_component(swapped, swapped.seed(), 4);
            require(canonical_signature(g) == canonical_signature(g2),
                    ds.label + ": components differ between ground sequences");
        }
    }
    return std::to_string(checks) + " operator comparisons";
}

// ---------------------------------------------------------------- criterion 8

QMat M(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) {
        std::vector<Rat> rr;
        for (long v : row) rr.emplace_back(v);
        r.push_back(std::move(rr));
    }
    return QMat::from_rows(r);
}

RepPoint loop_point(QMat lo, QMat hi, QMat t_mat, QMat s_mat) {
    size_t d = lo.rows(), w = t_mat.rows();
    RepPoint p{QuiverPresentation({"1"}, {{"a", 0, 0}}), {d},           {w},
               {std::move(lo)},                          {std::move(hi)}, {std::move(t_mat)},
               {std::move(s_mat)}};
    p.validate();
    return p;
}

QMat random_gl(size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> entry(-2, 2);
    QMat lower = QMat::identity(n), upper = QMat::identity(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            if (r > c) lower.at(r, c) = entry(rng);
            if (r < c) upper.at(r, c) = entry(rng);
        }
    return lower * upper;
}

RepPoint conjugate(const RepPoint& p, const std::vector<QMat>& g) {
    RepPoint q = p;
    std::vector<QMat> inv;
    for (const QMat& gi : g) inv.push_back(gi.inverse());
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        const auto& pr = p.quiver.pairs()[k];
        q.x_pair[k] = g[pr.to] * p.x_pair[k] * inv[pr.from];
        q.x_bar[k] = g[pr.from] * p.x_bar[k] * inv[pr.to];
    }
    for (size_t i = 0; i < p.quiver.num_vertices(); ++i) {
        q.t[i] = p.t[i] * inv[i];
        q.s[i] = g[i] * p.s[i];
    }
    return q;
}

std::string criterion_quiver_checker() {
    auto start = std::chrono::steady_clock::now();

    struct Fixture {
        std::string name;
        RepPoint point;
        bool mu_zero, flag, regular, stable;
        std::vector<size_t> eps;
    };
    std::vector<Fixture> fixtures;

    // 1: zero loopless point, no framing
    {
        RepPoint p{QuiverPresentation({"1"}, {}), {1}, {0}, {}, {}, {QMat(0, 1)}, {QMat(1, 0)}};
        p.validate();
        fixtures.push_back({"zero-loopless", p, true, true, true, false, {1}});
    }
    // 2: zero loopless with framing t = [1]
    {
        RepPoint p{QuiverPresentation({"1"}, {}), {1}, {1}, {}, {}, {M({{1}})}, {QMat(1, 1)}};
        p.validate();
        fixtures.push_back({"zero-framed", p, true, true, true, true, {1}});
    }
    // 3: nilpotent lowering loop against diag(1,2): mu != 0
    fixtures.push_back({"nilpotent-loop",
                        loop_point(M({{0, 1}, {0, 0}}), M({{1, 0}, {0, 2}}), QMat(0, 2),
                                   QMat(2, 0)),
                        false, true, true, false, {2}});
    // 4: x_pair = 0, diag(1,2) preserved, unframed
    fixtures.push_back({"member-unframed",
                        loop_point(QMat(2, 2), M({{1, 0}, {0, 2}}), QMat(0, 2), QMat(2, 0)),
                        true, true, true, false, {2}});
    // 5: the same with framing t = [1 1]: member and stable
    fixtures.push_back({"member-stable",
                        loop_point(QMat(2, 2), M({{1, 0}, {0, 2}}), M({{1, 1}}), QMat(2, 1)),
                        true, true, true, true, {2}});
    // 6: repeated eigenvalues diag(1,1)
    fixtures.push_back({"repeated-spectrum",
                        loop_point(QMat(2, 2), QMat::identity(2), QMat(0, 2), QMat(2, 0)),
                        true, true, false, false, {2}});
    // 7: Jordan block preserved loop
    fixtures.push_back({"jordan-loop",
                        loop_point(QMat(2, 2), M({{1, 1}, {0, 1}}), QMat(0, 2), QMat(2, 0)),
                        true, true, false, false, {2}});
    // 8: invertible strictly-lowering loop: no flag
    fixtures.push_back({"invertible-lowering",
                        loop_point(QMat::identity(2), M({{1, 0}, {0, 2}}), QMat(0, 2),
                                   QMat(2, 0)),
                        true, false, true, false, {2}});
    // 9: two loop pairs, commuting diagonal preserved maps
    {
        RepPoint p{QuiverPresentation({"1"}, {{"a", 0, 0}, {"b", 0, 0}}),
                   {2},
                   {0},
                   {QMat(2, 2), QMat(2, 2)},
                   {M({{1, 0}, {0, 2}}), M({{3, 0}, {0, 5}})},
                   {QMat(0, 2)},
                   {QMat(2, 0)}};
        p.validate();
        fixtures.push_back({"twin-loops", p, true, true, true, false, {2}});
    }
    // 10: loop vertex fed by an arrow hitting an eigenline: eps = 1
    {
        RepPoint p{QuiverPresentation({"1", "2"}, {{"a", 0, 1}, {"l", 1, 1}}),
                   {1, 2},
                   {0, 0},
                   {M({{1}, {0}}), QMat(2, 2)},
                   {QMat(1, 2), M({{1, 0}, {0, 2}})},
                   {QMat(0, 1), QMat(0, 2)},
                   {QMat(1, 0), QMat(2, 0)}};
        p.validate();
        fixtures.push_back({"fed-eigenline", p, true, true, true, false, {1, 1}});
    }
    // 11: same but the image generates everything under the loop: eps = 0
    {
        RepPoint p{QuiverPresentation({"1", "2"}, {{"a", 0, 1}, {"l", 1, 1}}),
                   {1, 2},
                   {0, 0},
                   {M({{1}, {1}}), QMat(2, 2)},
                   {QMat(1, 2), M({{1, 0}, {0, 2}})},
                   {QMat(0, 1), QMat(0, 2)},
                   {QMat(1, 0), QMat(2, 0)}};
        p.validate();
        fixtures.push_back({"fed-cyclic", p, true, true, true, false, {1, 0}});
    }
    // 12: loopless two-vertex zero point with framing on one side
    {
        RepPoint p{QuiverPresentation({"1", "2"}, {{"a", 0, 1}}),
                   {1, 1},
                   {1, 1},
                   {QMat(1, 1)},
                   {QMat(1, 1)},
                   {M({{1}}), M({{1}})},
                   {QMat(1, 1), QMat(1, 1)}};
        p.validate();
        fixtures.push_back({"a2-framed", p, true, true, true, true, {1, 1}});
    }
    // 13: all dimensions zero: nothing can violate stability
    {
        RepPoint p{QuiverPresentation({"1"}, {}), {0}, {0}, {}, {}, {QMat(0, 0)},
                   {QMat(0, 0)}};
        p.validate();
        fixtures.push_back({"empty-dims", p, true, true, true, true, {0}});
    }
    // 14: scalar maps on a loop pair commute, but the lowering one is
    // invertible and the framing is absent
    fixtures.push_back({"scalar-loop", loop_point(M({{2}}), M({{3}}), QMat(0, 1), QMat(1, 0)),
                        true, false, true, false, {1}});

    require(fixtures.size() >= 10, "need at least ten fixtures");

    for (const auto& fx : fixtures) {
        auto mu = moment_map(fx.point);
        bool mu_zero = true;
        for (const auto& m : mu) mu_zero = mu_zero && m.is_zero();
        require(mu_zero == fx.mu_zero, fx.name + ": moment map");
        require(check_flag_condition(fx.point).exists == fx.flag, fx.name + ": flag");
        bool regular = true;
        for (size_t k = 0; k < fx.point.quiver.pairs().size(); ++k)
            if (fx.point.quiver.pairs()[k].is_loop())
                regular = regular && check_regular_semisimple(fx.point.x_bar[k]);
        require(regular == fx.regular, fx.name + ": regular semisimple");
        require(check_stability(fx.point).stable == fx.stable, fx.name + ": stability");
        for (size_t i = 0; i < fx.point.quiver.num_vertices(); ++i)
            require(eps_omega(fx.point, i) == fx.eps[i], fx.name + ": eps_omega");
    }

    // GL invariance: 100 random conjugations per fixture
    std::mt19937 rng(88);
    for (const auto& fx : fixtures) {
        std::vector<size_t> base_eps;
        for (size_t i = 0; i < fx.point.quiver.num_vertices(); ++i)
            base_eps.push_back(eps_omega(fx.point, i));
        bool base_stable = check_stability(fx.point).stable;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<QMat> g;
            for (size_t i = 0; i < fx.point.quiver.num_vertices(); ++i)
                g.push_back(random_gl(fx.point.dim_v[i], rng));
            RepPoint q = conjugate(fx.point, g);
            for (size_t i = 0; i < q.quiver.num_vertices(); ++i)
                require(eps_omega(q, i) == base_eps[i], fx.name + ": eps not invariant");
            require(check_stability(q).stable == base_stable,
                    fx.name + ": stability not invariant");
        }
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    require(elapsed < 5000, "quiver checker took " + std::to_string(elapsed) + " ms");
    return std::to_string(fixtures.size()) + " fixtures, 100 conjugations each, " +
                  std::to_string(elapsed) + " ms";
}

// ---------------------------------------------------------------- criterion 9

std::string criterion_eps_condition() {
    auto mixed = mixed_datum(0);
    require(!check_eps_condition(*mixed, {1, 0}, {0, 0}, 0, 2),
            "real pairing 1 with l = 2 must fail");
    require(check_eps_condition(*mixed, {0, 0}, {3, 3}, 1, 0),
            "imaginary l = 0 must hold vacuously");
    require(!check_eps_condition(*mixed, {0, 0}, {0, 0}, 1, 1),
            "imaginary l = 1 with pairing 0 must fail");

    // consistency with the generated rank-one graphs: every realized string
    // satisfies the inequality
    struct Case {
        DatumPtr datum;
        long long lambda;
    };
    size_t nodes_checked = 0;
    for (const Case& c : {Case{sl2_datum(), 3}, Case{imaginary_datum(0), 1},
                          Case{imaginary_datum(-2), 1}, Case{imaginary_datum(-2), 2}}) {
        HighestWeightCrystal hw(c.datum, {c.lambda});
        auto g = generate_component(hw, hw.seed(), 6);
        for (const auto& node : g.nodes) {
            long long l = 0;
            Element cur = node.elem;
            while (auto up = hw.e(0, cur)) {
                cur = *up;
                ++l;
            }
            std::vector<long long> alpha = node.wt.alpha();
            alpha[0] -= l;
            require(alpha[0] >= 0, "string exceeds the root part");
            require(check_eps_condition(*c.datum, {c.lambda}, alpha, 0, l),
                    "realized string violates the weight inequality");
            nodes_checked++;
        }
    }
    return "truth table and " + std::to_string(nodes_checked) + " realized strings";
}

} // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<std::string()> run;
    };
    std::vector<Criterion> criteria{
        {"1 axiom suite", criterion_axioms},
        {"2 tensor closed forms", criterion_closed_forms},
        {"3 sl2 oracle", criterion_sl2},
        {"4 A2 oracle", criterion_a2},
        {"5 rank-one imaginary", criterion_rank_one_imaginary},
        {"6 structure laws", criterion_structure_laws},
        {"7 realization robustness", criterion_realization_robustness},
        {"8 quiver checker", criterion_quiver_checker},
        {"9 eps condition", criterion_eps_condition},
    };

    size_t failures = 0;
    for (const auto& criterion : criteria) {
        try {
            std::string detail = criterion.run();
            std::cout << "[PASS] criterion " << criterion.name << " (" << detail << ")\n";
        } catch (const Failure& f) {
            std::cout << "[FAIL] criterion " << criterion.name << ": " << f.message << "\n";
            failures++;
        } catch (const std::exception& ex) {
            std::cout << "[FAIL] criterion " << criterion.name << ": " << ex.what() << "\n";
            failures++;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}

#include "gkm/quiver_geom.hpp"

#include <algorithm>

namespace gkm {

void RepPoint::validate() const {
    const size_t n = quiver.num_vertices();
    if (dim_v.size() != n || dim_w.size() != n || t.size() != n || s.size() != n ||
        x_pair.size() != quiver.pairs().size() || x_bar.size() != quiver.pairs().size())
        throw Error(Errc::ShapeMismatch, "representation point has wrong container sizes");
    for (size_t k = 0; k < quiver.pairs().size(); ++k) {
        const auto& pr = quiver.pairs()[k];
        if (x_pair[k].rows() != dim_v[pr.to] || x_pair[k].cols() != dim_v[pr.from])
            throw Error(Errc::ShapeMismatch, "x[" + pr.id + "] must be " +
                                                 std::to_string(dim_v[pr.to]) + "x" +
                                                 std::to_string(dim_v[pr.from]));
        if (x_bar[k].rows() != dim_v[pr.from] || x_bar[k].cols() != dim_v[pr.to])
            throw Error(Errc::ShapeMismatch, "x[" + pr.id + "_bar] must be " +
                                                 std::to_string(dim_v[pr.from]) + "x" +
                                                 std::to_string(dim_v[pr.to]));
    }
    for (size_t i = 0; i < n; ++i) {
        if (t[i].rows() != dim_w[i] || t[i].cols() != dim_v[i])
            throw Error(Errc::ShapeMismatch, "t[" + quiver.vertices()[i] + "] must be " +
                                                 std::to_string(dim_w[i]) + "x" +
                                                 std::to_string(dim_v[i]));
        if (s[i].rows() != dim_v[i] || s[i].cols() != dim_w[i])
            throw Error(Errc::ShapeMismatch, "s[" + quiver.vertices()[i] + "] must be " +
                                                 std::to_string(dim_v[i]) + "x" +
                                                 std::to_string(dim_w[i]));
    }
}

std::vector<QMat> moment_map(const RepPoint& p) {
    p.validate();
    const size_t n = p.quiver.num_vertices();
    std::vector<QMat> mu;
    mu.reserve(n);
    for (size_t i = 0; i < n; ++i) mu.push_back(QMat(p.dim_v[i], p.dim_v[i]));
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        const auto& pr = p.quiver.pairs()[k];
        // h = pair (out = from, eps = +1): contributes x_bar x_pair at from
        mu[pr.from] = mu[pr.from] + p.x_bar[k] * p.x_pair[k];
        // h-bar (out = to, eps = -1): contributes -x_pair x_bar at to
        mu[pr.to] = mu[pr.to] - p.x_pair[k] * p.x_bar[k];
    }
    for (size_t i = 0; i < n; ++i) mu[i] = mu[i] + p.s[i] * p.t[i];
    return mu;
}

Rat symplectic_form(const RepPoint& p, const RepPoint& q) {
    p.validate();
    q.validate();
    if (p.dim_v != q.dim_v || p.dim_w != q.dim_w ||
        p.quiver.pairs().size() != q.quiver.pairs().size())
        throw Error(Errc::ShapeMismatch, "symplectic form needs identical shapes");
    Rat total = 0;
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        total += (p.x_bar[k] * q.x_pair[k]).trace();
        total -= (p.x_pair[k] * q.x_bar[k]).trace();
    }
    for (size_t i = 0; i < p.quiver.num_vertices(); ++i) {
        total += (p.s[i] * q.t[i]).trace();
        total -= (q.s[i] * p.t[i]).trace();
    }
    return total;
}

bool check_regular_semisimple(const QMat& m) {
    if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "matrix must be square");
    return poly_squarefree(m.charpoly());
}

namespace {

/// Per-vertex working state of the flag search: maps in current coordinates
/// plus the embedding of the current quotient into the original space.
struct FlagState {
    std::vector<size_t> dims;
    // strictly lowering maps out of each vertex: (source, target, matrix)
    struct Map {
        size_t from, to;
        QMat m;
    };
    std::vector<Map> lowering;
    // reversed loop maps per vertex
    std::vector<std::vector<QMat>> preserved;
    // columns embed current V_i into the original V_i
    std::vector<QMat> embed;
};

/// A section of the quotient by a line: returns (projector, section columns)
/// with projector * section = identity on the complement of span(v).
std::pair<QMat, QMat> quotient_by_line(const std::vector<Rat>& v, size_t dim) {
    QMat basis(dim, dim);
    for (size_t r = 0; r < dim; ++r) basis.at(r, 0) = v[r];
    size_t lead = 0;
    while (lead < dim && v[lead] == 0) ++lead;
    size_t col = 1;
    for (size_t r = 0; r < dim; ++r) {
        if (r == lead) continue;
        basis.at(r, col++) = 1;
    }
    QMat inv = basis.inverse();
    QMat projector(dim - 1, dim);
    for (size_t r = 0; r + 1 < dim; ++r)
        for (size_t c = 0; c < dim; ++c) projector.at(r, c) = inv.at(r + 1, c);
    QMat section(dim, dim - 1);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c + 1 < dim; ++c) section.at(r, c) = basis.at(r, c + 1);
    return {projector, section};
}

bool flag_search(const FlagState& st, std::vector<std::pair<size_t, std::vector<Rat>>>& out) {
    size_t total = 0;
    for (size_t d : st.dims) total += d;
    if (total == 0) return true;

    for (size_t i = 0; i < st.dims.size(); ++i) {
        if (st.dims[i] == 0) continue;
        // common kernel of every strictly lowering map out of i
        QMat kern = QMat::identity(st.dims[i]);
        for (const auto& mp : st.lowering) {
            if (mp.from != i) continue;
            kern = subspace_intersection(kern, mp.m.kernel_basis());
            if (kern.cols() == 0) break;
        }
        if (kern.cols() == 0) continue;

        // joint eigenspaces of the preserved loop maps inside the kernel
        std::vector<QMat> candidates{kern};
        for (const QMat& loop : st.preserved[i]) {
            std::vector<QMat> refined;
            auto roots = rational_roots(loop.charpoly());
            if (roots.remaining_degree != 0)
                throw Error(Errc::IrrationalSpectrum,
                            "reversed loop map has an irrational eigenvalue");
            for (const QMat& space : candidates)
                for (const auto& [value, mult] : roots.roots) {
                    QMat shifted = loop - QMat::identity(st.dims[i]).scaled(value);
                    QMat eig = subspace_intersection(space, shifted.kernel_basis());
                    if (eig.cols() > 0) refined.push_back(eig);
                }
            candidates = std::move(refined);
        }

        for (const QMat& space : candidates) {
            for (size_t c = 0; c < space.cols(); ++c) {
                std::vector<Rat> v(st.dims[i]);
                for (size_t r = 0; r < st.dims[i]; ++r) v[r] = space.at(r, c);
                auto [projector, section] = quotient_by_line(v, st.dims[i]);

                FlagState next = st;
                next.dims[i] -= 1;
                for (auto& mp : next.lowering) {
                    if (mp.from == i) mp.m = mp.m * section;
                    if (mp.to == i) mp.m = projector * mp.m;
                }
                for (auto& loop : next.preserved[i]) loop = projector * loop * section;
                next.embed[i] = next.embed[i] * section;

                QMat line = st.embed[i] * QMat::from_rows([&] {
                    std::vector<std::vector<Rat>> col;
                    for (const Rat& val : v) col.push_back({val});
                    return col;
                }());
                std::vector<Rat> original(line.rows());
                for (size_t r = 0; r < line.rows(); ++r) original[r] = line.at(r, 0);

                out.emplace_back(i, std::move(original));
                if (flag_search(next, out)) return true;
                out.pop_back();
            }
        }
    }
    return false;
}

} // namespace

FlagResult check_flag_condition(const RepPoint& p) {
    p.validate();
    const size_t n = p.quiver.num_vertices();

    FlagState st;
    st.dims = p.dim_v;
    st.preserved.resize(n);
    for (size_t i = 0; i < n; ++i) st.embed.push_back(QMat::identity(p.dim_v[i]));
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        const auto& pr = p.quiver.pairs()[k];
        if (pr.is_loop()) {
            // the listed loop lowers strictly, its reversal preserves
            st.lowering.push_back({pr.from, pr.to, p.x_pair[k]});
            st.preserved[pr.from].push_back(p.x_bar[k]);
        } else {
            st.lowering.push_back({pr.from, pr.to, p.x_pair[k]});
            st.lowering.push_back({pr.to, pr.from, p.x_bar[k]});
        }
    }

    // precondition: reversed loop spectra must be rational
    for (size_t i = 0; i < n; ++i)
        for (const QMat& loop : st.preserved[i])
            if (rational_roots(loop.charpoly()).remaining_degree != 0)
                throw Error(Errc::IrrationalSpectrum,
                            "reversed loop map has an irrational eigenvalue");

    FlagResult result;
    result.exists = flag_search(st, result.flag);
    if (!result.exists) result.flag.clear();
    return result;
}

MembershipReport check_membership_N(const RepPoint& p) {
    MembershipReport report;
    auto mu = moment_map(p);
    report.mu_zero = std::all_of(mu.begin(), mu.end(), [](const QMat& m) { return m.is_zero(); });
    report.regular_semisimple = true;
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k)
        if (p.quiver.pairs()[k].is_loop() && !check_regular_semisimple(p.x_bar[k]))
            report.regular_semisimple = false;
    report.flag = check_flag_condition(p).exists;
    return report;
}

StabilityResult check_stability(const RepPoint& p) {
    p.validate();
    const size_t n = p.quiver.num_vertices();
    std::vector<QMat> u;
    u.reserve(n);
    for (size_t i = 0; i < n; ++i) u.push_back(p.t[i].kernel_basis());

    // arrows out of each vertex: (target, matrix)
    std::vector<std::vector<std::pair<size_t, const QMat*>>> out(n);
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        const auto& pr = p.quiver.pairs()[k];
        out[pr.from].push_back({pr.to, &p.x_pair[k]});
        out[pr.to].push_back({pr.from, &p.x_bar[k]});
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<QMat> ann;
        ann.reserve(n);
        for (size_t j = 0; j < n; ++j) ann.push_back(left_annihilator(u[j]));
        for (size_t i = 0; i < n; ++i) {
            if (u[i].cols() == 0) continue;
            QMat constraints(0, u[i].cols());
            for (const auto& [tgt, m] : out[i]) {
                if (ann[tgt].rows() == 0) continue;
                constraints = constraints.vcat(ann[tgt] * (*m) * u[i]);
            }
            if (constraints.rows() == 0) continue;
            QMat coords = constraints.kernel_basis();
            if (coords.cols() < u[i].cols()) {
                u[i] = (u[i] * coords).column_space_basis();
                changed = true;
            }
        }
    }

    StabilityResult result;
    result.stable = std::all_of(u.begin(), u.end(), [](const QMat& b) { return b.cols() == 0; });
    if (!result.stable) result.witness = std::move(u);
    return result;
}

size_t eps_omega(const RepPoint& p, size_t i) {
    p.validate();
    if (i >= p.quiver.num_vertices())
        throw Error(Errc::UnknownIndex, "vertex index out of range");

    QMat images(p.dim_v[i], 0);
    std::vector<const QMat*> loops;
    for (size_t k = 0; k < p.quiver.pairs().size(); ++k) {
        const auto& pr = p.quiver.pairs()[k];
        if (pr.is_loop()) {
            if (pr.from == i) {
                loops.push_back(&p.x_pair[k]);
                loops.push_back(&p.x_bar[k]);
            }
            continue;
        }
        if (pr.to == i) images = images.hcat(p.x_pair[k]);
        if (pr.from == i) images = images.hcat(p.x_bar[k]);
    }

    QMat closure = images.column_space_basis();
    // saturate under the loop algebra; dimension grows at most dim V_i times
    bool grew = true;
    while (grew) {
        grew = false;
        QMat next = closure;
        for (const QMat* loop : loops) next = next.hcat(*loop * closure);
        next = next.column_space_basis();
        if (next.cols() > closure.cols()) {
            closure = next;
            grew = true;
        }
    }
    return p.dim_v[i] - closure.cols();
}

bool check_eps_condition(const CartanDatum& datum, const std::vector<long long>& lambda,
                         const std::vector<long long>& alpha, size_t i, long long l) {
    datum.require_index(i);
    if (lambda.size() != datum.rank() || alpha.size() != datum.rank())
        throw Error(Errc::ShapeMismatch, "lambda/alpha rank mismatch");
    long long pair_value = lambda[i];
    for (size_t j = 0; j < datum.rank(); ++j) pair_value -= datum.matrix()[i][j] * alpha[j];
    if (datum.is_real(i)) return pair_value >= l;
    return l <= 0 || pair_value > 0;
}

} // namespace gkm

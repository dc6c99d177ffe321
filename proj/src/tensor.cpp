#include "gkm/tensor.hpp"

namespace gkm {

namespace {

/// eps_i of factors[k..end) by the fold, as needed for the split decisions:
/// suffix_eps[k] = max_{l >= k} (eps_i(b_l) - wt_i(b_k ... b_{l-1})).
std::vector<ExtInt> suffix_eps(size_t i, std::span<const Crystal* const> crystals,
                               std::span<const Element> factors) {
    const size_t m = factors.size();
    std::vector<ExtInt> out(m + 1, ExtInt::neg_inf());
    for (size_t k = m; k-- > 0;) {
        const Crystal& cr = *crystals[k];
        long long wti = pairing(cr.datum(), cr.wt(factors[k]), i);
        out[k] = max(cr.eps(i, factors[k]), out[k + 1] - wti);
    }
    return out;
}

} // namespace

TensorStats tensor_stats(size_t i, std::span<const Crystal* const> crystals,
                         std::span<const Element> factors) {
    if (factors.empty() || crystals.size() != factors.size())
        throw Error(Errc::ShapeMismatch, "tensor fold needs matching nonempty sequences");
    const CartanDatum& datum = crystals[0]->datum();
    datum.require_index(i);

    Weight wt_acc = crystals[0]->wt(factors[0]);
    long long wti_acc = pairing(datum, wt_acc, i);
    ExtInt eps_acc = crystals[0]->eps(i, factors[0]);
    ExtInt phi_acc = crystals[0]->phi(i, factors[0]);
    for (size_t k = 1; k < factors.size(); ++k) {
        const Crystal& cr = *crystals[k];
        Weight wk = cr.wt(factors[k]);
        long long wti_k = pairing(datum, wk, i);
        eps_acc = max(eps_acc, cr.eps(i, factors[k]) - wti_acc);
        phi_acc = max(phi_acc + ExtInt(wti_k), cr.phi(i, factors[k]));
        wt_acc = wt_acc.plus(wk);
        wti_acc += wti_k;
    }
    return {wt_acc, eps_acc, phi_acc};
}

TensorAction tensor_apply_f(size_t i, std::span<const Crystal* const> crystals,
                            std::span<const Element> factors) {
    if (factors.empty() || crystals.size() != factors.size())
        throw Error(Errc::ShapeMismatch, "tensor fold needs matching nonempty sequences");
    crystals[0]->datum().require_index(i);
    auto eps_right = suffix_eps(i, crystals, factors);

    size_t k = 0;
    while (k + 1 < factors.size() && !(crystals[k]->phi(i, factors[k]) > eps_right[k + 1]))
        ++k;
    auto img = crystals[k]->f(i, factors[k]);
    if (!img) return std::nullopt;
    return std::make_pair(k, *img);
}

TensorAction tensor_apply_e(size_t i, std::span<const Crystal* const> crystals,
                            std::span<const Element> factors) {
    if (factors.empty() || crystals.size() != factors.size())
        throw Error(Errc::ShapeMismatch, "tensor fold needs matching nonempty sequences");
    const CartanDatum& datum = crystals[0]->datum();
    datum.require_index(i);
    const bool real = datum.is_real(i);
    const long long aii = datum.matrix()[i][i];
    auto eps_right = suffix_eps(i, crystals, factors);

    for (size_t k = 0;; ++k) {
        if (k + 1 == factors.size()) {
            auto img = crystals[k]->e(i, factors[k]);
            if (!img) return std::nullopt;
            return std::make_pair(k, *img);
        }
        ExtInt ph = crystals[k]->phi(i, factors[k]);
        ExtInt er = eps_right[k + 1];
        bool act_left;
        if (real) {
            act_left = ph >= er;
        } else {
            if (ph > er - aii) {
                act_left = true;
            } else if (er < ph) {
                // eps_i(rest) < phi_i(b_k) <= eps_i(rest) - a_ii
                return std::nullopt;
            } else {
                act_left = false;
            }
        }
        if (act_left) {
            auto img = crystals[k]->e(i, factors[k]);
            if (!img) return std::nullopt;
            return std::make_pair(k, *img);
        }
    }
}

TensorCrystal::TensorCrystal(std::vector<std::shared_ptr<const Crystal>> factors)
    : Crystal(factors.empty() ? DatumPtr{} : factors[0]->datum_ptr()),
      factors_(std::move(factors)) {
    if (factors_.empty())
        throw Error(Errc::ShapeMismatch, "tensor crystal needs at least one factor");
    for (const auto& f : factors_)
        if (!(f->datum() == datum()))
            throw Error(Errc::ShapeMismatch, "tensor factors must share the Cartan datum");
}

Element TensorCrystal::make(std::vector<Element> factor_elems) const {
    if (factor_elems.size() != factors_.size())
        throw Error(Errc::ShapeMismatch, "factor count does not match tensor arity");
    return Element::tensor(std::move(factor_elems));
}

void TensorCrystal::check(const Element& b) const {
    if (b.kind() != Element::Kind::Tensor || b.factors().size() != factors_.size())
        bad_universe(b);
}

std::vector<const Crystal*> TensorCrystal::raw() const {
    std::vector<const Crystal*> r;
    r.reserve(factors_.size());
    for (const auto& f : factors_) r.push_back(f.get());
    return r;
}

Weight TensorCrystal::wt(const Element& b) const {
    check(b);
    Weight w = factors_[0]->wt(b.factors()[0]);
    for (size_t k = 1; k < factors_.size(); ++k)
        w = w.plus(factors_[k]->wt(b.factors()[k]));
    return w;
}

ExtInt TensorCrystal::eps(size_t i, const Element& b) const {
    check(b);
    return tensor_stats(i, raw(), b.factors()).eps;
}

ExtInt TensorCrystal::phi(size_t i, const Element& b) const {
    check(b);
    return tensor_stats(i, raw(), b.factors()).phi;
}

std::optional<Element> TensorCrystal::e(size_t i, const Element& b) const {
    check(b);
    auto act = tensor_apply_e(i, raw(), b.factors());
    if (!act) return std::nullopt;
    std::vector<Element> fs = b.factors();
    fs[act->first] = act->second;
    return Element::tensor(std::move(fs));
}

std::optional<Element> TensorCrystal::f(size_t i, const Element& b) const {
    check(b);
    auto act = tensor_apply_f(i, raw(), b.factors());
    if (!act) return std::nullopt;
    std::vector<Element> fs = b.factors();
    fs[act->first] = act->second;
    return Element::tensor(std::move(fs));
}

} // namespace gkm

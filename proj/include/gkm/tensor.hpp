#pragma once

#include <span>

#include "gkm/element.hpp"

namespace gkm {

struct TensorStats {
    Weight wt;
    ExtInt eps;
    ExtInt phi;
};

/// Where an operator acted on a factor sequence: the factor position and its
/// new value. Empty optional means the whole product is sent to zero, either
/// because the designated factor's operator vanishes or, for imaginary e,
/// because the middle case of the rule fires.
using TensorAction = std::optional<std::pair<size_t, Element>>;

/// Left fold of the two-factor formulas over a nonempty factor sequence:
///   wt(b (x) b')  = wt(b) + wt(b')
///   eps_i(b (x) b') = max(eps_i(b), eps_i(b') - wt_i(b))
///   phi_i(b (x) b') = max(phi_i(b) + wt_i(b'), phi_i(b'))
/// with -inf saturating arithmetic.
TensorStats tensor_stats(size_t i, std::span<const Crystal* const> crystals,
                         std::span<const Element> factors);

/// f acts on the leftmost factor whose phi beats the eps of everything to
/// its right: split (b_1) (x) (rest), act left iff phi_i(b_1) > eps_i(rest),
/// else recurse into rest.
TensorAction tensor_apply_f(size_t i, std::span<const Crystal* const> crystals,
                            std::span<const Element> factors);

/// Real i: act left iff phi_i(b_1) >= eps_i(rest). Imaginary i has a third
/// case: act left iff phi_i(b_1) > eps_i(rest) - a_ii, vanish when
/// eps_i(rest) < phi_i(b_1) <= eps_i(rest) - a_ii, act right otherwise.
TensorAction tensor_apply_e(size_t i, std::span<const Crystal* const> crystals,
                            std::span<const Element> factors);

/// Finite tensor product of crystals over a common datum. Elements are
/// factor sequences with b_1 the leftmost factor; the operators use the
/// outermost-split recursion above, whose bracketing independence is a
/// tested property.
class TensorCrystal : public Crystal {
public:
    explicit TensorCrystal(std::vector<std::shared_ptr<const Crystal>> factors);

    size_t arity() const { return factors_.size(); }
    const Crystal& factor(size_t k) const { return *factors_[k]; }

    Element make(std::vector<Element> factor_elems) const;

    Weight wt(const Element& b) const override;
    ExtInt eps(size_t i, const Element& b) const override;
    ExtInt phi(size_t i, const Element& b) const override;
    std::optional<Element> e(size_t i, const Element& b) const override;
    std::optional<Element> f(size_t i, const Element& b) const override;

private:
    void check(const Element& b) const;
    std::vector<const Crystal*> raw() const;
    std::vector<std::shared_ptr<const Crystal>> factors_;
};

} // namespace gkm

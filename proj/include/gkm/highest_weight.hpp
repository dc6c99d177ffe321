#pragma once

#include "gkm/graph.hpp"
#include "gkm/models.hpp"
#include "gkm/tensor.hpp"

namespace gkm {

/// Crystal generated from the ground element by the lowering operators,
/// realized on finitely-supported windows over an eventually-cyclic ground
/// sequence iota. Slot k (positions increase leftward) carries a letter of
/// the elementary crystal for index iota_k, ground letters being b_i(0). A
/// formal head with the statistics of the element c closes every window on
/// the left and absorbs raising operators that would escape it.
///
/// Operators extend the window until a ground slot for the acting index lies
/// left of every non-ground entry; results do not depend on how much further
/// the window is extended (tested), which is what makes the semi-infinite
/// fold computable.
class InfinityCrystal : public Crystal {
public:
    /// iota_cycle: index positions, each index must occur at least once.
    /// extra_margin adds that many full cycles of ground slots beyond the
    /// adequate window; results must not depend on it.
    InfinityCrystal(DatumPtr datum, std::vector<size_t> iota_cycle, size_t extra_margin = 0);

    /// Cyclic enumeration of the index set in index order.
    static std::vector<size_t> default_iota(const CartanDatum& datum);

    Element ground() const { return Element::window({}); }
    const std::vector<size_t>& iota() const { return cycle_; }
    size_t margin() const { return margin_; }

    /// Index of the slot at window position pos >= 1.
    size_t slot_index(long long pos) const;

    Weight wt(const Element& b) const override;
    ExtInt eps(size_t i, const Element& b) const override;
    ExtInt phi(size_t i, const Element& b) const override;
    std::optional<Element> e(size_t i, const Element& b) const override;
    std::optional<Element> f(size_t i, const Element& b) const override;

private:
    void check(const Element& b) const;
    /// Factor crystals and elements (head, slot W, ..., slot 1) for an
    /// adequate window for index i.
    struct Fold {
        std::vector<const Crystal*> crystals;
        std::vector<Element> elems;
        long long width; // W: number of explicit slots
    };
    Fold build_window(const Element& b, size_t i) const;
    std::optional<Element> apply(size_t i, const Element& b, bool lower) const;

    std::vector<size_t> cycle_;
    size_t margin_;
    CCrystal head_;
    std::vector<std::shared_ptr<const ElementaryCrystal>> letters_; // per index
};

/// Highest weight crystal for a dominant lambda: the connected component of
/// (ground (x) t_lambda (x) c) with all maps computed by the three-factor
/// tensor rules. Elements are stored as (window, lambda) pairs.
class HighestWeightCrystal : public Crystal {
public:
    HighestWeightCrystal(DatumPtr datum, std::vector<long long> lambda_pairings,
                         std::vector<size_t> iota_cycle = {}, size_t extra_margin = 0);

    Element seed() const { return Element::highest({}, lambda_); }
    const std::vector<long long>& lambda_pairings() const { return lambda_; }
    const InfinityCrystal& infinity() const { return inf_; }

    /// The window factor of an element, as an element of infinity().
    Element window_part(const Element& b) const;

    Weight wt(const Element& b) const override;
    ExtInt eps(size_t i, const Element& b) const override;
    ExtInt phi(size_t i, const Element& b) const override;
    std::optional<Element> e(size_t i, const Element& b) const override;
    std::optional<Element> f(size_t i, const Element& b) const override;

private:
    void check(const Element& b) const;
    std::optional<Element> apply(size_t i, const Element& b, bool lower) const;

    std::vector<long long> lambda_;
    InfinityCrystal inf_;
    TLambdaCrystal t_;
    CCrystal c_;
};

/// generate_component on the seed of a highest weight crystal, then count
/// nodes by weight.
std::vector<std::pair<Weight, size_t>> multiplicities(const HighestWeightCrystal& crystal,
                                                      long long depth);

} // namespace gkm

#include "gkm/highest_weight.hpp"

#include <algorithm>

namespace gkm {

InfinityCrystal::InfinityCrystal(DatumPtr datum, std::vector<size_t> iota_cycle,
                                 size_t extra_margin)
    : Crystal(datum), cycle_(std::move(iota_cycle)), margin_(extra_margin), head_(datum) {
    if (cycle_.empty()) cycle_ = default_iota(*datum);
    std::vector<bool> seen(rank(), false);
    for (size_t i : cycle_) {
        this->datum().require_index(i);
        seen[i] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw Error(Errc::ShapeMismatch, "iota cycle must cover every index");
    for (size_t i = 0; i < rank(); ++i)
        letters_.push_back(std::make_shared<ElementaryCrystal>(datum, i));
}

std::vector<size_t> InfinityCrystal::default_iota(const CartanDatum& datum) {
    std::vector<size_t> cycle(datum.rank());
    for (size_t i = 0; i < cycle.size(); ++i) cycle[i] = i;
    return cycle;
}

size_t InfinityCrystal::slot_index(long long pos) const {
    if (pos < 1) throw Error(Errc::InternalInvariant, "window positions start at 1");
    return cycle_[static_cast<size_t>((pos - 1) % static_cast<long long>(cycle_.size()))];
}

void InfinityCrystal::check(const Element& b) const {
    if (b.kind() != Element::Kind::Window) bad_universe(b);
}

Weight InfinityCrystal::wt(const Element& b) const {
    check(b);
    std::vector<long long> alpha(rank(), 0);
    for (const auto& [pos, n] : b.support()) alpha[slot_index(pos)] += -n;
    return Weight(std::vector<long long>(rank(), 0), std::move(alpha));
}

InfinityCrystal::Fold InfinityCrystal::build_window(const Element& b, size_t i) const {
    long long top = 0;
    for (const auto& [pos, n] : b.support()) top = std::max(top, pos);
    // adequate window: one ground i-slot left of every non-ground entry
    long long width = top + 1;
    while (slot_index(width) != i) ++width;
    width += static_cast<long long>(margin_ * cycle_.size());

    Fold fold;
    fold.width = width;
    fold.crystals.push_back(&head_);
    fold.elems.push_back(head_.element());
    for (long long pos = width; pos >= 1; --pos) {
        size_t idx = slot_index(pos);
        auto it = b.support().find(pos);
        long long n = it == b.support().end() ? 0 : it->second;
        fold.crystals.push_back(letters_[idx].get());
        fold.elems.push_back(Element::letter(idx, n));
    }
    return fold;
}

ExtInt InfinityCrystal::eps(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    Fold fold = build_window(b, i);
    ExtInt value = tensor_stats(i, fold.crystals, fold.elems).eps;
    if (datum().is_imaginary(i) && value != ExtInt(0))
        throw Error(Errc::InternalInvariant,
                    "imaginary eps must vanish on the window model, got " + value.str());
    return value;
}

ExtInt InfinityCrystal::phi(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    Fold fold = build_window(b, i);
    return tensor_stats(i, fold.crystals, fold.elems).phi;
}

std::optional<Element> InfinityCrystal::apply(size_t i, const Element& b, bool lower) const {
    Fold fold = build_window(b, i);
    TensorAction act = lower ? tensor_apply_f(i, fold.crystals, fold.elems)
                             : tensor_apply_e(i, fold.crystals, fold.elems);
    // head absorption surfaces as an empty action: the head's operators vanish
    if (!act) return std::nullopt;
    long long pos = fold.width + 1 - static_cast<long long>(act->first);
    long long n = act->second.n();
    if (n > 0)
        throw Error(Errc::InternalInvariant,
                    "operator produced a positive letter at position " + std::to_string(pos));
    auto support = b.support();
    if (n == 0)
        support.erase(pos);
    else
        support[pos] = n;
    return Element::window(std::move(support));
}

std::optional<Element> InfinityCrystal::e(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    if (datum().is_real(i) && eps(i, b) == ExtInt(0)) return std::nullopt;
    return apply(i, b, false);
}

std::optional<Element> InfinityCrystal::f(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    auto img = apply(i, b, true);
    if (!img)
        throw Error(Errc::InternalInvariant, "lowering operator must be total on windows");
    return img;
}

HighestWeightCrystal::HighestWeightCrystal(DatumPtr datum,
                                           std::vector<long long> lambda_pairings,
                                           std::vector<size_t> iota_cycle, size_t extra_margin)
    : Crystal(datum),
      lambda_(std::move(lambda_pairings)),
      inf_(datum, std::move(iota_cycle), extra_margin),
      t_(datum, lambda_), // validates rank and dominance
      c_(datum) {}

void HighestWeightCrystal::check(const Element& b) const {
    if (b.kind() != Element::Kind::Highest || b.lambda() != lambda_) bad_universe(b);
}

Element HighestWeightCrystal::window_part(const Element& b) const {
    check(b);
    return Element::window(b.support());
}

Weight HighestWeightCrystal::wt(const Element& b) const {
    check(b);
    Weight w = inf_.wt(window_part(b));
    return Weight(lambda_, w.alpha());
}

ExtInt HighestWeightCrystal::eps(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    const Element win = window_part(b);
    std::array<const Crystal*, 3> crystals{&inf_, &t_, &c_};
    std::array<Element, 3> elems{win, t_.element(), c_.element()};
    return tensor_stats(i, crystals, elems).eps;
}

ExtInt HighestWeightCrystal::phi(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    const Element win = window_part(b);
    std::array<const Crystal*, 3> crystals{&inf_, &t_, &c_};
    std::array<Element, 3> elems{win, t_.element(), c_.element()};
    return tensor_stats(i, crystals, elems).phi;
}

std::optional<Element> HighestWeightCrystal::apply(size_t i, const Element& b,
                                                   bool lower) const {
    const Element win = window_part(b);
    std::array<const Crystal*, 3> crystals{&inf_, &t_, &c_};
    std::array<Element, 3> elems{win, t_.element(), c_.element()};
    TensorAction act = lower ? tensor_apply_f(i, crystals, elems)
                             : tensor_apply_e(i, crystals, elems);
    if (!act) return std::nullopt;
    if (act->first != 0)
        throw Error(Errc::InternalInvariant,
                    "operator escaped the window factor of a highest weight element");
    return Element::highest(act->second.support(), lambda_);
}

std::optional<Element> HighestWeightCrystal::e(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return apply(i, b, false);
}

std::optional<Element> HighestWeightCrystal::f(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return apply(i, b, true);
}

std::vector<std::pair<Weight, size_t>> multiplicities(const HighestWeightCrystal& crystal,
                                                      long long depth) {
    return weight_multiplicities(generate_component(crystal, crystal.seed(), depth));
}

} // namespace gkm

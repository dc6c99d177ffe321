#pragma once

#include "gkm/checks.hpp"
#include "gkm/highest_weight.hpp"

namespace gkm {

/// One named invariant check over a generated component. `exercised` counts
/// how many (node, index) pairs actually hit the condition's hypothesis.
struct VerifyReport {
    struct Item {
        std::string name;
        bool pass = true;
        size_t exercised = 0;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_pass() const;
    const Item* item(const std::string& name) const;
    std::string render() const;
};

/// Structural checks on a materialized graph against its crystal: every
/// stored edge must satisfy e_i(target) = source and f_i(source) = target.
/// Usable on corrupted fixtures, so it trusts the graph, not the generator.
VerifyReport verify_edges(const CrystalGraph& g, const Crystal& crystal);

/// Full invariant suite on a generated highest weight component:
///   axioms          the seven defining conditions on every node
///   mutual-inverse  stored edges invert correctly
///   phi-nonneg      phi_i >= 0 everywhere
///   f-vanishing     f_i absent exactly when phi_i = 0
///   imag-eps        eps_i = 0 for imaginary i
///   imag-raising    imaginary i with <h_i, wt> <= -a_ii has no raising image
///   connected       every node reaches the seed along raising operators
///   highest-unique  the seed is the only node with all eps = 0 and e absent
///   string-length   eps_i equals the raising string length for real i
///   eps-condition   string data satisfies the weight inequality table
///   window-invariance  statistics and operators unchanged under extending
///                      the window by one and two extra cycles
VerifyReport verify_component(const HighestWeightCrystal& crystal, const CrystalGraph& g);

} // namespace gkm

#pragma once

#include <functional>
#include <span>

#include "gkm/element.hpp"

namespace gkm {

/// Result of running the seven defining crystal conditions over a finite
/// fragment. Conditions whose partner element falls outside the fragment are
/// still evaluated (every map is computable), but the partner is counted as
/// exterior so truncated fragments can be told apart from genuinely closed
/// ones.
struct AxiomReport {
    struct Violation {
        std::string condition; // "(i)".."(vii)"
        std::string element;   // canonical key
        size_t index;
        std::string detail;
    };
    std::vector<Violation> violations;
    size_t checks = 0;
    size_t exterior_partners = 0;

    bool passed() const { return violations.empty(); }
    std::string summary() const;
};

/// Verifies, for every b in the fragment and every index i:
///   (i)/(ii)   e/f shift the weight by +-alpha_i,
///   (iii)      phi_i(b) = eps_i(b) + <h_i, wt b>,
///   (iv)       e(f(b)) = b and f(e(b)) = b where defined,
///   (v)/(vi)   the eps/phi increments, split by i real vs imaginary,
///   (vii)      phi_i(b) = -inf forces e and f to vanish.
AxiomReport check_axioms(const Crystal& crystal, std::span<const Element> fragment);

struct MorphismReport {
    struct Violation {
        std::string condition;
        std::string element;
        size_t index;
        std::string detail;
    };
    std::vector<Violation> violations;
    bool morphism = true;  // wt/eps/phi preserved, commutes with f on its domain
    bool strict = true;    // commutes with both operators, with psi(0) = 0
    bool embedding = true; // injective on the fragment

    bool strict_embedding() const { return violations.empty() && strict && embedding; }
    std::string summary() const;
};

/// Checks that `map` restricted to the fragment is a crystal morphism from
/// `source` to `target`, and whether it is strict and/or an embedding.
MorphismReport check_strict_morphism(const std::function<Element(const Element&)>& map,
                                     std::span<const Element> fragment,
                                     const Crystal& source, const Crystal& target);

} // namespace gkm

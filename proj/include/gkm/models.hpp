#pragma once

#include "gkm/element.hpp"

namespace gkm {

/// One-element crystal {t_lambda}: wt = lambda, eps_i = phi_i = -inf and
/// both operators vanish. Tensoring with it shifts weights by lambda.
class TLambdaCrystal : public Crystal {
public:
    TLambdaCrystal(DatumPtr datum, std::vector<long long> lambda_pairings);

    Element element() const { return Element::t_lambda(lambda_); }
    const std::vector<long long>& lambda_pairings() const { return lambda_; }

    Weight wt(const Element& b) const override;
    ExtInt eps(size_t i, const Element& b) const override;
    ExtInt phi(size_t i, const Element& b) const override;
    std::optional<Element> e(size_t i, const Element& b) const override;
    std::optional<Element> f(size_t i, const Element& b) const override;

private:
    void check(const Element& b) const;
    std::vector<long long> lambda_;
};

/// One-element crystal {c}: wt = 0, eps_i = phi_i = 0, operators vanish.
class CCrystal : public Crystal {
public:
    explicit CCrystal(DatumPtr datum) : Crystal(std::move(datum)) {}

    Element element() const { return Element::c(); }

    Weight wt(const Element& b) const override;
    ExtInt eps(size_t i, const Element& b) const override;
    ExtInt phi(size_t i, const Element& b) const override;
    std::optional<Element> e(size_t i, const Element& b) const override;
    std::optional<Element> f(size_t i, const Element& b) const override;

private:
    void check(const Element& b) const;
};

/// Rank-one chain crystal with letters b_i(n), the building block of the
/// ground-state window realization.
///
/// Real i:       wt = n alpha_i, eps = -n, phi = n; e and f shift n by +-1.
/// Imaginary i:  letters restricted to n <= 0; eps = 0, phi = n a_ii >= 0;
///               f always steps down, e steps up except at n = 0 where it
///               vanishes.
/// For j != i every statistic is -inf and both operators vanish.
class ElementaryCrystal : public Crystal {
public:
    ElementaryCrystal(DatumPtr datum, size_t i);

    size_t index() const { return i_; }
    Element letter(long long n) const;

    Weight wt(const Element& b) const override;
    ExtInt eps(size_t i, const Element& b) const override;
    ExtInt phi(size_t i, const Element& b) const override;
    std::optional<Element> e(size_t i, const Element& b) const override;
    std::optional<Element> f(size_t i, const Element& b) const override;

private:
    void check(const Element& b) const;
    size_t i_;
};

} // namespace gkm

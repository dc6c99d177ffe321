#include "gkm/models.hpp"

namespace gkm {

TLambdaCrystal::TLambdaCrystal(DatumPtr datum, std::vector<long long> lambda_pairings)
    : Crystal(std::move(datum)), lambda_(std::move(lambda_pairings)) {
    if (lambda_.size() != rank())
        throw Error(Errc::ShapeMismatch, "lambda rank does not match datum rank");
    for (long long v : lambda_)
        if (v < 0)
            throw Error(Errc::NonDominantWeight,
                        "t_lambda requires a dominant base, got pairing " + std::to_string(v));
}

void TLambdaCrystal::check(const Element& b) const {
    if (b.kind() != Element::Kind::TLambda || b.lambda() != lambda_) bad_universe(b);
}

Weight TLambdaCrystal::wt(const Element& b) const {
    check(b);
    return Weight(lambda_, std::vector<long long>(rank(), 0));
}

ExtInt TLambdaCrystal::eps(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return ExtInt::neg_inf();
}

ExtInt TLambdaCrystal::phi(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return ExtInt::neg_inf();
}

std::optional<Element> TLambdaCrystal::e(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return std::nullopt;
}

std::optional<Element> TLambdaCrystal::f(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return std::nullopt;
}

void CCrystal::check(const Element& b) const {
    if (b.kind() != Element::Kind::C) bad_universe(b);
}

Weight CCrystal::wt(const Element& b) const {
    check(b);
    return Weight::zero(rank());
}

ExtInt CCrystal::eps(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return 0;
}

ExtInt CCrystal::phi(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return 0;
}

std::optional<Element> CCrystal::e(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return std::nullopt;
}

std::optional<Element> CCrystal::f(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    return std::nullopt;
}

ElementaryCrystal::ElementaryCrystal(DatumPtr datum, size_t i)
    : Crystal(std::move(datum)), i_(i) {
    this->datum().require_index(i_);
}

Element ElementaryCrystal::letter(long long n) const {
    if (datum().is_imaginary(i_) && n > 0)
        throw Error(Errc::InternalInvariant,
                    "imaginary letters are restricted to n <= 0, got " + std::to_string(n));
    return Element::letter(i_, n);
}

void ElementaryCrystal::check(const Element& b) const {
    if (b.kind() != Element::Kind::Letter || b.index() != i_) bad_universe(b);
    if (datum().is_imaginary(i_) && b.n() > 0) bad_universe(b);
}

Weight ElementaryCrystal::wt(const Element& b) const {
    check(b);
    std::vector<long long> alpha(rank(), 0);
    alpha[i_] = -b.n(); // wt = n alpha_i
    return Weight(std::vector<long long>(rank(), 0), std::move(alpha));
}

ExtInt ElementaryCrystal::eps(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    if (i != i_) return ExtInt::neg_inf();
    return datum().is_real(i_) ? ExtInt(-b.n()) : ExtInt(0);
}

ExtInt ElementaryCrystal::phi(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    if (i != i_) return ExtInt::neg_inf();
    return datum().is_real(i_) ? ExtInt(b.n()) : ExtInt(b.n() * datum().matrix()[i_][i_]);
}

std::optional<Element> ElementaryCrystal::e(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    if (i != i_) return std::nullopt;
    if (datum().is_imaginary(i_) && b.n() >= 0) return std::nullopt;
    return Element::letter(i_, b.n() + 1);
}

std::optional<Element> ElementaryCrystal::f(size_t i, const Element& b) const {
    datum().require_index(i);
    check(b);
    if (i != i_) return std::nullopt;
    return Element::letter(i_, b.n() - 1);
}

} // namespace gkm

#include "gkm/element.hpp"

#include <sstream>

namespace gkm {

namespace {

std::string lambda_key(const std::vector<long long>& lambda) {
    std::ostringstream os;
    os << "t(";
    for (size_t j = 0; j < lambda.size(); ++j) os << (j ? "," : "") << lambda[j];
    os << ')';
    return os.str();
}

std::string support_key(const std::map<long long, long long>& support) {
    std::ostringstream os;
    os << "w{";
    bool first = true;
    // positions descending: leftmost slot first
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        if (!first) os << ',';
        os << it->first << ':' << it->second;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace

Element Element::t_lambda(std::vector<long long> lambda) {
    auto d = std::make_shared<Data>();
    d->kind = Kind::TLambda;
    d->lambda = std::move(lambda);
    d->key = lambda_key(d->lambda);
    return Element(std::move(d));
}

Element Element::c() {
    auto d = std::make_shared<Data>();
    d->kind = Kind::C;
    d->key = "c";
    return Element(std::move(d));
}

Element Element::letter(size_t index, long long n) {
    auto d = std::make_shared<Data>();
    d->kind = Kind::Letter;
    d->index = index;
    d->n = n;
    d->key = "b(" + std::to_string(index + 1) + "," + std::to_string(n) + ")";
    return Element(std::move(d));
}

Element Element::tensor(std::vector<Element> factors) {
    if (factors.empty())
        throw Error(Errc::ShapeMismatch, "tensor element needs at least one factor");
    auto d = std::make_shared<Data>();
    d->kind = Kind::Tensor;
    d->factors = std::move(factors);
    std::string k;
    for (size_t j = 0; j < d->factors.size(); ++j) {
        if (j) k += '*';
        k += '(' + d->factors[j].key() + ')';
    }
    d->key = std::move(k);
    return Element(std::move(d));
}

Element Element::window(std::map<long long, long long> support) {
    for (const auto& [pos, n] : support) {
        if (pos < 1)
            throw Error(Errc::InternalInvariant, "window position must be >= 1");
        if (n >= 0)
            throw Error(Errc::InternalInvariant,
                        "window support entry at position " + std::to_string(pos) +
                            " must be negative, got " + std::to_string(n));
    }
    auto d = std::make_shared<Data>();
    d->kind = Kind::Window;
    d->support = std::move(support);
    d->key = support_key(d->support);
    return Element(std::move(d));
}

Element Element::highest(std::map<long long, long long> support,
                         std::vector<long long> lambda) {
    Element w = window(std::move(support));
    auto d = std::make_shared<Data>();
    d->kind = Kind::Highest;
    d->support = w.support();
    d->lambda = std::move(lambda);
    d->key = '(' + w.key() + ")*(" + lambda_key(d->lambda) + ")*(c)";
    return Element(std::move(d));
}

size_t Element::index() const { return data_->index; }
long long Element::n() const { return data_->n; }
const std::vector<long long>& Element::lambda() const { return data_->lambda; }
const std::vector<Element>& Element::factors() const { return data_->factors; }
const std::map<long long, long long>& Element::support() const { return data_->support; }

bool Element::operator==(const Element& other) const {
    if (data_ == other.data_) return true;
    if (data_->kind != other.data_->kind) return false;
    switch (data_->kind) {
        case Kind::TLambda: return data_->lambda == other.data_->lambda;
        case Kind::C: return true;
        case Kind::Letter:
            return data_->index == other.data_->index && data_->n == other.data_->n;
        case Kind::Tensor: return data_->factors == other.data_->factors;
        case Kind::Window: return data_->support == other.data_->support;
        case Kind::Highest:
            return data_->support == other.data_->support &&
                   data_->lambda == other.data_->lambda;
    }
    return false;
}

void Crystal::bad_universe(const Element& b) const {
    throw Error(Errc::InternalInvariant,
                "element " + b.key() + " does not belong to this crystal");
}

} // namespace gkm

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkm/cartan.hpp"
#include "gkm/extint.hpp"

namespace gkm {

/// Immutable tagged crystal element. Structural equality; canonical ordering
/// by the cached structural serialization, which is also the node id used in
/// graph exports.
///
/// Serializations:
///   t_lambda      t(2,0)
///   c             c
///   letter        b(1,-3)          (1-based index)
///   tensor        (x)*(y)*(z)
///   window        w{5:-2,1:-1}     (ground-state window support, positions
///                                   descending, entries all < 0)
///   highest       (w{...})*(t(...))*(c)
class Element {
public:
    enum class Kind : uint8_t { TLambda, C, Letter, Tensor, Window, Highest };

    static Element t_lambda(std::vector<long long> lambda);
    static Element c();
    static Element letter(size_t index, long long n);
    static Element tensor(std::vector<Element> factors);
    static Element window(std::map<long long, long long> support);
    static Element highest(std::map<long long, long long> support,
                           std::vector<long long> lambda);

    Kind kind() const { return data_->kind; }

    // Letter
    size_t index() const;
    long long n() const;
    // TLambda / Highest
    const std::vector<long long>& lambda() const;
    // Tensor
    const std::vector<Element>& factors() const;
    // Window / Highest
    const std::map<long long, long long>& support() const;

    const std::string& key() const { return data_->key; }

    bool operator==(const Element& other) const;
    bool operator<(const Element& other) const {
        return data_->key != other.data_->key ? data_->key < other.data_->key
                                              : data_->kind < other.data_->kind;
    }

private:
    struct Data {
        Kind kind;
        size_t index = 0;
        long long n = 0;
        std::vector<long long> lambda;
        std::vector<Element> factors;
        std::map<long long, long long> support;
        std::string key;
    };
    explicit Element(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

/// Abstract crystal: an element universe with weight map, string statistics
/// eps/phi and the raising/lowering operators e/f. "Absent" (the zero of
/// B u {0}) is modelled as an empty optional and is absorbing in every
/// derived formula.
class Crystal {
public:
    explicit Crystal(DatumPtr datum) : datum_(std::move(datum)) {}
    virtual ~Crystal() = default;

    const CartanDatum& datum() const { return *datum_; }
    const DatumPtr& datum_ptr() const { return datum_; }
    size_t rank() const { return datum_->rank(); }

    virtual Weight wt(const Element& b) const = 0;
    virtual ExtInt eps(size_t i, const Element& b) const = 0;
    virtual ExtInt phi(size_t i, const Element& b) const = 0;
    virtual std::optional<Element> e(size_t i, const Element& b) const = 0;
    virtual std::optional<Element> f(size_t i, const Element& b) const = 0;

protected:
    [[noreturn]] void bad_universe(const Element& b) const;

private:
    DatumPtr datum_;
};

} // namespace gkm

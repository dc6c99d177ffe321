#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gkm {

/// Z extended by -infinity: the value domain of the string statistics.
/// Addition saturates at -inf; -inf compares below every integer.
class ExtInt {
public:
    constexpr ExtInt() : finite_(true), v_(0) {}
    constexpr ExtInt(long long v) : finite_(true), v_(v) {}

    static constexpr ExtInt neg_inf() {
        ExtInt x;
        x.finite_ = false;
        x.v_ = 0;
        return x;
    }

    constexpr bool finite() const { return finite_; }
    constexpr bool is_neg_inf() const { return !finite_; }

    /// Only meaningful when finite().
    constexpr long long value() const { return v_; }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return ExtInt(a.v_ + b.v_);
    }
    friend constexpr ExtInt operator-(ExtInt a, long long b) {
        if (!a.finite_) return neg_inf();
        return ExtInt(a.v_ - b);
    }
    ExtInt& operator+=(ExtInt b) { return *this = *this + b; }

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }

    friend constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    bool finite_;
    long long v_;
};

} // namespace gkm

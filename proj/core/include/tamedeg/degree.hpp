// Total degree with a distinguished value for the zero polynomial.
//
// The zero polynomial's degree is below every integer and absorbs addition,
// so degree bookkeeping in the bound checker never touches sentinel
// integers.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace tamedeg {

class Degree {
public:
    /// Degree of the zero polynomial: below all finite degrees.
    static constexpr Degree minus_infinity() { return Degree(); }

    static constexpr Degree finite(std::int64_t value) { return Degree(value); }

    constexpr bool is_finite() const { return finite_; }

    /// Finite value; throws for the minus-infinity marker.
    constexpr std::int64_t value() const {
        if (!finite_) {
            throw std::logic_error("degree of the zero polynomial has no finite value");
        }
        return value_;
    }

    friend constexpr bool operator==(Degree, Degree) = default;

    friend constexpr std::strong_ordering operator<=>(Degree lhs, Degree rhs) {
        if (lhs.finite_ != rhs.finite_) {
            return lhs.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (!lhs.finite_) {
            return std::strong_ordering::equal;
        }
        return lhs.value_ <=> rhs.value_;
    }

    /// deg(f*g) arithmetic: minus-infinity absorbs.
    friend constexpr Degree operator+(Degree lhs, Degree rhs) {
        if (!lhs.finite_ || !rhs.finite_) {
            return minus_infinity();
        }
        return finite(lhs.value_ + rhs.value_);
    }

    friend constexpr Degree max(Degree lhs, Degree rhs) { return lhs < rhs ? rhs : lhs; }

private:
    constexpr Degree() : finite_(false), value_(0) {}
    explicit constexpr Degree(std::int64_t value) : finite_(true), value_(value) {}

    bool finite_;
    std::int64_t value_;
};

}  // namespace tamedeg

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "fibrec/errors.hpp"

namespace fibrec::exactnum {

/// Signed arbitrary-precision integer. All certified predicates bottom out
/// in comparisons between values of this type.
using Int = boost::multiprecision::cpp_int;

/// Non-negative arbitrary-precision integer. Closed under + and *;
/// subtraction is checked and throws DomainError on underflow.
class Natural {
public:
    Natural() = default;
    Natural(unsigned v) : v_(v) {}
    Natural(unsigned long v) : v_(v) {}
    Natural(unsigned long long v) : v_(v) {}
    Natural(int v) : v_(v) {
        if (v < 0) throw DomainError("Natural: negative value");
    }
    explicit Natural(Int v) : v_(std::move(v)) {
        if (v_ < 0) throw DomainError("Natural: negative value");
    }

    /// Parses a plain base-10 digit string.
    static Natural from_decimal(std::string_view s) {
        if (s.empty()) throw DomainError("Natural: empty decimal string");
        for (char c : s) {
            if (c < '0' || c > '9') throw DomainError("Natural: invalid decimal digit");
        }
        return Natural(Int(std::string(s)));
    }

    const Int& value() const& { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    std::string str() const { return v_.str(); }

    std::uint64_t to_uint64() const {
        if (v_ > std::numeric_limits<std::uint64_t>::max())
            throw DomainError("Natural: value exceeds 64 bits");
        return v_.convert_to<std::uint64_t>();
    }

    Natural& operator+=(const Natural& o) {
        v_ += o.v_;
        return *this;
    }
    Natural& operator*=(const Natural& o) {
        v_ *= o.v_;
        return *this;
    }
    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator-(const Natural& a, const Natural& b) {
        if (a.v_ < b.v_) throw DomainError("Natural: subtraction underflow");
        Natural r;
        r.v_ = a.v_ - b.v_;
        return r;
    }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_; }

private:
    Int v_{};
};

/// Floor of the square root, exact: returns s with s*s <= n < (s+1)*(s+1).
inline Natural isqrt(const Natural& n) {
    return Natural(boost::multiprecision::sqrt(n.value()));
}

/// 2^bits as an Int.
inline Int pow2(unsigned bits) {
    return Int(1) << bits;
}

/// Smallest e with 2^e >= v, for v >= 1.
inline unsigned ceil_log2(const Int& v) {
    if (v <= 1) return 0;
    unsigned m = boost::multiprecision::msb(v); // 2^m <= v
    Int p = Int(1) << m;
    return p == v ? m : m + 1;
}

} // namespace fibrec::exactnum

#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "fibrec/bigint.hpp"
#include "fibrec/errors.hpp"

namespace fibrec::exactnum {

/// Exact rational number. Always reduced to lowest terms, denominator
/// always positive, zero represented as 0/1. Equality is value equality.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}
    Ratio(Int n) : num_(std::move(n)), den_(1) {}
    Ratio(const Natural& n) : num_(n.value()), den_(1) {}
    Ratio(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Int& num() const& { return num_; }
    const Int& den() const& { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_.is_zero(); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend Ratio operator-(const Ratio& r) { return Ratio(-r.num_, r.den_, already_reduced{}); }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.num_.is_zero()) throw DomainError("Ratio: division by zero");
        return Ratio(a.num_ * b.den_, a.den_ * b.num_);
    }

    // a/b <=> c/d iff ad <=> cb, exact (denominators positive).
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

private:
    struct already_reduced {};
    Ratio(Int num, Int den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw DomainError("Ratio: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

/// Mathematical floor: greatest integer <= r (floor(-1/2) = -1).
inline Int rational_floor(const Ratio& r) {
    Int q = r.num() / r.den(); // truncates toward zero
    if (r.num() < 0 && q * r.den() != r.num()) --q;
    return q;
}

/// Mathematical ceiling: least integer >= r (ceil(-1/2) = 0).
inline Int rational_ceil(const Ratio& r) {
    Int q = r.num() / r.den();
    if (r.num() > 0 && q * r.den() != r.num()) ++q;
    return q;
}

/// Closed interval [lo, hi] with exact rational endpoints. When used as an
/// enclosure of an irrational value, the true value lies strictly inside.
struct RatioInterval {
    Ratio lo;
    Ratio hi;

    RatioInterval(Ratio lo_, Ratio hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (hi < lo) throw DomainError("RatioInterval: lo > hi");
    }

    Ratio width() const { return hi - lo; }
    bool contains(const Ratio& r) const { return lo <= r && r <= hi; }
    bool contains(const RatioInterval& other) const { return lo <= other.lo && other.hi <= hi; }
};

} // namespace fibrec::exactnum

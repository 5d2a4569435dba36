#pragma once

#include <vector>

#include "fibrec/bigint.hpp"
#include "fibrec/ratio.hpp"

namespace fibrec::exactnum {

/// One convergent p/q of the continued fraction [0;1,1,1,...] = (sqrt5-1)/2.
/// The convergents obey p_n = q_{n-1}, q_n = q_{n-1} + q_{n-2} with
/// p_1 = q_1 = 1 (and implicitly q_0 = 1), so 1/1, 1/2, 2/3, 3/5, 5/8, ...
struct Convergent {
    Natural index;
    Natural p;
    Natural q;
};

/// Generates successive convergents of [0;1,1,1,...], starting at index 1.
class ConvergentStream {
public:
    Convergent next();

private:
    Natural q_prev_{1u}; // q_0
    Natural q_curr_{1u}; // q_1
    std::uint64_t index_ = 0;
};

/// Convergents 1..count in order; empty for count = 0.
std::vector<Convergent> golden_convergents(const Natural& count);

/// Exact rational enclosure [lo, hi] of the fractional part of the golden
/// ratio, (sqrt5-1)/2 = 0.6180339887..., with hi - lo <= 2^-precision_bits.
/// Built from the integer square root of 5*4^bits; successive enclosures
/// are nested.
RatioInterval golden_enclosure(unsigned precision_bits);

/// Exact rational enclosure of sqrt(5) with width <= 2^-precision_bits.
RatioInterval sqrt5_enclosure(unsigned precision_bits);

enum class HurwitzVerdict { Holds, Fails };

/// Exact decision of |(sqrt5-1)/2 - p_k/q_k| < 1/(sqrt5 * q_k^2), reduced to
/// integer-square comparisons. With A = q + 2p the inequality is equivalent
/// to 5q^2 - 2 < sqrt5*q*A < 5q^2 + 2, i.e. (since all quantities are
/// positive) to (5q^2-2)^2 < 5*q^2*A^2 < (5q^2+2)^2. Equality cannot occur:
/// 5*q^2*A^2 is never a perfect square of the bound terms, as that would
/// make sqrt5 rational.
struct HurwitzComparison {
    Natural k;
    Natural p;
    Natural q;
    HurwitzVerdict verdict;
    int gap_sign;       // -1: approximation error below the bound, +1: above
    bool lower_ok;      // (5q^2-2)^2 < 5 q^2 A^2
    bool upper_ok;      // 5 q^2 A^2 < (5q^2+2)^2
    Natural lower_sq;   // (5q^2-2)^2
    Natural middle_sq;  // 5 q^2 A^2
    Natural upper_sq;   // (5q^2+2)^2
};

HurwitzComparison hurwitz_compare(const Natural& k);

} // namespace fibrec::exactnum

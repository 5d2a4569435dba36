#include "fibrec/golden.hpp"

namespace fibrec::exactnum {

Convergent ConvergentStream::next() {
    ++index_;
    if (index_ == 1) {
        return Convergent{Natural(1u), Natural(1u), Natural(1u)};
    }
    Natural q_next = q_curr_ + q_prev_;
    Natural p = q_curr_;
    q_prev_ = q_curr_;
    q_curr_ = q_next;
    return Convergent{Natural(index_), p, q_next};
}

std::vector<Convergent> golden_convergents(const Natural& count) {
    std::uint64_t n = count.to_uint64();
    std::vector<Convergent> out;
    out.reserve(static_cast<std::size_t>(n));
    ConvergentStream stream;
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(stream.next());
    return out;
}

RatioInterval golden_enclosure(unsigned precision_bits) {
    // s = floor(2^B * sqrt5) gives s/2^B <= sqrt5 < (s+1)/2^B, hence
    // (s - 2^B)/2^(B+1) <= (sqrt5-1)/2 < (s+1 - 2^B)/2^(B+1),
    // an enclosure of width exactly 2^-(B+1).
    const unsigned B = precision_bits;
    Int two_b = pow2(B);
    Int s = isqrt(Natural(Int(5) * two_b * two_b)).value();
    Int den = two_b << 1;
    return RatioInterval(Ratio(s - two_b, den), Ratio(s + 1 - two_b, den));
}

RatioInterval sqrt5_enclosure(unsigned precision_bits) {
    const unsigned B = precision_bits;
    Int two_b = pow2(B);
    Int s = isqrt(Natural(Int(5) * two_b * two_b)).value();
    return RatioInterval(Ratio(s, two_b), Ratio(s + 1, two_b));
}

HurwitzComparison hurwitz_compare(const Natural& k) {
    if (k.is_zero()) throw DomainError("hurwitz_compare: index must be >= 1");
    ConvergentStream stream;
    Convergent c = stream.next();
    while (c.index < k) c = stream.next();

    const Int& p = c.p.value();
    const Int& q = c.q.value();
    Int a = q + 2 * p;
    Int q2 = q * q;
    Int lower = 5 * q2 - 2;     // > 0 for q >= 1
    Int upper = 5 * q2 + 2;
    Int middle = 5 * q2 * a * a;
    Int lower_sq = lower * lower;
    Int upper_sq = upper * upper;

    HurwitzComparison result;
    result.k = c.index;
    result.p = c.p;
    result.q = c.q;
    result.lower_ok = lower_sq < middle;
    result.upper_ok = middle < upper_sq;
    result.verdict = (result.lower_ok && result.upper_ok) ? HurwitzVerdict::Holds
                                                          : HurwitzVerdict::Fails;
    result.gap_sign = result.verdict == HurwitzVerdict::Holds ? -1 : 1;
    result.lower_sq = Natural(lower_sq);
    result.middle_sq = Natural(middle);
    result.upper_sq = Natural(upper_sq);
    return result;
}

} // namespace fibrec::exactnum

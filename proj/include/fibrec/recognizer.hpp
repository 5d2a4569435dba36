#pragma once

#include <variant>
#include <vector>

#include "fibrec/bigint.hpp"
#include "fibrec/golden.hpp"
#include "fibrec/ratio.hpp"

namespace fibrec::recognizer {

using exactnum::Convergent;
using exactnum::Int;
using exactnum::Natural;

enum class Method { BruteForce, ExactInterval, FloorCeiling };

/// Evidence from sequence generation: either the matched index, or the two
/// consecutive Fibonacci numbers straddling the query.
struct BruteForceCertificate {
    bool matched = false;
    Natural index;  // smallest index with fib(index) == query, when matched
    Natural below;  // largest Fibonacci < query, when not matched
    Natural above;  // smallest Fibonacci > query, when not matched
};

/// One candidate integer m tested against the interval
/// [phi*b - 1/b, phi*b + 1/b] where phi = (1+sqrt5)/2. Membership
/// |m - phi*b| <= 1/b rearranges (multiply by 2b, substitute
/// 2*phi*b^2 = b^2 + b^2*sqrt5) to |C - b^2*sqrt5| <= 2 with
/// C = b*(2m - b), which splits into two integer-square comparisons
/// against 5*b^4. Equality cannot occur for b >= 1.
struct IntervalCandidate {
    Natural m;
    Int shifted;          // C = b*(2m - b)
    bool within_upper;    // m <= phi*b + 1/b, i.e. C <= 2 or (C-2)^2 < 5b^4
    bool within_lower;    // m >= phi*b - 1/b, i.e. C >= -2 and 5b^4 < (C+2)^2
    bool member;
};

struct IntervalCertificate {
    Natural five_b_fourth; // 5*b^4, the shared square witness
    std::vector<IntervalCandidate> candidates;
};

struct FloorCeilingCertificate {
    Natural index;
    Natural p;
    Natural q;
    Int floor_value;
    Int ceiling_value;
    int difference = 0;
    bool certified = false;
    unsigned enclosure_bits = 0;
};

using Certificate =
    std::variant<BruteForceCertificate, IntervalCertificate, FloorCeilingCertificate>;

struct Verdict {
    Natural query;
    bool is_fibonacci = false;
    Method method = Method::BruteForce;
    Certificate certificate;
};

/// Result of one floor/ceiling evaluation at a fixed convergent.
/// difference = floor(b*p/q + b + 1/b) - ceil(b*p/q + b - 1/b); the two
/// arguments are 2/b apart, so difference is always in {-1, 0, 1, 2}.
/// certified is true iff re-evaluating with p/q replaced by both endpoints
/// of a golden-fraction enclosure at least as tight as 1/(q_k * q_{k+1})
/// reproduces the same floor and ceiling, which pins them to the values the
/// exact irrational would give.
struct TestOutcome {
    int difference = 0;
    Convergent convergent_used;
    bool certified = false;
    Int floor_value;
    Int ceiling_value;
    unsigned enclosure_bits = 0;
};

/// Accuracy policy for choosing the starting convergent index.
/// Literal(factor F): smallest k with q_k^2 >= F*b/sqrt5, decided exactly
/// via 5*q_k^4 >= F^2*b^2. The threshold scales linearly in b.
/// Rigorous(margin C): smallest k with q_k*q_{k+1} >= C*b^2, which bounds
/// the approximation shift b*|x - p_k/q_k| by 1/(C*b), a fraction of the
/// interval half-width 1/b. The threshold scales quadratically in b.
struct IndexPolicy {
    enum class Kind { Literal, Rigorous };
    Kind kind = Kind::Rigorous;
    Natural parameter{4u};

    static IndexPolicy literal(Natural factor) {
        return IndexPolicy{Kind::Literal, std::move(factor)};
    }
    static IndexPolicy rigorous(Natural margin) {
        return IndexPolicy{Kind::Rigorous, std::move(margin)};
    }
};

struct SweepRow {
    Natural b;
    Natural minimal_certified_index; // smallest k that is certified and correct
    Natural literal_start_index;
    Natural rigorous_start_index;
    bool misclassified_at_literal = false;
};

struct SweepReport {
    Natural b_max;
    Natural literal_factor;
    Natural rigorous_margin;
    std::vector<SweepRow> rows; // ordered by b
};

/// Generate Fibonacci numbers 0, 1, 1, 2, 3, 5, ... until one reaches b.
Verdict fib_oracle(const Natural& b);

/// Decide [phi*b - 1/b, phi*b + 1/b] ∩ ℕ ≠ ∅ using only integer
/// arithmetic. Throws DomainError for b = 0.
Verdict fib_exact(const Natural& b);

/// One exact floor/ceiling evaluation at convergent k. Throws DomainError
/// for b = 0 or k = 0.
TestOutcome floor_ceiling_test(const Natural& b, const Natural& k);

/// Smallest convergent index meeting the policy threshold for query b.
Natural required_index(const Natural& b, const IndexPolicy& policy);

/// Total membership decision. FloorCeiling starts at required_index(b,
/// policy) and escalates k until the outcome is certified, then decides
/// difference >= 0 <=> Fibonacci. b = 0 short-circuits to the sequence
/// oracle (vacuum convention: 0 is Fibonacci).
Verdict recognize(const Natural& b, Method method, const IndexPolicy& policy = IndexPolicy{});

/// For every Fibonacci b <= b_max: the minimal certified-and-correct index,
/// both policies' starting indices, and whether the raw evaluation at the
/// literal starting index misclassifies b.
SweepReport precision_sweep(const Natural& b_max, const Natural& literal_factor = Natural(10u),
                            const Natural& rigorous_margin = Natural(4u));

} // namespace fibrec::recognizer

// series.hpp -- harmonic and alternating harmonic series: partial sums,
// dyadic divergence certificates, and greedy rearrangement of the
// alternating series to an arbitrary target sum.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wonderkit {

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default cap on how many terms any summation is allowed to touch.
inline constexpr std::int64_t kDefaultTermCap = 100'000'000;

// One term of the alternating harmonic series: value 1/n with sign
// (-1)^(n-1), i.e. + for odd n and - for even n.
struct Term {
    std::int64_t n = 1;

    int sign() const { return (n % 2 != 0) ? +1 : -1; }
    double magnitude() const { return 1.0 / static_cast<double>(n); }
    double signed_value() const { return sign() * magnitude(); }
};

// Dyadic-block divergence certificate: blocks j = 0..m-1 cover the terms
// 1/(2^j + 1) .. 1/2^(j+1), each summing to >= 1/2, which forces the
// 2^m-th partial sum to be at least 1 + m/2.
struct DivergenceCertificate {
    int blocks = 0;
    std::vector<double> block_sums;
    double lower_bound = 1.0;  // 1 + blocks/2
};

// Prefix of a rearranged alternating harmonic series aimed at `target`.
// Odd denominators are consumed in ascending order, as are even ones;
// `switch_steps` holds the 1-based term counts at which the running sum
// crossed the target and the direction flipped.
struct RearrangementTrace {
    double target = 0.0;
    std::vector<std::int64_t> denominators;
    std::vector<double> partial_sums;
    std::vector<std::size_t> switch_steps;
    // False when the term budget ran out before the first crossing.
    bool complete = true;

    std::size_t size() const { return denominators.size(); }
    bool is_switch(std::size_t step_1based) const;
    // Magnitude of the term that produced the most recent crossing;
    // nullopt when no switch has happened yet.
    std::optional<double> final_crossing_bound() const;
};

// Stop rule for rearrange(): either a hard term budget or a crossing-bound
// tolerance (stop at the first switch whose bound is <= tolerance).
struct RearrangeStop {
    static RearrangeStop max_terms(std::size_t n);
    static RearrangeStop tolerance(double t);

    std::optional<std::size_t> term_budget;
    std::optional<double> bound_tolerance;
};

// Sum_{n=1..N} 1/n with compensated accumulation.
double harmonic_partial(std::int64_t n, std::int64_t cap = kDefaultTermCap);

// Sum_{n=1..N} (-1)^(n-1)/n with compensated accumulation.
double alternating_partial(std::int64_t n, std::int64_t cap = kDefaultTermCap);

DivergenceCertificate divergence_certificate(int m, std::int64_t cap = kDefaultTermCap);

// Greedy rearrangement: append unused positive terms (odd denominators,
// ascending) until the partial sum strictly exceeds the target, then unused
// negative terms (even denominators, ascending) until strictly below, and
// so on until the stop rule fires. Exact hits of the target keep adding.
RearrangementTrace rearrange(double target, RearrangeStop stop,
                             std::int64_t cap = kDefaultTermCap);

// CSV with columns (step, denominator, signed term, partial_sum, is_switch).
std::string trace_to_csv(const RearrangementTrace& trace, int precision = 12);

}  // namespace wonderkit

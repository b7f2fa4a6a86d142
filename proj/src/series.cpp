#include "wonderkit/series.hpp"

#include <cmath>

#include "wonderkit/formats.hpp"
#include "wonderkit/numerics.hpp"

namespace wonderkit {

namespace {

void check_cap(std::int64_t n, std::int64_t cap, const char* what) {
    if (n > cap)
        throw OverflowError(std::string(what) + ": " + std::to_string(n) +
                            " terms exceeds cap of " + std::to_string(cap));
}

}  // namespace

bool RearrangementTrace::is_switch(std::size_t step_1based) const {
    for (std::size_t s : switch_steps)
        if (s == step_1based) return true;
    return false;
}

std::optional<double> RearrangementTrace::final_crossing_bound() const {
    if (switch_steps.empty()) return std::nullopt;
    const std::size_t last = switch_steps.back();
    return 1.0 / static_cast<double>(denominators[last - 1]);
}

RearrangeStop RearrangeStop::max_terms(std::size_t n) {
    if (n == 0) throw std::invalid_argument("rearrange: term budget must be positive");
    RearrangeStop s;
    s.term_budget = n;
    return s;
}

RearrangeStop RearrangeStop::tolerance(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("rearrange: tolerance must be positive");
    RearrangeStop s;
    s.bound_tolerance = t;
    return s;
}

double harmonic_partial(std::int64_t n, std::int64_t cap) {
    if (n < 1) throw std::invalid_argument("harmonic_partial: N must be >= 1");
    check_cap(n, cap, "harmonic_partial");
    CompensatedSum acc;
    for (std::int64_t i = 1; i <= n; ++i)
        acc.add(1.0 / static_cast<double>(i));
    return acc.value();
}

double alternating_partial(std::int64_t n, std::int64_t cap) {
    if (n < 1) throw std::invalid_argument("alternating_partial: N must be >= 1");
    check_cap(n, cap, "alternating_partial");
    CompensatedSum acc;
    for (std::int64_t i = 1; i <= n; ++i)
        acc.add(Term{i}.signed_value());
    return acc.value();
}

DivergenceCertificate divergence_certificate(int m, std::int64_t cap) {
    if (m < 0) throw std::invalid_argument("divergence_certificate: m must be >= 0");
    if (m < 63) check_cap(std::int64_t{1} << m, cap, "divergence_certificate");
    else throw OverflowError("divergence_certificate: 2^m not representable");

    DivergenceCertificate cert;
    cert.blocks = m;
    cert.lower_bound = 1.0 + 0.5 * m;
    cert.block_sums.reserve(m);
    for (int j = 0; j < m; ++j) {
        const std::int64_t first = (std::int64_t{1} << j) + 1;
        const std::int64_t last = std::int64_t{1} << (j + 1);
        CompensatedSum block;
        for (std::int64_t i = first; i <= last; ++i)
            block.add(1.0 / static_cast<double>(i));
        cert.block_sums.push_back(block.value());
    }
    return cert;
}

RearrangementTrace rearrange(double target, RearrangeStop stop, std::int64_t cap) {
    if (!std::isfinite(target))
        throw std::invalid_argument("rearrange: target must be finite");
    if (!stop.term_budget && !stop.bound_tolerance)
        throw std::invalid_argument("rearrange: stop rule required");

    const std::size_t budget = stop.term_budget
                                   ? *stop.term_budget
                                   : static_cast<std::size_t>(cap);

    RearrangementTrace trace;
    trace.target = target;
    trace.denominators.reserve(std::min<std::size_t>(budget, 4096));

    // Compensated running sum: float drift must not flip a crossing
    // decision when the partial sums hover around the target.
    CompensatedSum sum;
    std::int64_t next_odd = 1;
    std::int64_t next_even = 2;
    bool positive_phase = true;
    bool done = false;

    auto append = [&](std::int64_t n) {
        sum.add(Term{n}.signed_value());
        trace.denominators.push_back(n);
        trace.partial_sums.push_back(sum.value());
    };

    while (!done) {
        bool added_this_phase = false;
        while (positive_phase ? (sum.value() <= target) : (sum.value() >= target)) {
            if (trace.size() >= budget) {
                // Budget exhausted mid-phase; incomplete only if the first
                // crossing never happened.
                trace.complete = !trace.switch_steps.empty();
                if (!stop.term_budget)
                    throw OverflowError("rearrange: tolerance not reached within term cap");
                return trace;
            }
            std::int64_t& next = positive_phase ? next_odd : next_even;
            append(next);
            next += 2;
            added_this_phase = true;
        }
        if (added_this_phase) {
            trace.switch_steps.push_back(trace.size());
            if (stop.bound_tolerance &&
                *trace.final_crossing_bound() <= *stop.bound_tolerance)
                done = true;
        }
        positive_phase = !positive_phase;
    }
    return trace;
}

std::string trace_to_csv(const RearrangementTrace& trace, int precision) {
    Csv csv;
    csv.header = {"step", "denominator", "signed_term", "partial_sum", "is_switch"};
    csv.rows.reserve(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const Term term{trace.denominators[i]};
        csv.rows.push_back({std::to_string(i + 1),
                            std::to_string(term.n),
                            format_real(term.signed_value(), precision),
                            format_real(trace.partial_sums[i], precision),
                            trace.is_switch(i + 1) ? "1" : "0"});
    }
    return csv.to_string();
}

}  // namespace wonderkit

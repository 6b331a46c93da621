#include "sdstable/trace.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sdstable::stability {

namespace {

using sdrep::DigitSet;
using sdrep::SignedDigitNumber;

// Common prefix length that treats a digit-set or exponent mismatch as an
// empty prefix instead of an error; traces may legitimately contain a
// format restart after an iterate outgrows the msd exponent.
std::size_t prefix_len_or_zero(const SignedDigitNumber& a, const SignedDigitNumber& b) {
    if (!(a.digit_set() == b.digit_set()) || a.msd_exponent() != b.msd_exponent()) {
        return 0;
    }
    const std::size_t limit = std::min(a.size(), b.size());
    std::size_t p = 0;
    while (p < limit && a.digits()[p] == b.digits()[p]) {
        ++p;
    }
    return p;
}

struct StepResult {
    std::vector<long> digits;
    std::size_t reused = 0;
    bool exact = true;
};

// Represent `value` by keeping the longest prefix of `prev` whose open
// interval strictly contains it and appending greedy digits for the rest.
StepResult extend_representation(const DigitSet& ds, long msd_exponent,
                                 const std::vector<long>& prev, const Rational& value,
                                 const TraceOptions& options, std::size_t iteration) {
    const long r = ds.radix();
    const long e = msd_exponent;

    // Prefix values v_p and interval radii r^(e+1-p); p = 0 is the empty
    // prefix with radius r^(e+1), which contains the value by the caller's
    // exponent check, so the scan always succeeds.
    std::vector<Rational> prefix_value(prev.size() + 1);
    prefix_value[0] = Rational(0);
    {
        Rational weight = Rational::power_of(r, e);
        const Rational inv_r(1, r);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            prefix_value[i + 1] = prefix_value[i] + Rational(prev[i]) * weight;
            weight *= inv_r;
        }
    }
    std::size_t keep = 0;
    {
        Rational radius = Rational::power_of(r, e + 1 - static_cast<long>(prev.size()));
        for (std::size_t p = prev.size();; --p) {
            if ((value - prefix_value[p]).abs() < radius) {
                keep = p;
                break;
            }
            if (p == 0) {
                throw InputError("value outside the format's range");  // unreachable
            }
            radius *= Rational(r);
        }
    }

    const std::size_t int_need =
        static_cast<std::size_t>(std::max<long>(0, e + 1 - static_cast<long>(keep)));
    const std::size_t min_new = std::max<std::size_t>(1, int_need);
    std::size_t max_new = int_need + options.max_digits_per_step;
    if (keep + max_new > options.max_total_digits) {
        max_new = options.max_total_digits > keep ? options.max_total_digits - keep : 0;
    }
    if (max_new < min_new) {
        throw ExactRepresentationExceedsBudget(
            "representation length cap reached at iteration " + std::to_string(iteration));
    }

    auto tail = sdrep::detail::greedy_tail(ds, e - static_cast<long>(keep),
                                           value - prefix_value[keep], min_new, max_new);
    StepResult out;
    out.reused = keep;
    out.exact = tail.residual.is_zero();
    if (!out.exact && !options.allow_inexact) {
        throw ExactRepresentationExceedsBudget(
            "iterate " + std::to_string(iteration) +
            " is not a finite radix-" + std::to_string(r) +
            " number within the digit budget");
    }
    out.digits.assign(prev.begin(), prev.begin() + static_cast<long>(keep));
    out.digits.insert(out.digits.end(), tail.digits.begin(), tail.digits.end());
    return out;
}

}  // namespace

std::vector<DigitTrace> build_stable_trace(const IterateSequence& seq,
                                           const sdrep::DigitSet& digit_set,
                                           const TraceOptions& options) {
    seq.validate();
    if (!digit_set.maximally_redundant()) {
        throw NotMaximallyRedundant("trace building requires gamma = radix - 1");
    }
    if (auto bad = first_fejer_violation(seq)) {
        throw NotFejerMonotone("sequence is not Fejér monotone at iterate " +
                                   std::to_string(*bad),
                               *bad);
    }

    const std::size_t count = seq.iterates.size();
    std::vector<Rational> distances(count);
    for (std::size_t n = 0; n < count; ++n) {
        distances[n] = distance_inf(seq.iterates[n], seq.fixed_point);
    }

    const long r = digit_set.radix();
    std::vector<DigitTrace> traces;
    traces.reserve(seq.dimension);
    for (std::size_t c = 0; c < seq.dimension; ++c) {
        DigitTrace trace;
        trace.component_index = c;
        trace.distances = distances;
        trace.representations.reserve(count);
        trace.reused_prefix.reserve(count);
        trace.exact.reserve(count);

        long exponent = sdrep::preferred_msd_exponent(seq.iterates[0][c], r);
        for (std::size_t n = 0; n < count; ++n) {
            const Rational& v = seq.iterates[n][c];
            const bool fresh =
                n == 0 || !(v.abs() < Rational::power_of(r, exponent + 1));
            std::vector<long> base;
            if (fresh) {
                // First iterate, or the value outgrew the exponent: restart
                // the format. A restart resets the common prefix to zero.
                exponent = std::max(exponent, sdrep::preferred_msd_exponent(v, r));
            } else {
                base = trace.representations.back().digits();
            }
            StepResult step =
                extend_representation(digit_set, exponent, base, v, options, n);
            trace.representations.emplace_back(digit_set, exponent, std::move(step.digits));
            trace.reused_prefix.push_back(fresh ? 0 : step.reused);
            trace.exact.push_back(step.exact);
        }

        // stable_prefix[n] = min over k > n of the shared prefix with rep k.
        // The prefix metric is an ultrametric, so the backward recurrence
        // sp[n] = min(prefix(n, n+1), sp[n+1]) is exact; it also makes the
        // sequence nondecreasing by construction.
        trace.stable_prefix.assign(count, 0);
        trace.stable_prefix[count - 1] = trace.representations[count - 1].size();
        for (std::size_t n = count - 1; n-- > 0;) {
            const std::size_t adjacent = prefix_len_or_zero(trace.representations[n],
                                                            trace.representations[n + 1]);
            trace.stable_prefix[n] = std::min(adjacent, trace.stable_prefix[n + 1]);
        }
        traces.push_back(std::move(trace));
    }
    return traces;
}

std::vector<DigitTrace> build_stable_trace(const IterateSequence& seq,
                                           const sdrep::DigitSet& digit_set,
                                           std::size_t max_digits_per_step) {
    TraceOptions options;
    options.max_digits_per_step = max_digits_per_step;
    return build_stable_trace(seq, digit_set, options);
}

std::optional<std::size_t> observed_stabilization_index(
    const std::vector<DigitTrace>& traces, long digits) {
    if (traces.empty()) {
        return std::nullopt;
    }
    const std::size_t count = traces.front().representations.size();
    for (std::size_t n = 0; n < count; ++n) {
        bool all_covered = true;
        for (const DigitTrace& t : traces) {
            const auto& rep = t.representations[n];
            const std::size_t needed =
                static_cast<std::size_t>(rep.msd_exponent() + 1 + digits);
            if (t.stable_prefix[n] < needed) {
                all_covered = false;
                break;
            }
        }
        if (all_covered) {
            return n;
        }
    }
    return std::nullopt;
}

}  // namespace sdstable::stability

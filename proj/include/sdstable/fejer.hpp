#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdstable/rational.hpp"
#include "sdstable/sequence.hpp"

namespace sdstable::stability {

/// True iff the distance to the fixed point never grows between
/// consecutive iterates: ||x^(n+1) - x|| <= ||x^(n) - x|| for all n,
/// evaluated exactly in the infinity norm.
bool is_fejer_monotone(const IterateSequence& seq);

/// Index of the first iterate whose distance to the fixed point exceeds
/// its predecessor's, or nullopt when the sequence is monotone. The
/// returned index is 0-based and always >= 1.
std::optional<std::size_t> first_fejer_violation(const IterateSequence& seq);

/// Result of stable_digit_count. `unbounded` is set when the two points
/// coincide exactly (every digit count qualifies).
struct StableDigitCount {
    bool unbounded = false;
    long value = 0;

    static StableDigitCount make_unbounded() { return {true, 0}; }
    static StableDigitCount finite(long v) { return {false, v}; }
};

/// The largest integer D with ||x_n - x_star||inf < r^-D, computed by
/// exact comparison. Nonnegative whenever the distance is below 1; a
/// distance of 1 or more yields a negative count (no leading digits are
/// pinned down). Equal vectors give the unbounded sentinel.
StableDigitCount stable_digit_count(const std::vector<Rational>& x_n,
                                    const std::vector<Rational>& x_star, long radix);

/// Smallest k >= 0 with L^k * (1/(1-L)) * ||x1 - x0||inf < r^-D, found by
/// exact iteration on rational powers. Requires 0 < L < 1.
long predict_stability_index(const Rational& lipschitz, const std::vector<Rational>& x0,
                             const std::vector<Rational>& x1, long digits, long radix);

}  // namespace sdstable::stability

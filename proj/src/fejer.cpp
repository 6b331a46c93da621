#include "sdstable/fejer.hpp"

namespace sdstable::stability {

Rational distance_inf(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw InputError("distance_inf needs two equal-length nonempty vectors");
    }
    Rational best(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = (a[i] - b[i]).abs();
        if (d > best) {
            best = std::move(d);
        }
    }
    return best;
}

std::optional<std::size_t> first_fejer_violation(const IterateSequence& seq) {
    seq.validate();
    Rational prev = distance_inf(seq.iterates.front(), seq.fixed_point);
    for (std::size_t n = 1; n < seq.iterates.size(); ++n) {
        Rational cur = distance_inf(seq.iterates[n], seq.fixed_point);
        if (cur > prev) {
            return n;
        }
        prev = std::move(cur);
    }
    return std::nullopt;
}

bool is_fejer_monotone(const IterateSequence& seq) {
    return !first_fejer_violation(seq).has_value();
}

StableDigitCount stable_digit_count(const std::vector<Rational>& x_n,
                                    const std::vector<Rational>& x_star, long radix) {
    if (radix < 2) {
        throw InputError("radix must be at least 2");
    }
    const Rational dist = distance_inf(x_n, x_star);
    if (dist.is_zero()) {
        return StableDigitCount::make_unbounded();
    }
    // Largest D with dist < r^-D, i.e. dist * r^D < 1.
    long d = 0;
    Rational scaled = dist;
    const Rational r(radix);
    if (scaled < Rational(1)) {
        while (scaled * r < Rational(1)) {
            scaled *= r;
            ++d;
        }
    } else {
        while (!(scaled < Rational(1))) {
            scaled /= r;
            --d;
        }
    }
    return StableDigitCount::finite(d);
}

long predict_stability_index(const Rational& lipschitz, const std::vector<Rational>& x0,
                             const std::vector<Rational>& x1, long digits, long radix) {
    if (!(lipschitz > Rational(0))) {
        throw InputError("Lipschitz constant must be positive");
    }
    if (!(lipschitz < Rational(1))) {
        throw NotContractive("stability index needs Lipschitz constant < 1");
    }
    const Rational threshold = Rational::power_of(radix, -digits);
    Rational bound =
        distance_inf(x1, x0) / (Rational(1) - lipschitz);  // L^0 term
    long k = 0;
    while (!(bound < threshold)) {
        bound *= lipschitz;
        ++k;
    }
    return k;
}

}  // namespace sdstable::stability

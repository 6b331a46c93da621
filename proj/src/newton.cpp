#include "sdstable/newton.hpp"

#include <utility>

namespace sdstable::solvers {

Rational newton_step(const RationalPolynomial& f, const Rational& x) {
    const Rational fpx = f.derivative()(x);
    if (fpx.is_zero()) {
        throw DerivativeZero("f' vanishes at the evaluation point");
    }
    return x - f(x) / fpx;
}

Rational newton_contraction(const RationalPolynomial& f, const OpenInterval& interval,
                            std::size_t samples) {
    if (samples < 2) {
        throw InputError("need at least two sample points");
    }
    const RationalPolynomial fp = f.derivative();
    const RationalPolynomial fpp = fp.derivative();
    const Rational step =
        interval.width() / Rational(static_cast<long>(samples - 1));
    Rational best(0);
    Rational x = interval.lo();
    for (std::size_t i = 0; i < samples; ++i, x += step) {
        const Rational d = fp(x);
        if (d.is_zero()) {
            throw DerivativeZero("f' vanishes at a sampled grid point");
        }
        Rational t = (f(x) * fpp(x)).abs() / (d * d);
        if (t > best) {
            best = std::move(t);
        }
    }
    return best;
}

Rational bisect_root(const RationalPolynomial& f, Rational lo, Rational hi,
                     const Rational& tol) {
    if (!(lo < hi) || !(tol > Rational(0))) {
        throw InputError("bisect_root needs lo < hi and tol > 0");
    }
    int slo = f(lo).sign();
    int shi = f(hi).sign();
    if (slo == 0) {
        return lo;
    }
    if (shi == 0) {
        return hi;
    }
    if (slo == shi) {
        throw MathError("bisect_root bracket does not change sign");
    }
    const Rational two(2);
    const Rational width_goal = tol * two;
    while (hi - lo > width_goal) {
        Rational mid = (lo + hi) / two;
        const int smid = f(mid).sign();
        if (smid == 0) {
            return mid;
        }
        if (smid == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return (lo + hi) / two;
}

namespace {

// Expanding bracket search around a point that is believed to be near a
// root. Doubles the radius until f changes sign across [c-w, c+w].
std::pair<Rational, Rational> find_bracket(const RationalPolynomial& f, const Rational& c,
                                           long radix) {
    Rational w = Rational::power_of(radix, -2);
    for (int attempt = 0; attempt < 128; ++attempt, w *= Rational(2)) {
        const Rational lo = c - w;
        const Rational hi = c + w;
        const int slo = f(lo).sign();
        const int shi = f(hi).sign();
        if (slo == 0) {
            return {lo, lo};
        }
        if (shi == 0) {
            return {hi, hi};
        }
        if (slo != shi) {
            return {lo, hi};
        }
    }
    throw MathError("could not bracket a root near the last iterate");
}

}  // namespace

NewtonRun run_newton(const RationalPolynomial& f, const Rational& x0, std::size_t iters,
                     long digit_budget, long radix, std::optional<Rational> fixed_point) {
    if (iters < 1) {
        throw InputError("need at least one iteration");
    }
    if (digit_budget < 1) {
        throw InputError("digit budget must be positive");
    }
    if (radix < 2) {
        throw InputError("radix must be at least 2");
    }
    const RationalPolynomial fp = f.derivative();

    NewtonRun run;
    run.sequence.dimension = 1;
    Rational x = x0.round_to_scale(radix, digit_budget);
    run.sequence.iterates.push_back({x});
    for (std::size_t k = 1; k <= iters; ++k) {
        if (fp(x).is_zero()) {
            if (k == 1) {
                throw DerivativeZero("f' vanishes at the starting point");
            }
            run.derivative_zero_at = k;
            break;
        }
        x = newton_step(f, x).round_to_scale(radix, digit_budget);
        run.sequence.iterates.push_back({x});
    }

    if (fixed_point) {
        run.sequence.fixed_point = {*fixed_point};
    } else {
        const Rational& last = run.sequence.iterates.back()[0];
        if (f(last).is_zero()) {
            run.sequence.fixed_point = {last};
        } else {
            auto [lo, hi] = find_bracket(f, last, radix);
            const Rational tol = Rational::power_of(radix, -(digit_budget + 2));
            run.sequence.fixed_point = {lo == hi ? lo : bisect_root(f, lo, hi, tol)};
        }
    }
    run.sequence.validate();
    return run;
}

}  // namespace sdstable::solvers

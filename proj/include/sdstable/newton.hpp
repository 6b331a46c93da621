#pragma once

#include <cstddef>
#include <optional>

#include "sdstable/interval.hpp"
#include "sdstable/polynomial.hpp"
#include "sdstable/rational.hpp"
#include "sdstable/sequence.hpp"

namespace sdstable::solvers {

/// One exact Newton step x - f(x)/f'(x). Throws DerivativeZero when
/// f'(x) = 0.
Rational newton_step(const RationalPolynomial& f, const Rational& x);

/// Sampled estimate of max |f(x) f''(x) / f'(x)^2| over `samples` evenly
/// spaced points spanning the interval (endpoints included). This is a
/// grid estimate, not a certified bound. Throws DerivativeZero when f'
/// vanishes at a grid point.
Rational newton_contraction(const RationalPolynomial& f, const OpenInterval& interval,
                            std::size_t samples);

/// Root of f inside [lo, hi] located by exact bisection; f must change
/// sign across the bracket. The result is within `tol` of a true root.
Rational bisect_root(const RationalPolynomial& f, Rational lo, Rational hi,
                     const Rational& tol);

struct NewtonRun {
    stability::IterateSequence sequence;
    /// Set when f' vanished at some iterate after the first step; the
    /// sequence is truncated there.
    std::optional<std::size_t> derivative_zero_at;
};

/// Runs Newton's method from x0 for `iters` steps. Exact Newton rationals
/// square in size each step, so every recorded iterate (x0 included) is
/// rounded to the nearest multiple of radix^-digit_budget, ties toward
/// zero, and the next step starts from the rounded value.
///
/// The sequence's fixed point is the supplied root when given, otherwise a
/// root of f bracketed near the last iterate and bisected to within
/// radix^-(digit_budget + 2). A zero derivative at the starting point
/// throws DerivativeZero; mid-run it truncates the sequence and flags the
/// run instead.
NewtonRun run_newton(const RationalPolynomial& f, const Rational& x0, std::size_t iters,
                     long digit_budget, long radix = 2,
                     std::optional<Rational> fixed_point = std::nullopt);

}  // namespace sdstable::solvers

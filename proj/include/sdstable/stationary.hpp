#pragma once

#include <cstddef>
#include <vector>

#include "sdstable/matrix.hpp"
#include "sdstable/rational.hpp"
#include "sdstable/sequence.hpp"

namespace sdstable::solvers {

enum class SplittingKind { Jacobi, GaussSeidel, Sor };

/// A linear system Ax = b with a splitting matrix M defining the fixed
/// point iteration x <- (I - M^-1 A) x + M^-1 b.
///
/// M is the diagonal of A (Jacobi), its lower triangle (Gauss-Seidel), or
/// D/omega plus the strict lower triangle (SOR, 0 < omega < 2; omega = 1
/// reduces to Gauss-Seidel).
class StationarySplitting {
public:
    static StationarySplitting jacobi(RationalMatrix a, std::vector<Rational> b);
    static StationarySplitting gauss_seidel(RationalMatrix a, std::vector<Rational> b);
    static StationarySplitting sor(RationalMatrix a, std::vector<Rational> b, Rational omega);

    const RationalMatrix& a() const { return a_; }
    const std::vector<Rational>& b() const { return b_; }
    SplittingKind kind() const { return kind_; }
    const Rational& omega() const { return omega_; }
    std::size_t dimension() const { return a_.rows(); }

private:
    StationarySplitting(RationalMatrix a, std::vector<Rational> b, SplittingKind kind,
                        Rational omega);

    RationalMatrix a_;
    std::vector<Rational> b_;
    SplittingKind kind_;
    Rational omega_;
};

/// One exact application of T(x) = (I - M^-1 A) x + M^-1 b.
std::vector<Rational> stationary_step(const StationarySplitting& split,
                                      const std::vector<Rational>& x);

/// The exact Lipschitz constant ||I - M^-1 A||inf of the iteration map.
Rational stationary_lipschitz(const StationarySplitting& split);

/// Runs `iters` steps from x0 and returns the sequence x0, T(x0), ...,
/// T^iters(x0) with the exact solution of Ax = b as its fixed point.
stability::IterateSequence run_stationary(const StationarySplitting& split,
                                          const std::vector<Rational>& x0,
                                          std::size_t iters);

}  // namespace sdstable::solvers

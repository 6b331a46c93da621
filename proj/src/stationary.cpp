#include "sdstable/stationary.hpp"

#include <utility>

namespace sdstable::solvers {

namespace {

// M in row form. Only the diagonal and (for GS/SOR) the strict lower
// triangle are ever nonzero, so forward substitution solves M y = rhs.
RationalMatrix splitting_matrix(const StationarySplitting& split) {
    const RationalMatrix& a = split.a();
    const std::size_t n = a.rows();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (split.kind()) {
            case SplittingKind::Jacobi:
                m.at(i, i) = a.at(i, i);
                break;
            case SplittingKind::GaussSeidel:
                for (std::size_t j = 0; j <= i; ++j) {
                    m.at(i, j) = a.at(i, j);
                }
                break;
            case SplittingKind::Sor:
                for (std::size_t j = 0; j < i; ++j) {
                    m.at(i, j) = a.at(i, j);
                }
                m.at(i, i) = a.at(i, i) / split.omega();
                break;
        }
    }
    return m;
}

std::vector<Rational> forward_solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.rows();
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = rhs[i];
        for (std::size_t j = 0; j < i; ++j) {
            acc -= m.at(i, j) * y[j];
        }
        y[i] = acc / m.at(i, i);
    }
    return y;
}

}  // namespace

StationarySplitting::StationarySplitting(RationalMatrix a, std::vector<Rational> b,
                                         SplittingKind kind, Rational omega)
    : a_(std::move(a)), b_(std::move(b)), kind_(kind), omega_(std::move(omega)) {
    if (!a_.square()) {
        throw InputError("splitting needs a square matrix");
    }
    if (b_.size() != a_.rows()) {
        throw InputError("right-hand side has wrong dimension");
    }
    for (std::size_t i = 0; i < a_.rows(); ++i) {
        if (a_.at(i, i).is_zero()) {
            throw SingularSplitting("zero diagonal entry makes M singular");
        }
    }
    if (kind_ == SplittingKind::Sor &&
        !(omega_ > Rational(0) && omega_ < Rational(2))) {
        throw InputError("SOR needs 0 < omega < 2");
    }
}

StationarySplitting StationarySplitting::jacobi(RationalMatrix a, std::vector<Rational> b) {
    return StationarySplitting(std::move(a), std::move(b), SplittingKind::Jacobi, Rational(1));
}

StationarySplitting StationarySplitting::gauss_seidel(RationalMatrix a,
                                                      std::vector<Rational> b) {
    return StationarySplitting(std::move(a), std::move(b), SplittingKind::GaussSeidel,
                               Rational(1));
}

StationarySplitting StationarySplitting::sor(RationalMatrix a, std::vector<Rational> b,
                                             Rational omega) {
    return StationarySplitting(std::move(a), std::move(b), SplittingKind::Sor,
                               std::move(omega));
}

std::vector<Rational> stationary_step(const StationarySplitting& split,
                                      const std::vector<Rational>& x) {
    const std::size_t n = split.dimension();
    if (x.size() != n) {
        throw InputError("iterate has wrong dimension");
    }
    const RationalMatrix& a = split.a();
    if (split.kind() == SplittingKind::Jacobi) {
        std::vector<Rational> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc = split.b()[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    acc -= a.at(i, j) * x[j];
                }
            }
            next[i] = acc / a.at(i, i);
        }
        return next;
    }
    // M x' = (M - A) x + b, with M lower triangular.
    const RationalMatrix m = splitting_matrix(split);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = split.b()[i];
        for (std::size_t j = 0; j < n; ++j) {
            acc += (m.at(i, j) - a.at(i, j)) * x[j];
        }
        rhs[i] = acc;
    }
    return forward_solve(m, rhs);
}

Rational stationary_lipschitz(const StationarySplitting& split) {
    const std::size_t n = split.dimension();
    const RationalMatrix& a = split.a();
    const RationalMatrix m = splitting_matrix(split);
    // Build G = I - M^-1 A one column at a time.
    RationalMatrix g(n, n);
    std::vector<Rational> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = a.at(i, j);
        }
        std::vector<Rational> y = forward_solve(m, col);
        for (std::size_t i = 0; i < n; ++i) {
            g.at(i, j) = (i == j ? Rational(1) : Rational(0)) - y[i];
        }
    }
    return g.norm_inf();
}

stability::IterateSequence run_stationary(const StationarySplitting& split,
                                          const std::vector<Rational>& x0,
                                          std::size_t iters) {
    if (iters < 1) {
        throw InputError("need at least one iteration");
    }
    stability::IterateSequence seq;
    seq.dimension = split.dimension();
    seq.fixed_point = solve_exact(split.a(), split.b());
    seq.iterates.reserve(iters + 1);
    seq.iterates.push_back(x0);
    std::vector<Rational> x = x0;
    for (std::size_t k = 0; k < iters; ++k) {
        x = stationary_step(split, x);
        seq.iterates.push_back(x);
    }
    seq.validate();
    return seq;
}

}  // namespace sdstable::solvers

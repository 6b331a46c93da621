#include <doctest.h>

#include <random>
#include <vector>

#include "sdstable/fejer.hpp"
#include "sdstable/matrix.hpp"
#include "sdstable/newton.hpp"
#include "sdstable/polynomial.hpp"
#include "sdstable/stationary.hpp"

using namespace sdstable;
using solvers::RationalMatrix;
using solvers::RationalPolynomial;
using solvers::StationarySplitting;

namespace {

RationalMatrix matrix2(long a11, long a12, long a21, long a22) {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(a11);
    m.at(0, 1) = Rational(a12);
    m.at(1, 0) = Rational(a21);
    m.at(1, 1) = Rational(a22);
    return m;
}

// The contractive 2x2 demo system: A = [[2,1],[1,2]], b = (3,3), x* = (1,1).
StationarySplitting demo_jacobi() {
    return StationarySplitting::jacobi(matrix2(2, 1, 1, 2),
                                       {Rational(3), Rational(3)});
}

RationalPolynomial x_squared_minus_two() {
    return RationalPolynomial({Rational(-2), Rational(0), Rational(1)});
}

}  // namespace

TEST_CASE("solve_exact") {
    const auto x = solvers::solve_exact(matrix2(2, 1, 1, 2), {Rational(3), Rational(3)});
    CHECK(x == std::vector<Rational>{Rational(1), Rational(1)});

    // Needs a row swap to find a pivot.
    const auto y = solvers::solve_exact(matrix2(0, 1, 1, 0), {Rational(5), Rational(7)});
    CHECK(y == std::vector<Rational>{Rational(7), Rational(5)});

    CHECK_THROWS_AS(solvers::solve_exact(matrix2(1, 2, 2, 4), {Rational(1), Rational(1)}),
                    SingularSystem);
}

TEST_CASE("solve_exact against residual check on random systems") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> entry(-9, 9);
    int solved = 0;
    while (solved < 25) {
        RationalMatrix a(3, 3);
        std::vector<Rational> b(3);
        for (std::size_t i = 0; i < 3; ++i) {
            b[i] = Rational(entry(rng), 4);
            for (std::size_t j = 0; j < 3; ++j) {
                a.at(i, j) = Rational(entry(rng), 2);
            }
        }
        std::vector<Rational> x;
        try {
            x = solvers::solve_exact(a, b);
        } catch (const SingularSystem&) {
            continue;
        }
        ++solved;
        for (std::size_t i = 0; i < 3; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < 3; ++j) {
                acc += a.at(i, j) * x[j];
            }
            CHECK(acc == b[i]);  // exact residual, no tolerance
        }
    }
}

TEST_CASE("stationary_step jacobi") {
    const auto split = demo_jacobi();
    CHECK(solvers::stationary_step(split, {Rational(0), Rational(0)}) ==
          std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
    CHECK(solvers::stationary_step(split, {Rational(1), Rational(1)}) ==
          std::vector<Rational>{Rational(1), Rational(1)});

    const auto identity = StationarySplitting::jacobi(
        RationalMatrix::identity(2), {Rational(4), Rational(-5)});
    CHECK(solvers::stationary_step(identity, {Rational(0), Rational(0)}) ==
          std::vector<Rational>{Rational(4), Rational(-5)});
}

TEST_CASE("gauss-seidel and sor(1) take the same step") {
    const auto a = matrix2(2, 1, 1, 2);
    const std::vector<Rational> b{Rational(3), Rational(3)};
    const auto gs = StationarySplitting::gauss_seidel(a, b);
    const auto sor1 = StationarySplitting::sor(a, b, Rational(1));
    const std::vector<Rational> x{Rational(1, 4), Rational(-5, 8)};
    CHECK(solvers::stationary_step(gs, x) == solvers::stationary_step(sor1, x));

    // Hand evaluation: x1' = (3 - x2)/2, then x2' = (3 - x1')/2.
    const auto step = solvers::stationary_step(gs, {Rational(0), Rational(0)});
    CHECK(step == std::vector<Rational>{Rational(3, 2), Rational(3, 4)});
}

TEST_CASE("splitting validation") {
    CHECK_THROWS_AS(StationarySplitting::jacobi(matrix2(0, 1, 1, 2),
                                                {Rational(1), Rational(1)}),
                    SingularSplitting);
    CHECK_THROWS_AS(StationarySplitting::sor(matrix2(2, 1, 1, 2),
                                             {Rational(1), Rational(1)}, Rational(2)),
                    InputError);
    CHECK_THROWS_AS(StationarySplitting::sor(matrix2(2, 1, 1, 2),
                                             {Rational(1), Rational(1)}, Rational(0)),
                    InputError);
}

TEST_CASE("stationary_lipschitz") {
    CHECK(solvers::stationary_lipschitz(demo_jacobi()) == Rational(1, 2));

    const auto identity = StationarySplitting::jacobi(
        RationalMatrix::identity(3), {Rational(1), Rational(2), Rational(3)});
    CHECK(solvers::stationary_lipschitz(identity) == Rational(0));

    const auto divergent = StationarySplitting::jacobi(matrix2(1, 2, 2, 1),
                                                       {Rational(1), Rational(1)});
    CHECK(solvers::stationary_lipschitz(divergent) == Rational(2));

    const auto gs = StationarySplitting::gauss_seidel(matrix2(2, 1, 1, 2),
                                                      {Rational(3), Rational(3)});
    CHECK(solvers::stationary_lipschitz(gs) == Rational(1, 2));
}

TEST_CASE("run_stationary on the contractive demo") {
    const auto seq = solvers::run_stationary(demo_jacobi(), {Rational(0), Rational(0)}, 5);
    CHECK(seq.fixed_point == std::vector<Rational>{Rational(1), Rational(1)});
    REQUIRE(seq.iterates.size() == 6);
    CHECK(seq.iterates[1] == std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
    CHECK(seq.iterates[2] == std::vector<Rational>{Rational(3, 4), Rational(3, 4)});

    // Exact errors: 1, 1/2, 1/4, ... halving each step.
    for (std::size_t k = 0; k < seq.iterates.size(); ++k) {
        CHECK(stability::distance_inf(seq.iterates[k], seq.fixed_point) ==
              Rational::power_of(2, -static_cast<long>(k)));
    }
    CHECK(stability::is_fejer_monotone(seq));
}

TEST_CASE("run_stationary from the solution stays put") {
    const auto seq = solvers::run_stationary(demo_jacobi(), {Rational(1), Rational(1)}, 4);
    for (const auto& it : seq.iterates) {
        CHECK(it == std::vector<Rational>{Rational(1), Rational(1)});
    }
}

TEST_CASE("divergent splitting still runs but is not monotone") {
    const auto divergent = StationarySplitting::jacobi(matrix2(1, 2, 2, 1),
                                                       {Rational(3), Rational(3)});
    CHECK(solvers::stationary_lipschitz(divergent) == Rational(2));
    const auto seq = solvers::run_stationary(divergent, {Rational(0), Rational(0)}, 6);
    CHECK_FALSE(stability::is_fejer_monotone(seq));
}

TEST_CASE("composing runs equals one longer run") {
    const auto split = demo_jacobi();
    const auto full = solvers::run_stationary(split, {Rational(0), Rational(0)}, 7);
    const auto first = solvers::run_stationary(split, {Rational(0), Rational(0)}, 3);
    const auto second = solvers::run_stationary(split, first.iterates.back(), 4);
    CHECK(full.iterates.back() == second.iterates.back());
}

TEST_CASE("contractive stationary runs satisfy the geometric error bound") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> off(-2, 2);
    std::uniform_int_distribution<long> diag(5, 9);
    for (int round = 0; round < 20; ++round) {
        RationalMatrix a(3, 3);
        std::vector<Rational> b(3);
        std::vector<Rational> x0(3);
        for (std::size_t i = 0; i < 3; ++i) {
            b[i] = Rational(off(rng));
            x0[i] = Rational(off(rng), 2);
            for (std::size_t j = 0; j < 3; ++j) {
                a.at(i, j) = i == j ? Rational(1) : Rational(off(rng), diag(rng) * 4);
            }
        }
        const auto split = StationarySplitting::jacobi(a, b);
        const Rational lipschitz = solvers::stationary_lipschitz(split);
        if (!(lipschitz < Rational(1)) || lipschitz.is_zero()) {
            continue;
        }
        const auto seq = solvers::run_stationary(split, x0, 8);
        CHECK(stability::is_fejer_monotone(seq));

        const Rational base =
            stability::distance_inf(seq.iterates[1], seq.iterates[0]) /
            (Rational(1) - lipschitz);
        Rational power(1);
        for (std::size_t k = 0; k < seq.iterates.size(); ++k) {
            CHECK(stability::distance_inf(seq.iterates[k], seq.fixed_point) <=
                  power * base);
            power *= lipschitz;
        }
    }
}

TEST_CASE("polynomial evaluation and derivatives") {
    const auto f = x_squared_minus_two();
    CHECK(f(Rational(3, 2)) == Rational(1, 4));
    CHECK(f.derivative()(Rational(3, 2)) == Rational(3));
    CHECK(f.derivative().derivative()(Rational(7)) == Rational(2));
    CHECK(RationalPolynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(RationalPolynomial().is_zero());
}

TEST_CASE("newton_step") {
    const auto f = x_squared_minus_two();
    CHECK(solvers::newton_step(f, Rational(1)) == Rational(3, 2));
    CHECK(solvers::newton_step(f, Rational(3, 2)) == Rational(17, 12));
    CHECK_THROWS_AS(solvers::newton_step(f, Rational(0)), DerivativeZero);

    // Roots with nonzero derivative are exactly the fixed points.
    const RationalPolynomial g({Rational(-4), Rational(0), Rational(1)});  // x^2 - 4
    CHECK(solvers::newton_step(g, Rational(2)) == Rational(2));
    CHECK(solvers::newton_step(g, Rational(-2)) == Rational(-2));
    CHECK(solvers::newton_step(g, Rational(5)) != Rational(5));
}

TEST_CASE("newton_contraction") {
    const auto f = x_squared_minus_two();
    const OpenInterval iv(Rational(13, 10), Rational(8, 5));

    // Oracle: |T'(x)| = |x^2 - 2| / (2 x^2) evaluated over the same grid.
    Rational expected(0);
    const Rational step = iv.width() / Rational(30);
    Rational x = iv.lo();
    for (int i = 0; i < 31; ++i, x += step) {
        const Rational t = (x * x - Rational(2)).abs() / (Rational(2) * x * x);
        if (t > expected) {
            expected = t;
        }
    }
    const Rational estimate = solvers::newton_contraction(f, iv, 31);
    CHECK(estimate == expected);
    CHECK(estimate < Rational(1, 4));

    const RationalPolynomial linear({Rational(-5), Rational(3)});
    CHECK(solvers::newton_contraction(linear, iv, 8) == Rational(0));

    CHECK_THROWS_AS(
        solvers::newton_contraction(f, OpenInterval(Rational(-1), Rational(1)), 21),
        DerivativeZero);
}

TEST_CASE("bisect_root encloses sqrt(2)") {
    const Rational tol = Rational::power_of(2, -40);
    const Rational root =
        solvers::bisect_root(x_squared_minus_two(), Rational(1), Rational(2), tol);
    CHECK((root - tol) * (root - tol) < Rational(2));
    CHECK(Rational(2) < (root + tol) * (root + tol));
}

TEST_CASE("run_newton tracks the exact iteration within the budget") {
    const auto f = x_squared_minus_two();
    const auto run = solvers::run_newton(f, Rational(3, 2), 4, 64, 2);
    REQUIRE(run.sequence.iterates.size() == 5);
    CHECK_FALSE(run.derivative_zero_at.has_value());

    // Oracle: the unrounded Newton iterates.
    std::vector<Rational> exact{Rational(3, 2)};
    for (int k = 0; k < 4; ++k) {
        exact.push_back(solvers::newton_step(f, exact.back()));
    }
    CHECK(exact[1] == Rational(17, 12));
    CHECK(exact[2] == Rational(577, 408));
    const Rational tolerance = Rational::power_of(2, -64);
    for (std::size_t k = 0; k < exact.size(); ++k) {
        CHECK((run.sequence.iterates[k][0] - exact[k]).abs() < tolerance);
    }

    // The bisected fixed point encloses sqrt(2) to 2^-66.
    const Rational fp = run.sequence.fixed_point[0];
    const Rational tol = Rational::power_of(2, -66);
    CHECK((fp - tol) * (fp - tol) < Rational(2));
    CHECK(Rational(2) < (fp + tol) * (fp + tol));
}

TEST_CASE("run_newton on a linear polynomial converges in one step") {
    const RationalPolynomial f({Rational(-6), Rational(4)});  // 4x - 6
    const auto run = solvers::run_newton(f, Rational(9), 3, 32, 2);
    CHECK(run.sequence.iterates[1][0] == Rational(3, 2));
    CHECK(run.sequence.iterates[2][0] == Rational(3, 2));
    CHECK(run.sequence.fixed_point[0] == Rational(3, 2));
}

TEST_CASE("run_newton with zero derivative at the start throws") {
    CHECK_THROWS_AS(solvers::run_newton(x_squared_minus_two(), Rational(0), 3, 32, 2),
                    DerivativeZero);
}

TEST_CASE("run_newton truncates and flags a mid-run zero derivative") {
    // x^2 + 1 sends 1 to 0 where the derivative vanishes.
    const RationalPolynomial f({Rational(1), Rational(0), Rational(1)});
    const auto run = solvers::run_newton(f, Rational(1), 5, 16, 2, Rational(0));
    CHECK(run.derivative_zero_at == 2);
    REQUIRE(run.sequence.iterates.size() == 2);
    CHECK(run.sequence.iterates[1][0] == Rational(0));
}

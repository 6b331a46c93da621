#include "sdstable/matrix.hpp"

#include <utility>

namespace sdstable::solvers {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
    }
    return m;
}

Rational RationalMatrix::norm_inf() const {
    Rational best(0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            sum += at(i, j).abs();
        }
        if (sum > best) {
            best = std::move(sum);
        }
    }
    return best;
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (!a.square() || b.size() != a.rows()) {
        throw InputError("solve_exact needs a square system");
    }
    const std::size_t n = a.rows();

    // Clear denominators row by row; row scaling leaves the solution alone.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class scale(1);
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                    a.at(i, j).raw().get_den().get_mpz_t());
        }
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].raw().get_den().get_mpz_t());
        for (std::size_t j = 0; j <= n; ++j) {
            const mpq_class& q = (j < n ? a.at(i, j) : b[i]).raw();
            m[i][j] = q.get_num() * (scale / q.get_den());
        }
    }

    // Bareiss: every division below is exact, entries stay integer minors.
    mpz_class prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularSystem("coefficient matrix is singular");
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(mpq_class(m[i][n]));
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= Rational(mpq_class(m[i][j])) * x[j];
        }
        x[i] = acc / Rational(mpq_class(m[i][i]));
    }
    return x;
}

}  // namespace sdstable::solvers

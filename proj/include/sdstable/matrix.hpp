#pragma once

#include <cstddef>
#include <vector>

#include "sdstable/errors.hpp"
#include "sdstable/rational.hpp"

namespace sdstable::solvers {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw InputError("matrix dimensions must be positive");
        }
    }

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Max absolute row sum.
    Rational norm_inf() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Exact solution of Ax = b by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer system, with row pivoting. Throws
/// SingularSystem when A is singular.
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace sdstable::solvers

#pragma once

#include <cstddef>
#include <vector>

#include "sdstable/rational.hpp"

namespace sdstable::solvers {

/// Polynomial over the rationals, coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed; the zero polynomial keeps a
/// single zero coefficient.
class RationalPolynomial {
public:
    RationalPolynomial() : coeffs_{Rational(0)} {}
    explicit RationalPolynomial(std::vector<Rational> ascending_coeffs);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    Rational operator()(const Rational& x) const;  // Horner, exact
    RationalPolynomial derivative() const;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace sdstable::solvers

#include "sdstable/polynomial.hpp"

#include "sdstable/errors.hpp"

namespace sdstable::solvers {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    if (coeffs_.empty()) {
        throw InputError("polynomial needs at least one coefficient");
    }
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() == 1) {
        return RationalPolynomial();
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return RationalPolynomial(std::move(d));
}

}  // namespace sdstable::solvers

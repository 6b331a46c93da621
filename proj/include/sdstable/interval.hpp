#pragma once

#include "sdstable/errors.hpp"
#include "sdstable/rational.hpp"

namespace sdstable {

/// Open interval (lo, hi). Membership is strict on both ends.
class OpenInterval {
public:
    OpenInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (!(lo_ < hi_)) {
            throw InputError("open interval requires lo < hi");
        }
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool contains(const Rational& v) const { return lo_ < v && v < hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

private:
    Rational lo_;
    Rational hi_;
};

}  // namespace sdstable

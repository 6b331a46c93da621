#pragma once

#include "sdstable/errors.hpp"

namespace sdstable::sdrep {

/// Symmetric signed digit set {-gamma, ..., gamma} for a radix-r positional
/// system. The symmetry constraint ceil(r/2) <= gamma <= r-1 must hold;
/// gamma = r-1 is the maximally redundant choice.
class DigitSet {
public:
    DigitSet(long radix, long gamma) : radix_(radix), gamma_(gamma) {
        if (radix < 2) {
            throw InputError("radix must be at least 2");
        }
        const long min_gamma = (radix + 1) / 2;  // ceil(r/2)
        if (gamma < min_gamma || gamma > radix - 1) {
            throw InputError("gamma must satisfy ceil(r/2) <= gamma <= r-1");
        }
    }

    /// The widest symmetric digit set for the radix.
    static DigitSet maximal(long radix) { return DigitSet(radix, radix - 1); }

    long radix() const { return radix_; }
    long gamma() const { return gamma_; }

    bool maximally_redundant() const { return gamma_ == radix_ - 1; }

    bool allows(long digit) const { return digit >= -gamma_ && digit <= gamma_; }

    friend bool operator==(const DigitSet& a, const DigitSet& b) {
        return a.radix_ == b.radix_ && a.gamma_ == b.gamma_;
    }

private:
    long radix_;
    long gamma_;
};

}  // namespace sdstable::sdrep

#pragma once

#include <cstddef>
#include <vector>

#include "sdstable/errors.hpp"
#include "sdstable/rational.hpp"

namespace sdstable::stability {

/// An ordered list of exact-valued m-vectors together with the fixed point
/// they are measured against. Element 0 is the starting point of a run.
struct IterateSequence {
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> iterates;
    std::vector<Rational> fixed_point;

    void validate() const {
        if (dimension < 1) {
            throw InputError("sequence dimension must be >= 1");
        }
        if (iterates.empty()) {
            throw InputError("sequence needs at least one iterate");
        }
        if (fixed_point.size() != dimension) {
            throw InputError("fixed point has wrong dimension");
        }
        for (const auto& x : iterates) {
            if (x.size() != dimension) {
                throw InputError("iterate has wrong dimension");
            }
        }
    }
};

/// Exact infinity-norm distance between two equal-length vectors.
Rational distance_inf(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace sdstable::stability

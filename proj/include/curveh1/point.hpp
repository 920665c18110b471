#pragma once

#include <string>

#include "curveh1/numberfield.hpp"

namespace curveh1 {

/// A Galois orbit of points of a plane curve, represented by coordinates in
/// Q or in a single extension Q(alpha). The orbit covers deg(minpoly)
/// conjugate points of the complex curve.
struct AlgebraicPoint {
    NumberFieldPtr field;  // null: rational point
    NFE x, y;

    bool is_rational() const { return !field; }
    long orbit_size() const { return field ? field->degree() : 1; }

    std::string to_string() const {
        std::string s = "(" + x.to_string() + ", " + y.to_string() + ")";
        if (field) s += " over Q(" + field->symbol + "), " + field->symbol + ": " +
                        field->minpoly_string() + " = 0";
        return s;
    }
};

inline AlgebraicPoint rational_point(Rational x, Rational y) {
    return {nullptr, NFE(std::move(x)), NFE(std::move(y))};
}

}  // namespace curveh1

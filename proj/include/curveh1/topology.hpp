#pragma once

#include <map>
#include <string>
#include <vector>

#include "curveh1/singular.hpp"

namespace curveh1 {

/// A reduced affine plane curve presented by its absolutely irreducible
/// components. Absolute irreducibility is asserted by the caller and
/// sanity-checked (genus nonnegativity).
struct CurveSpec {
    RingPtr ring;  // two variables
    std::vector<QPoly> factors;
    QPoly product;
    std::vector<int> weights{1, 1};  // for the oracle side
    bool tame_tag = false;
};

CurveSpec make_curve_spec(std::vector<QPoly> factors);

/// A point at infinity of the projective closure: (1:c:0) with c algebraic,
/// or (0:1:0).
struct InfinityPoint {
    bool at_y_axis = false;  // (0:1:0)
    NumberFieldPtr field;    // for (1:c:0): null when c is rational
    NFE c;
    long orbit_size = 1;
    std::map<int, long> branch_counts;  // component index -> branches of that component

    long total_branches() const {
        long t = 0;
        for (auto& [i, b] : branch_counts) t += b;
        return t;
    }
    std::string to_string() const {
        if (at_y_axis) return "(0:1:0)";
        std::string s = "(1:" + c.to_string() + ":0)";
        if (field) s += " over Q(" + field->symbol + "), " + field->symbol + ": " +
                        field->minpoly_string() + " = 0";
        return s;
    }
};

/// Points at infinity of every component, with branch counts computed in the
/// standard charts.
std::vector<InfinityPoint> projective_data(const CurveSpec& spec);

/// Geometric genus of one absolutely irreducible factor by the genus-degree
/// formula minus the delta invariants of all singular points of its
/// projective closure. A negative value means the absolute-irreducibility
/// assertion was false.
long component_genus(const QPoly& factor);

/// Euler characteristic of the affine curve.
long euler_characteristic(const CurveSpec& spec);

struct ComponentData {
    long degree = 0;
    long genus = 0;
    long punctures = 0;  // places at infinity, orbit-weighted
};

struct IncidencePoint {
    AlgebraicPoint point;
    long total_branches = 1;
    std::vector<int> components;  // indices of factors through the point
};

struct TopologyReport {
    long b0 = 1;
    long b1 = 0;
    long chi = 1;
    std::vector<ComponentData> components;
    std::vector<IncidencePoint> incidence;  // finite singular/intersection points
    std::vector<InfinityPoint> infinity;
};

TopologyReport betti_numbers(const CurveSpec& spec);

}  // namespace curveh1

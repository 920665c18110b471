#pragma once

#include <map>
#include <optional>

#include "curveh1/derham.hpp"

namespace curveh1 {

/// A pencil of curves: the fibers f^-1(y) of a plane polynomial, or the
/// built-in quotient-surface example whose fibers degenerate to a cusp.
struct FamilySpec {
    enum class Kind { Plane, Section6 };
    Kind kind = Kind::Plane;
    QPoly f;  // plane kind
    std::vector<int> weights{1, 1};
    bool tame_tag = false;
    // factor hints for reducible special fibers, keyed by the fiber value
    std::map<Rational, std::vector<QPoly>> fiber_hints;

    bool lci() const { return kind == Kind::Plane; }  // the affine plane is smooth
};

FamilySpec section6_family();

/// Critical values of the family, split into rational values (whose fibers
/// are analyzed) and irreducible eliminant factors of higher degree
/// (reported symbolically, fibers not analyzed).
struct SpecialValues {
    std::vector<Rational> rational_values;
    std::vector<QPoly> irrational_factors;  // univariate in t
};

SpecialValues special_values(const FamilySpec& fam);

struct FiberRecord {
    Rational y;
    bool reduced = true;
    bool finite_singular = true;  // fiber meets Sing(f) in finitely many points
    std::optional<long> h1;       // absent: skipped (non-reduced)
    bool generic_sample = false;
};

FiberRecord fiber_h1(const FamilySpec& fam, const Rational& y);

/// Common h1 of three deterministically sampled generic fibers.
long generic_h1(const FamilySpec& fam, long seed);

struct SemiVerdict {
    Rational y;
    bool holds = true;  // h1(y) <= h_f
};

struct FamilyReport {
    SpecialValues special;
    long h_f = 0;
    std::vector<FiberRecord> fibers;  // special fibers first, then samples
    std::vector<SemiVerdict> semicontinuity;
    bool lci = true;
};

FamilyReport family_scan(const FamilySpec& fam, long seed);

}  // namespace curveh1

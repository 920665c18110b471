#pragma once

#include <string>

#include "curveh1/family.hpp"

namespace curveh1 {

/// Parse error with the offending file position.
struct ParseError : std::domain_error {
    ParseError(const std::string& msg, int line, int column)
        : std::domain_error("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line, column;
};

/// Parsed form of a curve/family spec file:
///   ring: x, y
///   factor: y^2 - x^3
///   weights: 2, 3
///   tag: tame | lci | monomial(2,3) | section6
///   fiber: 0 = x ; y            (factor hints for a special fiber)
/// Blank lines and '#' comments are ignored.
struct ParsedInput {
    RingPtr ring;
    std::vector<QPoly> factors;
    std::vector<int> weights;
    bool tame = false;
    bool lci_tag = false;
    bool section6 = false;
    std::vector<long> monomial_gens;  // nonempty: monomial curve
    std::map<Rational, std::vector<QPoly>> fiber_hints;

    bool is_monomial() const { return !monomial_gens.empty(); }
};

ParsedInput parse_curve_spec(const std::string& text);

CurveSpec to_curve_spec(const ParsedInput& in);
FamilySpec to_family_spec(const ParsedInput& in);

/// Expression parser used by the file reader; exposed for tests.
/// Grammar: expr := term (('+'|'-') term)*; term := coeff? atom*;
/// atom := var ('^' nat)? | '(' expr ')'; coeff := integer ['/' positive].
QPoly parse_polynomial(const std::string& text, const RingPtr& ring, int line = 1,
                       int column_offset = 0);

}  // namespace curveh1

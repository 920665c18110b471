#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curveh1/rational.hpp"
#include "curveh1/univariate.hpp"

namespace curveh1 {

/// A simple extension Q(alpha), alpha a root of a monic irreducible
/// polynomial over Q. Towers Q(alpha)(beta) are deliberately unsupported;
/// callers that would need one raise "extension tower unsupported".
struct NumberField {
    UniPoly<Rational> minpoly;  // monic, irreducible over Q, degree >= 2
    std::string symbol;         // display name for the generator

    long degree() const { return uni_degree(minpoly); }

    std::string minpoly_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = minpoly.size(); i-- > 0;) {
            const Rational& c = minpoly[i];
            if (c == 0) continue;
            std::string cs = rational_to_string(c);
            bool neg = cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (i == 0)
                os << cs;
            else {
                if (cs != "1") os << cs << "*";
                os << symbol;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

inline NumberFieldPtr make_number_field(UniPoly<Rational> minpoly, std::string symbol = "a") {
    uni_trim(minpoly);
    if (uni_degree(minpoly) < 2) throw std::domain_error("number field of degree < 2");
    minpoly = uni_monic(std::move(minpoly));
    return std::make_shared<const NumberField>(NumberField{std::move(minpoly), std::move(symbol)});
}

/// Element of Q or of a simple extension Q(alpha). A null field pointer
/// means the element is rational; mixing elements of two distinct
/// extensions is an error ("extension tower unsupported").
class NumberFieldElement {
   public:
    NumberFieldElement() = default;
    NumberFieldElement(int n) : coeffs_{Rational(n)} { trim(); }  // NOLINT(google-explicit-*)
    NumberFieldElement(Rational r) {                              // NOLINT(google-explicit-*)
        if (r != 0) coeffs_.push_back(std::move(r));
    }
    NumberFieldElement(NumberFieldPtr field, UniPoly<Rational> rep)
        : field_(std::move(field)), coeffs_(std::move(rep)) {
        reduce();
    }

    static NumberFieldElement generator(NumberFieldPtr field) {
        return NumberFieldElement(std::move(field), UniPoly<Rational>{Rational(0), Rational(1)});
    }

    const NumberFieldPtr& field() const { return field_; }
    const UniPoly<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    bool is_rational() const { return coeffs_.size() <= 1; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("element is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        auto f = merged_field(a, b);
        return NumberFieldElement(f, uni_add(a.coeffs_, b.coeffs_));
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        auto f = merged_field(a, b);
        return NumberFieldElement(f, uni_sub(a.coeffs_, b.coeffs_));
    }
    NumberFieldElement operator-() const {
        NumberFieldElement r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        auto f = merged_field(a, b);
        return NumberFieldElement(f, uni_mul(a.coeffs_, b.coeffs_));
    }

    NumberFieldElement inverse() const {
        if (coeffs_.empty()) throw std::domain_error("inversion of zero");
        if (!field_) return NumberFieldElement(rational_inverse(coeffs_[0]));
        // extended Euclid against the minimal polynomial
        auto eg = uni_ext_gcd(coeffs_, field_->minpoly);
        if (uni_degree(eg.g) != 0)
            throw std::domain_error("minimal polynomial is not irreducible");
        return NumberFieldElement(field_, uni_scale(eg.s, rational_inverse(eg.g[0])));
    }

    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a * b.inverse();
    }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (a.coeffs_.empty() && b.coeffs_.empty()) return true;
        merged_field(a, b);  // reject cross-field comparisons
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        if (is_rational()) return rational_to_string(coeffs_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            std::string cs = rational_to_string(c);
            bool neg = cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (!first)
                os << (neg ? " - " : " + ");
            else if (neg)
                os << "-";
            first = false;
            if (i == 0)
                os << cs;
            else {
                if (cs != "1") os << cs << "*";
                os << field_->symbol;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

   private:
    void trim() { uni_trim(coeffs_); }

    /// Canonical representative of degree < deg(minpoly).
    void reduce() {
        trim();
        if (field_ && uni_degree(coeffs_) >= field_->degree())
            coeffs_ = uni_mod(coeffs_, field_->minpoly);
        trim();
        if (!field_ && coeffs_.size() > 1)
            throw std::domain_error("nonconstant representative without a field");
    }

    static NumberFieldPtr merged_field(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (!a.field_) return b.field_;
        if (!b.field_) return a.field_;
        if (a.field_ == b.field_ || a.field_->minpoly == b.field_->minpoly) return a.field_;
        throw std::domain_error("extension tower unsupported");
    }

    NumberFieldPtr field_;        // null: plain rational
    UniPoly<Rational> coeffs_;    // degree < deg(minpoly)
};

using NFE = NumberFieldElement;

/// Canonical representative of degree < deg(minpoly); construction already
/// reduces, this is the explicit entry point.
inline NFE extfield_reduce(NumberFieldPtr field, UniPoly<Rational> rep) {
    return NFE(std::move(field), std::move(rep));
}

}  // namespace curveh1

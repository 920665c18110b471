#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curveh1/monomial.hpp"
#include "curveh1/rational.hpp"

namespace curveh1 {

/// Sparse multivariate polynomial over a field K (Rational or
/// NumberFieldElement). Terms are kept in a map under the canonical grevlex
/// storage order; zero coefficients are never stored, so equality is
/// term-map equality.
template <class K>
class Poly {
   public:
    using Terms = std::map<Monomial, K, GrevlexLess>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, K c) {
        Poly p(std::move(ring));
        if (!(c == K(0))) p.terms_.emplace(Monomial(p.ring_->size()), std::move(c));
        return p;
    }

    static Poly variable(RingPtr ring, std::size_t i) {
        Poly p(ring);
        Monomial m(ring->size());
        m.e[i] = 1;
        p.terms_.emplace(std::move(m), K(1));
        return p;
    }

    static Poly term(RingPtr ring, Monomial m, K c) {
        Poly p(std::move(ring));
        if (!(c == K(0))) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->size(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    K constant_coefficient() const {
        auto it = terms_.find(Monomial(nvars()));
        return it == terms_.end() ? K(0) : it->second;
    }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    long degree() const {  // total degree; -1 for the zero polynomial
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    long degree_in(std::size_t var) const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, m.e[var]);
        return d;
    }

    long weighted_degree(const std::vector<int>& w) const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(w));
        return d;
    }

    bool involves(std::size_t var) const { return degree_in(var) > 0; }

    /// Leading term under the storage (grevlex) order.
    const std::pair<const Monomial, K>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(const Monomial& m, const K& c) {
        if (c == K(0)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator*(const K& c) const {
        Poly r(ring_);
        if (c == K(0)) return r;
        r.terms_ = terms_;
        for (auto& [m, coeff] : r.terms_) coeff = coeff * c;
        return r;
    }

    Poly operator/(const K& c) const {
        if (c == K(0)) throw std::domain_error("division by zero");
        Poly r(ring_);
        r.terms_ = terms_;
        for (auto& [m, coeff] : r.terms_) coeff = coeff / c;
        return r;
    }

    Poly pow(unsigned n) const {
        Poly r = constant(ring_, K(1));
        Poly base = *this;
        while (n) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t var) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d(m);
            --d.e[var];
            r.add_term(d, c * K(static_cast<int>(m.e[var])));
        }
        return r;
    }

    /// Substitutes values for all variables.
    K eval(const std::vector<K>& point) const {
        K total(0);
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (uint32_t k = 0; k < m.e[i]; ++k) v = v * point[i];
            total = total + v;
        }
        return total;
    }

    /// Substitutes a polynomial for one variable.
    Poly substitute(std::size_t var, const Poly& value) const {
        check_ring(value);
        long maxdeg = degree_in(var);
        std::vector<Poly> powers;
        powers.push_back(constant(ring_, K(1)));
        for (long k = 1; k <= maxdeg; ++k) powers.push_back(powers.back() * value);
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            Monomial rest(m);
            rest.e[var] = 0;
            r += term(ring_, rest, c) * powers[m.e[var]];
        }
        return r;
    }

    /// x_var -> x_var + a (translation of a point coordinate to the origin).
    Poly shift(std::size_t var, const K& a) const {
        return substitute(var, variable(ring_, var) + constant(ring_, a));
    }

    /// Coefficient of x_var^k, a polynomial not involving x_var.
    Poly coefficient_in(std::size_t var, uint32_t k) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] != k) continue;
            Monomial rest(m);
            rest.e[var] = 0;
            r.add_term(rest, c);
        }
        return r;
    }

    /// Dense coefficient list in x_var with entries in the same ring.
    std::vector<Poly> coefficients_in(std::size_t var) const {
        long d = degree_in(var);
        std::vector<Poly> out(static_cast<std::size_t>(d + 1) ? d + 1 : 1, Poly(ring_));
        if (d < 0) return {Poly(ring_)};
        for (const auto& [m, c] : terms_) {
            Monomial rest(m);
            rest.e[var] = 0;
            out[m.e[var]].add_term(rest, c);
        }
        return out;
    }

    /// Applies a coefficient map, e.g. embedding Q into Q(alpha).
    template <class K2, class F>
    Poly<K2> map_coefficients(const RingPtr& ring, F&& f) const {
        Poly<K2> r(ring);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    /// Re-expresses the polynomial in another ring; variables are matched by
    /// name, missing ones must not occur.
    Poly in_ring(const RingPtr& target) const {
        std::vector<int> where(nvars(), -1);
        for (std::size_t i = 0; i < nvars(); ++i) where[i] = var_index(*target, (*ring_)[i]);
        Poly r(target);
        for (const auto& [m, c] : terms_) {
            Monomial t(target->size());
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (m.e[i] == 0) continue;
                if (where[i] < 0) throw std::domain_error("variable not present in target ring");
                t.e[where[i]] = m.e[i];
            }
            r.add_term(t, c);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = coeff_to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-", cs = cs.substr(1);
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (m.is_one())
                os << cs;
            else if (cs == "1")
                os << monomial_to_string(m, *ring_);
            else
                os << cs << "*" << monomial_to_string(m, *ring_);
        }
        return os.str();
    }

   private:
    void check_ring(const Poly& o) const {
        if (!same_ring(ring_, o.ring_)) throw std::domain_error("polynomials from different rings");
    }

    static std::string coeff_to_string(const Rational& c) { return rational_to_string(c); }
    template <class C>
    static std::string coeff_to_string(const C& c) {
        return c.to_string();
    }

    RingPtr ring_;
    Terms terms_;
};

using QPoly = Poly<Rational>;

}  // namespace curveh1

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace curveh1 {

/// Ordered list of variable names shared by all polynomials of a ring.
using Ring = std::vector<std::string>;
using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline int var_index(const Ring& ring, const std::string& name) {
    auto it = std::find(ring.begin(), ring.end(), name);
    return it == ring.end() ? -1 : static_cast<int>(it - ring.begin());
}

/// Exponent vector; length always equals the ambient variable count.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    uint32_t operator[](std::size_t i) const { return e[i]; }

    long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    long weighted_degree(const std::vector<int>& w) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(w[i]) * e[i];
        return d;
    }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m(*this);
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
        return m;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// Quotient o / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial m(o);
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] -= e[i];
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a);
        for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
        return m;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m(a);
        for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::min(a.e[i], b.e[i]);
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Graded reverse lexicographic comparison (a < b), the canonical storage
/// order for polynomial terms.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // equal degree: a < b iff the last nonzero entry of a - b is positive
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

inline std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace curveh1

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace curveh1 {

/// Dense univariate polynomials over a field, coefficients ascending.
/// These back the number-field arithmetic, the factorization code and the
/// Newton-polygon edge polynomials.
template <class K>
using UniPoly = std::vector<K>;

template <class K>
void uni_trim(UniPoly<K>& p) {
    while (!p.empty() && p.back() == K(0)) p.pop_back();
}

template <class K>
long uni_degree(const UniPoly<K>& p) {
    return static_cast<long>(p.size()) - 1;
}

template <class K>
bool uni_is_zero(const UniPoly<K>& p) {
    return p.empty();
}

template <class K>
UniPoly<K> uni_add(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r(std::max(a.size(), b.size()), K(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    uni_trim(r);
    return r;
}

template <class K>
UniPoly<K> uni_sub(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r(std::max(a.size(), b.size()), K(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    uni_trim(r);
    return r;
}

template <class K>
UniPoly<K> uni_mul(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly<K> r(a.size() + b.size() - 1, K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    uni_trim(r);
    return r;
}

template <class K>
UniPoly<K> uni_scale(const UniPoly<K>& a, const K& c) {
    if (c == K(0)) return {};
    UniPoly<K> r = a;
    for (auto& x : r) x = x * c;
    return r;
}

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> uni_divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    UniPoly<K> q, r = a;
    uni_trim(r);
    if (r.size() < b.size()) return {q, r};
    q.assign(r.size() - b.size() + 1, K(0));
    const K inv_lc = K(1) / b.back();
    while (r.size() >= b.size()) {
        K t = r.back() * inv_lc;
        std::size_t shift = r.size() - b.size();
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = r[shift + i] - t * b[i];
        uni_trim(r);
        if (r.empty()) break;
    }
    uni_trim(q);
    return {q, r};
}

template <class K>
UniPoly<K> uni_mod(const UniPoly<K>& a, const UniPoly<K>& b) {
    return uni_divmod(a, b).second;
}

template <class K>
UniPoly<K> uni_monic(UniPoly<K> p) {
    uni_trim(p);
    if (p.empty()) return p;
    const K inv = K(1) / p.back();
    for (auto& c : p) c = c * inv;
    return p;
}

template <class K>
UniPoly<K> uni_gcd(UniPoly<K> a, UniPoly<K> b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        auto r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct UniExtGcd {
    UniPoly<K> g, s, t;
};

template <class K>
UniExtGcd<K> uni_ext_gcd(UniPoly<K> a, UniPoly<K> b) {
    UniPoly<K> s0{K(1)}, s1, t0, t1{K(1)};
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = uni_sub(s0, uni_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = uni_sub(t0, uni_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        const K inv = K(1) / a.back();
        for (auto& c : a) c = c * inv;
        for (auto& c : s0) c = c * inv;
        for (auto& c : t0) c = c * inv;
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}

template <class K>
UniPoly<K> uni_derivative(const UniPoly<K>& p) {
    if (p.size() <= 1) return {};
    UniPoly<K> r(p.size() - 1, K(0));
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * K(static_cast<int>(i));
    uni_trim(r);
    return r;
}

template <class K>
K uni_eval(const UniPoly<K>& p, const K& x) {
    K v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

}  // namespace curveh1

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curveh1/poly.hpp"

namespace curveh1 {

/// Global monomial orders. `perm` lists variable indices from most to least
/// significant (empty = natural order); `weights` feed the weighted-graded
/// variant used by the truncated-cohomology oracle.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex, WGrevlex };
    Kind kind = Kind::Grevlex;
    std::vector<int> perm;
    std::vector<int> weights;

    static MonomialOrder lex(std::vector<int> perm = {}) {
        return {Kind::Lex, std::move(perm), {}};
    }
    static MonomialOrder grevlex(std::vector<int> perm = {}) {
        return {Kind::Grevlex, std::move(perm), {}};
    }
    static MonomialOrder wgrevlex(std::vector<int> weights) {
        return {Kind::WGrevlex, {}, std::move(weights)};
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Lex: {
                if (perm.empty()) {
                    for (std::size_t i = 0; i < a.e.size(); ++i)
                        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
                    return false;
                }
                for (int i : perm)
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
                return false;
            }
            case Kind::Grevlex: {
                long da = a.degree(), db = b.degree();
                if (da != db) return da > db;
                if (perm.empty()) {
                    for (std::size_t i = a.e.size(); i-- > 0;)
                        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
                    return false;
                }
                for (std::size_t i = perm.size(); i-- > 0;) {
                    int v = perm[i];
                    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
                }
                return false;
            }
            case Kind::WGrevlex: {
                long da = a.weighted_degree(weights), db = b.weighted_degree(weights);
                if (da != db) return da > db;
                for (std::size_t i = a.e.size(); i-- > 0;)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
                return false;
            }
        }
        return false;
    }

    bool equal_tag(const MonomialOrder& o) const {
        return kind == o.kind && perm == o.perm && weights == o.weights;
    }
};

/// Ideal given by generators in a common ring; zero generators are dropped.
template <class K>
struct Ideal {
    RingPtr ring;
    std::vector<Poly<K>> generators;

    Ideal(RingPtr r, std::vector<Poly<K>> gens) : ring(std::move(r)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!same_ring(g.ring(), ring)) throw std::domain_error("generator from wrong ring");
            generators.push_back(std::move(g));
        }
    }
};

namespace detail {

/// Polynomial as a term vector sorted descending in a fixed order; leading
/// term is front().
template <class K>
using TermVec = std::vector<std::pair<Monomial, K>>;

template <class K>
TermVec<K> to_termvec(const Poly<K>& p, const MonomialOrder& ord) {
    TermVec<K> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        return ord.greater(a.first, b.first);
    });
    return v;
}

template <class K>
Poly<K> from_termvec(const TermVec<K>& v, const RingPtr& ring) {
    Poly<K> p(ring);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

/// r -= c * x^shift * g
template <class K>
void submul(TermVec<K>& r, const K& c, const Monomial& shift, const TermVec<K>& g,
            const MonomialOrder& ord) {
    TermVec<K> out;
    out.reserve(r.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(std::move(r[i++]));
            continue;
        }
        Monomial gm = g[j].first * shift;
        if (i >= r.size()) {
            out.emplace_back(std::move(gm), -(c * g[j].second));
            ++j;
            continue;
        }
        if (r[i].first == gm) {
            K nc = r[i].second - c * g[j].second;
            if (!(nc == K(0))) out.emplace_back(std::move(gm), std::move(nc));
            ++i, ++j;
        } else if (ord.greater(r[i].first, gm)) {
            out.push_back(std::move(r[i++]));
        } else {
            out.emplace_back(std::move(gm), -(c * g[j].second));
            ++j;
        }
    }
    r = std::move(out);
}

template <class K>
struct BasisElem {
    TermVec<K> terms;  // monic, sorted descending
    const Monomial& lt() const { return terms.front().first; }
};

template <class K>
void make_monic(TermVec<K>& f) {
    if (f.empty()) return;
    const K inv = K(1) / f.front().second;
    for (auto& [m, c] : f) c = c * inv;
}

/// Full normal form against the list; reducers are scanned in order, which
/// together with sorted input makes the result deterministic.
template <class K>
TermVec<K> reduce_full(TermVec<K> f, const std::vector<BasisElem<K>>& basis,
                       const MonomialOrder& ord) {
    TermVec<K> rem;
    while (!f.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.lt().divides(f.front().first)) {
                Monomial shift = g.lt().divide_into(f.front().first);
                submul(f, f.front().second, shift, g.terms, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(std::move(f.front()));
            f.erase(f.begin());
        }
    }
    return rem;
}

}  // namespace detail

template <class K>
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Poly<K>> basis;  // reduced: monic, minimal, tails reduced

    bool is_unit_ideal() const {
        return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
    }
};

struct GroebnerOptions {
    long pair_budget = 200000;  // aborts with "budget exceeded" beyond this
};

/// Buchberger with the normal selection strategy and both standard pair
/// criteria. Returns the unique reduced basis for the order.
template <class K>
GroebnerBasis<K> groebner_basis(const Ideal<K>& ideal, const MonomialOrder& order,
                                const GroebnerOptions& opts = {}) {
    using detail::BasisElem;
    using detail::TermVec;

    std::vector<BasisElem<K>> g;
    for (const auto& p : ideal.generators) {
        auto tv = detail::to_termvec(p, order);
        detail::make_monic(tv);
        g.push_back({std::move(tv)});
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm_m;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm_m != b.lcm_m) return !order.greater(a.lcm_m, b.lcm_m);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };

    std::vector<Pair> pending;
    auto push_pairs_with = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pending.push_back({i, k, lcm(g[i].lt(), g[k].lt())});
    };
    for (std::size_t k = 0; k < g.size(); ++k) push_pairs_with(k);

    auto pair_pending = [&](std::size_t a, std::size_t b) {
        for (const auto& p : pending)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    long processed = 0;
    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *it;
        pending.erase(it);

        if (++processed > opts.pair_budget) throw std::runtime_error("budget exceeded");

        // product criterion
        if (gcd(g[pr.i].lt(), g[pr.j].lt()).is_one()) continue;
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (g[k].lt().divides(pr.lcm_m) && !pair_pending(pr.i, k) && !pair_pending(pr.j, k))
                chained = true;
        }
        if (chained) continue;

        // S-polynomial
        TermVec<K> s;
        {
            const auto &fi = g[pr.i], &fj = g[pr.j];
            Monomial mi = fi.lt().divide_into(pr.lcm_m);
            Monomial mj = fj.lt().divide_into(pr.lcm_m);
            for (const auto& [m, c] : fi.terms) s.emplace_back(m * mi, c);
            detail::submul(s, K(1), mj, fj.terms, order);
        }
        s = detail::reduce_full(std::move(s), g, order);
        if (s.empty()) continue;
        detail::make_monic(s);
        g.push_back({std::move(s)});
        push_pairs_with(g.size() - 1);
    }

    // minimalize
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (g[j].lt().divides(g[i].lt()) && !(g[i].lt() == g[j].lt() && j > i))
                redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<BasisElem<K>> minimal;
    for (auto i : keep) minimal.push_back(std::move(g[i]));

    // inter-reduce tails
    std::vector<BasisElem<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = detail::reduce_full(minimal[i].terms, others, order);
        detail::make_monic(r);
        if (!r.empty()) reduced.push_back({std::move(r)});
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const auto& a, const auto& b) { return !order.greater(a.lt(), b.lt()); });

    GroebnerBasis<K> out{ideal.ring, order, {}};
    for (const auto& b : reduced) out.basis.push_back(detail::from_termvec(b.terms, ideal.ring));
    if (out.basis.empty()) out.basis.push_back(Poly<K>::zero(ideal.ring));  // zero ideal
    return out;
}

/// Remainder of multivariate division by the basis; zero iff the input lies
/// in the ideal, and idempotent.
template <class K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& gb) {
    std::vector<detail::BasisElem<K>> basis;
    for (const auto& b : gb.basis)
        if (!b.is_zero()) basis.push_back({detail::to_termvec(b, gb.order)});
    auto r = detail::reduce_full(detail::to_termvec(p, gb.order), basis, gb.order);
    return detail::from_termvec(r, p.ring());
}

/// Standard monomials (the staircase) of a zero-dimensional quotient, or an
/// "infinite" flag when some variable has no pure power among the leading
/// monomials.
struct Staircase {
    bool finite = false;
    long dimension = 0;  // only meaningful when finite
    std::vector<Monomial> leading_monomials;
    std::vector<Monomial> standard_monomials;
};

template <class K>
std::vector<Monomial> leading_monomials(const GroebnerBasis<K>& gb) {
    std::vector<Monomial> lts;
    for (const auto& b : gb.basis) {
        if (b.is_zero()) continue;
        auto tv = detail::to_termvec(b, gb.order);
        lts.push_back(tv.front().first);
    }
    return lts;
}

template <class K>
Staircase quotient_dimension(const GroebnerBasis<K>& gb) {
    Staircase st;
    st.leading_monomials = leading_monomials(gb);
    const std::size_t n = gb.ring->size();

    if (st.leading_monomials.size() == 1 && st.leading_monomials[0].is_one()) {
        st.finite = true;  // unit ideal: empty variety
        st.dimension = 0;
        return st;
    }

    std::vector<long> bound(n, -1);
    for (const auto& m : st.leading_monomials) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n && pure; ++i) {
            if (m.e[i] == 0) continue;
            if (support >= 0)
                pure = false;
            else
                support = static_cast<int>(i);
        }
        if (pure && support >= 0)
            bound[support] = bound[support] < 0 ? m.e[support]
                                                : std::min<long>(bound[support], m.e[support]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return st;  // no pure power of x_i: infinite

    st.finite = true;
    Monomial cur(n);
    // enumerate the bounded box, keep monomials outside the lead ideal
    std::vector<uint32_t> idx(n, 0);
    while (true) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m.e[i] = idx[i];
        bool standard = true;
        for (const auto& lt : st.leading_monomials)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) st.standard_monomials.push_back(m);
        std::size_t pos = 0;
        while (pos < n) {
            if (++idx[pos] < static_cast<uint32_t>(bound[pos])) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    std::sort(st.standard_monomials.begin(), st.standard_monomials.end(), grevlex_less);
    st.dimension = static_cast<long>(st.standard_monomials.size());
    return st;
}

/// Krull dimension of the quotient, from the leading-monomial combinatorics:
/// the largest variable subset meeting no leading monomial's support.
inline long staircase_krull_dimension(const std::vector<Monomial>& lts, std::size_t nvars) {
    for (const auto& m : lts)
        if (m.is_one()) return -1;  // unit ideal
    long best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool independent = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars && inside; ++i)
                if (m.e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max<long>(best, __builtin_popcount(mask));
    }
    return best;
}

/// Generators of ideal ∩ Q[keep] via a lex basis with the eliminated
/// variables largest.
template <class K>
std::vector<Poly<K>> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& keep,
                               const GroebnerOptions& opts = {}) {
    const std::size_t n = ideal.ring->size();
    std::vector<bool> kept(n, false);
    for (auto k : keep) kept[k] = true;
    std::vector<int> perm;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) perm.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < n; ++i)
        if (kept[i]) perm.push_back(static_cast<int>(i));

    auto gb = groebner_basis(ideal, MonomialOrder::lex(perm), opts);
    std::vector<Poly<K>> out;
    for (const auto& b : gb.basis) {
        if (b.is_zero()) continue;
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i)
            if (!kept[i] && b.involves(i)) inside = false;
        if (inside) out.push_back(b);
    }
    return out;
}

}  // namespace curveh1

#include "curveh1/puiseux.hpp"

#include <algorithm>
#include <map>

#include "curveh1/factor.hpp"

namespace curveh1 {

namespace {

struct Pt {
    long i, j;
};

/// Lower-left hull of the support between the y-axis vertex and the x-axis
/// vertex; assumes the germ is divisible by neither coordinate.
std::vector<Pt> newton_polygon(const Poly<NFE>& f) {
    // minimal j for each occurring i
    std::map<long, long> min_j;
    for (const auto& [m, c] : f.terms()) {
        long i = m.e[0], j = m.e[1];
        auto it = min_j.find(i);
        if (it == min_j.end() || j < it->second) min_j[i] = j;
    }
    std::vector<Pt> pts;
    for (auto& [i, j] : min_j) pts.push_back({i, j});
    // monotone chain, keeping the hull convex from below
    std::vector<Pt> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const Pt &a = hull[hull.size() - 2], &b = hull.back();
            long cross = (b.i - a.i) * (p.j - a.j) - (b.j - a.j) * (p.i - a.i);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    // only edges descending to the x-axis vertex matter
    std::vector<Pt> out;
    for (const auto& p : hull) {
        if (!out.empty() && p.j >= out.back().j) break;
        out.push_back(p);
        if (p.j == 0) break;
    }
    return out;
}

long igcd(long a, long b) { return b == 0 ? a : igcd(b, a % b); }

long branches_rec(Poly<NFE> f, NumberFieldPtr field, int depth) {
    if (depth > 64) throw std::runtime_error("branch recursion budget exceeded");
    const RingPtr& ring = f.ring();
    long count = 0;

    // coordinate-axis branches
    long min_x = -1, min_y = -1;
    for (const auto& [m, c] : f.terms()) {
        min_x = min_x < 0 ? m.e[0] : std::min<long>(min_x, m.e[0]);
        min_y = min_y < 0 ? m.e[1] : std::min<long>(min_y, m.e[1]);
    }
    if (f.is_zero()) throw std::domain_error("branch count of zero germ");
    if (min_x > 0) {
        count += 1;
        Poly<NFE> g(ring);
        for (const auto& [m, c] : f.terms()) {
            Monomial mm(m);
            mm.e[0] -= static_cast<uint32_t>(min_x);
            g.add_term(mm, c);
        }
        f = std::move(g);
    }
    if (!(f.constant_coefficient() == NFE(0))) return count;
    if (min_y > 0) {
        count += 1;
        Poly<NFE> g(ring);
        for (const auto& [m, c] : f.terms()) {
            Monomial mm(m);
            mm.e[1] -= static_cast<uint32_t>(min_y);
            g.add_term(mm, c);
        }
        f = std::move(g);
    }
    if (!(f.constant_coefficient() == NFE(0))) return count;

    auto hull = newton_polygon(f);
    for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
        const Pt &top = hull[v], &bot = hull[v + 1];
        const long di = bot.i - top.i, dj = top.j - bot.j;
        const long g = igcd(di, dj);
        const long q = di / g, p = dj / g;

        // edge polynomial, coefficients read from the bottom vertex upward
        UniPoly<NFE> edge(static_cast<std::size_t>(g + 1), NFE(0));
        for (long t = 0; t <= g; ++t) {
            Monomial m(2);
            m.e[0] = static_cast<uint32_t>(bot.i - t * q);
            m.e[1] = static_cast<uint32_t>(bot.j + t * p);
            edge[t] = f.coefficient(m);
        }

        for (auto& [h, mult] : factor_univariate_ext(edge, field)) {
            const long m_deg = uni_degree(h);
            if (mult == 1) {
                count += m_deg;
                continue;
            }
            // root class of multiplicity k >= 2: continue past this edge
            NumberFieldPtr next_field = field;
            NFE root;
            if (m_deg == 1) {
                root = -h[0];  // h monic linear
            } else {
                if (field) throw std::domain_error("unsupported singularity field");
                UniPoly<Rational> minpoly;
                minpoly.reserve(h.size());
                for (const auto& c : h) minpoly.push_back(c.rational_value());
                next_field = make_number_field(std::move(minpoly));
                root = NFE::generator(next_field);
            }

            // toric substitution x -> x^p (z0+y)^b, y -> x^q (z0+y)^a with
            // a*p - b*q = 1, 0 <= b < p; strict transform divides by x^N
            long b = 0, aexp = 1;
            for (long cand = 0; cand < p; ++cand) {
                if ((1 + cand * q) % p == 0) {
                    b = cand;
                    aexp = (1 + cand * q) / p;
                    break;
                }
            }

            long big_n = -1;
            long max_u = 0;
            for (const auto& [mm, c] : f.terms()) {
                long w = p * mm.e[0] + q * mm.e[1];
                big_n = big_n < 0 ? w : std::min(big_n, w);
                max_u = std::max(max_u, b * mm.e[0] + aexp * mm.e[1]);
            }

            Poly<NFE> u = Poly<NFE>::variable(ring, 1) + Poly<NFE>::constant(ring, root);
            std::vector<Poly<NFE>> upow{Poly<NFE>::constant(ring, NFE(1))};
            for (long k = 1; k <= max_u; ++k) upow.push_back(upow.back() * u);

            Poly<NFE> transformed(ring);
            for (const auto& [mm, c] : f.terms()) {
                long xe = p * mm.e[0] + q * mm.e[1] - big_n;
                long ue = b * mm.e[0] + aexp * mm.e[1];
                Monomial xm(2);
                xm.e[0] = static_cast<uint32_t>(xe);
                transformed += Poly<NFE>::term(ring, xm, c) * upow[ue];
            }
            count += m_deg * branches_rec(std::move(transformed), next_field, depth + 1);
        }
    }
    return count;
}

}  // namespace

long branches_at_origin(const Poly<NFE>& f, const NumberFieldPtr& field) {
    if (f.is_zero()) throw std::domain_error("branch count of zero germ");
    if (!(f.constant_coefficient() == NFE(0)))
        throw std::domain_error("point is not on the curve");
    return branches_rec(f, field, 0);
}

}  // namespace curveh1

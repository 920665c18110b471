#include "curveh1/oracle.hpp"

#include <algorithm>
#include <map>

#include "curveh1/linalg.hpp"

namespace curveh1 {

namespace {

/// Monomials of weighted degree <= bound, sorted by (degree, grevlex).
std::vector<Monomial> monomials_up_to(const RingPtr& ring, const std::vector<int>& w,
                                      long bound) {
    const std::size_t n = ring->size();
    std::vector<Monomial> out;
    std::vector<uint32_t> idx(n, 0);
    while (true) {
        Monomial m(n);
        long deg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            m.e[i] = idx[i];
            deg += static_cast<long>(w[i]) * idx[i];
        }
        if (deg <= bound) out.push_back(std::move(m));
        std::size_t pos = 0;
        while (pos < n) {
            if (static_cast<long>(++idx[pos]) * w[pos] <= bound) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        long da = a.weighted_degree(w), db = b.weighted_degree(w);
        if (da != db) return da < db;
        return grevlex_less(a, b);
    });
    return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
    for (const auto& lt : lts)
        if (lt.divides(m)) return true;
    return false;
}

long max_relation_degree(const AlgebraPresentation& pres) {
    long d = 0;
    for (const auto& r : pres.relations) d = std::max(d, r.weighted_degree(pres.weights));
    return d;
}

void check_curve(const AlgebraPresentation& pres, const GroebnerBasis<Rational>& gb) {
    if (staircase_krull_dimension(leading_monomials(gb), pres.ring->size()) != 1)
        throw std::domain_error("not a curve presentation");
}

OracleResult assemble(long bound, const std::vector<long>& dim_f, const std::vector<long>& piv,
                      const AlgebraPresentation& pres) {
    OracleResult res;
    res.degree_bound = bound;
    for (long d = 0; d <= bound; ++d) res.per_degree.emplace_back(d, dim_f[d] - piv[d]);
    for (auto& [d, inc] : res.per_degree) res.value += inc;

    bool window_ok = bound + 1 >= res.stabilization_window;
    for (long d = bound - res.stabilization_window + 1; d <= bound && window_ok; ++d)
        if (res.per_degree[d].second != 0) window_ok = false;

    if (pres.graded) {
        long cert = graded_certificate_bound(pres);
        res.certified = bound >= cert;
        if (res.certified)
            for (long d = cert + 1; d <= bound; ++d)
                if (res.per_degree[d].second != 0)
                    throw std::logic_error("graded stabilization violated");
    }
    res.stabilized = res.certified || window_ok;
    return res;
}

/// Global-degree side: bases of A and Omega^1 accumulated by weighted total
/// degree. Rows straddling the report bound are kept by assembling over a
/// larger working bound.
OracleResult run_global(const AlgebraPresentation& pres, long bound) {
    const RingPtr& ring = pres.ring;
    const std::size_t n = ring->size();
    const std::vector<int>& w = pres.weights;
    const int max_w = *std::max_element(w.begin(), w.end());
    const long working = bound + max_relation_degree(pres) + max_w;

    const MonomialOrder order = MonomialOrder::wgrevlex(w);
    auto gb = groebner_basis(Ideal<Rational>(ring, pres.relations), order);
    check_curve(pres, gb);

    auto lts = leading_monomials(gb);
    std::vector<Monomial> staircase;
    for (const auto& m : monomials_up_to(ring, w, working))
        if (!divisible_by_any(m, lts)) staircase.push_back(m);

    struct Coord {
        Monomial s;
        std::size_t var;
        long ord;
    };
    std::vector<Coord> coords;
    for (const auto& s : staircase)
        for (std::size_t i = 0; i < n; ++i) {
            long ord = s.weighted_degree(w) + w[i];
            if (ord <= working) coords.push_back({s, i, ord});
        }
    std::stable_sort(coords.begin(), coords.end(), [&](const Coord& a, const Coord& b) {
        if (a.ord != b.ord) return a.ord > b.ord;
        if (!(a.s == b.s)) return grevlex_less(b.s, a.s);
        return a.var < b.var;
    });
    std::map<std::pair<std::vector<uint32_t>, std::size_t>, std::size_t> col_of;
    for (std::size_t c = 0; c < coords.size(); ++c) col_of[{coords[c].s.e, coords[c].var}] = c;

    auto emit_row = [&](const std::vector<QPoly>& components,
                        std::vector<Rational>& row) -> bool {
        row.assign(coords.size(), Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [m, c] : components[i].terms()) {
                auto it = col_of.find({m.e, i});
                if (it == col_of.end()) return false;  // beyond the working bound
                row[it->second] += c;
            }
        }
        return true;
    };

    std::vector<std::vector<Rational>> rows;
    std::vector<QPoly> comps(n, QPoly(ring));

    std::vector<std::vector<QPoly>> rel_diffs;
    for (const auto& rho : pres.relations) {
        std::vector<QPoly> d(n, QPoly(ring));
        for (std::size_t i = 0; i < n; ++i) d[i] = rho.derivative(i);
        rel_diffs.push_back(std::move(d));
    }
    for (const auto& s : staircase) {
        QPoly sp = QPoly::term(ring, s, Rational(1));
        for (const auto& d : rel_diffs) {
            for (std::size_t i = 0; i < n; ++i)
                comps[i] = d[i].is_zero() ? QPoly(ring) : normal_form(sp * d[i], gb);
            std::vector<Rational> row;
            if (emit_row(comps, row)) rows.push_back(std::move(row));
        }
    }
    for (const auto& s : staircase) {
        if (s.is_one()) continue;
        QPoly sp = QPoly::term(ring, s, Rational(1));
        for (std::size_t i = 0; i < n; ++i) {
            QPoly der = sp.derivative(i);
            comps[i] = der.is_zero() ? QPoly(ring) : normal_form(der, gb);
        }
        std::vector<Rational> row;
        if (emit_row(comps, row)) rows.push_back(std::move(row));
    }

    auto pivots = echelon_pivot_columns(rows);
    std::vector<long> dim_f(working + 1, 0), piv(working + 1, 0);
    for (const auto& c : coords) ++dim_f[c.ord];
    for (auto p : pivots) ++piv[coords[p].ord];
    return assemble(bound, dim_f, piv, pres);
}

/// Reduced-row-echelon accumulator over the staircase coordinates of the
/// truncated local algebra; rows are tagged with the order at which they
/// entered, yielding a basis adapted to the m-adic filtration.
class AdaptedBasis {
   public:
    explicit AdaptedBasis(std::size_t dim) : dim_(dim) {}

    /// Returns true if the vector enlarged the span; `label` is its order.
    bool insert(std::vector<Rational> v, long label) {
        reduce(v);
        std::size_t p = first_nonzero(v);
        if (p == dim_) return false;
        Rational inv = rational_inverse(v[p]);
        for (auto& c : v) c *= inv;
        for (auto& row : rows_)
            if (row.vec[p] != 0) {
                Rational f = row.vec[p];
                for (std::size_t j = 0; j < dim_; ++j) row.vec[j] -= f * v[j];
            }
        rows_.push_back({std::move(v), p, label});
        return true;
    }

    std::size_t size() const { return rows_.size(); }
    long label(std::size_t k) const { return rows_[k].label; }

    /// Coordinates of v in the adapted basis (v must lie in the span).
    std::vector<Rational> express(std::vector<Rational> v) const {
        std::vector<Rational> out(rows_.size(), Rational(0));
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            out[k] = v[rows_[k].pivot];
            if (out[k] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= out[k] * rows_[k].vec[j];
        }
        for (const auto& c : v)
            if (c != 0) throw std::logic_error("vector outside the adapted span");
        return out;
    }

   private:
    void reduce(std::vector<Rational>& v) const {
        for (const auto& row : rows_) {
            if (v[row.pivot] == 0) continue;
            Rational f = v[row.pivot];
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * row.vec[j];
        }
    }
    std::size_t first_nonzero(const std::vector<Rational>& v) const {
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) return j;
        return dim_;
    }

    struct Row {
        std::vector<Rational> vec;
        std::size_t pivot;
        long label;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
};

/// Germ side: the same cokernel, filtered by order at the origin. The model
/// space is the staircase span of the untruncated ideal up to a working
/// degree; the m-adic filtration is realized by an adapted basis built from
/// normal forms of high-degree monomials, scanned downward. Orders above the
/// report bound absorb all truncation junk and are not reported.
OracleResult run_germ(const AlgebraPresentation& pres, long bound) {
    const RingPtr& ring = pres.ring;
    const std::size_t n = ring->size();
    const std::vector<int>& w = pres.weights;
    const int max_w = *std::max_element(w.begin(), w.end());
    const long max_rel = max_relation_degree(pres);
    const long scan_top = bound + max_rel + 2 * max_w + 2;  // filtration scan depth
    const long model_top = scan_top + max_rel;              // coordinate space degree

    for (const auto& r : pres.relations)
        if (!(r.constant_coefficient() == Rational(0)))
            throw std::domain_error("relations do not vanish at the origin");

    const MonomialOrder order = MonomialOrder::wgrevlex(w);
    auto gb = groebner_basis(Ideal<Rational>(ring, pres.relations), order);
    check_curve(pres, gb);

    auto lts = leading_monomials(gb);
    auto all_monomials = monomials_up_to(ring, w, model_top);
    std::vector<Monomial> staircase;
    for (const auto& m : all_monomials)
        if (!divisible_by_any(m, lts)) staircase.push_back(m);
    const std::size_t dim = staircase.size();
    std::map<std::vector<uint32_t>, std::size_t> index_of;
    for (std::size_t k = 0; k < dim; ++k) index_of[staircase[k].e] = k;

    auto as_vector = [&](const QPoly& nf) {
        std::vector<Rational> v(dim, Rational(0));
        for (const auto& [m, c] : nf.terms()) v[index_of.at(m.e)] += c;
        return v;
    };

    // basis adapted to the m-adic filtration: normal forms of monomials of
    // order c enter at level c, scanned from the top down. Classes whose
    // order exceeds the scan depth (or which vanish in the germ) are caught
    // at high levels and absorbed there. For graded presentations the
    // filtration is the degree filtration and the staircase itself is
    // adapted.
    AdaptedBasis basis(dim);
    if (pres.graded) {
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<Rational> unit(dim, Rational(0));
            unit[k] = 1;
            basis.insert(std::move(unit), staircase[k].weighted_degree(w));
        }
    } else {
        for (long c = model_top; c >= 0 && basis.size() < dim; --c) {
            std::vector<bool> seen(dim, false);  // dedupe single-monomial forms
            for (const auto& m : all_monomials) {
                if (m.weighted_degree(w) != c) continue;
                QPoly nf = normal_form(QPoly::term(ring, m, Rational(1)), gb);
                if (nf.is_zero()) continue;
                if (nf.term_count() == 1) {
                    std::size_t k = index_of.at(nf.terms().begin()->first.e);
                    if (seen[k]) continue;
                    seen[k] = true;
                }
                basis.insert(as_vector(nf), c);
            }
        }
    }
    if (basis.size() != dim) throw std::logic_error("m-adic filtration basis incomplete");

    // free-module coordinates (k, i) with order label(k) + w_i. Columns are
    // sorted by ascending order: the truncated cohomology in order < c is
    // F/(W + F^(c)), i.e. rows act through their projection to low orders,
    // so pivots of the ascending echelon count the killed classes per order.
    struct Coord {
        std::size_t k, var;
        long ord;
    };
    std::vector<Coord> coords;
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < n; ++i) coords.push_back({k, i, basis.label(k) + w[i]});
    std::stable_sort(coords.begin(), coords.end(), [&](const Coord& a, const Coord& b) {
        if (a.ord != b.ord) return a.ord < b.ord;
        if (a.k != b.k) return a.k < b.k;
        return a.var < b.var;
    });
    std::vector<std::vector<std::size_t>> col_of(dim, std::vector<std::size_t>(n));
    for (std::size_t c = 0; c < coords.size(); ++c) col_of[coords[c].k][coords[c].var] = c;

    auto emit_row = [&](const std::vector<QPoly>& components) {
        std::vector<Rational> row(coords.size(), Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (components[i].is_zero()) continue;
            auto adapted = basis.express(as_vector(components[i]));
            for (std::size_t k = 0; k < dim; ++k)
                if (adapted[k] != 0) row[col_of[k][i]] += adapted[k];
        }
        return row;
    };

    std::vector<std::vector<Rational>> rows;
    std::vector<QPoly> comps(n, QPoly(ring));
    std::vector<std::vector<QPoly>> rel_diffs;
    for (const auto& rho : pres.relations) {
        std::vector<QPoly> d(n, QPoly(ring));
        for (std::size_t i = 0; i < n; ++i) d[i] = rho.derivative(i);
        rel_diffs.push_back(std::move(d));
    }
    for (const auto& s : staircase) {
        QPoly sp = QPoly::term(ring, s, Rational(1));
        if (s.weighted_degree(w) <= scan_top) {  // keep products inside the model
            for (const auto& d : rel_diffs) {
                for (std::size_t i = 0; i < n; ++i)
                    comps[i] = d[i].is_zero() ? QPoly(ring) : normal_form(sp * d[i], gb);
                rows.push_back(emit_row(comps));
            }
        }
        if (!s.is_one()) {
            for (std::size_t i = 0; i < n; ++i) {
                QPoly der = sp.derivative(i);
                comps[i] = der.is_zero() ? QPoly(ring) : normal_form(der, gb);
            }
            rows.push_back(emit_row(comps));
        }
    }

    auto pivots = echelon_pivot_columns(rows);
    const long top = model_top + max_w;
    std::vector<long> dim_f(top + 1, 0), piv(top + 1, 0);
    for (const auto& c : coords) ++dim_f[std::min(c.ord, top)];
    for (auto p : pivots) ++piv[std::min(coords[p].ord, top)];
    return assemble(bound, dim_f, piv, pres);
}

}  // namespace

AlgebraPresentation make_presentation(RingPtr ring, std::vector<QPoly> relations,
                                      std::vector<int> weights) {
    AlgebraPresentation pres;
    pres.ring = std::move(ring);
    if (weights.empty()) weights.assign(pres.ring->size(), 1);
    if (weights.size() != pres.ring->size())
        throw std::domain_error("one weight per variable required");
    for (int x : weights)
        if (x <= 0) throw std::domain_error("weights must be positive");
    pres.weights = std::move(weights);
    for (auto& r : relations) {
        if (r.is_zero()) continue;
        if (!same_ring(r.ring(), pres.ring)) throw std::domain_error("relation from wrong ring");
        bool homogeneous = true;
        long d = -1;
        for (const auto& [m, c] : r.terms()) {
            long dm = m.weighted_degree(pres.weights);
            if (d < 0) d = dm;
            homogeneous = homogeneous && dm == d;
        }
        pres.graded = pres.graded && homogeneous;
        pres.relations.push_back(std::move(r));
    }
    return pres;
}

long graded_certificate_bound(const AlgebraPresentation& pres) {
    long total = 0;
    for (const auto& r : pres.relations) total += r.weighted_degree(pres.weights);
    return 2 * total;
}

OracleResult truncated_h1(const AlgebraPresentation& pres, long degree_bound) {
    if (degree_bound < 4) throw std::domain_error("degree bound too small");
    return run_global(pres, degree_bound);
}

OracleResult truncated_mu_prime(const AlgebraPresentation& pres, long degree_bound) {
    if (degree_bound < 4) throw std::domain_error("degree bound too small");
    return run_germ(pres, degree_bound);
}

}  // namespace curveh1

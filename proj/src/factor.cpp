#include "curveh1/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "curveh1/resultant.hpp"

namespace curveh1 {

namespace {

// ---------------------------------------------------------------------------
// multivariate gcd: primitive PRS on the highest occurring variable
// ---------------------------------------------------------------------------

int main_variable(const QPoly& a, const QPoly& b) {
    for (std::size_t i = a.ring()->size(); i-- > 0;)
        if (a.involves(i) || b.involves(i)) return static_cast<int>(i);
    return -1;
}

QPoly coefficient_content(const QPoly& f, std::size_t var) {
    QPoly c(f.ring());
    long d = f.degree_in(var);
    for (long k = 0; k <= d; ++k) {
        QPoly ck = f.coefficient_in(var, static_cast<uint32_t>(k));
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : multivariate_gcd(c, ck);
        if (c.is_constant()) break;
    }
    return normalize_primitive(c);
}

/// Pseudo-remainder of a by b in the variable var (both nonzero,
/// deg_var(a) >= deg_var(b) not required).
QPoly pseudo_remainder(QPoly a, const QPoly& b, std::size_t var) {
    const long db = b.degree_in(var);
    QPoly lb = b.coefficient_in(var, static_cast<uint32_t>(db));
    QPoly xv = QPoly::variable(a.ring(), var);
    while (!a.is_zero()) {
        const long da = a.degree_in(var);
        if (da < db) break;
        QPoly la = a.coefficient_in(var, static_cast<uint32_t>(da));
        a = a * lb - b * la * xv.pow(static_cast<unsigned>(da - db));
    }
    return a;
}

}  // namespace

QPoly multivariate_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    int mv = main_variable(a, b);
    if (mv < 0) return QPoly::constant(a.ring(), Rational(1));
    const std::size_t var = static_cast<std::size_t>(mv);
    if (!a.involves(var) || !b.involves(var)) {
        // one side is free of the main variable: gcd divides its content
        const QPoly& free_side = a.involves(var) ? b : a;
        const QPoly& other = a.involves(var) ? a : b;
        return multivariate_gcd(free_side, coefficient_content(other, var));
    }

    QPoly ca = coefficient_content(a, var), cb = coefficient_content(b, var);
    QPoly f = exact_divide(a, ca), g = exact_divide(b, cb);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (!g.is_zero()) {
        QPoly r = pseudo_remainder(f, g, var);
        f = std::move(g);
        if (r.is_zero()) {
            g = r;
        } else if (!r.involves(var)) {
            // nontrivial remainder free of var: primitive parts are coprime
            return normalize_primitive(multivariate_gcd(ca, cb));
        } else {
            g = exact_divide(r, coefficient_content(r, var));
            g = normalize_primitive(g);
        }
    }
    QPoly prim = exact_divide(f, coefficient_content(f, var));
    return normalize_primitive(prim * multivariate_gcd(ca, cb));
}

QPoly squarefree_part(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    QPoly g(f.ring());
    for (std::size_t i = 0; i < f.ring()->size(); ++i) {
        QPoly d = f.derivative(i);
        if (d.is_zero()) continue;
        g = g.is_zero() ? multivariate_gcd(f, d) : multivariate_gcd(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) return normalize_primitive(f);  // constant input
    return normalize_primitive(exact_divide(normalize_primitive(f), g));
}

// ---------------------------------------------------------------------------
// univariate factorization over Q (Zassenhaus)
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Integer>;  // ascending, over Z

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long z_deg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_trim(r);
    return r;
}

Integer z_content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 0 ? Integer(1) : g;
}

ZPoly z_primitive(ZPoly p) {
    Integer c = z_content(p);
    if (!p.empty() && sgn(p.back()) < 0) c = -c;
    for (auto& x : p) x /= c;
    return p;
}

/// Exact division over Z; returns false if not divisible.
bool z_try_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    while (z_deg(r) >= z_deg(b)) {
        Integer qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (rem != 0) return false;
        std::size_t shift = r.size() - b.size();
        q[shift] = qc;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= qc * b[i];
        z_trim(r);
        if (r.empty()) break;
    }
    z_trim(q);
    return r.empty();
}

ZPoly to_integer_poly(const UniPoly<Rational>& f) {
    Integer den_lcm = 1;
    for (const auto& c : f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(f.size());
    for (const auto& c : f) {
        Rational s = c * den_lcm;
        z.push_back(s.get_num());
    }
    z_trim(z);
    return z_primitive(std::move(z));
}

UniPoly<Rational> to_monic_rational(const ZPoly& z) {
    UniPoly<Rational> r;
    r.reserve(z.size());
    Rational lc(z.back());
    for (const auto& c : z) r.push_back(Rational(c) / lc);
    return r;
}

// --- arithmetic mod a small prime (int64) ---

using PPoly = std::vector<int64_t>;  // ascending, coefficients in [0, p)

void p_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int64_t p_inv(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

PPoly p_mod(const ZPoly& f, int64_t p) {
    PPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer m = f[i] % p;
        int64_t v = static_cast<int64_t>(m.get_si());
        r[i] = ((v % p) + p) % p;
    }
    p_trim(r);
    return r;
}

PPoly p_monic(PPoly f, int64_t p) {
    p_trim(f);
    if (f.empty()) return f;
    int64_t inv = p_inv(f.back(), p);
    for (auto& c : f) c = (c * inv) % p;
    return f;
}

PPoly p_mul(const PPoly& a, const PPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    p_trim(r);
    return r;
}

PPoly p_rem(PPoly a, const PPoly& b, int64_t p) {
    int64_t inv = p_inv(b.back(), p);
    while (a.size() >= b.size()) {
        int64_t t = (a.back() * inv) % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - t * b[i]) % p + p) % p;
        p_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly p_gcd(PPoly a, PPoly b, int64_t p) {
    p_trim(a);
    p_trim(b);
    while (!b.empty()) {
        PPoly r = p_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(a, p);
}

PPoly p_derivative(const PPoly& f, int64_t p) {
    if (f.size() <= 1) return {};
    PPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * static_cast<int64_t>(i % p)) % p;
    p_trim(r);
    return r;
}

PPoly p_powmod_x(int64_t e, const PPoly& g, int64_t p) {
    // x^e mod g by square and multiply
    PPoly base{0, 1}, acc{1};
    base = p_rem(base, g, p);
    while (e) {
        if (e & 1) acc = p_rem(p_mul(acc, base, p), g, p);
        base = p_rem(p_mul(base, base, p), g, p);
        e >>= 1;
    }
    return acc;
}

PPoly p_div_exact(const PPoly& num0, const PPoly& den, int64_t p) {
    PPoly num = num0, quot(num0.size() - den.size() + 1, 0);
    int64_t inv = p_inv(den.back(), p);
    while (num.size() >= den.size() && !num.empty()) {
        int64_t t = (num.back() * inv) % p;
        std::size_t shift = num.size() - den.size();
        quot[shift] = t;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] = ((num[shift + i] - t * den[i]) % p + p) % p;
        p_trim(num);
    }
    p_trim(quot);
    return quot;
}

/// Berlekamp factorization of a squarefree monic polynomial mod a small
/// prime. Deterministic: splits with gcd(f, v - s) over all s in F_p.
std::vector<PPoly> berlekamp(const PPoly& f, int64_t p) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};

    // rows of Q: x^(ip) mod f
    std::vector<PPoly> qrows(n);
    for (std::size_t i = 0; i < n; ++i)
        qrows[i] = p_powmod_x(static_cast<int64_t>(i) * p, f, p);

    // nullspace of (Q - I) acting on row vectors: solve v * (Q - I) = 0
    std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < qrows[i].size(); ++j) a[j][i] = qrows[i][j];
        a[i][i] = ((a[i][i] - 1) % p + p) % p;
    }
    // Gaussian elimination, tracking pivot columns
    std::vector<int> pivot_of_row(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        int64_t inv = p_inv(a[rank][col], p);
        for (auto& x : a[rank]) x = ((x * inv) % p + p) % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            int64_t c = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] = ((a[i][j] - c * a[rank][j]) % p + p) % p;
        }
        pivot_of_row[rank] = static_cast<int>(col);
        ++rank;
    }
    std::vector<PPoly> nullspace;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[pivot_of_row[r]] = true;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        PPoly v(n, 0);
        v[col] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_of_row[r]] = ((-a[r][col]) % p + p) % p;
        p_trim(v);
        nullspace.push_back(std::move(v));
    }

    const std::size_t nfactors = nullspace.size();
    std::vector<PPoly> factors{f};
    for (const auto& v : nullspace) {
        if (factors.size() >= nfactors) break;
        if (v.size() <= 1) continue;  // constant vector splits nothing
        std::vector<PPoly> next;
        for (const auto& h : factors) {
            PPoly rem_h = h;
            for (int64_t s = 0; s < p && rem_h.size() > 1; ++s) {
                PPoly vs = v;
                vs[0] = ((vs[0] - s) % p + p) % p;
                p_trim(vs);
                if (vs.empty()) continue;
                PPoly g = p_gcd(rem_h, vs, p);
                if (g.size() > 1 && g.size() < rem_h.size()) {
                    next.push_back(g);
                    rem_h = p_monic(p_div_exact(rem_h, g, p), p);
                }
            }
            if (rem_h.size() > 1) next.push_back(rem_h);
        }
        factors = std::move(next);
    }
    return factors;
}

// --- arithmetic mod p^k with mpz ---

using MPoly = std::vector<Integer>;  // ascending, coefficients mod m

void m_trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

MPoly m_reduce(MPoly f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    m_trim(f);
    return f;
}

MPoly m_mul(const MPoly& a, const MPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return m_reduce(std::move(r), m);
}

MPoly m_add(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return m_reduce(std::move(r), m);
}

MPoly m_sub(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return m_reduce(std::move(r), m);
}

/// divmod by a monic polynomial, coefficients mod m
std::pair<MPoly, MPoly> m_divmod_monic(MPoly a, const MPoly& b, const Integer& m) {
    MPoly q;
    m_trim(a);
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Integer(0));
    while (a.size() >= b.size() && !a.empty()) {
        Integer t = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= t * b[i];
            a[shift + i] %= m;
            if (a[shift + i] < 0) a[shift + i] += m;
        }
        m_trim(a);
    }
    m_trim(q);
    return {q, a};
}

MPoly symmetric_lift(const MPoly& f, const Integer& m) {
    MPoly r = f;
    Integer half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    return r;
}

struct HenselPair {
    MPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod modulus)
};

/// One quadratic Hensel step: modulus m -> m^2 (h monic).
HenselPair hensel_step(const MPoly& f, HenselPair cur, const Integer& m) {
    Integer m2 = m * m;
    MPoly e = m_sub(f, m_mul(cur.g, cur.h, m2), m2);
    auto [q, r] = m_divmod_monic(m_mul(cur.s, e, m2), cur.h, m2);
    MPoly gs = m_add(m_add(cur.g, m_mul(cur.t, e, m2), m2), m_mul(q, cur.g, m2), m2);
    MPoly hs = m_add(cur.h, r, m2);
    MPoly b = m_sub(m_add(m_mul(cur.s, gs, m2), m_mul(cur.t, hs, m2), m2), MPoly{Integer(1)}, m2);
    auto [c, d] = m_divmod_monic(m_mul(cur.s, b, m2), hs, m2);
    MPoly ss = m_sub(cur.s, d, m2);
    MPoly ts = m_sub(m_sub(cur.t, m_mul(cur.t, b, m2), m2), m_mul(c, gs, m2), m2);
    return {gs, hs, ss, ts};
}

/// Lifts a monic mod-p factorization of monic f to mod p^k (k a power of 2
/// times whatever is needed: we square the modulus until it reaches target).
std::vector<MPoly> hensel_lift_list(const MPoly& f, std::vector<PPoly> fac, int64_t p,
                                    const Integer& target) {
    if (fac.size() == 1) {
        MPoly r(f);
        return {m_reduce(std::move(r), target)};
    }
    std::size_t halfn = fac.size() / 2;
    std::vector<PPoly> left(fac.begin(), fac.begin() + halfn);
    std::vector<PPoly> right(fac.begin() + halfn, fac.end());

    auto prod_mod_p = [&](const std::vector<PPoly>& fs) {
        PPoly acc{1};
        for (const auto& g : fs) acc = p_mul(acc, g, p);
        return acc;
    };
    PPoly gp = prod_mod_p(left), hp = prod_mod_p(right);

    // Bezout mod p via extended Euclid
    auto to_m = [](const PPoly& f_) {
        MPoly r(f_.size());
        for (std::size_t i = 0; i < f_.size(); ++i) r[i] = f_[i];
        return r;
    };
    PPoly s{0}, t{0};
    {
        PPoly a = gp, b = hp, s0{1}, s1{}, t0{}, t1{1};
        while (!b.empty()) {
            // divmod mod p
            PPoly q, r = a;
            q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
            int64_t inv = p_inv(b.back(), p);
            while (r.size() >= b.size() && !r.empty()) {
                int64_t tt = (r.back() * inv) % p;
                std::size_t shift = r.size() - b.size();
                if (shift < q.size()) q[shift] = tt;
                for (std::size_t i = 0; i < b.size(); ++i)
                    r[shift + i] = ((r[shift + i] - tt * b[i]) % p + p) % p;
                p_trim(r);
            }
            p_trim(q);
            a = std::move(b);
            b = std::move(r);
            PPoly s2 = s0, t2 = t0;
            // s2 = s0 - q*s1, t2 = t0 - q*t1
            {
                PPoly qs = p_mul(q, s1, p), qt = p_mul(q, t1, p);
                s2.resize(std::max(s2.size(), qs.size()), 0);
                for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
                p_trim(s2);
                t2.resize(std::max(t2.size(), qt.size()), 0);
                for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
                p_trim(t2);
            }
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // a is the gcd (a unit); normalize s0, t0 by its inverse
        int64_t inv = p_inv(a.empty() ? 1 : a[0], p);
        for (auto& c : s0) c = (c * inv) % p;
        for (auto& c : t0) c = (c * inv) % p;
        s = std::move(s0);
        t = std::move(t0);
    }

    HenselPair pair{to_m(gp), to_m(hp), to_m(s), to_m(t)};
    Integer mod(p);
    while (mod < target) {
        pair = hensel_step(m_reduce(MPoly(f), mod * mod), pair, mod);
        mod *= mod;
    }
    pair.g = m_reduce(std::move(pair.g), target);
    pair.h = m_reduce(std::move(pair.h), target);

    auto lifted_left = hensel_lift_list(pair.g, left, p, target);
    auto lifted_right = hensel_lift_list(pair.h, right, p, target);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

/// Factorization of a squarefree primitive integer polynomial into
/// irreducible primitive integer polynomials.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& g0) {
    if (z_deg(g0) <= 1) return {g0};

    // monic-ize: g*(x) = lc^(n-1) * g(x / lc) is integer and monic
    const Integer lc = g0.back();
    const long n = z_deg(g0);
    ZPoly gm(g0.size());
    gm[n] = 1;
    Integer pw = 1;  // lc^(n-1-i), built downward from i = n-1
    for (long i = n - 1; i >= 0; --i) {
        gm[i] = g0[i] * pw;
        pw *= lc;
    }

    // choose a prime keeping gm squarefree
    static const int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                     53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
    int64_t p = 0;
    PPoly gp;
    for (int64_t cand : primes) {
        if (gm.back() % cand == 0) continue;
        PPoly r = p_mod(gm, cand);
        if (z_deg(gm) != static_cast<long>(r.size()) - 1) continue;
        PPoly d = p_derivative(r, cand);
        if (d.empty()) continue;
        if (p_gcd(r, d, cand).size() == 1) {
            p = cand;
            gp = p_monic(r, cand);
            break;
        }
    }
    if (p == 0) throw std::runtime_error("no good prime found for factorization");

    std::vector<PPoly> modular = berlekamp(gp, p);
    if (modular.size() == 1) return {g0};
    std::sort(modular.begin(), modular.end());

    // Landau-Mignotte style bound on factor coefficients of gm
    Integer height = 0;
    for (const auto& c : gm) {
        Integer a = abs(c);
        if (a > height) height = a;
    }
    Integer bound = height;
    for (long i = 0; i < n + 1; ++i) bound *= 2;  // 2^(n+1) * H
    Integer target(p);
    while (target < 2 * bound + 1) target *= p;

    MPoly gm_m(gm.size());
    for (std::size_t i = 0; i < gm.size(); ++i) gm_m[i] = gm[i];
    // the lift works with the monic image of gm mod target
    std::vector<MPoly> lifted = hensel_lift_list(m_reduce(MPoly(gm_m), target), modular, p, target);
    {
        MPoly prod{Integer(1)};
        for (const auto& lf : lifted) prod = m_mul(prod, lf, target);
        if (m_reduce(MPoly(gm_m), target) != prod)
            throw std::runtime_error("hensel lifting failed");
    }

    // subset recombination over the monic polynomial gm
    std::vector<ZPoly> monic_factors;
    std::vector<MPoly> pool = lifted;
    ZPoly rem = gm;
    bool progress = true;
    while (progress && !pool.empty()) {
        progress = false;
        for (std::size_t size = 1; size <= pool.size() / 2 + (pool.size() & 1) && !progress; ++size) {
            std::vector<std::size_t> comb(size);
            std::iota(comb.begin(), comb.end(), 0);
            while (true) {
                MPoly cand{Integer(1)};
                for (auto idx : comb) cand = m_mul(cand, pool[idx], target);
                MPoly sym = symmetric_lift(cand, target);
                ZPoly zc(sym.begin(), sym.end());
                z_trim(zc);
                ZPoly q;
                if (!zc.empty() && z_try_divide(rem, zc, q)) {
                    monic_factors.push_back(z_primitive(zc));
                    rem = q;
                    std::vector<MPoly> next_pool;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (std::find(comb.begin(), comb.end(), i) == comb.end())
                            next_pool.push_back(pool[i]);
                    pool = std::move(next_pool);
                    progress = true;
                    break;
                }
                // next combination
                long pos = static_cast<long>(size) - 1;
                while (pos >= 0 && comb[pos] == pool.size() - size + pos) --pos;
                if (pos < 0) break;
                ++comb[pos];
                for (std::size_t i = pos + 1; i < size; ++i) comb[i] = comb[i - 1] + 1;
            }
        }
    }
    if (z_deg(rem) >= 1) monic_factors.push_back(z_primitive(rem));

    // map factors of gm back to factors of g0: h(x) -> primitive(h(lc x))
    std::vector<ZPoly> out;
    for (const auto& h : monic_factors) {
        ZPoly back(h.size());
        Integer pw2 = 1;
        for (std::size_t i = 0; i < h.size(); ++i) {
            back[i] = h[i] * pw2;
            pw2 *= lc;
        }
        out.push_back(z_primitive(std::move(back)));
    }
    return out;
}

}  // namespace

std::vector<FactorOf<UniPoly<Rational>>> factor_univariate(const UniPoly<Rational>& f) {
    UniPoly<Rational> p = f;
    uni_trim(p);
    if (p.empty()) throw std::domain_error("factorization of zero polynomial");
    if (uni_degree(p) > 32) throw std::domain_error("univariate factorization degree cap exceeded");
    std::vector<FactorOf<UniPoly<Rational>>> out;
    if (uni_degree(p) == 0) return out;

    // Yun squarefree decomposition over Q
    UniPoly<Rational> a = uni_monic(p);
    UniPoly<Rational> d = uni_derivative(a);
    UniPoly<Rational> g = uni_gcd(a, d);
    UniPoly<Rational> b = uni_divmod(a, g).first;
    UniPoly<Rational> c = uni_divmod(d, g).first;
    int mult = 1;
    std::vector<std::pair<UniPoly<Rational>, int>> squarefree_parts;
    while (uni_degree(b) > 0) {
        UniPoly<Rational> diff = uni_sub(c, uni_derivative(b));
        UniPoly<Rational> part = uni_gcd(b, diff);
        if (uni_degree(part) > 0) squarefree_parts.emplace_back(part, mult);
        b = uni_divmod(b, part).first;
        c = uni_divmod(diff, part).first;
        ++mult;
    }

    for (const auto& [part, multiplicity] : squarefree_parts) {
        ZPoly z = to_integer_poly(part);
        for (const auto& zf : factor_squarefree_z(z))
            out.push_back({to_monic_rational(zf), multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.factor.size() != y.factor.size()) return x.factor.size() < y.factor.size();
        return x.factor < y.factor;
    });
    return out;
}

std::vector<FactorOf<QPoly>> factor_univariate(const QPoly& f, std::size_t var) {
    auto factors = factor_univariate(to_univariate(f, var));
    std::vector<FactorOf<QPoly>> out;
    out.reserve(factors.size());
    for (auto& [fac, mult] : factors)
        out.push_back({from_univariate(fac, f.ring(), var), mult});
    return out;
}

// ---------------------------------------------------------------------------
// factorization over Q(alpha): Trager's norm-and-factor
// ---------------------------------------------------------------------------

std::vector<FactorOf<UniPoly<NFE>>> squarefree_decomposition_ext(const UniPoly<NFE>& f) {
    UniPoly<NFE> a = uni_monic(f);
    std::vector<FactorOf<UniPoly<NFE>>> parts;
    UniPoly<NFE> d = uni_derivative(a);
    UniPoly<NFE> g = uni_gcd(a, d);
    UniPoly<NFE> b = uni_divmod(a, g).first;
    UniPoly<NFE> c = uni_divmod(d, g).first;
    int mult = 1;
    while (uni_degree(b) > 0) {
        UniPoly<NFE> diff = uni_sub(c, uni_derivative(b));
        UniPoly<NFE> part = uni_gcd(b, diff);
        if (uni_degree(part) > 0) parts.push_back({part, mult});
        b = uni_divmod(b, part).first;
        c = uni_divmod(diff, part).first;
        ++mult;
    }
    return parts;
}

namespace {

/// g(y - s*alpha) over Q(alpha).
UniPoly<NFE> shift_by_generator(const UniPoly<NFE>& g, const NumberFieldPtr& field, long s) {
    NFE alpha = NFE::generator(field);
    NFE offset = NFE(Rational(-s)) * alpha;
    // Horner: g(y + offset)
    UniPoly<NFE> result;
    for (std::size_t i = g.size(); i-- > 0;) {
        // result = result * (y + offset) + g[i]
        UniPoly<NFE> shifted(result.size() + 1, NFE(0));
        for (std::size_t j = 0; j < result.size(); ++j) {
            shifted[j + 1] = shifted[j + 1] + result[j];
            shifted[j] = shifted[j] + result[j] * offset;
        }
        if (shifted.empty()) shifted.push_back(NFE(0));
        shifted[0] = shifted[0] + g[i];
        uni_trim(shifted);
        result = std::move(shifted);
    }
    return result;
}

/// Norm of h over Q: Res_t(minpoly(t), h with alpha replaced by t).
UniPoly<Rational> field_norm(const UniPoly<NFE>& h, const NumberFieldPtr& field) {
    auto ring = make_ring({"t", "y"});
    QPoly hp(ring);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& coeffs = h[i].coeffs();
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            Monomial m(2);
            m.e[0] = static_cast<uint32_t>(j);
            m.e[1] = static_cast<uint32_t>(i);
            hp.add_term(m, coeffs[j]);
        }
    }
    QPoly mp(ring);
    for (std::size_t j = 0; j < field->minpoly.size(); ++j) {
        if (field->minpoly[j] == 0) continue;
        Monomial m(2);
        m.e[0] = static_cast<uint32_t>(j);
        mp.add_term(m, field->minpoly[j]);
    }
    QPoly res = sylvester_resultant(mp, hp, 0);
    return to_univariate(res, 1);
}

}  // namespace

std::vector<FactorOf<UniPoly<NFE>>> factor_univariate_ext(const UniPoly<NFE>& f,
                                                          const NumberFieldPtr& field) {
    UniPoly<NFE> p = f;
    uni_trim(p);
    if (p.empty()) throw std::domain_error("factorization of zero polynomial");
    std::vector<FactorOf<UniPoly<NFE>>> out;
    if (uni_degree(p) == 0) return out;

    if (!field) {
        UniPoly<Rational> q;
        q.reserve(p.size());
        for (const auto& c : p) q.push_back(c.rational_value());
        for (auto& [fac, mult] : factor_univariate(q)) {
            UniPoly<NFE> lifted;
            lifted.reserve(fac.size());
            for (auto& c : fac) lifted.push_back(NFE(c));
            out.push_back({std::move(lifted), mult});
        }
        return out;
    }

    for (auto& [part, mult] : squarefree_decomposition_ext(p)) {
        if (uni_degree(part) == 1) {
            out.push_back({uni_monic(part), mult});
            continue;
        }
        bool done = false;
        for (long s = 0; s <= 12 && !done; s = (s > 0 ? -s : -s + 1)) {
            UniPoly<NFE> shifted = shift_by_generator(part, field, s);
            UniPoly<Rational> norm = field_norm(shifted, field);
            if (uni_degree(uni_gcd(norm, uni_derivative(norm))) != 0) continue;
            NFE alpha = NFE::generator(field);
            for (auto& [nf, nm] : factor_univariate(norm)) {
                // candidate factor: gcd(part, N_j(y + s*alpha))
                UniPoly<NFE> lifted;
                lifted.reserve(nf.size());
                for (auto& c : nf) lifted.push_back(NFE(c));
                UniPoly<NFE> unshifted = [&] {
                    // substitute y -> y + s*alpha
                    NFE offset = NFE(Rational(s)) * alpha;
                    UniPoly<NFE> result;
                    for (std::size_t i = lifted.size(); i-- > 0;) {
                        UniPoly<NFE> next(result.size() + 1, NFE(0));
                        for (std::size_t j = 0; j < result.size(); ++j) {
                            next[j + 1] = next[j + 1] + result[j];
                            next[j] = next[j] + result[j] * offset;
                        }
                        if (next.empty()) next.push_back(NFE(0));
                        next[0] = next[0] + lifted[i];
                        uni_trim(next);
                        result = std::move(next);
                    }
                    return result;
                }();
                UniPoly<NFE> g = uni_gcd(part, unshifted);
                if (uni_degree(g) >= 1) out.push_back({g, mult});
            }
            done = true;
        }
        if (!done) throw std::runtime_error("no squarefree norm found");
    }
    return out;
}

}  // namespace curveh1

#include <doctest.h>

#include <algorithm>

#include "curveh1/groebner.hpp"
#include "curveh1/polyops.hpp"
#include "test_util.hpp"

using namespace curveh1;
using curveh1::testing::XY;
using curveh1::testing::random_poly;

TEST_CASE("reduced basis examples") {
    XY t;
    // (x^2, y - x^2), lex y > x: reduced basis {x^2, y}
    auto gb = groebner_basis(Ideal<Rational>(t.ring, {t.x * t.x, t.y - t.x * t.x}),
                             MonomialOrder::lex({1, 0}));
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == t.x * t.x);
    CHECK(gb.basis[1] == t.y);

    // unit ideal
    auto unit = groebner_basis(Ideal<Rational>(t.ring, {t.one}), MonomialOrder::grevlex());
    CHECK(unit.is_unit_ideal());

    // principal ideal is its own basis
    QPoly cusp = t.y * t.y - t.x.pow(3);
    auto pr = groebner_basis(Ideal<Rational>(t.ring, {cusp}), MonomialOrder::grevlex());
    REQUIRE(pr.basis.size() == 1);
    CHECK(normalize_primitive(pr.basis[0]) == normalize_primitive(cusp));
}

TEST_CASE("normal form examples and idempotence") {
    XY t;
    auto gb = groebner_basis(Ideal<Rational>(t.ring, {t.x * t.x, t.y}), MonomialOrder::grevlex());
    CHECK(normal_form(t.x.pow(3), gb).is_zero());
    CHECK(normal_form(t.x + t.one, gb) == t.x + t.one);

    auto cusp = groebner_basis(Ideal<Rational>(t.ring, {t.y * t.y - t.x.pow(3)}),
                               MonomialOrder::lex({1, 0}));
    CHECK(normal_form(t.y * t.y, cusp) == t.x.pow(3));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        QPoly p = random_poly(t.ring, rng);
        QPoly nf = normal_form(p, cusp);
        CHECK(normal_form(nf, cusp) == nf);
    }
}

TEST_CASE("ideal membership of the original generators") {
    XY t;
    std::mt19937 rng(17);
    int done = 0;
    while (done < 5) {
        std::vector<QPoly> gens{random_poly(t.ring, rng), random_poly(t.ring, rng),
                                random_poly(t.ring, rng)};
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [](const QPoly& g) { return g.is_zero(); }),
                   gens.end());
        if (gens.empty()) continue;
        auto gb = groebner_basis(Ideal<Rational>(t.ring, gens), MonomialOrder::grevlex());
        for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
        ++done;
    }
}

TEST_CASE("reduced basis is order-insensitive to generator shuffles") {
    XY t;
    std::vector<QPoly> gens{t.y * t.y - t.x.pow(3), t.x * t.y - t.x, t.x * t.x - t.y};
    auto gb1 = groebner_basis(Ideal<Rational>(t.ring, gens), MonomialOrder::grevlex());
    std::mt19937 rng(23);
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        auto gb2 = groebner_basis(Ideal<Rational>(t.ring, gens), MonomialOrder::grevlex());
        REQUIRE(gb1.basis.size() == gb2.basis.size());
        for (std::size_t i = 0; i < gb1.basis.size(); ++i) CHECK(gb1.basis[i] == gb2.basis[i]);
    }
}

TEST_CASE("staircase dimensions") {
    XY t;
    auto gb = groebner_basis(Ideal<Rational>(t.ring, {t.x * t.x, t.y}), MonomialOrder::grevlex());
    auto st = quotient_dimension(gb);
    REQUIRE(st.finite);
    CHECK(st.dimension == 2);
    REQUIRE(st.standard_monomials.size() == 2);
    CHECK(st.standard_monomials[0].is_one());
    CHECK(st.standard_monomials[1] == Monomial({1, 0}));

    auto inf = groebner_basis(Ideal<Rational>(t.ring, {t.y * t.y - t.x.pow(3)}),
                              MonomialOrder::grevlex());
    CHECK_FALSE(quotient_dimension(inf).finite);

    auto pt = groebner_basis(Ideal<Rational>(t.ring, {t.x, t.y}), MonomialOrder::grevlex());
    auto stp = quotient_dimension(pt);
    REQUIRE(stp.finite);
    CHECK(stp.dimension == 1);
}

namespace {

/// Brute-force quotient dimension: multiples m*g are row-reduced against the
/// monomial space, columns ordered by descending degree so that pivots of
/// degree <= deg count the ideal's intersection with that truncation. The
/// rows extend past the report degree to absorb boundary effects.
long brute_force_dimension(const std::vector<QPoly>& gens, const RingPtr& ring, long deg) {
    const long cap = deg + 6;
    std::vector<Monomial> monos;
    for (long dx = 0; dx <= cap; ++dx)
        for (long dy = 0; dy + dx <= cap; ++dy)
            monos.push_back(Monomial({static_cast<uint32_t>(dx), static_cast<uint32_t>(dy)}));
    std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return grevlex_less(a, b);
    });
    std::map<std::vector<uint32_t>, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i].e] = i;

    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        for (const auto& m : monos) {
            if (m.degree() + g.degree() > cap) continue;
            std::vector<Rational> row(monos.size(), Rational(0));
            for (const auto& [gm, gc] : g.terms()) row[idx.at((m * gm).e)] += gc;
            rows.push_back(std::move(row));
        }
    }
    // plain rational row reduction, counting pivots of degree <= deg
    long low_monos = 0, low_pivots = 0;
    for (const auto& m : monos)
        if (m.degree() <= deg) ++low_monos;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < monos.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < monos.size(); ++j) rows[i][j] -= f * rows[rank][j];
        }
        if (monos[col].degree() <= deg) ++low_pivots;
        ++rank;
    }
    return low_monos - low_pivots;
}

}  // namespace

TEST_CASE("quotient dimension agrees with brute-force linear algebra") {
    XY t;
    std::vector<std::vector<QPoly>> ideals = {
        {t.x * t.x, t.y},
        {t.x.pow(3), t.y * t.y},
        {t.x * t.x + t.y, t.y * t.y + t.x},
        {t.y - t.x * t.x, t.x.pow(3) - t.one},
    };
    for (const auto& gens : ideals) {
        auto gb = groebner_basis(Ideal<Rational>(t.ring, gens), MonomialOrder::grevlex());
        auto st = quotient_dimension(gb);
        REQUIRE(st.finite);
        CHECK(st.dimension == brute_force_dimension(gens, t.ring, 2 * st.dimension + 2));
    }
}

TEST_CASE("elimination") {
    XY t;
    // eliminate((y - x^2, x - 1), keep {y}) = (y - 1)
    auto el = eliminate(Ideal<Rational>(t.ring, {t.y - t.x * t.x, t.x - t.one}), {1});
    REQUIRE(el.size() == 1);
    CHECK(el[0] == t.y - t.one);

    // eliminate((f - t, f_x, f_y), keep {t}) = (t) for the cusp
    auto big = make_ring({"x", "y", "t"});
    QPoly x = QPoly::variable(big, 0), y = QPoly::variable(big, 1), tt = QPoly::variable(big, 2);
    QPoly f = y * y - x.pow(3);
    auto el2 = eliminate(
        Ideal<Rational>(big, {f - tt, f.derivative(0), f.derivative(1)}), {2});
    REQUIRE(el2.size() == 1);
    CHECK(el2[0] == tt);

    auto el3 = eliminate(Ideal<Rational>(big, {QPoly::constant(big, 1)}), {2});
    REQUIRE(el3.size() == 1);
    CHECK(el3[0].is_constant());
}

TEST_CASE("pair budget aborts") {
    XY t;
    GroebnerOptions opts;
    opts.pair_budget = 0;
    CHECK_THROWS_WITH_AS(
        groebner_basis(Ideal<Rational>(t.ring, {t.x * t.y - t.one, t.x * t.x + t.y}),
                       MonomialOrder::grevlex(), opts),
        "budget exceeded", std::runtime_error);
}

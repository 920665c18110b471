#include <doctest.h>

#include "curveh1/singular.hpp"
#include "test_util.hpp"

using namespace curveh1;
using curveh1::testing::XY;

TEST_CASE("singular points") {
    XY t;
    auto pts = singular_points(t.y * t.y - t.x.pow(3));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].is_rational());
    CHECK(pts[0].x == NFE(0));
    CHECK(pts[0].y == NFE(0));

    // f_x vanishes at x = 0 and x = -2/3, but only the origin is on the curve
    pts = singular_points(t.y * t.y - t.x.pow(3) - t.x * t.x);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == NFE(0));

    CHECK(singular_points(t.x * t.x + t.y * t.y - t.one).empty());

    CHECK_THROWS_WITH_AS(singular_points(t.x * t.x * t.y), "curve not reduced",
                         std::domain_error);
}

TEST_CASE("singular points in extensions") {
    XY t;
    // nodes at (±sqrt 2, 0)
    QPoly f = (t.y - t.x * t.x + t.c(2)) * (t.y + t.x * t.x - t.c(2));
    auto pts = singular_points(f);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].orbit_size() == 2);
    CHECK_FALSE(pts[0].is_rational());

    // both coordinates irrational and independent: needs a tower
    QPoly g = (t.y * t.y - t.c(3)) * (t.y * t.y - t.c(3)) + (t.x * t.x - t.c(2)) * (t.x * t.x - t.c(2));
    CHECK_THROWS_WITH_AS(singular_points(g), "unsupported point field", std::domain_error);
}

TEST_CASE("local milnor numbers") {
    XY t;
    auto origin = rational_point(Rational(0), Rational(0));
    CHECK(local_milnor(t.x * t.y, origin) == 1);
    CHECK(local_milnor(t.y * t.y - t.x.pow(3), origin) == 2);
    CHECK(local_milnor(t.y * t.y - t.x.pow(4), origin) == 3);
    CHECK_THROWS_WITH_AS(local_milnor(t.y - t.x, rational_point(Rational(1), Rational(0))),
                         "point is not on the curve", std::domain_error);
    // mu = 0 exactly at smooth points
    CHECK(local_milnor(t.y - t.x * t.x, origin) == 0);
}

TEST_CASE("non-isolated critical point") {
    XY t;
    // the germ x^2 has a non-isolated singularity along x = 0
    Poly<NFE> g = embed_nfe(t.x * t.x);
    CHECK_THROWS_WITH_AS(mu_at_origin(g), "non-isolated singularity", std::domain_error);
}

TEST_CASE("total milnor number on the curve") {
    XY t;
    CHECK(total_milnor_on_curve(t.y * t.y - t.x.pow(3)) == 2);
    CHECK(total_milnor_on_curve(t.y * t.y - t.x.pow(3) - t.x * t.x) == 1);
    CHECK(total_milnor_on_curve(t.x * t.x + t.y * t.y - t.one) == 0);
    // the critical locus of x^2 - x is the line x = 1/2, but it misses the
    // curve, so the on-curve sum is still zero
    CHECK(total_milnor_on_curve(t.x * t.x - t.x) == 0);
    CHECK_THROWS_WITH_AS(total_milnor_on_curve(t.x * t.x * t.y), "curve not reduced",
                         std::domain_error);
}

TEST_CASE("branch counts") {
    XY t;
    auto origin = rational_point(Rational(0), Rational(0));
    CHECK(branch_count(t.y * t.y - t.x.pow(3), origin) == 1);
    CHECK(branch_count(t.x * t.y, origin) == 2);
    CHECK(branch_count(t.y * t.y - t.x.pow(4), origin) == 2);
    // (y - x^2)^2 = x^5: one branch of polydromy 2, found after a toric step
    CHECK(branch_count((t.y - t.x * t.x) * (t.y - t.x * t.x) - t.x.pow(5), origin) == 1);
    // y^2 = x^4 (1 + x): two branches split by the edge polynomial
    CHECK(branch_count((t.y - t.x * t.x) * (t.y + t.x * t.x) - t.x.pow(5), origin) == 2);
    // branches split only over an extension of the edge field
    CHECK(branch_count(t.y * t.y - t.c(2) * t.x * t.x, origin) == 2);
}

TEST_CASE("delta invariant and parity") {
    CHECK(delta_invariant(2, 1) == 1);
    CHECK(delta_invariant(1, 2) == 1);
    CHECK(delta_invariant(0, 1) == 0);
    CHECK_THROWS_WITH_AS(delta_invariant(2, 2), "inconsistent singularity data",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(delta_invariant(0, 3), "inconsistent singularity data",
                         std::domain_error);
}

TEST_CASE("census invariants across sample curves") {
    XY t;
    std::vector<QPoly> curves = {
        t.y * t.y - t.x.pow(3),
        t.y * t.y - t.x.pow(3) - t.x * t.x,
        t.x * t.y,
        t.y * t.y - t.x.pow(4),
        t.x * t.y * (t.x + t.y),
        t.y.pow(3) - t.x.pow(4),
        (t.y - t.x * t.x + t.c(2)) * (t.y + t.x * t.x - t.c(2)),
        t.x * (t.x * t.x + t.y * t.y - t.one),
    };
    for (const auto& f : curves) {
        long orbit_weighted = 0;
        for (const auto& rec : singularity_census(f)) {
            // mu - r + 1 even and nonnegative, delta consistent
            CHECK((rec.mu - rec.branches + 1) % 2 == 0);
            CHECK(rec.mu - rec.branches + 1 >= 0);
            CHECK(rec.delta == (rec.mu + rec.branches - 1) / 2);
            CHECK(rec.mu_prime == rec.mu);
            CHECK(rec.mu > 0);  // census only reports singular points
            orbit_weighted += rec.point.orbit_size() * rec.mu;
        }
        CHECK(orbit_weighted == total_milnor_on_curve(f));
    }
}

TEST_CASE("branch count and milnor number are coordinate invariant") {
    XY t;
    auto origin = rational_point(Rational(0), Rational(0));
    // simultaneous substitution (x, y) -> (nx(x,y), ny(x,y)) via a spare variable
    auto subst2 = [&](const QPoly& f, const QPoly& nx, const QPoly& ny) {
        auto spare = make_ring({"x", "y", "u"});
        QPoly g = f.in_ring(spare);
        g = g.substitute(1, QPoly::variable(spare, 2));  // y -> u
        g = g.substitute(0, nx.in_ring(spare));          // x -> nx(x, y)
        g = g.substitute(2, ny.in_ring(spare));          // u -> ny(x, y)
        return g.in_ring(t.ring);
    };
    std::vector<QPoly> germs = {t.y * t.y - t.x.pow(3), t.x * t.y, t.y * t.y - t.x.pow(4),
                                t.x * t.y * (t.x + t.y)};
    long changes[3][4] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}};  // det = 1
    for (const auto& f : germs) {
        long r0 = branch_count(f, origin);
        long mu0 = local_milnor(f, origin);
        QPoly swapped = subst2(f, t.y, t.x);
        CHECK(branch_count(swapped, origin) == r0);
        CHECK(local_milnor(swapped, origin) == mu0);
        for (auto& ch : changes) {
            QPoly g = subst2(f, t.c(ch[0]) * t.x + t.c(ch[1]) * t.y,
                             t.c(ch[2]) * t.x + t.c(ch[3]) * t.y);
            CHECK(branch_count(g, origin) == r0);
            CHECK(local_milnor(g, origin) == mu0);
        }
    }
}

TEST_CASE("smoothness criterion matches the unit-ideal test") {
    XY t;
    QPoly f = t.y * t.y - t.x.pow(3) - t.x;  // smooth affine curve
    for (auto [px, py] : {std::pair<long, long>{0, 0}, {2, 0}}) {
        // points: (0,0) on curve; (2, 0) not (f = -10)
        if (f.eval({Rational(px), Rational(py)}) != 0) continue;
        auto p = rational_point(Rational(px), Rational(py));
        long mu = local_milnor(f, p);
        // Jacobian ideal plus the maximal ideal at p is the unit ideal
        QPoly mx = t.x - t.c(px), my = t.y - t.c(py);
        auto gb = groebner_basis(
            Ideal<Rational>(t.ring, {f.derivative(0), f.derivative(1), mx, my}),
            MonomialOrder::grevlex());
        CHECK((mu == 0) == gb.is_unit_ideal());
        CHECK(mu == 0);
    }
}

TEST_CASE("branch recursion rejects a second extension") {
    // germ (y^2 - a x^2)^2 = x^7 over Q(a), a = sqrt(2): the edge polynomial
    // is (u^2 - a)^2 and its degenerate root class would need Q(a, a^(1/2))
    auto field = make_number_field({Rational(-2), Rational(0), Rational(1)});
    NFE a = NFE::generator(field);
    auto ring = make_ring({"x", "y"});
    Poly<NFE> x = Poly<NFE>::variable(ring, 0), y = Poly<NFE>::variable(ring, 1);
    Poly<NFE> inner = y * y - x * x * Poly<NFE>::constant(ring, a);
    Poly<NFE> f = inner * inner - x.pow(7);
    CHECK_THROWS_WITH_AS(branches_at_origin(f, field), "unsupported singularity field",
                         std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "quatideal/orders.hpp"

using namespace quatideal;

TEST_CASE("three squares") {
    ThreeSquares t = three_squares(21);
    CHECK(t.x == 4);
    CHECK(t.y == 2);
    CHECK(t.z == 1);
    ThreeSquares u = three_squares(893);
    CHECK(u.x == 29);
    CHECK(u.y == 6);
    CHECK(u.z == 4);
    CHECK_THROWS_AS(three_squares(7), std::domain_error);
    CHECK_THROWS_AS(three_squares(28), std::domain_error);   // 4 * 7
    ThreeSquares v = three_squares(4);   // = 4^1 * 1
    CHECK(v.x == 2);
    CHECK(v.y + v.z == 0);
}

TEST_CASE("all three squares") {
    auto reps = all_three_squares(9);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].x == 3);
    CHECK(reps[0].y == 0);
    CHECK(reps[1].x == 2);
    CHECK(reps[1].y == 2);
    CHECK(reps[1].z == 1);

    auto r3 = all_three_squares(3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].x == 1);

    bool found = false;
    for (const auto& r : all_three_squares(1001))
        if (r.x == 26 && r.y == 15 && r.z == 10) found = true;
    CHECK(found);
}

TEST_CASE("all three squares is exhaustive") {
    for (long m = 1; m <= 400; ++m) {
        std::set<std::array<long, 3>> brute;
        for (long x = 0; x * x <= m; ++x)
            for (long y = 0; y <= x && x * x + y * y <= m; ++y)
                for (long z = 0; z <= y; ++z)
                    if (x * x + y * y + z * z == m) brute.insert({x, y, z});
        auto reps = all_three_squares(m);
        CHECK(reps.size() == brute.size());
        for (const auto& r : reps) {
            CHECK(r.x * r.x + r.y * r.y + r.z * r.z == m);
            CHECK(brute.count({r.x.get_si(), r.y.get_si(), r.z.get_si()}) == 1);
        }
        // descending order
        for (size_t i = 1; i < reps.size(); ++i) {
            auto key = [](const ThreeSquares& t) { return std::array<Int, 3>{t.x, t.y, t.z}; };
            CHECK(key(reps[i - 1]) > key(reps[i]));
        }
    }
}

TEST_CASE("make order") {
    QuadraticOrder o = make_order(4, 2, 1);
    CHECK(o.m == 21);
    CHECK(o.r == 1);
    CHECK(o.omega == o.mu);

    QuadraticOrder p = make_order(1, 1, 1);
    CHECK(p.m == 3);
    CHECK(p.r == 2);
    CHECK(p.omega == HurwitzQuaternion::from_doubled(1, 1, 1, 1));

    CHECK_THROWS_AS(make_order(2, 2, 1), std::domain_error);   // 9 not squarefree
    CHECK_THROWS_AS(make_order(0, 0, 0), std::domain_error);
}

TEST_CASE("order invariants") {
    for (auto [x, y, z] : {std::array<long, 3>{4, 2, 1}, {1, 1, 1}, {3, 1, 0}, {5, 2, 1}, {29, 4, 6}}) {
        QuadraticOrder o = make_order(x, y, z);
        // mu^2 = -m
        CHECK(o.mu * o.mu == HurwitzQuaternion::scalar(-o.m));
        // r omega - (r - 1) = mu
        CHECK(o.omega * o.r - HurwitzQuaternion::scalar(o.r - 1) == o.mu);
        // N(omega) = ((r-1)^2 + m)/r^2
        CHECK(o.omega.norm() * o.r * o.r == (o.r - 1) * (o.r - 1) + o.m);
    }
}

TEST_CASE("order equivalence") {
    QuadraticOrder o = make_order(4, 2, 1);
    CHECK(orders_equivalent(o, o));
    CHECK(order_equivalence_witness(o, o).has_value());

    // a zero coefficient makes mu and -mu equivalent
    QuadraticOrder z = make_order(3, 1, 0);
    CHECK(orders_equivalent(z, QuadraticOrder::from_mu(-z.mu)));
    // distinct nonzero coefficients do not
    CHECK_FALSE(orders_equivalent(o, QuadraticOrder::from_mu(-o.mu)));
    CHECK_THROWS_AS(orders_equivalent(o, make_order(1, 1, 1)), std::domain_error);

    // equivalence is symmetric and transitive along the unit orbit
    std::set<std::array<Int, 4>> orbit;
    for (const Unit& u : units()) {
        HurwitzQuaternion c = u * o.mu * u.conjugate();
        orbit.insert(c.doubled());
        CHECK(orders_equivalent(QuadraticOrder::from_mu(c), o));
    }
    CHECK(orbit.size() == 12);   // distinct nonzero coefficients give 12 equivalent orders
}

TEST_CASE("order signs") {
    CHECK(sign_of_order(make_order(1, 1, 1)) == OrderSign::positive);
    CHECK(sign_of_order(make_order(29, 4, 6)) == OrderSign::positive);
    CHECK(sign_of_mu(HurwitzQuaternion::pure(-28, -10, -3)) == OrderSign::negative);
    // one zero coefficient: both signs
    CHECK(sign_of_order(make_order(3, 1, 0)) == OrderSign::both);
    // mixed-sign families with distinct magnitudes can have no sign at all
    CHECK(sign_of_mu(HurwitzQuaternion::pure(4, -2, 1)) == OrderSign::none);
    // the sign is a class invariant
    for (const Unit& u : units()) {
        HurwitzQuaternion c = u * HurwitzQuaternion::pure(29, 4, 6) * u.conjugate();
        CHECK(sign_of_mu(c) == OrderSign::positive);
    }
}

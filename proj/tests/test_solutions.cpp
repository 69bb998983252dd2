#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "quatideal/orders.hpp"
#include "quatideal/solutions.hpp"

using namespace quatideal;

namespace {

std::mt19937_64 rng(0xbadc0de);

// rational solution of rho = X ups + Y ups1, integral (X, Y) or nothing
std::optional<std::pair<Int, Int>> coordinates(const SolutionModule& sm, const HurwitzQuaternion& rho) {
    RationalQuaternion u(sm.upsilon), v(sm.upsilon1), r(rho);
    const Rat uc[4] = {u.t(), u.x(), u.y(), u.z()};
    const Rat vc[4] = {v.t(), v.x(), v.y(), v.z()};
    const Rat rc[4] = {r.t(), r.x(), r.y(), r.z()};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Rat det = uc[i] * vc[j] - uc[j] * vc[i];
            if (det == 0) continue;
            Rat X = (rc[i] * vc[j] - rc[j] * vc[i]) / det;
            Rat Y = (uc[i] * rc[j] - uc[j] * rc[i]) / det;
            for (int k = 0; k < 4; ++k)
                if (X * uc[k] + Y * vc[k] != rc[k]) return std::nullopt;
            if (X.get_den() != 1 || Y.get_den() != 1) return std::nullopt;
            return std::make_pair(Int(X.get_num()), Int(Y.get_num()));
        }
    return std::nullopt;
}

bool solves(const SolutionModule& sm, const HurwitzQuaternion& rho) {
    return rho * sm.mu == sm.mu_prime * rho;
}

// every small Hurwitz solution must lie in the lattice
void check_complete(const HurwitzQuaternion& mu, const HurwitzQuaternion& mu_prime, long bound) {
    SolutionModule sm = solve(mu, mu_prime);
    CHECK(solves(sm, sm.upsilon));
    CHECK(solves(sm, sm.upsilon1));
    long R = 1;
    while (R * R <= 4 * bound) ++R;
    for (long da = -R; da <= R; ++da)
        for (long db = -R; db <= R; ++db)
            for (long dc = -R; dc <= R; ++dc)
                for (long dd = -R; dd <= R; ++dd) {
                    if ((((da ^ db) | (da ^ dc) | (da ^ dd)) & 1) != 0) continue;
                    if (da * da + db * db + dc * dc + dd * dd > 4 * bound) continue;
                    HurwitzQuaternion rho = HurwitzQuaternion::from_doubled(da, db, dc, dd);
                    if (!solves(sm, rho)) continue;
                    CHECK(coordinates(sm, rho).has_value());
                }
}

}  // namespace

TEST_CASE("three-term extended gcd") {
    ExtGcd3 e = ext_gcd3(2, 4, 6);
    CHECK(e.g == 2);
    CHECK(e.a * 2 + e.b * 4 + e.c * 6 == 2);
    ExtGcd3 e2 = ext_gcd3(0, 0, 5);
    CHECK(e2.g == 5);
    CHECK(e2.c * 5 == 5);
    ExtGcd3 e3 = ext_gcd3(33, 18, 20);
    CHECK(e3.g == 1);
    CHECK(e3.a * 33 + e3.b * 18 + e3.c * 20 == 1);
    ExtGcd3 e4 = ext_gcd3(18, -10, 30);
    CHECK(e4.g == 2);
    CHECK(e4.a * 18 - e4.b * 10 + e4.c * 30 == 2);
    CHECK_THROWS_AS(ext_gcd3(0, 0, 0), std::domain_error);
}

TEST_CASE("identity pair contains the ring of multipliers") {
    HurwitzQuaternion mu = HurwitzQuaternion::pure(4, 2, 1);
    SolutionModule sm = solve(mu, mu);
    CHECK(coordinates(sm, HurwitzQuaternion::scalar(1)).has_value());
    CHECK(coordinates(sm, mu).has_value());
}

TEST_CASE("negated order pair") {
    HurwitzQuaternion mu = HurwitzQuaternion::pure(4, 2, 1);
    SolutionModule sm = solve(mu, -mu);
    CHECK(solves(sm, sm.upsilon));
    CHECK(solves(sm, sm.upsilon1));
    // all solutions are pure and orthogonal to mu
    CHECK(sm.upsilon.is_pure());
    CHECK(sm.upsilon1.is_pure());
    CHECK(scalar_product(sm.upsilon, mu) == 0);
    CHECK(scalar_product(sm.upsilon1, mu) == 0);
    CHECK(coordinates(sm, HurwitzQuaternion::pure(0, 1, -2)).has_value());
    // mu = +-i edge case
    SolutionModule unit = solve(HurwitzQuaternion::pure(1, 0, 0), HurwitzQuaternion::pure(-1, 0, 0));
    CHECK(solves(unit, unit.upsilon));
    CHECK(solves(unit, unit.upsilon1));
}

TEST_CASE("argument validation") {
    HurwitzQuaternion mu = HurwitzQuaternion::pure(4, 2, 1);
    CHECK_THROWS_AS(solve(mu, HurwitzQuaternion::pure(1, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(solve(HurwitzQuaternion::scalar(3), mu), std::domain_error);
    CHECK_THROWS_AS(solve(HurwitzQuaternion::pure(4, 2, 2), HurwitzQuaternion::pure(4, 2, 2)),
                    std::domain_error);   // imprimitive
}

TEST_CASE("lattice completeness across order families") {
    for (auto [x, y, z] : {std::array<long, 3>{4, 2, 1}, {3, 1, 0}, {1, 1, 1}, {5, 3, 1}, {2, 1, 0}}) {
        HurwitzQuaternion mu = HurwitzQuaternion::pure(x, y, z);
        std::vector<HurwitzQuaternion> targets = {-mu, HurwitzQuaternion::pure(x, z, y)};
        int count = 0;
        for (const Unit& u : units()) {
            HurwitzQuaternion c = u * mu * u.conjugate();
            targets.push_back(c);
            if (++count == 6) break;
        }
        for (const auto& t : targets) check_complete(mu, t, 30);
    }
}

TEST_CASE("norm form") {
    HurwitzQuaternion mu = HurwitzQuaternion::pure(4, 2, 1);
    SolutionModule sm = solve(mu, -mu);
    auto [A, B, C] = norm_form(sm);
    CHECK(A == sm.upsilon.norm());
    CHECK(C == sm.upsilon1.norm());
    CHECK(B * B < 4 * A * C);   // positive definite
    // the form evaluates lattice norms
    for (long X = -4; X <= 4; ++X)
        for (long Y = -4; Y <= 4; ++Y)
            CHECK(sm.at(X, Y).norm() == A * X * X + B * X * Y + C * Y * Y);
    // determinant of the orthogonal lattice is m
    CHECK(4 * A * C - B * B == 4 * 21);
}

TEST_CASE("minimal vector equals brute-force minimum") {
    std::uniform_int_distribution<long> md(2, 2000);
    int done = 0;
    while (done < 120) {
        long m = md(rng);
        if (m % 8 == 7) continue;
        std::vector<ThreeSquares> reps;
        try {
            reps = all_three_squares(m);
        } catch (...) { continue; }
        if (reps.empty()) continue;
        const auto& r = reps[rng() % reps.size()];
        HurwitzQuaternion mu = HurwitzQuaternion::pure(r.x, r.y, r.z);
        if (content(mu) != 1) continue;
        HurwitzQuaternion mup = (rng() & 1) ? -mu : HurwitzQuaternion::pure(r.x, r.z, r.y);
        if (mup == mu) continue;
        SolutionModule sm = solve(mu, mup);
        MinimalVector mv = minimal_vector(sm);
        CHECK(solves(sm, mv.vector));
        CHECK(is_primitive(mv.vector));
        Int best = 0;
        for (long X = -20; X <= 20; ++X)
            for (long Y = -20; Y <= 20; ++Y) {
                if (X == 0 && Y == 0) continue;
                Int n = sm.at(X, Y).norm();
                if (best == 0 || n < best) best = n;
            }
        CHECK(mv.vector.norm() == best);
        ++done;
    }
}

TEST_CASE("unit in the lattice reduces to norm one") {
    HurwitzQuaternion mu = HurwitzQuaternion::pure(4, 2, 1);
    SolutionModule sm = solve(mu, mu);
    CHECK(minimal_vector(sm).vector.norm() == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quatideal/hurwitz.hpp"

using namespace quatideal;

namespace {

HurwitzQuaternion I() { return HurwitzQuaternion::pure(1, 0, 0); }
HurwitzQuaternion J() { return HurwitzQuaternion::pure(0, 1, 0); }
HurwitzQuaternion K() { return HurwitzQuaternion::pure(0, 0, 1); }
HurwitzQuaternion one() { return HurwitzQuaternion::scalar(1); }

std::mt19937_64 rng(0x5eed);

HurwitzQuaternion random_quaternion(int span = 9) {
    std::uniform_int_distribution<int> d(-span, span);
    if (rng() & 1) {
        return HurwitzQuaternion::integers(d(rng), d(rng), d(rng), d(rng));
    }
    auto odd = [&] { return 2 * d(rng) + 1; };
    return HurwitzQuaternion::from_doubled(odd(), odd(), odd(), odd());
}

HurwitzQuaternion random_nonzero(int span = 9) {
    while (true) {
        HurwitzQuaternion q = random_quaternion(span);
        if (!q.is_zero()) return q;
    }
}

RationalQuaternion scale(const Rat& s, const RationalQuaternion& q) {
    return {s * q.t(), s * q.x(), s * q.y(), s * q.z()};
}

}  // namespace

TEST_CASE("multiplication table") {
    CHECK(I() * J() == K());
    CHECK(J() * I() == -K());
    CHECK(J() * K() == I());
    CHECK(K() * J() == -I());
    CHECK(K() * I() == J());
    CHECK(I() * K() == -J());
    CHECK(I() * I() == -one());
    HurwitzQuaternion h = HurwitzQuaternion::from_doubled(1, 1, 1, 1);
    CHECK(h * h.conjugate() == one());
}

TEST_CASE("addition") {
    CHECK(one() + I() == HurwitzQuaternion::integers(1, 1, 0, 0));
    HurwitzQuaternion h = HurwitzQuaternion::from_doubled(1, 1, 1, 1);
    CHECK(h + h.conjugate() == one());
    CHECK((I() + (-I())).is_zero());
}

TEST_CASE("conjugate, norm, inverse") {
    HurwitzQuaternion q = HurwitzQuaternion::integers(1, 1, 0, 0);
    CHECK(q.conjugate() == HurwitzQuaternion::integers(1, -1, 0, 0));
    CHECK(q.norm() == 2);
    CHECK(HurwitzQuaternion::from_doubled(1, 1, 1, 1).norm() == 1);
    CHECK(I().inverse().to_hurwitz() == -I());
    CHECK_THROWS_AS(HurwitzQuaternion().inverse(), std::domain_error);
}

TEST_CASE("units") {
    CHECK(units().size() == 24);
    for (const Unit& u : units()) CHECK(u.norm() == 1);
}

TEST_CASE("scalar and vector products") {
    CHECK(scalar_product(I(), J()) == 0);
    CHECK(scalar_product(I() + J() * 2, J() * 3 + K()) == 6);
    HurwitzQuaternion v = HurwitzQuaternion::pure(1, 1, 1);
    CHECK(scalar_product(v, v) == 3);
    CHECK(vector_product(I(), J()) == RationalQuaternion(K()));
    HurwitzQuaternion q = one() + I();
    CHECK(full_scalar_product(q, q) == 2);
}

TEST_CASE("pure product identity") {
    // q r = -(q, r) + [q, r] for pure q, r
    std::uniform_int_distribution<int> d(-9, 9);
    for (int it = 0; it < 300; ++it) {
        HurwitzQuaternion q = HurwitzQuaternion::pure(d(rng), d(rng), d(rng));
        HurwitzQuaternion r = HurwitzQuaternion::pure(d(rng), d(rng), d(rng));
        RationalQuaternion lhs(q * r);
        RationalQuaternion rhs =
            RationalQuaternion(-scalar_product(q, r), 0, 0, 0) + vector_product(q, r);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("symmetrized product identity") {
    // (qr + rq)/2 = Re(q)Re(r) - (q,r) + Re(q) vec(r) + Re(r) vec(q)
    for (int it = 0; it < 300; ++it) {
        HurwitzQuaternion q = random_quaternion();
        HurwitzQuaternion r = random_quaternion();
        RationalQuaternion lhs = scale(Rat(1, 2), RationalQuaternion(q * r + r * q));
        RationalQuaternion qr(q), rr(r);
        RationalQuaternion rhs(q.real() * r.real() - scalar_product(q, r),
                               q.real() * rr.x() + r.real() * qr.x(),
                               q.real() * rr.y() + r.real() * qr.y(),
                               q.real() * rr.z() + r.real() * qr.z());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quadratic relation and norm multiplicativity") {
    for (int it = 0; it < 300; ++it) {
        HurwitzQuaternion q = random_quaternion(), r = random_quaternion();
        // q^2 - 2 Re(q) q + N(q) = 0
        RationalQuaternion lhs = RationalQuaternion(q * q) -
                                 scale(2 * q.real(), RationalQuaternion(q)) +
                                 RationalQuaternion(Rat(q.norm()), 0, 0, 0);
        CHECK(lhs.is_zero());
        CHECK((q * r).norm() == q.norm() * r.norm());
        CHECK((q * r).conjugate() == r.conjugate() * q.conjugate());
        CHECK(q.conjugate().conjugate() == q);
    }
}

TEST_CASE("content") {
    CHECK(content(HurwitzQuaternion::integers(2, 4, 0, 0)) == 2);
    CHECK(content(HurwitzQuaternion::from_doubled(1, 1, 1, 1)) == 1);
    // (3+3i+3j+3k)/6 is the Hurwitz unit (1+i+j+k)/2, so the content is 6
    CHECK(content(HurwitzQuaternion::integers(3, 3, 3, 3)) == 6);
    CHECK(content(HurwitzQuaternion::integers(1, 1, 0, 0)) == 1);
    CHECK_THROWS_AS(content(HurwitzQuaternion()), std::domain_error);
    for (int it = 0; it < 200; ++it) {
        HurwitzQuaternion q = random_nonzero();
        HurwitzQuaternion p = divide_exact(q, content(q));
        CHECK(is_primitive(p));
    }
}

TEST_CASE("euclidean division") {
    // k = (-j) i exactly
    DivRem d = div_rem_right(K(), I());
    CHECK(d.remainder.is_zero());
    CHECK(d.quotient * I() == K());

    HurwitzQuaternion q = random_nonzero();
    DivRem d2 = div_rem_right(q, one());
    CHECK(d2.quotient == q);
    CHECK(d2.remainder.is_zero());

    DivRem d3 = div_rem_right(HurwitzQuaternion::integers(3, 1, 0, 0), I() * 2);
    CHECK(d3.remainder.norm() <= 2);

    for (int it = 0; it < 500; ++it) {
        HurwitzQuaternion a = random_quaternion(20), b = random_nonzero(8);
        DivRem dr = div_rem_right(a, b);
        CHECK(dr.quotient * b + dr.remainder == a);
        CHECK(dr.remainder.norm() < b.norm());
        CHECK(2 * dr.remainder.norm() <= b.norm());   // Hurwitz rounding bound
    }
    CHECK_THROWS_AS(div_rem_right(one(), HurwitzQuaternion()), std::domain_error);
}

TEST_CASE("divisibility") {
    CHECK(divides_right(I(), K()));
    CHECK_FALSE(divides_right(one() + I(), HurwitzQuaternion::scalar(3)));
    CHECK(divides_left(I(), K()));
}

TEST_CASE("canonical associate") {
    CHECK(canonical_associate(HurwitzQuaternion::scalar(-1)) == one());
    HurwitzQuaternion q = one() + J();
    CHECK(canonical_associate(I() * q) == canonical_associate(q));
    for (int it = 0; it < 60; ++it) {
        HurwitzQuaternion w = random_nonzero();
        HurwitzQuaternion c = canonical_associate(w);
        CHECK(canonical_associate(c) == c);
        for (const Unit& u : units()) CHECK(canonical_associate(u * w) == c);
        HurwitzQuaternion cr = canonical_associate_right(w);
        for (const Unit& u : units()) CHECK(canonical_associate_right(w * u) == cr);
    }
}

TEST_CASE("right gcd") {
    HurwitzQuaternion q = random_nonzero();
    CHECK(gcd_right(q, HurwitzQuaternion()) == canonical_associate(q));
    HurwitzQuaternion g = gcd_right(HurwitzQuaternion::scalar(2), one() + I());
    CHECK(g == canonical_associate(one() + I()));
    for (int it = 0; it < 50; ++it) {
        HurwitzQuaternion rho = random_nonzero(4);
        CHECK(gcd_right(I() * rho, rho) == canonical_associate(rho));
    }
    CHECK_THROWS_AS(gcd_right(HurwitzQuaternion(), HurwitzQuaternion()), std::domain_error);
}

TEST_CASE("gcd against brute force") {
    // the gcd is a maximal-norm common right divisor
    std::vector<HurwitzQuaternion> small;
    for (int da = -10; da <= 10; ++da)
        for (int db = -10; db <= 10; ++db)
            for (int dc = -10; dc <= 10; ++dc)
                for (int dd = -10; dd <= 10; ++dd) {
                    if ((((da ^ db) | (da ^ dc) | (da ^ dd)) & 1) != 0) continue;
                    if (da * da + db * db + dc * dc + dd * dd > 4 * 25) continue;
                    if (!da && !db && !dc && !dd) continue;
                    small.push_back(HurwitzQuaternion::from_doubled(da, db, dc, dd));
                }
    std::uniform_int_distribution<size_t> pick(0, small.size() - 1);
    for (int it = 0; it < 40; ++it) {
        HurwitzQuaternion q = small[pick(rng)], r = small[pick(rng)];
        HurwitzQuaternion g = gcd_right(q, r);
        CHECK(divides_right(g, q));
        CHECK(divides_right(g, r));
        Int best = 0;
        for (const auto& d : small)
            if (d.norm() > best && divides_right(d, q) && divides_right(d, r)) best = d.norm();
        CHECK(g.norm() == best);
    }
}

TEST_CASE("left gcd mirrors right gcd") {
    for (int it = 0; it < 50; ++it) {
        HurwitzQuaternion q = random_nonzero(6), r = random_nonzero(6);
        HurwitzQuaternion g = gcd_left(q, r);
        CHECK(divides_left(g, q));
        CHECK(divides_left(g, r));
        CHECK(g.norm() == gcd_right(q.conjugate(), r.conjugate()).norm());
    }
}

TEST_CASE("text round trip") {
    CHECK(parse_quaternion("1+2i-j") == HurwitzQuaternion::integers(1, 2, -1, 0));
    CHECK(parse_quaternion("(1+i+j+k)/2") == HurwitzQuaternion::from_doubled(1, 1, 1, 1));
    CHECK(parse_quaternion("-3") == HurwitzQuaternion::scalar(-3));
    CHECK(parse_quaternion("i") == I());
    CHECK(HurwitzQuaternion().str() == "0");
    for (int it = 0; it < 300; ++it) {
        HurwitzQuaternion q = random_quaternion();
        CHECK(parse_quaternion(q.str()) == q);
        CHECK(quaternion_from_json(q.json()) == q);
    }
    CHECK_THROWS_AS(parse_quaternion("1+zebra"), std::domain_error);
}

TEST_CASE("half-up rounding") {
    CHECK(round_half_up(Rat(1, 2)) == 1);
    CHECK(round_half_up(Rat(-1, 2)) == 0);
    CHECK(round_half_up(Rat(3, 2)) == 2);
    CHECK(round_half_up(Rat(-3, 2)) == -1);
    CHECK(round_half_up(Rat(2, 29)) == 0);
    CHECK(round_half_up(Rat(-2, 29)) == 0);
}

#include "quatideal/orders.hpp"

#include <stdexcept>

namespace quatideal {

bool is_squarefree(const Int& m) {
    if (m <= 0) return false;
    Int n = m;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

bool is_prime_desk(const Int& m) {
    if (m < 2) return false;
    for (Int p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

static Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

ThreeSquares three_squares(const Int& m) {
    if (m < 1) throw std::domain_error("NoRepresentation: m must be positive");
    Int core = m;
    Int scale = 1;
    while (core % 4 == 0) { core /= 4; scale *= 2; }
    if (core % 8 == 7)
        throw std::domain_error("NoRepresentation: m is of the form 4^k(8n+7)");
    for (Int x = isqrt(core); 3 * x * x >= core; --x) {
        Int rem = core - x * x;
        for (Int y = std::min(isqrt(rem), x); y >= 0 && 2 * y * y >= rem; --y) {
            Int z2 = rem - y * y;
            Int z = isqrt(z2);
            if (z * z == z2 && z <= y)
                return {x * scale, y * scale, z * scale};
        }
    }
    throw std::logic_error("three_squares: search exhausted");  // unreachable
}

std::vector<ThreeSquares> all_three_squares(const Int& m) {
    std::vector<ThreeSquares> out;
    if (m < 1) return out;
    for (Int x = isqrt(m); 3 * x * x >= m; --x) {
        Int rem = m - x * x;
        for (Int y = std::min(isqrt(rem), x); y >= 0 && 2 * y * y >= rem; --y) {
            Int z2 = rem - y * y;
            Int z = isqrt(z2);
            if (z * z == z2 && z <= y)
                out.push_back({x, y, z});
        }
    }
    return out;   // already descending by construction
}

QuadraticOrder QuadraticOrder::from_mu(const HurwitzQuaternion& mu) {
    if (!mu.is_pure() || mu.is_zero())
        throw std::domain_error("InvalidOrder: mu must be a nonzero pure quaternion");
    Int m = mu.norm();
    if (!is_squarefree(m))
        throw std::domain_error("InvalidOrder: N(mu) = " + m.get_str() + " is not squarefree");
    if (m % 8 == 7)
        throw std::domain_error("InvalidOrder: N(mu) = 7 (mod 8) has no three-squares representation");
    if (!is_primitive(mu))
        throw std::domain_error("InvalidOrder: mu is imprimitive");
    QuadraticOrder o;
    o.mu = mu;
    o.m = m;
    o.r = (m % 4 == 3) ? 2 : 1;
    if (o.r == 1) {
        o.omega = mu;
    } else {
        o.omega = HurwitzQuaternion::from_doubled(1, mu.x(), mu.y(), mu.z());
    }
    return o;
}

QuadraticOrder make_order(const Int& x, const Int& y, const Int& z) {
    return QuadraticOrder::from_mu(HurwitzQuaternion::pure(x, y, z));
}

std::optional<Unit> order_equivalence_witness(const QuadraticOrder& o1, const QuadraticOrder& o2) {
    if (o1.m != o2.m)
        throw std::domain_error("NormMismatch: orders have different discriminants");
    for (const Unit& u : units())
        if (u * o1.mu * u.conjugate() == o2.mu) return u;
    return std::nullopt;
}

bool orders_equivalent(const QuadraticOrder& o1, const QuadraticOrder& o2) {
    return order_equivalence_witness(o1, o2).has_value();
}

bool pure_equivalent(const HurwitzQuaternion& mu1, const HurwitzQuaternion& mu2) {
    for (const Unit& u : units())
        if (u * mu1 * u.conjugate() == mu2) return true;
    return false;
}

OrderSign sign_of_mu(const HurwitzQuaternion& mu) {
    bool pos = false, neg = false;
    for (const Unit& u : units()) {
        HurwitzQuaternion c = u * mu * u.conjugate();
        if (c.db() >= 0 && c.dc() >= 0 && c.dd() >= 0) pos = true;
        if (c.db() <= 0 && c.dc() <= 0 && c.dd() <= 0) neg = true;
    }
    if (pos && neg) return OrderSign::both;
    if (pos) return OrderSign::positive;
    if (neg) return OrderSign::negative;
    return OrderSign::none;
}

OrderSign sign_of_order(const QuadraticOrder& o) { return sign_of_mu(o.mu); }

const char* to_string(OrderSign s) {
    switch (s) {
        case OrderSign::positive: return "positive";
        case OrderSign::negative: return "negative";
        case OrderSign::both: return "both";
        default: return "none";
    }
}

}  // namespace quatideal

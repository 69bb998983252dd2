#include "quatideal/ideals.hpp"

#include <stdexcept>
#include <tuple>

namespace quatideal {

static Int mod_floor(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

static bool z_basis_valid(const Int& a, const Int& b, const Int& m, int r) {
    if (a <= 0) return false;
    Int t = Int(r) * b + (r - 1);
    return (t * t + m) % (Int(r * r) * a) == 0;
}

static HurwitzQuaternion b_plus_omega(const QuadraticOrder& o, const Int& b) {
    return o.omega + HurwitzQuaternion::scalar(b);
}

Int Ideal::norm() const { return rho_.norm() / (content_ * content_); }

Ideal Ideal::primitive_part() const {
    Ideal out;
    out.order_ = order_;
    out.rho_ = divide_exact(rho_, content_);
    out.content_ = 1;
    return out;
}

Ideal Ideal::from_rho(const QuadraticOrder& o, const HurwitzQuaternion& rho) {
    if (rho.is_zero()) throw std::domain_error("ZeroQuaternion: ideal needs a nonzero generator");
    Ideal out;
    out.order_ = o;
    out.content_ = quatideal::content(rho);
    HurwitzQuaternion prim = divide_exact(rho, out.content_);
    // pseudo-generator criterion: the right order must be integral ...
    RationalQuaternion mup = RationalQuaternion(prim) * RationalQuaternion(o.mu) *
                             RationalQuaternion(prim).inverse();
    if (!mup.is_hurwitz())
        throw std::domain_error("NotIntegral: rho mu rho^-1 is not integral; not a pseudo generator");
    // ... and the norm odd when m = 3 (mod 8)
    if (o.m % 8 == 3 && prim.norm() % 2 == 0)
        throw std::domain_error("NotIntegral: even-norm generator does not give an ideal of O(mu) for m = 3 mod 8");
    out.rho_ = canonical_associate(prim) * out.content_;
    return out;
}

Ideal Ideal::unit_ideal(const QuadraticOrder& o) {
    return from_rho(o, HurwitzQuaternion::scalar(1));
}

Ideal from_z_basis(const ZBasis& z) {
    const QuadraticOrder& o = z.order;
    if (!z_basis_valid(z.a, z.b, o.m, o.r))
        throw std::domain_error("InvalidZBasis: r^2 a does not divide (rb + r - 1)^2 + m");
    if (z.c <= 0) throw std::domain_error("InvalidZBasis: content must be positive");
    HurwitzQuaternion rho = gcd_right(HurwitzQuaternion::scalar(z.a), b_plus_omega(o, z.b));
    if (rho.norm() != z.a)
        throw std::logic_error("pseudo generator norm differs from ideal norm");
    return Ideal::from_rho(o, rho * z.c);
}

/* Finds b for a primitive right pseudo generator: real part made an odd
 * integer by a unit, then the congruence on rb + r - 1 from the generator
 * relation, then the smallest admissible b that the generator divides. */
ZBasis restore_z_basis(const Ideal& ideal) {
    if (!ideal.is_primitive())
        return [&] {
            ZBasis z = restore_z_basis(ideal.primitive_part());
            z.c = ideal.content();
            return z;
        }();
    const QuadraticOrder& o = ideal.order();
    const int r = o.r;
    Int a = ideal.rho().norm();

    // step 1: associate with odd (positive) integer real part
    HurwitzQuaternion rho;
    bool found = false;
    for (const Unit& u : units()) {
        HurwitzQuaternion w = u * ideal.rho();
        if (!w.is_integral()) continue;
        Int re = w.t();
        if (mpz_odd_p(re.get_mpz_t()) && re > 0) { rho = w; found = true; break; }
    }
    if (!found)
        throw std::logic_error("InternalInconsistency: no unit gives an odd integral real part");

    Int re = rho.t();
    Rat spr = scalar_product(o.mu, rho);
    if (spr.get_den() != 1) throw std::logic_error("(mu,rho) not integral for integral rho");
    Int smr = spr.get_num();

    // step 2: parity flag
    Int t = (a % 2 == 0 && ((o.m % 2) != mod_floor(smr, 2))) ? 2 : 1;
    // step 3
    Int d;
    mpz_gcd(d.get_mpz_t(), Int(abs(re)).get_mpz_t(), Int(a / t).get_mpz_t());
    // step 4: rb + r - 1 = -((mu,rho)/d) ((Re(rho)/d)^-1)  (mod a/(t d))
    Int M = a / (t * d);
    Int target = 0;
    if (M > 1) {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), Int(mod_floor(re / d, M)).get_mpz_t(), M.get_mpz_t()) == 0)
            throw std::logic_error("InternalInconsistency: Re(rho)/d not invertible");
        target = mod_floor(-(smr / d) * inv, M);
    }

    HurwitzQuaternion prim = ideal.rho();
    for (Int b = 0; b <= 4 * a + 4 * o.m + 8; ++b) {
        if (mod_floor(Int(r) * b + (r - 1), M) != target) continue;
        Int nb = Int(r) * b + (r - 1);
        if (Int(r * r) * a > nb * nb + o.m) continue;   // N(rho) <= N(b + omega)
        if (!z_basis_valid(a, mod_floor(b, a), o.m, r)) continue;
        if (!divides_right(prim, b_plus_omega(o, mod_floor(b, a)))) continue;
        ZBasis z;
        z.a = a;
        z.b = mod_floor(b, a);
        z.order = o;
        z.c = 1;
        return z;
    }
    throw std::logic_error("InternalInconsistency: restore found no admissible b");
}

QuadraticOrder right_order(const Ideal& ideal) {
    HurwitzQuaternion prim = divide_exact(ideal.rho(), ideal.content());
    RationalQuaternion mup = RationalQuaternion(prim) * RationalQuaternion(ideal.order().mu) *
                             RationalQuaternion(prim).inverse();
    return QuadraticOrder::from_mu(mup.to_hurwitz());
}

QuadraticOrder left_order_of(const HurwitzQuaternion& rho_left, const QuadraticOrder& o) {
    RationalQuaternion mup = RationalQuaternion(rho_left).inverse() * RationalQuaternion(o.mu) *
                             RationalQuaternion(rho_left);
    return QuadraticOrder::from_mu(mup.to_hurwitz());
}

/* gcd(-(mu,rho) + Re(rho) nu, N(rho)) over the generator's associates,
 * accepted when the gcd norm equals N(rho); nu is mu itself for the
 * generator conversions and the right order of the cofactor for
 * multiplication. Right generators vary by units on the left, left
 * generators by units on the right. */
static std::optional<HurwitzQuaternion> generator_by_formula(const HurwitzQuaternion& rho,
                                                             const QuadraticOrder& o,
                                                             const HurwitzQuaternion& nu,
                                                             bool left_associates,
                                                             bool right_gcd) {
    Int n = rho.norm();
    HurwitzQuaternion nq = HurwitzQuaternion::scalar(n);
    for (const Unit& u : units()) {
        HurwitzQuaternion w = left_associates ? u * rho : rho * u;
        if (!w.is_integral()) continue;
        Rat sp = scalar_product(o.mu, w);
        if (sp.get_den() != 1) continue;
        HurwitzQuaternion v = nu * w.t() - HurwitzQuaternion::scalar(sp.get_num());
        HurwitzQuaternion g = right_gcd ? gcd_right(v, nq) : gcd_left(v, nq);
        if (g.norm() == n) return g;
    }
    return std::nullopt;
}

HurwitzQuaternion right_from_left(const HurwitzQuaternion& rho_left, const QuadraticOrder& o) {
    Int c = content(rho_left);
    HurwitzQuaternion prim = divide_exact(rho_left, c);
    if (auto g = generator_by_formula(prim, o, o.mu, /*left_associates=*/false, /*right_gcd=*/true))
        return canonical_associate(*g * c);
    // fallback through the conjugate ideal's Z-basis
    Ideal conj = Ideal::from_rho(o, prim.conjugate());
    ZBasis zc = restore_z_basis(conj);
    Int b = mod_floor(-zc.b - (o.r - 1), zc.a);
    HurwitzQuaternion g = gcd_right(HurwitzQuaternion::scalar(zc.a), b_plus_omega(o, b));
    if (g.norm() != prim.norm()) throw std::logic_error("left-to-right conversion failed");
    return canonical_associate(g * c);
}

HurwitzQuaternion left_from_right(const HurwitzQuaternion& rho_right, const QuadraticOrder& o) {
    Int c = content(rho_right);
    HurwitzQuaternion prim = divide_exact(rho_right, c);
    if (auto g = generator_by_formula(prim, o, o.mu, /*left_associates=*/true, /*right_gcd=*/false))
        return canonical_associate_right(*g * c);
    ZBasis z = restore_z_basis(Ideal::from_rho(o, prim));
    HurwitzQuaternion g = gcd_left(HurwitzQuaternion::scalar(z.a), b_plus_omega(o, z.b));
    if (g.norm() != prim.norm()) throw std::logic_error("right-to-left conversion failed");
    return canonical_associate_right(g * c);
}

Ideal conjugate_ideal(const Ideal& ideal) {
    HurwitzQuaternion lambda = left_from_right(ideal.rho(), ideal.order());
    return Ideal::from_rho(ideal.order(), lambda.conjugate());
}

Ideal multiply(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.order() != rhs.order())
        throw std::domain_error("OrderMismatch: ideal product needs a common order");
    if (!lhs.is_primitive() || !rhs.is_primitive())
        throw std::domain_error("NotPrimitive: ideal product defined for primitive ideals");
    const QuadraticOrder& o = lhs.order();
    QuadraticOrder right = right_order(rhs);

    HurwitzQuaternion rpp;
    if (auto g = generator_by_formula(lhs.rho(), o, right.mu, /*left_associates=*/true, /*right_gcd=*/true)) {
        rpp = *g;
    } else {
        // move lhs's Z-basis into the right order of rhs
        ZBasis z = restore_z_basis(lhs);
        rpp = gcd_right(HurwitzQuaternion::scalar(z.a), b_plus_omega(right, z.b));
        if (rpp.norm() != lhs.norm()) throw std::logic_error("product generator norm mismatch");
    }
    HurwitzQuaternion prod = rpp * rhs.rho();
    if (prod.norm() != lhs.norm() * rhs.norm())
        throw std::logic_error("product norm is not multiplicative");
    return Ideal::from_rho(o, prod);
}

Ideal reduce(const Ideal& ideal, int* iterations) {
    if (!ideal.is_primitive())
        throw std::domain_error("NotPrimitive: reduce expects a primitive ideal");
    QuadraticOrder right = right_order(ideal);
    SolutionModule sm = solve(ideal.order().mu, right.mu);
    MinimalVector mv = minimal_vector(sm);
    if (iterations) *iterations = mv.iterations;
    return Ideal::from_rho(ideal.order(), mv.vector);
}

bool is_ambiguous_ideal(const Ideal& ideal) {
    Ideal conj = conjugate_ideal(ideal);
    bool ambiguous = conj == ideal;
    if (ambiguous) {
        // ambiguous generators divide (2/r) mu from the right
        HurwitzQuaternion two_mu = ideal.order().r == 1 ? ideal.order().mu * 2 : ideal.order().mu;
        if (!divides_right(divide_exact(ideal.rho(), ideal.content()), two_mu))
            throw std::logic_error("ambiguous ideal fails the divisibility criterion");
    }
    return ambiguous;
}

bool is_ambiguous_class(const Ideal& ideal) {
    Ideal sq = multiply(ideal.primitive_part(), ideal.primitive_part());
    return reduce(sq.primitive_part()) == Ideal::unit_ideal(ideal.order());
}

IdentityReport check_identities(const Ideal& ideal) {
    if (!ideal.is_primitive())
        throw std::domain_error("NotPrimitive: identities apply to primitive ideals");
    const QuadraticOrder& o = ideal.order();
    ZBasis z = restore_z_basis(ideal);
    const HurwitzQuaternion& rho = ideal.rho();
    HurwitzQuaternion bw = b_plus_omega(o, z.b);
    HurwitzQuaternion xi = (RationalQuaternion(bw) * RationalQuaternion(rho).inverse()).to_hurwitz();

    RationalQuaternion mup = RationalQuaternion(rho) * RationalQuaternion(o.mu) *
                             RationalQuaternion(rho).inverse();
    HurwitzQuaternion mu_prime = mup.to_hurwitz();

    Rat re_rho = rho.real(), re_xi = xi.real();
    Rat b_term = Rat(z.b) + Rat(o.r - 1, o.r);
    Rat m = Rat(o.m);

    IdentityReport rep;
    rep.generator_relation =
        scalar_product(o.omega, rho) + re_rho * b_term == re_xi * Rat(rho.norm());
    rep.generator_relation_xi =
        scalar_product(o.omega, xi) + re_xi * b_term == re_rho * Rat(xi.norm());
    Rat lhs = (m + scalar_product(o.mu, mu_prime)) / (2 * o.r);
    rep.trace_relation =
        lhs == re_xi * scalar_product(o.mu, rho) + re_rho * scalar_product(o.mu, xi);
    Rat lhs2 = (m + scalar_product(o.mu, mu_prime)) / (2 * o.r * o.r);
    rep.norm_relation =
        lhs2 == re_rho * re_rho * scalar_product(xi, xi) +
                2 * re_rho * re_xi * scalar_product(rho, xi) +
                re_xi * re_xi * scalar_product(rho, rho);
    return rep;
}

}  // namespace quatideal

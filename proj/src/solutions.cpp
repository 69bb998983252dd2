#include "quatideal/solutions.hpp"

#include <stdexcept>
#include <tuple>

namespace quatideal {

static std::pair<Int, std::pair<Int, Int>> ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, {old_s, old_t}};
}

ExtGcd3 ext_gcd3(const Int& u, const Int& v, const Int& w) {
    if (u == 0 && v == 0 && w == 0)
        throw std::domain_error("AllZero: gcd of three zeros");
    auto [g1, st] = ext_gcd(u, v);
    auto [g, pq] = ext_gcd(g1, w);
    ExtGcd3 out;
    out.g = g;
    out.a = pq.first * st.first;
    out.b = pq.first * st.second;
    out.c = pq.second;
    return out;
}

SolutionModule solve(const HurwitzQuaternion& mu, const HurwitzQuaternion& mu_prime) {
    if (!mu.is_pure() || !mu_prime.is_pure())
        throw std::domain_error("NotPure: solution module needs pure quaternions");
    if (mu.norm() != mu_prime.norm())
        throw std::domain_error("NormMismatch: N(mu) != N(mu')");
    if (!is_primitive(mu) || !is_primitive(mu_prime))
        throw std::domain_error("NotPure: mu, mu' must be primitive");

    SolutionModule sm;
    sm.mu = mu;
    sm.mu_prime = mu_prime;
    Int m = mu.norm();
    Int x = mu.x(), y = mu.y(), z = mu.z();

    if (mu_prime == -mu) {
        Int d;
        mpz_gcd(d.get_mpz_t(), Int(abs(y)).get_mpz_t(), Int(abs(z)).get_mpz_t());
        if (d == 0) {
            // mu = +-i: the orthogonal plane is spanned by j, k
            sm.upsilon = HurwitzQuaternion::pure(0, 1, 0);
            sm.upsilon1 = HurwitzQuaternion::pure(0, 0, 1);
        } else {
            auto [g, ef] = ext_gcd(y, z);
            if (g != d) throw std::logic_error("ext_gcd mismatch");
            sm.upsilon = HurwitzQuaternion::pure(0, z / d, -y / d);
            sm.upsilon1 = HurwitzQuaternion::pure(-d, x * ef.first, x * ef.second);
        }
    } else {
        Int xp = mu_prime.x(), yp = mu_prime.y(), zp = mu_prime.z();
        Int sx = xp + x, sy = yp + y, sz = zp + z;
        Int dx = xp - x, dy = yp - y, dz = zp - z;
        ExtGcd3 eg = ext_gcd3(sx, sy, sz);
        Int d = eg.g;
        Int e = d;
        mpz_gcd(e.get_mpz_t(), e.get_mpz_t(), Int(abs(dx)).get_mpz_t());
        mpz_gcd(e.get_mpz_t(), e.get_mpz_t(), Int(abs(dy)).get_mpz_t());
        mpz_gcd(e.get_mpz_t(), e.get_mpz_t(), Int(abs(dz)).get_mpz_t());
        Int p = eg.c * dy - eg.b * dz;
        Int q = eg.a * dz - eg.c * dx;
        Int rr = eg.b * dx - eg.a * dy;
        if (p % e != 0 || q % e != 0 || rr % e != 0)
            throw std::logic_error("solution module: second generator not integral");
        HurwitzQuaternion ups = HurwitzQuaternion::pure(sx / d, sy / d, sz / d);
        HurwitzQuaternion Ups = HurwitzQuaternion::integers(-(d / e), p / e, q / e, rr / e);
        sm.upsilon = ups;

        /* Half-integer completion. The integral solutions are spanned by
         * ups and Ups; the full lattice refines this span by index at most 2,
         * and a nontrivial coset representative can always be written as
         * (Ups + k ups)/2 with k in {0, 1} (ups/2 itself is never a Hurwitz
         * quaternion since pure half-integral quaternions do not exist).
         * Membership is a pure parity condition, so scan both k. */
        bool have_half = false;
        for (int k = 0; k <= 1 && !have_half; ++k) {
            HurwitzQuaternion w = Ups + ups * k;
            const auto& dd = w.doubled();
            Int par = dd[0] / 2;
            bool uniform = true;
            for (int i = 1; i < 4; ++i)
                if (mpz_odd_p(Int(dd[i] / 2).get_mpz_t()) != mpz_odd_p(par.get_mpz_t()))
                    uniform = false;
            if (uniform && mpz_odd_p(par.get_mpz_t())) {
                sm.upsilon1 = HurwitzQuaternion::from_doubled(dd[0] / 2, dd[1] / 2, dd[2] / 2, dd[3] / 2);
                have_half = true;
            }
        }
        if (!have_half) sm.upsilon1 = Ups;
    }

    // both generators must solve the defining equation exactly
    for (const HurwitzQuaternion* v : {&sm.upsilon, &sm.upsilon1})
        if (*v * mu != mu_prime * *v)
            throw std::logic_error("solution module generator fails rho mu = mu' rho");
    return sm;
}

std::array<Int, 3> norm_form(const SolutionModule& sm) {
    Rat b2 = 2 * full_scalar_product(sm.upsilon, sm.upsilon1);
    if (b2.get_den() != 1) throw std::logic_error("norm form middle coefficient not integral");
    return {sm.upsilon.norm(), b2.get_num(), sm.upsilon1.norm()};
}

MinimalVector minimal_vector(const SolutionModule& sm) {
    HurwitzQuaternion u = sm.upsilon, v = sm.upsilon1;
    if (u.norm() > v.norm()) std::swap(u, v);
    int iters = 0;
    while (true) {
        Rat ratio = full_scalar_product(u, v) / Rat(u.norm());
        Int X = round_half_up(ratio);
        v = v - u * X;
        ++iters;
        if (u.norm() > v.norm()) std::swap(u, v);
        else break;
        if (iters > 10000) throw std::logic_error("reduction loop overrun");
    }
    if (u.norm() == v.norm()) {
        Rat f = full_scalar_product(u, v);
        if (2 * abs(f) >= u.norm()) {
            HurwitzQuaternion cand = f > 0 ? v - u : v + u;
            if (cand.norm() < u.norm()) u = cand;
        }
    }
    if (!is_primitive(u)) throw std::logic_error("minimal vector is imprimitive");
    return {u, iters};
}

}  // namespace quatideal

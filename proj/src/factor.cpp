#include "quatideal/factor.hpp"

#include <sstream>
#include <stdexcept>

#include "quatideal/forms.hpp"

namespace quatideal {

FactorWitness make_factor_witness(const Int& m, const Int& factor) {
    if (factor <= 1 || factor >= m || m % factor != 0)
        throw std::domain_error("InvalidWitness: factor must properly divide m");
    FactorWitness w;
    w.m = m;
    w.factor = factor;
    return w;
}

std::string FactorWitness::describe() const {
    std::ostringstream os;
    os << factor.get_str() << " | " << m.get_str();
    if (representations) {
        const auto& r = *representations;
        os << " via (" << r[0].get_str() << "," << r[1].get_str() << "), ("
           << r[2].get_str() << "," << r[3].get_str() << ")";
    }
    if (rho) os << " via rho = " << rho->str() << " of norm " << rho_norm.get_str();
    return os.str();
}

FactorWitness fermat_two_squares(const Int& m, const Int& x0, const Int& y0,
                                 const Int& x1, const Int& y1, bool doubled_square) {
    const Int w = doubled_square ? 2 : 1;
    bool ordered = doubled_square ? (y0 >= 0 && y1 >= 0 && x0 > x1 && x1 >= 0)
                                  : (x0 >= y0 && y0 >= 0 && x1 >= y1 && y1 >= 0 && x0 > x1);
    if (!ordered)
        throw std::domain_error("NotTwoRepresentations: representations must be ordered and distinct");
    if (x0 * x0 + w * y0 * y0 != m || x1 * x1 + w * y1 * y1 != m)
        throw std::domain_error("NotTwoRepresentations: values do not represent m");
    Int g;
    Int cross = x0 * y1 - y0 * x1;
    mpz_gcd(g.get_mpz_t(), cross.get_mpz_t(), m.get_mpz_t());
    FactorWitness out = make_factor_witness(m, g);
    out.representations = {x0, y0, x1, y1};
    return out;
}

static std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// all (X, Y) with A X^2 + B X Y + C Y^2 = n for a negative-discriminant form
static std::vector<std::pair<Int, Int>> represent(const Int& A, const Int& B, const Int& C,
                                                  const Int& n) {
    std::vector<std::pair<Int, Int>> out;
    Int D = B * B - 4 * A * C;
    Int ymax2 = 4 * A * n / (-D);
    Int ymax;
    mpz_sqrt(ymax.get_mpz_t(), ymax2.get_mpz_t());
    for (Int y = -ymax - 1; y <= ymax + 1; ++y) {
        Int disc = B * B * y * y - 4 * A * (C * y * y - n);
        if (disc < 0) continue;
        Int s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        if (s * s != disc) continue;
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            Int num = -B * y + (sign ? -s : s);
            if (num % (2 * A) != 0) continue;
            out.push_back({num / (2 * A), y});
        }
    }
    return out;
}

/* A generator rho of norm n carries an ambiguous ideal of [1, mu] exactly
 * when its basis residue b (n | b^2 + m, rho right-divides b + mu) is fixed
 * by conjugation, i.e. n | 2b. For m not 3 mod 4 this is the maximal order
 * O(mu); for m = 3 mod 8 it is the index-2 suborder, which is where
 * solutions of rho mu = -mu rho live (their norms are always even). */
static std::optional<Int> ambiguous_basis_residue(const HurwitzQuaternion& rho, const Int& n,
                                                  const HurwitzQuaternion& mu, const Int& m) {
    for (Int b = 0; b < n; ++b) {
        if ((b * b + m) % n != 0) continue;
        if (!divides_right(rho, mu + HurwitzQuaternion::scalar(b))) continue;
        if ((2 * b) % n == 0) return b;
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<FactorWitness> factor_from_order_pair(const QuadraticOrder& o,
                                                    const QuadraticOrder& o2) {
    if (o.m != o2.m) throw std::domain_error("NormMismatch: order pair needs equal norms");
    const Int& m = o.m;
    SolutionModule sm = solve(o.mu, o2.mu);
    auto [A, B, C] = norm_form(sm);
    for (const Int& n : divisors_of(4 * m)) {
        if (n == 1) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
        if (g == 1 || g == m) continue;
        for (const auto& [X, Y] : represent(A, B, C, n)) {
            HurwitzQuaternion rho = sm.at(X, Y);
            if (content(rho) != 1) continue;
            if (!ambiguous_basis_residue(rho, n, o.mu, m)) continue;
            if (!divides_right(rho, o.mu * 2)) continue;   // ambiguity witness
            FactorWitness w = make_factor_witness(m, g);
            w.mu = o.mu;
            w.mu2 = o2.mu;
            w.rho = canonical_associate(rho);
            w.rho_norm = n;
            return w;
        }
    }
    return std::nullopt;
}

static int zero_count(const HurwitzQuaternion& mu) {
    return (mu.x() == 0) + (mu.y() == 0) + (mu.z() == 0);
}

static bool two_equal_magnitudes(const HurwitzQuaternion& mu) {
    Int ax = abs(mu.x()), ay = abs(mu.y()), az = abs(mu.z());
    int eq = (ax == ay) + (ay == az) + (ax == az);
    return eq == 1;
}

ShapeLawReport verify_shape_law(const QuadraticOrder& o, const Ideal& ideal) {
    ShapeLawReport rep;
    if (zero_count(o.mu) == 1) {
        rep.which = 1;
    } else if (two_equal_magnitudes(o.mu)) {
        rep.which = 2;
    } else {
        throw std::domain_error("ShapeMismatch: mu has neither one zero nor two equal coefficients");
    }
    QuadraticOrder right = right_order(ideal);
    rep.shape_holds = rep.which == 1 ? zero_count(right.mu) == 1 : two_equal_magnitudes(right.mu);
    rep.class_ambiguous = is_ambiguous_class(ideal);
    return rep;
}

}  // namespace quatideal

#include "quatideal/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quatideal {

static Int mod_floor(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

static void check_form(const BinaryQuadraticForm& f) {
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::domain_error("NotPositiveDefinite: form must have a > 0 and negative discriminant");
}

bool BinaryQuadraticForm::is_reduced() const {
    if (!(-a < b && b <= a && a <= c)) return false;
    if ((a == c || b == a) && b < 0) return false;
    return true;
}

BinaryQuadraticForm reduce_form(BinaryQuadraticForm f) {
    check_form(f);
    while (true) {
        if (-f.a < f.b && f.b <= f.a && f.a <= f.c) {
            if (f.a == f.c && f.b < 0) f.b = -f.b;
            return f;
        }
        if (f.c < f.a || (f.c == f.a && f.b < 0)) {
            f = {f.c, -f.b, f.a};
        } else {
            Int t;
            mpz_fdiv_q(t.get_mpz_t(), Int(f.b + f.a - 1).get_mpz_t(), Int(2 * f.a).get_mpz_t());
            f = {f.a, f.b - 2 * f.a * t, f.a * t * t - f.b * t + f.c};
        }
    }
}

ExtGcd ext_gcd(const Int& u, const Int& v) {
    Int old_r = u, r = v, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

BinaryQuadraticForm compose(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
    check_form(f);
    check_form(g);
    if (f.discriminant() != g.discriminant())
        throw std::domain_error("DiscriminantMismatch: composition needs equal discriminants");
    Int s = (f.b + g.b) / 2;
    ExtGcd e1 = ext_gcd(f.a, g.a);
    ExtGcd e2 = ext_gcd(e1.g, s);
    Int d = e2.g;
    Int v = e1.s * e2.s;
    Int a2d = g.a / d;
    Int A = f.a * a2d / d;
    Int t = (s - g.b) * v - e2.t * g.c;
    Int B = g.b + 2 * t * a2d;
    Int C = (B * B - f.discriminant()) / (4 * A);
    return reduce_form({A, B, C});
}

BinaryQuadraticForm form_inverse(const BinaryQuadraticForm& f) {
    return reduce_form({f.a, -f.b, f.c});
}

BinaryQuadraticForm principal_form(const Int& discriminant) {
    if (discriminant >= 0 || (mod_floor(discriminant, 4) != 0 && mod_floor(discriminant, 4) != 1))
        throw std::domain_error("InvalidDiscriminant: need negative, 0 or 1 mod 4");
    Int b = mpz_odd_p(discriminant.get_mpz_t()) ? 1 : 0;
    return {1, b, (b * b - discriminant) / 4};
}

BinaryQuadraticForm form_power(const BinaryQuadraticForm& f, const Int& e) {
    if (e < 0) return form_power(form_inverse(f), -e);
    BinaryQuadraticForm acc = principal_form(f.discriminant());
    BinaryQuadraticForm base = reduce_form(f);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = compose(acc, base);
        base = compose(base, base);
        k /= 2;
    }
    return acc;
}

bool forms_equivalent(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
    return reduce_form(f) == reduce_form(g);
}

std::vector<BinaryQuadraticForm> reduced_forms(const Int& discriminant) {
    if (discriminant >= 0 || (mod_floor(discriminant, 4) != 0 && mod_floor(discriminant, 4) != 1))
        throw std::domain_error("InvalidDiscriminant: need negative, 0 or 1 mod 4");
    std::vector<BinaryQuadraticForm> out;
    Int limit = -discriminant;
    for (Int a = 1; 3 * a * a <= limit; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod_floor(b, 2) != mod_floor(discriminant, 2)) continue;
            Int num = b * b - discriminant;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (a > c) continue;
            if ((a == c || b == a) && b < 0) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

Int class_number(const Int& discriminant) {
    return Int(reduced_forms(discriminant).size());
}

ClassGroupDescription class_group(const Int& discriminant) {
    std::vector<BinaryQuadraticForm> forms = reduced_forms(discriminant);
    Int h = Int(forms.size());
    ClassGroupDescription out;
    out.discriminant = discriminant;
    out.h = h;
    if (h == 1) { out.elementary_divisors = {}; return out; }

    // per-prime exponent partition from the counts of p^k-torsion elements
    std::map<Int, std::vector<int>> partitions;
    Int rest = h;
    for (Int p = 2; p * p <= rest || rest > 1; ++p) {
        if (p * p > rest) p = rest;
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::vector<int> part;   // part[j] = number of divisors with p-exponent > j
        Int prev_count = 1;
        Int pk = 1;
        while (true) {
            pk *= p;
            Int count = 0;
            for (const auto& f : forms)
                if (form_power(f, pk) == principal_form(discriminant)) ++count;
            if (count == prev_count) break;
            Int ratio = count / prev_count;
            int members = 0;
            Int q = ratio;
            while (q > 1) { q /= p; ++members; }
            part.push_back(members);
            prev_count = count;
        }
        partitions[p] = part;
    }

    size_t rank = 0;
    for (const auto& [p, part] : partitions) rank = std::max(rank, part.size() ? size_t(part[0]) : 0);
    std::vector<Int> divisors(rank, 1);
    for (const auto& [p, part] : partitions) {
        // exponent of the j-th divisor at p = number of levels with >= j+1 members
        for (size_t j = 0; j < rank; ++j) {
            int e = 0;
            for (int members : part)
                if (members >= int(j) + 1) ++e;
            for (int i = 0; i < e; ++i) divisors[j] *= p;
        }
    }
    out.elementary_divisors = divisors;
    Int prod = 1;
    for (const auto& d : divisors) prod *= d;
    if (prod != h) throw std::logic_error("class group structure does not multiply to h");
    return out;
}

Int discriminant_of(const Int& m) {
    if (m <= 0 || !is_squarefree(m) || m % 8 == 7)
        throw std::domain_error("InvalidDiscriminant: m must be squarefree, positive, not 7 mod 8");
    return (m % 4 == 3) ? Int(-m) : Int(-4 * m);
}

BinaryQuadraticForm form_of_z_basis(const Int& a, const Int& b, const Int& m, int r) {
    Int t = Int(r) * b + (r - 1);
    return {a, 2 * b + (r - 1), (t * t + m) / (Int(r * r) * a)};
}

BinaryQuadraticForm ideal_to_form(const Ideal& ideal) {
    ZBasis z = restore_z_basis(ideal.primitive_part());
    return form_of_z_basis(z.a, z.b, ideal.order().m, ideal.order().r);
}

// trial-division factorization, desk scale
static std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// any root of x^2 = a (mod p^e), p odd prime; brute force at the prime, Hensel lift
static std::optional<Int> sqrt_mod_prime_power(const Int& a0, const Int& p, int e) {
    Int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    Int a = mod_floor(a0, pe);
    if (p == 2) {
        for (Int x = 0; x < pe; ++x)
            if (mod_floor(x * x - a, pe) == 0) return x;
        return std::nullopt;
    }
    Int ap = mod_floor(a, p);
    std::optional<Int> root;
    for (Int x = 0; 2 * x <= p; ++x)
        if (mod_floor(x * x - ap, p) == 0) { root = x; break; }
    if (!root) return std::nullopt;
    Int x = *root;
    if (mod_floor(x, p) == 0) {
        // a divisible by p: handle only the simple total cases by scan
        for (Int y = 0; y < pe; ++y)
            if (mod_floor(y * y - a, pe) == 0) return y;
        return std::nullopt;
    }
    Int pk = p;
    while (pk < pe) {
        // Hensel: x' = x - (x^2 - a) * (2x)^-1 mod pk^2
        Int pk2 = pk * pk;
        if (pk2 > pe) pk2 = pe;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), Int(mod_floor(2 * x, pk2)).get_mpz_t(), pk2.get_mpz_t()) == 0)
            return std::nullopt;
        x = mod_floor(x - (x * x - a) * inv, pk2);
        pk = pk2;
    }
    return x;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& n) {
    if (n < 1) throw std::domain_error("InvalidModulus: n must be positive");
    if (n == 1) return Int(0);
    Int x = 0, mod = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        auto r = sqrt_mod_prime_power(a, p, e);
        if (!r) return std::nullopt;
        // CRT combine x (mod mod) with r (mod pe)
        ExtGcd eg = ext_gcd(mod, pe);
        Int comb = mod_floor(x + mod * mod_floor((*r - x) * eg.s, pe), mod * pe);
        x = comb;
        mod *= pe;
    }
    // prefer the smaller representative
    if (2 * x > mod) x = mod - x;
    if (mod_floor(x * x - a, n) != 0) throw std::logic_error("sqrt_mod produced a non-root");
    return x;
}

}  // namespace quatideal

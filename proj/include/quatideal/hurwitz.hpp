#ifndef QUATIDEAL_HURWITZ_HPP
#define QUATIDEAL_HURWITZ_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quatideal {

using Int = mpz_class;
using Rat = mpq_class;

class RationalQuaternion;

/* Quaternion with integer or half-integer coordinates, stored as doubled
 * coordinates (da, db, dc, dd) representing (da + db*i + dc*j + dd*k)/2.
 * Invariant: da = db = dc = dd (mod 2). */
class HurwitzQuaternion {
public:
    HurwitzQuaternion() : d_{0, 0, 0, 0} {}

    static HurwitzQuaternion from_doubled(Int da, Int db, Int dc, Int dd);
    static HurwitzQuaternion integers(const Int& t, const Int& x, const Int& y, const Int& z);
    static HurwitzQuaternion scalar(const Int& t) { return integers(t, 0, 0, 0); }
    static HurwitzQuaternion pure(const Int& x, const Int& y, const Int& z) {
        return integers(0, x, y, z);
    }

    const Int& da() const { return d_[0]; }
    const Int& db() const { return d_[1]; }
    const Int& dc() const { return d_[2]; }
    const Int& dd() const { return d_[3]; }
    const std::array<Int, 4>& doubled() const { return d_; }

    bool is_zero() const;
    bool is_integral() const;   // integer coordinates
    bool is_pure() const { return d_[0] == 0; }
    bool is_unit() const { return norm() == 1; }

    Rat real() const;
    Int norm() const;           // always a non-negative integer
    HurwitzQuaternion conjugate() const;
    HurwitzQuaternion vector_part() const;
    RationalQuaternion inverse() const;   // throws on zero

    // integer coordinates; throws if half-integral
    Int t() const; Int x() const; Int y() const; Int z() const;

    HurwitzQuaternion operator-() const;
    HurwitzQuaternion operator+(const HurwitzQuaternion& r) const;
    HurwitzQuaternion operator-(const HurwitzQuaternion& r) const;
    HurwitzQuaternion operator*(const HurwitzQuaternion& r) const;
    HurwitzQuaternion operator*(const Int& n) const;
    bool operator==(const HurwitzQuaternion& r) const { return d_ == r.d_; }
    bool operator!=(const HurwitzQuaternion& r) const { return d_ != r.d_; }

    std::string str() const;
    std::string json() const;

private:
    std::array<Int, 4> d_;
};

std::ostream& operator<<(std::ostream& os, const HurwitzQuaternion& q);

/* Exact rational quaternion; carrier for inverses and conjugation results
 * before integrality is established. */
class RationalQuaternion {
public:
    RationalQuaternion() : c_{} {}
    RationalQuaternion(Rat t, Rat x, Rat y, Rat z);
    explicit RationalQuaternion(const HurwitzQuaternion& q);

    const Rat& t() const { return c_[0]; }
    const Rat& x() const { return c_[1]; }
    const Rat& y() const { return c_[2]; }
    const Rat& z() const { return c_[3]; }

    bool is_zero() const;
    bool is_hurwitz() const;
    HurwitzQuaternion to_hurwitz() const;   // throws if not integral

    Rat norm() const;
    RationalQuaternion conjugate() const;
    RationalQuaternion inverse() const;

    RationalQuaternion operator+(const RationalQuaternion& r) const;
    RationalQuaternion operator-(const RationalQuaternion& r) const;
    RationalQuaternion operator*(const RationalQuaternion& r) const;
    bool operator==(const RationalQuaternion& r) const { return c_ == r.c_; }

private:
    std::array<Rat, 4> c_;
};

using Unit = HurwitzQuaternion;

// the 24 units of the Hurwitz ring
const std::vector<Unit>& units();

// q r = -(q,r) + [q,r] for pure q, r; products may have quarter-integer parts
Rat scalar_product(const HurwitzQuaternion& q, const HurwitzQuaternion& r);
Rat full_scalar_product(const HurwitzQuaternion& q, const HurwitzQuaternion& r);
RationalQuaternion vector_product(const HurwitzQuaternion& q, const HurwitzQuaternion& r);

// largest n >= 1 with q/n still in the Hurwitz ring
Int content(const HurwitzQuaternion& q);
bool is_primitive(const HurwitzQuaternion& q);
HurwitzQuaternion divide_exact(const HurwitzQuaternion& q, const Int& n);

struct DivRem {
    HurwitzQuaternion quotient;
    HurwitzQuaternion remainder;   // N(remainder) < N(divisor)
};

// q = quotient * d + remainder
DivRem div_rem_right(const HurwitzQuaternion& q, const HurwitzQuaternion& d);

bool divides_right(const HurwitzQuaternion& d, const HurwitzQuaternion& q);
bool divides_left(const HurwitzQuaternion& d, const HurwitzQuaternion& q);

// greatest common right (left) divisor, canonicalized
HurwitzQuaternion gcd_right(const HurwitzQuaternion& q, const HurwitzQuaternion& r);
HurwitzQuaternion gcd_left(const HurwitzQuaternion& q, const HurwitzQuaternion& r);

/* Deterministic representative of the orbit {eps q} (left) or {q eps} (right):
 * sign-normalized, smallest (db, dc, dd, da) key. */
HurwitzQuaternion canonical_associate(const HurwitzQuaternion& q);
HurwitzQuaternion canonical_associate_right(const HurwitzQuaternion& q);

// some left-unit multiple with integer coordinates (always exists)
HurwitzQuaternion integral_associate(const HurwitzQuaternion& q);

// parses "1+2i-j" and "(1+i+j+k)/2" forms
HurwitzQuaternion parse_quaternion(const std::string& s);
HurwitzQuaternion quaternion_from_json(const std::string& s);

// floor(x + 1/2), exact
Int round_half_up(const Rat& x);

}  // namespace quatideal

#endif

#ifndef QUATIDEAL_FORMS_HPP
#define QUATIDEAL_FORMS_HPP

#include <optional>
#include <vector>

#include "quatideal/ideals.hpp"

namespace quatideal {

/* Positive definite integral binary quadratic form a x^2 + b x y + c y^2.
 * Classical machinery, independent of the quaternion path. */
struct BinaryQuadraticForm {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool operator==(const BinaryQuadraticForm& f) const { return a == f.a && b == f.b && c == f.c; }
    bool operator!=(const BinaryQuadraticForm& f) const { return !(*this == f); }
};

BinaryQuadraticForm reduce_form(BinaryQuadraticForm f);
BinaryQuadraticForm compose(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g);
BinaryQuadraticForm form_inverse(const BinaryQuadraticForm& f);
BinaryQuadraticForm principal_form(const Int& discriminant);
BinaryQuadraticForm form_power(const BinaryQuadraticForm& f, const Int& e);
bool forms_equivalent(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g);

// all reduced primitive forms of the given discriminant
std::vector<BinaryQuadraticForm> reduced_forms(const Int& discriminant);
Int class_number(const Int& discriminant);

struct ClassGroupDescription {
    Int discriminant;
    Int h;
    std::vector<Int> elementary_divisors;   // m1 >= m2 >= ..., m_{j+1} | m_j
};
ClassGroupDescription class_group(const Int& discriminant);

// discriminant of the maximal order of Q(sqrt(-m))
Int discriminant_of(const Int& m);

BinaryQuadraticForm form_of_z_basis(const Int& a, const Int& b, const Int& m, int r);
BinaryQuadraticForm ideal_to_form(const Ideal& ideal);

struct ExtGcd {
    Int g, s, t;   // g = s*u + t*v
};
ExtGcd ext_gcd(const Int& u, const Int& v);

// some x with x^2 = a (mod n), via factorization, lifting and CRT
std::optional<Int> sqrt_mod(const Int& a, const Int& n);

}  // namespace quatideal

#endif

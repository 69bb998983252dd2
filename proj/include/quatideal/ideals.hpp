#ifndef QUATIDEAL_IDEALS_HPP
#define QUATIDEAL_IDEALS_HPP

#include <optional>

#include "quatideal/orders.hpp"
#include "quatideal/solutions.hpp"

namespace quatideal {

struct ZBasis {
    Int a;                 // norm of the primitive part, a > 0
    Int b;                 // 0 <= b < a, with r^2 a | (rb + r - 1)^2 + m
    QuadraticOrder order;
    Int c = 1;             // content multiplier
};

/* Ideal of a quadratic order O(mu), represented by its right pseudo
 * generator alone. rho is canonical and content is extracted so that
 * rho/content is primitive. */
class Ideal {
public:
    Ideal() = default;

    const QuadraticOrder& order() const { return order_; }
    const HurwitzQuaternion& rho() const { return rho_; }
    const Int& content() const { return content_; }
    Int norm() const;                       // N(rho)/content^2
    bool is_primitive() const { return content_ == 1; }
    Ideal primitive_part() const;

    bool operator==(const Ideal& o) const {
        return order_ == o.order_ && rho_ == o.rho_ && content_ == o.content_;
    }
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    /* Builds the ideal with right pseudo generator rho; validates the
     * pseudo-generator criterion (rho mu rho^-1 integral; odd norm of the
     * primitive part when m = 3 mod 8). */
    static Ideal from_rho(const QuadraticOrder& o, const HurwitzQuaternion& rho);
    static Ideal unit_ideal(const QuadraticOrder& o);

private:
    QuadraticOrder order_;
    HurwitzQuaternion rho_;
    Int content_ = 1;
};

Ideal from_z_basis(const ZBasis& z);
ZBasis restore_z_basis(const Ideal& ideal);

QuadraticOrder right_order(const Ideal& ideal);                     // O(rho mu rho^-1)
QuadraticOrder left_order_of(const HurwitzQuaternion& rho_left, const QuadraticOrder& o);

/* Pseudo-generator conversions for the same ideal. */
HurwitzQuaternion right_from_left(const HurwitzQuaternion& rho_left, const QuadraticOrder& o);
HurwitzQuaternion left_from_right(const HurwitzQuaternion& rho_right, const QuadraticOrder& o);

Ideal conjugate_ideal(const Ideal& ideal);

// product ideal, primitive part stored with recorded content
Ideal multiply(const Ideal& lhs, const Ideal& rhs);

// reduced ideal equivalent to the input; iteration count of the Gauss loop
Ideal reduce(const Ideal& ideal, int* iterations = nullptr);

bool is_ambiguous_ideal(const Ideal& ideal);
bool is_ambiguous_class(const Ideal& ideal);

struct IdentityReport {
    bool generator_relation;   // (omega,rho) + Re(rho)(b + (r-1)/r) = Re(xi) N(rho)
    bool generator_relation_xi;
    bool trace_relation;       // (m + (mu,mu'))/r   = Re(xi)(mu,rho) + Re(rho)(mu,xi)
    bool norm_relation;        // (m + (mu,mu'))/r^2 = quadratic in Re(rho), Re(xi)
    bool all() const {
        return generator_relation && generator_relation_xi && trace_relation && norm_relation;
    }
};
IdentityReport check_identities(const Ideal& ideal);

}  // namespace quatideal

#endif

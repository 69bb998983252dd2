#ifndef QUATIDEAL_ORDERS_HPP
#define QUATIDEAL_ORDERS_HPP

#include <array>
#include <optional>
#include <vector>

#include "quatideal/hurwitz.hpp"

namespace quatideal {

/* Commutative subring [1, omega] of the Hurwitz ring generated by a pure
 * primitive quaternion mu with mu^2 = -m, m squarefree and not 7 mod 8. */
struct QuadraticOrder {
    HurwitzQuaternion mu;      // pure, integer coordinates, primitive
    Int m;                     // N(mu)
    int r;                     // 2 iff m = 3 (mod 4), else 1
    HurwitzQuaternion omega;   // (r - 1 + mu)/r

    static QuadraticOrder from_mu(const HurwitzQuaternion& mu);

    bool operator==(const QuadraticOrder& o) const { return mu == o.mu; }
    bool operator!=(const QuadraticOrder& o) const { return mu != o.mu; }
};

enum class OrderSign { positive, negative, both, none };

bool is_squarefree(const Int& m);
bool is_prime_desk(const Int& m);

struct ThreeSquares {
    Int x, y, z;   // x >= y >= z >= 0
};

// lexicographically largest representation; throws NoRepresentation
ThreeSquares three_squares(const Int& m);
// all representations up to sign and permutation, descending
std::vector<ThreeSquares> all_three_squares(const Int& m);

QuadraticOrder make_order(const Int& x, const Int& y, const Int& z);

// mu2 = eps mu1 conj(eps) for one of the 24 units
std::optional<Unit> order_equivalence_witness(const QuadraticOrder& o1, const QuadraticOrder& o2);
bool orders_equivalent(const QuadraticOrder& o1, const QuadraticOrder& o2);
bool pure_equivalent(const HurwitzQuaternion& mu1, const HurwitzQuaternion& mu2);

OrderSign sign_of_order(const QuadraticOrder& o);
OrderSign sign_of_mu(const HurwitzQuaternion& mu);

const char* to_string(OrderSign s);

}  // namespace quatideal

#endif

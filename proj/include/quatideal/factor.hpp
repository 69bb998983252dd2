#ifndef QUATIDEAL_FACTOR_HPP
#define QUATIDEAL_FACTOR_HPP

#include <optional>
#include <string>

#include "quatideal/ideals.hpp"

namespace quatideal {

/* A nontrivial divisor of m together with the data that produced it. */
struct FactorWitness {
    Int m;
    Int factor;   // 1 < factor < m, factor | m
    // two-representation route
    std::optional<std::array<Int, 4>> representations;   // x0, y0, x1, y1
    // ambiguous-ideal route
    std::optional<HurwitzQuaternion> mu, mu2, rho;
    Int rho_norm = 0;

    std::string describe() const;
};

FactorWitness make_factor_witness(const Int& m, const Int& factor);

/* gcd(x0 y1 - y0 x1, m) for two representations m = x^2 + y^2
 * (or m = x^2 + 2 y^2 when doubled_square). */
FactorWitness fermat_two_squares(const Int& m, const Int& x0, const Int& y0,
                                 const Int& x1, const Int& y1, bool doubled_square = false);

/* Searches the solution module of rho mu = mu2 rho for an ambiguous-ideal
 * generator whose norm shares a proper factor with m. */
std::optional<FactorWitness> factor_from_order_pair(const QuadraticOrder& o,
                                                    const QuadraticOrder& o2);

struct ShapeLawReport {
    bool class_ambiguous;
    bool shape_holds;        // right order has the hypothesis shape
    bool biconditional() const { return class_ambiguous == shape_holds; }
    int which;               // 1: one zero coefficient, 2: two equal magnitudes
};

/* Shape laws for ambiguous classes: mu with one zero coefficient, or with
 * two coefficients equal in absolute value. */
ShapeLawReport verify_shape_law(const QuadraticOrder& o, const Ideal& ideal);

}  // namespace quatideal

#endif

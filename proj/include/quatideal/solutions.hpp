#ifndef QUATIDEAL_SOLUTIONS_HPP
#define QUATIDEAL_SOLUTIONS_HPP

#include <array>

#include "quatideal/hurwitz.hpp"

namespace quatideal {

/* Rank-2 lattice [upsilon, upsilon1] of all Hurwitz solutions rho of
 * rho mu = mu' rho for fixed pure primitive mu, mu' of equal norm. */
struct SolutionModule {
    HurwitzQuaternion upsilon;
    HurwitzQuaternion upsilon1;
    HurwitzQuaternion mu;
    HurwitzQuaternion mu_prime;

    HurwitzQuaternion at(const Int& x, const Int& y) const {
        return upsilon * x + upsilon1 * y;
    }
};

struct ExtGcd3 {
    Int g, a, b, c;   // g = a*u + b*v + c*w
};
ExtGcd3 ext_gcd3(const Int& u, const Int& v, const Int& w);

SolutionModule solve(const HurwitzQuaternion& mu, const HurwitzQuaternion& mu_prime);

// (A, B, C) with N(ups X + ups1 Y) = A X^2 + B X Y + C Y^2
std::array<Int, 3> norm_form(const SolutionModule& sm);

struct MinimalVector {
    HurwitzQuaternion vector;   // smallest positive norm in the lattice
    int iterations;
};
MinimalVector minimal_vector(const SolutionModule& sm);

}  // namespace quatideal

#endif

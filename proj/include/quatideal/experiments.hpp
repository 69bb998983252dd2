#ifndef QUATIDEAL_EXPERIMENTS_HPP
#define QUATIDEAL_EXPERIMENTS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "quatideal/factor.hpp"
#include "quatideal/forms.hpp"

namespace quatideal {

struct CensusDetail {
    long m = 0;
    long x = 0, y = 0, z = 0;       // first representation that produced a witness
    int ambiguous_class_count = 0;  // successful representations for this m
    long factor_found = 0;          // proper divisor from the first witness
};

struct CensusRow {
    long limit = 0;
    long count_sigma = 0;
    long count_a = 0;
    double percent = 0.0;
    long argmax_m = 0;
    int argmax_count = 0;
    std::optional<CensusDetail> example_in_a;   // smallest member of A
    long example_outside = 0;                   // smallest member of Sigma \ A
};

/* Number of representations of m whose solution lattice of rho mu = -mu rho
 * carries a nontrivial ambiguous ideal, with the witnesses. */
std::vector<CensusDetail> ambiguous_census_for(long m);

using CensusProgress = std::function<void(long processed, long total)>;

CensusRow census(long limit, int threads = 1,
                 std::vector<CensusDetail>* details = nullptr,
                 const CensusProgress& progress = nullptr);

struct Table3Row {
    long m;
    Int discriminant;
    Int h;
    std::vector<Int> elementary_divisors;
    int ambiguous_count;
};
std::vector<Table3Row> census_table3(const std::vector<long>& ms);

struct Cycle {
    ZBasis seed;
    std::vector<HurwitzQuaternion> orders;   // mu_1 ... mu_f
    std::vector<OrderSign> signs;
    int length() const { return static_cast<int>(orders.size()); }
};

// ceil((1/pi) sqrt(|D|) ln |D|), an upper bound on the class number
Int class_number_bound(const Int& discriminant);

/* Walks mu_{i+1} = rho_i mu_i rho_i^-1 with rho_i the right pseudo generator
 * of [a, b + omega_i], until an order equivalent to mu_1 appears. */
Cycle walk_cycle(const ZBasis& seed);

/* The cycle's positive positions form one contiguous cyclic arc and the
 * negative positions the complementary arc (both-signed orders match either
 * side); equivalently the cycle has exactly two sign borders. */
bool is_separated(const Cycle& cycle);

// class order via the sign-border doubling search (seed must be separated)
Int order_via_separation(const ZBasis& seed);

// smallest f >= 1 with the f-th power principal, by multiply and reduce
Int order_via_bruteforce(const ZBasis& seed);

}  // namespace quatideal

#endif

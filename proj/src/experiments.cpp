#include "quatideal/experiments.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace quatideal {

std::vector<CensusDetail> ambiguous_census_for(long m) {
    std::vector<CensusDetail> out;
    Int mi(m);
    if (m < 2 || m % 8 == 7 || !is_squarefree(mi) || is_prime_desk(mi)) return out;
    for (const ThreeSquares& rep : all_three_squares(mi)) {
        if (rep.z == 0) continue;            // two-squares representations are always trivial
        if (rep.x == rep.y || rep.y == rep.z) continue;   // repeated coefficients likewise
        QuadraticOrder o = make_order(rep.x, rep.y, rep.z);
        QuadraticOrder o2 = QuadraticOrder::from_mu(-o.mu);
        if (auto w = factor_from_order_pair(o, o2)) {
            CensusDetail d;
            d.m = m;
            d.x = rep.x.get_si();
            d.y = rep.y.get_si();
            d.z = rep.z.get_si();
            d.ambiguous_class_count = 1;
            d.factor_found = w->factor.get_si();
            out.push_back(d);
        }
    }
    return out;
}

static bool sigma_member(long m) {
    Int mi(m);
    return m >= 2 && m % 8 != 7 && !is_prime_desk(mi) && is_squarefree(mi);
}

CensusRow census(long limit, int threads, std::vector<CensusDetail>* details,
                 const CensusProgress& progress) {
    if (limit < 10) throw std::domain_error("InvalidLimit: census needs limit >= 10");
    if (threads < 1) threads = 1;

    struct PerM {
        bool in_sigma = false;
        int count = 0;
        CensusDetail first;
    };
    std::vector<PerM> rows(limit + 1);
    std::atomic<long> next{2};
    std::atomic<long> processed{0};

    auto worker = [&] {
        while (true) {
            long m = next.fetch_add(1);
            if (m > limit) break;
            if (sigma_member(m)) {
                rows[m].in_sigma = true;
                auto wits = ambiguous_census_for(m);
                rows[m].count = static_cast<int>(wits.size());
                if (!wits.empty()) {
                    rows[m].first = wits.front();
                    rows[m].first.ambiguous_class_count = rows[m].count;
                }
            }
            long done = processed.fetch_add(1) + 1;
            if (progress && done % 10000 == 0) progress(done, limit - 1);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CensusRow row;
    row.limit = limit;
    for (long m = 2; m <= limit; ++m) {
        const PerM& r = rows[m];
        if (!r.in_sigma) continue;
        ++row.count_sigma;
        if (r.count > 0) {
            ++row.count_a;
            if (!row.example_in_a) row.example_in_a = r.first;
            if (r.count > row.argmax_count) {
                row.argmax_count = r.count;
                row.argmax_m = m;
            }
            if (details) details->push_back(r.first);
        } else if (row.example_outside == 0) {
            row.example_outside = m;
        }
    }
    row.percent = row.count_sigma ? 100.0 * double(row.count_a) / double(row.count_sigma) : 0.0;
    return row;
}

std::vector<Table3Row> census_table3(const std::vector<long>& ms) {
    std::vector<Table3Row> out;
    for (long m : ms) {
        Table3Row r;
        r.m = m;
        r.discriminant = discriminant_of(Int(m));
        ClassGroupDescription g = class_group(r.discriminant);
        r.h = g.h;
        r.elementary_divisors = g.elementary_divisors;
        r.ambiguous_count = static_cast<int>(ambiguous_census_for(m).size());
        out.push_back(r);
    }
    return out;
}

Int class_number_bound(const Int& discriminant) {
    double d = std::abs(discriminant.get_d());
    double bound = std::sqrt(d) * std::log(d) / 3.14159265358979323846;
    return Int(static_cast<long>(std::ceil(bound))) + 1;
}

Cycle walk_cycle(const ZBasis& seed) {
    Cycle cycle;
    cycle.seed = seed;
    Int guard = class_number_bound(discriminant_of(seed.order.m)) + 2;
    QuadraticOrder current = seed.order;
    while (true) {
        cycle.orders.push_back(current.mu);
        cycle.signs.push_back(sign_of_order(current));
        ZBasis moved = seed;
        moved.order = current;                    // same integers, new omega
        Ideal ideal = from_z_basis(moved);
        QuadraticOrder nxt = right_order(ideal);
        if (orders_equivalent(nxt, seed.order)) break;
        current = nxt;
        if (Int(cycle.length()) > guard)
            throw std::domain_error("CycleOverrun: walk exceeded the class-number bound");
    }
    return cycle;
}

bool is_separated(const Cycle& cycle) {
    std::vector<OrderSign> strict;
    for (OrderSign v : cycle.signs) {
        if (v == OrderSign::none)
            throw std::domain_error("UnsignedOrder: cycle contains an order with no sign");
        if (v != OrderSign::both) strict.push_back(v);   // both-signed matches either arc
    }
    if (strict.empty()) return true;
    int borders = 0;
    for (size_t i = 0; i < strict.size(); ++i)
        if (strict[i] != strict[(i + 1) % strict.size()]) ++borders;
    return borders <= 2;
}

// ---- class order via sign borders ----

namespace {

struct PowerCache {
    ZBasis seed;
    std::map<long, ZBasis> powers;   // s -> Z-basis of the reduced s-th power

    explicit PowerCache(const ZBasis& s) : seed(s) {
        Ideal red = reduce(from_z_basis(s).primitive_part());
        powers[1] = restore_z_basis(red);
    }

    const ZBasis& get(long s) {
        auto it = powers.find(s);
        if (it != powers.end()) return it->second;
        long half = s / 2;
        Ideal lhs = from_z_basis(get(half));
        Ideal rhs = from_z_basis(get(s - half));
        Ideal prod = reduce(multiply(lhs, rhs).primitive_part());
        powers[s] = restore_z_basis(prod);
        return powers[s];
    }
};

HurwitzQuaternion jump(PowerCache& cache, const HurwitzQuaternion& mu_from, long s, bool forward) {
    ZBasis z = cache.get(s);
    z.order = QuadraticOrder::from_mu(mu_from);
    Ideal moved = from_z_basis(z);
    if (forward) return right_order(moved).mu;
    HurwitzQuaternion lambda = left_from_right(moved.rho(), moved.order());
    return left_order_of(lambda, moved.order()).mu;
}

}  // namespace

Int order_via_separation(const ZBasis& seed) {
    Ideal start = reduce(from_z_basis(seed).primitive_part());
    if (start == Ideal::unit_ideal(seed.order)) return 1;

    Int guard = class_number_bound(discriminant_of(seed.order.m)) + 2;
    PowerCache cache(seed);
    std::map<long, HurwitzQuaternion> at;   // position -> representative order
    at[1] = seed.order.mu;

    std::function<const HurwitzQuaternion&(long)> position = [&](long p) -> const HurwitzQuaternion& {
        auto it = at.find(p);
        if (it != at.end()) return it->second;
        auto hi = at.lower_bound(p);          // nearest known position above p
        auto lo = hi == at.begin() ? at.end() : std::prev(hi);   // ... and below
        bool backward = lo == at.end() ||
                        (hi != at.end() && hi->first - p < p - lo->first);
        if (backward)
            at[p] = jump(cache, hi->second, hi->first - p, /*forward=*/false);
        else
            at[p] = jump(cache, lo->second, p - lo->first, /*forward=*/true);
        return at[p];
    };
    auto eval = [&](long p) -> OrderSign { return sign_of_mu(position(p)); };

    OrderSign base = eval(1);
    if (base == OrderSign::none)
        throw std::domain_error("UnsignedOrder: seed order has no sign");
    if (base == OrderSign::both) base = OrderSign::positive;

    auto same_side = [&](OrderSign v, OrderSign side) {
        return v == side || v == OrderSign::both;
    };
    auto opposite = [](OrderSign side) {
        return side == OrderSign::positive ? OrderSign::negative : OrderSign::positive;
    };

    /* Doubling plus bisection along direction dir; returns the last position
     * of the arc of `side` containing `from`. */
    auto find_border = [&](long from, OrderSign side, int dir) -> long {
        long lo = 0, step = 1;   // offsets from `from` along dir
        while (true) {
            if (Int(step) > 2 * guard)
                throw std::domain_error("NotSeparated: no sign border within the class-number bound");
            OrderSign v = eval(from + dir * (lo + step));
            if (!same_side(v, side)) break;
            lo += step;
            step *= 2;
        }
        long hi = lo + step;
        while (hi - lo > 1) {
            long mid = lo + (hi - lo) / 2;
            if (same_side(eval(from + dir * mid), side)) lo = mid;
            else hi = mid;
        }
        return from + dir * lo;
    };

    /* One border search forward (right pseudo generators) across the seed's
     * arc and the opposite arc, one backward (left pseudo generators) to the
     * seed arc's lower edge; their distances add up to the cycle length. */
    long border1 = find_border(1, base, +1);
    long border2 = find_border(border1 + 1, opposite(base), +1);
    long lower_edge = find_border(1, base, -1);
    long f = border2 + (1 - lower_edge);
    if (Int(f) > guard)
        throw std::domain_error("NotSeparated: computed order exceeds the class-number bound");
    if (!pure_equivalent(position(f + 1), position(1)))
        throw std::domain_error("NotSeparated: border arithmetic does not close the cycle");
    return Int(f);
}

Int order_via_bruteforce(const ZBasis& seed) {
    Ideal base = reduce(from_z_basis(seed).primitive_part());
    Ideal unit = Ideal::unit_ideal(seed.order);
    if (base == unit) return 1;
    Int guard = class_number_bound(discriminant_of(seed.order.m)) + 2;
    Ideal acc = base;
    for (Int f = 2; f <= guard; ++f) {
        acc = reduce(multiply(acc, base).primitive_part());
        if (acc == unit) return f;
    }
    throw std::logic_error("order_via_bruteforce exceeded the class-number bound");
}

}  // namespace quatideal

#pragma once

#include <string>
#include <vector>

#include "ecq/curves.hpp"

namespace ecq {

/// One of Mazur's fifteen groups, C_a x C_b with a | b and a in {1, 2},
/// plus witness generators on the model it was computed from.
struct TorsionGroup {
    int a;  // 1 for cyclic groups, 2 for C2 x C2n
    int b;
    std::vector<Point> generators;  // orders (b) for cyclic, (b, 2) otherwise

    int order() const { return a * b; }
    std::string name() const;
    bool operator==(const TorsionGroup& o) const { return a == o.a && b == o.b; }
};

/// #E(F_p) by the quadratic-character sum, direct loop. Requires an odd
/// prime p of good reduction (p does not divide the discriminant).
Int count_points_mod_p(const ShortModel& e, const Int& p);

/// gcd of #E(F_p) over the first 8 odd primes of good reduction; the
/// rational torsion order divides it.
Int torsion_bound(const ShortModel& e);

/// E(Q)_tors with witness points: 2-part from the cubic's roots plus
/// exact-order-4/8 division factors, odd part from exact-order factors
/// for 3, 5, 7, 9, every candidate confirmed by scalar multiplication.
TorsionGroup torsion_subgroup(const ShortModel& e);

/// Torsion of a general model, computed on its short form (witnesses are
/// on the converted model, not mapped back).
TorsionGroup torsion_subgroup(const LongModel& e);

}  // namespace ecq

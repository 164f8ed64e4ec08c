#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecq/eisenstein.hpp"
#include "ecq/numeric.hpp"

namespace ecq {

struct FermatParams {
    Int a, b, c, d;
    bool operator==(const FermatParams& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    std::string str() const;
};

/// Integer point on x^2 + 3y^2 = 4z^3; the equation is checked at
/// construction ("not on the surface" otherwise).
struct FermatSolution {
    Int x, y, z;
    FermatSolution(Int x_, Int y_, Int z_);
    bool operator==(const FermatSolution& o) const { return x == o.x && y == o.y && z == o.z; }
    std::string str() const;
};

/// The four-parameter family covering all integer solutions:
///   x = (c^2+cd+d^2) (3a^2 b(c-d) + a^3(2c+d) - b^3(2c+d) - 3ab^2(c+2d))
///   y = (c^2+cd+d^2) (3ab^2 c + a^3 d - b^3 d + 3a^2 b(c+d))
///   z = (c^2+cd+d^2) (a^2+ab+b^2)
/// Equivalently x + sqrt(-3) y = 2 (a+b rho)^3 (c+d rho)(c^2+cd+d^2).
FermatSolution param_forward(const FermatParams& p);

/// All integer solutions with 0 <= z <= z_max, signs included,
/// lexicographic by (x, y, z).
std::vector<FermatSolution> enumerate_solutions(const Int& z_max);

/// Inverse of param_forward up to fiber choice: returns params whose
/// forward image is exactly s. Follows the cube/residual split of the
/// factorization of (x - y) + 2y rho in Z[rho], with the unit placement
/// fixed by a finite search validated through param_forward.
FermatParams decompose(const FermatSolution& s);

}  // namespace ecq

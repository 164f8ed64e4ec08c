#pragma once

#include <utility>
#include <vector>

#include "ecq/curves.hpp"
#include "ecq/fermat.hpp"
#include "ecq/poly.hpp"

namespace ecq {

/// Y^2 = X^3 + (27a^4 + 6ab) X + (b^2 - 27a^6): the universal curve with a
/// rational 3-torsion point, discriminant -2^4 3^3 (5a^3+b)(9a^3+b)^3.
ShortModel e3(const Int& alpha, const Int& beta);
Int delta3_closed_form(const Int& alpha, const Int& beta);
/// The marked 3-torsion point (3a^2, 9a^3 + b) on e3(a, b).
Point e3_three_torsion(const Int& alpha, const Int& beta);

/// Tate normal form Y^2 + (1-c)XY - bY = X^3 - bX^2, b != 0; (0,0) lies on
/// the curve.
LongModel tate(const Rat& b, const Rat& c);

/// One-parameter families with a rational point of order n in {5, 7, 9},
/// Tate-form fibers taken to the integral -27c4/-54c6 short form. The
/// printed coefficient and discriminant identities are asserted on the
/// rational model.
ShortModel e_n(int n, const Rat& alpha);
/// The (A, B) pair of the rational short model of the order-n family.
std::pair<Rat, Rat> e_n_rational_coeffs(int n, const Rat& alpha);
/// Closed-form discriminant of the rational short model.
Rat delta_n_closed_form(int n, const Rat& alpha);

/// Square-discriminant 3-torsion families over a Fermat solution
/// (x, y, z) = forward(p): variant 1 is e3(-z, x^2 + 5z^3) with
/// discriminant 2^4 3^6 x^2 y^6, variant 2 is e3(-z, 3y^2 + 5z^3) with
/// discriminant 2^4 3^4 y^2 x^6.
ShortModel e_sq3(int variant, const FermatParams& p);
/// Coefficients of the variant's cubic without the nonsingularity gate
/// (the construction is coefficient-exact even where the curve degenerates).
std::pair<Int, Int> e_sq3_coeffs(int variant, const FermatParams& p);

/// Generic square-discriminant curve
/// Y^2 = X^3 - 3^4 N(c+d rho) N(a+b rho) X + 3^5 N(c+d rho) (a^3 d + 3a^2 bc
/// + 3a^2 bd + 3ab^2 c - b^3 d), i.e. (A, B) = (-81z, 243y); discriminant
/// 2^4 3^12 x^2.
ShortModel e_alt(const FermatParams& p);
std::pair<Int, Int> e_alt_coeffs(const FermatParams& p);

/// Inverse of e_alt up to Q-isomorphism: for square discriminant, solves
/// (x, y, z) = (C, 3B, -A) with C^2 = -(4A^3 + 27B^2) and decomposes.
FermatParams e_alt_params(const ShortModel& e);

/// Y^2 = P_m(X) for P_m = X^3 + mX^2 - (m+3)X + 1, whose splitting field
/// is the cyclic cubic with disc(P_m) = (m^2+3m+9)^2; short integral form.
ShortModel simplest_cubic(const Int& m);

/// Right-hand sides of the obstruction curves z^2 = f_n(alpha).
struct DCurve {
    int n;
    Poly rhs;
};
DCurve d_curve(int n);

/// All alpha of naive height <= height with f_n(alpha) a rational square,
/// with the nonnegative square root; ascending by alpha.
std::vector<std::pair<Rat, Rat>> d_search(int n, long height);

/// Exact checks behind the genus-1 quotient argument: the polynomial
/// identity (a^3-3a^2+1)^3 - 27a^3(a-1)^3 = (a^2-a+1)^3(a^3-6a^2+3a+1)
/// and the order-3 substitution X -> 1/(1-X), which also preserves f_9.
bool verify_quotient_map();

}  // namespace ecq

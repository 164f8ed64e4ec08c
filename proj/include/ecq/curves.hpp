#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ecq/numeric.hpp"
#include "ecq/poly.hpp"

namespace ecq {

/// Discriminant of Y^2 = X^3 + AX + B without a nonsingularity gate, so
/// degenerate pairs can be flagged by the caller.
Int short_discriminant(const Int& A, const Int& B);

/// Integral short Weierstrass model Y^2 = X^3 + AX + B, nonsingular.
struct ShortModel {
    Int A, B;
    ShortModel(Int A_, Int B_);
    Int discriminant() const { return short_discriminant(A, B); }
    bool operator==(const ShortModel& o) const { return A == o.A && B == o.B; }
    std::string str() const;
};

inline Int discriminant(const ShortModel& e) { return e.discriminant(); }

/// Discriminant of a general Weierstrass equation from the b-invariants,
/// again without the nonsingularity gate.
Rat long_discriminant(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4, const Rat& a6);

/// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 over Q, nonsingular.
struct LongModel {
    Rat a1, a2, a3, a4, a6;
    LongModel(Rat a1_, Rat a2_, Rat a3_, Rat a4_, Rat a6_);

    Rat b2() const { return a1 * a1 + 4 * a2; }
    Rat b4() const { return 2 * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + 4 * a6; }
    Rat b8() const { return (b2() * b6() - b4() * b4()) / 4; }
    Rat c4() const { return b2() * b2() - 24 * b4(); }
    Rat c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
    Rat discriminant() const { return long_discriminant(a1, a2, a3, a4, a6); }

    bool operator==(const LongModel& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }
    std::string str() const;
};

/// Point at infinity or exact affine coordinates on some stated model.
struct Point {
    static Point infinity() { return Point(); }
    static Point affine(Rat x, Rat y);

    bool is_infinity() const { return inf_; }
    const Rat& x() const;
    const Rat& y() const;
    bool operator==(const Point& o) const;
    std::string str() const;

private:
    Point() : inf_(true) {}
    bool inf_;
    Rat x_, y_;
};

bool on_curve(const LongModel& e, const Point& p);
bool on_curve(const ShortModel& e, const Point& p);

/// Chord-tangent group law with identity at infinity; inputs are checked
/// to lie on the model.
Point negate(const LongModel& e, const Point& p);
Point add(const LongModel& e, const Point& p, const Point& q);
Point mul(const LongModel& e, const Int& n, const Point& p);
Point negate(const ShortModel& e, const Point& p);
Point add(const ShortModel& e, const Point& p, const Point& q);
Point mul(const ShortModel& e, const Int& n, const Point& p);

/// The rational coefficients (-27 c4, -54 c6) of the short form of e,
/// before integral scaling. This is the model whose coefficients match
/// the printed one-parameter families verbatim.
std::pair<Rat, Rat> short_rational_coeffs(const LongModel& e);

struct ShortConversion {
    ShortModel model;
    Rat u;  // discriminant(model) = u^12 * e.discriminant()
};

/// Short integral model Q-isomorphic to e: Y^2 = X^3 - 27 c4 X - 54 c6,
/// cleared to integers by the minimal scale u (prime by prime, the least
/// power making u^4 A and u^6 B integral).
ShortConversion long_to_short_scaled(const LongModel& e);
ShortModel long_to_short(const LongModel& e);

/// u with A2 = u^4 A1 and B2 = u^6 B1, when the models are related by the
/// substitution (x, y) = (u^2 x', u^3 y'); positive representative.
std::optional<Rat> is_isomorphic(const ShortModel& e1, const ShortModel& e2);

/// n-division polynomial in the convention where Psi_2(X) = X^3 + AX + B
/// and Psi_3(X) = 3X^4 + 6AX^2 + 12BX - A^2; rational roots are the
/// x-coordinates of points of exact order dividing n. 2 <= n <= 12.
Poly division_polynomial(const ShortModel& e, int n);

/// The factor of Psi_n whose rational roots are x-coordinates of points of
/// exact order n (Psi_n divided by the lower exact-order factors).
Poly division_polynomial_exact_order(const ShortModel& e, int n);

}  // namespace ecq

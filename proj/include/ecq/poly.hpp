#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ecq/numeric.hpp"

namespace ecq {

/// Dense univariate polynomial over Q, coefficients ascending, trailing
/// zeros trimmed. Degrees in this project stay small (the division
/// polynomials top out at degree 70), so dense storage is the right shape.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c0);
    explicit Poly(const Int& c0);
    Poly(std::initializer_list<Rat> ascending);
    static Poly from_coeffs(std::vector<Rat> ascending);
    static Poly monomial(int deg, const Rat& coeff = Rat(1));
    static Poly x() { return monomial(1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of X^i (zero outside the stored range).
    const Rat& coeff(int i) const;
    const Rat& leading() const;
    Rat constant() const { return c_.empty() ? Rat(0) : c_[0]; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly compose(const Poly& inner) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& s);
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Euclidean division a = q*b + r, deg r < deg b. b nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Quotient of an exact division; throws if the remainder is nonzero.
    Poly divexact(const Poly& b) const;

    Poly monic() const;

    std::string str(const std::string& var = "X") const;

private:
    std::vector<Rat> c_;
    void trim();
};

/// Monic gcd over Q (primitive PRS on cleared-denominator polynomials).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Res(p, q) over Q, via the Euclidean remainder recurrence.
Rat resultant(const Poly& p, const Poly& q);

/// disc(p) = (-1)^(d(d-1)/2) * Res(p, p') / lc(p), deg p >= 1.
Rat poly_discriminant(const Poly& p);

/// All integer roots of a nonzero integer polynomial (coefficients
/// ascending), without multiplicity, unsorted. Found by Hensel lifting a
/// root mod a small prime past the Cauchy root bound, so the constant
/// term is never factored.
std::vector<Int> integer_roots(const std::vector<Int>& f);

/// All rational roots of p, distinct, ascending. Denominators are pinned
/// by the leading coefficient (monic transform); numerators come from
/// integer_roots. Throws on the zero polynomial.
std::vector<Rat> rational_roots(const Poly& p);

/// Clears denominators and removes integer content; returns the primitive
/// integer coefficient vector (ascending) of a nonzero polynomial.
std::vector<Int> primitive_integer_coeffs(const Poly& p);

/// Rational function in canonical form: den monic, gcd(num, den) = 1.
/// Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly(Rat(1))) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly num);
    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// f(inner) as a rational function; inner may be any rational function.
    RatFunc compose(const RatFunc& inner) const;

    std::string str(const std::string& var = "X") const;

private:
    Poly num_, den_;
};

/// true iff f and g agree as rational functions (canonical forms equal).
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

}  // namespace ecq

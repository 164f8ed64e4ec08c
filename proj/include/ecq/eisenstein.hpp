#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecq/numeric.hpp"

namespace ecq {

/// Element a + b*rho of Z[rho], rho = (1+sqrt(-3))/2, so rho^2 = rho - 1.
/// sqrt(-3) = 2*rho - 1, hence x + sqrt(-3)*y = (x - y) + 2y*rho.
struct EisInt {
    Int a, b;

    EisInt() : a(0), b(0) {}
    EisInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const EisInt& o) const { return a == o.a && b == o.b; }

    EisInt operator+(const EisInt& o) const { return {a + o.a, b + o.b}; }
    EisInt operator-(const EisInt& o) const { return {a - o.a, b - o.b}; }
    EisInt operator-() const { return {-a, -b}; }
    // (a+b rho)(c+d rho) = (ac - bd) + (ad + bc + bd) rho
    EisInt operator*(const EisInt& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b};
    }

    /// Complex conjugate: a + b - b*rho.
    EisInt conj() const { return {a + b, -b}; }

    std::string str() const;
};

/// N(a + b rho) = a^2 + ab + b^2 >= 0; multiplicative.
Int norm(const EisInt& g);

/// The six units: 1, rho, rho-1, -1, -rho, 1-rho (the sixth roots of unity).
const std::array<EisInt, 6>& eis_units();
bool eis_is_unit(const EisInt& g);

/// Preferred associate: the one with a > 0, b >= 0 (ties by lexicographic
/// (a, b) maximality). Zero maps to zero.
EisInt eis_canonical(const EisInt& g);

/// Euclidean division g = q*h + r with N(r) < N(h); the quotient rounds the
/// exact field quotient's coordinates to nearest integers.
std::pair<EisInt, EisInt> eis_divmod(const EisInt& g, const EisInt& h);

bool eis_divides(const EisInt& h, const EisInt& g);
EisInt eis_divexact(const EisInt& g, const EisInt& h);

/// gcd, canonicalized to the preferred associate. Not both zero.
EisInt eis_gcd(const EisInt& g, const EisInt& h);

struct EisFactorization {
    EisInt unit;
    std::vector<std::pair<EisInt, unsigned>> factors;  // canonical primes

    /// unit * prod(prime^e), for reconstruction checks.
    EisInt value() const;
};

/// Complete factorization into canonical Eisenstein primes: rational primes
/// p = 2 (mod 3) stay inert, p = 1 (mod 3) split via gcd with a lifted
/// square root of -3, and p = 3 ramifies as (1+rho)^2 up to a unit.
EisFactorization eis_factor(const EisInt& g);

/// If g = u * beta^3 for a unit u, returns (u, beta) with beta built from
/// canonical primes; empty when some exponent is not divisible by 3.
std::optional<std::pair<EisInt, EisInt>> eis_cube_classify(const EisInt& g);

}  // namespace ecq

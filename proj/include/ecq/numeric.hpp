#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecq {

// Exact arithmetic substrate. Int is an arbitrary-precision signed integer,
// Rat a rational kept in lowest terms with positive denominator. All
// operations below are pure; values are safe to copy across threads.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms, den > 0. Throws std::invalid_argument on den = 0.
Rat make_rat(const Int& num, const Int& den);

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

/// r >= 0 with r^2 = n, when n is a perfect square. Negative n: empty.
std::optional<Int> is_perfect_square(const Int& n);

/// s >= 0 with s^2 = q, i.e. numerator and denominator (lowest terms) are
/// both perfect squares.
std::optional<Rat> rational_is_square(const Rat& q);

/// Exact k-th root (k >= 1). Even k requires n >= 0.
std::optional<Int> integer_nth_root(const Int& n, unsigned k);
std::optional<Rat> rational_nth_root(const Rat& q, unsigned k);

bool is_probable_prime(const Int& n);

/// Prime factorization of |n|, ascending, n != 0. Trial division by all
/// primes below 10^6, then Pollard rho (Brent) with Miller-Rabin splits.
/// Inputs whose second-largest prime factor exceeds ~60 bits may be slow.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// d squarefree with n = d * s^2, sign carried by d. n != 0.
Int squarefree_part(const Int& n);

/// Square root of a mod odd prime p (Tonelli-Shanks, nonresidues probed in
/// the order 2, 3, 5, ...). Empty when a is a nonresidue.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

/// Primes below 10^6, shared sieve.
const std::vector<unsigned long>& small_primes();

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

}  // namespace ecq

#include "ecq/numeric.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ecq {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rat> rational_is_square(const Rat& q) {
    auto rn = is_perfect_square(q.get_num());
    if (!rn) return std::nullopt;
    auto rd = is_perfect_square(q.get_den());
    if (!rd) return std::nullopt;
    return make_rat(*rn, *rd);
}

std::optional<Int> integer_nth_root(const Int& n, unsigned k) {
    if (k == 0) throw std::invalid_argument("0th root");
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rat> rational_nth_root(const Rat& q, unsigned k) {
    auto rn = integer_nth_root(q.get_num(), k);
    if (!rn) return std::nullopt;
    auto rd = integer_nth_root(q.get_den(), k);
    if (!rd) return std::nullopt;
    return make_rat(*rn, *rd);
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

const std::vector<unsigned long>& small_primes() {
    static std::vector<unsigned long> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        const unsigned long limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        for (unsigned long p = 2; p * p <= limit; ++p)
            if (!composite[p])
                for (unsigned long m = p * p; m <= limit; m += p) composite[m] = true;
        for (unsigned long p = 2; p <= limit; ++p)
            if (!composite[p]) primes.push_back(p);
    });
    return primes;
}

namespace {

// Pollard rho, Brent cycle detection. n odd composite, no factor below 10^6.
Int rho_factor(const Int& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    while (true) {
        Int c = rng.get_z_range(n - 3) + 1;
        Int y = rng.get_z_range(n - 2) + 1;
        Int g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            const long block = 128;
            while (k < r && g == 1) {
                ys = y;
                for (long i = 0; i < block && i < r - k; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
                k += block;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    Int m = abs(n);
    std::vector<std::pair<Int, unsigned>> factors;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            factors.emplace_back(Int(p), e);
        }
    }
    if (m > 1) {
        std::vector<Int> rest;
        factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            factors.emplace_back(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return factors;
}

Int squarefree_part(const Int& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part(0)");
    Int d = n < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) d *= p;
    return d;
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
    if (p == 2) return a % 2;
    Int r = ((a % p) + p) % p;
    if (r == 0) return Int(0);
    Int pm1 = p - 1;
    Int ls;
    mpz_powm(ls.get_mpz_t(), r.get_mpz_t(), Int(pm1 / 2).get_mpz_t(), p.get_mpz_t());
    if (ls != 1) return std::nullopt;
    // factor p-1 = q * 2^s
    Int q = pm1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    // nonresidue search in the order 2, 3, 5, ...
    Int z = 0;
    for (unsigned long cand : small_primes()) {
        Int c(cand);
        Int e;
        mpz_powm(e.get_mpz_t(), c.get_mpz_t(), Int(pm1 / 2).get_mpz_t(), p.get_mpz_t());
        if (e == pm1) {
            z = c;
            break;
        }
    }
    if (z == 0) throw std::runtime_error("no quadratic nonresidue found");
    Int m(static_cast<unsigned long>(s));
    Int c, t, x;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), Int((q + 1) / 2).get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace ecq

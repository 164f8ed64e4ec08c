#include "ecq/eisenstein.hpp"

#include <sstream>
#include <stdexcept>

namespace ecq {

std::string EisInt::str() const {
    std::ostringstream os;
    os << a.get_str();
    if (b != 0) os << (b > 0 ? " + " : " - ") << Int(abs(b)).get_str() << "*rho";
    return os.str();
}

Int norm(const EisInt& g) { return g.a * g.a + g.a * g.b + g.b * g.b; }

const std::array<EisInt, 6>& eis_units() {
    static const std::array<EisInt, 6> units = {
        EisInt(Int(1), Int(0)),  EisInt(Int(0), Int(1)),  EisInt(Int(-1), Int(1)),
        EisInt(Int(-1), Int(0)), EisInt(Int(0), Int(-1)), EisInt(Int(1), Int(-1)),
    };
    return units;
}

bool eis_is_unit(const EisInt& g) { return norm(g) == 1; }

EisInt eis_canonical(const EisInt& g) {
    if (g.is_zero()) return g;
    EisInt best;
    bool found = false;
    for (const auto& u : eis_units()) {
        EisInt cand = g * u;
        if (cand.a > 0 && cand.b >= 0) {
            if (!found || cand.a > best.a || (cand.a == best.a && cand.b > best.b)) {
                best = cand;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("no canonical associate found");
    return best;
}

namespace {
// nearest integer to num/den, den > 0
Int round_nearest(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), Int(2 * num + den).get_mpz_t(), Int(2 * den).get_mpz_t());
    return q;
}
}  // namespace

std::pair<EisInt, EisInt> eis_divmod(const EisInt& g, const EisInt& h) {
    if (h.is_zero()) throw std::invalid_argument("Eisenstein division by zero");
    Int n = norm(h);
    EisInt t = g * h.conj();  // field quotient = t / n
    EisInt q(round_nearest(t.a, n), round_nearest(t.b, n));
    EisInt r = g - q * h;
    return {q, r};
}

bool eis_divides(const EisInt& h, const EisInt& g) {
    if (h.is_zero()) return g.is_zero();
    Int n = norm(h);
    EisInt t = g * h.conj();
    return t.a % n == 0 && t.b % n == 0;
}

EisInt eis_divexact(const EisInt& g, const EisInt& h) {
    Int n = norm(h);
    EisInt t = g * h.conj();
    if (n == 0 || t.a % n != 0 || t.b % n != 0)
        throw std::invalid_argument("inexact Eisenstein division");
    return {t.a / n, t.b / n};
}

EisInt eis_gcd(const EisInt& g, const EisInt& h) {
    if (g.is_zero() && h.is_zero()) throw std::invalid_argument("gcd(0, 0)");
    EisInt a = g, b = h;
    while (!b.is_zero()) {
        auto [q, r] = eis_divmod(a, b);
        a = b;
        b = r;
    }
    return eis_canonical(a);
}

EisInt EisFactorization::value() const {
    EisInt v = unit;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) v = v * p;
    return v;
}

namespace {

// canonical prime above a split rational prime p = 1 (mod 3)
EisInt split_prime_above(const Int& p) {
    auto s = sqrt_mod_prime(Int(-3), p);
    if (!s) throw std::logic_error("p = 1 (mod 3) must have sqrt(-3)");
    // s + sqrt(-3) = (s - 1) + 2 rho has norm s^2 + 3 = 0 (mod p)
    EisInt pi = eis_gcd(EisInt(p, Int(0)), EisInt(*s - 1, Int(2)));
    if (norm(pi) != p) throw std::logic_error("split prime extraction failed");
    return pi;
}

void extract_prime(EisInt& rest, const EisInt& prime,
                   std::vector<std::pair<EisInt, unsigned>>& out) {
    unsigned e = 0;
    while (eis_divides(prime, rest)) {
        rest = eis_divexact(rest, prime);
        ++e;
    }
    if (e) out.emplace_back(prime, e);
}

}  // namespace

EisFactorization eis_factor(const EisInt& g) {
    if (g.is_zero()) throw std::invalid_argument("factorization of zero");
    EisFactorization fac;
    EisInt rest = g;
    for (const auto& [p, e] : factorize(norm(g))) {
        (void)e;
        if (p == 3) {
            extract_prime(rest, EisInt(Int(1), Int(1)), fac.factors);
        } else if (p % 3 == 2) {
            extract_prime(rest, EisInt(p, Int(0)), fac.factors);
        } else {
            EisInt pi = split_prime_above(p);
            extract_prime(rest, pi, fac.factors);
            extract_prime(rest, eis_canonical(pi.conj()), fac.factors);
        }
    }
    if (!eis_is_unit(rest)) throw std::logic_error("factorization left a non-unit");
    fac.unit = rest;
    return fac;
}

std::optional<std::pair<EisInt, EisInt>> eis_cube_classify(const EisInt& g) {
    if (g.is_zero()) throw std::invalid_argument("cube classification of zero");
    EisFactorization fac = eis_factor(g);
    EisInt beta(Int(1), Int(0));
    for (const auto& [p, e] : fac.factors) {
        if (e % 3 != 0) return std::nullopt;
        for (unsigned i = 0; i < e / 3; ++i) beta = beta * p;
    }
    EisInt unit = eis_divexact(g, beta * beta * beta);
    return std::make_pair(unit, beta);
}

}  // namespace ecq

#include "ecq/fermat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ecq {

std::string FermatParams::str() const {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ", " << d << ")";
    return os.str();
}

FermatSolution::FermatSolution(Int x_, Int y_, Int z_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
    if (x * x + 3 * y * y != 4 * z * z * z)
        throw std::invalid_argument("not on the surface");
}

std::string FermatSolution::str() const {
    std::ostringstream os;
    os << "(" << x << ", " << y << ", " << z << ")";
    return os.str();
}

FermatSolution param_forward(const FermatParams& p) {
    const Int &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    Int w = c * c + c * d + d * d;
    Int x = w * (3 * a * a * b * (c - d) + a * a * a * (2 * c + d) - b * b * b * (2 * c + d) -
                 3 * a * b * b * (c + 2 * d));
    Int y = w * (3 * a * b * b * c + a * a * a * d - b * b * b * d + 3 * a * a * b * (c + d));
    Int z = w * (a * a + a * b + b * b);
    return FermatSolution(std::move(x), std::move(y), std::move(z));
}

std::vector<FermatSolution> enumerate_solutions(const Int& z_max) {
    if (z_max < 0) throw std::invalid_argument("negative z bound");
    std::vector<FermatSolution> out;
    for (Int z = 0; z <= z_max; ++z) {
        Int rhs = 4 * z * z * z;
        Int ymax;
        mpz_sqrt(ymax.get_mpz_t(), Int(rhs / 3).get_mpz_t());
        for (Int y = 0; y <= ymax; ++y) {
            Int t = rhs - 3 * y * y;
            auto x = is_perfect_square(t);
            if (!x) continue;
            out.emplace_back(*x, y, z);
            if (*x != 0) out.emplace_back(-*x, y, z);
            if (y != 0) {
                out.emplace_back(*x, -y, z);
                if (*x != 0) out.emplace_back(-*x, -y, z);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FermatSolution& l, const FermatSolution& r) {
        if (l.x != r.x) return l.x < r.x;
        if (l.y != r.y) return l.y < r.y;
        return l.z < r.z;
    });
    return out;
}

namespace {

struct ExponentSplit {
    unsigned cube;      // exponent assigned to (a + b rho)^3, divided by 3
    unsigned residual;  // exponent assigned to (c + d rho)
};

EisInt power(const EisInt& g, unsigned e) {
    EisInt r(Int(1), Int(0));
    for (unsigned i = 0; i < e; ++i) r = r * g;
    return r;
}

}  // namespace

FermatParams decompose(const FermatSolution& s) {
    if (s.x == 0 && s.y == 0) return FermatParams{Int(0), Int(0), Int(1), Int(0)};

    // mu = x + sqrt(-3) y = (x - y) + 2y rho; the equation forces mu = 2 mu'
    EisInt mu(s.x - s.y, 2 * s.y);
    if (!eis_divides(EisInt(Int(2), Int(0)), mu))
        throw std::logic_error("decomposition failed: mu not divisible by 2");
    EisInt mup = eis_divexact(mu, EisInt(Int(2), Int(0)));

    // target shape: mu' = gamma^3 * delta^2 * conj(delta), so for each
    // conjugate pair of primes with exponents (e, ebar):
    //   e = 3*g + 2*sd + sdbar,  ebar = 3*gbar + 2*sdbar + sd
    EisFactorization fac = eis_factor(mup);
    std::map<std::pair<std::string, std::string>, unsigned> expmap;
    std::vector<EisInt> primes;
    for (const auto& [p, e] : fac.factors) {
        expmap[{p.a.get_str(), p.b.get_str()}] = e;
        primes.push_back(p);
    }
    auto exp_of = [&](const EisInt& p) -> unsigned {
        auto it = expmap.find({p.a.get_str(), p.b.get_str()});
        return it == expmap.end() ? 0u : it->second;
    };

    EisInt gamma(Int(1), Int(0)), delta(Int(1), Int(0));
    std::vector<std::pair<std::string, std::string>> done;
    for (const auto& p : primes) {
        auto key = std::make_pair(p.a.get_str(), p.b.get_str());
        if (std::find(done.begin(), done.end(), key) != done.end()) continue;
        EisInt pbar = eis_canonical(p.conj());
        if (pbar == p) {
            // inert or ramified: exponent must be 0 mod 3
            unsigned e = exp_of(p);
            if (e % 3 != 0) throw std::logic_error("decomposition failed: self-conjugate exponent");
            gamma = gamma * power(p, e / 3);
            done.push_back(key);
            continue;
        }
        unsigned e = exp_of(p), ebar = exp_of(pbar);
        if ((e + ebar) % 3 != 0) throw std::logic_error("decomposition failed: pair exponent sum");
        // minimal residual exponents per residue of e - ebar (mod 3)
        unsigned sd, sdbar;
        switch ((e % 3 + 3 - ebar % 3) % 3) {
            case 0: sd = 0; sdbar = 0; break;
            case 1: sd = 1; sdbar = 0; break;
            default: sd = 0; sdbar = 1; break;
        }
        if (e < 2 * sd + sdbar || ebar < 2 * sdbar + sd)
            throw std::logic_error("decomposition failed: exponent split");
        unsigned g3 = e - 2 * sd - sdbar, gbar3 = ebar - 2 * sdbar - sd;
        if (g3 % 3 != 0 || gbar3 % 3 != 0)
            throw std::logic_error("decomposition failed: cube exponent");
        gamma = gamma * power(p, g3 / 3) * power(pbar, gbar3 / 3);
        delta = delta * power(p, sd) * power(pbar, sdbar);
        done.push_back(key);
        done.emplace_back(pbar.a.get_str(), pbar.b.get_str());
    }

    // unit placement: need w^3 v^2 conj(v) = eta with w in {1,-1};
    // v^2 conj(v) ranges over all six units as v does.
    EisInt built = gamma * gamma * gamma * delta * delta * delta.conj();
    EisInt eta = eis_divexact(mup, built);
    if (!eis_is_unit(eta)) throw std::logic_error("decomposition failed: non-unit residue");
    for (const auto& v : eis_units()) {
        EisInt adj = v * v * v.conj();
        for (const auto& w : {EisInt(Int(1), Int(0)), EisInt(Int(-1), Int(0))}) {
            if (adj * w * w * w == eta) {
                EisInt g2 = gamma * w;
                EisInt d2 = delta * v;
                FermatParams params{g2.a, g2.b, d2.a, d2.b};
                if (param_forward(params) == s) return params;
            }
        }
    }
    throw std::logic_error("decomposition failed");
}

}  // namespace ecq

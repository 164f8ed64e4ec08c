// Test-only oracles, independent of the library implementation paths they
// cross-check. Deliberately naive: correctness over speed.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ecq/curves.hpp"
#include "ecq/numeric.hpp"
#include "ecq/poly.hpp"

namespace oracle {

using ecq::Int;
using ecq::Poly;
using ecq::Rat;

// Integer square root by bisection on comparisons only.
inline std::optional<Int> isqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int lo(0), hi(1);
    while (hi * hi < n) hi *= 2;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid < n) lo = mid + 1;
        else hi = mid;
    }
    return lo * lo == n ? std::optional<Int>(lo) : std::nullopt;
}

// Trial division, complete for |n| within comfortable desk range.
inline std::vector<std::pair<Int, unsigned>> naive_factorize(Int n) {
    n = abs(n);
    std::vector<std::pair<Int, unsigned>> out;
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : naive_factorize(n)) {
        size_t m = divs.size();
        Int pw(1);
        for (unsigned i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < m; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Rational-root-theorem brute force: try every p/q with p | constant term
// and q | leading coefficient. Only for polynomials whose extreme
// coefficients are small enough to factor naively.
inline std::vector<Rat> brute_rational_roots(const Poly& f) {
    auto zc = ecq::primitive_integer_coeffs(f);
    size_t lo = 0;
    std::vector<Rat> roots;
    while (lo < zc.size() && zc[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Rat(0));
    Int c0 = zc[lo];
    Int lead = zc.back();
    for (const Int& p : divisors_of(c0))
        for (const Int& q : divisors_of(lead))
            for (int sign : {1, -1}) {
                Rat cand = ecq::make_rat(sign * p, q);
                if (f.eval(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Lutz-Nagell oracle: on an integral short model, torsion points have
// integer coordinates with y = 0 or y^2 dividing the discriminant. All
// candidates are enumerated by factoring the discriminant; the ones of
// finite order (<= 12 by Mazur) form the torsion group, whose structure
// is read off the point counts. Only for discriminants small enough to
// factor naively.
struct LutzNagell {
    int a, b;  // group C_a x C_b
    int order() const { return a * b; }
};

inline int slow_point_order(const ecq::ShortModel& e, const ecq::Point& p, int cap = 12) {
    ecq::Point acc = ecq::Point::infinity();
    for (int n = 1; n <= cap; ++n) {
        acc = add(e, acc, p);
        if (acc.is_infinity()) return n;
    }
    return 0;  // not torsion within the cap
}

inline LutzNagell lutz_nagell_torsion(const ecq::ShortModel& e) {
    Int disc = abs(e.discriminant());
    Int ybound(1);
    for (const auto& [p, v] : naive_factorize(disc))
        for (unsigned i = 0; i < v / 2; ++i) ybound *= p;

    std::vector<Int> ys{Int(0)};
    for (const Int& y : divisors_of(ybound)) {
        ys.push_back(y);
        ys.push_back(-y);
    }
    int count = 1;  // infinity
    int r2 = 0;
    for (const Int& y : ys)
        for (const Int& x : ecq::integer_roots({e.B - y * y, e.A, Int(0), Int(1)})) {
            ecq::Point p = ecq::Point::affine(Rat(x), Rat(y));
            if (slow_point_order(e, p) > 0) {
                ++count;
                if (y == 0) ++r2;
            }
        }
    LutzNagell res;
    res.a = r2 == 3 ? 2 : 1;
    res.b = count / res.a;
    return res;
}

// Resultant as the Sylvester matrix determinant, exact Gaussian
// elimination over Q. Independent of the Euclidean-remainder route.
inline Rat sylvester_resultant(const Poly& p, const Poly& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return Rat(0);
    int size = m + n;
    if (size == 0) return Rat(1);
    std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size, Rat(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) a[row][row + j] = p.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) a[n + row][row + j] = q.coeff(n - j);
    Rat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[col][col];
            for (int c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace oracle

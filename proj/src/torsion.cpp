#include "ecq/torsion.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecq {

std::string TorsionGroup::name() const {
    if (a == 1) return "C" + std::to_string(b);
    return "C2xC" + std::to_string(b);
}

Int count_points_mod_p(const ShortModel& e, const Int& p) {
    if (p <= 2 || !is_probable_prime(p)) throw std::invalid_argument("bad prime");
    if (e.discriminant() % p == 0) throw std::invalid_argument("prime of bad reduction");
    if (p >= (1u << 24)) throw std::invalid_argument("prime too large for direct count");
    unsigned long pl = p.get_ui();
    // quadratic residue table
    std::vector<char> is_qr(pl, 0);
    for (unsigned long y = 0; y < pl; ++y) is_qr[(__uint128_t)y * y % pl] = 1;
    Int Am = e.A % p, Bm = e.B % p;
    if (Am < 0) Am += p;
    if (Bm < 0) Bm += p;
    unsigned long a = Am.get_ui(), b = Bm.get_ui();
    unsigned long count = 1;  // point at infinity
    for (unsigned long x = 0; x < pl; ++x) {
        unsigned long f = ((__uint128_t)x * x % pl * x + (__uint128_t)a * x + b) % pl;
        if (f == 0) count += 1;
        else if (is_qr[f]) count += 2;
    }
    return Int(count);
}

Int torsion_bound(const ShortModel& e) {
    Int g(0);
    int used = 0;
    for (unsigned long p : small_primes()) {
        if (p == 2) continue;
        if (e.discriminant() % p == 0) continue;
        g = gcd(g, count_points_mod_p(e, Int(p)));
        if (++used == 8) break;
    }
    return g;
}

namespace {

// order of P by scalar multiplication, or 0 if it exceeds the cap
int point_order(const ShortModel& e, const Point& p, int cap = 12) {
    Point acc = Point::infinity();
    for (int n = 1; n <= cap; ++n) {
        acc = add(e, acc, p);
        if (acc.is_infinity()) return n;
    }
    return 0;
}

// rational points of exact order n, via the exact-order division factor
// filtered by squareness of Psi_2 and confirmed by mul
std::vector<Point> points_of_exact_order(const ShortModel& e, int n) {
    std::vector<Point> pts;
    Poly f = division_polynomial_exact_order(e, n);
    Poly psi2{Rat(e.B), Rat(e.A), Rat(0), Rat(1)};
    for (const Rat& x : rational_roots(f)) {
        Rat fy = psi2.eval(x);
        auto y = rational_is_square(fy);
        if (!y) continue;
        Point p = Point::affine(x, *y);
        if (point_order(e, p) != n) continue;
        pts.push_back(p);
        if (*y != 0) pts.push_back(Point::affine(x, -*y));
    }
    return pts;
}

}  // namespace

TorsionGroup torsion_subgroup(const ShortModel& e) {
    Int bound = torsion_bound(e);

    // 2-torsion straight from the cubic
    std::vector<Point> two_torsion;
    for (const Int& r : integer_roots({e.B, e.A, Int(0), Int(1)}))
        two_torsion.push_back(Point::affine(Rat(r), Rat(0)));
    int r2 = static_cast<int>(two_torsion.size());  // 0, 1 or 3

    // largest 2-power point order
    int max2 = 1;
    Point p2 = Point::infinity();
    if (r2 > 0) {
        max2 = 2;
        p2 = two_torsion[0];
        if (bound % 4 == 0) {
            auto order4 = points_of_exact_order(e, 4);
            if (!order4.empty()) {
                max2 = 4;
                p2 = order4[0];
                if (bound % 8 == 0) {
                    auto order8 = points_of_exact_order(e, 8);
                    if (!order8.empty()) {
                        max2 = 8;
                        p2 = order8[0];
                    }
                }
            }
        }
    }

    // odd part is cyclic of order 1, 3, 5, 7 or 9
    int odd = 1;
    Point podd = Point::infinity();
    for (int n : {3, 5, 7}) {
        if (bound % n != 0) continue;
        auto pts = points_of_exact_order(e, n);
        if (!pts.empty()) {
            odd = n;
            podd = pts[0];
            break;
        }
    }
    if (odd == 3 && bound % 9 == 0) {
        auto pts = points_of_exact_order(e, 9);
        if (!pts.empty()) {
            odd = 9;
            podd = pts[0];
        }
    }

    TorsionGroup g;
    g.a = r2 == 3 ? 2 : 1;
    g.b = max2 * odd;
    Point gen = add(e, p2, podd);
    if (g.b > 1) {
        if (point_order(e, gen, g.b) != g.b)
            throw std::logic_error("torsion assembly: generator order mismatch");
        g.generators.push_back(gen);
    }
    if (g.a == 2) {
        // an order-2 point outside the cyclic part
        Point inside = mul(e, Int(g.b / 2), gen);
        for (const auto& t : two_torsion)
            if (!(t == inside)) {
                g.generators.push_back(t);
                break;
            }
        if (g.generators.size() != 2)
            throw std::logic_error("torsion assembly: no independent 2-torsion");
    }

    // the assembled group must be on Mazur's list and divide the bound
    bool mazur = (g.a == 1 && ((g.b >= 1 && g.b <= 10) || g.b == 12)) ||
                 (g.a == 2 && g.b % 2 == 0 && g.b <= 8);
    if (!mazur) throw std::logic_error("torsion assembly: group outside Mazur's list");
    if (bound % g.order() != 0)
        throw std::logic_error("torsion assembly: order does not divide the reduction bound");
    return g;
}

TorsionGroup torsion_subgroup(const LongModel& e) { return torsion_subgroup(long_to_short(e)); }

}  // namespace ecq

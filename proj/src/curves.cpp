#include "ecq/curves.hpp"

#include <sstream>
#include <stdexcept>

namespace ecq {

Int short_discriminant(const Int& A, const Int& B) {
    return -16 * (4 * A * A * A + 27 * B * B);
}

ShortModel::ShortModel(Int A_, Int B_) : A(std::move(A_)), B(std::move(B_)) {
    if (short_discriminant(A, B) == 0) throw std::invalid_argument("singular curve");
}

std::string ShortModel::str() const {
    std::ostringstream os;
    os << "Y^2 = X^3";
    if (A != 0) os << (A > 0 ? " + " : " - ") << Int(abs(A)).get_str() << "*X";
    if (B != 0) os << (B > 0 ? " + " : " - ") << Int(abs(B)).get_str();
    return os.str();
}

Rat long_discriminant(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4, const Rat& a6) {
    Rat b2 = a1 * a1 + 4 * a2;
    Rat b4 = 2 * a4 + a1 * a3;
    Rat b6 = a3 * a3 + 4 * a6;
    Rat b8 = (b2 * b6 - b4 * b4) / 4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

LongModel::LongModel(Rat a1_, Rat a2_, Rat a3_, Rat a4_, Rat a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
      a6(std::move(a6_)) {
    if (discriminant() == 0) throw std::invalid_argument("singular curve");
}

std::string LongModel::str() const {
    std::ostringstream os;
    os << "Y^2";
    if (a1 != 0) os << " + (" << a1.get_str() << ")XY";
    if (a3 != 0) os << " + (" << a3.get_str() << ")Y";
    os << " = X^3";
    if (a2 != 0) os << " + (" << a2.get_str() << ")X^2";
    if (a4 != 0) os << " + (" << a4.get_str() << ")X";
    if (a6 != 0) os << " + (" << a6.get_str() << ")";
    return os.str();
}

Point Point::affine(Rat x, Rat y) {
    Point p;
    p.inf_ = false;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

const Rat& Point::x() const {
    if (inf_) throw std::logic_error("coordinates of the point at infinity");
    return x_;
}

const Rat& Point::y() const {
    if (inf_) throw std::logic_error("coordinates of the point at infinity");
    return y_;
}

bool Point::operator==(const Point& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

std::string Point::str() const {
    if (inf_) return "O";
    return "(" + x_.get_str() + ", " + y_.get_str() + ")";
}

bool on_curve(const LongModel& e, const Point& p) {
    if (p.is_infinity()) return true;
    const Rat &x = p.x(), &y = p.y();
    return y * y + e.a1 * x * y + e.a3 * y == x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
}

bool on_curve(const ShortModel& e, const Point& p) {
    if (p.is_infinity()) return true;
    const Rat &x = p.x(), &y = p.y();
    return y * y == x * x * x + Rat(e.A) * x + Rat(e.B);
}

namespace {

void require_on_curve(const LongModel& e, const Point& p) {
    if (!on_curve(e, p)) throw std::invalid_argument("point not on the curve");
}

Point add_unchecked(const LongModel& e, const Point& p, const Point& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    if (x1 == x2 && y2 == -y1 - e.a1 * x1 - e.a3) return Point::infinity();
    Rat lambda, nu;
    if (x1 == x2) {
        Rat denom = 2 * y1 + e.a1 * x1 + e.a3;
        lambda = (3 * x1 * x1 + 2 * e.a2 * x1 + e.a4 - e.a1 * y1) / denom;
        nu = y1 - lambda * x1;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
        nu = y1 - lambda * x1;
    }
    Rat x3 = lambda * lambda + e.a1 * lambda - e.a2 - x1 - x2;
    Rat y3 = -(lambda + e.a1) * x3 - nu - e.a3;
    return Point::affine(x3, y3);
}

LongModel as_long(const ShortModel& e) {
    return LongModel(Rat(0), Rat(0), Rat(0), Rat(e.A), Rat(e.B));
}

}  // namespace

Point negate(const LongModel& e, const Point& p) {
    require_on_curve(e, p);
    if (p.is_infinity()) return p;
    return Point::affine(p.x(), -p.y() - e.a1 * p.x() - e.a3);
}

Point add(const LongModel& e, const Point& p, const Point& q) {
    require_on_curve(e, p);
    require_on_curve(e, q);
    return add_unchecked(e, p, q);
}

Point mul(const LongModel& e, const Int& n, const Point& p) {
    require_on_curve(e, p);
    Int k = n;
    Point base = p;
    if (k < 0) {
        k = -k;
        base = negate(e, base);
    }
    Point acc = Point::infinity();
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add_unchecked(e, acc, base);
        base = add_unchecked(e, base, base);
        k >>= 1;
    }
    return acc;
}

Point negate(const ShortModel& e, const Point& p) { return negate(as_long(e), p); }
Point add(const ShortModel& e, const Point& p, const Point& q) { return add(as_long(e), p, q); }
Point mul(const ShortModel& e, const Int& n, const Point& p) { return mul(as_long(e), n, p); }

std::pair<Rat, Rat> short_rational_coeffs(const LongModel& e) {
    return {-27 * e.c4(), -54 * e.c6()};
}

ShortConversion long_to_short_scaled(const LongModel& e) {
    auto [Ar, Br] = short_rational_coeffs(e);
    // minimal u: for each prime p in a denominator, the least k with
    // 4k >= v_p(den A) and 6k >= v_p(den B)
    Int u(1);
    Int d = lcm(Ar.get_den(), Br.get_den());
    for (const auto& [p, e_unused] : factorize(d)) {
        (void)e_unused;
        auto valuation = [&](const Int& n) {
            unsigned v = 0;
            Int m = n;
            while (m % p == 0) {
                m /= p;
                ++v;
            }
            return v;
        };
        unsigned va = valuation(Ar.get_den());
        unsigned vb = valuation(Br.get_den());
        unsigned k = std::max((va + 3) / 4, (vb + 5) / 6);
        Int pk(1);
        for (unsigned i = 0; i < k; ++i) pk *= p;
        u *= pk;
    }
    Rat u4 = Rat(u * u * u * u);
    Rat A = Ar * u4;
    Rat B = Br * u4 * Rat(u * u);
    // the conversion itself contributes a factor 6 to the scale
    ShortConversion conv{ShortModel(A.get_num(), B.get_num()), Rat(6 * u)};
    return conv;
}

ShortModel long_to_short(const LongModel& e) { return long_to_short_scaled(e).model; }

std::optional<Rat> is_isomorphic(const ShortModel& e1, const ShortModel& e2) {
    auto finish = [&](const Rat& u) -> std::optional<Rat> {
        Rat u2 = u * u;
        Rat u4 = u2 * u2;
        Rat u6 = u4 * u2;
        if (u4 * Rat(e1.A) == Rat(e2.A) && u6 * Rat(e1.B) == Rat(e2.B)) return u;
        return std::nullopt;
    };
    if (e1.A == 0 || e2.A == 0) {
        if (e1.A != 0 || e2.A != 0) return std::nullopt;  // j = 0 only pairs with j = 0
        auto u = rational_nth_root(Rat(e2.B) / Rat(e1.B), 6);
        return u ? finish(*u) : std::nullopt;
    }
    if (e1.B == 0 || e2.B == 0) {
        if (e1.B != 0 || e2.B != 0) return std::nullopt;
        auto u = rational_nth_root(Rat(e2.A) / Rat(e1.A), 4);
        return u ? finish(*u) : std::nullopt;
    }
    Rat u2 = (Rat(e1.A) * Rat(e2.B)) / (Rat(e2.A) * Rat(e1.B));
    auto u = rational_is_square(u2);
    return u ? finish(*u) : std::nullopt;
}

namespace {

// Reduced division polynomials w_n with psi_n = w_n for odd n and
// psi_n = 2y * w_n for even n, after substituting y^2 = F = X^3 + AX + B:
//   w_{2m}   = w_m (w_{m+2} w_{m-1}^2 - w_{m-2} w_{m+1}^2)
//   w_{2m+1} = 16F^2 w_{m+2} w_m^3 - w_{m-1} w_{m+1}^3   (m even)
//            = w_{m+2} w_m^3 - 16F^2 w_{m-1} w_{m+1}^3   (m odd)
std::vector<Poly> reduced_division_polys(const ShortModel& e, int n) {
    Rat A(e.A), B(e.B);
    Poly F{B, A, Rat(0), Rat(1)};
    Poly F2_16 = F * F * Rat(16);
    std::vector<Poly> w(std::max(n + 1, 5));
    w[0] = Poly();
    w[1] = Poly(Rat(1));
    w[2] = Poly(Rat(1));
    w[3] = Poly{-A * A, 12 * B, 6 * A, Rat(0), Rat(3)};
    w[4] = Poly{-8 * B * B - A * A * A, -4 * A * B, -5 * A * A, 20 * B, 5 * A, Rat(0), Rat(1)} *
           Rat(2);
    for (int k = 5; k <= n; ++k) {
        int m = k / 2;
        if (k % 2 == 0) {
            w[k] = w[m] * (w[m + 2] * w[m - 1] * w[m - 1] - w[m - 2] * w[m + 1] * w[m + 1]);
        } else if (m % 2 == 0) {
            w[k] = F2_16 * w[m + 2] * w[m] * w[m] * w[m] - w[m - 1] * w[m + 1] * w[m + 1] * w[m + 1];
        } else {
            w[k] = w[m + 2] * w[m] * w[m] * w[m] - F2_16 * w[m - 1] * w[m + 1] * w[m + 1] * w[m + 1];
        }
    }
    return w;
}

}  // namespace

Poly division_polynomial(const ShortModel& e, int n) {
    if (n < 2 || n > 12) throw std::invalid_argument("division polynomial index out of range");
    auto w = reduced_division_polys(e, n);
    if (n % 2 == 0) {
        Poly F{Rat(e.B), Rat(e.A), Rat(0), Rat(1)};
        return F * w[n];
    }
    return w[n];
}

Poly division_polynomial_exact_order(const ShortModel& e, int n) {
    Poly f = division_polynomial(e, n);
    for (int d = 2; d < n; ++d)
        if (n % d == 0) f = f.divexact(division_polynomial_exact_order(e, d));
    return f;
}

}  // namespace ecq

#include "ecq/families.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ecq {

Int delta3_closed_form(const Int& alpha, const Int& beta) {
    Int a3 = alpha * alpha * alpha;
    Int u = 5 * a3 + beta;
    Int v = 9 * a3 + beta;
    return -16 * 27 * u * v * v * v;
}

ShortModel e3(const Int& alpha, const Int& beta) {
    Int A = 27 * alpha * alpha * alpha * alpha + 6 * alpha * beta;
    Int B = beta * beta - 27 * alpha * alpha * alpha * alpha * alpha * alpha;
    if (short_discriminant(A, B) == 0) throw std::invalid_argument("singular curve");
    ShortModel e(A, B);
    if (e.discriminant() != delta3_closed_form(alpha, beta))
        throw std::logic_error("e3 discriminant identity failed");
    return e;
}

Point e3_three_torsion(const Int& alpha, const Int& beta) {
    return Point::affine(Rat(3 * alpha * alpha), Rat(9 * alpha * alpha * alpha + beta));
}

LongModel tate(const Rat& b, const Rat& c) {
    if (b == 0) throw std::invalid_argument("Tate form requires b != 0");
    return LongModel(1 - c, -b, -b, Rat(0), Rat(0));
}

namespace {

// printed short forms of the one-parameter families: A = -27 * pa(alpha),
// B = 54 * pb(alpha)
const Poly& printed_a_poly(int n) {
    static const Poly a5{Rat(1), Rat(12), Rat(14), Rat(-12), Rat(1)};
    static const Poly a7{Rat(1), Rat(4), Rat(-14), Rat(0), Rat(35), Rat(-56), Rat(42), Rat(-12),
                         Rat(1)};
    static const Poly a9 = Poly{Rat(1), Rat(0), Rat(-3), Rat(1)} *
                           Poly{Rat(1),  Rat(0),  Rat(-9), Rat(27), Rat(-45),
                                Rat(54), Rat(-48), Rat(27), Rat(-9), Rat(1)};
    switch (n) {
        case 5: return a5;
        case 7: return a7;
        case 9: return a9;
    }
    throw std::invalid_argument("family index must be 5, 7 or 9");
}

const Poly& printed_b_poly(int n) {
    static const Poly b5 =
        Poly{Rat(1), Rat(0), Rat(1)} * Poly{Rat(1), Rat(18), Rat(74), Rat(-18), Rat(1)};
    static const Poly b7{Rat(1),   Rat(6),    Rat(-15), Rat(-46), Rat(174), Rat(-222), Rat(273),
                         Rat(-486), Rat(570), Rat(-354), Rat(117), Rat(-18), Rat(1)};
    static const Poly b9{Rat(1),    Rat(0),     Rat(-18),  Rat(42),   Rat(27),   Rat(-306),
                         Rat(735),  Rat(-1080), Rat(1359), Rat(-2032), Rat(3240), Rat(-4230),
                         Rat(4128), Rat(-2970), Rat(1557), Rat(-570), Rat(135),  Rat(-18),
                         Rat(1)};
    switch (n) {
        case 5: return b5;
        case 7: return b7;
        case 9: return b9;
    }
    throw std::invalid_argument("family index must be 5, 7 or 9");
}

LongModel tate_fiber(int n, const Rat& alpha) {
    switch (n) {
        case 5: return tate(alpha, alpha);
        case 7: return tate(alpha * alpha * (alpha - 1), alpha * (alpha - 1));
        case 9:
            return tate(alpha * alpha * (alpha - 1) * (alpha * alpha - alpha + 1),
                        alpha * alpha * (alpha - 1));
    }
    throw std::invalid_argument("family index must be 5, 7 or 9");
}

}  // namespace

Rat delta_n_closed_form(int n, const Rat& alpha) {
    Rat scale = Rat(Int(4096) * 531441);  // 2^12 3^12
    Rat a = alpha;
    switch (n) {
        case 5: {
            Rat p = a * a - 11 * a - 1;
            Rat a5 = a * a * a * a * a;
            return scale * a5 * p;
        }
        case 7: {
            Rat p = a * a * a - 8 * a * a + 5 * a + 1;
            Rat t = a * (a - 1);
            Rat t7 = t * t * t * t * t * t * t;
            return scale * t7 * p;
        }
        case 9: {
            Rat p = a * a * a - 6 * a * a + 3 * a + 1;
            Rat q = a * a - a + 1;
            Rat t = a * (a - 1);
            Rat t9 = t * t * t * t * t * t * t * t * t;
            return scale * t9 * q * q * q * p;
        }
    }
    throw std::invalid_argument("family index must be 5, 7 or 9");
}

std::pair<Rat, Rat> e_n_rational_coeffs(int n, const Rat& alpha) {
    if (delta_n_closed_form(n, alpha) == 0)
        throw std::invalid_argument("singular member of the family");
    auto [A, B] = short_rational_coeffs(tate_fiber(n, alpha));
    if (A != Rat(-27) * printed_a_poly(n).eval(alpha) ||
        B != Rat(54) * printed_b_poly(n).eval(alpha))
        throw std::logic_error("family coefficients disagree with the printed short form");
    if (-16 * (4 * A * A * A + 27 * B * B) != delta_n_closed_form(n, alpha))
        throw std::logic_error("family discriminant disagrees with the closed form");
    return {A, B};
}

ShortModel e_n(int n, const Rat& alpha) {
    e_n_rational_coeffs(n, alpha);  // identity asserts on the rational model
    return long_to_short(tate_fiber(n, alpha));
}

std::pair<Int, Int> e_sq3_coeffs(int variant, const FermatParams& p) {
    auto s = param_forward(p);
    Int alpha = -s.z;
    Int beta;
    if (variant == 1) beta = s.x * s.x + 5 * s.z * s.z * s.z;
    else if (variant == 2) beta = 3 * s.y * s.y + 5 * s.z * s.z * s.z;
    else throw std::invalid_argument("variant must be 1 or 2");
    Int A = 27 * alpha * alpha * alpha * alpha + 6 * alpha * beta;
    Int B = beta * beta - 27 * alpha * alpha * alpha * alpha * alpha * alpha;
    return {A, B};
}

ShortModel e_sq3(int variant, const FermatParams& p) {
    auto s = param_forward(p);
    if (variant == 1 && s.x == 0)
        throw std::invalid_argument("singular curve: x = 0 kills the x^2 factor of the discriminant");
    if (variant == 1 && s.y == 0)
        throw std::invalid_argument("singular curve: y = 0 kills the y^6 factor of the discriminant");
    if (variant == 2 && s.y == 0)
        throw std::invalid_argument("singular curve: y = 0 kills the y^2 factor of the discriminant");
    if (variant == 2 && s.x == 0)
        throw std::invalid_argument("singular curve: x = 0 kills the x^6 factor of the discriminant");
    auto [A, B] = e_sq3_coeffs(variant, p);
    ShortModel e(A, B);
    Int x2 = s.x * s.x, y2 = s.y * s.y;
    Int expected = variant == 1 ? Int(16 * 729 * x2 * y2 * y2 * y2)
                                : Int(16 * 81 * y2 * x2 * x2 * x2);
    if (e.discriminant() != expected)
        throw std::logic_error("e_sq3 discriminant identity failed");
    if (!is_perfect_square(e.discriminant()))
        throw std::logic_error("e_sq3 discriminant is not a square");
    return e;
}

std::pair<Int, Int> e_alt_coeffs(const FermatParams& p) {
    Int nc = p.c * p.c + p.c * p.d + p.d * p.d;
    Int na = p.a * p.a + p.a * p.b + p.b * p.b;
    Int A = -81 * nc * na;
    Int B = 243 * nc *
            (p.a * p.a * p.a * p.d + 3 * p.a * p.a * p.b * p.c + 3 * p.a * p.a * p.b * p.d +
             3 * p.a * p.b * p.b * p.c - p.b * p.b * p.b * p.d);
    return {A, B};
}

ShortModel e_alt(const FermatParams& p) {
    auto s = param_forward(p);
    if (s.x == 0)
        throw std::invalid_argument("singular curve: x = 0 kills the discriminant 2^4 3^12 x^2");
    auto [A, B] = e_alt_coeffs(p);
    if (A != -81 * s.z || B != 243 * s.y)
        throw std::logic_error("e_alt coefficients disagree with the parametrization");
    ShortModel e(A, B);
    if (e.discriminant() != 16 * 531441 * s.x * s.x)
        throw std::logic_error("e_alt discriminant identity failed");
    return e;
}

FermatParams e_alt_params(const ShortModel& e) {
    auto sq = is_perfect_square(e.discriminant());
    if (!sq) throw std::invalid_argument("discriminant not a rational square");
    Int C = *sq / 4;  // C^2 = -(4A^3 + 27B^2) since disc = 16 C^2
    FermatSolution s(C, 3 * e.B, -e.A);
    FermatParams p = decompose(s);
    ShortModel image = e_alt(p);
    if (!is_isomorphic(image, e)) throw std::logic_error("e_alt_params roundtrip failed");
    return p;
}

ShortModel simplest_cubic(const Int& m) {
    Poly pm{Rat(1), Rat(-(m + 3)), Rat(m), Rat(1)};
    Int dm = m * m + 3 * m + 9;
    if (poly_discriminant(pm) != Rat(dm * dm))
        throw std::logic_error("simplest cubic discriminant formula failed");
    if (!rational_roots(pm).empty())
        throw std::logic_error("simplest cubic unexpectedly has a rational root");
    LongModel ym(Rat(0), Rat(m), Rat(0), Rat(-(m + 3)), Rat(1));
    ShortModel e = long_to_short(ym);
    if (!is_perfect_square(e.discriminant()))
        throw std::logic_error("simplest cubic curve discriminant is not a square");
    return e;
}

DCurve d_curve(int n) {
    Poly x = Poly::x();
    Poly xm1{Rat(-1), Rat(1)};
    switch (n) {
        case 5: return {5, x * Poly{Rat(-1), Rat(-11), Rat(1)}};
        case 7: return {7, x * xm1 * Poly{Rat(1), Rat(5), Rat(-8), Rat(1)}};
        case 9:
            return {9, x * xm1 * Poly{Rat(1), Rat(-1), Rat(1)} * Poly{Rat(1), Rat(3), Rat(-6), Rat(1)}};
    }
    throw std::invalid_argument("obstruction curve index must be 5, 7 or 9");
}

namespace {

// f_n(p/q) is a rational square iff q * (numerator form) is a perfect
// square, after multiplying through by q^(deg+1).
bool d_candidate(int n, const Int& p, const Int& q, Int& sqrt_scaled) {
    Int val;
    switch (n) {
        case 5: val = p * (p * p - 11 * p * q - q * q) * q; break;
        case 7: val = p * (p - q) * (p * p * p - 8 * p * p * q + 5 * p * q * q + q * q * q) * q; break;
        default:
            val = p * (p - q) * (p * p - p * q + q * q) *
                  (p * p * p - 6 * p * p * q + 3 * p * q * q + q * q * q) * q;
    }
    auto r = is_perfect_square(val);
    if (!r) return false;
    sqrt_scaled = *r;
    return true;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> d_search(int n, long height) {
    if (height < 1) throw std::invalid_argument("height must be positive");
    d_curve(n);  // validates n
    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    long chunk = (2 * height + 1 + nthreads - 1) / nthreads;
    std::vector<std::future<std::vector<std::pair<Rat, Rat>>>> futs;
    for (unsigned t = 0; t < nthreads; ++t) {
        long lo = -height + t * chunk;
        long hi = std::min(height, lo + chunk - 1);
        if (lo > height) break;
        futs.push_back(std::async(std::launch::async, [n, height, lo, hi] {
            std::vector<std::pair<Rat, Rat>> found;
            Int sq;
            for (long p = lo; p <= hi; ++p)
                for (long q = 1; q <= height; ++q) {
                    if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
                    if (d_candidate(n, Int(p), Int(q), sq)) {
                        // f_n(p/q) = val / q^(deg+1), so z = sqrt(val) / q^((deg+1)/2)
                        int half = n == 5 ? 2 : n == 7 ? 3 : 4;
                        Int qpow(1);
                        for (int i = 0; i < half; ++i) qpow *= q;
                        Rat alpha = make_rat(Int(p), Int(q));
                        Rat z = make_rat(sq, qpow);
                        if (z * z != d_curve(n).rhs.eval(alpha))
                            throw std::logic_error("square-root bookkeeping failed");
                        found.emplace_back(alpha, z);
                    }
                }
            return found;
        }));
    }
    std::vector<std::pair<Rat, Rat>> out;
    for (auto& f : futs)
        for (auto& hit : f.get()) out.push_back(std::move(hit));
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_quotient_map() {
    Poly a = Poly::x();
    Poly u_num{Rat(1), Rat(0), Rat(-3), Rat(1)};               // a^3 - 3a^2 + 1
    Poly am1{Rat(-1), Rat(1)};
    Poly lhs = u_num * u_num * u_num - Rat(27) * (a * am1) * (a * am1) * (a * am1);
    Poly q{Rat(1), Rat(-1), Rat(1)};                            // a^2 - a + 1
    Poly c{Rat(1), Rat(3), Rat(-6), Rat(1)};                    // a^3 - 6a^2 + 3a + 1
    Poly rhs = q * q * q * c;
    if (!(lhs == rhs)) return false;

    // X -> 1/(1-X) has order 3 on the function field
    RatFunc m(Poly(Rat(1)), Poly{Rat(1), Rat(-1)});
    if (!ratfunc_equal(m.compose(m.compose(m)), RatFunc::x())) return false;

    // and it preserves the right-hand side: f9(1/(1-X)) = f9(X) / (1-X)^8
    RatFunc f9(d_curve(9).rhs);
    Poly one_minus{Rat(1), Rat(-1)};
    Poly p8 = Poly(Rat(1));
    for (int i = 0; i < 8; ++i) p8 = p8 * one_minus;
    if (!ratfunc_equal(f9.compose(m), f9 / RatFunc(p8))) return false;
    return true;
}

}  // namespace ecq

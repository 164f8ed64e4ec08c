#include <doctest.h>

#include <random>

#include "ecq/poly.hpp"
#include "oracles.hpp"

using namespace ecq;

namespace {

Poly random_poly(std::mt19937_64& rng, int maxdeg, long coeff_range) {
    int d = 1 + static_cast<int>(rng() % maxdeg);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = Rat(Int(rng() % (2 * coeff_range + 1)) - coeff_range);
    if (c.back() == 0) c.back() = Rat(1);
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("poly basics") {
    Poly p{Rat(-81), Rat(0), Rat(0), Rat(0)};  // trailing zeros trimmed
    CHECK(p.degree() == 0);
    Poly f{Rat(0), Rat(-81), Rat(0), Rat(1)};  // X^3 - 81X
    CHECK(f.degree() == 3);
    CHECK(f.eval(Rat(9)) == 0);
    CHECK(f.eval(Rat(2)) == 8 - 162);
    CHECK(f.derivative() == Poly{Rat(-81), Rat(0), Rat(3)});
    auto [q, r] = Poly::divmod(f, Poly{Rat(-9), Rat(1)});
    CHECK(r.is_zero());
    CHECK(q == Poly{Rat(0), Rat(9), Rat(1)});  // X^2 + 9X
    CHECK(f.divexact(Poly{Rat(-9), Rat(1)}) == q);
    CHECK_THROWS(f.divexact(Poly{Rat(1), Rat(1)}));
}

TEST_CASE("rational_roots on the worked cubics") {
    Poly f{Rat(0), Rat(-81), Rat(0), Rat(1)};  // X(X-9)(X+9)
    CHECK(rational_roots(f) == std::vector<Rat>{Rat(-9), Rat(0), Rat(9)});
    Poly g{Rat(2), Rat(0), Rat(0), Rat(1)};  // X^3 + 2
    CHECK(rational_roots(g).empty());
    Poly h{Rat(-1), Rat(1)};  // X - 1
    CHECK(rational_roots(h) == std::vector<Rat>{Rat(1)});
    CHECK_THROWS_WITH(rational_roots(Poly()), "zero polynomial has all roots");
}

TEST_CASE("rational_roots matches rational-root-theorem brute force") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        Poly p = random_poly(rng, 6, 30);
        if (p.is_constant()) continue;
        CHECK(rational_roots(p) == oracle::brute_rational_roots(p));
    }
    // constructed roots, non-monic, repeated factors
    for (int i = 0; i < 80; ++i) {
        Rat r1 = make_rat(Int(rng() % 21) - 10, Int(rng() % 6) + 1);
        Rat r2 = make_rat(Int(rng() % 21) - 10, Int(rng() % 6) + 1);
        Poly p = Poly{-r1.get_num(), Rat(r1.get_den())} * Poly{-r2.get_num(), Rat(r2.get_den())} *
                 Poly{-r1.get_num(), Rat(r1.get_den())} * Poly{Rat(1), Rat(0), Rat(3)};
        auto roots = rational_roots(p);
        CHECK(roots == oracle::brute_rational_roots(p));
        CHECK(std::find(roots.begin(), roots.end(), r1) != roots.end());
        CHECK(std::find(roots.begin(), roots.end(), r2) != roots.end());
    }
}

TEST_CASE("rational_roots with huge constant term") {
    // (X - 10^40)(X + 3)(7X - 2): the constant term cannot be factored by
    // divisor enumeration, the Hensel route must still find every root.
    Int big = Int("10000000000000000000000000000000000000000");
    Poly p = Poly{-Rat(big), Rat(1)} * Poly{Rat(3), Rat(1)} * Poly{Rat(-2), Rat(7)};
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rat(-3));
    CHECK(roots[1] == make_rat(2, 7));
    CHECK(roots[2] == Rat(big));
}

TEST_CASE("integer_roots handles zero roots and multiplicity") {
    // X^2 (X - 5)^2 (X + 7)
    Poly p = Poly{Rat(0), Rat(0), Rat(1)} * Poly{Rat(-5), Rat(1)} * Poly{Rat(-5), Rat(1)} *
             Poly{Rat(7), Rat(1)};
    auto roots = integer_roots(primitive_integer_coeffs(p));
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<Int>{Int(-7), Int(0), Int(5)});
}

TEST_CASE("resultant agrees with Sylvester determinant") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_poly(rng, 5, 12);
        Poly q = random_poly(rng, 5, 12);
        CHECK(resultant(p, q) == oracle::sylvester_resultant(p, q));
    }
}

TEST_CASE("resultant bilinearity") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        Poly p = random_poly(rng, 4, 9);
        Poly q = random_poly(rng, 3, 9);
        Poly r = random_poly(rng, 3, 9);
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("poly_discriminant anchors") {
    // disc(a(a^2 - 11a - 1)) = 5^3
    Poly f5{Rat(0), Rat(-1), Rat(-11), Rat(1)};
    CHECK(poly_discriminant(f5) == 125);
    // disc(a(a-1)(a^3 - 8a^2 + 5a + 1)) = 7^4
    Poly f7 = Poly{Rat(0), Rat(1)} * Poly{Rat(-1), Rat(1)} * Poly{Rat(1), Rat(5), Rat(-8), Rat(1)};
    CHECK(poly_discriminant(f7) == 2401);
    // disc(X^3 - 3X + 1) = 81
    CHECK(poly_discriminant(Poly{Rat(1), Rat(-3), Rat(0), Rat(1)}) == 81);
    CHECK_THROWS(poly_discriminant(Poly(Rat(5))));
    // linear polynomials have discriminant 1
    CHECK(poly_discriminant(Poly{Rat(4), Rat(3)}) == 1);
}

TEST_CASE("poly_gcd") {
    Poly a = Poly{Rat(-1), Rat(1)} * Poly{Rat(2), Rat(1)} * Poly{Rat(1), Rat(1), Rat(1)};
    Poly b = Poly{Rat(-1), Rat(1)} * Poly{Rat(1), Rat(1), Rat(1)} * Poly{Rat(5), Rat(1)};
    Poly g = poly_gcd(a, b);
    CHECK(g == (Poly{Rat(-1), Rat(1)} * Poly{Rat(1), Rat(1), Rat(1)}).monic());
    CHECK(poly_gcd(a, Poly()) == a.monic());
}

TEST_CASE("ratfunc canonical form and equality") {
    RatFunc x = RatFunc::x();
    CHECK(ratfunc_equal(x / x, RatFunc(Poly(Rat(1)))));
    // (X^2-1)/(X-1) == X+1
    RatFunc f(Poly{Rat(-1), Rat(0), Rat(1)}, Poly{Rat(-1), Rat(1)});
    CHECK(ratfunc_equal(f, RatFunc(Poly{Rat(1), Rat(1)})));
    RatFunc one_over_x(Poly(Rat(1)), Poly::x());
    RatFunc one_over_x1(Poly(Rat(1)), Poly{Rat(1), Rat(1)});
    CHECK(!ratfunc_equal(one_over_x, one_over_x1));
    // num*den_g == num_g*den characterization on random instances
    std::mt19937_64 rng(14);
    for (int i = 0; i < 50; ++i) {
        Poly n1 = random_poly(rng, 3, 8), d1 = random_poly(rng, 3, 8);
        Poly s = random_poly(rng, 2, 8);
        if (d1.is_zero() || s.is_zero()) continue;
        RatFunc f1(n1, d1), f2(n1 * s, d1 * s);
        CHECK(f1 == f2);
    }
}

TEST_CASE("ratfunc composition: X -> 1/(1-X) has order 3") {
    RatFunc m(Poly(Rat(1)), Poly{Rat(1), Rat(-1)});
    RatFunc mm = m.compose(m);
    RatFunc mmm = m.compose(mm);
    CHECK(!ratfunc_equal(mm, RatFunc::x()));
    CHECK(ratfunc_equal(mmm, RatFunc::x()));
}

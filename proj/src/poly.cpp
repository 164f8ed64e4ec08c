#include "ecq/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ecq {

namespace {
const Rat kZero(0);
}

Poly::Poly(const Rat& c0) {
    if (c0 != 0) c_.push_back(c0);
}

Poly::Poly(const Int& c0) : Poly(Rat(c0)) {}

Poly::Poly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }

Poly Poly::from_coeffs(std::vector<Rat> ascending) {
    Poly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(int deg, const Rat& coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = coeff;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(Int(i));
    return from_coeffs(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly::from_coeffs(std::move(r));
}

Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return Poly();
    Poly r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly r(a);
    if (a.degree() < b.degree()) return {Poly(), r};
    std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
    const Rat& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat t = r.leading() / lb;
        q[k] = t;
        // r -= t * X^k * b
        for (int i = 0; i <= b.degree(); ++i) r.c_[k + i] -= t * b.c_[i];
        r.trim();
    }
    return {from_coeffs(std::move(q)), r};
}

Poly Poly::divexact(const Poly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<Int> primitive_integer_coeffs(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    Int lcm_den(1);
    for (int i = 0; i <= p.degree(); ++i) lcm_den = lcm(lcm_den, p.coeff(i).get_den());
    std::vector<Int> f(p.degree() + 1);
    Int content(0);
    for (int i = 0; i <= p.degree(); ++i) {
        Rat c = p.coeff(i) * Rat(lcm_den);
        f[i] = c.get_num();
        content = gcd(content, f[i]);
    }
    for (auto& c : f) c /= content;
    return f;
}

namespace {

std::vector<Int> z_derivative(const std::vector<Int>& f) {
    if (f.size() <= 1) return {};
    std::vector<Int> d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * Int(i);
    return d;
}

void z_trim(std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Int z_content(const std::vector<Int>& f) {
    Int c(0);
    for (const auto& a : f) c = gcd(c, a);
    return c;
}

// Pseudo-remainder of a by b, content removed afterwards. b nonzero.
std::vector<Int> z_prem_primitive(std::vector<Int> a, const std::vector<Int>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b.back();
    z_trim(a);
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int k = static_cast<int>(a.size()) - 1 - db;
        Int t = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= t * b[i];
        z_trim(a);
    }
    Int c = z_content(a);
    if (c > 1)
        for (auto& x : a) x /= c;
    return a;
}

std::vector<Int> z_gcd_primitive(std::vector<Int> a, std::vector<Int> b) {
    z_trim(a);
    z_trim(b);
    while (!b.empty()) {
        auto r = z_prem_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

Int z_eval(const std::vector<Int>& f, const Int& x) {
    Int acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int z_eval_mod(const std::vector<Int>& f, const Int& x, const Int& m) {
    Int acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % m;
    return acc >= 0 ? acc : acc + m;
}

// Arithmetic mod a small prime q, for prime selection and per-residue
// root scans.
using ModPoly = std::vector<unsigned long>;

ModPoly mod_reduce(const std::vector<Int>& f, unsigned long q) {
    ModPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int c = f[i] % static_cast<unsigned long>(q);
        if (c < 0) c += q;
        r[i] = c.get_ui();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

unsigned long mod_inv(unsigned long a, unsigned long q) {
    long t = 0, newt = 1;
    long r = static_cast<long>(q), newr = static_cast<long>(a % q);
    while (newr != 0) {
        long quot = r / newr;
        std::swap(t, newt);
        newt -= quot * t;
        std::swap(r, newr);
        newr -= quot * r;
    }
    return static_cast<unsigned long>(t >= 0 ? t : t + static_cast<long>(q));
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, unsigned long q) {
    unsigned long linv = mod_inv(b.back(), q);
    while (a.size() >= b.size()) {
        unsigned long t = (__uint128_t)a.back() * linv % q;
        size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            unsigned long s = (__uint128_t)t * b[i] % q;
            a[k + i] = (a[k + i] + q - s) % q;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

bool mod_squarefree(const std::vector<Int>& f, unsigned long q) {
    ModPoly a = mod_reduce(f, q);
    if (a.size() != f.size()) return false;  // q | lc
    ModPoly b = mod_reduce(z_derivative(f), q);
    if (b.empty()) return false;
    while (!b.empty()) {
        auto r = mod_rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

}  // namespace

std::vector<Int> integer_roots(const std::vector<Int>& f_in) {
    std::vector<Int> f = f_in;
    z_trim(f);
    if (f.empty()) throw std::invalid_argument("zero polynomial");
    std::vector<Int> roots;
    // strip X^k
    size_t shift = 0;
    while (shift < f.size() && f[shift] == 0) ++shift;
    if (shift > 0) {
        roots.push_back(Int(0));
        f.erase(f.begin(), f.begin() + shift);
    }
    if (f.size() <= 1) return roots;
    if (f.size() == 2) {
        if (f[0] % f[1] == 0) {
            Int r = -f[0] / f[1];
            if (r != 0 || shift == 0) roots.push_back(r);
        }
        return roots;
    }
    // squarefree part
    Int c = z_content(f);
    if (c > 1)
        for (auto& x : f) x /= c;
    auto g = z_gcd_primitive(f, z_derivative(f));
    if (g.size() > 1) {
        // exact division over Z after the primitive gcd
        Poly fq = Poly::from_coeffs([&] {
            std::vector<Rat> v(f.size());
            for (size_t i = 0; i < f.size(); ++i) v[i] = Rat(f[i]);
            return v;
        }());
        Poly gq = Poly::from_coeffs([&] {
            std::vector<Rat> v(g.size());
            for (size_t i = 0; i < g.size(); ++i) v[i] = Rat(g[i]);
            return v;
        }());
        f = primitive_integer_coeffs(fq.divexact(gq));
    }

    // Cauchy bound: all roots have |r| <= 1 + max|a_i| / |lc|
    Int maxc(0);
    for (const auto& a : f) maxc = std::max(maxc, Int(abs(a)));
    Int bound = 1 + maxc / abs(f.back()) + 1;

    // find a prime where f stays squarefree
    unsigned long q = 0;
    for (unsigned long p : small_primes()) {
        if (p == 2) continue;
        if (mod_squarefree(f, p)) {
            q = p;
            break;
        }
    }
    if (q == 0) throw std::runtime_error("no squarefree prime found");

    // roots mod q by direct scan
    std::vector<Int> residues;
    for (unsigned long r = 0; r < q; ++r)
        if (z_eval_mod(f, Int(r), Int(q)) == 0) residues.push_back(Int(r));

    // Hensel lift each simple root past 2*bound, then verify exactly
    auto fprime = z_derivative(f);
    Int target = 2 * bound + 1;
    for (Int r : residues) {
        Int modulus(q);
        while (modulus < target) {
            Int next = modulus * modulus;
            Int fr = z_eval_mod(f, r, next);
            Int dr = z_eval_mod(fprime, r, next);
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), next.get_mpz_t()) == 0)
                throw std::runtime_error("Hensel lift failed");
            r = (r - fr * inv) % next;
            if (r < 0) r += next;
            modulus = next;
        }
        Int centered = r <= modulus / 2 ? r : r - modulus;
        if (centered != 0 && z_eval(f, centered) == 0) roots.push_back(centered);
    }
    return roots;
}

std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has all roots");
    if (p.is_constant()) return {};
    auto f = primitive_integer_coeffs(p);
    const Int a = f.back();
    // monic transform: roots of p are z/a for integer roots z of
    // G(z) = a^(d-1) * f(z/a)
    int d = static_cast<int>(f.size()) - 1;
    std::vector<Int> g(f.size());
    Int pw(1);
    for (int i = d; i >= 0; --i) {
        g[i] = f[i] * pw;
        if (i > 0) pw *= a;
    }
    std::vector<Rat> roots;
    for (const auto& z : integer_roots(g)) roots.push_back(make_rat(z, a));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto g = z_gcd_primitive(primitive_integer_coeffs(a), primitive_integer_coeffs(b));
    std::vector<Rat> v(g.size());
    for (size_t i = 0; i < g.size(); ++i) v[i] = Rat(g[i]);
    return Poly::from_coeffs(std::move(v)).monic();
}

Rat resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Rat(0);
    Poly a = p, b = q;
    Rat res(1);
    bool flip = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() * b.degree()) % 2 == 1) flip = !flip;
        std::swap(a, b);
    }
    while (b.degree() > 0) {
        Poly r = Poly::divmod(a, b).second;
        if (r.is_zero()) return Rat(0);
        // Res(a, b) = (-1)^(da*db) lc(b)^(da - dr) Res(b, r)
        if ((a.degree() * b.degree()) % 2 == 1) flip = !flip;
        Rat lb = b.leading();
        Rat pw(1);
        for (int i = 0; i < a.degree() - r.degree(); ++i) pw *= lb;
        res *= pw;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: Res(a, c) = c^deg(a)
    Rat cb = b.constant();
    Rat pw(1);
    for (int i = 0; i < a.degree(); ++i) pw *= cb;
    res *= pw;
    return flip ? -res : res;
}

Rat poly_discriminant(const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant of a constant polynomial");
    int d = p.degree();
    Rat r = resultant(p, p.derivative()) / p.leading();
    return (d * (d - 1) / 2) % 2 == 1 ? -r : r;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rat lc = den_.leading();
    num_ = num_ * (Rat(1) / lc);
    den_ = den_ * (Rat(1) / lc);
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly(Rat(1))) {}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    // f = sum n_i X^i / sum d_j X^j evaluated at inner = u/v: clear v powers
    int dn = num_.degree(), dd = den_.degree();
    int d = std::max(dn, dd);
    const Poly& u = inner.num();
    const Poly& v = inner.den();
    // powers of u and v up to d
    std::vector<Poly> up(d + 1), vp(d + 1);
    up[0] = Poly(Rat(1));
    vp[0] = Poly(Rat(1));
    for (int i = 1; i <= d; ++i) {
        up[i] = up[i - 1] * u;
        vp[i] = vp[i - 1] * v;
    }
    Poly n, m;
    for (int i = 0; i <= dn; ++i)
        if (num_.coeff(i) != 0) n += up[i] * vp[d - i] * num_.coeff(i);
    for (int j = 0; j <= dd; ++j)
        if (den_.coeff(j) != 0) m += up[j] * vp[d - j] * den_.coeff(j);
    return RatFunc(n, m);
}

std::string RatFunc::str(const std::string& var) const {
    if (den_ == Poly(Rat(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) { return f == g; }

}  // namespace ecq

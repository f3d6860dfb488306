#include "sbi/polyzx.hpp"

#include <algorithm>
#include <limits>

#include "sbi/errors.hpp"

namespace sbi {

namespace {
mpz_class const zero_z = 0;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}
std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    u128 s = static_cast<u128>(a) + b;
    return static_cast<std::uint64_t>(s >= p ? s - p : s);
}
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<u128>(a) + p - b);
}
}

/* {{{ IntPoly */
IntPoly::IntPoly(long c)
{
    if (c) c_.emplace_back(c);
}

IntPoly::IntPoly(mpz_class const & c)
{
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs))
{
    trim();
}

IntPoly IntPoly::monomial(mpz_class const & c, std::size_t k)
{
    IntPoly r;
    if (c == 0) return r;
    r.c_.assign(k + 1, 0);
    r.c_[k] = c;
    return r;
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class const & IntPoly::coeff(std::size_t k) const
{
    return k < c_.size() ? c_[k] : zero_z;
}

mpz_class const & IntPoly::leading_coeff() const
{
    return c_.empty() ? zero_z : c_.back();
}

void IntPoly::set_coeff(std::size_t k, mpz_class const & v)
{
    if (k >= c_.size()) {
        if (v == 0) return;
        c_.resize(k + 1, 0);
    }
    c_[k] = v;
    trim();
}

IntPoly & IntPoly::operator+=(IntPoly const & o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly & IntPoly::operator-=(IntPoly const & o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly & IntPoly::operator*=(mpz_class const & s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto & a : c_) a *= s;
    return *this;
}

IntPoly & IntPoly::operator*=(IntPoly const & o)
{
    *this = *this * o;
    return *this;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto & a : r.c_) a = -a;
    return r;
}

void IntPoly::sub_mul_shift(IntPoly const & o, mpz_class const & q, std::size_t k)
{
    if (o.c_.empty() || q == 0) return;
    if (o.c_.size() + k > c_.size()) c_.resize(o.c_.size() + k, 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        mpz_submul(c_[i + k].get_mpz_t(), q.get_mpz_t(), o.c_[i].get_mpz_t());
    trim();
}

IntPoly IntPoly::shifted(std::size_t k) const
{
    if (c_.empty()) return {};
    IntPoly r;
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

IntPoly IntPoly::exact_div(mpz_class const & d) const
{
    if (d == 0) throw DivisionByZero("exact_div by zero");
    IntPoly r = *this;
    for (auto & a : r.c_) {
        if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
            throw ExactDivisionError("coefficient not divisible");
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::div_x() const
{
    if (c_.empty()) return {};
    if (c_[0] != 0) throw ExactDivisionError("constant term is not zero");
    return IntPoly(std::vector<mpz_class>(c_.begin() + 1, c_.end()));
}

mpz_class IntPoly::eval(mpz_class const & at) const
{
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
}

mpz_class IntPoly::content() const
{
    mpz_class g = 0;
    for (auto const & a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

IntPoly operator+(IntPoly a, IntPoly const & b) { return a += b; }
IntPoly operator-(IntPoly a, IntPoly const & b) { return a -= b; }
IntPoly operator*(IntPoly a, mpz_class const & s) { return a *= s; }
IntPoly operator*(mpz_class const & s, IntPoly a) { return a *= s; }

IntPoly operator*(IntPoly const & a, IntPoly const & b)
{
    if (a.is_zero() || b.is_zero()) return {};
    auto ac = a.coeffs(), bc = b.coeffs();
    std::vector<mpz_class> r(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}
/* }}} */

ExtGcd ext_gcd(mpz_class const & a, mpz_class const & b)
{
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* {{{ factoring: trial division, then Pollard-Brent on what is left */
namespace {
mpz_class rho(mpz_class const & n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](mpz_class const & v) { return mpz_class((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class d = x > y ? mpz_class(x - y) : mpz_class(y - x);
                    q = q * d % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class d = x > ys ? mpz_class(x - ys) : mpz_class(ys - x);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(mpz_class const & n, std::vector<mpz_class> & out)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.push_back(n);
        return;
    }
    mpz_class d = rho(n);
    split(d, out);
    split(mpz_class(n / d), out);
}
}

std::vector<mpz_class> prime_factors(mpz_class n)
{
    if (n == 0) throw DegenerateInput("prime_factors of zero");
    n = abs(n);
    std::vector<mpz_class> out;
    for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
        }
    }
    split(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
/* }}} */

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of zero mod p");
    mpz_class r, az = static_cast<unsigned long>(a), pz = static_cast<unsigned long>(p);
    mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t());
    return r.get_ui();
}

std::uint64_t to_modulus(mpz_class const & p)
{
    if (p <= 1 || mpz_sizeinbase(p.get_mpz_t(), 2) > 63)
        throw DegenerateInput("modulus out of range: " + p.get_str());
    return p.get_ui();
}

/* {{{ ModPoly */
ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto & a : c_) a %= p_;
    trim();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c}); }

ModPoly ModPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t k)
{
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return ModPoly(p, std::move(v));
}

void ModPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly & ModPoly::operator+=(ModPoly const & o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPoly & ModPoly::operator-=(ModPoly const & o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPoly & ModPoly::operator*=(std::uint64_t s)
{
    s %= p_;
    for (auto & a : c_) a = mulmod(a, s, p_);
    trim();
    return *this;
}

ModPoly ModPoly::operator-() const
{
    ModPoly r(p_);
    return r -= *this;
}

ModPoly ModPoly::shifted(std::size_t k) const
{
    if (c_.empty()) return *this;
    ModPoly r(p_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

ModPoly ModPoly::monic() const
{
    if (c_.empty()) return *this;
    return *this * inv_mod(c_.back(), p_);
}

ModPoly operator+(ModPoly a, ModPoly const & b) { return a += b; }
ModPoly operator-(ModPoly a, ModPoly const & b) { return a -= b; }
ModPoly operator*(ModPoly a, std::uint64_t s) { return a *= s; }

ModPoly operator*(ModPoly const & a, ModPoly const & b)
{
    std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero()) return ModPoly(p);
    auto ac = a.coeffs(), bc = b.coeffs();
    std::vector<std::uint64_t> r(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i)
        for (std::size_t j = 0; j < bc.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(ac[i], bc[j], p), p);
    return ModPoly(p, std::move(r));
}

ModDivRem divrem(ModPoly const & a, ModPoly const & b)
{
    if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
    std::uint64_t p = a.modulus();
    ModDivRem out{ModPoly(p), a};
    std::uint64_t inv = inv_mod(b.leading_coeff(), p);
    while (!out.r.is_zero() && out.r.degree() >= b.degree()) {
        auto k = static_cast<std::size_t>(out.r.degree() - b.degree());
        std::uint64_t c = mulmod(out.r.leading_coeff(), inv, p);
        out.q += ModPoly::monomial(p, c, k);
        out.r -= (b * c).shifted(k);
    }
    return out;
}

ModGcd ext_gcd(ModPoly const & a, ModPoly const & b)
{
    std::uint64_t p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1(p);
    ModPoly t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        ModPoly t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    std::uint64_t inv = inv_mod(r0.leading_coeff(), p);
    return {r0 * inv, s0 * inv, t0 * inv};
}

ModPoly mod_reduce(IntPoly const & f, std::uint64_t p)
{
    mpz_class pz = static_cast<unsigned long>(p);
    std::vector<std::uint64_t> v;
    v.reserve(f.coeffs().size());
    for (auto const & a : f.coeffs()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
        v.push_back(r.get_ui());
    }
    return ModPoly(p, std::move(v));
}

IntPoly lift(ModPoly const & f)
{
    std::vector<mpz_class> v;
    for (auto a : f.coeffs()) v.emplace_back(static_cast<unsigned long>(a));
    return IntPoly(std::move(v));
}
/* }}} */

}

#include "sbi/constants.hpp"

#include "sbi/errors.hpp"

namespace sbi {

namespace {
mpq_class frac_part(mpq_class const & q)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - f;
}
}

void FieldConst::set_turn(mpq_class t)
{
    t.canonicalize();
    turn_ = frac_part(t);
}

void FieldConst::add_exponent(mpz_class const & p, mpq_class const & e)
{
    if (e == 0) return;
    auto [it, fresh] = radical_.emplace(p, e);
    if (fresh) return;
    it->second += e;
    if (it->second == 0) radical_.erase(it);
}

FieldConst FieldConst::rational(mpq_class const & q)
{
    if (q == 0) throw DegenerateInput("zero is not a nonzero constant");
    FieldConst c = power(abs(q.get_num()), 1);
    c *= power(q.get_den(), -1);
    if (q < 0) c.set_turn(mpq_class(1, 2));
    return c;
}

FieldConst FieldConst::power(mpz_class const & p, mpq_class const & e)
{
    if (p <= 0) throw DegenerateInput("base of a radical must be positive");
    FieldConst c;
    if (p == 1) return c;
    mpz_class n = p;
    for (auto const & q : prime_factors(n)) {
        long mult = 0;
        while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            n /= q;
            ++mult;
        }
        c.add_exponent(q, e * mult);
    }
    return c;
}

FieldConst FieldConst::root_of_unity(mpq_class const & turn)
{
    FieldConst c;
    c.set_turn(turn);
    return c;
}

FieldConst & FieldConst::operator*=(FieldConst const & o)
{
    for (auto const & [p, e] : o.radical_) add_exponent(p, e);
    set_turn(turn_ + o.turn_);
    return *this;
}

FieldConst FieldConst::inverse() const
{
    return pow(-1);
}

FieldConst FieldConst::pow(mpz_class const & n) const
{
    FieldConst c;
    if (n == 0) return c;
    for (auto const & [p, e] : radical_) c.radical_.emplace(p, e * n);
    c.set_turn(turn_ * n);
    return c;
}

bool FieldConst::operator<(FieldConst const & o) const
{
    if (radical_ != o.radical_) return radical_ < o.radical_;
    return turn_ < o.turn_;
}

FieldConst operator*(FieldConst a, FieldConst const & b) { return a *= b; }
FieldConst operator/(FieldConst a, FieldConst const & b) { return a *= b.inverse(); }

FieldConst sigma_apply(FieldConst const & c, Sigma s)
{
    if (s == Sigma::Identity) return c;
    return c * FieldConst::root_of_unity(-2 * c.turn());
}

FieldConst sigma_inv(FieldConst const & c, Sigma s)
{
    /* both actions are involutions */
    return sigma_apply(c, s);
}

FieldConst pow_zx(FieldConst const & c, IntPoly const & e, Sigma s)
{
    FieldConst radical_part = c * FieldConst::root_of_unity(-c.turn());
    FieldConst r = radical_part.pow(e.eval(1));
    mpz_class t = s == Sigma::Identity ? e.eval(1) : e.eval(-1);
    return r * FieldConst::root_of_unity(c.turn() * t);
}

FieldConst principal_root(FieldConst const & c, unsigned long k)
{
    if (k == 0) throw DegenerateInput("zeroth root");
    FieldConst r;
    for (auto const & [p, e] : c.radical()) r *= FieldConst::power(p, e / k);
    return r * FieldConst::root_of_unity(c.turn() / k);
}

std::vector<FieldConst> kth_roots(FieldConst const & c, unsigned long k)
{
    FieldConst r = principal_root(c, k);
    std::vector<FieldConst> out;
    for (unsigned long l = 0; l < k; ++l) {
        mpq_class t(l, k);
        t.canonicalize();
        out.push_back(r * FieldConst::root_of_unity(t));
    }
    return out;
}

mpz_class o_m(mpz_class const & m, Sigma s)
{
    if (m <= 0) throw DegenerateInput("o_m needs a positive integer");
    if (m == 1) return 0;
    return s == Sigma::Identity ? mpz_class(1) : mpz_class(m - 1);
}

std::string to_string(FieldConst const & c)
{
    /* sign, rational part, fractional radicals, root of unity */
    std::vector<std::string> parts;
    mpq_class rat = 1;
    std::vector<std::string> rad;
    for (auto const & [p, e] : c.radical()) {
        mpq_class f = frac_part(e);
        mpz_class whole = e.get_num();
        mpz_fdiv_q(whole.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), mpz_class(abs(whole)).get_ui());
        if (whole >= 0)
            rat *= pw;
        else
            rat /= pw;
        if (f != 0) rad.push_back(p.get_str() + "^(" + f.get_str() + ")");
    }
    std::string sign;
    mpq_class t = c.turn();
    if (t == mpq_class(1, 2)) {
        sign = "-";
        t = 0;
    }
    if (rat != 1 || (rad.empty() && t == 0)) parts.push_back(rat.get_str());
    for (auto & r : rad) parts.push_back(r);
    if (t != 0) {
        std::string z = "zeta(" + t.get_den().get_str() + ")";
        if (t.get_num() != 1) z += "^" + t.get_num().get_str();
        parts.push_back(z);
    }
    std::string out = sign;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    return out;
}

std::string to_string(Sigma s)
{
    return s == Sigma::Identity ? "id" : "conj";
}

}

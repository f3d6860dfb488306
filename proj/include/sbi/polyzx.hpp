#ifndef SBI_POLYZX_HPP
#define SBI_POLYZX_HPP

/* Univariate polynomials over Z (arbitrary precision) and over Z/pZ. */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sbi {

class IntPoly {
  public:
    /* degree of the zero polynomial */
    static constexpr long minus_infinity = -1;

    IntPoly() = default;
    IntPoly(long c);
    IntPoly(mpz_class const & c);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly x() { return monomial(1, 1); }
    static IntPoly monomial(mpz_class const & c, std::size_t k);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /* zero beyond the degree */
    mpz_class const & coeff(std::size_t k) const;
    mpz_class const & leading_coeff() const;
    std::span<const mpz_class> coeffs() const { return c_; }
    void set_coeff(std::size_t k, mpz_class const & v);

    IntPoly & operator+=(IntPoly const & o);
    IntPoly & operator-=(IntPoly const & o);
    IntPoly & operator*=(mpz_class const & s);
    IntPoly & operator*=(IntPoly const & o);
    IntPoly operator-() const;

    /* this -= q * x^k * o */
    void sub_mul_shift(IntPoly const & o, mpz_class const & q, std::size_t k);

    IntPoly shifted(std::size_t k) const;
    /* throws ExactDivisionError unless every coefficient is divisible by d */
    IntPoly exact_div(mpz_class const & d) const;
    /* f/x, requires f(0) = 0 */
    IntPoly div_x() const;
    mpz_class eval(mpz_class const & at) const;
    /* gcd of the coefficients, 0 for the zero polynomial */
    mpz_class content() const;

    bool operator==(IntPoly const & o) const = default;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly operator+(IntPoly a, IntPoly const & b);
IntPoly operator-(IntPoly a, IntPoly const & b);
IntPoly operator*(IntPoly const & a, IntPoly const & b);
IntPoly operator*(IntPoly a, mpz_class const & s);
IntPoly operator*(mpz_class const & s, IntPoly a);

struct ExtGcd {
    mpz_class g, u, v;
};
/* g = u*a + v*b, g >= 0 */
ExtGcd ext_gcd(mpz_class const & a, mpz_class const & b);

/* distinct prime divisors of |n|, ascending; n != 0 */
std::vector<mpz_class> prime_factors(mpz_class n);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

class ModPoly {
  public:
    ModPoly() = default;
    explicit ModPoly(std::uint64_t p) : p_(p) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly constant(std::uint64_t p, std::uint64_t c);
    static ModPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t k);

    std::uint64_t modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::uint64_t leading_coeff() const { return c_.empty() ? 0 : c_.back(); }
    std::span<const std::uint64_t> coeffs() const { return c_; }

    ModPoly & operator+=(ModPoly const & o);
    ModPoly & operator-=(ModPoly const & o);
    ModPoly & operator*=(std::uint64_t s);
    ModPoly operator-() const;
    ModPoly shifted(std::size_t k) const;
    /* scaled to leading coefficient 1; zero stays zero */
    ModPoly monic() const;

    bool operator==(ModPoly const & o) const = default;

  private:
    void trim();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

ModPoly operator+(ModPoly a, ModPoly const & b);
ModPoly operator-(ModPoly a, ModPoly const & b);
ModPoly operator*(ModPoly const & a, ModPoly const & b);
ModPoly operator*(ModPoly a, std::uint64_t s);

struct ModDivRem {
    ModPoly q, r;
};
/* throws DivisionByZero */
ModDivRem divrem(ModPoly const & a, ModPoly const & b);

struct ModGcd {
    ModPoly g, u, v;
};
/* g = u*a + v*b, g monic (or zero when a = b = 0) */
ModGcd ext_gcd(ModPoly const & a, ModPoly const & b);

ModPoly mod_reduce(IntPoly const & f, std::uint64_t p);
/* coefficients taken in [0, p) */
IntPoly lift(ModPoly const & f);
std::uint64_t to_modulus(mpz_class const & p);

}

#endif

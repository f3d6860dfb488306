#include <doctest.h>

#include "helpers.hpp"
#include "sbi/errors.hpp"

using namespace sbi;
using th::P;

TEST_SUITE("polyzx") {

TEST_CASE("product agrees with pointwise evaluation")
{
    IntPoly a = P("3*x^2+4*x+1"), b = P("2*x-1");
    IntPoly c = a * b;
    CHECK(c.degree() == 3);
    for (long t = -3; t <= 3; ++t) CHECK(c.eval(t) == a.eval(t) * b.eval(t));
    CHECK(c == P("6*x^3+5*x^2-2*x-1"));
}

TEST_CASE("zero polynomial")
{
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == IntPoly::minus_infinity);
    CHECK(P("x-x") == z);
    CHECK((P("x+1") * z).is_zero());
}

TEST_CASE("exact division and division by x")
{
    CHECK(P("6*x^2-4").exact_div(2) == P("3*x^2-2"));
    CHECK_THROWS_AS(P("6*x^2-3").exact_div(2), ExactDivisionError);
    CHECK_THROWS_AS(P("x").exact_div(0), DivisionByZero);
    CHECK(P("x^3-2*x").div_x() == P("x^2-2"));
    CHECK_THROWS_AS(P("x+1").div_x(), ExactDivisionError);
}

TEST_CASE("sub_mul_shift")
{
    IntPoly f = P("x^3+1");
    f.sub_mul_shift(P("x+1"), 2, 2);
    CHECK(f == P("-x^3-2*x^2+1"));
}

TEST_CASE("integer extended gcd")
{
    for (auto [a, b] : std::vector<std::pair<long, long>>{{12, 18}, {1, 0}, {0, 5}, {-4, 6}, {7, -3}}) {
        ExtGcd e = ext_gcd(a, b);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), mpz_class(a).get_mpz_t(), mpz_class(b).get_mpz_t());
        CHECK(e.g == g);
        CHECK(e.u * a + e.v * b == e.g);
    }
    ExtGcd e = ext_gcd(1, 0);
    CHECK(e.g == 1);
    CHECK(e.u == 1);
    CHECK(e.v == 0);
}

TEST_CASE("prime factors")
{
    CHECK(prime_factors(360) == std::vector<mpz_class>{2, 3, 5});
    CHECK(prime_factors(-49) == std::vector<mpz_class>{7});
    CHECK(prime_factors(1).empty());
    mpz_class big = mpz_class("2305843009213693951") * 1000003 * 1000003;
    CHECK(prime_factors(big) == std::vector<mpz_class>{1000003, mpz_class("2305843009213693951")});
    CHECK_THROWS_AS(prime_factors(0), DegenerateInput);
}

TEST_CASE("ModPoly division")
{
    ModPoly a = mod_reduce(P("x^3+2*x+1"), 5), b = mod_reduce(P("x+3"), 5);
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK_THROWS_AS(divrem(a, ModPoly(5)), DivisionByZero);
}

TEST_CASE("ModPoly extended gcd")
{
    std::uint64_t p = 7;
    ModPoly a = mod_reduce(P("x^2-1"), p) * mod_reduce(P("x+3"), p);
    ModPoly b = mod_reduce(P("x-1"), p) * mod_reduce(P("x^2+1"), p);
    ModGcd g = ext_gcd(a, b);
    CHECK(g.g == mod_reduce(P("x-1"), p));
    CHECK(g.u * a + g.v * b == g.g);
    CHECK(divrem(a, g.g).r.is_zero());
    CHECK(divrem(b, g.g).r.is_zero());
    ModGcd z = ext_gcd(ModPoly(p), mod_reduce(P("3*x+1"), p));
    CHECK(z.g.leading_coeff() == 1);
    CHECK(z.g.degree() == 1);
}

TEST_CASE("reduce and lift")
{
    ModPoly f = mod_reduce(P("-x^2+3*x-4"), 3);
    CHECK(lift(f) == P("2*x^2+2"));
    CHECK(mod_reduce(P("4*x+2"), 2).is_zero());
    CHECK(inv_mod(3, 7) == 5);
}

TEST_CASE("text round trip")
{
    for (auto s : {"3*x^2+4*x+1", "-x+2", "x", "0", "-7", "x^5-x^3+12"}) CHECK(to_string(P(s)) == s);
    CHECK(P("2x + 1") == P("2*x+1"));
    CHECK_THROWS_AS(P("3*+x"), ParseError);
}

}

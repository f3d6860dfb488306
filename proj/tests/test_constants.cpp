#include <doctest.h>

#include "helpers.hpp"
#include "sbi/errors.hpp"

using namespace sbi;
using th::K;
using th::P;

TEST_SUITE("constants") {

TEST_CASE("canonical forms")
{
    CHECK(K("-3") == K("3*zeta(2)"));
    CHECK(K("4") == FieldConst::power(2, 2));
    CHECK(K("2^(1/2)*2^(1/2)") == K("2"));
    CHECK(K("zeta(8)^8").is_one());
    CHECK(K("6^(1/2)") == K("2^(1/2)*3^(1/2)"));
    for (auto s : {"1", "-1", "2^(1/2)*zeta(8)^3", "-3", "1/3", "1/2*2^(1/2)", "zeta(3)", "5/6*3^(2/3)*zeta(7)^2"})
        CHECK(to_string(K(s)) == s);
    CHECK_THROWS_AS(K("0"), ParseError);
    CHECK_THROWS_AS(K("zeta(0)"), ParseError);
}

TEST_CASE("group laws")
{
    FieldConst a = K("2^(1/3)*zeta(5)"), b = K("-7/2");
    CHECK((a * b) / b == a);
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(3) == K("2*zeta(5)^3"));
}

TEST_CASE("sigma and pow_zx")
{
    FieldConst c = K("3^(1/2)*zeta(8)");
    CHECK(sigma_apply(c, Sigma::Identity) == c);
    CHECK(sigma_apply(c, Sigma::Conjugation) == K("3^(1/2)*zeta(8)^7"));
    CHECK(pow_zx(c, P("2*x"), Sigma::Conjugation) == K("3*zeta(4)^3"));
    CHECK(pow_zx(c, P("2*x"), Sigma::Identity) == K("3*zeta(4)"));
    CHECK(pow_zx(c, P("0"), Sigma::Identity).is_one());
}

TEST_CASE("roots")
{
    auto r = kth_roots(K("4"), 2);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == K("2"));
    CHECK(r[1] == K("-2"));
    CHECK(kth_roots(K("1"), 2) == std::vector<FieldConst>{K("1"), K("-1")});
    CHECK(principal_root(K("-8"), 3) == K("2*zeta(6)"));
}

TEST_CASE("o_m")
{
    CHECK(o_m(1, Sigma::Identity) == 0);
    CHECK(o_m(1, Sigma::Conjugation) == 0);
    CHECK(o_m(2, Sigma::Conjugation) == 1);
    CHECK(o_m(5, Sigma::Identity) == 1);
    CHECK(o_m(5, Sigma::Conjugation) == 4);
    CHECK_THROWS_AS(o_m(0, Sigma::Identity), DegenerateInput);
}

}

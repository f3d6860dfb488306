#include <doctest.h>

#include "helpers.hpp"
#include "sbi/binomial.hpp"
#include "sbi/errors.hpp"

using namespace sbi;
using th::K;
using th::V;

namespace {
PlainBinomial Q(std::string const & s, std::size_t n) { return parse_plain(s, n); }

std::vector<PlainBinomial> F(std::vector<std::string> const & s, std::size_t n)
{
    std::vector<PlainBinomial> out;
    for (auto const & x : s) out.push_back(Q(x, n));
    return out;
}

std::vector<PlainBinomial> four_components()
{
    return F({"y1^(x^2) - y1^(2)", "y2^(x^2) - y2^(2)", "y1*y3^(2) - y2^(x)"}, 3);
}

/* Y^f at a point whose coordinates are nonzero constants; sigma acts on them */
FieldConst mono_at(LatVec const & f, std::vector<FieldConst> const & pt, Sigma s)
{
    FieldConst r;
    for (std::size_t i = 0; i < f.size(); ++i) r *= pow_zx(pt[i], f[i], s);
    return r;
}

bool vanishes(PlainBinomial const & b, std::vector<FieldConst> const & pt, Sigma s)
{
    if (b.is_monomial()) return false;
    return mono_at(b.fplus, pt, s) == *b.constant * mono_at(b.fminus, pt, s);
}
}

TEST_SUITE("binomial") {

TEST_CASE("plain and Laurent forms")
{
    PlainBinomial p = Q("y1*y3^(2) - y2^(x)", 3);
    LaurentBinomial l = to_laurent(p);
    CHECK(l.support == V("[1, -x, 2]"));
    CHECK(l.constant.is_one());
    CHECK(to_plain(l) == p);
    CHECK(to_plain(to_laurent(Q("y2^(2) - 3*y1^(x+1)", 2))) == Q("y2^(2) - 3*y1^(x+1)", 2));
    CHECK(to_plain(to_laurent(Q("y1^(x+1) - 1/3*y2^(2)", 2))) == Q("y2^(2) - 3*y1^(x+1)", 2));
    CHECK(to_laurent(Q("y1^(x) + y1", 1)) == LaurentBinomial{V("[x-1]"), K("-1")});
    CHECK_THROWS_AS(to_laurent(Q("y1*y2", 2)), NotABinomial);
    CHECK(Q("y1*y2", 2).is_monomial());
}

TEST_CASE("monomial splitting")
{
    MonoTriple t{{}, F({"y1*y2"}, 2), {}};
    auto out = dec_mono(t, 2);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == MonoTriple{{0}, {}, {}});
    CHECK(out[1] == MonoTriple{{1}, {}, {0}});
    CHECK(dec_mono(MonoTriple{{}, F({"y1*y2"}, 2), {0, 1}}, 2).empty());
    MonoTriple b{{}, F({"y1 - 1", "y2^(x) - y1"}, 2), {}};
    CHECK(dec_mono(b, 2) == std::vector<MonoTriple>{b});
    /* zeroing y1 turns the binomial into the monomial y2 */
    auto z = dec_mono(MonoTriple{{}, F({"y1", "y2 - y1^(x)"}, 2), {}}, 2);
    REQUIRE(z.size() == 1);
    CHECK(z[0].zero == VarSet{0, 1});
    for (auto const & tr : dec_mono(MonoTriple{{}, F({"y1*y2^(2)", "y3 - y1", "y2*y3"}, 3), {}}, 3))
        for (auto const & g : tr.b) CHECK(!g.is_monomial());
}

TEST_CASE("decomposition into four components")
{
    auto comps = dec_binomial(four_components(), 3, Sigma::Identity);
    REQUIRE(comps.size() == 4);
    int sat_parts = 0;
    for (auto const & c : comps) {
        if (c.zero_vars.empty()) {
            ++sat_parts;
            CHECK(c.chain.size() == 4);
            for (auto const & a : four_components()) CHECK(member_sat(a, c));
            CHECK(is_prime(c.character));
            CHECK(is_reflexive(c.character));
        }
    }
    CHECK(sat_parts == 2);
    CHECK(std::find(comps[0].chain.begin(), comps[0].chain.end(), Q("y1*y3^(x^2) - y2^(x)", 3)) != comps[0].chain.end());
    CHECK(std::find(comps[1].chain.begin(), comps[1].chain.end(), Q("y1*y3^(x^2) + y2^(x)", 3)) != comps[1].chain.end());
    CHECK(comps[2].zero_vars == VarSet{0, 1});
    CHECK(comps[2].chain.empty());
    CHECK(comps[3].zero_vars == VarSet{1, 2});
    CHECK(comps[3].nonzero_vars == VarSet{0});
    CHECK(comps[3].chain == F({"y1^(x^2) - y1^(2)"}, 3));
}

TEST_CASE("points of the saturation components satisfy the input")
{
    std::vector<FieldConst> cand = {K("1"), K("-1"), K("zeta(4)"), K("zeta(4)^3"), K("zeta(3)"), K("2")};
    for (auto s : {Sigma::Identity, Sigma::Conjugation}) {
        auto comps = dec_binomial(four_components(), 3, s);
        for (auto const & c : comps) {
            if (!c.zero_vars.empty()) continue;
            int hits = 0;
            for (auto const & a : cand)
                for (auto const & b : cand)
                    for (auto const & d : cand) {
                        std::vector<FieldConst> pt = {a, b, d};
                        bool on = std::all_of(c.chain.begin(), c.chain.end(),
                                              [&](PlainBinomial const & g) { return vanishes(g, pt, s); });
                        if (!on) continue;
                        ++hits;
                        for (auto const & g : four_components()) CHECK(vanishes(g, pt, s));
                    }
            CHECK(hits > 0);
        }
    }
}

TEST_CASE("small decompositions")
{
    auto one = dec_binomial(F({"y1 - 1"}, 1), 1, Sigma::Identity);
    REQUIRE(one.size() == 1);
    CHECK(one[0].zero_vars.empty());
    CHECK(one[0].chain == F({"y1 - 1"}, 1));
    CHECK(dec_binomial(F({"y1 - 1", "y1 - 2"}, 1), 1, Sigma::Identity).empty());
    auto mono = dec_binomial(F({"y1*y2"}, 2), 2, Sigma::Identity);
    REQUIRE(mono.size() == 2);
    CHECK(mono[0].zero_vars == VarSet{0});
    CHECK(mono[1].zero_vars == VarSet{1});
}

TEST_CASE("membership in a saturation component")
{
    auto comps = dec_binomial(four_components(), 3, Sigma::Identity);
    Component const & e1 = comps[0];
    CHECK(member_sat(Q("y1^(2)*y3^(x^2+2) - y2^(2*x)", 3), e1));
    CHECK(!member_sat(Q("y1^(2)*y3^(x^2+2) + y2^(2*x)", 3), e1));
    CHECK(!member_sat(Q("y3 - 1", 3), e1));
    for (auto const & g : e1.chain) CHECK(member_sat(g, e1));
    CHECK(member_sat(Q("y1*y2 - y1", 3), comps[2]));
    CHECK(member_sat(Q("y1^(x^2)*y3 - y1^(2)*y3", 3), comps[3]));
}

}

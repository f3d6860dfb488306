#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "sbi/pid_linalg.hpp"

using namespace sbi;
using th::P;

namespace {
IntMat mat(std::vector<std::vector<long>> const & rows)
{
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    return m;
}

/* Z-span equality of two sets of integer vectors */
bool same_span(std::vector<std::vector<mpz_class>> const & a, std::vector<std::vector<mpz_class>> const & b)
{
    oracle::Echelon ea, eb;
    for (auto const & v : a) ea.insert(v);
    for (auto const & v : b) eb.insert(v);
    for (auto const & v : a)
        if (!eb.contains(v)) return false;
    for (auto const & v : b)
        if (!ea.contains(v)) return false;
    return true;
}

ModCol mc(std::vector<std::string> const & e, std::uint64_t p)
{
    ModCol c;
    for (auto const & s : e) c.push_back(mod_reduce(P(s), p));
    return c;
}
}

TEST_SUITE("pid_linalg") {

TEST_CASE("integer kernel of a constant-term matrix")
{
    IntMat f = mat({{2, 1, 1}, {2, 1, 1}, {0, 0, 0}});
    auto k = ker_int(f);
    CHECK(k.size() == 2);
    CHECK(same_span(k, {{0, -1, 1}, {1, -2, 0}}));
    for (auto const & v : k)
        for (std::size_t i = 0; i < f.rows; ++i) {
            mpz_class s = 0;
            for (std::size_t j = 0; j < f.cols; ++j) s += f(i, j) * v[j];
            CHECK(s == 0);
        }
}

TEST_CASE("integer HNF")
{
    IntMat f = mat({{4, 6, 2}, {1, 2, 3}});
    IntHnf h = hnf_int(f);
    CHECK(h.rank == 2);
    CHECK(h.h(0, 0) == 2);
    CHECK(h.h(0, 1) == 0);
    CHECK(h.h(0, 2) == 0);
    /* H = F U */
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            mpz_class s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += f(i, k) * h.u(k, j);
            CHECK(s == h.h(i, j));
        }
    CHECK(ker_int(mat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("kernel over Z_2[x]")
{
    ModMat m = {mc({"x^2", "0"}, 2), mc({"1", "0"}, 2)};
    auto k = ker_modpoly(m, 2, 2);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == ModCol{mod_reduce(P("1"), 2), mod_reduce(P("x^2"), 2)});
    CHECK(ker_modpoly({mc({"x^2", "0"}, 2), mc({"x+1", "x^3"}, 2)}, 2, 2).empty());
}

TEST_CASE("HNF over Z_2[x]")
{
    ModMat f = {mc({"x^2+2*x-2", "0"}, 2), mc({"1-x", "x^3"}, 2)};
    ModHnf h = hnf_modpoly(f, 2, 2);
    REQUIRE(h.b.size() == 2);
    CHECK(h.b[0] == mc({"x^2", "0"}, 2));
    CHECK(h.b[1] == mc({"1+x", "x^3"}, 2));
    CHECK(h.pivot_rows == std::vector<std::size_t>{0, 1});
    /* B = F T */
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < 2; ++r) {
            ModPoly s(2);
            for (std::size_t j = 0; j < 2; ++j) s += f[j][r] * h.t[k][j];
            CHECK(s == h.b[k][r]);
        }
    ModRemainder red = reduce_modpoly(mc({"x+2", "4"}, 2), h);
    CHECK(red.r == mc({"x", "0"}, 2));
    ModRemainder red2 = reduce_modpoly(mc({"x^3", "x^4"}, 2), h);
    ModCol back = red2.r;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < 2; ++r) back[r] -= red2.a[k] * h.b[k][r];
    CHECK(back == mc({"x^3", "x^4"}, 2));
    CHECK(red2.r[0].degree() < 2);
    CHECK(red2.r[1].degree() < 3);
}

TEST_CASE("scalar kernel of a residue matrix")
{
    ModMat e = {mc({"x", "0"}, 2), mc({"1", "0"}, 2), mc({"x", "0"}, 2)};
    auto d = scalar_kernel(e, 2, 2);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(scalar_kernel({mc({"1", "x"}, 3), mc({"x", "1"}, 3)}, 2, 3).empty());
    auto z = scalar_kernel({mc({"0"}, 5)}, 1, 5);
    CHECK(z.size() == 1);
}

}

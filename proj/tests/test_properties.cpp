#include <doctest.h>

#include <chrono>

#include "properties.hpp"

namespace {
constexpr unsigned seed = 20240611;
constexpr std::size_t count = 200;

void expect(props::Report const & r)
{
    INFO(r.name);
    for (auto const & f : r.failures) MESSAGE(f);
    CHECK(r.instances >= count);
    CHECK(r.failures.empty());
}

template <class F>
void timed(F f)
{
    auto t0 = std::chrono::steady_clock::now();
    expect(f(seed, count));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5.0);
}
}

TEST_SUITE("properties") {

TEST_CASE("ghnf") { timed(props::ghnf_laws); }
TEST_CASE("membership") { timed(props::membership); }
TEST_CASE("saturation") { timed(props::saturation_laws); }
TEST_CASE("kernel") { timed(props::kernel_laws); }
TEST_CASE("characters") { timed(props::character_laws); }
TEST_CASE("decomposition") { timed(props::decomposition_laws); }
TEST_CASE("binomials") { timed(props::binomial_laws); }
TEST_CASE("constants") { timed(props::constant_laws); }

}

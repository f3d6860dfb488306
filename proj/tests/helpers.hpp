#ifndef SBI_TESTS_HELPERS_HPP
#define SBI_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "sbi/saturation.hpp"
#include "sbi/text.hpp"

namespace th {

inline sbi::IntPoly P(std::string const & s) { return sbi::parse_poly(s); }
inline sbi::LatVec V(std::string const & s) { return sbi::parse_latvec(s); }

inline std::vector<sbi::LatVec> cols(std::vector<std::string> const & cs)
{
    std::vector<sbi::LatVec> out;
    for (auto const & c : cs) out.push_back(V(c));
    return out;
}

/* canonical GHNF of the given columns */
inline sbi::GhnfBasis G(std::vector<std::string> const & cs, std::size_t n = 0)
{
    auto c = cols(cs);
    return sbi::ghnf(c, c.empty() ? n : c[0].size());
}

/* matrix given by rows, turned into columns */
inline sbi::GhnfBasis from_rows(std::vector<std::vector<std::string>> const & rows)
{
    std::size_t n = rows.size(), s = rows[0].size();
    std::vector<sbi::LatVec> c(s, sbi::LatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j) c[j][i] = P(rows[i][j]);
    return sbi::ghnf(c, n);
}

inline sbi::LaurentBinomial L(std::string const & s, std::size_t n) { return sbi::parse_laurent(s, n); }
inline sbi::FieldConst K(std::string const & s) { return sbi::parse_const(s); }

inline sbi::IntPoly random_poly(std::mt19937 & rng, int maxdeg, int maxc)
{
    std::uniform_int_distribution<int> deg(-1, maxdeg), co(-maxc, maxc);
    int d = deg(rng);
    std::vector<mpz_class> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(co(rng));
    return sbi::IntPoly(std::move(c));
}

inline std::vector<sbi::LatVec> random_gens(std::mt19937 & rng, std::size_t n, std::size_t s, int maxdeg, int maxc)
{
    std::vector<sbi::LatVec> out;
    for (std::size_t j = 0; j < s; ++j) {
        sbi::LatVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = random_poly(rng, maxdeg, maxc);
        out.push_back(std::move(v));
    }
    return out;
}

}

#endif

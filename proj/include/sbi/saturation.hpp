#ifndef SBI_SATURATION_HPP
#define SBI_SATURATION_HPP

/* Saturation of Z[x]-lattices with respect to x, to Z, to the
 * multiplicative set M, and combinations of those.  Every function takes
 * a basis (any generating set is accepted) and returns a canonical GHNF. */

#include <vector>

#include "sbi/constants.hpp"
#include "sbi/lattice.hpp"

namespace sbi {

struct XWitness {
    LatVec h;
    /* x*h = sum e[i] * c.column(i) */
    std::vector<mpz_class> e;
};
/* witnesses h with x*h in L and h not in L; empty iff L is x-saturated */
std::vector<XWitness> xfactor(GhnfBasis const & c);
GhnfBasis sat_x(GhnfBasis const & c);

struct ZWitness {
    LatVec h;
    mpz_class k;
    /* k*h = sum e[i] * c.column(i) */
    std::vector<IntPoly> e;
};
/* witnesses for the smallest prime p dividing the block leading
 * coefficients for which L is not p-saturated; empty iff Z-saturated */
std::vector<ZWitness> zfactor(GhnfBasis const & c);

struct TrackedBasis {
    GhnfBasis basis;
    /* multipliers[i] * basis.column(i) lies in the input lattice */
    std::vector<mpz_class> multipliers;
};
TrackedBasis sat_z(GhnfBasis const & c);

GhnfBasis sat_m(GhnfBasis const & c, Sigma s);
GhnfBasis sat_p(GhnfBasis const & c, Sigma s);
GhnfBasis sat_full(GhnfBasis const & c);

enum class SatKind { X, Z, M, P };
bool is_saturated(GhnfBasis const & c, SatKind kind, Sigma s);

}

#endif

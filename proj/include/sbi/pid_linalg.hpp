#ifndef SBI_PID_LINALG_HPP
#define SBI_PID_LINALG_HPP

/* Linear algebra over the PIDs Z and Z_p[x], plus the Z_p-scalar kernel. */

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sbi/polyzx.hpp"

namespace sbi {

/* row-major, rows x cols */
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    mpz_class & operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    mpz_class const & operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::vector<mpz_class> column(std::size_t j) const;
};

/* column-style HNF H = F*U with U unimodular.  The rank pivot columns come
 * first with positive pivots; in a pivot's row the entries of earlier
 * columns lie in [0, pivot). */
struct IntHnf {
    IntMat h, u;
    std::size_t rank = 0;
};
IntHnf hnf_int(IntMat const & f);
/* Z-basis of {e in Z^cols : F e = 0} */
std::vector<std::vector<mpz_class>> ker_int(IntMat const & f);

/* columns of polynomials over Z_p[x]; m[j][i] is row i of column j */
using ModCol = std::vector<ModPoly>;
using ModMat = std::vector<ModCol>;

/* column HNF in the GHNF shape: each nonzero column has its last nonzero
 * entry (the pivot) monic, pivot rows strictly increase, and entries in a
 * pivot row of later columns have degree below that pivot.  b = m * t. */
struct ModHnf {
    ModMat b;
    /* t[k] = coefficient column (length m.size()) of b[k] */
    ModMat t;
    std::vector<std::size_t> pivot_rows;
};
ModHnf hnf_modpoly(ModMat const & m, std::size_t n, std::uint64_t p);
/* Z_p[x]-basis of {g : sum g_j m[j] = 0} */
ModMat ker_modpoly(ModMat const & m, std::size_t n, std::uint64_t p);

/* v reduced against an HNF; v_orig = r - sum a[k] b[k] (so r = v + sum a_k b_k) */
struct ModRemainder {
    ModCol r;
    std::vector<ModPoly> a;
};
ModRemainder reduce_modpoly(ModCol const & v, ModHnf const & h);

/* basis of {b in Z_p^l : sum b_i e[i] = 0} */
std::vector<std::vector<std::uint64_t>> scalar_kernel(ModMat const & e, std::size_t n, std::uint64_t p);

}

#endif

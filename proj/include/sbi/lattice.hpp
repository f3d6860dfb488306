#ifndef SBI_LATTICE_HPP
#define SBI_LATTICE_HPP

/* Z[x]-lattices in Z[x]^n and their generalized Hermite normal form (GHNF).
 *
 * Rows are 0-based.  A column's leading term is its highest nonzero row,
 * at the highest degree of that entry.  Terms are ordered by row, then
 * degree, then absolute value of the coefficient.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sbi/polyzx.hpp"

namespace sbi {

class LatVec {
  public:
    LatVec() = default;
    explicit LatVec(std::size_t n) : e_(n) {}
    LatVec(std::vector<IntPoly> e) : e_(std::move(e)) {}
    LatVec(std::initializer_list<IntPoly> e) : e_(e) {}

    std::size_t size() const { return e_.size(); }
    IntPoly const & operator[](std::size_t i) const { return e_[i]; }
    IntPoly & operator[](std::size_t i) { return e_[i]; }
    std::vector<IntPoly> const & entries() const { return e_; }

    bool is_zero() const;
    /* max entry degree */
    long degree() const;

    LatVec & operator+=(LatVec const & o);
    LatVec & operator-=(LatVec const & o);
    LatVec & operator*=(IntPoly const & s);
    LatVec operator-() const;
    LatVec shifted(std::size_t k) const;
    /* this -= q * x^k * o, over rows [0, rows) */
    void sub_mul_shift(LatVec const & o, mpz_class const & q, std::size_t k, std::size_t rows);
    void sub_mul_shift(LatVec const & o, mpz_class const & q, std::size_t k) { sub_mul_shift(o, q, k, o.size()); }

    bool operator==(LatVec const & o) const = default;
    auto operator<=>(LatVec const & o) const = delete;

  private:
    std::vector<IntPoly> e_;
};

LatVec operator+(LatVec a, LatVec const & b);
LatVec operator-(LatVec a, LatVec const & b);
LatVec operator*(IntPoly const & s, LatVec a);

struct MonoTerm {
    mpz_class coeff;
    std::size_t deg;
    std::size_t row;
};

/* throws ZeroVector */
MonoTerm leading_term(LatVec const & v);
/* <0, 0, >0 */
int compare_terms(MonoTerm const & a, MonoTerm const & b);

struct Block {
    std::size_t row;
    std::size_t first;
    std::size_t size;
};

class GhnfBasis {
  public:
    GhnfBasis() = default;
    explicit GhnfBasis(std::size_t n) : n_(n) {}
    /* sorts ascending and derives the blocks; no Groebner check */
    static GhnfBasis from_columns(std::size_t n, std::vector<LatVec> cols);

    std::size_t dim() const { return n_; }
    std::size_t size() const { return cols_.size(); }
    bool empty() const { return cols_.empty(); }
    std::vector<LatVec> const & columns() const { return cols_; }
    LatVec const & column(std::size_t i) const { return cols_[i]; }
    MonoTerm const & leading(std::size_t i) const { return lts_[i]; }
    std::vector<Block> const & blocks() const { return blocks_; }
    std::size_t rank() const { return blocks_.size(); }

    bool operator==(GhnfBasis const & o) const { return n_ == o.n_ && cols_ == o.cols_; }

  private:
    std::size_t n_ = 0;
    std::vector<LatVec> cols_;
    std::vector<MonoTerm> lts_;
    std::vector<Block> blocks_;
};

/* full top-down reduction; coefficients end in [0, c) */
LatVec grem(LatVec const & v, GhnfBasis const & basis);

struct Remainder {
    LatVec r;
    /* v = r + sum q[j] * column(j) */
    std::vector<IntPoly> q;
};
Remainder grem_track(LatVec const & v, GhnfBasis const & basis);

LatVec s_vector(LatVec const & f, LatVec const & g);

struct TrackedGhnf {
    GhnfBasis basis;
    /* column i = sum transform[i][k] * gens[k] */
    std::vector<std::vector<IntPoly>> transform;
};

GhnfBasis ghnf(std::vector<LatVec> const & gens, std::size_t n);
TrackedGhnf ghnf_tracked(std::vector<LatVec> const & gens, std::size_t n);

/* empty when the basis is a reduced GHNF, else one message per violation */
std::vector<std::string> verify_ghnf(GhnfBasis const & basis);
inline bool is_ghnf(GhnfBasis const & basis) { return verify_ghnf(basis).empty(); }

/* syzygies of the columns of a GHNF, as vectors in Z[x]^size */
std::vector<LatVec> syzygy_basis(GhnfBasis const & basis);

/* generators of {X : sum X_k cols[k] = 0}, vectors in Z[x]^cols.size() */
std::vector<LatVec> gker(std::vector<LatVec> const & cols, std::size_t n);

struct CEnumeration {
    std::vector<LatVec> c_minus;
    std::vector<LatVec> c_inf_prefix;
};
CEnumeration enumerate_c(GhnfBasis const & basis, std::size_t degree_bound);

bool contains(GhnfBasis const & basis, LatVec const & v);
bool lattice_equal(GhnfBasis const & a, GhnfBasis const & b);
inline std::size_t rank(GhnfBasis const & b) { return b.rank(); }

}

#endif

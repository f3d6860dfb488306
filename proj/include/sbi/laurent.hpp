#ifndef SBI_LAURENT_HPP
#define SBI_LAURENT_HPP

/* Binomial sigma-ideals in the Laurent sigma-polynomial ring F{y1..yn}^(+-).
 * Such an ideal is described by a partial character: a lattice L with a
 * homomorphism rho from L to the nonzero constants, I = [Y^f - rho(f)]. */

#include <optional>
#include <vector>

#include "sbi/constants.hpp"
#include "sbi/lattice.hpp"

namespace sbi {

/* Y^support - constant */
struct LaurentBinomial {
    LatVec support;
    FieldConst constant;

    bool operator==(LaurentBinomial const & o) const = default;
};

/* leading coefficient of the support is positive */
bool is_normal(LatVec const & f);
/* flips to Y^(-f) - 1/c when needed; throws NotABinomial for f = 0 */
LaurentBinomial normalize(LatVec f, FieldConst c);

class PartialCharacter {
  public:
    PartialCharacter() = default;
    PartialCharacter(GhnfBasis basis, std::vector<FieldConst> constants, Sigma s)
        : basis_(std::move(basis)), constants_(std::move(constants)), sigma_(s) {}

    GhnfBasis const & basis() const { return basis_; }
    std::vector<FieldConst> const & constants() const { return constants_; }
    Sigma sigma() const { return sigma_; }
    std::size_t dim() const { return basis_.dim(); }
    /* the characteristic set Y^(c_i) - d_i */
    std::vector<LaurentBinomial> chain() const;

    bool operator==(PartialCharacter const & o) const
    {
        return basis_ == o.basis_ && constants_ == o.constants_ && sigma_ == o.sigma_;
    }

  private:
    GhnfBasis basis_;
    std::vector<FieldConst> constants_;
    Sigma sigma_ = Sigma::Identity;
};

/* nullopt stands for the unit ideal */
using IdealResult = std::optional<PartialCharacter>;

bool proper(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s);
IdealResult make_character(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s);
inline IdealResult charset(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s)
{
    return make_character(p, n, s);
}

/* rho(f), or nullopt when f is not in the lattice */
std::optional<FieldConst> evaluate(PartialCharacter const & rho, LatVec const & f);
bool member(LaurentBinomial const & b, PartialCharacter const & rho);
/* remainder of b; a zero support means b reduced to the constant 1 - constant */
LaurentBinomial prem_binomial(LaurentBinomial const & b, PartialCharacter const & rho);

bool is_prime(PartialCharacter const & rho);
bool is_reflexive(PartialCharacter const & rho);
bool is_wellmixed(PartialCharacter const & rho);
bool is_perfect(PartialCharacter const & rho);

IdealResult reflexive_closure(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s);
/* root_index picks which m-th root is used; the result does not depend on it */
IdealResult wellmixed_closure(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s,
                              unsigned long root_index = 0);
IdealResult perfect_closure(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s);

/* reflexive prime components of the perfect closure, sorted, without duplicates */
std::vector<PartialCharacter> dec_laurent(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s);

/* throws NotReflexivePrime */
std::size_t dimension(PartialCharacter const & rho);

/* total order used for sorting results */
bool lex_less(LatVec const & a, LatVec const & b);
bool lex_less(PartialCharacter const & a, PartialCharacter const & b);

}

#endif

#ifndef SBI_BINOMIAL_HPP
#define SBI_BINOMIAL_HPP

/* Binomial sigma-ideals in the ordinary sigma-polynomial ring F{y1..yn}.
 * Exponent vectors live in N[x]^n; variables are 0-based indices. */

#include <optional>
#include <vector>

#include "sbi/laurent.hpp"

namespace sbi {

/* Y^fplus - constant * Y^fminus, or the monomial Y^fplus when constant is
 * empty.  to_plain gives coprime monomials; parsed input may carry a
 * common monomial factor. */
struct PlainBinomial {
    LatVec fplus;
    LatVec fminus;
    std::optional<FieldConst> constant;

    bool is_monomial() const { return !constant.has_value(); }
    bool operator==(PlainBinomial const & o) const = default;
};

PlainBinomial to_plain(LaurentBinomial const & b);
/* throws NotABinomial for monomials and for equal exponent vectors */
LaurentBinomial to_laurent(PlainBinomial const & b);

using VarSet = std::vector<std::size_t>;

struct MonoTriple {
    VarSet zero;
    std::vector<PlainBinomial> b;
    VarSet nonzero;

    bool operator==(MonoTriple const & o) const = default;
};
/* splits off the monomials of b; every output has a monomial-free b */
std::vector<MonoTriple> dec_mono(MonoTriple const & t, std::size_t n);

struct Component {
    VarSet zero_vars;
    std::vector<PlainBinomial> chain;
    VarSet nonzero_vars;
    /* the variables outside zero_vars, and the character over them */
    VarSet laurent_vars;
    PartialCharacter character;

    bool operator==(Component const & o) const
    {
        return zero_vars == o.zero_vars && nonzero_vars == o.nonzero_vars && chain == o.chain;
    }
};

std::vector<Component> dec_binomial(std::vector<PlainBinomial> const & f, std::size_t n, Sigma s);

/* b in [zero_vars] + sat of the component's chain */
bool member_sat(PlainBinomial const & b, Component const & c);

}

#endif

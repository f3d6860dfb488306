#ifndef SBI_TEXT_HPP
#define SBI_TEXT_HPP

/* Text forms.  Every printer produces text its parser reads back to the
 * same value.
 *
 *   polynomial   3*x^2+4*x+1
 *   vector       [x+2, 4]
 *   constant     2^(1/2)*zeta(8)^3, -3, 1/2*2^(1/2)
 *   laurent      y1^(x)*y2^(-2) - 2
 *   plain        y1*y3^(2) - y2^(x)
 *
 * Documents are line based; '#' starts a comment line. */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbi/binomial.hpp"

namespace sbi {

IntPoly parse_poly(std::string_view s);
std::string to_string(IntPoly const & f);
LatVec parse_latvec(std::string_view s);
std::string to_string(LatVec const & v);
FieldConst parse_const(std::string_view s);

/* n is the number of variables */
LaurentBinomial parse_laurent(std::string_view s, std::size_t n);
PlainBinomial parse_plain(std::string_view s, std::size_t n);
std::string to_string(LaurentBinomial const & b);
std::string to_string(PlainBinomial const & b);

struct MatrixDoc {
    std::size_t dim = 0;
    std::vector<LatVec> cols;
    std::optional<std::vector<mpz_class>> multipliers;
};
MatrixDoc parse_matrix(std::string_view text);
std::string format_matrix(std::size_t dim, std::vector<LatVec> const & cols,
                          std::vector<mpz_class> const * multipliers = nullptr);
/* with rank and block comments */
std::string format_ghnf(GhnfBasis const & b, std::vector<mpz_class> const * multipliers = nullptr);

struct LaurentDoc {
    std::size_t vars = 0;
    bool unit = false;
    std::vector<LaurentBinomial> gens;
};
struct PlainDoc {
    std::size_t vars = 0;
    std::vector<PlainBinomial> gens;
};
LaurentDoc parse_laurent_doc(std::string_view text);
PlainDoc parse_plain_doc(std::string_view text);
std::string format_character(IdealResult const & r, std::size_t n);

std::string format_laurent_components(std::vector<PartialCharacter> const & c, std::size_t n);
std::vector<LaurentDoc> parse_laurent_components(std::string_view text);

struct ComponentDoc {
    VarSet zero;
    VarSet nonzero;
    std::vector<PlainBinomial> chain;

    bool operator==(ComponentDoc const & o) const = default;
};
std::string format_components(std::vector<Component> const & c, std::size_t n);
std::vector<ComponentDoc> parse_components(std::string_view text);

}

#endif

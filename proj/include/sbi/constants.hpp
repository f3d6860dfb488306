#ifndef SBI_CONSTANTS_HPP
#define SBI_CONSTANTS_HPP

/* Nonzero constants of the form  q * prod p^(a/b) * zeta(k)^j, closed under
 * products, inverses and k-th roots, with the difference operator sigma
 * acting either trivially or by complex conjugation. */

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sbi/polyzx.hpp"

namespace sbi {

enum class Sigma { Identity, Conjugation };

class FieldConst {
  public:
    /* the constant 1 */
    FieldConst() = default;
    /* q != 0 */
    static FieldConst rational(mpq_class const & q);
    /* p^e for a positive integer p (factored here) */
    static FieldConst power(mpz_class const & p, mpq_class const & e);
    /* exp(2 pi i turn) */
    static FieldConst root_of_unity(mpq_class const & turn);

    /* prime -> nonzero rational exponent */
    std::map<mpz_class, mpq_class> const & radical() const { return radical_; }
    /* in [0, 1) */
    mpq_class const & turn() const { return turn_; }
    bool is_one() const { return radical_.empty() && turn_ == 0; }

    FieldConst & operator*=(FieldConst const & o);
    FieldConst inverse() const;
    FieldConst pow(mpz_class const & n) const;

    bool operator==(FieldConst const & o) const { return radical_ == o.radical_ && turn_ == o.turn_; }
    bool operator<(FieldConst const & o) const;

  private:
    void set_turn(mpq_class t);
    void add_exponent(mpz_class const & p, mpq_class const & e);
    std::map<mpz_class, mpq_class> radical_;
    mpq_class turn_ = 0;
};

FieldConst operator*(FieldConst a, FieldConst const & b);
FieldConst operator/(FieldConst a, FieldConst const & b);

FieldConst sigma_apply(FieldConst const & c, Sigma s);
FieldConst sigma_inv(FieldConst const & c, Sigma s);
/* prod sigma^j(c)^(e_j) */
FieldConst pow_zx(FieldConst const & c, IntPoly const & e, Sigma s);

FieldConst principal_root(FieldConst const & c, unsigned long k);
/* the k roots, principal root times zeta(k)^l for l = 0..k-1 */
std::vector<FieldConst> kth_roots(FieldConst const & c, unsigned long k);

/* the integer o_m with zeta^(x - o_m) = 1 for every m-th root of unity zeta */
mpz_class o_m(mpz_class const & m, Sigma s);

std::string to_string(FieldConst const & c);
std::string to_string(Sigma s);

}

#endif

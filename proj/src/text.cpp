#include "sbi/text.hpp"

#include <cctype>
#include <regex>

#include "sbi/errors.hpp"

namespace sbi {

namespace {
mpq_class canonical(mpq_class q)
{
    q.canonicalize();
    return q;
}


class Cursor {
  public:
    Cursor(std::string_view s, std::size_t line = 1, std::size_t col = 1) : s_(s), line_(line), col_(col) {}

    void ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done()
    {
        ws();
        return pos_ == s_.size();
    }
    char peek()
    {
        ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(std::string_view w)
    {
        ws();
        if (s_.substr(pos_).substr(0, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }
    bool at_digit()
    {
        ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    mpz_class integer()
    {
        ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }
    mpz_class signed_integer()
    {
        bool neg = eat('-');
        if (!neg) eat('+');
        mpz_class v = integer();
        return neg ? mpz_class(-v) : v;
    }
    std::size_t small()
    {
        mpz_class v = integer();
        if (!v.fits_uint_p()) fail("number too large");
        return v.get_ui();
    }
    mpq_class rational()
    {
        bool neg = eat('-');
        if (!neg) eat('+');
        mpz_class n = integer(), d = 1;
        if (eat('/')) d = integer();
        if (d == 0) fail("zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    }
    void finish()
    {
        if (!done()) fail("unexpected input");
    }
    [[noreturn]] void fail(std::string const & msg) { throw ParseError(msg, line_, col_ + pos_); }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_, col_;
};

IntPoly poly(Cursor & c)
{
    IntPoly r;
    bool first = true;
    for (;;) {
        bool neg = false;
        if (c.eat('-'))
            neg = true;
        else if (!c.eat('+') && !first)
            break;
        mpz_class coef = 1;
        bool has_coef = c.at_digit();
        if (has_coef) coef = c.integer();
        bool star = c.eat('*');
        std::size_t k = 0;
        if (c.eat('x')) {
            k = 1;
            if (c.eat('^')) k = c.small();
        } else if (!has_coef || star) {
            c.fail("expected a polynomial term");
        }
        r += IntPoly::monomial(neg ? mpz_class(-coef) : coef, k);
        first = false;
    }
    return r;
}

LatVec latvec(Cursor & c)
{
    c.expect('[');
    std::vector<IntPoly> e;
    if (c.eat(']')) return LatVec(std::move(e));
    for (;;) {
        e.push_back(poly(c));
        if (c.eat(',')) continue;
        c.expect(']');
        return LatVec(std::move(e));
    }
}

bool const_factor(Cursor & c, FieldConst & out)
{
    if (c.eat_word("zeta")) {
        c.expect('(');
        mpz_class k = c.integer();
        if (k == 0) c.fail("zeta(0) is undefined");
        c.expect(')');
        mpz_class e = 1;
        if (c.eat('^')) {
            if (c.eat('(')) {
                e = c.signed_integer();
                c.expect(')');
            } else {
                e = c.signed_integer();
            }
        }
        out = FieldConst::root_of_unity(canonical(mpq_class(e, k)));
        return true;
    }
    if (!c.at_digit()) return false;
    mpz_class n = c.integer();
    if (n == 0) c.fail("constants must be nonzero");
    if (c.eat('/')) {
        mpz_class d = c.integer();
        if (d == 0) c.fail("zero denominator");
        out = FieldConst::rational(canonical(mpq_class(n, d)));
    } else if (c.eat('^')) {
        mpq_class e;
        if (c.eat('(')) {
            e = c.rational();
            c.expect(')');
        } else {
            e = c.signed_integer();
        }
        out = FieldConst::power(n, e);
    } else {
        out = FieldConst::rational(n);
    }
    return true;
}

struct Term {
    FieldConst c;
    LatVec e;
};

Term term(Cursor & c, std::size_t n)
{
    Term t{FieldConst(), LatVec(n)};
    for (;;) {
        FieldConst f;
        if (c.eat('y')) {
            std::size_t idx = c.small();
            if (idx < 1 || idx > n) c.fail("variable index out of range");
            IntPoly e = 1;
            if (c.eat('^')) {
                if (c.eat('(')) {
                    e = poly(c);
                    c.expect(')');
                } else if (c.eat('x')) {
                    e = IntPoly::x();
                } else {
                    e = IntPoly(c.signed_integer());
                }
            }
            t.e[idx - 1] += e;
        } else if (const_factor(c, f)) {
            t.c *= f;
        } else {
            c.fail("expected a factor");
        }
        if (!c.eat('*')) return t;
    }
}

FieldConst const minus_one = FieldConst::rational(-1);

/* one or two terms; the second already carries its sign */
std::vector<Term> expression(Cursor & c, std::size_t n)
{
    std::vector<Term> out;
    bool neg = c.eat('-');
    if (!neg) c.eat('+');
    out.push_back(term(c, n));
    if (neg) out.back().c *= minus_one;
    if (c.done()) return out;
    if (c.eat('-'))
        neg = true;
    else if (c.eat('+'))
        neg = false;
    else
        c.fail("expected '+' or '-'");
    out.push_back(term(c, n));
    if (neg) out.back().c *= minus_one;
    c.finish();
    return out;
}

std::string monomial(LatVec const & e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].is_zero()) continue;
        if (!out.empty()) out += "*";
        out += "y" + std::to_string(i + 1);
        if (e[i] != IntPoly(1)) out += "^(" + to_string(e[i]) + ")";
    }
    return out.empty() ? "1" : out;
}

bool negative(FieldConst const & c) { return c.turn() == mpq_class(1, 2); }

/* " - c" with the sign folded in */
std::string minus_const(FieldConst const & c, std::string const & mono)
{
    FieldConst a = negative(c) ? c * minus_one : c;
    std::string op = negative(c) ? " + " : " - ";
    if (mono.empty()) return op + to_string(a);
    if (a.is_one()) return op + mono;
    return op + to_string(a) + "*" + mono;
}

struct Line {
    std::size_t no;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view l = text.substr(pos, end - pos);
        ++no;
        std::size_t first = l.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && l[first] != '#') out.push_back({no, l});
        pos = end + 1;
    }
    return out;
}

std::size_t max_var(std::vector<Line> const & lines)
{
    static std::regex const re("y([0-9]+)");
    std::size_t m = 0;
    for (auto const & l : lines) {
        std::string s(l.text);
        for (std::sregex_iterator it(s.begin(), s.end(), re), end; it != end; ++it)
            m = std::max<std::size_t>(m, std::stoul((*it)[1].str()));
    }
    return m;
}

/* "word rest" where word is a keyword */
bool keyword(Line const & l, std::string_view w, Cursor & c)
{
    std::size_t first = l.text.find_first_not_of(" \t");
    std::string_view t = l.text.substr(first);
    if (t.substr(0, w.size()) != w) return false;
    if (t.size() > w.size() && !std::isspace(static_cast<unsigned char>(t[w.size()]))) return false;
    c = Cursor(t.substr(w.size()), l.no, first + w.size() + 1);
    return true;
}

VarSet var_list(Cursor & c, std::size_t n)
{
    VarSet out;
    while (!c.done()) {
        c.expect('y');
        std::size_t v = c.small();
        if (v < 1 || v > n) c.fail("variable index out of range");
        out.push_back(v - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string var_names(VarSet const & v)
{
    std::string out;
    for (std::size_t i : v) out += " y" + std::to_string(i + 1);
    return out;
}

}

/* {{{ single values */
IntPoly parse_poly(std::string_view s)
{
    Cursor c(s);
    IntPoly p = poly(c);
    c.finish();
    return p;
}

std::string to_string(IntPoly const & f)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (long k = f.degree(); k >= 0; --k) {
        mpz_class const & a = f.coeff(static_cast<std::size_t>(k));
        if (a == 0) continue;
        if (a < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        mpz_class m = abs(a);
        if (k == 0) {
            out += m.get_str();
            continue;
        }
        if (m != 1) out += m.get_str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

LatVec parse_latvec(std::string_view s)
{
    Cursor c(s);
    LatVec v = latvec(c);
    c.finish();
    return v;
}

std::string to_string(LatVec const & v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + "]";
}

FieldConst parse_const(std::string_view s)
{
    Cursor c(s);
    bool neg = c.eat('-');
    FieldConst out = neg ? minus_one : FieldConst();
    for (;;) {
        FieldConst f;
        if (!const_factor(c, f)) c.fail("expected a constant factor");
        out *= f;
        if (!c.eat('*')) break;
    }
    c.finish();
    return out;
}

namespace {
LaurentBinomial laurent(Cursor & c, std::size_t n)
{
    auto t = expression(c, n);
    if (t.size() != 2) c.fail("expected a binomial");
    LatVec f = t[0].e - t[1].e;
    if (f.is_zero()) c.fail("the two monomials coincide");
    return normalize(std::move(f), t[1].c / t[0].c * minus_one);
}

PlainBinomial plain(Cursor & c, std::size_t n)
{
    auto t = expression(c, n);
    for (auto const & x : t)
        for (auto const & p : x.e.entries())
            for (auto const & a : p.coeffs())
                if (a < 0) c.fail("exponents must have nonnegative coefficients");
    if (t.size() == 1) return {t[0].e, LatVec(n), std::nullopt};
    if (t[0].e == t[1].e) c.fail("the two monomials coincide");
    return {t[0].e, t[1].e, t[1].c / t[0].c * minus_one};
}
}

LaurentBinomial parse_laurent(std::string_view s, std::size_t n)
{
    Cursor c(s);
    return laurent(c, n);
}

PlainBinomial parse_plain(std::string_view s, std::size_t n)
{
    Cursor c(s);
    return plain(c, n);
}

std::string to_string(LaurentBinomial const & b)
{
    return monomial(b.support) + minus_const(b.constant, "");
}

std::string to_string(PlainBinomial const & b)
{
    std::string lhs = monomial(b.fplus);
    if (b.is_monomial()) return lhs;
    return lhs + minus_const(*b.constant, b.fminus.is_zero() ? "" : monomial(b.fminus));
}
/* }}} */

/* {{{ documents */
MatrixDoc parse_matrix(std::string_view text)
{
    MatrixDoc d;
    bool have_dim = false;
    for (auto const & l : content_lines(text)) {
        Cursor c(l.text, l.no);
        if (keyword(l, "dim", c)) {
            d.dim = c.small();
            c.finish();
            have_dim = true;
        } else if (keyword(l, "multipliers", c)) {
            std::vector<mpz_class> m;
            while (!c.done()) m.push_back(c.integer());
            d.multipliers = std::move(m);
        } else {
            Cursor v(l.text, l.no);
            LatVec col = latvec(v);
            v.finish();
            if (!have_dim) {
                d.dim = col.size();
                have_dim = true;
            }
            if (col.size() != d.dim) throw ParseError("column has the wrong dimension", l.no, 1);
            d.cols.push_back(std::move(col));
        }
    }
    if (d.multipliers && d.multipliers->size() != d.cols.size())
        throw ParseError("one multiplier per column expected", 0, 0);
    return d;
}

std::string format_matrix(std::size_t dim, std::vector<LatVec> const & cols, std::vector<mpz_class> const * mult)
{
    std::string out = "dim " + std::to_string(dim) + "\n";
    for (auto const & c : cols) out += to_string(c) + "\n";
    if (mult) {
        out += "multipliers";
        for (auto const & m : *mult) out += " " + m.get_str();
        out += "\n";
    }
    return out;
}

std::string format_ghnf(GhnfBasis const & b, std::vector<mpz_class> const * mult)
{
    std::string out = "# rank " + std::to_string(b.rank()) + "\n";
    for (auto const & blk : b.blocks()) {
        std::string degs, lcs;
        for (std::size_t j = blk.first; j < blk.first + blk.size; ++j) {
            degs += " " + std::to_string(b.leading(j).deg);
            lcs += " " + b.leading(j).coeff.get_str();
        }
        out += "# block row " + std::to_string(blk.row + 1) + ": degrees" + degs + "; leading coefficients" + lcs + "\n";
    }
    return out + format_matrix(b.dim(), b.columns(), mult);
}

LaurentDoc parse_laurent_doc(std::string_view text)
{
    auto lines = content_lines(text);
    LaurentDoc d;
    d.vars = max_var(lines);
    for (auto const & l : lines) {
        Cursor c(l.text, l.no);
        if (keyword(l, "vars", c)) {
            std::size_t v = c.small();
            c.finish();
            if (v < d.vars) c.fail("fewer variables than used");
            d.vars = v;
        }
    }
    for (auto const & l : lines) {
        Cursor c(l.text, l.no);
        if (keyword(l, "vars", c)) continue;
        if (keyword(l, "unit", c)) {
            c.finish();
            d.unit = true;
            continue;
        }
        Cursor b(l.text, l.no);
        d.gens.push_back(laurent(b, d.vars));
    }
    return d;
}

PlainDoc parse_plain_doc(std::string_view text)
{
    auto lines = content_lines(text);
    PlainDoc d;
    d.vars = max_var(lines);
    for (auto const & l : lines) {
        Cursor c(l.text, l.no);
        if (keyword(l, "vars", c)) {
            std::size_t v = c.small();
            c.finish();
            if (v < d.vars) c.fail("fewer variables than used");
            d.vars = v;
        }
    }
    for (auto const & l : lines) {
        Cursor c(l.text, l.no);
        if (keyword(l, "vars", c)) continue;
        Cursor b(l.text, l.no);
        d.gens.push_back(plain(b, d.vars));
    }
    return d;
}

std::string format_character(IdealResult const & r, std::size_t n)
{
    if (!r) return "unit\n";
    std::string out = "vars " + std::to_string(n) + "\n";
    for (auto const & b : r->chain()) out += to_string(b) + "\n";
    return out;
}

std::string format_laurent_components(std::vector<PartialCharacter> const & cs, std::size_t n)
{
    std::string out = "vars " + std::to_string(n) + "\ncomponents " + std::to_string(cs.size()) + "\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out += "component " + std::to_string(i + 1) + "\n";
        for (auto const & b : cs[i].chain()) out += to_string(b) + "\n";
    }
    return out;
}

std::vector<LaurentDoc> parse_laurent_components(std::string_view text)
{
    auto lines = content_lines(text);
    std::size_t n = max_var(lines);
    std::optional<std::size_t> count;
    std::vector<LaurentDoc> out;
    for (auto const & l : lines) {
        Cursor c(l.text, l.no);
        if (keyword(l, "vars", c)) {
            n = std::max(n, c.small());
            c.finish();
        } else if (keyword(l, "components", c)) {
            count = c.small();
            c.finish();
        } else if (keyword(l, "component", c)) {
            c.small();
            c.finish();
            out.push_back({n, false, {}});
        } else {
            if (out.empty()) c.fail("binomial outside a component");
            Cursor b(l.text, l.no);
            out.back().gens.push_back(laurent(b, n));
        }
    }
    if (count && *count != out.size()) throw ParseError("component count mismatch", 0, 0);
    return out;
}

std::string format_components(std::vector<Component> const & cs, std::size_t n)
{
    std::string out = "vars " + std::to_string(n) + "\ncomponents " + std::to_string(cs.size()) + "\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out += "component " + std::to_string(i + 1) + "\n";
        out += "zero" + var_names(cs[i].zero_vars) + "\n";
        out += "nonzero" + var_names(cs[i].nonzero_vars) + "\n";
        for (auto const & b : cs[i].chain) out += to_string(b) + "\n";
    }
    return out;
}

std::vector<ComponentDoc> parse_components(std::string_view text)
{
    auto lines = content_lines(text);
    std::size_t n = max_var(lines);
    std::optional<std::size_t> count;
    std::vector<ComponentDoc> out;
    for (auto const & l : lines) {
        Cursor c(l.text, l.no);
        if (keyword(l, "vars", c)) {
            n = std::max(n, c.small());
            c.finish();
        } else if (keyword(l, "components", c)) {
            count = c.small();
            c.finish();
        } else if (keyword(l, "component", c)) {
            c.small();
            c.finish();
            out.emplace_back();
        } else if (keyword(l, "zero", c) || keyword(l, "nonzero", c)) {
            if (out.empty()) c.fail("variable list outside a component");
            bool zero = l.text.find("nonzero") == std::string_view::npos;
            (zero ? out.back().zero : out.back().nonzero) = var_list(c, n);
        } else {
            if (out.empty()) c.fail("binomial outside a component");
            Cursor b(l.text, l.no);
            out.back().chain.push_back(plain(b, n));
        }
    }
    if (count && *count != out.size()) throw ParseError("component count mismatch", 0, 0);
    return out;
}
/* }}} */

}

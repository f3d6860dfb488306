#include "sbi/laurent.hpp"

#include <algorithm>

#include "sbi/errors.hpp"
#include "sbi/saturation.hpp"

namespace sbi {

bool is_normal(LatVec const & f)
{
    return !f.is_zero() && sgn(leading_term(f).coeff) > 0;
}

LaurentBinomial normalize(LatVec f, FieldConst c)
{
    if (f.is_zero()) throw NotABinomial("the two monomials coincide");
    if (is_normal(f)) return {std::move(f), std::move(c)};
    return {-f, c.inverse()};
}

std::vector<LaurentBinomial> PartialCharacter::chain() const
{
    std::vector<LaurentBinomial> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) out.push_back({basis_.column(i), constants_[i]});
    return out;
}

namespace {
void check_dim(std::vector<LaurentBinomial> const & p, std::size_t n)
{
    for (auto const & b : p)
        if (b.support.size() != n) throw DimensionError("binomial has the wrong number of variables");
}

FieldConst combine(std::vector<FieldConst> const & c, std::vector<IntPoly> const & e, Sigma s)
{
    FieldConst r;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!e[k].is_zero()) r *= pow_zx(c[k], e[k], s);
    return r;
}

std::vector<LaurentBinomial> with(std::vector<LaurentBinomial> p, std::vector<LaurentBinomial> const & extra)
{
    p.insert(p.end(), extra.begin(), extra.end());
    return p;
}
}

bool proper(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s)
{
    check_dim(p, n);
    std::vector<LatVec> sup;
    std::vector<FieldConst> c;
    for (auto const & b : p) {
        sup.push_back(b.support);
        c.push_back(b.constant);
    }
    for (auto const & h : gker(sup, n))
        if (!combine(c, h.entries(), s).is_one()) return false;
    return true;
}

IdealResult make_character(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s)
{
    if (!proper(p, n, s)) return std::nullopt;
    std::vector<LatVec> sup;
    std::vector<FieldConst> c;
    for (auto const & b : p) {
        sup.push_back(b.support);
        c.push_back(b.constant);
    }
    TrackedGhnf tg = ghnf_tracked(sup, n);
    std::vector<FieldConst> d;
    for (auto const & row : tg.transform) d.push_back(combine(c, row, s));
    return PartialCharacter(std::move(tg.basis), std::move(d), s);
}

std::optional<FieldConst> evaluate(PartialCharacter const & rho, LatVec const & f)
{
    Remainder rem = grem_track(f, rho.basis());
    if (!rem.r.is_zero()) return std::nullopt;
    return combine(rho.constants(), rem.q, rho.sigma());
}

bool member(LaurentBinomial const & b, PartialCharacter const & rho)
{
    auto v = evaluate(rho, b.support);
    return v && *v == b.constant;
}

LaurentBinomial prem_binomial(LaurentBinomial const & b, PartialCharacter const & rho)
{
    Remainder rem = grem_track(b.support, rho.basis());
    FieldConst c = b.constant / combine(rho.constants(), rem.q, rho.sigma());
    if (rem.r.is_zero()) return {std::move(rem.r), std::move(c)};
    return normalize(std::move(rem.r), std::move(c));
}

bool is_prime(PartialCharacter const & rho)
{
    return is_saturated(rho.basis(), SatKind::Z, rho.sigma());
}

bool is_reflexive(PartialCharacter const & rho)
{
    return is_saturated(rho.basis(), SatKind::X, rho.sigma());
}

bool is_wellmixed(PartialCharacter const & rho)
{
    if (!is_saturated(rho.basis(), SatKind::M, rho.sigma())) return false;
    auto w = wellmixed_closure(rho.chain(), rho.dim(), rho.sigma());
    return w && *w == rho;
}

bool is_perfect(PartialCharacter const & rho)
{
    if (!is_saturated(rho.basis(), SatKind::P, rho.sigma())) return false;
    auto w = perfect_closure(rho.chain(), rho.dim(), rho.sigma());
    return w && *w == rho;
}

IdealResult reflexive_closure(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s)
{
    IdealResult rho = make_character(p, n, s);
    while (rho) {
        auto w = xfactor(rho->basis());
        if (w.empty()) return rho;
        std::vector<LaurentBinomial> extra;
        for (auto const & x : w) {
            FieldConst c;
            for (std::size_t j = 0; j < x.e.size(); ++j)
                if (x.e[j] != 0) c *= rho->constants()[j].pow(x.e[j]);
            extra.push_back(normalize(x.h, sigma_inv(c, s)));
        }
        rho = make_character(with(rho->chain(), extra), n, s);
    }
    return rho;
}

IdealResult wellmixed_closure(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s,
                              unsigned long root_index)
{
    IdealResult rho = make_character(p, n, s);
    while (rho) {
        TrackedBasis t = sat_z(rho->basis());
        std::vector<LaurentBinomial> extra;
        for (std::size_t i = 0; i < t.basis.size(); ++i) {
            mpz_class const & m = t.multipliers[i];
            if (m == 1) continue;
            if (!m.fits_ulong_p()) throw DegenerateInput("multiplier too large");
            LatVec const & g = t.basis.column(i);
            auto val = evaluate(*rho, IntPoly(m) * g);
            if (!val) throw DegenerateInput("multiplier does not map into the lattice");
            auto roots = kth_roots(*val, m.get_ui());
            FieldConst const & a = roots[root_index % roots.size()];
            IntPoly e = IntPoly::x() - IntPoly(o_m(m, s));
            extra.push_back(normalize(e * g, pow_zx(a, e, s)));
        }
        if (extra.empty()) return rho;
        IdealResult next = make_character(with(rho->chain(), extra), n, s);
        if (next && *next == *rho) return rho;
        rho = std::move(next);
    }
    return rho;
}

IdealResult perfect_closure(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s)
{
    IdealResult rho = make_character(p, n, s);
    while (rho) {
        IdealResult r = reflexive_closure(rho->chain(), n, s);
        if (!r) return r;
        IdealResult w = wellmixed_closure(r->chain(), n, s);
        if (!w || *w == *rho) return w;
        rho = std::move(w);
    }
    return rho;
}

std::vector<PartialCharacter> dec_laurent(std::vector<LaurentBinomial> const & p, std::size_t n, Sigma s)
{
    std::vector<PartialCharacter> out;
    IdealResult f = reflexive_closure(p, n, s);
    if (!f) return out;
    std::vector<std::vector<LaurentBinomial>> work{f->chain()};
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        IdealResult g = make_character(cur, n, s);
        if (!g) continue;
        auto w = zfactor(g->basis());
        if (w.empty()) {
            if (std::find(out.begin(), out.end(), *g) == out.end()) out.push_back(*g);
            continue;
        }
        std::vector<std::vector<FieldConst>> roots;
        for (auto const & z : w) {
            FieldConst c = combine(g->constants(), z.e, s);
            roots.push_back(kth_roots(c, z.k.get_ui()));
        }
        std::vector<std::size_t> pick(w.size(), 0);
        for (;;) {
            std::vector<LaurentBinomial> next = g->chain();
            for (std::size_t i = 0; i < w.size(); ++i) next.push_back(normalize(w[i].h, roots[i][pick[i]]));
            work.push_back(std::move(next));
            std::size_t i = 0;
            while (i < w.size() && ++pick[i] == roots[i].size()) pick[i++] = 0;
            if (i == w.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [](auto const & a, auto const & b) { return lex_less(a, b); });
    return out;
}

std::size_t dimension(PartialCharacter const & rho)
{
    if (!is_reflexive(rho) || !is_prime(rho)) throw NotReflexivePrime("dimension needs a reflexive prime ideal");
    return rho.dim() - rho.basis().rank();
}

bool lex_less(LatVec const & a, LatVec const & b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto ca = a[i].coeffs(), cb = b[i].coeffs();
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        for (std::size_t k = 0; k < ca.size(); ++k)
            if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
    return false;
}

bool lex_less(PartialCharacter const & a, PartialCharacter const & b)
{
    auto const & ca = a.basis().columns();
    auto const & cb = b.basis().columns();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (lex_less(ca[i], cb[i])) return true;
        if (lex_less(cb[i], ca[i])) return false;
    }
    return a.constants() < b.constants();
}

}

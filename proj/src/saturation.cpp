#include "sbi/saturation.hpp"

#include "sbi/errors.hpp"
#include "sbi/pid_linalg.hpp"

namespace sbi {

namespace {
GhnfBasis canonical(GhnfBasis const & c)
{
    return ghnf(c.columns(), c.dim());
}

GhnfBasis adjoin(GhnfBasis const & c, std::vector<LatVec> const & extra)
{
    std::vector<LatVec> gens = c.columns();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return ghnf(gens, c.dim());
}
}

/* {{{ x */
std::vector<XWitness> xfactor(GhnfBasis const & c)
{
    std::size_t n = c.dim(), s = c.size();
    IntMat f(n, s);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n; ++i) f(i, j) = c.column(j)[i].coeff(0);
    std::vector<XWitness> out;
    for (auto & e : ker_int(f)) {
        LatVec w(n);
        for (std::size_t j = 0; j < s; ++j)
            if (e[j] != 0) w.sub_mul_shift(c.column(j), -e[j], 0);
        LatVec h(n);
        for (std::size_t i = 0; i < n; ++i) h[i] = w[i].div_x();
        if (!grem(h, c).is_zero()) out.push_back({std::move(h), std::move(e)});
    }
    return out;
}

GhnfBasis sat_x(GhnfBasis const & c0)
{
    GhnfBasis c = canonical(c0);
    for (;;) {
        auto w = xfactor(c);
        if (w.empty()) return c;
        std::vector<LatVec> h;
        for (auto & x : w) h.push_back(std::move(x.h));
        c = adjoin(c, h);
    }
}
/* }}} */

/* {{{ Z */
namespace {

struct PrimeStep {
    GhnfBasis const & c;
    std::uint64_t p;
    mpz_class pz;
    std::vector<std::size_t> ends;

    ModCol reduce(LatVec const & v) const
    {
        ModCol r;
        for (std::size_t i = 0; i < v.size(); ++i) r.push_back(mod_reduce(v[i], p));
        return r;
    }

    /* w = base + sum lift(g[j]) * c_end[j], which must vanish mod p */
    void emit(LatVec w, std::vector<IntPoly> e, std::vector<ModPoly> const & g, std::vector<ZWitness> & out) const
    {
        for (std::size_t j = 0; j < ends.size(); ++j) {
            IntPoly lj = lift(g[j]);
            if (lj.is_zero()) continue;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += lj * c.column(ends[j])[i];
            e[ends[j]] += lj;
        }
        LatVec h(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) h[i] = w[i].exact_div(pz);
        if (grem(h, c).is_zero()) return;
        out.push_back({std::move(h), pz, std::move(e)});
    }

    std::vector<ZWitness> run() const
    {
        std::size_t n = c.dim(), s = c.size();
        std::vector<ZWitness> out;
        ModMat f;
        for (std::size_t j : ends) f.push_back(reduce(c.column(j)));

        for (auto const & g : ker_modpoly(f, n, p))
            emit(LatVec(n), std::vector<IntPoly>(s), g, out);
        if (!out.empty()) return out;

        ModHnf hnf = hnf_modpoly(f, n, p);
        struct Minus {
            std::size_t col, shift;
            LatVec v;
        };
        std::vector<Minus> cm;
        for (auto const & blk : c.blocks()) {
            for (std::size_t j = blk.first; j + 1 < blk.first + blk.size; ++j) {
                std::size_t gap = c.leading(j + 1).deg - c.leading(j).deg;
                for (std::size_t t = 0; t < gap; ++t) cm.push_back({j, t, c.column(j).shifted(t)});
            }
        }
        std::vector<ModRemainder> red;
        for (auto const & m : cm) red.push_back(reduce_modpoly(reduce(m.v), hnf));

        /* coefficients on the block ends of sum_k a[k] b[k] */
        auto through_t = [&](std::vector<ModPoly> const & a) {
            std::vector<ModPoly> g(ends.size(), ModPoly(p));
            for (std::size_t k = 0; k < a.size(); ++k)
                for (std::size_t j = 0; j < ends.size(); ++j) g[j] += a[k] * hnf.t[k][j];
            return g;
        };

        for (std::size_t i = 0; i < cm.size(); ++i) {
            bool zero = true;
            for (auto const & e : red[i].r) zero = zero && e.is_zero();
            if (!zero) continue;
            std::vector<IntPoly> e(s);
            e[cm[i].col] = IntPoly::monomial(1, cm[i].shift);
            emit(cm[i].v, std::move(e), through_t(red[i].a), out);
        }
        if (!out.empty()) return out;

        ModMat res;
        for (auto const & r : red) res.push_back(r.r);
        for (auto const & b : scalar_kernel(res, n, p)) {
            LatVec w(n);
            std::vector<IntPoly> e(s);
            std::vector<ModPoly> a(hnf.b.size(), ModPoly(p));
            for (std::size_t i = 0; i < cm.size(); ++i) {
                if (b[i] == 0) continue;
                mpz_class bi = static_cast<unsigned long>(b[i]);
                w.sub_mul_shift(cm[i].v, -bi, 0);
                e[cm[i].col] += IntPoly::monomial(bi, cm[i].shift);
                for (std::size_t k = 0; k < a.size(); ++k) a[k] += red[i].a[k] * b[i];
            }
            emit(std::move(w), std::move(e), through_t(a), out);
        }
        return out;
    }
};

}

std::vector<ZWitness> zfactor(GhnfBasis const & c)
{
    std::vector<mpz_class> primes;
    std::vector<std::size_t> ends;
    for (auto const & blk : c.blocks()) {
        for (auto const & q : prime_factors(c.leading(blk.first).coeff)) primes.push_back(q);
        ends.push_back(blk.first + blk.size - 1);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto const & pz : primes) {
        PrimeStep step{c, to_modulus(pz), pz, ends};
        auto out = step.run();
        if (!out.empty()) return out;
    }
    return {};
}

TrackedBasis sat_z(GhnfBasis const & c)
{
    std::size_t n = c.dim();
    std::vector<LatVec> gens = c.columns();
    std::vector<mpz_class> mult(gens.size(), 1);
    for (;;) {
        TrackedGhnf tg = ghnf_tracked(gens, n);
        std::vector<mpz_class> m(tg.basis.size(), 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (!tg.transform[i][k].is_zero()) mpz_lcm(m[i].get_mpz_t(), m[i].get_mpz_t(), mult[k].get_mpz_t());
        auto w = zfactor(tg.basis);
        if (w.empty()) return {std::move(tg.basis), std::move(m)};
        gens = tg.basis.columns();
        mult = m;
        for (auto & z : w) {
            mpz_class l = 1;
            for (std::size_t j = 0; j < z.e.size(); ++j)
                if (!z.e[j].is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[j].get_mpz_t());
            gens.push_back(std::move(z.h));
            mult.push_back(l * z.k);
        }
    }
}
/* }}} */

GhnfBasis sat_m(GhnfBasis const & c0, Sigma s)
{
    GhnfBasis c = canonical(c0);
    for (;;) {
        TrackedBasis t = sat_z(c);
        std::vector<LatVec> extra;
        for (std::size_t i = 0; i < t.basis.size(); ++i) {
            if (t.multipliers[i] == 1) continue;
            IntPoly f = IntPoly::x() - IntPoly(o_m(t.multipliers[i], s));
            extra.push_back(f * t.basis.column(i));
        }
        GhnfBasis next = adjoin(c, extra);
        if (next == c) return c;
        c = std::move(next);
    }
}

GhnfBasis sat_p(GhnfBasis const & c0, Sigma s)
{
    GhnfBasis c = canonical(c0);
    for (;;) {
        GhnfBasis next = sat_x(sat_m(c, s));
        if (next == c) return c;
        c = std::move(next);
    }
}

GhnfBasis sat_full(GhnfBasis const & c0)
{
    GhnfBasis c = canonical(c0);
    for (;;) {
        GhnfBasis next = sat_z(sat_x(c)).basis;
        if (next == c) return c;
        c = std::move(next);
    }
}

bool is_saturated(GhnfBasis const & c0, SatKind kind, Sigma s)
{
    GhnfBasis c = canonical(c0);
    switch (kind) {
    case SatKind::X:
        return xfactor(c).empty();
    case SatKind::Z:
        return zfactor(c).empty();
    case SatKind::M: {
        TrackedBasis t = sat_z(c);
        for (std::size_t i = 0; i < t.basis.size(); ++i) {
            IntPoly f = IntPoly::x() - IntPoly(o_m(t.multipliers[i], s));
            if (!contains(c, f * t.basis.column(i))) return false;
        }
        return true;
    }
    case SatKind::P:
        return is_saturated(c, SatKind::X, s) && is_saturated(c, SatKind::M, s);
    }
    return false;
}

}

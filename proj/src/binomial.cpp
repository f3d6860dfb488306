#include "sbi/binomial.hpp"

#include <algorithm>

#include "sbi/errors.hpp"

namespace sbi {

PlainBinomial to_plain(LaurentBinomial const & b)
{
    std::size_t n = b.support.size();
    LatVec plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto c = b.support[i].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] > 0) plus[i].set_coeff(k, c[k]);
            if (c[k] < 0) minus[i].set_coeff(k, -c[k]);
        }
    }
    return {std::move(plus), std::move(minus), b.constant};
}

LaurentBinomial to_laurent(PlainBinomial const & b)
{
    if (b.is_monomial()) throw NotABinomial("a monomial has no Laurent binomial form");
    return normalize(b.fplus - b.fminus, *b.constant);
}

namespace {

bool involves(LatVec const & a, VarSet const & vars)
{
    return std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return !a[v].is_zero(); });
}

VarSet vars_of(LatVec const & a)
{
    VarSet out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out.push_back(i);
    return out;
}

VarSet with(VarSet s, std::size_t v)
{
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
}

bool has(VarSet const & s, std::size_t v) { return std::binary_search(s.begin(), s.end(), v); }

/* nullopt when some element turns into a nonzero constant */
std::optional<std::vector<PlainBinomial>> substitute(std::vector<PlainBinomial> const & b, VarSet const & zero)
{
    std::vector<PlainBinomial> out;
    for (auto const & f : b) {
        bool plus_dies = involves(f.fplus, zero);
        if (f.is_monomial()) {
            if (plus_dies) continue;
            if (f.fplus.is_zero()) return std::nullopt;
            out.push_back(f);
            continue;
        }
        bool minus_dies = involves(f.fminus, zero);
        if (plus_dies && minus_dies) continue;
        if (plus_dies || minus_dies) {
            LatVec const & rest = plus_dies ? f.fminus : f.fplus;
            if (rest.is_zero()) return std::nullopt;
            out.push_back({rest, LatVec(rest.size()), std::nullopt});
            continue;
        }
        out.push_back(f);
    }
    return out;
}

}

std::vector<MonoTriple> dec_mono(MonoTriple const & t0, std::size_t n)
{
    for (auto const & f : t0.b)
        if (f.fplus.size() != n || f.fminus.size() != n) throw DimensionError("binomial has the wrong number of variables");
    std::vector<MonoTriple> out;
    std::vector<MonoTriple> work{t0};
    while (!work.empty()) {
        MonoTriple t = std::move(work.back());
        work.pop_back();
        auto b1 = substitute(t.b, t.zero);
        if (!b1) continue;
        auto mono = std::find_if(b1->begin(), b1->end(), [](auto const & f) { return f.is_monomial(); });
        if (mono == b1->end()) {
            out.push_back({t.zero, std::move(*b1), t.nonzero});
            continue;
        }
        VarSet y2;
        for (std::size_t v : vars_of(mono->fplus))
            if (!has(t.nonzero, v)) y2.push_back(v);
        b1->erase(mono);
        VarSet excl = t.nonzero;
        std::vector<MonoTriple> branch;
        for (std::size_t v : y2) {
            branch.push_back({with(t.zero, v), *b1, excl});
            excl = with(excl, v);
        }
        /* keep the natural order when popping from the back */
        work.insert(work.end(), branch.rbegin(), branch.rend());
    }
    return out;
}

std::vector<Component> dec_binomial(std::vector<PlainBinomial> const & f, std::size_t n, Sigma s)
{
    std::vector<Component> out;
    auto add = [&](Component c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    };
    auto laurent_of = [&](VarSet const & zero) {
        VarSet lv;
        for (std::size_t i = 0; i < n; ++i)
            if (!has(zero, i)) lv.push_back(i);
        return lv;
    };

    std::vector<MonoTriple> work = dec_mono({{}, f, {}}, n);
    std::reverse(work.begin(), work.end());
    while (!work.empty()) {
        MonoTriple t = std::move(work.back());
        work.pop_back();
        VarSet lv = laurent_of(t.zero);
        std::size_t m = lv.size();
        if (t.b.empty()) {
            add({t.zero, {}, t.nonzero, lv, PartialCharacter(GhnfBasis(m), {}, s)});
            continue;
        }
        std::vector<LaurentBinomial> lb;
        for (auto const & g : t.b) {
            LatVec sup(m);
            for (std::size_t i = 0; i < m; ++i) sup[i] = g.fplus[lv[i]] - g.fminus[lv[i]];
            if (sup.is_zero())
                lb.push_back({std::move(sup), *g.constant});
            else
                lb.push_back(normalize(std::move(sup), *g.constant));
        }
        for (auto const & rho : dec_laurent(lb, m, s)) {
            std::vector<PlainBinomial> chain;
            for (auto const & b : rho.chain()) {
                PlainBinomial pb = to_plain(b);
                LatVec plus(n), minus(n);
                for (std::size_t i = 0; i < m; ++i) {
                    plus[lv[i]] = pb.fplus[i];
                    minus[lv[i]] = pb.fminus[i];
                }
                chain.push_back({std::move(plus), std::move(minus), pb.constant});
            }
            add({t.zero, std::move(chain), t.nonzero, lv, rho});
        }
        VarSet occurring;
        for (std::size_t i = 0; i < n; ++i) {
            if (has(t.nonzero, i)) continue;
            bool used = std::any_of(t.b.begin(), t.b.end(), [&](auto const & g) {
                return !g.fplus[i].is_zero() || !g.fminus[i].is_zero();
            });
            if (used) occurring.push_back(i);
        }
        VarSet excl = t.nonzero;
        std::vector<MonoTriple> more;
        for (std::size_t v : occurring) {
            for (auto & r : dec_mono({with(t.zero, v), t.b, excl}, n)) more.push_back(std::move(r));
            excl = with(excl, v);
        }
        work.insert(work.end(), more.rbegin(), more.rend());
    }
    std::sort(out.begin(), out.end(), [](Component const & a, Component const & b) {
        if (a.zero_vars != b.zero_vars) return a.zero_vars.size() != b.zero_vars.size()
                                                   ? a.zero_vars.size() < b.zero_vars.size()
                                                   : a.zero_vars < b.zero_vars;
        if (a.nonzero_vars != b.nonzero_vars) return a.nonzero_vars < b.nonzero_vars;
        return lex_less(a.character, b.character);
    });
    return out;
}

bool member_sat(PlainBinomial const & b, Component const & c)
{
    bool plus_dies = involves(b.fplus, c.zero_vars);
    if (b.is_monomial()) return plus_dies;
    bool minus_dies = involves(b.fminus, c.zero_vars);
    if (plus_dies && minus_dies) return true;
    if (plus_dies || minus_dies) return false;
    std::size_t m = c.laurent_vars.size();
    LatVec sup(m);
    for (std::size_t i = 0; i < m; ++i) sup[i] = b.fplus[c.laurent_vars[i]] - b.fminus[c.laurent_vars[i]];
    if (sup.is_zero()) return b.constant->is_one();
    return member(normalize(std::move(sup), *b.constant), c.character);
}

}

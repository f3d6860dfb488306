#include "sbi/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sbi/errors.hpp"

namespace sbi {

/* {{{ LatVec */
bool LatVec::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](IntPoly const & p) { return p.is_zero(); });
}

long LatVec::degree() const
{
    long d = IntPoly::minus_infinity;
    for (auto const & p : e_) d = std::max(d, p.degree());
    return d;
}

LatVec & LatVec::operator+=(LatVec const & o)
{
    if (o.size() != size()) throw DimensionError("vector sizes differ");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

LatVec & LatVec::operator-=(LatVec const & o)
{
    if (o.size() != size()) throw DimensionError("vector sizes differ");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

LatVec & LatVec::operator*=(IntPoly const & s)
{
    for (auto & p : e_) p = p * s;
    return *this;
}

LatVec LatVec::operator-() const
{
    LatVec r = *this;
    for (auto & p : r.e_) p = -p;
    return r;
}

LatVec LatVec::shifted(std::size_t k) const
{
    LatVec r = *this;
    for (auto & p : r.e_) p = p.shifted(k);
    return r;
}

void LatVec::sub_mul_shift(LatVec const & o, mpz_class const & q, std::size_t k, std::size_t rows)
{
    for (std::size_t i = 0; i < rows; ++i) e_[i].sub_mul_shift(o.e_[i], q, k);
}

LatVec operator+(LatVec a, LatVec const & b) { return a += b; }
LatVec operator-(LatVec a, LatVec const & b) { return a -= b; }
LatVec operator*(IntPoly const & s, LatVec a) { return a *= s; }
/* }}} */

MonoTerm leading_term(LatVec const & v)
{
    for (std::size_t i = v.size(); i-- > 0;) {
        if (!v[i].is_zero())
            return {v[i].leading_coeff(), static_cast<std::size_t>(v[i].degree()), i};
    }
    throw ZeroVector("leading term of the zero vector");
}

int compare_terms(MonoTerm const & a, MonoTerm const & b)
{
    if (a.row != b.row) return a.row < b.row ? -1 : 1;
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    return mpz_cmpabs((a.coeff).get_mpz_t(), (b.coeff).get_mpz_t());
}

GhnfBasis GhnfBasis::from_columns(std::size_t n, std::vector<LatVec> cols)
{
    GhnfBasis b(n);
    std::vector<std::pair<MonoTerm, LatVec>> tmp;
    for (auto & c : cols) {
        if (c.size() != n) throw DimensionError("column has wrong dimension");
        if (c.is_zero()) continue;
        MonoTerm t = leading_term(c);
        tmp.emplace_back(std::move(t), std::move(c));
    }
    std::stable_sort(tmp.begin(), tmp.end(), [](auto const & a, auto const & b) {
        return compare_terms(a.first, b.first) < 0;
    });
    for (auto & [t, c] : tmp) {
        if (b.blocks_.empty() || b.blocks_.back().row != t.row)
            b.blocks_.push_back({t.row, b.cols_.size(), 0});
        b.blocks_.back().size++;
        b.lts_.push_back(std::move(t));
        b.cols_.push_back(std::move(c));
    }
    return b;
}

/* {{{ reduction engine */
namespace {

struct Reducer {
    std::size_t deg;
    mpz_class abs_lc;
    std::size_t index;
};

class ReducerIndex {
  public:
    explicit ReducerIndex(std::size_t n) : rows_(n) {}
    void add(MonoTerm const & t, std::size_t index)
    {
        rows_[t.row].push_back({t.deg, abs(t.coeff), index});
    }
    /* applicable reducer with smallest |lc|, ties to the smallest index */
    Reducer const * best(std::size_t row, std::size_t d, std::size_t skip) const
    {
        Reducer const * r = nullptr;
        for (auto const & c : rows_[row]) {
            if (c.deg > d || c.index == skip) continue;
            if (!r || c.abs_lc < r->abs_lc || (c.abs_lc == r->abs_lc && c.index < r->index)) r = &c;
        }
        return r;
    }
    bool row_empty(std::size_t row) const { return rows_[row].empty(); }

  private:
    std::vector<std::vector<Reducer>> rows_;
};

constexpr std::size_t no_skip = static_cast<std::size_t>(-1);

/* on_step(index, q, shift): v -= q x^shift reducer[index] was applied */
template <class Vecs, class LTs, class OnStep>
void reduce(LatVec & v, Vecs const & vecs, LTs const & lts, ReducerIndex const & idx, std::size_t skip,
            OnStep && on_step)
{
    for (std::size_t row = v.size(); row-- > 0;) {
        if (idx.row_empty(row)) continue;
        for (long d = v[row].degree(); d >= 0; --d) {
            mpz_class const & a = v[row].coeff(static_cast<std::size_t>(d));
            if (a == 0) continue;
            Reducer const * r = idx.best(row, static_cast<std::size_t>(d), skip);
            if (!r) continue;
            if (a >= 0 && a < r->abs_lc) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), r->abs_lc.get_mpz_t());
            if (sgn(lts[r->index].coeff) < 0) q = -q;
            std::size_t shift = static_cast<std::size_t>(d) - r->deg;
            v.sub_mul_shift(vecs[r->index], q, shift, row + 1);
            on_step(r->index, q, shift);
        }
    }
}

ReducerIndex index_of(GhnfBasis const & b)
{
    ReducerIndex idx(b.dim());
    for (std::size_t i = 0; i < b.size(); ++i) idx.add(b.leading(i), i);
    return idx;
}

struct LtView {
    GhnfBasis const & b;
    MonoTerm const & operator[](std::size_t i) const { return b.leading(i); }
};

}

LatVec grem(LatVec const & v, GhnfBasis const & basis)
{
    if (v.size() != basis.dim()) throw DimensionError("vector dimension differs from basis");
    LatVec r = v;
    reduce(r, basis.columns(), LtView{basis}, index_of(basis), no_skip, [](auto, auto const &, auto) {});
    return r;
}

Remainder grem_track(LatVec const & v, GhnfBasis const & basis)
{
    if (v.size() != basis.dim()) throw DimensionError("vector dimension differs from basis");
    Remainder out{v, std::vector<IntPoly>(basis.size())};
    reduce(out.r, basis.columns(), LtView{basis}, index_of(basis), no_skip,
           [&](std::size_t k, mpz_class const & q, std::size_t s) { out.q[k] += IntPoly::monomial(q, s); });
    return out;
}
/* }}} */

LatVec s_vector(LatVec const & f0, LatVec const & g0)
{
    if (f0.size() != g0.size()) throw DimensionError("vector sizes differ");
    MonoTerm tf = leading_term(f0), tg = leading_term(g0);
    if (tf.row != tg.row) return LatVec(f0.size());
    LatVec const * f = &f0;
    LatVec const * g = &g0;
    if (tg.deg > tf.deg) {
        std::swap(f, g);
        std::swap(tf, tg);
    }
    mpz_class const & a = tf.coeff;
    mpz_class const & b = tg.coeff;
    std::size_t k = tf.deg - tg.deg;
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        LatVec r = *f;
        r.sub_mul_shift(*g, mpz_class(a / b), k);
        return r;
    }
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        LatVec r = IntPoly(mpz_class(b / a)) * *f;
        r.sub_mul_shift(*g, 1, k);
        return r;
    }
    ExtGcd e = ext_gcd(a, b);
    LatVec r = IntPoly(e.u) * *f;
    r.sub_mul_shift(*g, -e.v, k);
    return r;
}

/* {{{ completion */
namespace {

struct Elem {
    LatVec v;
    std::vector<IntPoly> coef;
    MonoTerm lt;
};

/* Z-span of the shifts x^j g_k of degree at most D, as integer rows laid out
 * with the leading position first (row n-1 degree D first), in Hermite form.
 * With tracking each row carries its combination of the shifts. */
class Truncation {
  public:
    Truncation(std::vector<LatVec> const & gens, std::size_t n, std::size_t D, bool track)
        : gens_(gens), n_(n), w_(D + 1), track_(track)
    {
        std::size_t width = n * w_;
        if (track)
            for (auto const & g : gens) {
                offset_.push_back(width);
                width += w_ - static_cast<std::size_t>(g.degree());
            }
        width_ = width;
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (std::size_t j = 0; j + static_cast<std::size_t>(gens[k].degree()) <= D; ++j) {
                Row v(width_);
                LatVec g = gens[k].shifted(j);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t d = 0; d < w_; ++d) v[at(r, d)] = g[r].coeff(d);
                if (track) v[offset_[k] + j] = 1;
                insert(std::move(v));
            }
        hermite();
    }

    std::vector<Elem> elems() const
    {
        std::vector<Elem> out;
        for (auto const & [p, r] : rows_) {
            Elem e{LatVec(n_), {}, {}};
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t d = 0; d < w_; ++d) e.v[i].set_coeff(d, r[at(i, d)]);
            if (track_)
                for (std::size_t k = 0; k < gens_.size(); ++k) {
                    IntPoly c;
                    for (std::size_t j = 0; offset_[k] + j < end(k); ++j) c.set_coeff(j, r[offset_[k] + j]);
                    e.coef.push_back(std::move(c));
                }
            e.lt = leading_term(e.v);
            out.push_back(std::move(e));
        }
        return out;
    }

  private:
    using Row = std::vector<mpz_class>;

    std::size_t at(std::size_t r, std::size_t d) const { return (n_ - 1 - r) * w_ + (w_ - 1 - d); }
    std::size_t end(std::size_t k) const { return k + 1 < offset_.size() ? offset_[k + 1] : width_; }

    void insert(Row v)
    {
        std::size_t lim = n_ * w_;
        for (;;) {
            std::size_t p = 0;
            while (p < lim && v[p] == 0) ++p;
            if (p == lim) return;
            auto it = rows_.find(p);
            if (it == rows_.end()) {
                if (v[p] < 0)
                    for (auto & a : v) a = -a;
                rows_.emplace(p, std::move(v));
                hermite();
                return;
            }
            Row & r = it->second;
            if (mpz_divisible_p(v[p].get_mpz_t(), r[p].get_mpz_t())) {
                mpz_class q = v[p] / r[p];
                for (std::size_t i = p; i < width_; ++i) v[i] -= q * r[i];
                continue;
            }
            ExtGcd e = ext_gcd(r[p], v[p]);
            mpz_class a = r[p] / e.g, b = v[p] / e.g;
            for (std::size_t i = p; i < width_; ++i) {
                mpz_class x = e.u * r[i] + e.v * v[i];
                v[i] = b * r[i] - a * v[i];
                r[i] = std::move(x);
            }
        }
    }

    /* entries above each pivot into [0, pivot) */
    void hermite()
    {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            std::size_t p = it->first;
            for (auto jt = rows_.begin(); jt->first < p; ++jt) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), jt->second[p].get_mpz_t(), it->second[p].get_mpz_t());
                if (q != 0)
                    for (std::size_t i = p; i < width_; ++i) jt->second[i] -= q * it->second[i];
            }
        }
    }

    std::vector<LatVec> const & gens_;
    std::size_t n_, w_, width_ = 0;
    bool track_;
    std::vector<std::size_t> offset_;
    std::map<std::size_t, Row> rows_;
};

/* v strongly reduces to zero: every leading term is cancelled by a divisor */
bool reduces_to_zero(LatVec v, std::vector<Elem> const & basis)
{
    while (!v.is_zero()) {
        MonoTerm t = leading_term(v);
        Elem const * best = nullptr;
        for (auto const & e : basis)
            if (e.lt.row == t.row && e.lt.deg <= t.deg && mpz_divisible_p(t.coeff.get_mpz_t(), e.lt.coeff.get_mpz_t())) {
                best = &e;
                break;
            }
        if (!best) return false;
        v.sub_mul_shift(best->v, mpz_class(t.coeff / best->lt.coeff), t.deg - best->lt.deg);
    }
    return true;
}

/* lcm and gcd combinations of every pair reduce to zero, and so do the inputs */
bool is_strong_basis(std::vector<Elem> const & basis, std::vector<LatVec> const & gens)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            MonoTerm const & a = basis[i].lt;
            MonoTerm const & b = basis[j].lt;
            if (a.row != b.row) continue;
            std::size_t d = std::max(a.deg, b.deg);
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
            LatVec s = basis[i].v.shifted(d - a.deg);
            s *= IntPoly(mpz_class(l / a.coeff));
            s.sub_mul_shift(basis[j].v, mpz_class(l / b.coeff), d - b.deg);
            if (!reduces_to_zero(std::move(s), basis)) return false;
            if (mpz_divisible_p(a.coeff.get_mpz_t(), b.coeff.get_mpz_t())
                || mpz_divisible_p(b.coeff.get_mpz_t(), a.coeff.get_mpz_t()))
                continue;
            ExtGcd e = ext_gcd(a.coeff, b.coeff);
            LatVec g = basis[i].v.shifted(d - a.deg);
            g *= IntPoly(e.u);
            g.sub_mul_shift(basis[j].v, -e.v, d - b.deg);
            if (!reduces_to_zero(std::move(g), basis)) return false;
        }
    for (auto const & g : gens)
        if (!reduces_to_zero(g, basis)) return false;
    return true;
}

/* rows whose leading term no other row strictly divides */
std::vector<Elem> minimal_rows(std::vector<Elem> rows)
{
    std::vector<Elem> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < rows.size() && !dominated; ++j) {
            if (i == j) continue;
            MonoTerm const & a = rows[i].lt;
            MonoTerm const & b = rows[j].lt;
            dominated = b.row == a.row && b.deg <= a.deg && mpz_divisible_p(a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
        }
        if (!dominated) out.push_back(std::move(rows[i]));
    }
    return out;
}

TrackedGhnf complete(std::vector<LatVec> const & gens0, std::size_t n, bool track)
{
    for (auto const & g : gens0)
        if (g.size() != n) throw DimensionError("generator has wrong dimension");
    std::vector<LatVec> gens;
    std::vector<std::size_t> where;
    for (std::size_t k = 0; k < gens0.size(); ++k)
        if (!gens0[k].is_zero()) {
            gens.push_back(gens0[k]);
            where.push_back(k);
        }
    long md = 0;
    for (auto const & g : gens) md = std::max(md, g.degree());

    /* the truncations only grow, and once they contain a strong basis of
     * the lattice their minimal rows form one */
    std::vector<Elem> all;
    for (std::size_t D = static_cast<std::size_t>(md);; ++D) {
        all = minimal_rows(Truncation(gens, n, D, track).elems());
        if (is_strong_basis(all, gens)) break;
    }
    if (track)
        for (auto & e : all) {
            std::vector<IntPoly> full(gens0.size());
            for (std::size_t k = 0; k < where.size(); ++k) full[where[k]] = std::move(e.coef[k]);
            e.coef = std::move(full);
        }

    /* minimal strong basis: per row, keep strictly decreasing |lc| as the degree grows */
    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto const & ta = all[a].lt;
        auto const & tb = all[b].lt;
        if (int c = compare_terms(ta, tb)) return c < 0;
        return a < b;
    });
    std::vector<Elem> kept;
    for (std::size_t k = 0; k < order.size(); ++k) {
        Elem & e = all[order[k]];
        if (!kept.empty() && kept.back().lt.row == e.lt.row) {
            bool dominated = false;
            for (auto it = kept.rbegin(); it != kept.rend() && it->lt.row == e.lt.row; ++it)
                if (mpz_cmpabs((it->lt.coeff).get_mpz_t(), (e.lt.coeff).get_mpz_t()) <= 0) dominated = true;
            if (dominated) continue;
        }
        if (sgn(e.lt.coeff) < 0) {
            e.v = -e.v;
            e.lt.coeff = -e.lt.coeff;
            for (auto & p : e.coef) p = -p;
        }
        kept.push_back(std::move(e));
    }

    ReducerIndex idx(n);
    for (std::size_t i = 0; i < kept.size(); ++i) idx.add(kept[i].lt, i);
    struct KeptVecs {
        std::vector<Elem> const & k;
        LatVec const & operator[](std::size_t i) const { return k[i].v; }
    };
    struct KeptLts {
        std::vector<Elem> const & k;
        MonoTerm const & operator[](std::size_t i) const { return k[i].lt; }
    };
    for (std::size_t j = 0; j < kept.size(); ++j) {
        LatVec v = kept[j].v;
        std::vector<IntPoly> coef = kept[j].coef;
        reduce(v, KeptVecs{kept}, KeptLts{kept}, idx, j, [&](std::size_t k, mpz_class const & q, std::size_t s) {
            if (!track) return;
            for (std::size_t t = 0; t < coef.size(); ++t) coef[t].sub_mul_shift(kept[k].coef[t], q, s);
        });
        kept[j].v = std::move(v);
        kept[j].coef = std::move(coef);
    }

    TrackedGhnf out;
    std::vector<LatVec> cols;
    for (auto & e : kept) {
        cols.push_back(e.v);
        out.transform.push_back(std::move(e.coef));
    }
    out.basis = GhnfBasis::from_columns(n, std::move(cols));
    return out;
}

}

GhnfBasis ghnf(std::vector<LatVec> const & gens, std::size_t n)
{
    return complete(gens, n, false).basis;
}

TrackedGhnf ghnf_tracked(std::vector<LatVec> const & gens, std::size_t n)
{
    return complete(gens, n, true);
}
/* }}} */

std::vector<std::string> verify_ghnf(GhnfBasis const & b)
{
    std::vector<std::string> out;
    auto name = [](std::size_t i) { return "column " + std::to_string(i + 1); };
    for (auto const & blk : b.blocks()) {
        std::string where = "block at row " + std::to_string(blk.row + 1);
        for (std::size_t j = blk.first; j < blk.first + blk.size; ++j) {
            if (sgn(b.leading(j).coeff) <= 0) out.push_back(where + ": " + name(j) + " has a negative leading coefficient");
            if (j == blk.first) continue;
            MonoTerm const & prev = b.leading(j - 1);
            MonoTerm const & cur = b.leading(j);
            if (cur.deg <= prev.deg) out.push_back(where + ": degrees are not strictly increasing at " + name(j));
            if (!mpz_divisible_p(prev.coeff.get_mpz_t(), cur.coeff.get_mpz_t()))
                out.push_back(where + ": leading coefficient of " + name(j) + " does not divide its predecessor");
        }
        for (std::size_t j = blk.first; j < blk.first + blk.size; ++j)
            for (std::size_t k = j + 1; k < blk.first + blk.size; ++k)
                if (!grem(s_vector(b.column(j), b.column(k)), b).is_zero())
                    out.push_back(where + ": S-vector of " + name(j) + " and " + name(k) + " does not reduce to zero");
    }
    /* a position is reducible when some other applicable column has |c| <= |a| */
    for (std::size_t j = 0; j < b.size(); ++j) {
        LatVec const & v = b.column(j);
        bool bad = false;
        for (std::size_t row = 0; row < v.size() && !bad; ++row) {
            for (long d = 0; d <= v[row].degree() && !bad; ++d) {
                mpz_class const & a = v[row].coeff(static_cast<std::size_t>(d));
                if (a == 0) continue;
                for (std::size_t k = 0; k < b.size(); ++k) {
                    if (k == j) continue;
                    MonoTerm const & t = b.leading(k);
                    if (t.row == row && t.deg <= static_cast<std::size_t>(d) && mpz_cmpabs((a).get_mpz_t(), (t.coeff).get_mpz_t()) >= 0) bad = true;
                }
            }
        }
        if (bad) out.push_back(name(j) + " is not reduced with respect to the other columns");
    }
    return out;
}

std::vector<LatVec> syzygy_basis(GhnfBasis const & b)
{
    std::vector<LatVec> out;
    std::size_t t = b.size();
    for (auto const & blk : b.blocks()) {
        for (std::size_t i = blk.first; i < blk.first + blk.size; ++i) {
            for (std::size_t j = i + 1; j < blk.first + blk.size; ++j) {
                MonoTerm const & ti = b.leading(i);
                MonoTerm const & tj = b.leading(j);
                std::size_t d = std::max(ti.deg, tj.deg);
                mpz_class l;
                mpz_lcm(l.get_mpz_t(), ti.coeff.get_mpz_t(), tj.coeff.get_mpz_t());
                IntPoly mi = IntPoly::monomial(mpz_class(l / ti.coeff), d - ti.deg);
                IntPoly mj = IntPoly::monomial(mpz_class(-(l / tj.coeff)), d - tj.deg);
                LatVec s = mi * b.column(i) + mj * b.column(j);
                Remainder rem = grem_track(s, b);
                if (!rem.r.is_zero()) throw DegenerateInput("syzygy_basis needs a Groebner basis");
                LatVec x(t);
                for (std::size_t k = 0; k < t; ++k) x[k] = -rem.q[k];
                x[i] += mi;
                x[j] += mj;
                if (!x.is_zero()) out.push_back(std::move(x));
            }
        }
    }
    return out;
}

std::vector<LatVec> gker(std::vector<LatVec> const & cols, std::size_t n)
{
    std::size_t s = cols.size();
    TrackedGhnf tg = ghnf_tracked(cols, n);
    GhnfBasis const & g = tg.basis;
    std::vector<LatVec> out;
    auto push = [&](LatVec v) {
        if (v.is_zero()) return;
        if (std::find(out.begin(), out.end(), v) != out.end()) return;
        out.push_back(std::move(v));
    };
    for (auto const & x : syzygy_basis(g)) {
        LatVec y(s);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t k = 0; k < s; ++k) y[k] += x[i] * tg.transform[i][k];
        push(std::move(y));
    }
    for (std::size_t k = 0; k < s; ++k) {
        Remainder rem = grem_track(cols[k], g);
        LatVec y(s);
        y[k] = 1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (rem.q[i].is_zero()) continue;
            for (std::size_t t = 0; t < s; ++t) y[t] -= rem.q[i] * tg.transform[i][t];
        }
        push(std::move(y));
    }
    return out;
}

CEnumeration enumerate_c(GhnfBasis const & b, std::size_t bound)
{
    CEnumeration out;
    for (auto const & blk : b.blocks()) {
        std::size_t last = blk.first + blk.size - 1;
        for (std::size_t j = blk.first; j < last; ++j) {
            std::size_t gap = b.leading(j + 1).deg - b.leading(j).deg;
            for (std::size_t t = 0; t < gap; ++t) {
                LatVec v = b.column(j).shifted(t);
                if (t <= bound) out.c_inf_prefix.push_back(v);
                out.c_minus.push_back(std::move(v));
            }
        }
        for (std::size_t t = 0; t <= bound; ++t) out.c_inf_prefix.push_back(b.column(last).shifted(t));
    }
    return out;
}

bool contains(GhnfBasis const & basis, LatVec const & v)
{
    return grem(v, basis).is_zero();
}

bool lattice_equal(GhnfBasis const & a, GhnfBasis const & b)
{
    if (a.dim() != b.dim()) return false;
    return ghnf(a.columns(), a.dim()) == ghnf(b.columns(), b.dim());
}

}

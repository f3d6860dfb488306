#include "sbi/pid_linalg.hpp"

#include <map>

#include "sbi/errors.hpp"

namespace sbi {

std::vector<mpz_class> IntMat::column(std::size_t j) const
{
    std::vector<mpz_class> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
}

/* {{{ over Z */
namespace {
/* (ci, cj) <- (u ci + v cj, s ci + t cj) */
void mix(IntMat & m, std::size_t i, std::size_t j, mpz_class const & u, mpz_class const & v, mpz_class const & s,
         mpz_class const & t)
{
    for (std::size_t r = 0; r < m.rows; ++r) {
        mpz_class a = m(r, i), b = m(r, j);
        m(r, i) = u * a + v * b;
        m(r, j) = s * a + t * b;
    }
}
void addmul_col(IntMat & m, std::size_t dst, std::size_t src, mpz_class const & q)
{
    for (std::size_t r = 0; r < m.rows; ++r) m(r, dst) += q * m(r, src);
}
}

IntHnf hnf_int(IntMat const & f)
{
    IntHnf out{f, IntMat(f.cols, f.cols), 0};
    for (std::size_t i = 0; i < f.cols; ++i) out.u(i, i) = 1;
    IntMat & h = out.h;
    std::size_t col = 0;
    for (std::size_t row = 0; row < h.rows && col < h.cols; ++row) {
        for (std::size_t j = col + 1; j < h.cols; ++j) {
            if (h(row, j) == 0) continue;
            mpz_class a = h(row, col), b = h(row, j);
            ExtGcd e = ext_gcd(a, b);
            mpz_class s = -b / e.g, t = a / e.g;
            mix(h, col, j, e.u, e.v, s, t);
            mix(out.u, col, j, e.u, e.v, s, t);
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) {
            addmul_col(h, col, col, -2);
            addmul_col(out.u, col, col, -2);
        }
        for (std::size_t k = 0; k < col; ++k) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(row, k).get_mpz_t(), h(row, col).get_mpz_t());
            if (q == 0) continue;
            addmul_col(h, k, col, -q);
            addmul_col(out.u, k, col, -q);
        }
        ++col;
    }
    out.rank = col;
    return out;
}

std::vector<std::vector<mpz_class>> ker_int(IntMat const & f)
{
    IntHnf r = hnf_int(f);
    std::vector<std::vector<mpz_class>> out;
    for (std::size_t j = r.rank; j < f.cols; ++j) out.push_back(r.u.column(j));
    return out;
}
/* }}} */

/* {{{ over Z_p[x] */
namespace {
void check(ModMat const & m, std::size_t n, std::uint64_t p)
{
    for (auto const & c : m) {
        if (c.size() != n) throw DimensionError("column has wrong dimension");
        for (auto const & e : c)
            if (e.modulus() != p) throw DegenerateInput("mixed moduli");
    }
}

ModCol zero_col(std::size_t n, std::uint64_t p) { return ModCol(n, ModPoly(p)); }

void mix(ModCol & ci, ModCol & cj, ModPoly const & u, ModPoly const & v, ModPoly const & s, ModPoly const & t)
{
    for (std::size_t r = 0; r < ci.size(); ++r) {
        ModPoly a = ci[r], b = cj[r];
        ci[r] = u * a + v * b;
        cj[r] = s * a + t * b;
    }
}

void sub_mul(ModCol & dst, ModCol const & src, ModPoly const & q)
{
    for (std::size_t r = 0; r < dst.size(); ++r) dst[r] -= q * src[r];
}

struct Elim {
    ModHnf hnf;
    ModMat kernel;
};

Elim eliminate(ModMat const & m, std::size_t n, std::uint64_t p)
{
    check(m, n, p);
    std::size_t s = m.size();
    ModMat cols = m, t(s, zero_col(s, p));
    for (std::size_t j = 0; j < s; ++j) t[j][j] = ModPoly::constant(p, 1);
    std::vector<std::size_t> active(s);
    for (std::size_t j = 0; j < s; ++j) active[j] = j;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; /* (row, column) */
    for (std::size_t row = n; row-- > 0;) {
        std::size_t piv = s;
        for (std::size_t j : active) {
            if (cols[j][row].is_zero()) continue;
            if (piv == s) {
                piv = j;
                continue;
            }
            ModGcd g = ext_gcd(cols[piv][row], cols[j][row]);
            ModPoly sa = -divrem(cols[j][row], g.g).q;
            ModPoly ta = divrem(cols[piv][row], g.g).q;
            mix(cols[piv], cols[j], g.u, g.v, sa, ta);
            mix(t[piv], t[j], g.u, g.v, sa, ta);
        }
        if (piv == s) continue;
        std::uint64_t inv = inv_mod(cols[piv][row].leading_coeff(), p);
        for (auto & e : cols[piv]) e *= inv;
        for (auto & e : t[piv]) e *= inv;
        pivots.emplace_back(row, piv);
        std::erase(active, piv);
    }
    /* pivots were found from the bottom row up; reduce in that order */
    for (std::size_t a = 0; a < pivots.size(); ++a) {
        auto [row, k] = pivots[a];
        for (std::size_t b = 0; b < a; ++b) {
            std::size_t j = pivots[b].second;
            ModPoly q = divrem(cols[j][row], cols[k][row]).q;
            if (q.is_zero()) continue;
            sub_mul(cols[j], cols[k], q);
            sub_mul(t[j], t[k], q);
        }
    }
    Elim out;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        out.hnf.b.push_back(cols[it->second]);
        out.hnf.t.push_back(t[it->second]);
        out.hnf.pivot_rows.push_back(it->first);
    }
    for (std::size_t j : active) out.kernel.push_back(t[j]);
    return out;
}
}

ModHnf hnf_modpoly(ModMat const & m, std::size_t n, std::uint64_t p)
{
    return eliminate(m, n, p).hnf;
}

ModMat ker_modpoly(ModMat const & m, std::size_t n, std::uint64_t p)
{
    return eliminate(m, n, p).kernel;
}

ModRemainder reduce_modpoly(ModCol const & v, ModHnf const & h)
{
    ModRemainder out{v, {}};
    std::uint64_t p = v.empty() ? 2 : v[0].modulus();
    out.a.assign(h.b.size(), ModPoly(p));
    for (std::size_t k = h.b.size(); k-- > 0;) {
        std::size_t row = h.pivot_rows[k];
        ModPoly q = divrem(out.r[row], h.b[k][row]).q;
        if (q.is_zero()) continue;
        sub_mul(out.r, h.b[k], q);
        out.a[k] -= q;
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> scalar_kernel(ModMat const & e, std::size_t n, std::uint64_t p)
{
    check(e, n, p);
    std::size_t l = e.size();
    ModMat s = e;
    std::vector<std::vector<std::uint64_t>> u(l, std::vector<std::uint64_t>(l, 0));
    for (std::size_t i = 0; i < l; ++i) u[i][i] = 1;
    auto position = [&](ModCol const & c) -> std::pair<long, long> {
        for (std::size_t r = c.size(); r-- > 0;)
            if (!c[r].is_zero()) return {static_cast<long>(r), c[r].degree()};
        return {-1, -1};
    };
    std::map<std::pair<long, long>, std::size_t> owner;
    for (std::size_t i = 0; i < l; ++i) {
        for (;;) {
            auto pos = position(s[i]);
            if (pos.first < 0) break;
            auto it = owner.find(pos);
            if (it == owner.end()) {
                owner.emplace(pos, i);
                break;
            }
            std::size_t k = it->second;
            std::uint64_t lk = s[k][pos.first].leading_coeff();
            std::uint64_t li = s[i][pos.first].leading_coeff();
            std::uint64_t c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(li) * inv_mod(lk, p) % p);
            for (std::size_t r = 0; r < n; ++r) s[i][r] -= s[k][r] * c;
            for (std::size_t r = 0; r < l; ++r) {
                unsigned __int128 sub = static_cast<unsigned __int128>(u[k][r]) * c % p;
                u[i][r] = static_cast<std::uint64_t>((u[i][r] + p - static_cast<std::uint64_t>(sub)) % p);
            }
        }
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t i = 0; i < l; ++i)
        if (position(s[i]).first < 0) out.push_back(u[i]);
    return out;
}
/* }}} */

}

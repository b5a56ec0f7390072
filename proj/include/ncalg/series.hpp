#ifndef NCALG_SERIES_HPP
#define NCALG_SERIES_HPP

// Exact series arithmetic: truncated integer power series, rational series
// with Fatou-normalized integer numerator and denominator, certified minimal
// rational reconstruction from a coefficient window, Veronese sections, and
// the small bigraded (homological x internal degree) tables used by the
// Poincare-series identities.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncalg {

// dense integer polynomials in z, trimmed so back() != 0 (empty = zero)
using ZPoly = std::vector<mpz_class>;

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int zp_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

inline ZPoly zp_scale(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// exact quotient a / b over Z[z]; throws when the division leaves a remainder
// or forces a non-integer coefficient (fraction-free elimination relies on it)
inline ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::invalid_argument("zp_divexact: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("zp_divexact: inexact division");
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class& top = rem[i + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
            throw std::logic_error("zp_divexact: inexact division");
        mpz_class c = top / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    zp_trim(rem);
    if (!rem.empty()) throw std::logic_error("zp_divexact: inexact division");
    zp_trim(q);
    return q;
}

// "1 - 2*z + z^3" style, matching how presentations print polynomials
inline std::string zp_text(const ZPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        mpz_class a = abs(p[i]);
        std::string mono;
        if (i == 0) mono = a.get_str();
        else {
            if (a != 1) mono = a.get_str() + "*";
            mono += "z";
            if (i > 1) mono += "^" + std::to_string(i);
        }
        if (out.empty()) out = (p[i] < 0 ? "-" : "") + mono;
        else out += (p[i] < 0 ? " - " : " + ") + mono;
    }
    return out;
}

struct TruncatedSeries {
    std::vector<mpz_class> c;  // c[0..bound]
    int bound = -1;

    static TruncatedSeries zero(int D) {
        TruncatedSeries s;
        s.bound = D;
        s.c.assign(static_cast<std::size_t>(D) + 1, 0);
        return s;
    }
    const mpz_class& at(int i) const { return c[static_cast<std::size_t>(i)]; }
    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const TruncatedSeries&) const = default;

    std::string text() const {
        std::string out;
        for (int i = 0; i <= bound; ++i) {
            if (i) out += ",";
            out += c[static_cast<std::size_t>(i)].get_str();
        }
        return out;
    }
};

inline TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.bound != b.bound) throw std::invalid_argument("series bounds differ");
    TruncatedSeries r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

inline TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b, int bound) {
    TruncatedSeries r = TruncatedSeries::zero(bound);
    for (int i = 0; i <= std::min(bound, a.bound); ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; j <= std::min(bound - i, b.bound); ++j)
            r.c[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return r;
}

struct RationalSeries {
    ZPoly num;
    ZPoly den;  // constant term 1, coprime with num

    bool operator==(const RationalSeries&) const = default;

    // Taylor coefficients 0..D; exact because den[0] = 1
    TruncatedSeries expand(int D) const {
        if (den.empty() || den[0] != 1) throw std::logic_error("denominator not normalized");
        TruncatedSeries s = TruncatedSeries::zero(D);
        for (int k = 0; k <= D; ++k) {
            mpz_class v = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : 0;
            for (int j = 1; j <= std::min<int>(k, zp_degree(den)); ++j)
                v -= den[static_cast<std::size_t>(j)] * s.c[static_cast<std::size_t>(k - j)];
            s.c[static_cast<std::size_t>(k)] = v;
        }
        return s;
    }

    std::string text() const { return "(" + zp_text(num) + ") / (" + zp_text(den) + ")"; }
};

// ---------------------------------------------------------------------------
// Minimal rational reconstruction. Finds the least denominator degree, then
// the least numerator degree, such that num/den matches every coefficient of
// the window. The caller guarantees (from structure: transfer-matrix walks,
// sections of such, ...) that a true global recurrence exists within the
// caps; matching the whole window of length num_cap + 2*den_cap + 1 then
// certifies global equality, since two solutions of a common recurrence of
// degree <= 2*den_cap agreeing on that long a prefix agree everywhere.

namespace detail {

// exact rational elimination for the small dense systems below
inline bool solve_dense(std::vector<std::vector<mpq_class>> M, std::vector<mpq_class>& sol,
                        std::size_t nvars) {
    std::size_t rows = M.size();
    std::vector<std::size_t> where(nvars, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t col = 0; col < nvars && r < rows; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t i = r; i < rows; ++i)
            if (M[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(M[r], M[piv]);
        mpq_class inv = 1 / M[r][col];
        for (auto& x : M[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][col] == 0) continue;
            mpq_class f = M[i][col];
            for (std::size_t j = col; j <= nvars; ++j) M[i][j] -= f * M[r][j];
        }
        where[col] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (M[i][nvars] != 0) return false;  // inconsistent
    sol.assign(nvars, 0);
    for (std::size_t col = 0; col < nvars; ++col)
        if (where[col] != SIZE_MAX) sol[col] = M[where[col]][nvars];
    return true;
}

}  // namespace detail

inline std::optional<RationalSeries> reconstruct_rational(const TruncatedSeries& S, int den_cap,
                                                          int num_cap) {
    auto coeff = [&](int k) -> const mpz_class& {
        static const mpz_class zero = 0;
        return k <= S.bound && k >= 0 ? S.at(k) : zero;
    };
    for (int dq = 0; dq <= den_cap; ++dq) {
        for (int dp = 0; dp <= num_cap; ++dp) {
            if (dp + dq + 1 > S.bound + 1) break;  // not enough window to certify
            // unknowns q_1..q_dq with q_0 = 1: sum_j q_j s_{k-j} = 0 for k > dp
            std::vector<std::vector<mpq_class>> M;
            for (int k = dp + 1; k <= S.bound; ++k) {
                std::vector<mpq_class> row(static_cast<std::size_t>(dq) + 1, 0);
                for (int j = 1; j <= dq; ++j) row[static_cast<std::size_t>(j - 1)] = coeff(k - j);
                row[static_cast<std::size_t>(dq)] = -mpq_class(coeff(k));
                M.push_back(std::move(row));
            }
            std::vector<mpq_class> q;
            if (!detail::solve_dense(std::move(M), q, static_cast<std::size_t>(dq))) continue;
            // integer denominator: clear the lcm of the q_j
            mpz_class L = 1;
            for (auto& x : q) {
                x.canonicalize();
                L = lcm(L, x.get_den());
            }
            ZPoly Q(static_cast<std::size_t>(dq) + 1);
            Q[0] = L;
            for (int j = 1; j <= dq; ++j) {
                mpq_class scaled = q[static_cast<std::size_t>(j - 1)] * L;
                Q[static_cast<std::size_t>(j)] = scaled.get_num();
            }
            zp_trim(Q);
            // numerator = truncation of S * Q at dp, then verify the window
            ZPoly P(static_cast<std::size_t>(dp) + 1, 0);
            for (int k = 0; k <= dp; ++k)
                for (int j = 0; j <= std::min(k, zp_degree(Q)); ++j)
                    P[static_cast<std::size_t>(k)] += Q[static_cast<std::size_t>(j)] * coeff(k - j);
            zp_trim(P);
            // primitive form; minimality forces den(0) = +-1 (Fatou)
            mpz_class g = abs(Q.empty() ? mpz_class(0) : Q[0]);
            for (const auto& x : Q) g = gcd(g, x);
            for (const auto& x : P) g = gcd(g, x);
            if (g > 1) {
                for (auto& x : Q) x /= g;
                for (auto& x : P) x /= g;
            }
            if (Q.empty() || abs(Q[0]) != 1)
                throw std::logic_error("reconstruction: integer series with non-unit denominator");
            if (Q[0] == -1) {
                for (auto& x : Q) x = -x;
                for (auto& x : P) x = -x;
            }
            RationalSeries R{P, Q};
            if (R.expand(S.bound).c == S.c) return R;
        }
    }
    return std::nullopt;
}

// every n-th coefficient of a truncated series
inline TruncatedSeries veronese_series(const TruncatedSeries& S, int n) {
    if (n < 1) throw std::invalid_argument("veronese: n must be positive");
    TruncatedSeries out = TruncatedSeries::zero(S.bound / n);
    for (int i = 0; i <= out.bound; ++i) out.c[static_cast<std::size_t>(i)] = S.at(i * n);
    return out;
}

// Rational section: the subseries of every n-th coefficient is again rational
// with denominator degree at most deg(den) (its roots are n-th powers), so a
// reconstruction within those caps is certified by a long enough window.
inline RationalSeries veronese_series(const RationalSeries& S, int n) {
    if (n < 1) throw std::invalid_argument("veronese: n must be positive");
    if (n == 1) return S;
    int den_cap = zp_degree(S.den);
    if (den_cap < 0) throw std::logic_error("veronese: zero denominator");
    int num_cap = std::max(zp_degree(S.num), den_cap) / n + den_cap + 1;
    int window = num_cap + 2 * den_cap + 5;
    TruncatedSeries big = S.expand(window * n);
    auto got = reconstruct_rational(veronese_series(big, n), den_cap, num_cap);
    if (!got) throw std::logic_error("veronese: section did not reconstruct within caps");
    return *got;
}

// ---------------------------------------------------------------------------
// Bigraded tables P(s, t) = sum c[i][j] s^i t^j, truncated in both variables.

struct BiSeries {
    std::vector<std::vector<mpz_class>> c;  // [homological s][internal t]
    int s_bound = 0;
    int t_bound = 0;

    static BiSeries zero(int sb, int tb) {
        BiSeries r;
        r.s_bound = sb;
        r.t_bound = tb;
        r.c.assign(static_cast<std::size_t>(sb) + 1,
                   std::vector<mpz_class>(static_cast<std::size_t>(tb) + 1, 0));
        return r;
    }
    static BiSeries one(int sb, int tb) {
        BiSeries r = zero(sb, tb);
        r.c[0][0] = 1;
        return r;
    }
    mpz_class& at(int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const mpz_class& at(int i, int j) const {
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    bool is_zero() const {
        for (const auto& row : c)
            for (const auto& x : row)
                if (x != 0) return false;
        return true;
    }
};

inline BiSeries bs_mul(const BiSeries& a, const BiSeries& b) {
    BiSeries r = BiSeries::zero(a.s_bound, a.t_bound);
    for (int i = 0; i <= a.s_bound; ++i)
        for (int j = 0; j <= a.t_bound; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k <= b.s_bound && i + k <= r.s_bound; ++k)
                for (int l = 0; l <= b.t_bound && j + l <= r.t_bound; ++l)
                    r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
        }
    return r;
}

inline BiSeries bs_sub(const BiSeries& a, const BiSeries& b) {
    BiSeries r = a;
    for (int i = 0; i <= r.s_bound; ++i)
        for (int j = 0; j <= r.t_bound; ++j) r.at(i, j) -= b.at(i, j);
    return r;
}

// 1 / (1 - x) for a table with x(0,0) = 0, truncated
inline BiSeries bs_geometric_inverse(const BiSeries& x) {
    if (x.at(0, 0) != 0) throw std::invalid_argument("geometric inverse needs zero constant term");
    BiSeries r = BiSeries::one(x.s_bound, x.t_bound);
    BiSeries pow = BiSeries::one(x.s_bound, x.t_bound);
    // x has no constant term, so powers beyond the truncation vanish
    for (int k = 1; k <= x.s_bound + x.t_bound; ++k) {
        pow = bs_mul(pow, x);
        if (pow.is_zero()) break;
        for (int i = 0; i <= r.s_bound; ++i)
            for (int j = 0; j <= r.t_bound; ++j) r.at(i, j) += pow.at(i, j);
    }
    return r;
}

}  // namespace ncalg

#endif

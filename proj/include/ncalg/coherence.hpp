#ifndef NCALG_COHERENCE_HPP
#define NCALG_COHERENCE_HPP

// Coherent families of right ideals and what they buy: degree-certified
// verification of a family file, the linear system that turns witnesses into
// rational Hilbert series, r-processing certificates for rewriting against a
// finite basis, exhaustive identity checks for a claimed r, a sampling probe
// for the syzygy-degree bound m1(I) <= m(I) + 2r, the census of quadratic
// monomial algebras on n letters, and automatic family discovery by peeling
// generators off monomial ideals.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "parse.hpp"
#include "syzygy.hpp"

namespace ncalg {

// ---------------------------------------------------------------------------
// Family verification. Every check is degree-truncated at D: "equal" means
// "equal in all graded pieces through D", which is exactly what the right
// Groebner bases underneath can certify.

struct FamilyIdealCheck {
    std::string name;
    int m = -1;  // top minimal-generator degree, -1 for the zero ideal
    bool is_zero = false;
    bool has_witness = false;
    bool passed = true;
    std::string failure;  // first failed condition for this member
    int offending_degree = -1;
};

struct FamilyVerdict {
    bool verified = false;
    int family_degree = 0;  // max of member m(I) and witness degrees
    int bound = 0;          // D: all identities certified through here
    std::string first_failure;
    int offending_degree = -1;
    std::vector<FamilyIdealCheck> checks;  // one per member, file order
};

namespace detail {

template <class K>
struct FamilyMemberData {
    const typename FamilySpec<K>::Member* spec = nullptr;
    IdealSlice<K> min;                       // minimized generators at D
    GroebnerBasis<K> rgb;                    // right basis of the member
    std::vector<mpz_class> dims;             // R/I dimensions 0..D
    int witness = -1;                        // index into F.witnesses
    Polynomial<K> x;                         // witness element, reduced
};

template <class K>
struct FamilyAnalysis {
    FamilyVerdict verdict;
    std::vector<FamilyMemberData<K>> members;
    int zero_member = -1;  // index of the zero ideal
    int aug_member = -1;   // index of the augmentation ideal (R/I = k)
};

// first degree where two dimension vectors disagree, -1 if equal
inline int first_dim_mismatch(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return static_cast<int>(i);
    return -1;
}

template <class K>
FamilyAnalysis<K> analyze_family(const FamilySpec<K>& F, const GroebnerBasis<K>& ambient,
                                 int D) {
    if (ambient.kind != BasisKind::two_sided)
        throw std::invalid_argument("verify_coherent_family: need a two-sided ambient basis");
    const Presentation<K>& P = ambient.pres();
    FamilyAnalysis<K> A;
    FamilyVerdict& V = A.verdict;
    V.bound = D;

    auto fail = [&](FamilyIdealCheck& c, const std::string& why, int deg) {
        if (!c.passed) return;  // keep the first failed condition per member
        c.passed = false;
        c.failure = why;
        c.offending_degree = deg;
        if (V.first_failure.empty()) {
            V.first_failure = c.name + ": " + why;
            V.offending_degree = deg;
        }
    };

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < F.members.size(); ++i) index[F.members[i].name] = i;

    // member data: minimized slice, right basis, quotient dimensions
    int maxdeg = 0;
    for (const auto& mem : F.members) {
        FamilyMemberData<K> d;
        d.spec = &mem;
        d.min = detail::minimized_slice(P, ambient, mem.gens, D);
        if (d.min.max_degree() > maxdeg) maxdeg = d.min.max_degree();
        A.members.push_back(std::move(d));
    }
    for (std::size_t wi = 0; wi < F.witnesses.size(); ++wi) {
        Polynomial<K> nfx = normal_form(F.witnesses[wi].x, ambient);
        if (nfx.degree() > maxdeg) maxdeg = nfx.degree();
    }
    V.family_degree = maxdeg;
    if (!ambient.complete_flag && ambient.soundness_degree < D + maxdeg)
        throw SoundnessError("verify_coherent_family: colon checks need the ambient basis sound to " +
                             std::to_string(D + maxdeg) + ", have " +
                             std::to_string(ambient.soundness_degree));
    for (std::size_t i = 0; i < A.members.size(); ++i) {
        auto& d = A.members[i];
        d.rgb = complete_right(P, d.min.gens, D, ambient);
        d.dims = module_quotient_dims(d.rgb, D);
        FamilyIdealCheck c;
        c.name = d.spec->name;
        c.m = d.min.max_degree();
        c.is_zero = d.min.gens.empty();
        V.checks.push_back(std::move(c));
        if (d.min.gens.empty() && A.zero_member < 0) A.zero_member = static_cast<int>(i);
        bool aug = d.dims.size() >= 1 && d.dims[0] == 1;
        for (std::size_t e = 1; e < d.dims.size() && aug; ++e) aug = (d.dims[e] == 0);
        if (aug && A.aug_member < 0) A.aug_member = static_cast<int>(i);
    }

    // structural requirements on the family as a whole
    if (A.zero_member < 0) {
        V.first_failure = "family lacks the zero ideal";
        V.offending_degree = -1;
    } else if (A.aug_member < 0 && V.first_failure.empty()) {
        V.first_failure = "family lacks the augmentation ideal";
        V.offending_degree = -1;
    }

    // witness bookkeeping: exactly one per nonzero member, none on zero ideals
    for (std::size_t wi = 0; wi < F.witnesses.size(); ++wi) {
        const auto& w = F.witnesses[wi];
        std::size_t mi = index.at(w.member);  // parse guarantees resolution
        auto& c = V.checks[mi];
        if (c.has_witness) {
            fail(c, "more than one witness", -1);
            continue;
        }
        c.has_witness = true;
        A.members[mi].witness = static_cast<int>(wi);
    }
    for (std::size_t i = 0; i < A.members.size(); ++i) {
        auto& c = V.checks[i];
        if (c.is_zero && c.has_witness) fail(c, "the zero ideal carries a witness", -1);
        if (!c.is_zero && !c.has_witness) fail(c, "nonzero member lacks a witness", c.m);
    }

    // per-witness identities
    for (std::size_t i = 0; i < A.members.size(); ++i) {
        auto& d = A.members[i];
        auto& c = V.checks[i];
        if (d.witness < 0 || !c.passed) continue;
        const auto& w = F.witnesses[static_cast<std::size_t>(d.witness)];
        d.x = normal_form(w.x, ambient);
        if (d.x.is_zero()) {
            fail(c, "witness element reduces to zero", w.x.degree());
            continue;
        }
        if (!is_homogeneous(d.x)) {
            fail(c, "witness element is inhomogeneous", d.x.degree());
            continue;
        }
        int cdeg = d.x.degree();
        const auto& J = A.members[index.at(w.J)];
        const auto& N = A.members[index.at(w.N)];

        if (!right_ideal_membership(d.x, d.rgb)) {
            fail(c, "witness element is not in the member", cdeg);
            continue;
        }
        // I = J + xR through degree D
        std::vector<Polynomial<K>> jx = J.min.gens;
        jx.push_back(d.x);
        GroebnerBasis<K> rgb_jx = complete_right(P, jx, D, ambient);
        std::vector<mpz_class> dims_jx = module_quotient_dims(rgb_jx, D);
        int mis = first_dim_mismatch(d.dims, dims_jx);
        if (mis >= 0) {
            fail(c, "member differs from J + x*R", mis);
            continue;
        }
        if (J.min.max_degree() > d.min.max_degree()) {
            fail(c, "m(J) exceeds m(I)", J.min.max_degree());
            continue;
        }
        // (x : J) = N through degree D: equal quotient dimensions plus
        // two-sided generator containment
        IdealSlice<K> colon = colon_ideal(ambient, d.x, J.min.gens, D);
        GroebnerBasis<K> rgb_colon = complete_right(P, colon.gens, D, ambient);
        std::vector<mpz_class> dims_colon = module_quotient_dims(rgb_colon, D);
        mis = first_dim_mismatch(dims_colon, N.dims);
        if (mis >= 0) {
            fail(c, "the colon ideal (x : J) differs from N", mis);
            continue;
        }
        bool contained = true;
        for (const auto& g : colon.gens) {
            if (!right_ideal_membership(g, N.rgb)) {
                fail(c, "colon generator outside N", g.degree());
                contained = false;
                break;
            }
        }
        if (!contained) continue;
        for (const auto& g : N.min.gens) {
            if (!right_ideal_membership(g, rgb_colon)) {
                fail(c, "N generator outside the colon ideal", g.degree());
                contained = false;
                break;
            }
        }
        if (!contained) continue;
    }

    bool all = V.first_failure.empty();
    for (const auto& c : V.checks) all = all && c.passed;
    V.verified = all;
    return A;
}

}  // namespace detail

template <class K>
FamilyVerdict verify_coherent_family(const FamilySpec<K>& F, const GroebnerBasis<K>& ambient,
                                     int D) {
    return detail::analyze_family(F, ambient, D).verdict;
}

// ---------------------------------------------------------------------------
// Rational series from a verified family. One unknown per nonzero member plus
// one for the algebra itself; each witness (x, J, N) for a member I yields
//     I(z) - J(z) + z^deg(x) N(z) - z^deg(x) R(z) = 0
// (the exact sequence splitting I as J + xR with relation ideal N), and the
// augmentation ideal closes the system via R(z) - Aug(z) = 1. The system is
// solved exactly by fraction-free elimination over Z[z].

namespace detail {

// Bareiss determinant of a polynomial matrix; pivots on the lowest row with a
// nonzero entry, so the result is exact and division-free in effect.
inline ZPoly zp_det_bareiss(std::vector<std::vector<ZPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return ZPoly{1};
    int sign = 1;
    ZPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].empty()) ++piv;
        if (piv == n) return {};  // singular
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ZPoly t = zp_sub(zp_mul(m[k][k], m[i][j]), zp_mul(m[i][k], m[k][j]));
                m[i][j] = zp_divexact(t, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    ZPoly det = m[n - 1][n - 1];
    if (sign < 0) det = zp_scale(det, -1);
    return det;
}

}  // namespace detail

struct RationalFamilySolve {
    std::vector<std::string> unknowns;       // nonzero member names, then "R"
    std::vector<std::vector<ZPoly>> matrix;  // (s+1) x (s+1) over Z[z]
    std::vector<ZPoly> rhs;
    ZPoly det;
    std::vector<ZPoly> cofactors;        // Cramer numerators, one per unknown
    std::vector<RationalSeries> series;  // certified minimal forms, same order
    RationalSeries R;                    // series of the algebra itself
    int family_degree = 0;               // d
    int unknown_count = 0;               // s = number of nonzero members
    int verified_to = 0;                 // R(z) cross-checked against dimensions
};

template <class K>
RationalFamilySolve rational_series_from_family(const FamilySpec<K>& F,
                                                const GroebnerBasis<K>& ambient, int D) {
    detail::FamilyAnalysis<K> A = detail::analyze_family(F, ambient, D);
    if (!A.verdict.verified)
        throw std::invalid_argument("rational_series_from_family: family rejected: " +
                                    A.verdict.first_failure);
    const Presentation<K>& P = ambient.pres();

    RationalFamilySolve out;
    out.family_degree = A.verdict.family_degree;

    // columns: nonzero members in file order, then R
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < A.members.size(); ++i) {
        if (A.members[i].min.gens.empty()) continue;
        col[A.members[i].spec->name] = out.unknowns.size();
        out.unknowns.push_back(A.members[i].spec->name);
    }
    std::size_t s = out.unknowns.size();
    out.unknown_count = static_cast<int>(s);
    out.unknowns.push_back("R");

    // the J-pointers must not loop, otherwise the triangular structure that
    // makes the system uniquely solvable is gone
    for (std::size_t i = 0; i < A.members.size(); ++i) {
        std::size_t cur = i, steps = 0;
        while (A.members[cur].witness >= 0) {
            const auto& w = F.witnesses[static_cast<std::size_t>(A.members[cur].witness)];
            std::size_t nxt = 0;
            for (; nxt < A.members.size(); ++nxt)
                if (A.members[nxt].spec->name == w.J) break;
            if (nxt == A.members.size() || A.members[nxt].min.gens.empty()) break;
            cur = nxt;
            if (++steps > A.members.size())
                throw std::invalid_argument("rational_series_from_family: witness cycle detected");
        }
    }

    std::size_t n = s + 1;
    out.matrix.assign(n, std::vector<ZPoly>(n));
    out.rhs.assign(n, {});
    std::size_t row = 0;
    for (const auto& d : A.members) {
        if (d.min.gens.empty()) continue;
        const auto& w = F.witnesses[static_cast<std::size_t>(d.witness)];
        int cdeg = d.x.degree();
        ZPoly zc(static_cast<std::size_t>(cdeg) + 1, 0);
        zc.back() = 1;
        auto& r = out.matrix[row];
        r[col.at(d.spec->name)] = zp_add(r[col.at(d.spec->name)], ZPoly{1});
        if (col.count(w.J)) r[col.at(w.J)] = zp_sub(r[col.at(w.J)], ZPoly{1});
        if (col.count(w.N)) r[col.at(w.N)] = zp_add(r[col.at(w.N)], zc);
        r[s] = zp_sub(r[s], zc);
        ++row;
    }
    out.matrix[s][s] = ZPoly{1};
    const std::string& aug_name = A.members[static_cast<std::size_t>(A.aug_member)].spec->name;
    out.matrix[s][col.at(aug_name)] = ZPoly{mpz_class(-1)};
    out.rhs[s] = ZPoly{1};

    out.det = detail::zp_det_bareiss(out.matrix);
    if (out.det.empty())
        throw std::runtime_error("rational_series_from_family: the witness system is singular");
    if (out.det[0] == 0)
        throw std::runtime_error(
            "rational_series_from_family: the witness system degenerates at z = 0");
    if (out.det[0] != 1 && out.det[0] != -1)
        throw std::logic_error("rational_series_from_family: determinant is not a unit at z = 0");

    int ds = out.family_degree * static_cast<int>(s);
    if (zp_degree(out.det) > ds)
        throw std::logic_error("rational_series_from_family: determinant exceeds the d*s cap");
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<ZPoly>> mj = out.matrix;
        for (std::size_t i = 0; i < n; ++i) mj[i][j] = out.rhs[i];
        ZPoly cof = detail::zp_det_bareiss(mj);
        if (zp_degree(cof) > ds)
            throw std::logic_error("rational_series_from_family: cofactor exceeds the d*s cap");
        out.cofactors.push_back(std::move(cof));
    }

    bool flip = out.det[0] < 0;
    ZPoly den = flip ? zp_scale(out.det, -1) : out.det;
    int window = 3 * ds + 5;
    for (std::size_t j = 0; j < n; ++j) {
        ZPoly num = flip ? zp_scale(out.cofactors[j], -1) : out.cofactors[j];
        TruncatedSeries exact = RationalSeries{num, den}.expand(window);
        auto rec = reconstruct_rational(exact, ds, ds);
        if (!rec)
            throw std::logic_error(
                "rational_series_from_family: reconstruction failed inside certified caps");
        out.series.push_back(*rec);
    }
    out.R = out.series[s];

    // the solved series must reproduce the graded dimensions of the algebra
    int check_to = ds + 5;
    TruncatedSeries dims = hilbert_truncated(P, check_to);
    TruncatedSeries mine = out.R.expand(check_to);
    for (int e = 0; e <= check_to; ++e)
        if (dims.at(e) != mine.at(e))
            throw std::runtime_error(
                "rational_series_from_family: series disagrees with graded dimensions at degree " +
                std::to_string(e));
    out.verified_to = check_to;
    return out;
}

// ---------------------------------------------------------------------------
// r-processing. An algebra is r-processing when reducing p*q can be staged:
// reduce p*q1 for the leading piece q1 of q with deg q1 >= r, then append q2
// freely -- i.e. N(p*q) = N(p*q1)*q2 with no further rewriting. rproc_verify
// checks that identity exhaustively below a degree bound; rproc_certificate
// looks for cheap structural evidence for some r.

// true when the words can share letters in some end-to-end placement:
// a suffix of one is a prefix of the other, or one contains the other
inline bool words_overlap(const Word& u, const Word& v) {
    auto suffix_prefix = [](const Word& a, const Word& b) {
        std::size_t m = std::min(a.size(), b.size());
        for (std::size_t k = 1; k <= m; ++k)
            if (std::equal(b.letters.begin(), b.letters.begin() + static_cast<std::ptrdiff_t>(k),
                           a.letters.end() - static_cast<std::ptrdiff_t>(k)))
                return true;
        return false;
    };
    if (suffix_prefix(u, v) || suffix_prefix(v, u)) return true;
    return find_subword(u, v) != std::string::npos || find_subword(v, u) != std::string::npos;
}

enum class RProcEvidence {
    monomial_degree_bound,   // monomial basis: rewriting terminates in one pass
    acyclic_overlap_graph,   // rewriting tails never feed back into a cycle
};

inline std::string to_text(RProcEvidence e) {
    switch (e) {
        case RProcEvidence::monomial_degree_bound: return "monomial degree bound";
        case RProcEvidence::acyclic_overlap_graph: return "acyclic overlap graph";
    }
    return "?";
}

struct RProcOutcome {
    bool certified = false;  // an r value is proposed
    bool heuristic = false;  // evidence bounds the mechanism, not the constant
    int r = -1;
    RProcEvidence evidence = RProcEvidence::monomial_degree_bound;
    std::string refusal;  // set when certified == false
    std::vector<std::size_t> cycle;  // basis element indices along a rewriting cycle
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // the overlap graph
};

// Structural certificate from a finite complete basis. For a monomial basis,
// one rewriting pass with window max LW degree suffices: r = maxdeg - 1. For
// a general basis, draw an arrow g -> h when a non-leading word of g can
// overlap LW(h): rewriting with g can then create a new redex for h. If that
// graph is acyclic, rewriting cascades have bounded depth and
// r = (longest path + 1) * maxdeg is proposed, flagged as heuristic. A cycle
// means tails can feed back into themselves and no bound is claimed.
template <class K>
RProcOutcome rproc_certificate(const GroebnerBasis<K>& gb) {
    if (gb.kind != BasisKind::two_sided)
        throw std::invalid_argument("rproc_certificate: need a two-sided basis");
    if (!gb.complete_flag)
        throw SoundnessError("rproc_certificate: needs a finite complete basis");
    RProcOutcome out;
    int maxdeg = 1;
    bool monomial = true;
    for (const auto& g : gb.elems) {
        if (g.degree() > maxdeg) maxdeg = g.degree();
        if (g.terms.size() != 1) monomial = false;
    }
    if (monomial) {
        out.certified = true;
        out.heuristic = false;
        out.r = maxdeg - 1;
        out.evidence = RProcEvidence::monomial_degree_bound;
        return out;
    }
    std::size_t n = gb.elems.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool hit = false;
            const auto& gi = gb.elems[i];
            for (std::size_t t = 1; t < gi.terms.size() && !hit; ++t)
                hit = words_overlap(gi.terms[t].first, gb.elems[j].leading_word());
            if (hit) {
                adj[i].push_back(j);
                out.edges.emplace_back(i, j);
            }
        }
    }
    // depth-first search; a back edge closes a rewriting cycle
    std::vector<int> color(n, 0);  // 0 fresh, 1 on stack, 2 done
    std::vector<std::size_t> path;
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next edge)
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        stack.emplace_back(root, 0);
        color[root] = 1;
        path.push_back(root);
        while (!stack.empty()) {
            auto& [u, e] = stack.back();
            if (e < adj[u].size()) {
                std::size_t v = adj[u][e++];
                if (color[v] == 1) {
                    auto it = std::find(path.begin(), path.end(), v);
                    out.cycle.assign(it, path.end());
                    out.certified = false;
                    out.refusal = "rewriting tails re-enter leading words along a cycle";
                    return out;
                }
                if (color[v] == 0) {
                    color[v] = 1;
                    path.push_back(v);
                    stack.emplace_back(v, 0);
                }
            } else {
                color[u] = 2;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    // acyclic: longest path by depth over a topological order
    std::vector<int> depth(n, 0);
    std::vector<std::size_t> order;
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v : adj[i]) ++indeg[v];
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t u = order[k];
        for (std::size_t v : adj[u]) {
            if (depth[v] < depth[u] + 1) depth[v] = depth[u] + 1;
            if (--indeg[v] == 0) order.push_back(v);
        }
    }
    int longest = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (depth[i] > longest) longest = depth[i];
    out.certified = true;
    out.heuristic = true;
    out.r = (longest + 1) * maxdeg;
    out.evidence = RProcEvidence::acyclic_overlap_graph;
    return out;
}

struct RProcVerifyResult {
    bool pass = false;
    int r = 0;
    int D = 0;
    // first failing instance when pass == false
    Word p, q, q1, q2;
    std::string detail;
};

// Exhaustive check of the staging identity through degree D: for all normal
// words p, q and every split q = q1 q2 with q2 nonempty and
// deg q1 >= min(r, deg q), the unreduced product N(p q1) * q2 must equal
// N(p q). The empty cut q1 = 1 is admissible only when r = 0, which is the
// free-algebra regime. Needs D >= r + 2 so at least one informative pair fits.
template <class K>
RProcVerifyResult rproc_verify(const GroebnerBasis<K>& gb, int r, int D) {
    if (gb.kind != BasisKind::two_sided)
        throw std::invalid_argument("rproc_verify: need a two-sided basis");
    if (r < 0) throw std::invalid_argument("rproc_verify: r must be nonnegative");
    if (D < r + 2)
        throw std::invalid_argument("rproc_verify: need D >= r + 2 to see an informative pair");
    if (!gb.complete_flag && gb.soundness_degree < D)
        throw SoundnessError("rproc_verify: basis sound only to " +
                             std::to_string(gb.soundness_degree));
    const Presentation<K>& P = gb.pres();
    const MonomialOrder& ord = gb.ord();
    K one = scalar_from_int<K>(1, P.field);

    RProcVerifyResult res;
    res.r = r;
    res.D = D;
    auto words = normal_words(gb, D);
    for (int dp = 1; dp < D; ++dp) {
        for (const auto& p : words[static_cast<std::size_t>(dp)]) {
            for (int dq = 1; dp + dq <= D; ++dq) {
                for (const auto& q : words[static_cast<std::size_t>(dq)]) {
                    Polynomial<K> whole =
                        normal_form(poly_monomial(concat(p, q), one), gb);
                    for (std::size_t cut = 0; cut < q.size(); ++cut) {
                        Word q1 = subword(q, 0, cut, ord);
                        if (q1.degree < std::min(r, dq)) continue;
                        Word q2 = subword(q, cut, q.size() - cut, ord);
                        Polynomial<K> head =
                            normal_form(poly_monomial(concat(p, q1), one), gb);
                        Polynomial<K> staged;
                        for (const auto& [w, coeff] : head.terms)
                            staged = add(staged, poly_monomial(concat(w, q2), coeff), ord);
                        if (staged == whole) continue;
                        res.pass = false;
                        res.p = p;
                        res.q = q;
                        res.q1 = q1;
                        res.q2 = q2;
                        res.detail = "N(p*q1)*q2 differs from N(p*q) for p=" + word_text(p, P.gens) +
                                     ", q=" + word_text(q, P.gens) +
                                     ", q1=" + (q1.empty() ? "1" : word_text(q1, P.gens)) +
                                     ", q2=" + word_text(q2, P.gens);
                        return res;
                    }
                }
            }
        }
    }
    res.pass = true;
    return res;
}

// ---------------------------------------------------------------------------
// Universal probe for the syzygy-degree bound. Samples right ideals (all
// prefix-antichains of normal words of degree <= d, then random elements) and
// measures m1(I) against m(I) + d, and against m(I) + 2r when a processing
// constant is supplied -- the latter is a theorem, so a violation is flagged
// as an implementation error rather than a mathematical discovery.

struct UniversalProbeReport {
    int d = 0;
    int D = 0;
    int certified_r = -1;
    std::uint64_t seed = 0;
    bool enumeration_capped = false;
    std::size_t monomial_count = 0;
    std::size_t random_count = 0;
    int max_m1 = -1;
    std::optional<int> max_excess;  // max of m1(I) - m(I) over samples with syzygies
    bool bound_holds = true;            // m1 <= m + d wherever decidable
    bool certified_bound_holds = true;  // m1 <= m + 2r wherever decidable
    bool implementation_error = false;
    std::vector<ProbeSampleRecord> samples;
    std::vector<std::string> violations;
};

template <class K>
UniversalProbeReport universal_coherence_probe(const GroebnerBasis<K>& ambient, int d, int D,
                                               int certified_r = -1,
                                               const ProbeConfig& config = {}) {
    const Presentation<K>& P = ambient.pres();
    UniversalProbeReport rep;
    rep.d = d;
    rep.D = D;
    rep.certified_r = certified_r;
    rep.seed = config.seed;
    if (d <= 0) return rep;

    auto words_by_degree = normal_words(ambient, d);
    std::vector<Word> pool_words;
    for (int e = 1; e <= d; ++e)
        for (const auto& w : words_by_degree[static_cast<std::size_t>(e)])
            pool_words.push_back(w);
    std::vector<std::vector<std::size_t>> antichains;
    detail::enumerate_antichains(pool_words, config.max_monomial_ideals, antichains,
                                 rep.enumeration_capped);
    rep.monomial_count = antichains.size();

    std::vector<std::vector<Polynomial<K>>> sample_gens;
    for (const auto& chain : antichains) {
        std::vector<Polynomial<K>> gens;
        for (std::size_t i : chain)
            gens.push_back(poly_monomial(pool_words[i], scalar_from_int<K>(1, P.field)));
        sample_gens.push_back(std::move(gens));
    }
    std::mt19937_64 rng(config.seed);
    for (std::size_t s = 0; s < config.random_samples; ++s) {
        std::size_t count = 1 + detail::bounded_random(rng, 2);
        std::vector<Polynomial<K>> gens;
        for (std::size_t i = 0; i < count; ++i) {
            int deg = 1 + static_cast<int>(
                              detail::bounded_random(rng, static_cast<std::uint64_t>(d)));
            if (words_by_degree[static_cast<std::size_t>(deg)].empty()) continue;
            gens.push_back(
                detail::random_element(rng, ambient, words_by_degree[static_cast<std::size_t>(deg)]));
        }
        if (gens.empty()) continue;
        sample_gens.push_back(std::move(gens));
        ++rep.random_count;
    }

    for (const auto& gens : sample_gens) {
        IdealSlice<K> minimal = detail::minimized_slice(P, ambient, gens, d);
        if (minimal.gens.empty()) continue;
        int t = minimal.max_degree();
        SyzygyBasis<K> syz = solve_linear_equation(ambient, minimal.gens, D);
        int m1 = syz.max_degree();

        ProbeSampleRecord rec;
        for (const auto& g : minimal.gens) rec.gens.push_back(poly_text(g, P.gens));
        rec.m0 = t;
        rec.m1 = m1;
        rep.samples.push_back(rec);

        auto ideal_text = [&]() {
            std::string s2 = "(";
            for (std::size_t i = 0; i < rec.gens.size(); ++i)
                s2 += (i ? ", " : "") + rec.gens[i];
            return s2 + ")";
        };
        if (m1 >= 0) {
            if (m1 > rep.max_m1) rep.max_m1 = m1;
            int excess = m1 - t;
            if (!rep.max_excess || excess > *rep.max_excess) rep.max_excess = excess;
        }
        if (t + d <= D && m1 > t + d) {
            rep.bound_holds = false;
            rep.violations.push_back("m1 = " + std::to_string(m1) + " > m + d = " +
                                     std::to_string(t + d) + " for I = " + ideal_text());
        }
        if (certified_r >= 0 && t + 2 * certified_r <= D && m1 > t + 2 * certified_r) {
            rep.certified_bound_holds = false;
            rep.implementation_error = true;
            rep.violations.push_back("m1 = " + std::to_string(m1) + " > m + 2r = " +
                                     std::to_string(t + 2 * certified_r) + " for I = " +
                                     ideal_text());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Census of quadratic monomial algebras on n degree-one generators: one entry
// per subset of the n^2 quadratic words, each with its certified rational
// series, plus the list of distinct series in order of first appearance.

struct QuadraticMonomialEntry {
    std::vector<std::string> relations;  // forbidden quadratic words, subset order
    RationalSeries series;
};

struct QuadraticEnumeration {
    int n = 0;
    std::vector<QuadraticMonomialEntry> algebras;  // indexed by subset bitmask
    std::vector<RationalSeries> distinct;          // first-appearance order
};

inline QuadraticEnumeration enumerate_quadratic_monomial(int n, std::size_t max_subsets = 4096) {
    if (n < 1) throw std::invalid_argument("enumerate_quadratic_monomial: need n >= 1");
    std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (pairs >= 20 || (std::size_t{1} << pairs) > max_subsets)
        throw std::invalid_argument("enumerate_quadratic_monomial: 2^(n^2) exceeds the cap");

    Presentation<Rational> base;
    base.field = field_rationals();
    for (int i = 0; i < n; ++i) {
        base.gens.push_back({"x" + std::to_string(i + 1), 1});
        base.order.rank.push_back(static_cast<std::uint32_t>(i));
        base.order.weight.push_back(1);
    }
    std::vector<Word> quad;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            quad.push_back(base.order.make_word({static_cast<std::uint32_t>(i),
                                                 static_cast<std::uint32_t>(j)}));

    QuadraticEnumeration out;
    out.n = n;
    std::size_t total = std::size_t{1} << pairs;
    for (std::size_t mask = 0; mask < total; ++mask) {
        Presentation<Rational> P = base;
        QuadraticMonomialEntry entry;
        for (std::size_t b = 0; b < pairs; ++b) {
            if (!(mask & (std::size_t{1} << b))) continue;
            P.relations.push_back(poly_monomial(quad[b], Rational(1)));
            entry.relations.push_back(word_text(quad[b], P.gens));
        }
        entry.series = rational_series_monomial(P).series;
        bool seen = false;
        for (const auto& s : out.distinct)
            if (s == entry.series) {
                seen = true;
                break;
            }
        if (!seen) out.distinct.push_back(entry.series);
        out.algebras.push_back(std::move(entry));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Family discovery for monomial algebras: peel the top generator x off each
// ideal, point J at the rest, and let N = (x : J). Every ideal reachable this
// way from the augmentation ideal is added as a member; the process closes up
// or overruns the cap.

template <class K>
std::optional<FamilySpec<K>> discover_monomial_family(const GroebnerBasis<K>& ambient, int D,
                                                      std::size_t member_cap = 32) {
    if (ambient.kind != BasisKind::two_sided)
        throw std::invalid_argument("discover_monomial_family: need a two-sided basis");
    const Presentation<K>& P = ambient.pres();
    if (!is_monomial_presentation(P))
        throw std::invalid_argument("discover_monomial_family: monomial presentation required");

    FamilySpec<K> F;
    F.members.push_back({"i0", {}});  // the zero ideal
    std::map<std::vector<std::string>, std::string> names;
    names[{}] = "i0";

    auto key_of = [&](const IdealSlice<K>& slice) {
        std::vector<std::string> key;
        for (const auto& g : slice.gens) key.push_back(poly_text(g, P.gens));
        return key;
    };
    // find-or-create a member for a minimized slice; returns its name
    std::vector<IdealSlice<K>> work;
    std::vector<std::string> work_names;
    auto intern = [&](const IdealSlice<K>& slice) {
        auto key = key_of(slice);
        auto it = names.find(key);
        if (it != names.end()) return it->second;
        std::string name = "i" + std::to_string(F.members.size());
        names[key] = name;
        F.members.push_back({name, slice.gens});
        work.push_back(slice);
        work_names.push_back(name);
        return name;
    };

    std::vector<Polynomial<K>> all_gens;
    for (std::uint32_t g = 0; g < P.gens.size(); ++g)
        all_gens.push_back(
            poly_monomial(P.order.make_word({g}), scalar_from_int<K>(1, P.field)));
    intern(detail::minimized_slice(P, ambient, all_gens, D));

    for (std::size_t head = 0; head < work.size(); ++head) {
        if (F.members.size() > member_cap) return std::nullopt;
        IdealSlice<K> slice = work[head];
        std::string name = work_names[head];
        Polynomial<K> x = slice.gens.back();  // top degree, top order: m(J) <= m(I)
        std::vector<Polynomial<K>> jgens(slice.gens.begin(), slice.gens.end() - 1);
        IdealSlice<K> jslice = detail::minimized_slice(P, ambient, jgens, D);
        IdealSlice<K> nslice = colon_ideal(ambient, x, jslice.gens, D);
        typename FamilySpec<K>::Witness w;
        w.member = name;
        w.x = x;
        w.J = intern(jslice);
        w.N = intern(nslice);
        F.witnesses.push_back(std::move(w));
    }
    if (F.members.size() > member_cap) return std::nullopt;
    return F;
}

}  // namespace ncalg

#endif  // NCALG_COHERENCE_HPP

#ifndef NCALG_ANICK_HPP
#define NCALG_ANICK_HPP

// Chain combinatorics for monomial algebras: the words whose counts give the
// homology dimensions of the minimal free resolution of the ground field.
// A 0-chain is a generator (tail = itself). An (n+1)-chain is w = v.s where v
// is an n-chain with tail t and the window t.s contains exactly one forbidden
// occurrence, sitting as a suffix and starting inside t; the new tail is s.
// On top of the chains: homology series, the Euler / Hilbert identity check,
// the rate estimate, and the Poincare-series identity for trivial extensions
// by a cyclic monomial module.

#include <string>
#include <vector>

#include "hilbert.hpp"
#include "syzygy.hpp"

namespace ncalg {

struct AnickChain {
    Word word;
    std::size_t tail_len = 0;  // the extension appended at the last step
};

struct AnickChainSet {
    std::vector<std::vector<AnickChain>> chains;  // [i] = i-chains, i = 0..i_max
    // chains[i] lists *every* i-chain of the algebra, not just those under the
    // degree bound. A chain extends its parent by at most maxdeg(forbidden)-1,
    // so completeness propagates level by level.
    std::vector<bool> level_complete;
    int i_max = 0;
    int degree_bound = 0;

    // dim H_{i+1} in each internal degree equals the i-chain count there
    TruncatedSeries homology_series(int homological_i) const {
        TruncatedSeries s = TruncatedSeries::zero(degree_bound);
        if (homological_i == 0) {
            s.c[0] = 1;
            return s;
        }
        int ci = homological_i - 1;
        if (ci > i_max) throw std::out_of_range("homology index beyond computed chains");
        for (const auto& ch : chains[static_cast<std::size_t>(ci)])
            s.c[static_cast<std::size_t>(ch.word.degree)] += 1;
        return s;
    }

    // m_i = top internal degree of H_i within the bound; -1 when H_i = 0
    int m_degree(int homological_i) const {
        if (homological_i == 0) return 0;
        int ci = homological_i - 1;
        if (ci > i_max) throw std::out_of_range("homology index beyond computed chains");
        int m = -1;
        for (const auto& ch : chains[static_cast<std::size_t>(ci)])
            m = std::max(m, ch.word.degree);
        return m;
    }
};

template <class K>
AnickChainSet anick_chains(const Presentation<K>& P, int i_max, int D) {
    auto forbidden = forbidden_antichain(P);  // validates monomial input
    AnickChainSet out;
    out.i_max = i_max;
    out.degree_bound = D;
    if (i_max < 0) return out;
    out.chains.resize(static_cast<std::size_t>(i_max) + 1);
    out.level_complete.assign(static_cast<std::size_t>(i_max) + 1, false);
    bool complete = true;
    for (std::size_t g = 0; g < P.gens.size(); ++g) {
        Word w = P.order.make_word({static_cast<std::uint32_t>(g)});
        if (w.degree <= D)
            out.chains[0].push_back({w, 1});
        else
            complete = false;
    }
    out.level_complete[0] = complete;
    for (int i = 1; i <= i_max; ++i) {
        const auto& prev = out.chains[static_cast<std::size_t>(i - 1)];
        bool pruned = false;
        for (const auto& parent : prev) {
            const auto& pw = parent.word.letters;
            std::vector<std::uint32_t> tail(pw.end() - static_cast<std::ptrdiff_t>(parent.tail_len),
                                            pw.end());
            for (const auto& f : forbidden) {
                // the forbidden word must enter the window as a suffix that
                // starts inside the tail: split f = f1.f2 with f1 a nonempty
                // proper suffix of the tail, f2 the (nonempty) extension
                for (std::size_t flen1 = 1; flen1 < f.size(); ++flen1) {
                    if (flen1 > tail.size()) break;
                    if (!std::equal(f.letters.begin(),
                                    f.letters.begin() + static_cast<std::ptrdiff_t>(flen1),
                                    tail.end() - static_cast<std::ptrdiff_t>(flen1)))
                        continue;
                    std::vector<std::uint32_t> window = tail;
                    window.insert(window.end(),
                                  f.letters.begin() + static_cast<std::ptrdiff_t>(flen1),
                                  f.letters.end());
                    // exactly one forbidden occurrence in the whole window
                    std::size_t occurrences = 0;
                    for (const auto& f2 : forbidden) {
                        for (std::size_t pos = 0; pos + f2.size() <= window.size(); ++pos)
                            if (std::equal(f2.letters.begin(), f2.letters.end(),
                                           window.begin() + static_cast<std::ptrdiff_t>(pos)))
                                ++occurrences;
                    }
                    if (occurrences != 1) continue;
                    std::vector<std::uint32_t> chain_letters = pw;
                    chain_letters.insert(chain_letters.end(),
                                         f.letters.begin() + static_cast<std::ptrdiff_t>(flen1),
                                         f.letters.end());
                    Word cw = P.order.make_word(chain_letters);
                    if (cw.degree > D) {
                        pruned = true;  // a genuine chain fell past the bound
                        continue;
                    }
                    out.chains[static_cast<std::size_t>(i)].push_back({cw, f.size() - flen1});
                }
            }
        }
        out.level_complete[static_cast<std::size_t>(i)] =
            out.level_complete[static_cast<std::size_t>(i - 1)] && !pruned;
        auto& level = out.chains[static_cast<std::size_t>(i)];
        std::sort(level.begin(), level.end(), [&](const AnickChain& a, const AnickChain& b) {
            return P.order.compare(a.word, b.word) < 0;
        });
    }
    return out;
}

// (sum_i (-1)^i H_i(z)) * R(z) - 1, truncated at D; identically zero when the
// chains really are the Euler characteristics of the minimal resolution.
// Chains of homological index i have degree > i, so index D suffices.
template <class K>
TruncatedSeries euler_check(const Presentation<K>& P, int D) {
    auto chains = anick_chains(P, D, D);
    TruncatedSeries alt = TruncatedSeries::zero(D);
    alt.c[0] = 1;
    int sign = -1;
    for (int ci = 0; ci <= chains.i_max; ++ci) {
        for (const auto& ch : chains.chains[static_cast<std::size_t>(ci)])
            alt.c[static_cast<std::size_t>(ch.word.degree)] += sign;
        sign = -sign;
    }
    auto forbidden = forbidden_antichain(P);
    auto dims = monomial_dims(P, forbidden, D);
    TruncatedSeries R = TruncatedSeries::zero(D);
    R.c.assign(dims.begin(), dims.end());
    TruncatedSeries residual = ts_mul(alt, R, D);
    residual.c[0] -= 1;
    return residual;
}

// ---------------------------------------------------------------------------
// Rate: sup over i >= 2 of (m_i - 1)/(i - 1).

struct RateEstimate {
    mpq_class value;      // max of (m_i - 1)/(i - 1) over the computed window
    int attained_at = 0;  // homological index realizing it
    bool exact = false;   // resolution provably ended, or the pattern stabilized
};

inline RateEstimate rate_estimate(const AnickChainSet& chains) {
    if (chains.i_max < 1)
        throw std::invalid_argument("rate: need chains to homological degree 2 (index 1)");
    RateEstimate out;
    out.value = 0;
    std::vector<int> m;  // m[j] = m_{j+2}, read off chain level j+1
    bool ended = false;
    for (int ci = 1; ci <= chains.i_max; ++ci) {
        if (chains.chains[static_cast<std::size_t>(ci)].empty()) {
            // vanishing homology is conclusive only when the level was
            // enumerated in full rather than emptied by the degree bound
            ended = chains.level_complete[static_cast<std::size_t>(ci)];
            break;
        }
        int mi = chains.m_degree(ci + 1);
        m.push_back(mi);
        mpq_class ratio(mi - 1, ci);
        ratio.canonicalize();
        if (ratio > out.value) {
            out.value = ratio;
            out.attained_at = ci + 1;
        }
    }
    if (m.empty()) {
        out.exact = ended;  // no relations at all: rate 0 by convention
        return out;
    }
    if (ended) {
        out.exact = true;  // finite global dimension: the sup ranges over finitely many terms
        return out;
    }
    // heuristic: top degrees grow with increments eventually periodic (period
    // 1 or 2) and the max was attained away from the window's edge
    std::vector<int> inc;
    for (std::size_t j = 1; j < m.size(); ++j) inc.push_back(m[j] - m[j - 1]);
    auto periodic = [&](std::size_t p) {
        if (inc.size() < p + 2) return false;
        std::size_t checks = std::min<std::size_t>(inc.size() - p, 4);
        for (std::size_t k = 0; k < checks; ++k) {
            std::size_t j = inc.size() - 1 - k;
            if (inc[j] != inc[j - p]) return false;
        }
        return true;
    };
    bool stable = periodic(1) || periodic(2);
    bool interior = out.attained_at <= chains.i_max - 1;
    out.exact = stable && interior;
    return out;
}

// ---------------------------------------------------------------------------
// Trivial extension by a cyclic monomial module, as an honest presentation:
// one new degree-one generator e on top of R = k<X>/(forbidden), with
// relations x e for every x (left action annihilates), e e, and e k for every
// generator k of the monomial right ideal K (so e spans M = (R/K) shifted by
// one). The identity under test:
//     P_C(s,t) = P_R(s,t) / (1 - s P_M(s,t)).

template <class K>
Presentation<K> extension_presentation(const Presentation<K>& P, const std::vector<Word>& Kgens,
                                       const std::string& ext_name) {
    Presentation<K> C = P;
    for (const auto& g : C.gens)
        if (g.name == ext_name) throw std::invalid_argument("extension generator name collides");
    std::uint32_t e = static_cast<std::uint32_t>(C.gens.size());
    C.gens.push_back({ext_name, 1});
    // the new letter ranks below every existing one; ranks above stay as-is
    for (auto& r : C.order.rank) ++r;
    C.order.rank.push_back(0);
    C.order.weight.push_back(1);
    auto add_word_relation = [&](std::vector<std::uint32_t> ls) {
        Word w = C.order.make_word(std::move(ls));
        C.relations.push_back(poly_monomial(std::move(w), scalar_from_int<K>(1, C.field)));
    };
    // meaning of the original relations is unchanged: same words, new order
    std::vector<Polynomial<K>> rebuilt;
    for (const auto& r : P.relations) {
        Polynomial<K> nr;
        for (const auto& t : r.terms)
            nr = add(nr, poly_monomial(C.order.make_word(t.first.letters), t.second), C.order);
        rebuilt.push_back(std::move(nr));
    }
    C.relations = std::move(rebuilt);
    for (std::uint32_t x = 0; x < e; ++x) add_word_relation({x, e});
    add_word_relation({e, e});
    for (const auto& k : Kgens) {
        std::vector<std::uint32_t> ls{e};
        ls.insert(ls.end(), k.letters.begin(), k.letters.end());
        add_word_relation(std::move(ls));
    }
    validate(C);
    return C;
}

struct PoincareCheckResult {
    BiSeries lhs;       // bigraded homology table of the extension
    BiSeries rhs;       // P_R / (1 - s P_M), expanded
    BiSeries residual;  // lhs - rhs; must vanish
    bool ok = false;
};

namespace detail {

inline BiSeries chains_to_biseries(const AnickChainSet& chains, int s_max, int D) {
    BiSeries b = BiSeries::one(s_max, D);
    for (int ci = 0; ci <= chains.i_max && ci + 1 <= s_max; ++ci)
        for (const auto& ch : chains.chains[static_cast<std::size_t>(ci)])
            b.at(ci + 1, ch.word.degree) += 1;
    return b;
}

}  // namespace detail

template <class K>
PoincareCheckResult poincare_extension_check(const Presentation<K>& P,
                                             const std::vector<Word>& Kgens, int s_max, int D) {
    PoincareCheckResult out;
    // left side: chains of the extension algebra
    Presentation<K> C = extension_presentation(P, Kgens, "_e");
    out.lhs = detail::chains_to_biseries(anick_chains(C, std::max(0, s_max - 1), D), s_max, D);

    // right side: P_R from chains of R, P_M from the iterated syzygies of K
    BiSeries PR = detail::chains_to_biseries(anick_chains(P, std::max(0, s_max - 1), D), s_max, D);
    BiSeries PM = BiSeries::zero(s_max, D);
    if (D >= 1) PM.at(0, 1) = 1;  // Tor_0(M) = k, shifted into degree one
    if (s_max >= 1) {
        auto gb = complete_two_sided(P, D);
        std::vector<Polynomial<K>> kp;
        for (const auto& w : Kgens)
            kp.push_back(poly_monomial(w, scalar_from_int<K>(1, P.field)));
        auto tor = iterated_syzygies(gb, kp, std::max(0, s_max - 1), D - 1);
        for (std::size_t lvl = 0; lvl < tor.level_degrees.size(); ++lvl)
            for (int d : tor.level_degrees[lvl]) {
                int i = static_cast<int>(lvl) + 1;         // Tor_{lvl+1}(R/K)
                if (i <= s_max && d + 1 <= D) PM.at(i, d + 1) += 1;
            }
    }
    BiSeries sPM = BiSeries::zero(s_max, D);
    for (int i = 0; i + 1 <= s_max; ++i)
        for (int j = 0; j <= D; ++j) sPM.at(i + 1, j) = PM.at(i, j);
    out.rhs = bs_mul(PR, bs_geometric_inverse(sPM));
    out.residual = bs_sub(out.lhs, out.rhs);
    out.ok = out.residual.is_zero();
    return out;
}

}  // namespace ncalg

#endif

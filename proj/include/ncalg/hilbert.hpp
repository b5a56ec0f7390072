#ifndef NCALG_HILBERT_HPP
#define NCALG_HILBERT_HPP

// Hilbert series: truncated coefficient counts for any presentation (via the
// completed basis and normal-word counting), and exact rational series for
// monomial presentations. Rationality is witnessed constructively: normal
// words are walks in the Ufnarovski graph on length-(l-1) normal words, so
// their degree counts satisfy a linear recurrence whose order is bounded by
// (vertex count) x (max generator degree). The series is reconstructed as
// the minimal such recurrence from an expansion window long enough to certify
// global equality, then re-verified coefficient by coefficient.

#include <algorithm>
#include <map>

#include "groebner.hpp"
#include "series.hpp"

namespace ncalg {

template <class K>
TruncatedSeries hilbert_truncated(const GroebnerBasis<K>& gb, int D) {
    auto dims = algebra_dims(gb, D);
    TruncatedSeries s = TruncatedSeries::zero(D);
    for (int i = 0; i <= D; ++i) s.c[static_cast<std::size_t>(i)] = dims[static_cast<std::size_t>(i)];
    return s;
}

template <class K>
TruncatedSeries hilbert_truncated(const Presentation<K>& P, int D) {
    return hilbert_truncated(complete_two_sided(P, D), D);
}

// ---------------------------------------------------------------------------
// Monomial machinery. Forbidden words are the relation words, inter-reduced
// to an antichain (a word containing another forbidden word as a subword is
// redundant).

template <class K>
std::vector<Word> forbidden_antichain(const Presentation<K>& P) {
    std::vector<Word> words;
    for (const auto& r : P.relations) {
        if (!is_monomial(r)) throw std::invalid_argument("monomial presentation required");
        words.push_back(r.leading_word());
    }
    // dedupe, then scan shortest-first: a word containing a kept word as a
    // subword is redundant
    std::sort(words.begin(), words.end(),
              [&](const Word& a, const Word& b) { return P.order.compare(a, b) < 0; });
    words.erase(std::unique(words.begin(), words.end(),
                            [](const Word& a, const Word& b) { return a.letters == b.letters; }),
                words.end());
    std::stable_sort(words.begin(), words.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    std::vector<Word> out;
    for (const auto& w : words) {
        bool redundant = false;
        for (const auto& f : out)
            if (find_subword(f, w) != std::string::npos) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(w);
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return P.order.compare(a, b) < 0; });
    return out;
}

namespace detail {

inline bool has_forbidden_suffix(const std::vector<std::uint32_t>& w,
                                 const std::vector<Word>& forbidden) {
    for (const auto& f : forbidden) {
        if (f.size() > w.size()) continue;
        if (std::equal(f.letters.begin(), f.letters.end(), w.end() - static_cast<std::ptrdiff_t>(f.size())))
            return true;
    }
    return false;
}

}  // namespace detail

// normal-word counts per degree 0..D by a suffix-automaton walk: the state is
// the last l-1 letters (l = max forbidden length), because a new forbidden
// occurrence created by appending a letter must be a suffix
template <class K>
std::vector<mpz_class> monomial_dims(const Presentation<K>& P, const std::vector<Word>& forbidden,
                                     int D) {
    std::size_t ell = 1;
    for (const auto& f : forbidden) ell = std::max(ell, f.size());
    std::size_t state_len = ell - 1;

    std::vector<std::vector<std::uint32_t>> states{{}};
    std::map<std::vector<std::uint32_t>, std::size_t> index{{{}, 0}};
    // counts[s] = multiset of degrees is too big; instead run DP per degree:
    // alive[d][s] = number of normal words of degree d whose suffix state is s
    std::vector<std::map<std::size_t, mpz_class>> alive(static_cast<std::size_t>(D) + 1);
    alive[0][0] = 1;
    std::vector<mpz_class> dims(static_cast<std::size_t>(D) + 1, 0);
    dims[0] = 1;
    for (int d = 0; d <= D; ++d) {
        for (const auto& [sidx, cnt] : alive[static_cast<std::size_t>(d)]) {
            // copy: pushing fresh states below may reallocate the pool
            const auto st = states[sidx];
            for (std::size_t g = 0; g < P.gens.size(); ++g) {
                int nd = d + P.gens[g].degree;
                if (nd > D) continue;
                std::vector<std::uint32_t> w = st;
                w.push_back(static_cast<std::uint32_t>(g));
                if (detail::has_forbidden_suffix(w, forbidden)) continue;
                if (w.size() > state_len) w.erase(w.begin());
                auto [it, fresh] = index.emplace(w, states.size());
                if (fresh) states.push_back(w);
                alive[static_cast<std::size_t>(nd)][it->second] += cnt;
                dims[static_cast<std::size_t>(nd)] += cnt;
            }
        }
    }
    return dims;
}

// ---------------------------------------------------------------------------
// The Ufnarovski graph: vertices are normal words of length l-1, edges are
// one-letter extensions whose new suffix stays normal. Walks of length k
// starting anywhere biject with normal words of length k + l - 1.

struct UfnarovskiGraph {
    std::size_t ell = 1;                       // max forbidden-word length
    std::vector<Word> vertices;                // normal words of length ell-1
    std::vector<std::vector<mpz_class>> matrix;  // [from][to] edge counts

    // number of normal words of length len, counted through the graph
    mpz_class walk_count(std::size_t len) const {
        if (len + 1 < ell) throw std::invalid_argument("walk_count: length below vertex size");
        std::size_t steps = len + 1 - ell;
        std::vector<mpz_class> v(vertices.size(), 1);
        for (std::size_t s = 0; s < steps; ++s) {
            std::vector<mpz_class> nv(vertices.size(), 0);
            for (std::size_t i = 0; i < vertices.size(); ++i)
                for (std::size_t j = 0; j < vertices.size(); ++j)
                    nv[i] += matrix[i][j] * v[j];
            v = std::move(nv);
        }
        mpz_class total = 0;
        for (const auto& x : v) total += x;
        return total;
    }
};

template <class K>
UfnarovskiGraph ufnarovski_graph(const Presentation<K>& P, const std::vector<Word>& forbidden) {
    UfnarovskiGraph G;
    for (const auto& f : forbidden) G.ell = std::max(G.ell, f.size());
    // enumerate normal words of length ell-1
    std::vector<std::vector<std::uint32_t>> level{{}};
    for (std::size_t len = 1; len + 1 <= G.ell; ++len) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& w : level)
            for (std::size_t g = 0; g < P.gens.size(); ++g) {
                std::vector<std::uint32_t> x = w;
                x.push_back(static_cast<std::uint32_t>(g));
                if (!detail::has_forbidden_suffix(x, forbidden)) next.push_back(std::move(x));
            }
        level = std::move(next);
    }
    for (auto& w : level) G.vertices.push_back(P.order.make_word(w));
    G.matrix.assign(G.vertices.size(), std::vector<mpz_class>(G.vertices.size(), 0));
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < G.vertices.size(); ++i) index[G.vertices[i].letters] = i;
    for (std::size_t i = 0; i < G.vertices.size(); ++i)
        for (std::size_t g = 0; g < P.gens.size(); ++g) {
            std::vector<std::uint32_t> x = G.vertices[i].letters;
            x.push_back(static_cast<std::uint32_t>(g));
            if (detail::has_forbidden_suffix(x, forbidden)) continue;
            x.erase(x.begin());  // keep the last ell-1 letters: the target vertex
            G.matrix[i][index.at(x)] += 1;
        }
    return G;
}

// ---------------------------------------------------------------------------
// Exact rational Hilbert series for a monomial presentation, certified.

template <class K>
struct MonomialSeriesResult {
    RationalSeries series;
    UfnarovskiGraph graph;
    int verified_to = 0;  // exact coefficient agreement with normal-word counts
};

template <class K>
MonomialSeriesResult<K> rational_series_monomial(const Presentation<K>& P) {
    if (!is_monomial_presentation(P)) throw std::invalid_argument("monomial presentation required");
    auto forbidden = forbidden_antichain(P);
    auto G = ufnarovski_graph(P, forbidden);
    int maxw = 1;
    for (const auto& g : P.gens) maxw = std::max(maxw, g.degree);
    int den_cap = static_cast<int>(G.vertices.size()) * maxw;
    int num_cap = den_cap + static_cast<int>(G.ell) * maxw;
    int window = num_cap + 2 * den_cap + 5;
    auto dims = monomial_dims(P, forbidden, window);
    TruncatedSeries S = TruncatedSeries::zero(window);
    S.c.assign(dims.begin(), dims.end());
    auto R = reconstruct_rational(S, den_cap, num_cap);
    if (!R) throw std::logic_error("monomial series did not reconstruct within certified caps");
    MonomialSeriesResult<K> out{*R, std::move(G), window};
    return out;
}

}  // namespace ncalg

#endif

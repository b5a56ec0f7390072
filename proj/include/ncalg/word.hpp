#ifndef NCALG_WORD_HPP
#define NCALG_WORD_HPP

// Words in the free monoid on a weighted alphabet, and the degree-lexicographic
// order that drives every leading-term decision. Letters are indices into a
// presentation's generator list; the degree of a word is cached because it is
// consulted constantly.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncalg {

struct Word {
    std::vector<std::uint32_t> letters;
    int degree = 0;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    bool operator==(const Word&) const = default;
};

// Degree-lexicographic order: total weighted degree first, then letter-by-letter
// by generator rank (higher rank = greater letter). rank and weight are indexed
// by letter. All materialized words with equal degree and a prefix relation are
// in fact equal (weights of user generators are >= 1 and slot letters only occur
// first), so the prefix case is rejected as a logic error instead of being given
// an arbitrary direction.
struct MonomialOrder {
    std::vector<std::uint32_t> rank;
    std::vector<int> weight;

    int degree_of(const std::vector<std::uint32_t>& letters) const {
        int d = 0;
        for (auto g : letters) d += weight[g];
        return d;
    }
    Word make_word(std::vector<std::uint32_t> letters) const {
        Word w;
        w.degree = degree_of(letters);
        w.letters = std::move(letters);
        return w;
    }

    // <0, 0, >0 like strcmp.
    int compare(const Word& a, const Word& b) const {
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.letters[i] != b.letters[i]) {
                return rank[a.letters[i]] < rank[b.letters[i]] ? -1 : 1;
            }
        }
        if (a.size() != b.size())
            throw std::logic_error("MonomialOrder: prefix pair with equal degree");
        return 0;
    }
    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
};

inline Word concat(const Word& a, const Word& b) {
    Word w;
    w.letters.reserve(a.size() + b.size());
    w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    w.degree = a.degree + b.degree;
    return w;
}

inline bool is_prefix(const Word& p, const Word& w) {
    if (p.size() > w.size()) return false;
    return std::equal(p.letters.begin(), p.letters.end(), w.letters.begin());
}

// First position where p occurs as a factor of w, or npos.
inline std::size_t find_subword(const Word& p, const Word& w) {
    if (p.size() > w.size()) return std::string::npos;
    if (p.empty()) return 0;
    std::size_t last = w.size() - p.size();
    for (std::size_t i = 0; i <= last; ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (w.letters[i + j] != p.letters[j]) { hit = false; break; }
        }
        if (hit) return i;
    }
    return std::string::npos;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len, const MonomialOrder& ord) {
    std::vector<std::uint32_t> ls(w.letters.begin() + pos, w.letters.begin() + pos + len);
    return ord.make_word(std::move(ls));
}

}  // namespace ncalg

#endif

#ifndef NCALG_PRESENTATION_HPP
#define NCALG_PRESENTATION_HPP

// Finitely presented connected graded algebras, free right modules over them,
// and the square-zero extension that encodes right modules for the completion
// engine.
//
// Extension encoding: a free module with slots 0..m-1 over an algebra on n
// generators is handled as words over an enlarged alphabet where letter n+s is
// the "slot letter" for slot s. Slot letters may only stand first in a word;
// any product that would place a letter in front of a slot letter, or join two
// slot letters, is structurally zero. Slot letters carry the slot's degree
// shift as their weight and rank above every base letter (slot 0 highest), so
// plain deglex on the big alphabet is exactly the module order: total shifted
// degree, then slot index, then base word order.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace ncalg {

struct Generator {
    std::string name;
    int degree = 1;
};

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

template <class K>
struct Presentation {
    FieldSpec field;
    std::vector<Generator> gens;
    MonomialOrder order;                 // rank/weight indexed by generator
    std::vector<Polynomial<K>> relations;

    std::uint32_t find_gen(const std::string& name) const {
        for (std::uint32_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return i;
        throw std::out_of_range("unknown generator: " + name);
    }
};

// ---------------------------------------------------------------------------
// Printing. Canonical text is the cache/content-addressing currency, so it is
// deterministic down to the byte.

inline std::string word_text(const Word& w, const std::vector<Generator>& gens) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += gens[w.letters[i]].name;
    }
    return s;
}

namespace detail {
// Splits a coefficient into (sign-to-print, magnitude-text); GF(p) values have
// no meaningful sign, so they always print as +value.
inline std::pair<bool, std::string> coeff_text(const Rational& c) {
    Rational a = c;
    a.canonicalize();
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    return {neg, a.get_str()};
}
inline std::pair<bool, std::string> coeff_text(const GFp& c) { return {false, std::to_string(c.v)}; }
}  // namespace detail

template <class K>
std::string poly_text(const Polynomial<K>& p, const std::vector<Generator>& gens) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        auto [neg, mag] = detail::coeff_text(p.terms[i].second);
        if (i == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        const Word& w = p.terms[i].first;
        if (w.empty()) {
            s += mag;
        } else if (mag == "1") {
            s += word_text(w, gens);
        } else {
            s += mag + "*" + word_text(w, gens);
        }
    }
    return s;
}

template <class K>
std::string canonical_text(const Presentation<K>& p) {
    std::string s = "field " + to_text(p.field) + ";\n";
    s += "gens";
    for (const auto& g : p.gens) s += " " + g.name + ":" + std::to_string(g.degree);
    s += ";\norder deglex";
    // generators by descending rank
    std::vector<std::uint32_t> idx(p.gens.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return p.order.rank[a] > p.order.rank[b]; });
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ">" : " ") + p.gens[idx[i]].name;
    s += ";\n";
    if (!p.relations.empty()) {
        s += "rels ";
        for (std::size_t i = 0; i < p.relations.size(); ++i) {
            if (i) s += ", ";
            s += poly_text(p.relations[i], p.gens);
        }
        s += ";\n";
    }
    return s;
}

// Connectedness and homogeneity checks; throws with a reason on failure.
template <class K>
void validate(const Presentation<K>& p) {
    if (p.order.rank.size() != p.gens.size() || p.order.weight.size() != p.gens.size())
        throw std::invalid_argument("presentation: order does not cover the generators");
    for (std::size_t i = 0; i < p.gens.size(); ++i) {
        if (!valid_identifier(p.gens[i].name))
            throw std::invalid_argument("presentation: bad generator name '" + p.gens[i].name + "'");
        if (p.gens[i].degree < 1)
            throw std::invalid_argument("presentation: generator degree must be >= 1");
        if (p.order.weight[i] != p.gens[i].degree)
            throw std::invalid_argument("presentation: order weights disagree with generator degrees");
        for (std::size_t j = i + 1; j < p.gens.size(); ++j)
            if (p.gens[i].name == p.gens[j].name)
                throw std::invalid_argument("presentation: duplicate generator '" + p.gens[i].name + "'");
    }
    for (const auto& r : p.relations) {
        if (r.is_zero()) throw std::invalid_argument("presentation: zero relation");
        if (!is_homogeneous(r))
            throw std::invalid_argument("presentation: inhomogeneous relation " + poly_text(r, p.gens));
        if (r.degree() < 2)
            throw std::invalid_argument("presentation: relation of degree < 2 (presentation not minimal)");
    }
}

// True when every relation is a single term (after which the monic leading
// words are the forbidden words of a monomial algebra).
template <class K>
bool is_monomial_presentation(const Presentation<K>& p) {
    for (const auto& r : p.relations)
        if (!is_monomial(r)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Free right modules and the extension alphabet.

struct FreeModuleShape {
    std::vector<int> shifts;  // degree shift per slot; slot s contributes z^shift
    std::size_t rank() const { return shifts.size(); }
};

template <class K>
struct FreeModuleElement {
    std::vector<Polynomial<K>> comp;  // one ring polynomial per slot
};

// A presentation together with slot letters for a free module over it; also
// the concrete form of the square-zero (trivial) extension R' = M (+) R. The
// flag that "module slots square to zero" is structural: multiplication of
// extension words annihilates the forbidden patterns, see mul_ext_word below.
template <class K>
struct TrivialExtensionPresentation {
    Presentation<K> base;
    FreeModuleShape shape;
    MonomialOrder ext_order;                     // over base letters + slot letters
    std::vector<Polynomial<K>> module_relations; // slot-led, extension encoding

    std::uint32_t slot_begin() const { return static_cast<std::uint32_t>(base.gens.size()); }
    std::uint32_t slot_letter(std::size_t s) const { return slot_begin() + static_cast<std::uint32_t>(s); }
    // display names for slot letters; '$' keeps them out of the identifier space
    std::vector<Generator> display_gens() const {
        std::vector<Generator> gs = base.gens;
        for (std::size_t s = 0; s < shape.rank(); ++s)
            gs.push_back(Generator{"$" + std::to_string(s), shape.shifts[s]});
        return gs;
    }
};

template <class K>
TrivialExtensionPresentation<K> trivial_extension(const Presentation<K>& base, FreeModuleShape shape) {
    TrivialExtensionPresentation<K> ext;
    ext.base = base;
    ext.shape = std::move(shape);
    ext.ext_order = base.order;
    std::uint32_t top = 0;
    for (auto r : base.order.rank) top = std::max(top, r + 1);
    std::size_t m = ext.shape.rank();
    for (std::size_t s = 0; s < m; ++s) {
        // slot 0 outranks slot 1 outranks ... outranks every base letter
        ext.ext_order.rank.push_back(top + static_cast<std::uint32_t>(m - 1 - s));
        if (ext.shape.shifts[s] < 0)
            throw std::invalid_argument("trivial_extension: negative slot shift");
        ext.ext_order.weight.push_back(ext.shape.shifts[s]);
    }
    return ext;
}

// Word legality in the extension: slot letters only in first position.
inline bool ext_word_ok(const Word& w, std::uint32_t slot_begin) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w.letters[i] >= slot_begin) return false;
    return true;
}

// Structural square-zero multiplication: concatenation, except that putting
// anything in front of a slot letter gives zero. Returns false for zero.
inline bool mul_ext_word(const Word& a, const Word& b, std::uint32_t slot_begin, Word& out) {
    if (!b.empty() && b.letters[0] >= slot_begin && !a.empty()) return false;
    out = concat(a, b);
    return true;
}

template <class K>
Polynomial<K> mul_word_right(const Polynomial<K>& p, const Word& w, std::uint32_t /*slot_begin*/) {
    // right multiplication never creates an illegal pattern when w is a base word
    Polynomial<K> r;
    r.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) r.terms.emplace_back(concat(t.first, w), t.second);
    return r;
}

template <class K>
Polynomial<K> mul_word_left(const Word& w, const Polynomial<K>& p, std::uint32_t slot_begin) {
    Polynomial<K> r;
    r.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) {
        Word u;
        if (mul_ext_word(w, t.first, slot_begin, u)) r.terms.emplace_back(std::move(u), t.second);
    }
    return r;  // dropping annihilated terms keeps descending sortedness
}

template <class K>
Polynomial<K> to_ext_poly(const FreeModuleElement<K>& e, const TrivialExtensionPresentation<K>& ext) {
    std::vector<std::pair<Word, K>> ts;
    for (std::size_t s = 0; s < e.comp.size(); ++s) {
        Word es = ext.ext_order.make_word({ext.slot_letter(s)});
        for (const auto& t : e.comp[s].terms) ts.emplace_back(concat(es, t.first), t.second);
    }
    return normalize_terms(std::move(ts), ext.ext_order);
}

template <class K>
FreeModuleElement<K> from_ext_poly(const Polynomial<K>& p, const TrivialExtensionPresentation<K>& ext) {
    FreeModuleElement<K> e;
    e.comp.resize(ext.shape.rank());
    for (const auto& t : p.terms) {
        if (t.first.empty() || t.first.letters[0] < ext.slot_begin())
            throw std::logic_error("from_ext_poly: term without slot letter");
        std::size_t s = t.first.letters[0] - ext.slot_begin();
        Word w = subword(t.first, 1, t.first.size() - 1, ext.base.order);
        e.comp[s].terms.emplace_back(std::move(w), t.second);
    }
    for (auto& c : e.comp) c = normalize_terms(std::move(c.terms), ext.base.order);
    return e;
}

}  // namespace ncalg

#endif

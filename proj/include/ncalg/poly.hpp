#ifndef NCALG_POLY_HPP
#define NCALG_POLY_HPP

// Noncommutative polynomials: term lists kept sorted descending under the
// presentation's monomial order, so the leading term is always terms.front().
// Arithmetic is by free functions that take the order explicitly; polynomials
// themselves are plain data.

#include <algorithm>
#include <cassert>
#include <vector>

#include "scalar.hpp"
#include "word.hpp"

namespace ncalg {

template <class K>
struct Polynomial {
    std::vector<std::pair<Word, K>> terms;  // sorted descending, no zero coefficients

    bool is_zero() const { return terms.empty(); }
    const Word& leading_word() const { return terms.front().first; }
    const K& leading_coeff() const { return terms.front().second; }
    int degree() const { return terms.empty() ? -1 : terms.front().first.degree; }

    bool operator==(const Polynomial&) const = default;
};

// Collapse an arbitrary term list into canonical form.
template <class K>
Polynomial<K> normalize_terms(std::vector<std::pair<Word, K>> ts, const MonomialOrder& ord) {
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return ord.compare(a.first, b.first) > 0;
    });
    Polynomial<K> p;
    for (auto& t : ts) {
        if (!p.terms.empty() && p.terms.back().first == t.first) {
            p.terms.back().second = p.terms.back().second + t.second;
            if (is_zero(p.terms.back().second)) p.terms.pop_back();
        } else if (!is_zero(t.second)) {
            p.terms.push_back(std::move(t));
        }
    }
    return p;
}

template <class K>
Polynomial<K> poly_monomial(Word w, K c) {
    Polynomial<K> p;
    if (!is_zero(c)) p.terms.emplace_back(std::move(w), std::move(c));
    return p;
}

// Merge-add; the workhorse of reduction.
template <class K>
Polynomial<K> add(const Polynomial<K>& a, const Polynomial<K>& b, const MonomialOrder& ord) {
    Polynomial<K> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = ord.compare(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            K s = a.terms[i].second + b.terms[j].second;
            if (!is_zero(s)) r.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <class K>
Polynomial<K> scale(const Polynomial<K>& a, const K& c) {
    Polynomial<K> r;
    if (is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.emplace_back(t.first, t.second * c);
    return r;
}

template <class K>
Polynomial<K> negate(const Polynomial<K>& a) {
    Polynomial<K> r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.emplace_back(t.first, -t.second);
    return r;
}

template <class K>
Polynomial<K> sub(const Polynomial<K>& a, const Polynomial<K>& b, const MonomialOrder& ord) {
    return add(a, negate(b), ord);
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& a) {
    if (a.is_zero()) return a;
    return scale(a, inverse(a.leading_coeff()));
}

// Words of a product of materialized words stay sorted under a multiplicative
// order, so u * p and p * u need no re-sort, only the same merge discipline.
// General products go through normalize_terms.
template <class K>
Polynomial<K> mul(const Polynomial<K>& a, const Polynomial<K>& b, const MonomialOrder& ord) {
    std::vector<std::pair<Word, K>> ts;
    ts.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            ts.emplace_back(concat(ta.first, tb.first), ta.second * tb.second);
    return normalize_terms(std::move(ts), ord);
}

template <class K>
bool is_monomial(const Polynomial<K>& a) { return a.terms.size() == 1; }

// All terms share one total degree (module-shifted degrees are baked into the
// word degrees, so this covers module elements too).
template <class K>
bool is_homogeneous(const Polynomial<K>& a) {
    for (const auto& t : a.terms)
        if (t.first.degree != a.terms.front().first.degree) return false;
    return true;
}

}  // namespace ncalg

#endif

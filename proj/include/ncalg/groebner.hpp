#ifndef NCALG_GROEBNER_HPP
#define NCALG_GROEBNER_HPP

// Degree-truncated Groebner bases for two-sided ideals and for right
// submodules of free modules (via the slot-letter encoding from
// presentation.hpp). One completion engine serves both: the only differences
// are the divisibility rule (factor vs prefix) and which reducers are
// ambient.
//
// Truncation contract: all compositions whose result degree is <= D have been
// reduced to zero, so leading terms, normal forms and graded counts are exact
// in degrees <= D. complete_flag is set only when no composition of retained
// elements has result degree > D (compositions of two monomials vanish
// identically and never count against completeness).

#include <map>
#include <optional>
#include <set>

#include "presentation.hpp"

namespace ncalg {

struct SoundnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BasisKind { two_sided, right_module };

template <class K>
struct GroebnerBasis {
    BasisKind kind = BasisKind::two_sided;
    TrivialExtensionPresentation<K> ext;   // shape empty for two-sided bases
    std::vector<Polynomial<K>> elems;      // monic, inter-reduced, sorted by (degree, leading word)
    std::vector<Polynomial<K>> ambient;    // algebra GB backing a right-module basis
    int soundness_degree = 0;
    bool complete_flag = false;

    const Presentation<K>& pres() const { return ext.base; }
    const MonomialOrder& ord() const { return ext.ext_order; }
    std::uint32_t slot_begin() const { return ext.slot_begin(); }
};

struct ReductionStep {
    bool from_ambient = false;  // module reductions may use the ambient algebra basis
    std::size_t elem = 0;       // index into elems (or ambient when from_ambient)
    Word left, right;           // rewritten term was left * LT(g) * right
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

// ---------------------------------------------------------------------------
// Reduction. A reducer view decouples NF from where the basis lives so the
// completion loop and the public entry points share one implementation.

namespace detail {

template <class K>
struct ReducerView {
    const MonomialOrder* ord;
    std::uint32_t slot_begin;
    // prefix-divisibility reducers (module elements); nullptr entries are dead
    std::vector<const Polynomial<K>*> prefix_elems;
    // factor-divisibility reducers (two-sided elements)
    std::vector<const Polynomial<K>*> factor_elems;
};

struct ReducerHit {
    bool from_factor = false;
    std::size_t idx = 0;
    std::size_t pos = 0;  // occurrence position of the leading word
};

template <class K>
std::optional<ReducerHit> find_reducer(const Word& w, const ReducerView<K>& view) {
    for (std::size_t i = 0; i < view.prefix_elems.size(); ++i) {
        const Polynomial<K>* m = view.prefix_elems[i];
        if (m && is_prefix(m->leading_word(), w)) return ReducerHit{false, i, 0};
    }
    for (std::size_t i = 0; i < view.factor_elems.size(); ++i) {
        const Polynomial<K>* g = view.factor_elems[i];
        if (!g) continue;
        std::size_t pos = find_subword(g->leading_word(), w);
        if (pos != std::string::npos) return ReducerHit{true, i, pos};
    }
    return std::nullopt;
}

// Deterministic normal form: always rewrite the order-largest reducible word
// (terms are sorted, so the first reducible term in the list), using the first
// matching element in stored order at its leftmost occurrence.
template <class K>
Polynomial<K> normal_form_view(Polynomial<K> p, const ReducerView<K>& view, ReductionTrace* trace) {
    const MonomialOrder& ord = *view.ord;
    for (;;) {
        std::optional<ReducerHit> hit;
        std::size_t ti = 0;
        for (; ti < p.terms.size(); ++ti) {
            hit = find_reducer(p.terms[ti].first, view);
            if (hit) break;
        }
        if (!hit) return p;
        const Polynomial<K>& g =
            hit->from_factor ? *view.factor_elems[hit->idx] : *view.prefix_elems[hit->idx];
        const Word& w = p.terms[ti].first;
        const K c = p.terms[ti].second;  // g is monic
        std::size_t len = g.leading_word().size();
        Word left = subword(w, 0, hit->pos, ord);
        Word right = subword(w, hit->pos + len, w.size() - hit->pos - len, ord);
        if (trace) trace->steps.push_back(ReductionStep{hit->from_factor, hit->idx, left, right});
        Polynomial<K> repl = mul_word_left(left, mul_word_right(g, right, view.slot_begin), view.slot_begin);
        p = sub(p, scale(repl, c), ord);
    }
}

template <class K>
ReducerView<K> view_of(const GroebnerBasis<K>& gb) {
    ReducerView<K> v{&gb.ord(), gb.slot_begin(), {}, {}};
    if (gb.kind == BasisKind::two_sided) {
        for (const auto& e : gb.elems) v.factor_elems.push_back(&e);
    } else {
        for (const auto& e : gb.elems) v.prefix_elems.push_back(&e);
        for (const auto& g : gb.ambient) v.factor_elems.push_back(&g);
    }
    return v;
}

}  // namespace detail

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb,
                          ReductionTrace* trace = nullptr) {
    if (!gb.complete_flag && f.degree() > gb.soundness_degree)
        throw SoundnessError("normal_form: degree " + std::to_string(f.degree()) +
                             " exceeds soundness degree " + std::to_string(gb.soundness_degree));
    return detail::normal_form_view(f, detail::view_of(gb), trace);
}

// Replays a recorded trace against the same basis; used to audit reductions.
template <class K>
Polynomial<K> replay_trace(const Polynomial<K>& f, const ReductionTrace& trace,
                           const GroebnerBasis<K>& gb) {
    const MonomialOrder& ord = gb.ord();
    Polynomial<K> p = f;
    for (const auto& st : trace.steps) {
        const Polynomial<K>& g = st.from_ambient && gb.kind == BasisKind::right_module
                                     ? gb.ambient[st.elem]
                                     : gb.elems[st.elem];
        Word target = concat(st.left, concat(g.leading_word(), st.right));
        K c{};
        bool found = false;
        for (const auto& t : p.terms)
            if (t.first == target) { c = t.second; found = true; break; }
        if (!found) throw std::logic_error("replay_trace: rewritten term missing");
        Polynomial<K> repl =
            mul_word_left(st.left, mul_word_right(g, st.right, gb.slot_begin()), gb.slot_begin());
        p = sub(p, scale(repl, c), ord);
    }
    return p;
}

template <class K>
bool ideal_membership(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    return normal_form(f, gb).is_zero();
}

// Membership of an algebra element in a right ideal, given the rank-one
// right-module basis of that ideal: encode into the module, then reduce.
template <class K>
bool right_ideal_membership(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    if (gb.kind != BasisKind::right_module || gb.ext.shape.rank() != 1 ||
        gb.ext.shape.shifts[0] != 0)
        throw std::invalid_argument("right_ideal_membership: needs a rank-one right-ideal basis");
    FreeModuleElement<K> e;
    e.comp = {f};
    return normal_form(to_ext_poly(e, gb.ext), gb).is_zero();
}

// ---------------------------------------------------------------------------
// Completion.

namespace detail {

template <class K>
struct CompletionState {
    const TrivialExtensionPresentation<K>* ext;
    BasisKind kind;
    int bound;
    std::vector<Polynomial<K>> ambient;  // fixed two-sided reducers (module mode)

    struct Elem {
        Polynomial<K> f;
        bool alive = true;
        bool monomial = false;
    };
    std::vector<Elem> elems;

    // Work queue, processed in ascending result degree with a canonical
    // tiebreak. Seeds (kind 0) are inputs or displaced elements awaiting
    // re-reduction; compositions are kind 1 with their pair and overlap length.
    using Key = std::tuple<int, int, std::size_t, std::size_t, std::size_t>;
    std::set<Key> queue;
    std::map<std::size_t, Polynomial<K>> seed_payload;
    std::size_t seed_seq = 0;

    const MonomialOrder& ord() const { return ext->ext_order; }
    std::uint32_t slot_begin() const { return ext->slot_begin(); }

    ReducerView<K> live_view() const {
        ReducerView<K> v{&ord(), slot_begin(), {}, {}};
        if (kind == BasisKind::two_sided) {
            for (const auto& e : elems) v.factor_elems.push_back(e.alive ? &e.f : nullptr);
        } else {
            for (const auto& e : elems) v.prefix_elems.push_back(e.alive ? &e.f : nullptr);
            for (const auto& g : ambient) v.factor_elems.push_back(&g);
        }
        return v;
    }

    void enqueue_seed(Polynomial<K> f) {
        if (f.is_zero()) return;
        if (!is_homogeneous(f))
            throw std::invalid_argument("completion: inhomogeneous input " );
        int d = f.degree();
        if (d > bound) return;  // cannot contribute at or below the bound
        queue.insert(Key{d, 0, seed_seq, 0, 0});
        seed_payload.emplace(seed_seq, std::move(f));
        ++seed_seq;
    }

    // Compositions of h (index i) against element j. For two-sided bases both
    // (i,j) and (j,i) matter and are enqueued by the caller; for module bases
    // i is a module element and j indexes the ambient basis.
    void enqueue_pairs(std::size_t i) {
        if (kind == BasisKind::two_sided) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                if (!elems[j].alive) continue;
                if (elems[i].monomial && elems[j].monomial) continue;  // S-polynomial is 0
                enqueue_overlaps(i, j);
                if (i != j) enqueue_overlaps(j, i);
            }
        } else {
            for (std::size_t j = 0; j < ambient.size(); ++j) {
                if (elems[i].monomial && ambient[j].terms.size() == 1) continue;
                enqueue_overlaps(i, j);
            }
        }
    }

    // Overlap: a proper suffix of LT(i)'s word equals a proper prefix of the
    // right-hand leading word. For module elements the suffix ranges over the
    // base part only (and may be all of it).
    void enqueue_overlaps(std::size_t i, std::size_t j) {
        const Word& wi = elems[i].f.leading_word();
        const Word& wj = kind == BasisKind::two_sided ? elems[j].f.leading_word()
                                                      : ambient[j].leading_word();
        // module leading terms start with a slot letter, which never overlaps
        std::size_t base_len = kind == BasisKind::right_module ? wi.size() - 1 : wi.size();
        std::size_t maxc = std::min(base_len, wj.size() - 1);
        for (std::size_t c = 1; c <= maxc; ++c) {
            if (kind == BasisKind::two_sided && c >= wi.size()) break;
            bool match = true;
            for (std::size_t t = 0; t < c; ++t) {
                if (wi.letters[wi.size() - c + t] != wj.letters[t]) { match = false; break; }
            }
            if (!match) continue;
            // result degree: LT(i) extended by the tail of wj
            int deg = wi.degree;
            for (std::size_t t = c; t < wj.size(); ++t) deg += ord().weight[wj.letters[t]];
            if (deg <= bound) queue.insert(Key{deg, 1, i, j, c});
        }
    }

    Polynomial<K> s_polynomial(std::size_t i, std::size_t j, std::size_t c) {
        const Polynomial<K>& fi = elems[i].f;
        const Polynomial<K>& gj =
            kind == BasisKind::two_sided ? elems[j].f : ambient[j];
        const Word& wi = fi.leading_word();
        const Word& wj = gj.leading_word();
        Word v = subword(wj, c, wj.size() - c, ord());
        Word u = subword(wi, 0, wi.size() - c, ord());
        Polynomial<K> lhs = mul_word_right(fi, v, slot_begin());
        Polynomial<K> rhs = mul_word_left(u, gj, slot_begin());
        return sub(lhs, rhs, ord());
    }

    bool divides_leading(const Polynomial<K>& h, const Polynomial<K>& e) const {
        if (kind == BasisKind::two_sided)
            return find_subword(h.leading_word(), e.leading_word()) != std::string::npos;
        return is_prefix(h.leading_word(), e.leading_word());
    }

    void insert(Polynomial<K> h) {
        h = monic(std::move(h));
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (!elems[i].alive) continue;
            if (divides_leading(h, elems[i].f)) {
                elems[i].alive = false;
                enqueue_seed(elems[i].f);  // strictly higher degree, reprocessed later
            }
        }
        std::size_t id = elems.size();
        elems.push_back(Elem{std::move(h), true, false});
        elems[id].monomial = is_monomial(elems[id].f);
        enqueue_pairs(id);
    }

    void run() {
        while (!queue.empty()) {
            Key k = *queue.begin();
            queue.erase(queue.begin());
            auto [deg, kindbit, a, b, c] = k;
            Polynomial<K> s;
            if (kindbit == 0) {
                auto it = seed_payload.find(a);
                s = std::move(it->second);
                seed_payload.erase(it);
            } else {
                if (!elems[a].alive) continue;
                if (kind == BasisKind::two_sided && !elems[b].alive) continue;
                s = s_polynomial(a, b, c);
            }
            Polynomial<K> h = normal_form_view(std::move(s), live_view(), nullptr);
            if (!h.is_zero()) insert(std::move(h));
        }
    }

    // Canonical output: survivors sorted by (degree, leading word), tails
    // reduced against the whole basis to a fixpoint.
    std::vector<Polynomial<K>> finish() {
        std::vector<Polynomial<K>> out;
        for (auto& e : elems)
            if (e.alive) out.push_back(std::move(e.f));
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
            if (x.degree() != y.degree()) return x.degree() < y.degree();
            return ord().less(x.leading_word(), y.leading_word());
        });
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < out.size(); ++i) {
                Polynomial<K> tail = out[i];
                tail.terms.erase(tail.terms.begin());
                ReducerView<K> v{&ord(), slot_begin(), {}, {}};
                if (kind == BasisKind::two_sided) {
                    for (const auto& e : out) v.factor_elems.push_back(&e);
                } else {
                    for (const auto& e : out) v.prefix_elems.push_back(&e);
                    for (const auto& g : ambient) v.factor_elems.push_back(&g);
                }
                Polynomial<K> red = normal_form_view(tail, v, nullptr);
                if (!(red == tail)) {
                    changed = true;
                    Polynomial<K> lt = poly_monomial(out[i].leading_word(), out[i].leading_coeff());
                    out[i] = add(lt, red, ord());
                }
            }
        }
        return out;
    }

    // After completion: does any composition of retained elements exceed the
    // bound (monomial pairs excepted)? Decides complete_flag.
    bool overlaps_exceed_bound(const std::vector<Polynomial<K>>& basis) const {
        auto overlap_beyond = [&](const Polynomial<K>& fi, const Polynomial<K>& gj,
                                  bool module_left) {
            const Word& wi = fi.leading_word();
            const Word& wj = gj.leading_word();
            std::size_t base_len = module_left ? wi.size() - 1 : wi.size();
            std::size_t maxc = std::min(base_len, wj.size() - 1);
            for (std::size_t c = 1; c <= maxc; ++c) {
                if (!module_left && c >= wi.size()) break;
                bool match = true;
                for (std::size_t t = 0; t < c; ++t)
                    if (wi.letters[wi.size() - c + t] != wj.letters[t]) { match = false; break; }
                if (!match) continue;
                int deg = wi.degree;
                for (std::size_t t = c; t < wj.size(); ++t) deg += ord().weight[wj.letters[t]];
                if (deg > bound) return true;
            }
            return false;
        };
        if (kind == BasisKind::two_sided) {
            for (const auto& f : basis)
                for (const auto& g : basis) {
                    if (is_monomial(f) && is_monomial(g)) continue;
                    if (overlap_beyond(f, g, false)) return true;
                }
        } else {
            for (const auto& f : basis)
                for (const auto& g : ambient) {
                    if (is_monomial(f) && is_monomial(g)) continue;
                    if (overlap_beyond(f, g, true)) return true;
                }
        }
        return false;
    }
};

}  // namespace detail

template <class K>
GroebnerBasis<K> complete_two_sided(const Presentation<K>& P, int D) {
    detail::CompletionState<K> st;
    TrivialExtensionPresentation<K> ext = trivial_extension(P, FreeModuleShape{});
    st.ext = &ext;
    st.kind = BasisKind::two_sided;
    st.bound = D;
    for (const auto& r : P.relations) st.enqueue_seed(r);
    st.run();
    GroebnerBasis<K> gb;
    gb.kind = BasisKind::two_sided;
    gb.ext = ext;
    gb.elems = st.finish();
    gb.soundness_degree = D;
    gb.complete_flag = !st.overlaps_exceed_bound(gb.elems);
    return gb;
}

// gens are slot-led polynomials in the extension encoding. The ambient basis
// must be sound at least to D (or complete).
template <class K>
GroebnerBasis<K> complete_module(const TrivialExtensionPresentation<K>& ext,
                                 const std::vector<Polynomial<K>>& gens, int D,
                                 const GroebnerBasis<K>& ambient_gb) {
    if (!ambient_gb.complete_flag && ambient_gb.soundness_degree < D)
        throw SoundnessError("complete_module: ambient basis sound only to " +
                             std::to_string(ambient_gb.soundness_degree));
    detail::CompletionState<K> st;
    st.ext = &ext;
    st.kind = BasisKind::right_module;
    st.bound = D;
    st.ambient = ambient_gb.elems;
    for (const auto& g : gens) {
        for (const auto& t : g.terms)
            if (t.first.empty() || t.first.letters[0] < ext.slot_begin() ||
                !ext_word_ok(t.first, ext.slot_begin()))
                throw std::invalid_argument("complete_module: generator not slot-led");
        st.enqueue_seed(g);
    }
    for (const auto& r : ext.module_relations) st.enqueue_seed(r);
    st.run();
    GroebnerBasis<K> gb;
    gb.kind = BasisKind::right_module;
    gb.ext = ext;
    gb.elems = st.finish();
    gb.ambient = ambient_gb.elems;
    gb.soundness_degree = D;
    gb.complete_flag = ambient_gb.complete_flag && !st.overlaps_exceed_bound(gb.elems);
    return gb;
}

// Right ideals are rank-one free modules with shift zero.
template <class K>
GroebnerBasis<K> complete_right(const Presentation<K>& P, const std::vector<Polynomial<K>>& ideal_gens,
                                int D, const GroebnerBasis<K>& ambient_gb) {
    TrivialExtensionPresentation<K> ext = trivial_extension(P, FreeModuleShape{{0}});
    std::vector<Polynomial<K>> gens;
    for (const auto& g : ideal_gens) {
        FreeModuleElement<K> e;
        e.comp = {g};
        gens.push_back(to_ext_poly(e, ext));
    }
    return complete_module(ext, gens, D, ambient_gb);
}

// ---------------------------------------------------------------------------
// Graded counting. Normal words are enumerated by extension, pruning as soon
// as a leading word appears as a suffix; costs are proportional to the number
// of normal words, which is what the callers consume anyway.

namespace detail {

template <class K>
std::vector<Word> leading_words(const GroebnerBasis<K>& gb) {
    std::vector<Word> lws;
    for (const auto& e : gb.elems) lws.push_back(e.leading_word());
    return lws;
}

inline bool creates_forbidden_suffix(const std::vector<std::uint32_t>& letters,
                                     const std::vector<Word>& forbidden) {
    for (const auto& f : forbidden) {
        if (f.size() > letters.size()) continue;
        bool hit = true;
        std::size_t off = letters.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            if (letters[off + i] != f.letters[i]) { hit = false; break; }
        if (hit) return true;
    }
    return false;
}

// Visit every word over base letters avoiding the forbidden factors, up to
// total degree D. visit(letters, degree) is called for each (including the
// empty word).
template <class Visit>
void walk_normal_words(std::uint32_t nletters, const std::vector<int>& weight,
                       const std::vector<Word>& forbidden, int D, Visit&& visit) {
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, int deg) -> void {
        visit(cur, deg);
        for (std::uint32_t g = 0; g < nletters; ++g) {
            int nd = deg + weight[g];
            if (nd > D) continue;
            cur.push_back(g);
            if (!creates_forbidden_suffix(cur, forbidden)) self(self, nd);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// dim of the algebra in degrees 0..D; requires soundness >= D.
template <class K>
std::vector<mpz_class> algebra_dims(const GroebnerBasis<K>& gb, int D) {
    if (gb.kind != BasisKind::two_sided) throw std::invalid_argument("algebra_dims: need a two-sided basis");
    if (!gb.complete_flag && gb.soundness_degree < D)
        throw SoundnessError("algebra_dims: basis sound only to " + std::to_string(gb.soundness_degree));
    std::vector<mpz_class> dims(D + 1, 0);
    auto lws = detail::leading_words(gb);
    detail::walk_normal_words(static_cast<std::uint32_t>(gb.pres().gens.size()), gb.ord().weight, lws, D,
                              [&](const std::vector<std::uint32_t>&, int d) { dims[d] += 1; });
    return dims;
}

// Normal words of the algebra, listed per degree 0..D.
template <class K>
std::vector<std::vector<Word>> normal_words(const GroebnerBasis<K>& gb, int D) {
    if (!gb.complete_flag && gb.soundness_degree < D)
        throw SoundnessError("normal_words: basis sound only to " + std::to_string(gb.soundness_degree));
    std::vector<std::vector<Word>> words(D + 1);
    auto lws = detail::leading_words(gb);
    detail::walk_normal_words(static_cast<std::uint32_t>(gb.pres().gens.size()), gb.ord().weight, lws, D,
                              [&](const std::vector<std::uint32_t>& ls, int d) {
                                  words[d].push_back(gb.ord().make_word(ls));
                              });
    return words;
}

// dim in degrees 0..D of the quotient (free module on ext's slots) / (module
// generated by module_gb), using that a slot word is in the submodule exactly
// when some basis leading term is a prefix of it.
template <class K>
std::vector<mpz_class> module_quotient_dims(const GroebnerBasis<K>& module_gb, int D) {
    if (module_gb.kind != BasisKind::right_module)
        throw std::invalid_argument("module_quotient_dims: need a right-module basis");
    if (!module_gb.complete_flag && module_gb.soundness_degree < D)
        throw SoundnessError("module_quotient_dims: basis sound only to " +
                             std::to_string(module_gb.soundness_degree));
    const auto& ext = module_gb.ext;
    std::vector<mpz_class> dims(D + 1, 0);
    // ambient normal words grouped by degree, then per slot discard those with
    // a basis leading term as prefix
    std::vector<Word> alg_lws;
    for (const auto& g : module_gb.ambient) alg_lws.push_back(g.leading_word());
    for (std::size_t s = 0; s < ext.shape.rank(); ++s) {
        int shift = ext.shape.shifts[s];
        if (shift > D) continue;
        std::vector<Word> slot_prefixes;  // base parts of leading terms in slot s
        for (const auto& e : module_gb.elems) {
            const Word& lt = e.leading_word();
            if (lt.letters[0] == ext.slot_letter(s))
                slot_prefixes.push_back(subword(lt, 1, lt.size() - 1, ext.base.order));
        }
        detail::walk_normal_words(
            static_cast<std::uint32_t>(ext.base.gens.size()), ext.base.order.weight, alg_lws, D - shift,
            [&](const std::vector<std::uint32_t>& ls, int d) {
                for (const auto& p : slot_prefixes) {
                    if (p.size() > ls.size()) continue;
                    bool pref = true;
                    for (std::size_t i = 0; i < p.size(); ++i)
                        if (ls[i] != p.letters[i]) { pref = false; break; }
                    if (pref) return;
                }
                dims[d + shift] += 1;
            });
    }
    return dims;
}

// dim of the submodule itself: free module minus quotient.
template <class K>
std::vector<mpz_class> submodule_dims(const GroebnerBasis<K>& module_gb,
                                      const GroebnerBasis<K>& algebra_gb, int D) {
    std::vector<mpz_class> adims = algebra_dims(algebra_gb, D);
    std::vector<mpz_class> q = module_quotient_dims(module_gb, D);
    std::vector<mpz_class> dims(D + 1, 0);
    for (std::size_t s = 0; s < module_gb.ext.shape.rank(); ++s) {
        int shift = module_gb.ext.shape.shifts[s];
        for (int d = shift; d <= D; ++d) dims[d] += adims[d - shift];
    }
    for (int d = 0; d <= D; ++d) dims[d] -= q[d];
    return dims;
}

// ---------------------------------------------------------------------------
// Minimal generating sets. Greedy in ascending (degree, leading word, input
// position): an element is kept exactly when it is not in the submodule
// generated by those kept before it, which for homogeneous data is graded
// (Nakayama) minimality.

template <class K>
std::vector<std::size_t> minimal_generator_indices(const TrivialExtensionPresentation<K>& ext,
                                                   const std::vector<Polynomial<K>>& cands,
                                                   const GroebnerBasis<K>& ambient_gb) {
    std::vector<std::size_t> order_idx;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (cands[i].is_zero()) continue;
        order_idx.push_back(i);
    }
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        if (cands[a].degree() != cands[b].degree()) return cands[a].degree() < cands[b].degree();
        int c = ext.ext_order.compare(cands[a].leading_word(), cands[b].leading_word());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<std::size_t> kept;
    std::vector<Polynomial<K>> kept_polys;
    for (std::size_t i : order_idx) {
        bool redundant = false;
        if (!kept_polys.empty()) {
            GroebnerBasis<K> gb = complete_module(ext, kept_polys, cands[i].degree(), ambient_gb);
            redundant = normal_form(cands[i], gb).is_zero();
        }
        if (!redundant) {
            kept.push_back(i);
            kept_polys.push_back(cands[i]);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Module-element front end (the common call shape).
template <class K>
std::vector<FreeModuleElement<K>> minimize_generators(const TrivialExtensionPresentation<K>& ext,
                                                      const std::vector<FreeModuleElement<K>>& cands,
                                                      const GroebnerBasis<K>& ambient_gb) {
    std::vector<Polynomial<K>> polys;
    for (const auto& c : cands) polys.push_back(to_ext_poly(c, ext));
    auto kept = minimal_generator_indices(ext, polys, ambient_gb);
    std::vector<FreeModuleElement<K>> out;
    for (auto i : kept) out.push_back(cands[i]);
    return out;
}

// Ring-element variant for right ideals.
template <class K>
std::vector<Polynomial<K>> minimize_ideal_generators(const Presentation<K>& P,
                                                     const std::vector<Polynomial<K>>& cands,
                                                     const GroebnerBasis<K>& ambient_gb) {
    TrivialExtensionPresentation<K> ext = trivial_extension(P, FreeModuleShape{{0}});
    std::vector<Polynomial<K>> polys;
    for (const auto& c : cands) {
        FreeModuleElement<K> e;
        e.comp = {c};
        polys.push_back(to_ext_poly(e, ext));
    }
    auto kept = minimal_generator_indices(ext, polys, ambient_gb);
    std::vector<Polynomial<K>> out;
    for (auto i : kept) out.push_back(cands[i]);
    return out;
}

// Two-sided minimality of a relation list (used to validate presentations).
template <class K>
std::vector<Polynomial<K>> minimize_relations(const Presentation<K>& P) {
    std::vector<std::size_t> order_idx(P.relations.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& ra = P.relations[a];
        const auto& rb = P.relations[b];
        if (ra.degree() != rb.degree()) return ra.degree() < rb.degree();
        int c = P.order.compare(ra.leading_word(), rb.leading_word());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial<K>> kept;
    for (std::size_t i : order_idx) {
        const auto& r = P.relations[i];
        if (r.is_zero()) continue;
        bool redundant = false;
        if (!kept.empty()) {
            Presentation<K> sub = P;
            sub.relations = kept;
            GroebnerBasis<K> gb = complete_two_sided(sub, r.degree());
            redundant = normal_form(r, gb).is_zero();
        }
        if (!redundant) kept.push_back(r);
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Verification: re-derives what completion promised. Used on cache loads and
// in tests.

template <class K>
bool verify_basis(const GroebnerBasis<K>& gb, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    for (const auto& e : gb.elems) {
        if (e.is_zero()) return fail("zero element");
        if (!is_homogeneous(e)) return fail("inhomogeneous element");
        K lc = e.leading_coeff();
        K one = lc * inverse(lc);
        if (!(e.leading_coeff() == one)) return fail("element not monic");
    }
    detail::CompletionState<K> st;
    st.ext = &gb.ext;
    st.kind = gb.kind;
    st.bound = gb.soundness_degree;
    st.ambient = gb.ambient;
    for (const auto& e : gb.elems) st.elems.push_back({e, true, is_monomial(e)});
    // leading terms form an antichain and tails are normal
    for (std::size_t i = 0; i < gb.elems.size(); ++i) {
        for (std::size_t j = 0; j < gb.elems.size(); ++j) {
            if (i == j) continue;
            if (st.divides_leading(gb.elems[i], gb.elems[j]))
                return fail("leading terms not inter-reduced");
        }
        Polynomial<K> tail = gb.elems[i];
        tail.terms.erase(tail.terms.begin());
        if (!(detail::normal_form_view(tail, st.live_view(), nullptr) == tail))
            return fail("tail not reduced");
    }
    // every composition within the bound reduces to zero
    for (std::size_t i = 0; i < gb.elems.size(); ++i) st.enqueue_pairs(i);
    while (!st.queue.empty()) {
        auto k = *st.queue.begin();
        st.queue.erase(st.queue.begin());
        auto [deg, kindbit, a, b, c] = k;
        if (kindbit != 1) continue;
        Polynomial<K> s = st.s_polynomial(a, b, c);
        if (!detail::normal_form_view(s, st.live_view(), nullptr).is_zero())
            return fail("composition does not reduce to zero at degree " + std::to_string(deg));
    }
    if (gb.complete_flag && st.overlaps_exceed_bound([&] {
            std::vector<Polynomial<K>> v;
            for (auto& e : st.elems) v.push_back(e.f);
            return v;
        }()))
        return fail("complete flag set but compositions exceed the bound");
    return true;
}

}  // namespace ncalg

#endif

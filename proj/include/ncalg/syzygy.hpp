#ifndef NCALG_SYZYGY_HPP
#define NCALG_SYZYGY_HPP

// Homogeneous linear equations a_1 x_1 + ... + a_n x_n = 0 over a graded
// quotient algebra, with the coefficients a_i taken in the algebra itself or
// in a free right module over it. The solution module is attacked by lifting:
// work in the free module (M-slots + one cofactor slot per coefficient) and
// complete the submodule generated by (a_i, e_i). Because M-slots dominate
// the cofactor slots in the module order, the basis elements whose leading
// term falls in a cofactor slot have zero M-part, and their cofactor tuples
// form a basis of the solution module, exhaustive through the completion
// bound.
//
// Built on top of that: colon ideals and annihilators, intersections of
// right ideals, iterated syzygies (minimal-resolution degrees m_i), the
// third-homology probe that splits each relation by its first letter, and a
// stochastic coherence probe over monomial and random polynomial ideals.

#include <random>

#include "groebner.hpp"

namespace ncalg {

// degree of a homogeneous module element under the shape's shifts; -1 for zero
template <class K>
int module_element_degree(const FreeModuleElement<K>& e, const FreeModuleShape& shape) {
    int d = -1;
    for (std::size_t s = 0; s < e.comp.size(); ++s) {
        if (e.comp[s].is_zero()) continue;
        if (!is_homogeneous(e.comp[s]))
            throw std::invalid_argument("module element: inhomogeneous component");
        int ds = shape.shifts[s] + e.comp[s].degree();
        if (d == -1) d = ds;
        else if (d != ds)
            throw std::invalid_argument("module element: components of unequal total degree");
    }
    return d;
}

template <class K>
struct SyzygyBasis {
    FreeModuleShape tuple_shape;        // one slot per kept coefficient, shift = its degree
    std::vector<std::size_t> coeff_index;  // positions of the kept (nonzero) input coefficients
    std::vector<FreeModuleElement<K>> generators;  // minimal, ascending degree
    std::vector<int> degrees;
    int soundness_degree = 0;
    int exhaustive_below = 0;  // generators provably complete through this degree

    // m(solution module): max generator degree; -1 when the module is zero
    int max_degree() const { return degrees.empty() ? -1 : degrees.back(); }
};

// ---------------------------------------------------------------------------
// The solver.

template <class K>
SyzygyBasis<K> solve_linear_equation(const GroebnerBasis<K>& ambient,
                                     const FreeModuleShape& coeff_shape,
                                     const std::vector<FreeModuleElement<K>>& coeffs_in, int D) {
    if (ambient.kind != BasisKind::two_sided)
        throw std::invalid_argument("solve: ambient basis must be two-sided");
    if (!ambient.complete_flag && ambient.soundness_degree < D)
        throw SoundnessError("solve: ambient basis sound only to " +
                             std::to_string(ambient.soundness_degree));
    const Presentation<K>& P = ambient.pres();

    SyzygyBasis<K> out;
    out.soundness_degree = D;
    out.exhaustive_below = D;

    // reduce coefficients to normal form; zero ones contribute nothing
    std::vector<FreeModuleElement<K>> coeffs;
    for (std::size_t i = 0; i < coeffs_in.size(); ++i) {
        if (coeffs_in[i].comp.size() != coeff_shape.rank())
            throw std::invalid_argument("solve: coefficient arity mismatch");
        FreeModuleElement<K> nf;
        nf.comp.resize(coeff_shape.rank());
        for (std::size_t s = 0; s < coeff_shape.rank(); ++s)
            nf.comp[s] = normal_form(coeffs_in[i].comp[s], ambient);
        int di = module_element_degree(nf, coeff_shape);
        if (di < 0) continue;  // dropped
        out.coeff_index.push_back(i);
        out.tuple_shape.shifts.push_back(di);
        coeffs.push_back(std::move(nf));
    }
    if (coeffs.empty()) return out;

    // lifted module: M-slots first (dominating), then one cofactor slot each
    std::size_t mrank = coeff_shape.rank();
    FreeModuleShape lifted = coeff_shape;
    for (int s : out.tuple_shape.shifts) lifted.shifts.push_back(s);
    auto ext = trivial_extension(P, lifted);
    std::vector<Polynomial<K>> lifted_gens;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        FreeModuleElement<K> g;
        g.comp.resize(lifted.rank());
        for (std::size_t s = 0; s < mrank; ++s) g.comp[s] = coeffs[i].comp[s];
        g.comp[mrank + i] =
            poly_monomial(P.order.make_word({}), scalar_from_int<K>(1, P.field));
        lifted_gens.push_back(to_ext_poly(g, ext));
    }
    GroebnerBasis<K> gb = complete_module(ext, lifted_gens, D, ambient);

    // cofactor-led elements are the solutions
    auto extF = trivial_extension(P, out.tuple_shape);
    std::vector<Polynomial<K>> candidates;  // encoded over extF
    for (const auto& e : gb.elems) {
        std::size_t slot = e.leading_word().letters[0] - ext.slot_begin();
        if (slot < mrank) continue;
        FreeModuleElement<K> full = from_ext_poly(e, ext);
        for (std::size_t s = 0; s < mrank; ++s)
            if (!full.comp[s].is_zero())
                throw std::logic_error("solve: cofactor-led element with nonzero image part");
        FreeModuleElement<K> tup;
        tup.comp.assign(full.comp.begin() + static_cast<std::ptrdiff_t>(mrank), full.comp.end());
        candidates.push_back(to_ext_poly(tup, extF));
    }
    auto kept = minimal_generator_indices(extF, candidates, ambient);
    for (std::size_t idx : kept) {
        FreeModuleElement<K> tup = from_ext_poly(candidates[idx], extF);
        int d = module_element_degree(tup, out.tuple_shape);
        // audit: the tuple really solves the equation
        for (std::size_t s = 0; s < mrank; ++s) {
            Polynomial<K> acc;
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                acc = add(acc, mul(coeffs[i].comp[s], tup.comp[i], P.order), P.order);
            if (!normal_form(acc, ambient).is_zero())
                throw std::logic_error("solve: generator fails to reduce to zero");
        }
        out.generators.push_back(std::move(tup));
        out.degrees.push_back(d);
    }
    // ascending degree (stable on the basis order)
    std::vector<std::size_t> ord(out.generators.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::size_t a, std::size_t b) { return out.degrees[a] < out.degrees[b]; });
    std::vector<FreeModuleElement<K>> gs;
    std::vector<int> ds;
    for (std::size_t i : ord) {
        gs.push_back(std::move(out.generators[i]));
        ds.push_back(out.degrees[i]);
    }
    out.generators = std::move(gs);
    out.degrees = std::move(ds);
    return out;
}

// ring-coefficient form: coefficients in R itself
template <class K>
SyzygyBasis<K> solve_linear_equation(const GroebnerBasis<K>& ambient,
                                     const std::vector<Polynomial<K>>& coeffs, int D) {
    FreeModuleShape shape{{0}};
    std::vector<FreeModuleElement<K>> lifted;
    for (const auto& a : coeffs) {
        FreeModuleElement<K> e;
        e.comp = {a};
        lifted.push_back(std::move(e));
    }
    return solve_linear_equation(ambient, shape, lifted, D);
}

// ---------------------------------------------------------------------------
// Colon ideals, annihilators, intersections.

template <class K>
struct IdealSlice {
    std::vector<Polynomial<K>> gens;  // minimal homogeneous generators, ascending degree
    std::vector<int> degrees;
    int element_bound = 0;     // generators listed up to this degree
    int exhaustive_below = 0;  // and provably complete through it

    int max_degree() const { return degrees.empty() ? -1 : degrees.back(); }
};

namespace detail {
template <class K>
IdealSlice<K> minimized_slice(const Presentation<K>& P, const GroebnerBasis<K>& ambient,
                              std::vector<Polynomial<K>> cands, int bound) {
    IdealSlice<K> out;
    out.element_bound = bound;
    out.exhaustive_below = bound;
    std::vector<Polynomial<K>> reduced;
    for (auto& c : cands) {
        Polynomial<K> nf = normal_form(c, ambient);
        if (!nf.is_zero() && nf.degree() <= bound) reduced.push_back(std::move(nf));
    }
    out.gens = minimize_ideal_generators(P, reduced, ambient);
    std::stable_sort(out.gens.begin(), out.gens.end(), [&](const auto& a, const auto& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ambient.ord().less(a.leading_word(), b.leading_word());
    });
    for (const auto& g : out.gens) out.degrees.push_back(g.degree());
    return out;
}
}  // namespace detail

// (x : J) = { a | x a lies in the right ideal generated by J }, generators of
// degree <= element_bound. The annihilator of x is the J = {} case. Needs the
// ambient basis sound to element_bound + deg x.
template <class K>
IdealSlice<K> colon_ideal(const GroebnerBasis<K>& ambient, const Polynomial<K>& x,
                          const std::vector<Polynomial<K>>& J, int element_bound) {
    const Presentation<K>& P = ambient.pres();
    Polynomial<K> xr = normal_form(x, ambient);
    if (xr.is_zero()) throw std::invalid_argument("colon_ideal: zero element");
    if (!is_homogeneous(xr)) throw std::invalid_argument("colon_ideal: inhomogeneous element");
    std::vector<Polynomial<K>> coeffs = {xr};
    for (const auto& j : J) coeffs.push_back(j);
    int D = element_bound + xr.degree();
    SyzygyBasis<K> syz = solve_linear_equation(ambient, coeffs, D);
    std::vector<Polynomial<K>> firsts;
    for (const auto& g : syz.generators) {
        if (g.comp[0].is_zero()) continue;  // kept coefficient 0 is always x
        firsts.push_back(g.comp[0]);
    }
    return detail::minimized_slice(P, ambient, std::move(firsts), element_bound);
}

template <class K>
IdealSlice<K> annihilator(const GroebnerBasis<K>& ambient, const Polynomial<K>& x,
                          int element_bound) {
    return colon_ideal(ambient, x, {}, element_bound);
}

// I cap J for right ideals, via syzygies of the concatenated generators.
template <class K>
IdealSlice<K> intersect_ideals(const GroebnerBasis<K>& ambient,
                               const std::vector<Polynomial<K>>& I,
                               const std::vector<Polynomial<K>>& J, int element_bound) {
    const Presentation<K>& P = ambient.pres();
    std::vector<Polynomial<K>> coeffs = I;
    for (const auto& j : J) coeffs.push_back(j);
    SyzygyBasis<K> syz = solve_linear_equation(ambient, coeffs, element_bound);
    std::vector<Polynomial<K>> images;
    for (const auto& g : syz.generators) {
        Polynomial<K> img;
        for (std::size_t k = 0; k < syz.coeff_index.size(); ++k) {
            if (syz.coeff_index[k] >= I.size()) continue;  // J-block
            img = add(img, mul(coeffs[syz.coeff_index[k]], g.comp[k], P.order), P.order);
        }
        img = normal_form(img, ambient);
        if (!img.is_zero()) images.push_back(std::move(img));
    }
    return detail::minimized_slice(P, ambient, std::move(images), element_bound);
}

// ---------------------------------------------------------------------------
// Iterated syzygies: minimal-resolution degrees m_0(I), m_1(I), ..., with
// m_i = -1 once the resolution has gone exact (zero homology).

template <class K>
struct IteratedSyzygies {
    std::vector<std::vector<int>> level_degrees;  // [0] = minimal generator degrees of I
    std::vector<int> m;                           // m[i] = max of level i, -1 when empty
    int exhaustive_below = 0;
};

template <class K>
IteratedSyzygies<K> iterated_syzygies(const GroebnerBasis<K>& ambient,
                                      const std::vector<Polynomial<K>>& Igens, int depth, int D) {
    const Presentation<K>& P = ambient.pres();
    IteratedSyzygies<K> out;
    out.exhaustive_below = D;
    IdealSlice<K> base = detail::minimized_slice(P, ambient, Igens, D);
    out.level_degrees.push_back(base.degrees);
    out.m.push_back(base.max_degree());
    if (base.gens.empty()) {
        for (int i = 1; i <= depth; ++i) {
            out.level_degrees.push_back({});
            out.m.push_back(-1);
        }
        return out;
    }
    FreeModuleShape shape{{0}};
    std::vector<FreeModuleElement<K>> coeffs;
    for (const auto& g : base.gens) {
        FreeModuleElement<K> e;
        e.comp = {g};
        coeffs.push_back(std::move(e));
    }
    for (int lvl = 1; lvl <= depth; ++lvl) {
        SyzygyBasis<K> syz = solve_linear_equation(ambient, shape, coeffs, D);
        out.level_degrees.push_back(syz.degrees);
        out.m.push_back(syz.max_degree());
        if (syz.generators.empty()) {
            for (int i = lvl + 1; i <= depth; ++i) {
                out.level_degrees.push_back({});
                out.m.push_back(-1);
            }
            return out;
        }
        shape = syz.tuple_shape;
        coeffs = syz.generators;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Third homology probe. Each defining relation f_j splits by first letter as
// f_j = sum_g g * b_j^g; the tuples (b_j^g)_g over the free module with one
// slot per generator are the coefficients of an equation whose solution
// module realizes H_3 of the algebra: minimal generator degrees = H_3
// internal degrees.

template <class K>
SyzygyBasis<K> m3_probe(const GroebnerBasis<K>& ambient, int D) {
    const Presentation<K>& P = ambient.pres();
    FreeModuleShape gshape;
    for (const auto& g : P.gens) gshape.shifts.push_back(g.degree);
    std::vector<FreeModuleElement<K>> coeffs;
    for (const auto& f : P.relations) {
        FreeModuleElement<K> e;
        e.comp.resize(P.gens.size());
        for (const auto& t : f.terms) {
            std::uint32_t g = t.first.letters[0];  // relations have degree >= 2, so nonempty
            Word rest = subword(t.first, 1, t.first.size() - 1, P.order);
            e.comp[g] = add(e.comp[g], poly_monomial(std::move(rest), t.second), P.order);
        }
        coeffs.push_back(std::move(e));
    }
    return solve_linear_equation(ambient, gshape, coeffs, D);
}

// ---------------------------------------------------------------------------
// Coherence probe: exhaustively enumerate small monomial right ideals
// (prefix-antichains of normal words), add seeded random polynomial ideals,
// compute m and m_1 for every sample, and check the splitting inequalities
//     m_1(J_k) <= max{ m_1(J_{k-1}), deg a_k + m(Ann a_k), m(J_{k-1} cap a_k R) }
// along each sample's generator chain, plus the intersection inequality
//     m(K cap L) <= max{ m_1(K + L), m(K), m(L) }
// on sampled pairs. Observed aggregates for D_R(d), D^Ann(d), D^cap(d) are
// the maxima actually witnessed; they are lower bounds for the suprema.

struct ProbeConfig {
    std::uint64_t seed = 1;
    std::size_t max_monomial_ideals = 200;
    std::size_t random_samples = 6;
    std::size_t max_pair_checks = 60;
};

struct ProbeSampleRecord {
    std::vector<std::string> gens;  // printable generators after minimization
    int m0 = -1;
    int m1 = -1;  // -1: solution module is zero
    bool split_ok = true;
};

struct ProbeReport {
    int d = 0;
    int D = 0;
    std::uint64_t seed = 0;
    bool enumeration_capped = false;
    std::size_t monomial_count = 0;
    std::size_t random_count = 0;
    std::size_t pair_checks = 0;
    std::vector<ProbeSampleRecord> samples;
    int observed_D = -1;     // max m_1(I)
    int observed_ann = -1;   // max m(Ann a)
    int observed_cap = -1;   // max m(K cap L)
    bool inequalities_hold = true;
    std::vector<std::string> violations;
};

namespace detail {

inline std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n) {
    // rejection sampling keeps the draw uniform and the stream portable
    for (;;) {
        std::uint64_t v = rng();
        std::uint64_t r = v % n;
        if (v - r <= ~std::uint64_t{0} - (n - 1)) return r;
    }
}

template <class K>
K random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
    if (field.kind == FieldSpec::Kind::prime)
        return scalar_from_int<K>(static_cast<long>(bounded_random(rng, field.p)), field);
    return scalar_from_int<K>(static_cast<long>(bounded_random(rng, 5)) - 2, field);
}

// nonzero homogeneous element of the given degree, dense over normal words
template <class K>
Polynomial<K> random_element(std::mt19937_64& rng, const GroebnerBasis<K>& ambient,
                             const std::vector<Word>& basis_words) {
    const Presentation<K>& P = ambient.pres();
    for (;;) {
        Polynomial<K> p;
        for (const auto& w : basis_words) {
            K c = random_scalar<K>(rng, P.field);
            if (!is_zero(c)) p = add(p, poly_monomial(w, c), P.order);
        }
        if (!p.is_zero()) return p;
    }
}

// prefix-antichain enumeration in a fixed order, capped
inline void enumerate_antichains(const std::vector<Word>& words, std::size_t cap,
                                 std::vector<std::vector<std::size_t>>& out, bool& capped) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (out.size() >= cap) {
            capped = true;
            return;
        }
        if (!cur.empty()) out.push_back(cur);
        for (std::size_t i = next; i < words.size(); ++i) {
            bool ok = true;
            for (std::size_t j : cur)
                if (is_prefix(words[j], words[i]) || is_prefix(words[i], words[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
            if (out.size() >= cap) return;
        }
    };
    rec(rec, 0);
}

}  // namespace detail

template <class K>
ProbeReport coherence_probe(const GroebnerBasis<K>& ambient, int d, int D,
                            const ProbeConfig& config = {}) {
    const Presentation<K>& P = ambient.pres();
    ProbeReport rep;
    rep.d = d;
    rep.D = D;
    rep.seed = config.seed;
    if (d <= 0) return rep;

    auto note_violation = [&](const std::string& msg) {
        rep.inequalities_hold = false;
        rep.violations.push_back(msg);
    };
    auto bump = [](int& slot, int v) {
        if (v > slot) slot = v;
    };

    // sample pool: all antichains of normal words of degree 1..d, then random
    auto words_by_degree = normal_words(ambient, d);
    std::vector<Word> pool_words;
    for (int e = 1; e <= d; ++e)
        for (const auto& w : words_by_degree[e]) pool_words.push_back(w);
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
            int deg = 1 + static_cast<int>(detail::bounded_random(rng, static_cast<std::uint64_t>(d)));
            if (words_by_degree[deg].empty()) continue;
            gens.push_back(detail::random_element(rng, ambient, words_by_degree[deg]));
        }
        if (gens.empty()) continue;
        sample_gens.push_back(std::move(gens));
        ++rep.random_count;
    }

    // per-sample records and split checks along the generator chain
    for (const auto& gens : sample_gens) {
        IdealSlice<K> minimal = detail::minimized_slice(P, ambient, gens, d);
        if (minimal.gens.empty()) continue;
        ProbeSampleRecord rec;
        for (const auto& g : minimal.gens) rec.gens.push_back(poly_text(g, P.gens));
        rec.m0 = minimal.max_degree();

        int prev_m1 = -1;  // m_1 of the chain prefix
        std::vector<Polynomial<K>> prefix;
        for (std::size_t k = 0; k < minimal.gens.size(); ++k) {
            const Polynomial<K>& a = minimal.gens[k];
            IdealSlice<K> ann = annihilator(ambient, a, D - a.degree());
            int rhs_ann = -1;
            if (ann.max_degree() >= 0) {
                bump(rep.observed_ann, ann.max_degree());
                rhs_ann = a.degree() + ann.max_degree();
                // the cyclic ideal aR is itself a sample; its m_1 is exactly this
                bump(rep.observed_D, rhs_ann);
            }
            int rhs_cap = -1;
            if (!prefix.empty()) {
                IdealSlice<K> inter = intersect_ideals(ambient, prefix, {a}, D);
                rhs_cap = inter.max_degree();
                if (rhs_cap >= 0) bump(rep.observed_cap, rhs_cap);
            }
            prefix.push_back(a);
            SyzygyBasis<K> syz = solve_linear_equation(ambient, prefix, D);
            int m1 = syz.max_degree();
            if (m1 >= 0) {
                bump(rep.observed_D, m1);  // every prefix is an ideal generated in degrees <= d
                int bound = std::max({prev_m1, rhs_ann, rhs_cap});
                if (bound < 0 || m1 > bound) {
                    rec.split_ok = false;
                    note_violation("split inequality fails for {" + rec.gens[k] +
                                   ", ...}: m1 = " + std::to_string(m1) +
                                   " exceeds max(prev m1 = " + std::to_string(prev_m1) +
                                   ", shifted ann = " + std::to_string(rhs_ann) +
                                   ", intersection = " + std::to_string(rhs_cap) + ")");
                }
            }
            prev_m1 = m1;
        }
        rec.m1 = prev_m1;
        rep.samples.push_back(std::move(rec));
    }

    // intersection inequality on pairs of samples
    std::size_t checked = 0;
    for (std::size_t i = 0; i < sample_gens.size() && checked < config.max_pair_checks; ++i) {
        for (std::size_t j = i + 1; j < sample_gens.size() && checked < config.max_pair_checks;
             ++j) {
            IdealSlice<K> Ki = detail::minimized_slice(P, ambient, sample_gens[i], d);
            IdealSlice<K> Lj = detail::minimized_slice(P, ambient, sample_gens[j], d);
            if (Ki.gens.empty() || Lj.gens.empty()) continue;
            ++checked;
            IdealSlice<K> inter = intersect_ideals(ambient, Ki.gens, Lj.gens, D);
            if (inter.max_degree() >= 0) bump(rep.observed_cap, inter.max_degree());
            std::vector<Polynomial<K>> unions = Ki.gens;
            for (const auto& g : Lj.gens) unions.push_back(g);
            SyzygyBasis<K> usyz =
                solve_linear_equation(ambient, detail::minimized_slice(P, ambient, unions, d).gens, D);
            if (usyz.max_degree() >= 0) bump(rep.observed_D, usyz.max_degree());
            int lhs = inter.max_degree();
            int bound = std::max({usyz.max_degree(), Ki.max_degree(), Lj.max_degree()});
            if (lhs > bound)
                note_violation("intersection inequality fails: m(cap) = " + std::to_string(lhs) +
                               " exceeds " + std::to_string(bound));
        }
    }
    rep.pair_checks = checked;

    // observed aggregate forms of the capped inequalities
    if (rep.observed_ann > rep.observed_D)
        note_violation("aggregate: observed ann bound exceeds observed D");
    if (rep.observed_cap > std::max(d, rep.observed_D))
        note_violation("aggregate: observed intersection bound exceeds max(d, observed D)");
    if (rep.observed_D > std::max(d + std::max(rep.observed_ann, 0), rep.observed_cap))
        note_violation("aggregate: observed D exceeds max(d + ann, cap)");
    return rep;
}

}  // namespace ncalg

#endif

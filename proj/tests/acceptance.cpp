// Acceptance gate: twelve end-to-end checks covering basis soundness against
// brute force, syzygy solving, annihilator growth, homology bookkeeping,
// rational series, coherent families, processing certificates, probe
// inequalities, and CLI/cache determinism. Prints one PASS/FAIL line per
// check and exits nonzero when anything fails. Everything is exact: the only
// tolerance anywhere is equality.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ncalg/anick.hpp"
#include "ncalg/cache.hpp"
#include "ncalg/cli.hpp"
#include "ncalg/coherence.hpp"
#include "ncalg/parse.hpp"
#include "oracle.hpp"

using namespace ncalg;
namespace fs = std::filesystem;

namespace {

struct Gate {
    std::string first_failure;
    void expect(bool ok, const std::string& what) {
        if (!ok && first_failure.empty()) first_failure = what;
    }
};

Presentation<Rational> pres(const std::string& text) {
    return std::get<Presentation<Rational>>(parse_presentation(text));
}

RationalSeries rs(std::vector<long> num, std::vector<long> den) {
    RationalSeries r;
    for (long c : num) r.num.emplace_back(c);
    for (long c : den) r.den.emplace_back(c);
    zp_trim(r.num);
    zp_trim(r.den);
    return r;
}

// the seven reference algebras
const char* kFree2 = "field Q; gens x:1 y:1; order deglex y>x;";
const char* kDrop = "field Q; gens x:1 y:1; order deglex y>x; rels y*x";
const char* kPlane = "field Q; gens x:1 y:1; order deglex y>x; rels x*y - y*x";
const char* kComm3 =
    "field Q; gens x:1 y:1 z:1; order deglex z>y>x; rels y*x - x*y, z*x - x*z, z*y - y*z";
const char* kSquare = "field Q; gens x:1; order deglex x; rels x*x";
const char* kCube = "field Q; gens x:1; order deglex x; rels x*x*x";
const char* kLadder =
    "field Q; gens x:1 y:1 z:1 t:1; order deglex z>t>y>x; rels z*y - t*z, z*x";

const char* kCorpus[] = {kFree2, kDrop, kPlane, kComm3, kSquare, kCube, kLadder};

const char* kDropFamily =
    "ideal z : ;\n"
    "ideal ix : x;\n"
    "ideal iy : y;\n"
    "ideal ixy : x, y;\n"
    "witness ix : x = x, J = z, N = z;\n"
    "witness iy : x = y, J = z, N = ix;\n"
    "witness ixy : x = y, J = ix, N = ix;\n";

std::string itoa_list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// --------------------------------------------------------------------------

void criterion_dimensions(Gate& g) {
    for (const char* text : kCorpus) {
        auto P = pres(text);
        auto gb = complete_two_sided(P, 8);
        auto dims = algebra_dims(gb, 8);
        oracle::IdealSpans<Rational> S(P, 8);
        for (int d = 0; d <= 8; ++d)
            g.expect(dims[static_cast<std::size_t>(d)] ==
                         mpz_class(static_cast<unsigned long>(S.quotient_dim(d))),
                     std::string("dimension mismatch at degree ") + std::to_string(d) + " for " +
                         text);
    }
}

void criterion_solver_oracle(Gate& g) {
    struct Instance {
        const char* pres;
        const char* coeffs;
    };
    const Instance battery[] = {
        {kFree2, "x, y"},
        {kFree2, "x*y + y*x, x*x"},
        {kFree2, "x*x*y, y*x*x"},
        {kDrop, "x, y"},
        {kDrop, "x*y, y*y"},
        {kDrop, "x*x + x*y, x*x"},
        {kDrop, "x*y*y, y*y*y"},
        {kPlane, "x, y"},
        {kPlane, "x*x, x*y, y*y"},
        {kPlane, "x + y, y"},
        {kPlane, "x*x*x, y*y*y"},
        {kComm3, "x, y, z"},
        {kComm3, "x*y, y*z"},
        {kComm3, "x*x*y, z"},
        {kSquare, "x"},
        {kCube, "x"},
        {kCube, "x, x*x"},
        {kCube, "x*x"},
        {kLadder, "x, y, z, t"},
        {kLadder, "z, t"},
        {kLadder, "z*y, t*t"},
        {kLadder, "z*t*z, x"},
    };
    const int D = 8;
    for (const auto& inst : battery) {
        auto P = pres(inst.pres);
        auto gb = complete_two_sided(P, D);
        auto coeffs = parse_poly_list<Rational>(inst.coeffs, P);
        bool degenerate = false;
        for (const auto& f : coeffs) degenerate = degenerate || normal_form(f, gb).is_zero();
        if (degenerate) {
            g.expect(false, std::string("battery coefficient vanishes: ") + inst.coeffs);
            continue;
        }
        auto syz = solve_linear_equation(gb, coeffs, D);
        std::string label = std::string(inst.pres) + " with (" + inst.coeffs + ")";
        g.expect(syz.exhaustive_below == D, "solver not exhaustive for " + label);
        g.expect(syz.coeff_index.size() == coeffs.size(), "solver dropped a slot for " + label);
        oracle::IdealSpans<Rational> S(P, D);
        std::vector<std::vector<Polynomial<Rational>>> tuples;
        for (const auto& gen : syz.generators) tuples.push_back(gen.comp);
        std::string why;
        g.expect(oracle::minimal_generators_match(S, coeffs, tuples, D, &why),
                 "oracle disagrees for " + label + ": " + why);
    }
}

void criterion_worked_pair(Gate& g) {
    struct Case {
        const char* pres;
        std::vector<int> degrees;
    };
    const Case cases[] = {{kPlane, {2}}, {kDrop, {2}}, {kFree2, {}}};
    for (const auto& c : cases) {
        auto P = pres(c.pres);
        auto gb = complete_two_sided(P, 8);
        auto coeffs = parse_poly_list<Rational>("x, y", P);
        auto syz = solve_linear_equation(gb, coeffs, 8);
        std::string label = c.pres;
        g.expect(syz.degrees == c.degrees,
                 "generator degrees for (x, y) over " + label + " are {" +
                     itoa_list(syz.degrees) + "}, want {" + itoa_list(c.degrees) + "}");
        oracle::IdealSpans<Rational> S(P, 8);
        std::vector<std::vector<Polynomial<Rational>>> tuples;
        for (const auto& gen : syz.generators) {
            tuples.push_back(gen.comp);
            g.expect(oracle::is_syzygy(S, coeffs, gen.comp),
                     "claimed solution fails the equation over " + label);
        }
        std::string why;
        g.expect(oracle::minimal_generators_match(S, coeffs, tuples, 8, &why),
                 "minimality fails over " + label + ": " + why);
    }
}

void criterion_annihilator_growth(Gate& g) {
    auto P = pres(kLadder);
    auto gb = complete_two_sided(P, 10);
    auto z = parse_poly<Rational>("z", P);
    oracle::IdealSpans<Rational> S(P, 8);
    for (int D : {4, 6, 8}) {
        auto ann = colon_ideal(gb, z, {}, D - 1);
        std::string label = "bound " + std::to_string(D);
        g.expect(ann.gens.size() == static_cast<std::size_t>(D - 1),
                 label + ": got " + std::to_string(ann.gens.size()) + " generators, want " +
                     std::to_string(D - 1));
        std::string want = "x";
        for (int i = 0; i < static_cast<int>(ann.gens.size()); ++i) {
            g.expect(ann.degrees[static_cast<std::size_t>(i)] == i + 1,
                     label + ": generator degree " + std::to_string(ann.degrees[i]) +
                         " in slot " + std::to_string(i));
            g.expect(poly_text(ann.gens[static_cast<std::size_t>(i)], P.gens) == want,
                     label + ": unexpected generator " +
                         poly_text(ann.gens[static_cast<std::size_t>(i)], P.gens));
            want = "y*" + want;
        }
        // the full brute-force kernel of e_z -> z certifies count and minimality
        std::vector<std::vector<Polynomial<Rational>>> tuples;
        for (const auto& a : ann.gens) tuples.push_back({a});
        std::string why;
        g.expect(oracle::minimal_generators_match(S, {z}, tuples, D, &why),
                 label + ": annihilator oracle disagrees: " + why);
    }
}

void criterion_euler(Gate& g) {
    const char* monomial[] = {kFree2, kDrop, kSquare, kCube};
    for (const char* text : monomial) {
        auto P = pres(text);
        TruncatedSeries residual = euler_check(P, 12);
        for (int d = 0; d <= 12; ++d)
            g.expect(residual.at(d) == 0, std::string("nonzero residual at degree ") +
                                              std::to_string(d) + " for " + text);
    }
}

void criterion_rational_series(Gate& g) {
    g.expect(rational_series_monomial(pres(kFree2)).series == rs({1}, {1, -2}),
             "free algebra series is not 1/(1-2z)");
    g.expect(rational_series_monomial(pres(kDrop)).series == rs({1}, {1, -2, 1}),
             "one-relation series is not 1/(1-z)^2");
    auto P4 = pres("field Q; gens x:1 y:1; order deglex y>x; rels x*x, x*y, y*x, y*y");
    g.expect(rational_series_monomial(P4).series == rs({1, 2}, {1}),
             "fully truncated series is not 1 + 2z");

    QuadraticEnumeration e = enumerate_quadratic_monomial(2);
    g.expect(e.algebras.size() == 16, "census size is not 16");
    for (std::size_t mask = 0; mask < e.algebras.size(); ++mask) {
        std::string text = "field Q; gens x1:1 x2:1; order deglex x2>x1;";
        if (!e.algebras[mask].relations.empty()) {
            text += " rels ";
            for (std::size_t i = 0; i < e.algebras[mask].relations.size(); ++i)
                text += (i ? ", " : "") + e.algebras[mask].relations[i];
        }
        int window = 2 * zp_degree(e.algebras[mask].series.den) + 5;
        TruncatedSeries dims = hilbert_truncated(pres(text), window);
        g.expect(e.algebras[mask].series.expand(window) == dims,
                 "series expansion mismatch for census entry " + std::to_string(mask));
    }
}

void criterion_family_series(Gate& g) {
    auto P = pres(kDrop);
    auto gb = complete_two_sided(P, 12);
    auto F = parse_family<Rational>(kDropFamily, P);
    FamilyVerdict v = verify_coherent_family(F, gb, 8);
    g.expect(v.verified, "reference family rejected: " + v.first_failure);
    g.expect(v.family_degree == 1, "reference family degree is not 1");

    RationalFamilySolve sol = rational_series_from_family(F, gb, 8);
    g.expect(sol.R == rs({1}, {1, -2, 1}), "algebra series is not 1/(1-z)^2");
    g.expect(zp_degree(sol.R.num) <= 3 && zp_degree(sol.R.den) <= 3,
             "series degrees exceed the member-count cap");
    std::vector<mpz_class> rdims = algebra_dims(gb, 10);
    for (int j = 0; j < sol.unknown_count; ++j) {
        const auto* mem = F.find(sol.unknowns[static_cast<std::size_t>(j)]);
        g.expect(mem != nullptr, "solver invented an unknown");
        if (!mem) continue;
        auto rgb = complete_right(P, mem->gens, 10, gb);
        auto qd = module_quotient_dims(rgb, 10);
        TruncatedSeries expanded = sol.series[static_cast<std::size_t>(j)].expand(10);
        for (int d = 0; d <= 10; ++d)
            g.expect(expanded.at(d) == rdims[static_cast<std::size_t>(d)] -
                                           qd[static_cast<std::size_t>(d)],
                     "member " + sol.unknowns[static_cast<std::size_t>(j)] +
                         " series disagrees with direct count at degree " + std::to_string(d));
    }
}

void criterion_processing(Gate& g) {
    auto drop = pres(kDrop);
    auto gbd = complete_two_sided(drop, 11);
    RProcOutcome cert = rproc_certificate(gbd);
    g.expect(cert.certified && !cert.heuristic && cert.r == 1,
             "monomial algebra does not certify r = 1");
    RProcVerifyResult pass = rproc_verify(gbd, 1, 7);
    g.expect(pass.pass, "staging identity fails at r = 1: " + pass.detail);

    auto plane = pres(kPlane);
    auto gbp = complete_two_sided(plane, 9);
    RProcVerifyResult cex = rproc_verify(gbp, 1, 7);
    g.expect(!cex.pass, "commutative algebra unexpectedly passes r = 1");
    g.expect(word_text(cex.p, plane.gens) == "y" && word_text(cex.q, plane.gens) == "x*x",
             "first counterexample is not (p = y, q = x*x)");

    ProbeConfig cfg;
    UniversalProbeReport rep = universal_coherence_probe(gbd, 2, 9, 1, cfg);
    g.expect(!rep.enumeration_capped, "degree-2 monomial ideals were not fully enumerated");
    g.expect(rep.monomial_count == 14, "degree-2 monomial ideal count is not 14");
    g.expect(rep.certified_bound_holds && !rep.implementation_error,
             "certified bound m1 <= m + 2 violated");
    for (const auto& s : rep.samples)
        g.expect(s.m1 <= s.m0 + 2, "sample exceeds m + 2: generators (" +
                                       [&] {
                                           std::string t;
                                           for (const auto& gen : s.gens)
                                               t += (t.empty() ? "" : ", ") + gen;
                                           return t;
                                       }() +
                                       ")");
}

void criterion_iterated_bounds(Gate& g) {
    struct FamilyCase {
        std::string label;
        Presentation<Rational> P;
        FamilySpec<Rational> F;
    };
    std::vector<FamilyCase> cases;
    {
        auto P = pres(kDrop);
        cases.push_back({"reference family", P, parse_family<Rational>(kDropFamily, P)});
        auto gb = complete_two_sided(P, 12);
        auto F = discover_monomial_family(gb, 8);
        g.expect(F.has_value(), "discovery failed on the one-relation algebra");
        if (F) cases.push_back({"discovered family", P, *F});
    }
    {
        auto P = pres("field Q; gens x:1 y:1; order deglex y>x; rels x*y*x");
        auto gb = complete_two_sided(P, 12);
        auto F = discover_monomial_family(gb, 8);
        g.expect(F.has_value(), "discovery failed on the palindrome algebra");
        if (F) cases.push_back({"palindrome family", P, *F});
    }
    for (const auto& c : cases) {
        auto gb = complete_two_sided(c.P, 14);
        FamilyVerdict v = verify_coherent_family(c.F, gb, 8);
        g.expect(v.verified, c.label + " rejected: " + v.first_failure);
        if (!v.verified) continue;
        int d = std::max(1, v.family_degree);
        for (const auto& mem : c.F.members) {
            if (mem.gens.empty()) continue;
            IteratedSyzygies<Rational> it = iterated_syzygies(gb, mem.gens, 3, 10);
            int m0 = it.m[0];
            for (int i = 1; i <= 3; ++i) {
                int mi = it.m[static_cast<std::size_t>(i)];
                g.expect(mi <= m0 + d * i,
                         c.label + ", member " + mem.name + ": m" + std::to_string(i) + " = " +
                             std::to_string(mi) + " exceeds m0 + " + std::to_string(d) + "*" +
                             std::to_string(i));
            }
        }
    }
}

void criterion_m3(Gate& g) {
    auto drop = pres(kDrop);
    auto gbd = complete_two_sided(drop, 10);
    auto probe_drop = m3_probe(gbd, 8);
    g.expect(probe_drop.generators.empty(),
             "second syzygies of the augmentation ideal are nonempty for the one-relation "
             "algebra");
    auto chains_drop = anick_chains(drop, 2, 8);
    g.expect(chains_drop.chains[2].empty(), "level-2 chains are nonempty for the one-relation "
                                            "algebra");

    auto sq = pres(kSquare);
    auto gbs = complete_two_sided(sq, 10);
    auto probe_sq = m3_probe(gbs, 8);
    g.expect(probe_sq.degrees == std::vector<int>{3},
             "dual numbers: second syzygy degrees are {" + itoa_list(probe_sq.degrees) +
                 "}, want {3}");
    auto chains_sq = anick_chains(sq, 2, 8);
    g.expect(chains_sq.chains[2].size() == 1, "dual numbers: level-2 chain count is not 1");
    if (!chains_sq.chains[2].empty())
        g.expect(chains_sq.chains[2][0].word.degree == 3,
                 "dual numbers: level-2 chain degree is not 3");
}

void criterion_probe_inequalities(Gate& g) {
    for (const char* text : kCorpus) {
        auto P = pres(text);
        auto gb = complete_two_sided(P, 12);
        for (int d = 1; d <= 3; ++d) {
            ProbeConfig cfg;
            ProbeReport rep = coherence_probe(gb, d, 9, cfg);
            g.expect(rep.inequalities_hold,
                     std::string("inequality violated on ") + text + " at d = " +
                         std::to_string(d) +
                         (rep.violations.empty() ? "" : (": " + rep.violations.front())));
        }
    }
}

void criterion_determinism(Gate& g) {
    fs::path dir = fs::temp_directory_path() / ("ncalg-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path presfile = dir / "drop.pres";
    std::ofstream(presfile) << "field Q;\ngens x:1 y:1;\norder deglex y>x;\nrels y*x;\n";

    auto run = [&](std::vector<std::string> args) {
        args.insert(args.begin(), "ncalg");
        std::vector<const char*> argv;
        for (const std::string& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return std::make_pair(code, out.str());
    };

    // repeated runs are byte-identical, with and without the cache in play
    std::vector<std::vector<std::string>> invocations = {
        {"gb", presfile.string(), "--deg", "8"},
        {"probe", presfile.string(), "--deg", "9", "--d", "2", "--seed", "5"},
        {"family", presfile.string(), "--discover", "--deg", "6", "--series"},
        {"hilbert", presfile.string(), "--deg", "12", "--exact"},
    };
    for (const auto& inv : invocations) {
        auto a = run(inv);
        auto b = run(inv);
        g.expect(a.first == 0, "command " + inv[0] + " failed");
        g.expect(a.second == b.second, "repeated " + inv[0] + " runs differ");
    }
    fs::path cdir = dir / "cache";
    auto cold = run({"gb", presfile.string(), "--deg", "8", "--cache-dir", cdir.string()});
    auto warm = run({"gb", presfile.string(), "--deg", "8", "--cache-dir", cdir.string()});
    auto bare = run({"gb", presfile.string(), "--deg", "8"});
    g.expect(cold.second == warm.second && cold.second == bare.second,
             "cache transitions changed the payload");

    // the installed binary agrees with the library entry point byte for byte
    if (const char* bin = std::getenv("NCALG_BIN")) {
        fs::path o1 = dir / "r1.txt", o2 = dir / "r2.txt";
        std::string base = std::string(bin) + " gb " + presfile.string() + " --deg 8";
        int c1 = std::system((base + " > " + o1.string() + " 2> /dev/null").c_str());
        int c2 = std::system((base + " > " + o2.string() + " 2> /dev/null").c_str());
        auto slurp = [](const fs::path& p) {
            std::ifstream f(p, std::ios::binary);
            std::ostringstream ss;
            ss << f.rdbuf();
            return ss.str();
        };
        g.expect(c1 == 0 && c2 == 0, "binary invocation failed");
        g.expect(slurp(o1) == slurp(o2), "binary runs differ");
        g.expect(slurp(o1) == bare.second, "binary and library payloads differ");
    }

    // cache round-trip: store, re-verify on load, reject corruption, recompute
    auto P = pres(kDrop);
    CacheConfig cfg{cdir.string()};
    std::string why;
    auto loaded = cache_load<Rational>(cfg, P, 8, &why);
    g.expect(loaded.has_value(), "cache round-trip failed: " + why);
    if (loaded) {
        g.expect(loaded->complete_flag && loaded->elems.size() == 1 &&
                     poly_text(loaded->elems[0], P.gens) == "y*x",
                 "cache round-trip returned a different basis");
    }
    fs::path entry = cache_path(cfg, P, 8);
    std::string text;
    {
        std::ifstream f(entry, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    std::size_t pos = text.find("y*x");
    g.expect(pos != std::string::npos, "cache entry does not list the basis");
    if (pos != std::string::npos) {
        text[pos] = 'x';
        std::ofstream(entry, std::ios::trunc) << text;
        auto bad = cache_load<Rational>(cfg, P, 8, &why);
        g.expect(!bad.has_value(), "corrupted cache entry was accepted");
        CacheStatus status = CacheStatus::off;
        auto gb = cached_complete_two_sided(cfg, P, 8, &status, &why);
        g.expect(status == CacheStatus::rejected, "corruption was not reported");
        g.expect(gb.complete_flag && poly_text(gb.elems[0], P.gens) == "y*x",
                 "recomputed basis is wrong");
        auto again = cache_load<Rational>(cfg, P, 8, &why);
        g.expect(again.has_value(), "rewritten cache entry does not load: " + why);
    }
    fs::remove_all(dir);
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<void(Gate&)> fn;
    };
    const Criterion criteria[] = {
        {"graded dimensions equal brute force through degree 8 on all seven algebras",
         criterion_dimensions},
        {"equation solver matches the brute-force kernel (counts and degrees)",
         criterion_solver_oracle},
        {"generator-pair solutions: one degree-2 tuple, or none over the free algebra",
         criterion_worked_pair},
        {"annihilator of z gains one minimal generator per degree (bounds 4, 6, 8)",
         criterion_annihilator_growth},
        {"alternating homology series times the algebra series is 1 through degree 12",
         criterion_euler},
        {"closed rational forms match truncated counts on the quadratic census",
         criterion_rational_series},
        {"verified degree-1 family solves to 1/(1-z)^2 with certified member series",
         criterion_family_series},
        {"processing constants: certificate, staging identity, and the m + 2 bound",
         criterion_processing},
        {"iterated syzygy degrees stay within m0 + d*i on every verified family",
         criterion_iterated_bounds},
        {"second syzygies of the augmentation ideal agree with level-2 chains",
         criterion_m3},
        {"annihilator and intersection degree inequalities hold on every probe sample",
         criterion_probe_inequalities},
        {"byte-identical reruns; cache entries re-verify, corruption is rejected",
         criterion_determinism},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Gate g;
        try {
            c.fn(g);
        } catch (const std::exception& e) {
            g.expect(false, std::string("exception: ") + e.what());
        }
        if (g.first_failure.empty()) {
            std::printf("criterion %2d: PASS  %s\n", index, c.label);
        } else {
            ++failures;
            std::printf("criterion %2d: FAIL  %s -- %s\n", index, c.label,
                        g.first_failure.c_str());
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 12 criteria FAILED\n", failures);
    return 1;
}

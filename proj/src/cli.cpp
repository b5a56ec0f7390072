#include "ncalg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ncalg/anick.hpp"
#include "ncalg/cache.hpp"
#include "ncalg/coherence.hpp"
#include "ncalg/hilbert.hpp"
#include "ncalg/kvdoc.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/syzygy.hpp"

namespace ncalg {
namespace {

// flags shared by the file-based subcommands
struct Common {
    std::string file;
    int deg = 10;
    std::string cache_dir;
};

std::string slurp(const std::string& path) {
    auto text = detail::read_file(path);
    if (!text) throw std::runtime_error("cannot read file: " + path);
    return *text;
}

template <class K>
void put_header(KVDoc& doc, const std::string& schema, const Presentation<K>& P, int deg) {
    doc.put("schema", schema);
    doc.put("presentation", detail::presentation_line(P));
    doc.put("deg", static_cast<long>(deg));
}

// completed two-sided basis at the requested bound, through the cache when
// one is configured; status goes to the human stream only, so the structured
// payload stays byte-identical between cold and warm runs
template <class K>
GroebnerBasis<K> obtain_gb(const Presentation<K>& P, int deg, const std::string& cache_dir,
                           std::ostream& err) {
    CacheConfig cfg = cache_config_from(cache_dir);
    CacheStatus status = CacheStatus::off;
    std::string note;
    GroebnerBasis<K> gb = cached_complete_two_sided(cfg, P, deg, &status, &note);
    err << "cache: " << to_text(status);
    if (!note.empty()) err << " (" << note << ")";
    err << "\n";
    return gb;
}

template <class K>
std::string tuple_text(const FreeModuleElement<K>& e, const Presentation<K>& P) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.comp.size(); ++i)
        s += (i ? std::string("; ") : std::string()) + poly_text(e.comp[i], P.gens);
    return s + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : std::string()) + parts[i];
    return s;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    while (!out.empty() && out.back().find_first_not_of(" \t") == std::string::npos)
        out.pop_back();
    return out;
}

// ---------------------------------------------------------------------------

template <class K>
int cmd_gb(const Presentation<K>& P, const Common& c, std::ostream& out, std::ostream& err) {
    KVDoc doc;
    put_header(doc, "ncalg.gb/1", P, c.deg);
    GroebnerBasis<K> gb = obtain_gb(P, c.deg, c.cache_dir, err);
    doc.put("complete", gb.complete_flag);
    doc.put("soundness", static_cast<long>(gb.soundness_degree));
    doc.put("elems", gb.elems.size());
    for (std::size_t i = 0; i < gb.elems.size(); ++i)
        doc.put("elem." + std::to_string(i), poly_text(gb.elems[i], P.gens));
    std::vector<mpz_class> dims = algebra_dims(gb, c.deg);
    for (int d = 0; d <= c.deg; ++d)
        doc.put("dim." + std::to_string(d), dims[static_cast<std::size_t>(d)].get_str());
    out << doc.payload();
    err << "basis elements: " << gb.elems.size() << (gb.complete_flag ? " (complete)" : "")
        << "\n";
    return 0;
}

template <class K>
int cmd_solve(const Presentation<K>& P, const Common& c, const std::string& coeffs_csv,
              std::ostream& out, std::ostream& err) {
    std::vector<Polynomial<K>> coeffs;
    int maxdeg = 0;
    for (const std::string& part : split_csv(coeffs_csv)) {
        Polynomial<K> f = parse_poly<K>(part, P);
        if (f.is_zero()) throw std::invalid_argument("solve: zero coefficient");
        maxdeg = std::max(maxdeg, f.degree());
        coeffs.push_back(std::move(f));
    }
    if (coeffs.empty()) throw std::invalid_argument("solve: no coefficients given");
    KVDoc doc;
    put_header(doc, "ncalg.solve/1", P, c.deg);
    doc.put("coeffs", coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        doc.put("coeff." + std::to_string(i), poly_text(coeffs[i], P.gens));
    GroebnerBasis<K> gb = obtain_gb(P, c.deg + maxdeg, c.cache_dir, err);
    SyzygyBasis<K> syz = solve_linear_equation(gb, coeffs, c.deg);
    doc.put("count", syz.generators.size());
    doc.put("exhaustive_below", static_cast<long>(syz.exhaustive_below));
    for (std::size_t i = 0; i < syz.generators.size(); ++i) {
        doc.put("degree." + std::to_string(i),
                static_cast<long>(syz.degrees[i]));
        doc.put("gen." + std::to_string(i), tuple_text(syz.generators[i], P));
    }
    out << doc.payload();
    err << "solution generators: " << syz.generators.size() << "\n";
    return 0;
}

template <class K>
int cmd_hilbert(const Presentation<K>& P, const Common& c, bool exact, std::ostream& out,
                std::ostream& err) {
    KVDoc doc;
    put_header(doc, "ncalg.hilbert/1", P, c.deg);
    GroebnerBasis<K> gb = obtain_gb(P, c.deg, c.cache_dir, err);
    TruncatedSeries dims = hilbert_truncated(gb, c.deg);
    for (int d = 0; d <= c.deg; ++d)
        doc.put("dim." + std::to_string(d), dims.at(d).get_str());
    doc.put("exact", exact);
    if (exact) {
        MonomialSeriesResult<K> r = rational_series_monomial(P);
        doc.put("num", zp_text(r.series.num));
        doc.put("den", zp_text(r.series.den));
        doc.put("verified_to", static_cast<long>(r.verified_to));
        err << "series: " << r.series.text() << "\n";
    }
    out << doc.payload();
    return 0;
}

template <class K>
int cmd_chains(const Presentation<K>& P, const Common& c, int levels, std::ostream& out,
               std::ostream& err) {
    if (levels < 0) levels = c.deg;
    KVDoc doc;
    put_header(doc, "ncalg.chains/1", P, c.deg);
    doc.put("levels", static_cast<long>(levels));
    AnickChainSet chains = anick_chains(P, levels, c.deg);
    for (int i = 0; i <= levels; ++i) {
        const auto& level = chains.chains[static_cast<std::size_t>(i)];
        std::string prefix = "level." + std::to_string(i);
        doc.put(prefix + ".count", level.size());
        doc.put(prefix + ".complete",
                static_cast<bool>(chains.level_complete[static_cast<std::size_t>(i)]));
        std::vector<std::string> degs, words;
        for (const auto& ch : level) {
            degs.push_back(std::to_string(ch.word.degree));
            words.push_back(word_text(ch.word, P.gens));
        }
        doc.put(prefix + ".degrees", join(degs, ","));
        doc.put(prefix + ".words", join(words, ","));
    }
    out << doc.payload();
    err << "chain levels: " << levels + 1 << " (degree bound " << c.deg << ")\n";
    return 0;
}

template <class K>
int cmd_rate(const Presentation<K>& P, const Common& c, int levels, std::ostream& out,
             std::ostream& err) {
    if (levels < 0) levels = std::max(1, c.deg);
    KVDoc doc;
    put_header(doc, "ncalg.rate/1", P, c.deg);
    doc.put("levels", static_cast<long>(levels));
    AnickChainSet chains = anick_chains(P, levels, c.deg);
    RateEstimate est = rate_estimate(chains);
    doc.put("value", est.value.get_str());
    doc.put("attained_at", static_cast<long>(est.attained_at));
    doc.put("exact", est.exact);
    for (int i = 0; i <= levels; ++i) {
        std::vector<std::string> degs;
        for (const auto& ch : chains.chains[static_cast<std::size_t>(i)])
            degs.push_back(std::to_string(ch.word.degree));
        doc.put("level." + std::to_string(i) + ".degrees", join(degs, ","));
    }
    out << doc.payload();
    err << "rate: " << est.value.get_str() << (est.exact ? " (exact)" : " (estimate)") << "\n";
    return 0;
}

template <class K>
int cmd_rproc(const Presentation<K>& P, const Common& c, int r_flag, std::ostream& out,
              std::ostream& err) {
    KVDoc doc;
    put_header(doc, "ncalg.rproc/1", P, c.deg);
    GroebnerBasis<K> gb = obtain_gb(P, c.deg, c.cache_dir, err);

    int r_verify = r_flag;
    if (gb.complete_flag) {
        RProcOutcome cert = rproc_certificate(gb);
        doc.put("certified", cert.certified);
        doc.put("heuristic", cert.heuristic);
        doc.put("r", static_cast<long>(cert.r));
        if (cert.certified) {
            doc.put("evidence", to_text(cert.evidence));
            if (r_verify < 0) r_verify = cert.r;
        } else {
            doc.put("refusal", cert.refusal);
            std::vector<std::string> cyc;
            for (std::size_t i : cert.cycle) cyc.push_back(std::to_string(i));
            doc.put("cycle", join(cyc, ","));
        }
    } else {
        doc.put("certified", false);
        doc.put("heuristic", false);
        doc.put("r", -1L);
        doc.put("refusal", "basis incomplete at this bound");
    }

    if (r_verify >= 0 && r_verify + 2 <= c.deg) {
        RProcVerifyResult v = rproc_verify(gb, r_verify, c.deg);
        doc.put("verify", v.pass ? "pass" : "fail");
        doc.put("verify_r", static_cast<long>(r_verify));
        doc.put("verify_deg", static_cast<long>(c.deg));
        if (!v.pass) {
            doc.put("counterexample.p", word_text(v.p, P.gens));
            doc.put("counterexample.q", word_text(v.q, P.gens));
            doc.put("counterexample.q1", v.q1.empty() ? "1" : word_text(v.q1, P.gens));
            doc.put("counterexample.q2", word_text(v.q2, P.gens));
        }
        err << "verify at r=" << r_verify << ": " << (v.pass ? "pass" : "fail") << "\n";
    } else {
        doc.put("verify", "skipped");
    }
    out << doc.payload();
    return 0;
}

template <class K>
int cmd_family(const Presentation<K>& P, const Common& c, const std::string& spec_path,
               bool discover, bool series, std::size_t cap, std::ostream& out,
               std::ostream& err) {
    KVDoc doc;
    put_header(doc, "ncalg.family/1", P, c.deg);

    FamilySpec<K> fam;
    if (discover) {
        // colon ideals reach degree deg + deg(x) with x a minimal generator
        GroebnerBasis<K> gb0 = obtain_gb(P, 2 * c.deg, c.cache_dir, err);
        auto found = discover_monomial_family(gb0, c.deg, cap);
        if (!found) throw std::runtime_error("family discovery exceeded the member cap");
        fam = std::move(*found);
        doc.put("source", "discovered");
    } else {
        fam = parse_family<K>(slurp(spec_path), P);
        doc.put("source", "file");
    }

    int maxdeg = c.deg;
    for (const auto& w : fam.witnesses) maxdeg = std::max(maxdeg, w.x.degree());
    GroebnerBasis<K> gb = obtain_gb(P, c.deg + maxdeg, c.cache_dir, err);

    doc.put("members", fam.members.size());
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        std::vector<std::string> gens;
        for (const auto& g : fam.members[i].gens) gens.push_back(poly_text(g, P.gens));
        doc.put("member." + std::to_string(i) + ".name", fam.members[i].name);
        doc.put("member." + std::to_string(i) + ".gens", join(gens, ", "));
    }
    doc.put("witnesses", fam.witnesses.size());
    for (std::size_t i = 0; i < fam.witnesses.size(); ++i) {
        const auto& w = fam.witnesses[i];
        doc.put("witness." + std::to_string(i),
                w.member + " : x = " + poly_text(w.x, P.gens) + ", J = " + w.J + ", N = " + w.N);
    }

    FamilyVerdict v = verify_coherent_family(fam, gb, c.deg);
    doc.put("verified", v.verified);
    doc.put("family_degree", static_cast<long>(v.family_degree));
    if (!v.verified) {
        doc.put("first_failure", v.first_failure);
        doc.put("offending_degree", static_cast<long>(v.offending_degree));
    }
    for (std::size_t i = 0; i < v.checks.size(); ++i) {
        const auto& ch = v.checks[i];
        std::string prefix = "check." + std::to_string(i);
        doc.put(prefix + ".name", ch.name);
        doc.put(prefix + ".m", static_cast<long>(ch.m));
        doc.put(prefix + ".passed", ch.passed);
        if (!ch.passed) doc.put(prefix + ".failure", ch.failure);
    }
    err << "family " << (v.verified ? "verified" : ("rejected: " + v.first_failure)) << "\n";

    if (series && v.verified) {
        RationalFamilySolve sol = rational_series_from_family(fam, gb, c.deg);
        doc.put("series.unknowns", sol.unknowns.size());
        for (std::size_t i = 0; i < sol.unknowns.size(); ++i) {
            std::string prefix = "series." + std::to_string(i);
            doc.put(prefix + ".name", sol.unknowns[i]);
            doc.put(prefix + ".num", zp_text(sol.series[i].num));
            doc.put(prefix + ".den", zp_text(sol.series[i].den));
        }
        doc.put("series.verified_to", static_cast<long>(sol.verified_to));
        err << "R(z) = " << sol.R.text() << "\n";
    } else if (series) {
        err << "series skipped: family rejected\n";
    }
    out << doc.payload();
    return 0;
}

template <class K>
int cmd_probe(const Presentation<K>& P, const Common& c, int d, bool universal, int certified_r,
              const ProbeConfig& cfg, std::ostream& out, std::ostream& err) {
    KVDoc doc;
    put_header(doc, universal ? "ncalg.probe.universal/1" : "ncalg.probe/1", P, c.deg);
    doc.put("d", static_cast<long>(d));
    doc.put("seed", std::to_string(cfg.seed));
    GroebnerBasis<K> gb = obtain_gb(P, c.deg + std::max(d, 1), c.cache_dir, err);
    auto sample_lines = [&](const std::vector<ProbeSampleRecord>& samples) {
        doc.put("samples", samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            std::string prefix = "sample." + std::to_string(i);
            doc.put(prefix + ".gens", join(samples[i].gens, ", "));
            doc.put(prefix + ".m0", static_cast<long>(samples[i].m0));
            doc.put(prefix + ".m1", static_cast<long>(samples[i].m1));
        }
    };
    auto violation_lines = [&](const std::vector<std::string>& violations) {
        doc.put("violations", violations.size());
        for (std::size_t i = 0; i < violations.size(); ++i)
            doc.put("violation." + std::to_string(i), violations[i]);
    };
    if (universal) {
        UniversalProbeReport rep = universal_coherence_probe(gb, d, c.deg, certified_r, cfg);
        doc.put("certified_r", static_cast<long>(rep.certified_r));
        doc.put("monomial_count", rep.monomial_count);
        doc.put("random_count", rep.random_count);
        doc.put("capped", rep.enumeration_capped);
        doc.put("max_m1", static_cast<long>(rep.max_m1));
        doc.put("max_excess",
                rep.max_excess ? std::to_string(*rep.max_excess) : std::string("none"));
        doc.put("bound_holds", rep.bound_holds);
        doc.put("certified_bound_holds", rep.certified_bound_holds);
        doc.put("implementation_error", rep.implementation_error);
        violation_lines(rep.violations);
        sample_lines(rep.samples);
        err << "universal probe: " << rep.samples.size() << " samples, max excess "
            << (rep.max_excess ? std::to_string(*rep.max_excess) : std::string("none")) << "\n";
    } else {
        ProbeReport rep = coherence_probe(gb, d, c.deg, cfg);
        doc.put("monomial_count", rep.monomial_count);
        doc.put("random_count", rep.random_count);
        doc.put("capped", rep.enumeration_capped);
        doc.put("pair_checks", rep.pair_checks);
        doc.put("observed_d", static_cast<long>(rep.observed_D));
        doc.put("observed_ann", static_cast<long>(rep.observed_ann));
        doc.put("observed_cap", static_cast<long>(rep.observed_cap));
        doc.put("inequalities_hold", rep.inequalities_hold);
        violation_lines(rep.violations);
        sample_lines(rep.samples);
        err << "probe: " << rep.samples.size() << " samples, inequalities "
            << (rep.inequalities_hold ? "hold" : "VIOLATED") << "\n";
    }
    out << doc.payload();
    return 0;
}

int cmd_enumerate(int n, std::size_t cap, std::ostream& out, std::ostream& err) {
    KVDoc doc;
    doc.put("schema", "ncalg.enumerate/1");
    doc.put("n", static_cast<long>(n));
    QuadraticEnumeration e = enumerate_quadratic_monomial(n, cap);
    doc.put("algebras", e.algebras.size());
    doc.put("distinct", e.distinct.size());
    for (std::size_t i = 0; i < e.algebras.size(); ++i) {
        std::string prefix = "algebra." + std::to_string(i);
        doc.put(prefix + ".relations", join(e.algebras[i].relations, ","));
        doc.put(prefix + ".num", zp_text(e.algebras[i].series.num));
        doc.put(prefix + ".den", zp_text(e.algebras[i].series.den));
    }
    for (std::size_t i = 0; i < e.distinct.size(); ++i) {
        std::string prefix = "distinct." + std::to_string(i);
        doc.put(prefix + ".num", zp_text(e.distinct[i].num));
        doc.put(prefix + ".den", zp_text(e.distinct[i].den));
    }
    out << doc.payload();
    err << "census: " << e.algebras.size() << " algebras, " << e.distinct.size()
        << " distinct series\n";
    return 0;
}

template <class K>
int cmd_m3(const Presentation<K>& P, const Common& c, std::ostream& out, std::ostream& err) {
    KVDoc doc;
    put_header(doc, "ncalg.m3/1", P, c.deg);
    GroebnerBasis<K> gb = obtain_gb(P, c.deg + 1, c.cache_dir, err);
    SyzygyBasis<K> probe = m3_probe(gb, c.deg);
    doc.put("count", probe.generators.size());
    for (std::size_t i = 0; i < probe.generators.size(); ++i) {
        doc.put("degree." + std::to_string(i), static_cast<long>(probe.degrees[i]));
        doc.put("gen." + std::to_string(i), tuple_text(probe.generators[i], P));
    }
    out << doc.payload();
    err << "m3 generators: " << probe.generators.size() << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finitely presented graded algebras: bases, syzygies, series, coherence"};
    app.require_subcommand(1);

    Common c;
    auto add_common = [&](CLI::App* sub, bool with_cache = true) {
        sub->add_option("file", c.file, "presentation file")->required();
        sub->add_option("--deg", c.deg, "degree bound D (default 10)");
        if (with_cache)
            sub->add_option("--cache-dir", c.cache_dir,
                            "basis cache directory (default: NCALG_CACHE_DIR)");
    };

    CLI::App* gb_cmd = app.add_subcommand("gb", "completed basis and graded dimensions");
    add_common(gb_cmd);

    std::string coeffs_csv;
    CLI::App* solve_cmd = app.add_subcommand("solve", "right-hand solutions of sum x_i a_i = 0");
    add_common(solve_cmd);
    solve_cmd->add_option("--coeffs", coeffs_csv, "comma-separated coefficients")->required();

    bool exact = false;
    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "graded dimensions of the algebra");
    add_common(hilbert_cmd);
    hilbert_cmd->add_flag("--exact", exact, "certified rational form (monomial algebras)");

    int levels = -1;
    CLI::App* chains_cmd = app.add_subcommand("chains", "chain enumeration for monomial algebras");
    add_common(chains_cmd, false);
    chains_cmd->add_option("--levels", levels, "highest chain level (default: deg)");

    CLI::App* rate_cmd = app.add_subcommand("rate", "homology degree growth rate");
    add_common(rate_cmd, false);
    rate_cmd->add_option("--levels", levels, "highest chain level (default: deg)");

    int r_flag = -1;
    CLI::App* rproc_cmd = app.add_subcommand("rproc", "processing certificate and verification");
    add_common(rproc_cmd);
    rproc_cmd->add_option("--r", r_flag, "processing constant to verify (default: certified)");

    std::string spec_path;
    bool discover = false, series = false;
    std::size_t member_cap = 32;
    CLI::App* family_cmd = app.add_subcommand("family", "coherent family verification");
    add_common(family_cmd);
    CLI::Option* spec_opt = family_cmd->add_option("--spec", spec_path, "family file");
    CLI::Option* discover_opt =
        family_cmd->add_flag("--discover", discover, "derive a family by generator peeling");
    spec_opt->excludes(discover_opt);
    family_cmd->add_flag("--series", series, "solve the witness system for rational series");
    family_cmd->add_option("--cap", member_cap, "discovery member cap");

    int probe_d = 2, certified_r = -1;
    bool universal = false;
    ProbeConfig pcfg;
    CLI::App* probe_cmd = app.add_subcommand("probe", "sampled ideal inequalities");
    add_common(probe_cmd);
    probe_cmd->add_option("--d", probe_d, "generator degree bound for sampled ideals");
    probe_cmd->add_option("--seed", pcfg.seed, "random seed");
    probe_cmd->add_option("--samples", pcfg.random_samples, "random sample count");
    probe_cmd->add_option("--max-ideals", pcfg.max_monomial_ideals, "antichain enumeration cap");
    probe_cmd->add_flag("--universal", universal, "syzygy-degree bound probe");
    probe_cmd->add_option("--r", certified_r, "certified processing constant (universal probe)");

    int census_n = 2;
    std::size_t census_cap = 4096;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "quadratic monomial census");
    enum_cmd->add_option("--n", census_n, "number of generators")->required();
    enum_cmd->add_option("--cap", census_cap, "subset cap");

    CLI::App* m3_cmd = app.add_subcommand("m3", "second syzygies of the augmentation ideal");
    add_common(m3_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (enum_cmd->parsed()) return cmd_enumerate(census_n, census_cap, out, err);
        AnyPresentation pres = parse_presentation(slurp(c.file));
        return std::visit(
            [&](const auto& P) -> int {
                if (gb_cmd->parsed()) return cmd_gb(P, c, out, err);
                if (solve_cmd->parsed()) return cmd_solve(P, c, coeffs_csv, out, err);
                if (hilbert_cmd->parsed()) return cmd_hilbert(P, c, exact, out, err);
                if (chains_cmd->parsed()) return cmd_chains(P, c, levels, out, err);
                if (rate_cmd->parsed()) return cmd_rate(P, c, levels, out, err);
                if (rproc_cmd->parsed()) return cmd_rproc(P, c, r_flag, out, err);
                if (family_cmd->parsed()) {
                    if (!discover && spec_path.empty())
                        throw std::invalid_argument("family: need --spec FILE or --discover");
                    return cmd_family(P, c, spec_path, discover, series, member_cap, out, err);
                }
                if (probe_cmd->parsed())
                    return cmd_probe(P, c, probe_d, universal, certified_r, pcfg, out, err);
                if (m3_cmd->parsed()) return cmd_m3(P, c, out, err);
                throw std::logic_error("unreachable: no subcommand");
            },
            pres);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ncalg

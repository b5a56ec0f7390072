#ifndef NCALG_CACHE_HPP
#define NCALG_CACHE_HPP

// Persistent basis cache. Completed two-sided bases are stored as canonical
// key-value text, content-addressed by a hash of the presentation and the
// degree bound, with a trailing checksum. A load only succeeds when the
// checksum matches, the header matches the request, every defining relation
// reduces to zero, and the basis re-verifies mathematically (compositions
// within the bound reduce to zero). Anything less is discarded and the basis
// recomputed, so a tampered or stale file is never consumed.

#include <optional>
#include <string>

#include "groebner.hpp"
#include "kvdoc.hpp"
#include "parse.hpp"

namespace ncalg {

struct CacheConfig {
    std::string dir;  // empty: caching disabled
};

// precedence: explicit flag, then NCALG_CACHE_DIR, then disabled
CacheConfig cache_config_from(const std::string& flag_dir);

enum class CacheStatus { off, miss, hit, rejected };

inline std::string to_text(CacheStatus s) {
    switch (s) {
        case CacheStatus::off: return "off";
        case CacheStatus::miss: return "miss";
        case CacheStatus::hit: return "hit";
        case CacheStatus::rejected: return "rejected";
    }
    return "?";
}

namespace detail {
std::optional<std::string> read_file(const std::string& path);
bool write_file(const std::string& path, const std::string& content);
void ensure_directory(const std::string& path);

// canonical presentation text flattened to one line for key-value storage
template <class K>
std::string presentation_line(const Presentation<K>& P) {
    std::string s = canonical_text(P);
    for (char& c : s)
        if (c == '\n') c = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}
}  // namespace detail

inline const char* kCacheFormat = "ncalg.gbcache/1";

template <class K>
std::string cache_path(const CacheConfig& cfg, const Presentation<K>& P, int D) {
    std::string key = detail::presentation_line(P) + "\ndegree " + std::to_string(D);
    return cfg.dir + "/gb-" + hex64(fnv1a64(key)) + ".kv";
}

template <class K>
void cache_store(const CacheConfig& cfg, const Presentation<K>& P, int D,
                 const GroebnerBasis<K>& gb) {
    if (cfg.dir.empty()) return;
    detail::ensure_directory(cfg.dir);
    KVDoc doc;
    doc.put("format", kCacheFormat);
    doc.put("presentation", detail::presentation_line(P));
    doc.put("degree", static_cast<long>(D));
    doc.put("soundness", static_cast<long>(gb.soundness_degree));
    doc.put("complete", gb.complete_flag);
    doc.put("elems", gb.elems.size());
    for (std::size_t i = 0; i < gb.elems.size(); ++i)
        doc.put("elem." + std::to_string(i), poly_text(gb.elems[i], P.gens));
    std::string body = doc.payload();
    body += "checksum = " + hex64(fnv1a64(body)) + "\n";
    detail::write_file(cache_path(cfg, P, D), body);
}

// why: one short token/phrase for reporting ("absent", "checksum mismatch", ...)
template <class K>
std::optional<GroebnerBasis<K>> cache_load(const CacheConfig& cfg, const Presentation<K>& P,
                                           int D, std::string* why = nullptr) {
    auto reject = [&](const std::string& m) {
        if (why) *why = m;
        return std::nullopt;
    };
    if (cfg.dir.empty()) return reject("off");
    auto text = detail::read_file(cache_path(cfg, P, D));
    if (!text) return reject("absent");

    std::size_t pos = text->rfind("checksum = ");
    if (pos == std::string::npos || (pos != 0 && (*text)[pos - 1] != '\n'))
        return reject("missing checksum");
    std::string body = text->substr(0, pos);
    std::string tail = text->substr(pos);
    if (tail != "checksum = " + hex64(fnv1a64(body)) + "\n") return reject("checksum mismatch");

    std::map<std::string, std::string> kv;
    try {
        kv = kv_map(body);
    } catch (const std::exception&) {
        return reject("malformed");
    }
    auto want = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    const std::string* format = want("format");
    if (!format || *format != kCacheFormat) return reject("format mismatch");
    const std::string* pres = want("presentation");
    if (!pres || *pres != detail::presentation_line(P)) return reject("presentation mismatch");
    const std::string *degree = want("degree"), *sound = want("soundness"),
                      *complete = want("complete"), *elems = want("elems");
    if (!degree || !sound || !complete || !elems) return reject("malformed");

    GroebnerBasis<K> gb;
    try {
        if (std::stoi(*degree) != D) return reject("degree mismatch");
        gb.kind = BasisKind::two_sided;
        gb.ext = trivial_extension(P, FreeModuleShape{});
        gb.soundness_degree = std::stoi(*sound);
        gb.complete_flag = (*complete == "true");
        std::size_t n = static_cast<std::size_t>(std::stoul(*elems));
        for (std::size_t i = 0; i < n; ++i) {
            const std::string* e = want("elem." + std::to_string(i));
            if (!e) return reject("malformed");
            gb.elems.push_back(parse_poly<K>(*e, P));
        }
    } catch (const std::exception&) {
        return reject("malformed");
    }
    if (gb.soundness_degree < D) return reject("insufficient bound");

    // mathematical re-verification before the basis is trusted
    std::string verify_why;
    if (!verify_basis(gb, &verify_why)) return reject("verification failed: " + verify_why);
    for (const auto& r : P.relations)
        if (!normal_form(r, gb).is_zero()) return reject("relation does not reduce to zero");
    if (why) why->clear();
    return gb;
}

template <class K>
GroebnerBasis<K> cached_complete_two_sided(const CacheConfig& cfg, const Presentation<K>& P,
                                           int D, CacheStatus* status = nullptr,
                                           std::string* note = nullptr) {
    if (cfg.dir.empty()) {
        if (status) *status = CacheStatus::off;
        return complete_two_sided(P, D);
    }
    std::string why;
    if (auto gb = cache_load(cfg, P, D, &why)) {
        if (status) *status = CacheStatus::hit;
        return *gb;
    }
    if (status) *status = (why == "absent") ? CacheStatus::miss : CacheStatus::rejected;
    if (note) *note = why;
    GroebnerBasis<K> gb = complete_two_sided(P, D);
    cache_store(cfg, P, D, gb);
    return gb;
}

}  // namespace ncalg

#endif  // NCALG_CACHE_HPP

#ifndef NCALG_KVDOC_HPP
#define NCALG_KVDOC_HPP

// Structured command output: an ordered key-value document whose payload
// (the non-comment lines) is deterministic down to the byte. Comment lines
// ("# ...") carry the human summary and anything that may legitimately vary
// between runs, such as wall time.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ncalg {

struct KVDoc {
    struct Line {
        bool comment = false;
        std::string text;  // for comments: without the leading "# "
    };
    std::vector<Line> lines;

    void comment(const std::string& text);
    void put(const std::string& key, const std::string& value);
    // keeps string literals away from the bool overload
    void put(const std::string& key, const char* value);
    void put(const std::string& key, long value);
    void put(const std::string& key, std::size_t value);
    void put(const std::string& key, bool value);

    // non-comment lines only, one per line, trailing newline
    std::string payload() const;
    // everything, comments included
    std::string full_text() const;
};

// Reads a document back: payload lines as ordered (key, value) pairs.
// Malformed payload lines throw.
std::vector<std::pair<std::string, std::string>> kv_parse(const std::string& text);
std::map<std::string, std::string> kv_map(const std::string& text);

// FNV-1a, the content-addressing hash for cache filenames and input ids.
std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

}  // namespace ncalg

#endif

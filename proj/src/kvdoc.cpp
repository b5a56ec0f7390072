#include "ncalg/kvdoc.hpp"

#include <stdexcept>

namespace ncalg {

namespace {
void check_key(const std::string& key) {
    if (key.empty()) throw std::invalid_argument("kvdoc: empty key");
    for (char c : key) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
                  c == '[' || c == ']';
        if (!ok) throw std::invalid_argument("kvdoc: bad key character in '" + key + "'");
    }
}
void check_value(const std::string& v) {
    if (v.find('\n') != std::string::npos)
        throw std::invalid_argument("kvdoc: newline in value");
}
}  // namespace

void KVDoc::comment(const std::string& text) {
    check_value(text);
    lines.push_back(Line{true, text});
}

void KVDoc::put(const std::string& key, const std::string& value) {
    check_key(key);
    check_value(value);
    lines.push_back(Line{false, key + " = " + value});
}

void KVDoc::put(const std::string& key, const char* value) { put(key, std::string(value)); }
void KVDoc::put(const std::string& key, long value) { put(key, std::to_string(value)); }
void KVDoc::put(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }
void KVDoc::put(const std::string& key, bool value) { put(key, std::string(value ? "true" : "false")); }

std::string KVDoc::payload() const {
    std::string s;
    for (const auto& l : lines)
        if (!l.comment) s += l.text + "\n";
    return s;
}

std::string KVDoc::full_text() const {
    std::string s;
    for (const auto& l : lines) s += l.comment ? "# " + l.text + "\n" : l.text + "\n";
    return s;
}

std::vector<std::pair<std::string, std::string>> kv_parse(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::size_t sep = line.find(" = ");
        if (sep == std::string::npos)
            throw std::runtime_error("kvdoc: malformed line " + std::to_string(lineno));
        out.emplace_back(line.substr(0, sep), line.substr(sep + 3));
    }
    return out;
}

std::map<std::string, std::string> kv_map(const std::string& text) {
    std::map<std::string, std::string> m;
    for (auto& [k, v] : kv_parse(text)) m[k] = v;
    return m;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace ncalg

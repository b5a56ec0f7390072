#include "ncalg/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ncalg {

CacheConfig cache_config_from(const std::string& flag_dir) {
    if (!flag_dir.empty()) return CacheConfig{flag_dir};
    if (const char* env = std::getenv("NCALG_CACHE_DIR"); env && *env)
        return CacheConfig{std::string(env)};
    return CacheConfig{};
}

namespace detail {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return ss.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

void ensure_directory(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
}

}  // namespace detail

}  // namespace ncalg

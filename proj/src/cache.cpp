#include "ampsum/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace ampsum {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

}  // namespace

Cache::Cache(std::string dir) {
    if (dir.empty()) {
        if (const char* env = std::getenv("AMPSUM_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) dir = "ampsum_cache";
    dir_ = dir;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("Cache: cannot create directory " + dir_);
}

std::string Cache::address(const CacheKey& key) const {
    std::string material = std::string(version()) + "|" + key.kind + "|" +
                           std::to_string(key.modulus) + "|" + std::to_string(key.index) +
                           "|" + key.grid;
    return hex64(fnv1a(material));
}

void Cache::put(const CacheKey& key, const std::string& payload) {
    std::string addr = address(key);
    std::string final_path = dir_ + "/" + addr + ".rec";
    std::string tmp_path = final_path + ".tmp" + std::to_string(
        (unsigned long long)fnv1a(payload) % 1000000);
    std::string checksum = hex64(fnv1a(payload));
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("Cache: cannot write " + tmp_path);
        out << checksum << '\n' << payload;
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
        std::filesystem::remove(tmp_path, ec);
        throw Error("Cache: rename failed for " + final_path);
    }
}

std::optional<std::string> Cache::get(const CacheKey& key) {
    std::string final_path = dir_ + "/" + address(key) + ".rec";
    std::ifstream in(final_path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string checksum;
    if (!std::getline(in, checksum)) return std::nullopt;
    std::string payload((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    if (hex64(fnv1a(payload)) != checksum) {
        std::error_code ec;
        std::filesystem::remove(final_path, ec);
        return std::nullopt;  // self-heal: caller recomputes and overwrites
    }
    return payload;
}

}  // namespace ampsum

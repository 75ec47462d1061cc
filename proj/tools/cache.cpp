#include "cache.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace kronmot::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

} // namespace

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".json"); }

std::optional<Json> ResultCache::load(const std::string& key) const {
    const fs::path p = path_for(key);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    in.close();
    try {
        Json entry = Json::parse(buf.str());
        const std::string payload = entry.at("result").dump();
        if (entry.at("key").get<std::string>() == key && entry.at("checksum").get<std::string>() == hex(fnv1a(payload)))
            return std::move(entry.at("result"));
    } catch (const std::exception&) {
    }
    std::error_code ec;
    fs::remove(p, ec);
    return std::nullopt;
}

void ResultCache::store(const std::string& key, const Json& result) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;
    const auto now = std::chrono::system_clock::now();
    Json entry{{"key", key},
               {"checksum", hex(fnv1a(result.dump()))},
               {"created", std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()},
               {"result", result}};
    const fs::path target = path_for(key);
    std::random_device rd;
    const fs::path tmp = target.string() + ".tmp" + hex((std::uint64_t(rd()) << 32) | rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << entry.dump() << '\n';
        if (!out.flush()) {
            out.close();
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

} // namespace kronmot::cli

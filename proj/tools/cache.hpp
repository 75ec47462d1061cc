#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kronmot/json_io.hpp"

namespace kronmot::cli {

std::uint64_t fnv1a(std::string_view bytes);

/// Content-addressed store of command results. Each file holds the full key,
/// a checksum of the payload and a creation time; anything that fails to
/// match on read is treated as a miss and removed.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    std::optional<Json> load(const std::string& key) const;
    /// Best effort: an unwritable directory leaves the cache empty.
    void store(const std::string& key, const Json& result) const;

private:
    std::filesystem::path dir_;
};

} // namespace kronmot::cli

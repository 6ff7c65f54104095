#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace zstr::cli {

struct CacheEntry {
    std::string key;      ///< hex SHA-256 of the canonical request
    std::string payload;  ///< rendered output, byte for byte
    std::int64_t created_at = 0;  ///< seconds since the Unix epoch
};

/// One file per entry under a directory. Entries are published by writing a
/// temporary file and renaming it, so readers never see a partial entry.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// Hex SHA-256 of request, salted with the tool version.
    static std::string key_for(std::string_view request);

    [[nodiscard]] std::optional<CacheEntry> load(const std::string& key) const;
    void store(const std::string& key, std::string_view payload) const;

    [[nodiscard]] const std::filesystem::path& directory() const noexcept { return dir_; }
    [[nodiscard]] std::filesystem::path entry_path(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

}  // namespace zstr::cli

#include "zstr_cli/cache.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>
#include <openssl/evp.h>
#include <unistd.h>

#include "zstr_cli/errors.hpp"

namespace zstr::cli {

namespace {

constexpr std::string_view kMagic = "zstr-cache 1";

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError(fmt::format("cannot create cache directory {}: {}", dir_.string(), ec.message()));
}

std::string ResultCache::key_for(std::string_view request) {
    const std::string salted = fmt::format("zstr {}\n{}", ZSTR_VERSION, request);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(salted.data(), salted.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const { return dir_ / (key + ".entry"); }

// Layout: magic line, "created_at N", "bytes N", blank line, payload.
std::optional<CacheEntry> ResultCache::load(const std::string& key) const {
    std::ifstream in(entry_path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string magic;
    std::string created_label;
    std::string bytes_label;
    CacheEntry entry{key, {}, 0};
    std::size_t bytes = 0;
    if (!std::getline(in, magic) || magic != kMagic) return std::nullopt;
    if (!(in >> created_label >> entry.created_at >> bytes_label >> bytes)) return std::nullopt;
    if (created_label != "created_at" || bytes_label != "bytes") return std::nullopt;
    in.ignore(2);
    entry.payload.resize(bytes);
    if (!in.read(entry.payload.data(), static_cast<std::streamsize>(bytes))) return std::nullopt;
    return entry;
}

void ResultCache::store(const std::string& key, std::string_view payload) const {
    static std::atomic<unsigned> counter{0};
    const auto tmp = dir_ / fmt::format(".{}.{}.{}.tmp", key, ::getpid(), counter++);
    const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << kMagic << '\n' << "created_at " << now << '\n' << "bytes " << payload.size() << "\n\n";
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out.flush()) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError(fmt::format("cannot write cache entry {}", tmp.string()));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, entry_path(key), ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(fmt::format("cannot publish cache entry {}", entry_path(key).string()));
    }
}

}  // namespace zstr::cli

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lgdrate {

// Flat key=value configuration ('#' starts a comment). Known keys:
//   pd, asset_correlation, confidence, ec_mode (monthly|annual),
//   writeoffs_only (true|false), coc_rate, risk_free, tolerance,
//   max_iterations, initial_delta, delta_upper_bound
class Config {
public:
    Config() = default;
    static Config load(const std::string& path);
    static Config from_text(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const;
    double number(const std::string& key, double fallback) const;
    long integer(const std::string& key, long fallback) const;
    bool flag(const std::string& key, bool fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

    // FNV-1a over the canonical "key=value" lines; stable across runs.
    std::string hash() const;

private:
    std::map<std::string, std::string> entries_;
};

std::uint64_t fnv1a(const std::string& text, std::uint64_t seed = 14695981039346656037ull);

} // namespace lgdrate

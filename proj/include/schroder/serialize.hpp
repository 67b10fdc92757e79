#pragma once

#include "schroder/polynomial.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schroder {

class Pattern;

/// [{"exp":{"s":a,"t":b,...},"coeff":m}, ...] sorted by exponent.
std::string polynomial_to_json(const Polynomial& p);
/// Header row of variable names plus "coeff", one row per monomial.
std::string polynomial_to_csv(const Polynomial& p);
/// {"t^0":1,"t^1":4,...}; the polynomial must be univariate.
std::string univariate_to_json(const Polynomial& p);
/// [1,2]
std::string integers_to_json(std::span<const BigInt> values);

/// Environment variable consulted when no cache directory is given.
inline constexpr const char* cache_dir_env = "SCHRODER_CACHE_DIR";
std::optional<std::filesystem::path> default_cache_dir();

/// "<kind>_n<n>_avoid<p1-p2>.txt", e.g. "perm_n7_avoid2413-4213.txt".
std::string cache_file_name(const std::string& kind, int n, std::span<const Pattern> patterns);

/// One encoded object per line. Writes through a temporary file and renames it into place.
void write_cache(const std::filesystem::path& file, std::span<const std::string> lines);
/// nullopt when the file is absent.
std::optional<std::vector<std::string>> read_cache(const std::filesystem::path& file);

}  // namespace schroder

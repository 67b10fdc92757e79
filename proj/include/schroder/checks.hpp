#pragma once

#include "schroder/core.hpp"
#include "schroder/patterns.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace schroder {

/// Enumerated classes, memoized in memory and optionally mirrored in a cache
/// directory (one encoded object per line). A cache hit is re-validated
/// before use.
class ClassStore {
public:
    explicit ClassStore(int jobs = 1, std::optional<std::filesystem::path> cache_dir = std::nullopt);

    const std::vector<Permutation>& permutations(int n, const std::vector<Pattern>& patterns);
    const std::vector<InversionSequence>& inversion_sequences(int n, const std::vector<Pattern>& patterns);

    int jobs() const noexcept { return jobs_; }
    const std::optional<std::filesystem::path>& cache_dir() const noexcept { return cache_dir_; }
    /// Number of classes served from disk so far.
    int cache_hits() const noexcept { return cache_hits_; }

private:
    int jobs_;
    std::optional<std::filesystem::path> cache_dir_;
    int cache_hits_ = 0;
    std::mutex mutex_;
    std::map<std::string, std::vector<Permutation>> perms_;
    std::map<std::string, std::vector<InversionSequence>> invseqs_;
};

struct CheckInfo {
    std::string name;
    std::string summary;
    /// Sweeps all of S_n or I_n rather than a restricted class.
    bool unrestricted = false;
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& name);

struct CheckResult {
    std::string name;
    int n = 0;
    bool passed = true;
    std::uint64_t objects = 0;
    /// JSON object describing the offending object and its statistics; empty on success.
    std::string counterexample;
    std::string detail;
};

/// Runs a named check for every size 1..n (n = 0 passes vacuously).
/// Throws ValidationError for an unknown name.
CheckResult run_check(const std::string& name, int n, ClassStore& store);

/// Large Schroder numbers indexed so that schroder_number(n) = |I_n(021)|.
std::uint64_t schroder_number(int n);

/// The four permutation classes counted by Schroder numbers.
const std::vector<std::vector<Pattern>>& schroder_classes();

}  // namespace schroder

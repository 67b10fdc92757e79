#include "schroder/serialize.hpp"

#include "schroder/patterns.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace schroder {

namespace {

nlohmann::ordered_json big_to_json(const BigInt& c) {
    if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
    if (c < 0 && c >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(c);
    return c.str();  // beyond 64 bits the exact digits travel as a string
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) {
    // ordered_json keeps the variable order s,t,u,v instead of sorting keys.
    auto out = nlohmann::ordered_json::array();
    for (const auto& [exps, c] : p.terms()) {
        nlohmann::ordered_json rec, exp = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < exps.size(); ++k) exp[p.variables()[k]] = exps[k];
        rec["exp"] = exp;
        rec["coeff"] = big_to_json(c);
        out.push_back(rec);
    }
    return out.dump();
}

std::string polynomial_to_csv(const Polynomial& p) {
    std::ostringstream os;
    for (const auto& v : p.variables()) os << v << ',';
    os << "coeff\n";
    for (const auto& [exps, c] : p.terms()) {
        for (auto e : exps) os << e << ',';
        os << c.str() << '\n';
    }
    return os.str();
}

std::string univariate_to_json(const Polynomial& p) {
    if (p.arity() != 1) throw std::invalid_argument("univariate_to_json: polynomial has " +
                                                    std::to_string(p.arity()) + " variables");
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [exps, c] : p.terms())
        out[p.variables()[0] + "^" + std::to_string(exps[0])] = big_to_json(c);
    return out.dump();
}

std::string integers_to_json(std::span<const BigInt> values) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : values) out.push_back(big_to_json(v));
    return out.dump();
}

std::optional<std::filesystem::path> default_cache_dir() {
    const char* dir = std::getenv(cache_dir_env);
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

std::string cache_file_name(const std::string& kind, int n, std::span<const Pattern> patterns) {
    return kind + "_n" + std::to_string(n) + "_avoid" + patterns_to_string(patterns, '-') + ".txt";
}

void write_cache(const std::filesystem::path& file, std::span<const std::string> lines) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        for (const auto& line : lines) out << line << '\n';
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<std::vector<std::string>> read_cache(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace schroder

// schroder: enumeration, maps, statistics, theorem checks, tables, series and SVG.
//
// Exit codes: 0 success or PASS, 1 a check failed, 2 usage or invalid input,
// 3 size above the safety limit.

#include <schroder/bijections.hpp>
#include <schroder/checks.hpp>
#include <schroder/mfs.hpp>
#include <schroder/outline.hpp>
#include <schroder/patterns.hpp>
#include <schroder/render.hpp>
#include <schroder/serialize.hpp>
#include <schroder/series.hpp>
#include <schroder/statistics.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <iostream>
#include <optional>
#include <thread>

using namespace schroder;
using Json = nlohmann::ordered_json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string cache;
    std::optional<int> limit;

    std::optional<std::filesystem::path> cache_dir() const {
        if (!cache.empty()) return std::filesystem::path(cache);
        return default_cache_dir();
    }
    void check_limit(int n, bool unrestricted) const {
        const int bound = limit.value_or(unrestricted ? 10 : 12);
        if (n > bound)
            throw LimitError("n = " + std::to_string(n) + " exceeds the safety limit " + std::to_string(bound) +
                             " (raise it with --limit)");
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", c.cache, "Cache directory (default: $SCHRODER_CACHE_DIR)");
    sub->add_option("--limit", c.limit, "Safety limit on n");
}

Json sets_json(const std::vector<std::pair<std::string, PositionSet>>& sets) {
    Json out = Json::object();
    for (const auto& [name, s] : sets) out[name] = s.to_string();
    return out;
}

Json permutation_stats(const Permutation& p) {
    return sets_json({{"VID", vid_set(p)}, {"DES", des_set(p)}, {"LMA", lma_set(p)},
                      {"LMI", lmi_set(p)}, {"RMA", rma_set(p)}, {"RMI", rmi_set(p)}});
}

Json sequence_stats(const InversionSequence& e) {
    std::vector<std::pair<std::string, PositionSet>> sets{{"DIST", dist_set(e)}, {"ASC", asc_set(e)},
                                                          {"ZERO", zero_set(e)}, {"EMA", ema_set(e)},
                                                          {"RMI", rmi_seq_set(e)}};
    if (avoids_021(e)) sets.emplace_back("EXPO", expo_set(e));
    return sets_json(sets);
}

void print_stats(const std::string& label, const Json& stats, const std::string& format) {
    if (format == "csv") {
        for (const auto& [k, v] : stats.items()) std::cout << label << ',' << k << ",\"" << v.get<std::string>() << "\"\n";
    } else {
        std::cout << label << ':';
        for (const auto& [k, v] : stats.items()) std::cout << ' ' << k << '=' << v.get<std::string>();
        std::cout << '\n';
    }
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    std::string kind = "perm";
    std::string avoid;
    std::string path_class = "A";
    int n = 0;
    bool list = false;
};

PathClass parse_class(const std::string& c) {
    if (c == "A") return PathClass::A;
    if (c == "B") return PathClass::B;
    if (c == "R") return PathClass::R;
    throw ValidationError("unknown path class '" + c + "'");
}

int cmd_enumerate(const EnumerateArgs& a, const Common& c) {
    const auto pats = parse_patterns(a.avoid);
    std::vector<std::string> objects;
    std::size_t count = 0;
    if (a.kind == "path") {
        c.check_limit(a.n, false);
        const auto paths = enumerate_paths(a.n, parse_class(a.path_class));
        count = paths.size();
        if (a.list)
            for (const auto& d : paths) objects.push_back(d.to_string());
    } else {
        c.check_limit(a.n, pats.empty());
        ClassStore store(c.jobs, c.cache_dir());
        if (a.kind == "perm") {
            const auto& all = store.permutations(a.n, pats);
            count = all.size();
            if (a.list)
                for (const auto& p : all) objects.push_back(p.to_string());
        } else {
            const auto& all = store.inversion_sequences(a.n, pats);
            count = all.size();
            if (a.list)
                for (const auto& e : all) objects.push_back(e.to_string());
        }
    }
    if (c.format == "json") {
        Json out{{"kind", a.kind}, {"n", a.n}, {"avoid", a.avoid}, {"count", count}};
        if (a.kind == "path") out["class"] = a.path_class;
        if (a.list) out["objects"] = objects;
        std::cout << out.dump() << '\n';
    } else if (c.format == "csv") {
        if (a.list) {
            std::cout << "index,object\n";
            for (std::size_t i = 0; i < objects.size(); ++i) std::cout << i + 1 << ",\"" << objects[i] << "\"\n";
        } else {
            std::cout << "kind,n,avoid,count\n" << a.kind << ',' << a.n << ",\"" << a.avoid << "\"," << count << '\n';
        }
    } else {
        for (const auto& o : objects) std::cout << o << '\n';
        std::cout << count << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- map, stats

struct MapArgs {
    std::string via;
    std::string input;
    bool stats = false;
};

int cmd_map(const MapArgs& a, const Common& c) {
    std::string image;
    Json lhs, rhs;
    if (a.via == "psi" || a.via == "phi-inv") {
        const auto e = make_inversion_sequence(parse_word(a.input));
        const auto p = a.via == "psi" ? psi(e) : phi_inverse(e);
        image = p.to_string();
        lhs = sequence_stats(e);
        rhs = permutation_stats(p);
    } else {
        const auto p = make_permutation(parse_word(a.input));
        const auto e = a.via == "psi-inv" ? psi_inverse(p) : phi(p);
        image = e.to_string();
        lhs = permutation_stats(p);
        rhs = sequence_stats(e);
    }
    if (c.format == "json") {
        Json out{{"via", a.via}, {"input", a.input}, {"image", image}};
        if (a.stats) out["stats"] = Json{{"input", lhs}, {"image", rhs}};
        std::cout << out.dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << "via,input,image\n" << a.via << ",\"" << a.input << "\",\"" << image << "\"\n";
        if (a.stats) {
            print_stats("input", lhs, "csv");
            print_stats("image", rhs, "csv");
        }
    } else {
        std::cout << image << '\n';
        if (a.stats) {
            print_stats("input", lhs, "text");
            print_stats("image", rhs, "text");
        }
    }
    return 0;
}

struct StatsArgs {
    std::string kind = "perm";
    std::string input;
};

int cmd_stats(const StatsArgs& a, const Common& c) {
    Json stats;
    if (a.kind == "perm") {
        const auto p = make_permutation(parse_word(a.input));
        stats = permutation_stats(p);
        stats["des"] = des(p);
        stats["ides"] = ides(p);
    } else {
        const auto e = make_inversion_sequence(parse_word(a.input));
        stats = sequence_stats(e);
        stats["asc"] = asc(e);
        stats["dist"] = dist(e);
        if (avoids_021(e)) stats["outline"] = outline_of(e).to_string();
    }
    if (c.format == "json") {
        std::cout << Json{{"kind", a.kind}, {"input", a.input}, {"stats", stats}}.dump() << '\n';
    } else {
        for (const auto& [k, v] : stats.items())
            std::cout << k << (c.format == "csv" ? "," : ": ") << (v.is_string() ? v.get<std::string>() : v.dump())
                      << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string check;
    int n = 0;
    bool list_checks = false;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
    if (a.list_checks) {
        for (const auto& info : check_catalog()) std::cout << info.name << "  " << info.summary << '\n';
        return 0;
    }
    const auto* info = find_check(a.check);
    if (info == nullptr) throw ValidationError("unknown check '" + a.check + "' (see --list-checks)");
    c.check_limit(a.n, info->unrestricted);
    ClassStore store(c.jobs, c.cache_dir());
    const auto r = run_check(a.check, a.n, store);
    if (c.format == "json") {
        Json out{{"check", r.name}, {"n", r.n}, {"passed", r.passed}, {"objects", r.objects}};
        out["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json::parse(r.counterexample);
        if (!r.detail.empty()) out["detail"] = r.detail;
        std::cout << out.dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << "check,n,passed,objects\n" << r.name << ',' << r.n << ',' << (r.passed ? "PASS" : "FAIL") << ','
                  << r.objects << '\n';
    } else {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " n<=" << r.n << " (" << r.objects << " objects)";
        if (!r.passed) std::cout << ": " << r.detail << '\n' << r.counterexample;
        std::cout << '\n';
    }
    return r.passed ? 0 : exit_fail;
}

// ---------------------------------------------------------------- table, gamma

struct TableArgs {
    std::string poly;
    std::string kind = "perm";
    std::string avoid;
    int n = 0;
    bool gamma = false;
};

const std::map<std::string, std::function<int(const Permutation&)>>& perm_stats() {
    static const std::map<std::string, std::function<int(const Permutation&)>> m{
        {"des", des},
        {"ides", ides},
        {"vid", [](const Permutation& p) { return vid_set(p).size(); }},
        {"lma", [](const Permutation& p) { return lma_set(p).size(); }},
        {"lmi", [](const Permutation& p) { return lmi_set(p).size(); }},
        {"rma", [](const Permutation& p) { return rma_set(p).size(); }},
        {"rmi", [](const Permutation& p) { return rmi_set(p).size(); }},
    };
    return m;
}

const std::map<std::string, std::function<int(const InversionSequence&)>>& seq_stats() {
    static const std::map<std::string, std::function<int(const InversionSequence&)>> m{
        {"asc", asc},
        {"dist", dist},
        {"zero", [](const InversionSequence& e) { return zero_set(e).size(); }},
        {"ema", [](const InversionSequence& e) { return ema_set(e).size(); }},
        {"rmi", [](const InversionSequence& e) { return rmi_seq_set(e).size(); }},
    };
    return m;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');)
        if (!part.empty()) out.push_back(part);
    return out;
}

void print_polynomial(const Polynomial& p, const Common& c) {
    if (c.format == "csv")
        std::cout << polynomial_to_csv(p);
    else if (c.format == "json")
        std::cout << (p.arity() == 1 ? univariate_to_json(p) : polynomial_to_json(p)) << '\n';
    else
        std::cout << p.to_string() << '\n';
}

void print_gamma(const std::vector<BigInt>& g, const Common& c) {
    if (c.format == "csv") {
        std::cout << "k,gamma\n";
        for (std::size_t k = 0; k < g.size(); ++k) std::cout << k << ',' << g[k].str() << '\n';
    } else {
        std::cout << integers_to_json(g) << '\n';
    }
}

std::vector<BigInt> gamma_vector(const std::string& kind, const std::string& avoid, int n, const Common& c) {
    if (n < 1) throw ValidationError("gamma vectors need n >= 1");
    ClassStore store(c.jobs, c.cache_dir());
    if (kind == "invseq") {
        const auto pats = parse_patterns(avoid.empty() ? "021" : avoid);
        c.check_limit(n, pats.empty());
        if (patterns_to_string(pats) == "021") return tilde_invseq_gamma(n);
        std::vector<BigInt> poly(static_cast<std::size_t>(n), BigInt(0));
        for (const auto& e : store.inversion_sequences(n, pats)) poly[static_cast<std::size_t>(asc(e))] += 1;
        auto g = gamma_decompose(poly, n);
        if (!g.ok) throw std::domain_error("ascent polynomial is not gamma-expandable: " + g.diagnostic);
        return g.gamma;
    }
    const auto pats = parse_patterns(avoid.empty() ? "2413,4213" : avoid);
    c.check_limit(n, pats.empty());
    return gamma_via_orbits(store.permutations(n, pats));
}

int cmd_table(const TableArgs& a, const Common& c) {
    if (a.gamma) {
        print_gamma(gamma_vector(a.kind, a.avoid, a.n, c), c);
        return 0;
    }
    const auto pats = parse_patterns(a.avoid);
    c.check_limit(a.n, pats.empty());
    ClassStore store(c.jobs, c.cache_dir());
    auto names = split(a.poly);
    if (names.empty()) throw ValidationError("--poly needs at least one statistic");
    if (a.kind == "invseq" && names == std::vector<std::string>{"full"}) {
        // S_n(s,t,u,v): s^dist t^asc u^zero v^ema
        const auto& m = seq_stats();
        print_polynomial(distribution(store.inversion_sequences(a.n, pats),
                                      std::vector<NumericStat<InversionSequence>>{
                                          {"s", m.at("dist")}, {"t", m.at("asc")}, {"u", m.at("zero")}, {"v", m.at("ema")}}),
                         c);
        return 0;
    }
    auto var_name = [&](const std::string& stat) { return names.size() == 1 ? std::string("t") : stat; };
    if (a.kind == "perm") {
        std::vector<NumericStat<Permutation>> stats;
        for (const auto& s : names) {
            auto it = perm_stats().find(s);
            if (it == perm_stats().end()) throw ValidationError("unknown permutation statistic '" + s + "'");
            stats.push_back({var_name(s), it->second});
        }
        print_polynomial(distribution(store.permutations(a.n, pats), stats), c);
    } else {
        std::vector<NumericStat<InversionSequence>> stats;
        for (const auto& s : names) {
            auto it = seq_stats().find(s);
            if (it == seq_stats().end()) throw ValidationError("unknown sequence statistic '" + s + "'");
            stats.push_back({var_name(s), it->second});
        }
        print_polynomial(distribution(store.inversion_sequences(a.n, pats), stats), c);
    }
    return 0;
}

struct GammaArgs {
    std::string cls = "perms";
    std::string avoid;
    int n = 0;
};

int cmd_gamma(const GammaArgs& a, const Common& c) {
    print_gamma(gamma_vector(a.cls == "perms" ? "perm" : "invseq", a.avoid, a.n, c), c);
    return 0;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
    int order = 6;
    std::string spec = "full";
    bool verify_cubic = false;
};

int cmd_series(const SeriesArgs& a, const Common& c) {
    c.check_limit(a.order, false);
    if (a.order < 1) throw ValidationError("--order must be at least 1");
    const auto sol = solve_gs_system(a.order);
    const auto st = sol.S.substitute_one(TruncatedSeries::u).substitute_one(TruncatedSeries::v);
    if (a.verify_cubic) {
        bool all = true;
        Json out = Json::array();
        for (const auto& id : verify_cubic(st)) {
            all = all && id.holds;
            if (c.format == "json")
                out.push_back({{"identity", id.name}, {"order", a.order}, {"passed", id.holds},
                               {"first_failing_order", id.first_failing_order ? Json(*id.first_failing_order) : Json(nullptr)}});
            else
                std::cout << (id.holds ? "PASS " : "FAIL ") << id.name << " through z^" << a.order
                          << (id.holds ? "" : " (residual at z^" + std::to_string(*id.first_failing_order) + ")")
                          << '\n';
        }
        if (c.format == "json") std::cout << out.dump() << '\n';
        return all ? 0 : exit_fail;
    }
    TruncatedSeries shown = sol.S;
    if (a.spec == "st") shown = st;
    else if (a.spec == "s") shown = st.substitute_one(TruncatedSeries::t);
    else if (a.spec == "t") shown = st.substitute_one(TruncatedSeries::s);
    if (c.format == "json") {
        Json out = Json::array();
        for (int k = 1; k <= a.order; ++k)
            out.push_back({{"z", k}, {"coeff", Json::parse(polynomial_to_json(shown.coefficient(k)))}});
        std::cout << out.dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << "z,s,t,u,v,coeff\n";
        for (int k = 1; k <= a.order; ++k)
            for (const auto& [e, coeff] : shown.coefficient(k).terms())
                std::cout << k << ',' << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ',' << coeff.str() << '\n';
    } else {
        for (int k = 1; k <= a.order; ++k) std::cout << "z^" << k << ": " << shown.coefficient(k).to_string() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string input;
    std::string path;
    std::string output;
    bool labels = false;
    bool no_lines = false;
    int cell = 36;
};

int cmd_render(const RenderArgs& a, const Common&) {
    if (a.input.empty() == a.path.empty()) throw ValidationError("give exactly one of --input and --path");
    TwoColoredDyckPath d;
    RenderOptions opts;
    opts.cell = a.cell;
    opts.lines = !a.no_lines;
    if (!a.input.empty()) {
        const auto e = make_inversion_sequence(parse_word(a.input));
        d = outline_of(e);
        if (a.labels) {
            const auto p = psi(e);
            opts.labels.assign(p.word().begin(), p.word().end());
        }
    } else {
        d = TwoColoredDyckPath::parse(a.path);
        if (a.labels) {
            const auto p = psi(invert_outline(d));
            opts.labels.assign(p.word().begin(), p.word().end());
        }
    }
    const auto svg = render_svg(d, opts);
    if (a.output.empty() || a.output == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(a.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + a.output);
        out << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schroder-class combinatorics: 021-avoiding inversion sequences and S_n(2413,4213)"};
    app.require_subcommand(1);
    Common common;

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "Count or list an avoidance class");
    enumerate->add_option("--kind", en.kind)->check(CLI::IsMember({"perm", "invseq", "path"}));
    enumerate->add_option("--avoid", en.avoid, "Comma-separated patterns, e.g. 2413,4213");
    enumerate->add_option("--class", en.path_class, "Path class for --kind path")->check(CLI::IsMember({"A", "B", "R"}));
    enumerate->add_option("--n", en.n)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--list", en.list, "Print the objects in lexicographic order");
    add_common(enumerate, common);

    MapArgs mp;
    auto* map = app.add_subcommand("map", "Apply psi, psi-inv, phi or phi-inv");
    map->add_option("--via", mp.via)->required()->check(CLI::IsMember({"psi", "psi-inv", "phi", "phi-inv"}));
    map->add_option("--input", mp.input)->required();
    map->add_flag("--stats", mp.stats, "Also print the set statistics of both sides");
    add_common(map, common);

    StatsArgs st;
    auto* stats = app.add_subcommand("stats", "Set-valued statistics of one object");
    stats->add_option("--kind", st.kind)->check(CLI::IsMember({"perm", "invseq"}));
    stats->add_option("--input", st.input)->required();
    add_common(stats, common);

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Run a named exhaustive check for sizes 1..n");
    verify->add_option("--check", vf.check);
    verify->add_option("--n", vf.n)->check(CLI::NonNegativeNumber);
    verify->add_flag("--list-checks", vf.list_checks);
    add_common(verify, common);

    TableArgs tb;
    auto* table = app.add_subcommand("table", "Distribution polynomial or gamma vector of a class");
    table->add_option("--poly", tb.poly, "Statistic(s), e.g. des or dist,asc; 'full' for s,t,u,v");
    table->add_option("--kind", tb.kind)->check(CLI::IsMember({"perm", "invseq"}));
    table->add_option("--avoid", tb.avoid);
    table->add_option("--n", tb.n)->required()->check(CLI::NonNegativeNumber);
    table->add_flag("--gamma", tb.gamma);
    add_common(table, common);

    GammaArgs gm;
    auto* gamma = app.add_subcommand("gamma", "Gamma vector of a class");
    gamma->add_option("--class", gm.cls)->check(CLI::IsMember({"perms", "invseq"}));
    gamma->add_option("--avoid", gm.avoid);
    gamma->add_option("--n", gm.n)->required()->check(CLI::PositiveNumber);
    add_common(gamma, common);

    SeriesArgs sr;
    auto* series = app.add_subcommand("series", "Solve the generating-function system");
    series->add_option("--order", sr.order)->check(CLI::PositiveNumber);
    series->add_option("--spec", sr.spec)->check(CLI::IsMember({"st", "s", "t", "full"}));
    series->add_flag("--verify-cubic", sr.verify_cubic);
    add_common(series, common);

    RenderArgs rd;
    auto* render = app.add_subcommand("render", "SVG of an outline with its diagonal lines");
    render->add_option("--input", rd.input, "A 021-avoiding inversion sequence");
    render->add_option("--path", rd.path, "A path such as 0r,1,1r,1,2,2r,4");
    render->add_option("--output", rd.output, "SVG file (default: stdout)");
    render->add_option("--cell", rd.cell)->check(CLI::PositiveNumber);
    render->add_flag("--labels", rd.labels, "Write the letters of psi above the steps");
    render->add_flag("--no-lines", rd.no_lines);
    add_common(render, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*enumerate) return cmd_enumerate(en, common);
        if (*map) return cmd_map(mp, common);
        if (*stats) return cmd_stats(st, common);
        if (*verify) {
            if (!vf.list_checks && vf.check.empty()) throw ValidationError("--check is required");
            return cmd_verify(vf, common);
        }
        if (*table) {
            if (!tb.gamma && tb.poly.empty()) throw ValidationError("give --poly or --gamma");
            return cmd_table(tb, common);
        }
        if (*gamma) return cmd_gamma(gm, common);
        if (*series) return cmd_series(sr, common);
        if (*render) return cmd_render(rd, common);
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_limit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}

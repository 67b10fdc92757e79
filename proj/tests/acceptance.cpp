// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <schroder/bijections.hpp>
#include <schroder/checks.hpp>
#include <schroder/mfs.hpp>
#include <schroder/patterns.hpp>
#include <schroder/series.hpp>
#include <schroder/statistics.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace schroder;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        note += (note.empty() ? "" : "; ") + what;
    }
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

Permutation P(const std::string& s) { return make_permutation(parse_word(s)); }
InversionSequence E(const std::string& s) { return make_inversion_sequence(parse_word(s)); }

void run_named(Verdict& v, ClassStore& store, const std::string& check, int n) {
    auto r = run_check(check, n, store);
    v.require(r.passed, check + " n<=" + std::to_string(n) + ": " + r.detail + " " + r.counterexample);
}

Verdict counts() {
    Verdict v;
    const std::vector<std::uint64_t> stated{1, 2, 6, 22, 90, 394, 1860};
    const auto i021 = parse_patterns("021");
    std::vector<std::pair<std::string, std::function<std::size_t(int)>>> classes{
        {"I(021)", [&](int n) { return enumerate_avoiding_inversion_sequences(n, i021, jobs()).size(); }}};
    for (const auto& pats : schroder_classes())
        classes.push_back({"S(" + patterns_to_string(pats) + ")",
                           [pats](int n) { return enumerate_avoiding_permutations(n, pats, jobs()).size(); }});
    for (const auto& [name, count] : classes) {
        for (int n = 1; n <= 7; ++n) {
            const auto start = Clock::now();
            const auto got = count(n);
            const double t = seconds_since(start);
            if (got != stated[static_cast<std::size_t>(n - 1)])
                v.require(false, name + " n=" + std::to_string(n) + ": stated " +
                                     std::to_string(stated[static_cast<std::size_t>(n - 1)]) + ", enumerated " +
                                     std::to_string(got) + " (Schroder recurrence gives " +
                                     std::to_string(schroder_number(n)) + ")");
            if (n == 7) v.require(t < 5.0, name + " n=7 took " + std::to_string(t) + " s");
        }
        const auto start = Clock::now();
        const auto got9 = count(9);
        const double t9 = seconds_since(start);
        v.require(got9 == 41586, name + " n=9 gave " + std::to_string(got9));
        v.require(t9 < 60.0, name + " n=9 took " + std::to_string(t9) + " s");
    }
    return v;
}

Verdict sextuple(ClassStore& store) {
    Verdict v;
    v.require(psi(E("0,1,0,0,1,3,0,7,0,0,7,10")) == P("5,3,6,8,7,4,9,1,11,12,10,2"), "worked example of psi");
    run_named(v, store, "sextuple", 9);
    return v;
}

Verdict roundtrips(ClassStore& store) {
    Verdict v;
    v.require(phi(P("5,1,6,4,3,7,2")) == E("0,1,0,2,3,0,5"), "phi(5164372)");
    run_named(v, store, "roundtrip", 9);
    return v;
}

Verdict restrict_des(ClassStore& store) {
    Verdict v;
    run_named(v, store, "restrict", 9);
    return v;
}

Verdict series_identities() {
    Verdict v;
    const auto start = Clock::now();
    const auto sol = solve_gs_system(10);
    const auto st = sol.S.substitute_one(TruncatedSeries::u).substitute_one(TruncatedSeries::v);
    for (const auto& id : verify_cubic(st))
        v.require(id.holds, id.name + " residual nonzero at z^" + std::to_string(id.first_failing_order.value_or(-1)));
    const auto enumerated = series_from_enumeration(8);
    for (int n = 1; n <= 8; ++n)
        v.require(enumerated.coefficient(n) == sol.S.coefficient(n), "z^" + std::to_string(n) + " coefficient");
    const double t = seconds_since(start);
    v.require(t < 30.0, "took " + std::to_string(t) + " s");
    return v;
}

Verdict gamma(ClassStore& store) {
    Verdict v;
    const auto g3 = tilde_invseq_gamma(3);
    v.require(g3 == std::vector<BigInt>{1, 2}, "gamma vector at n=3");
    std::vector<BigInt> asc3(3, BigInt(0));
    for (const auto& e : enumerate_021_avoiding(3)) asc3[static_cast<std::size_t>(asc(e))] += 1;
    v.require(asc3 == std::vector<BigInt>{1, 4, 1}, "ascent polynomial at n=3");
    v.require(gamma_expand(g3, 3) == asc3, "expansion at n=3");
    for (int n = 1; n <= 9; ++n) {
        std::vector<BigInt> poly(static_cast<std::size_t>(n), BigInt(0));
        for (const auto& e : store.inversion_sequences(n, parse_patterns("021")))
            poly[static_cast<std::size_t>(asc(e))] += 1;
        auto expanded = gamma_expand(tilde_invseq_gamma(n), n);
        expanded.resize(poly.size(), BigInt(0));
        v.require(expanded == poly, "n=" + std::to_string(n));
    }
    return v;
}

Verdict mfs(ClassStore& store) {
    Verdict v;
    v.require(fs_act(P("3,4,8,6,2,5,7,1"), 4) == P("3,8,6,4,2,5,7,1"), "phi_4(34862571)");
    v.require(canonical_rep(P("3,4,8,6,2,5,7,1")) == P("1,3,4,6,8,2,5,7"), "representative of 34862571");
    run_named(v, store, "mfs-invariance", 8);
    return v;
}

Verdict wilf(ClassStore& store) {
    Verdict v;
    run_named(v, store, "wilf", 9);
    return v;
}

Verdict quadruple() {
    Verdict v;
    const auto start = Clock::now();
    ClassStore fresh(jobs());
    run_named(v, fresh, "quadruple", 8);
    const double t = seconds_since(start);
    v.require(t < 10.0, "took " + std::to_string(t) + " s");
    return v;
}

Verdict schroder_dist(ClassStore& store) {
    Verdict v;
    run_named(v, store, "schroder-dist", 9);
    return v;
}

Verdict insertion(ClassStore& store) {
    Verdict v;
    v.require(ava(P("3,1,4,2")) == std::vector<int>{5, 3, 2, 1}, "AVA(3142)");
    run_named(v, store, "insert", 8);
    return v;
}

}  // namespace

int main() {
    ClassStore store(jobs());
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1  class counts 1,2,6,22,90,394,1860 (n<=7), 41586 at n=9", counts},
        {"2  sextuple identity n<=9 and the worked example", [&] { return sextuple(store); }},
        {"3  psi/phi round trips n<=9 and phi(5164372)", [&] { return roundtrips(store); }},
        {"4  (dist,ASC) vs (ides,DES) n<=9", [&] { return restrict_des(store); }},
        {"5  cubic, both specializations through z^10, enumeration n<=8", series_identities},
        {"6  gamma expansion of the ascent polynomial n<=9", [&] { return gamma(store); }},
        {"7  MFS invariance and orbit polynomials n<=8", [&] { return mfs(store); }},
        {"8  DES-Wilf equivalences n<=9", [&] { return wilf(store); }},
        {"9  (DIST,ASC,ZERO,EMA) vs (VID,DES,LMA,LMI) on I_n, S_n, n<=8", quadruple},
        {"10 dist vs Schroder path ascents n<=9", [&] { return schroder_dist(store); }},
        {"11 insertion lemma n<=8 and AVA(3142)", [&] { return insertion(store); }},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& err) {
            v.require(false, std::string("exception: ") + err.what());
        }
        failures += !v.pass;
        std::printf("[%s] %s (%.2f s)%s%s\n", v.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(start),
                    v.note.empty() ? "" : " -- ", v.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

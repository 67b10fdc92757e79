#include <schroder/bijections.hpp>
#include <schroder/checks.hpp>
#include <schroder/mfs.hpp>
#include <schroder/outline.hpp>
#include <schroder/patterns.hpp>
#include <schroder/render.hpp>
#include <schroder/series.hpp>
#include <schroder/statistics.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <thread>

namespace py = pybind11;
using namespace schroder;

namespace {

using Word = std::vector<int>;

Word word_of(std::span<const int> w) { return {w.begin(), w.end()}; }
Permutation perm(const Word& w) { return make_permutation(w); }
InversionSequence seq(const Word& w) { return make_inversion_sequence(w); }

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

/// {exponent tuple: coefficient}
py::dict to_py(const Polynomial& p) {
    py::dict out;
    for (const auto& [e, c] : p.terms()) out[py::tuple(py::cast(e))] = to_py(c);
    return out;
}

py::dict sets(const std::vector<std::pair<const char*, PositionSet>>& named) {
    py::dict out;
    for (const auto& [k, s] : named) out[k] = s.members();
    return out;
}

py::dict perm_stats(const Word& w) {
    const auto p = perm(w);
    return sets({{"VID", vid_set(p)}, {"DES", des_set(p)}, {"LMA", lma_set(p)},
                 {"LMI", lmi_set(p)}, {"RMA", rma_set(p)}, {"RMI", rmi_set(p)}});
}

py::dict seq_stats(const Word& w) {
    const auto e = seq(w);
    auto out = sets({{"DIST", dist_set(e)}, {"ASC", asc_set(e)}, {"ZERO", zero_set(e)},
                     {"EMA", ema_set(e)}, {"RMI", rmi_seq_set(e)}});
    if (avoids_021(e)) out["EXPO"] = expo_set(e).members();
    return out;
}

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace

PYBIND11_MODULE(_schroder, m) {
    m.doc() = "Inversion sequences avoiding 021, permutations avoiding 2413 and 4213, and the maps between them.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def(
        "permutations",
        [](int n, const std::string& avoid, int jobs) {
            std::vector<Word> out;
            for (const auto& p : enumerate_avoiding_permutations(n, parse_patterns(avoid), jobs)) out.push_back(word_of(p.word()));
            return out;
        },
        py::arg("n"), py::arg("avoid") = "2413,4213", py::arg("jobs") = default_jobs(),
        "Permutations of length n avoiding the comma-separated patterns, in lexicographic order.");
    m.def(
        "inversion_sequences",
        [](int n, const std::string& avoid, int jobs) {
            std::vector<Word> out;
            for (const auto& e : enumerate_avoiding_inversion_sequences(n, parse_patterns(avoid), jobs))
                out.push_back(word_of(e.word()));
            return out;
        },
        py::arg("n"), py::arg("avoid") = "021", py::arg("jobs") = default_jobs());
    m.def("schroder_number", &schroder_number, py::arg("n"));

    m.def("psi", [](const Word& e) { return word_of(psi(seq(e)).word()); }, py::arg("e"));
    m.def("psi_inverse", [](const Word& p) { return word_of(psi_inverse(perm(p)).word()); }, py::arg("p"));
    m.def("phi", [](const Word& p) { return word_of(phi(perm(p)).word()); }, py::arg("p"));
    m.def("phi_inverse", [](const Word& e) { return word_of(phi_inverse(seq(e)).word()); }, py::arg("e"));
    m.def("ava", [](const Word& p) { return ava(perm(p)); }, py::arg("p"));

    m.def("permutation_stats", &perm_stats, py::arg("p"), "Set statistics VID, DES, LMA, LMI, RMA, RMI.");
    m.def("sequence_stats", &seq_stats, py::arg("e"), "Set statistics DIST, ASC, ZERO, EMA, RMI and EXPO.");
    m.def("des", [](const Word& p) { return des(perm(p)); });
    m.def("ides", [](const Word& p) { return ides(perm(p)); });
    m.def("asc", [](const Word& e) { return asc(seq(e)); });
    m.def("dist", [](const Word& e) { return dist(seq(e)); });

    m.def("outline", [](const Word& e) { return outline_of(seq(e)).to_string(); }, py::arg("e"),
          "The two-colored Dyck path of a 021-avoider, e.g. '0r,1,1r,1,2,2r,4'.");
    m.def("invert_outline", [](const std::string& path) { return word_of(invert_outline(TwoColoredDyckPath::parse(path)).word()); },
          py::arg("path"));
    m.def(
        "render_svg",
        [](const std::string& path, int cell, bool lines, const std::vector<int>& labels) {
            RenderOptions opts;
            opts.cell = cell;
            opts.lines = lines;
            opts.labels = labels;
            return render_svg(TwoColoredDyckPath::parse(path), opts);
        },
        py::arg("path"), py::arg("cell") = 36, py::arg("lines") = true, py::arg("labels") = std::vector<int>{});

    m.def("fs_act", [](const Word& p, int x) { return word_of(fs_act(perm(p), x).word()); }, py::arg("p"), py::arg("x"));
    m.def("mfs_act", [](const Word& p, int x) { return word_of(mfs_act(perm(p), x).word()); }, py::arg("p"), py::arg("x"));
    m.def("canonical_rep", [](const Word& p) { return word_of(canonical_rep(perm(p)).word()); }, py::arg("p"));
    m.def(
        "gamma_perms",
        [](int n, const std::string& avoid) {
            return to_py(gamma_via_orbits(enumerate_avoiding_permutations(n, parse_patterns(avoid), default_jobs())));
        },
        py::arg("n"), py::arg("avoid") = "2413,4213");
    m.def("gamma_invseq", [](int n) { return to_py(tilde_invseq_gamma(n)); }, py::arg("n"));
    m.def("gamma_expand", [](const std::vector<long long>& g, int n) {
        std::vector<BigInt> big(g.begin(), g.end());
        return to_py(gamma_expand(big, n));
    }, py::arg("gamma"), py::arg("n"));

    m.def(
        "series",
        [](int order) {
            const auto sol = solve_gs_system(order);
            py::list out;
            for (int k = 0; k <= order; ++k) out.append(to_py(sol.S.coefficient(k)));
            return out;
        },
        py::arg("order"),
        "Coefficients of z^0..z^order of S(s,t,u,v); each is {(a,b,c,d): coefficient} for s^a t^b u^c v^d.");
    m.def(
        "verify_cubic",
        [](int order) {
            const auto sol = solve_gs_system(order);
            const auto st = sol.S.substitute_one(TruncatedSeries::u).substitute_one(TruncatedSeries::v);
            py::dict out;
            for (const auto& id : verify_cubic(st)) out[py::str(id.name)] = id.holds;
            return out;
        },
        py::arg("order"));

    m.def("check_names", [] {
        std::vector<std::string> out;
        for (const auto& c : check_catalog()) out.push_back(c.name);
        return out;
    });
    m.def(
        "run_check",
        [](const std::string& name, int n, int jobs) {
            CheckResult r;
            {
                py::gil_scoped_release release;
                ClassStore store(jobs);
                r = run_check(name, n, store);
            }
            py::dict out;
            out["name"] = r.name;
            out["n"] = r.n;
            out["passed"] = r.passed;
            out["objects"] = r.objects;
            out["counterexample"] = r.counterexample.empty() ? py::object(py::none()) : py::object(py::str(r.counterexample));
            out["detail"] = r.detail;
            return out;
        },
        py::arg("name"), py::arg("n"), py::arg("jobs") = default_jobs());
}

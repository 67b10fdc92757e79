#include "schroder/checks.hpp"

#include "schroder/bijections.hpp"
#include "schroder/mfs.hpp"
#include "schroder/outline.hpp"
#include "schroder/serialize.hpp"
#include "schroder/series.hpp"
#include "schroder/statistics.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <thread>

namespace schroder {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- class store

namespace {

std::string class_key(int n, const std::vector<Pattern>& patterns) {
    return std::to_string(n) + "/" + patterns_to_string(patterns);
}

template <class T, class Parse, class Valid>
std::optional<std::vector<T>> load_class(const std::filesystem::path& file, Parse parse, Valid valid) {
    auto lines = read_cache(file);
    if (!lines) return std::nullopt;
    std::vector<T> out;
    out.reserve(lines->size());
    try {
        for (const auto& line : *lines) {
            T obj = parse(line);
            if (!valid(obj)) return std::nullopt;
            out.push_back(std::move(obj));
        }
    } catch (const std::exception&) {
        return std::nullopt;  // a corrupt file is treated as a miss and rewritten
    }
    if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end())
        return std::nullopt;
    return out;
}

template <class T>
void store_class(const std::filesystem::path& file, const std::vector<T>& objects) {
    std::vector<std::string> lines;
    lines.reserve(objects.size());
    for (const auto& obj : objects) lines.push_back(obj.to_string());
    write_cache(file, lines);
}

}  // namespace

ClassStore::ClassStore(int jobs, std::optional<std::filesystem::path> cache_dir)
    : jobs_(std::max(jobs, 1)), cache_dir_(std::move(cache_dir)) {}

const std::vector<Permutation>& ClassStore::permutations(int n, const std::vector<Pattern>& patterns) {
    std::lock_guard lock(mutex_);
    auto key = class_key(n, patterns);
    if (auto it = perms_.find(key); it != perms_.end()) return it->second;
    std::optional<std::vector<Permutation>> found;
    std::filesystem::path file;
    if (cache_dir_) {
        file = *cache_dir_ / cache_file_name("perm", n, patterns);
        found = load_class<Permutation>(
            file, [](const std::string& s) { return make_permutation(parse_word(s)); },
            [&](const Permutation& p) { return p.size() == n && avoids_all(p.word(), patterns); });
        if (found) ++cache_hits_;
    }
    if (!found) {
        found = enumerate_avoiding_permutations(n, patterns, jobs_);
        if (cache_dir_) store_class(file, *found);
    }
    return perms_.emplace(key, std::move(*found)).first->second;
}

const std::vector<InversionSequence>& ClassStore::inversion_sequences(int n, const std::vector<Pattern>& patterns) {
    std::lock_guard lock(mutex_);
    auto key = class_key(n, patterns);
    if (auto it = invseqs_.find(key); it != invseqs_.end()) return it->second;
    std::optional<std::vector<InversionSequence>> found;
    std::filesystem::path file;
    if (cache_dir_) {
        file = *cache_dir_ / cache_file_name("invseq", n, patterns);
        found = load_class<InversionSequence>(
            file, [](const std::string& s) { return make_inversion_sequence(parse_word(s)); },
            [&](const InversionSequence& e) { return e.size() == n && avoids_all(e.word(), patterns); });
        if (found) ++cache_hits_;
    }
    if (!found) {
        found = enumerate_avoiding_inversion_sequences(n, patterns, jobs_);
        if (cache_dir_) store_class(file, *found);
    }
    return invseqs_.emplace(key, std::move(*found)).first->second;
}

std::uint64_t schroder_number(int n) {
    if (n < 0) throw std::invalid_argument("schroder_number: negative index");
    if (n == 0) return 1;
    // r_0 = 1, r_m = r_{m-1} + sum_k r_k r_{m-1-k}; |I_n(021)| = r_{n-1}.
    std::vector<std::uint64_t> r{1};
    for (int m = 1; m < n; ++m) {
        std::uint64_t next = r[static_cast<std::size_t>(m - 1)];
        for (int k = 0; k < m; ++k) next += r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(m - 1 - k)];
        r.push_back(next);
    }
    return r.back();
}

const std::vector<std::vector<Pattern>>& schroder_classes() {
    static const std::vector<std::vector<Pattern>> classes{
        parse_patterns("2413,4213"), parse_patterns("2413,3142"),
        parse_patterns("2314,3214"), parse_patterns("3412,4312")};
    return classes;
}

// ---------------------------------------------------------------- helpers

namespace {

const std::vector<Pattern>& p021() {
    static const std::vector<Pattern> pats = parse_patterns("021");
    return pats;
}
const std::vector<Pattern>& psi_class() { return schroder_classes()[0]; }

/// Evaluates `probe` over `items` on `jobs` threads; returns the failure with the smallest index.
template <class T, class Probe>
std::optional<Json> first_failure(const std::vector<T>& items, int jobs, Probe probe) {
    const std::size_t total = items.size();
    const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(jobs), 1, std::max<std::size_t>(total, 1));
    std::vector<std::optional<Json>> found(threads);
    auto work = [&](std::size_t t) {
        const std::size_t lo = total * t / threads, hi = total * (t + 1) / threads;
        for (std::size_t i = lo; i < hi; ++i)
            if (auto bad = probe(items[i])) {
                found[t] = std::move(bad);
                return;
            }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (auto& f : found)
        if (f) return f;
    return std::nullopt;
}

Json sets_json(const std::vector<std::string>& names, const std::vector<PositionSet>& sets) {
    Json out = Json::object();
    for (std::size_t k = 0; k < names.size(); ++k) out[names[k]] = sets[k].to_string();
    return out;
}

Json report_mismatch(const EquidistributionReport& rep) {
    return Json{{"tuple", rep.witness ? rep.witness->to_string() : ""},
                {"lhs_multiplicity", rep.lhs_multiplicity},
                {"rhs_multiplicity", rep.rhs_multiplicity}};
}

struct Sweep {
    CheckResult& result;
    bool fail(int size, Json counterexample, std::string detail = {}) {
        Json record{{"n", size}};
        record.update(counterexample);
        result.passed = false;
        result.counterexample = record.dump();
        result.detail = std::move(detail);
        return false;
    }
};

// Each check runs one size and returns false after recording a failure.
using SizeCheck = std::function<bool(int size, ClassStore& store, CheckResult& result)>;

bool check_counts(int k, ClassStore& store, CheckResult& r) {
    const auto expected = schroder_number(k);
    std::uint64_t generic = 0;
    for_each_avoiding_inversion_sequence(k, p021(), [&](const InversionSequence&) {
        ++generic;
        return true;
    });
    const auto& fast = store.inversion_sequences(k, p021());
    Json counts{{"expected", expected}, {"invseq_021", fast.size()}, {"invseq_021_generic", generic}};
    bool ok = fast.size() == expected && generic == expected;
    for (const auto& pats : schroder_classes()) {
        const auto size = store.permutations(k, pats).size();
        counts["perm_" + patterns_to_string(pats, '-')] = size;
        ok = ok && size == expected;
        r.objects += size;
    }
    r.objects += fast.size() + generic;
    return ok || Sweep{r}.fail(k, counts, "class sizes differ from the Schroder number");
}

bool check_sextuple(int k, ClassStore& store, CheckResult& r) {
    const auto& seqs = store.inversion_sequences(k, p021());
    r.objects += seqs.size();
    static const std::vector<std::string> lhs_names{"DIST", "ASC", "ZERO", "EMA", "RMI", "EXPO"};
    static const std::vector<std::string> rhs_names{"VID", "DES", "LMA", "LMI", "RMA", "RMI"};
    auto bad = first_failure(seqs, store.jobs(), [&](const InversionSequence& e) -> std::optional<Json> {
        const auto p = psi(e);
        std::vector<PositionSet> lhs{dist_set(e), asc_set(e), zero_set(e), ema_set(e), rmi_seq_set(e), expo_set(e)};
        std::vector<PositionSet> rhs{vid_set(p), des_set(p), lma_set(p), lmi_set(p), rma_set(p), rmi_set(p)};
        if (lhs == rhs && avoids_all(p.word(), psi_class())) return std::nullopt;
        return Json{{"e", e.to_string()}, {"psi", p.to_string()},
                    {"lhs", sets_json(lhs_names, lhs)}, {"rhs", sets_json(rhs_names, rhs)}};
    });
    return !bad || Sweep{r}.fail(k, *bad, "sextuple identity violated");
}

// The six items read position by position, phrased directly on e and pi.
bool check_lrm(int k, ClassStore& store, CheckResult& r) {
    const auto& seqs = store.inversion_sequences(k, p021());
    r.objects += seqs.size();
    auto bad = first_failure(seqs, store.jobs(), [&](const InversionSequence& e) -> std::optional<Json> {
        const auto p = psi(e);
        const auto expo = expo_set(e);
        const int n = e.size();
        for (int i = 1; i <= n; ++i) {
            bool later_same = false, e_rmi = true, lmax = true, lmin = true, rmax = true, rmin = true;
            for (int j = i + 1; j <= n; ++j) {
                later_same = later_same || e.at(j) == e.at(i);
                e_rmi = e_rmi && e.at(i) < e.at(j);
                rmax = rmax && p.at(i) > p.at(j);
                rmin = rmin && p.at(i) < p.at(j);
            }
            for (int j = 1; j < i; ++j) {
                lmax = lmax && p.at(i) > p.at(j);
                lmin = lmin && p.at(i) < p.at(j);
            }
            // value p_i + 1 left of position i
            bool vid = false;
            for (int j = 1; j < i; ++j) vid = vid || p.at(j) == p.at(i) + 1;
            const bool items[6][2] = {
                {i < n && e.at(i) < e.at(i + 1), i < n && p.at(i) > p.at(i + 1)},
                {e.at(i) != 0 && !later_same, vid},
                {e.at(i) == 0, lmax},
                {e.at(i) == i - 1, lmin},
                {e_rmi, rmax},
                {expo.contains(i), rmin},
            };
            for (int item = 0; item < 6; ++item)
                if (items[item][0] != items[item][1])
                    return Json{{"e", e.to_string()}, {"psi", p.to_string()}, {"item", item + 1}, {"position", i},
                                {"lhs", items[item][0]}, {"rhs", items[item][1]}};
        }
        return std::nullopt;
    });
    return !bad || Sweep{r}.fail(k, *bad, "a correspondence of the left-to-right lemma fails");
}

bool check_outline_stats(int k, ClassStore& store, CheckResult& r) {
    const auto& seqs = store.inversion_sequences(k, p021());
    r.objects += seqs.size();
    auto bad = first_failure(seqs, store.jobs(), [&](const InversionSequence& e) -> std::optional<Json> {
        const auto d = outline_of(e);
        const std::vector<int> lhs{dist(e), asc(e), zero_set(e).size(), ema_set(e).size()};
        const std::vector<int> rhs{turn(d), segment(d), red_count(d), return_count(d)};
        if (lhs == rhs && is_in_class(d, PathClass::A) && invert_outline(d) == e) return std::nullopt;
        return Json{{"e", e.to_string()}, {"outline", d.to_string()},
                    {"dist_asc_zero_ema", lhs}, {"turn_segment_red_return", rhs}};
    });
    return !bad || Sweep{r}.fail(k, *bad, "outline statistics disagree");
}

bool check_first_return(int k, ClassStore& store, CheckResult& r) {
    auto paths = enumerate_paths(k, PathClass::B);
    r.objects += paths.size();
    auto bad = first_failure(paths, store.jobs(), [&](const TwoColoredDyckPath& d) -> std::optional<Json> {
        const auto parts = first_return_decompose(d);
        const auto& d1 = parts.first;
        const auto& d2 = parts.rest;
        const bool d1_red = d1.size() == 0 || d1.is_red(1);
        const bool ok = recompose(parts) == d &&
                        (d1.size() == 0 || is_in_class(d1, PathClass::B) || is_in_class(d1, PathClass::R)) &&
                        (d2.size() == 0 || is_in_class(d2, PathClass::B)) &&
                        turn(d) == turn(d1) + turn(d2) + (parts.k != d.size()) &&
                        segment(d) == segment(d1) + segment(d2) + d1_red &&
                        red_count(d) == red_count(d1) + red_count(d2) &&
                        return_count(d) == 1 + return_count(d2);
        if (ok) return std::nullopt;
        return Json{{"path", d.to_string()}, {"first", d1.to_string()}, {"rest", d2.to_string()}, {"k", parts.k}};
    });
    return !bad || Sweep{r}.fail(k, *bad, "first-return bookkeeping fails");
}

bool check_foata(int k, ClassStore& store, CheckResult& r) {
    TupleMultiset lhs, rhs;
    for (const auto& e : store.inversion_sequences(k, {})) lhs.add({{asc_set(e)}, {dist(e)}});
    for (const auto& p : store.permutations(k, {})) rhs.add({{des_set(p)}, {ides(p)}});
    r.objects += lhs.total() + rhs.total();
    auto rep = equidistributed(lhs, rhs);
    return rep.equal || Sweep{r}.fail(k, report_mismatch(rep), "(ASC,dist) on I_n differs from (DES,ides) on S_n");
}

bool check_quadruple(int k, ClassStore& store, CheckResult& r) {
    TupleMultiset lhs, rhs;
    for (const auto& e : store.inversion_sequences(k, {}))
        lhs.add({{dist_set(e), asc_set(e), zero_set(e), ema_set(e)}, {}});
    for (const auto& p : store.permutations(k, {})) rhs.add({{vid_set(p), des_set(p), lma_set(p), lmi_set(p)}, {}});
    r.objects += lhs.total() + rhs.total();
    auto rep = equidistributed(lhs, rhs);
    return rep.equal ||
           Sweep{r}.fail(k, report_mismatch(rep), "(DIST,ASC,ZERO,EMA) on I_n differs from (VID,DES,LMA,LMI) on S_n");
}

bool check_restrict(int k, ClassStore& store, CheckResult& r) {
    TupleMultiset lhs, rhs;
    for (const auto& e : store.inversion_sequences(k, p021())) lhs.add({{asc_set(e)}, {dist(e)}});
    for (const auto& p : store.permutations(k, psi_class())) rhs.add({{des_set(p)}, {ides(p)}});
    r.objects += lhs.total() + rhs.total();
    auto rep = equidistributed(lhs, rhs);
    return rep.equal || Sweep{r}.fail(k, report_mismatch(rep), "(ASC,dist) on I_n(021) differs from (DES,ides)");
}

bool check_phi_stats(int k, ClassStore& store, CheckResult& r) {
    const auto& perms = store.permutations(k, psi_class());
    r.objects += perms.size();
    auto bad = first_failure(perms, store.jobs(), [&](const Permutation& p) -> std::optional<Json> {
        const auto e = phi(p);
        std::vector<PositionSet> lhs{des_set(p), lma_set(p), lmi_set(p), rma_set(p)};
        std::vector<PositionSet> rhs{asc_set(e), zero_set(e), ema_set(e), rmi_seq_set(e)};
        if (lhs == rhs && avoids_021(e)) return std::nullopt;
        return Json{{"p", p.to_string()}, {"phi", e.to_string()},
                    {"lhs", sets_json({"DES", "LMA", "LMI", "RMA"}, lhs)},
                    {"rhs", sets_json({"ASC", "ZERO", "EMA", "RMI"}, rhs)}};
    });
    return !bad || Sweep{r}.fail(k, *bad, "phi does not carry the quadruple");
}

bool check_roundtrip(int k, ClassStore& store, CheckResult& r) {
    const auto& seqs = store.inversion_sequences(k, p021());
    const auto& perms = store.permutations(k, psi_class());
    r.objects += seqs.size() + perms.size();
    auto bad = first_failure(seqs, store.jobs(), [&](const InversionSequence& e) -> std::optional<Json> {
        const auto p = psi(e);
        if (psi_inverse(p) != e) return Json{{"map", "psi_inverse o psi"}, {"e", e.to_string()}, {"psi", p.to_string()}};
        const auto q = phi_inverse(e);
        if (phi(q) != e) return Json{{"map", "phi o phi_inverse"}, {"e", e.to_string()}, {"phi_inverse", q.to_string()}};
        return std::nullopt;
    });
    if (bad) return Sweep{r}.fail(k, *bad, "round trip fails");
    bad = first_failure(perms, store.jobs(), [&](const Permutation& p) -> std::optional<Json> {
        const auto e = psi_inverse(p);
        if (psi(e) != p) return Json{{"map", "psi o psi_inverse"}, {"p", p.to_string()}, {"psi_inverse", e.to_string()}};
        const auto f = phi(p);
        if (phi_inverse(f) != p) return Json{{"map", "phi_inverse o phi"}, {"p", p.to_string()}, {"phi", f.to_string()}};
        return std::nullopt;
    });
    return !bad || Sweep{r}.fail(k, *bad, "round trip fails");
}

bool check_insert(int k, ClassStore& store, CheckResult& r) {
    // p runs over S_{k-1}; the inserted permutations have size k.
    if (k < 1) return true;
    const auto& perms = store.permutations(k - 1, psi_class());
    r.objects += perms.size();
    auto bad = first_failure(perms, store.jobs(), [&](const Permutation& p) -> std::optional<Json> {
        const auto avail = ava(p);
        for (std::size_t j = 0; j < avail.size(); ++j) {
            const int kj = avail[j];
            std::vector<int> predicted{k + 1};
            if (kj + 1 != k + 1) predicted.push_back(kj + 1);
            predicted.insert(predicted.end(), avail.begin() + static_cast<std::ptrdiff_t>(j), avail.end());
            const auto q = insert_tk(p, kj);
            const auto actual = ava(q);
            if (actual != predicted)
                return Json{{"p", p.to_string()}, {"k", kj}, {"T_k", q.to_string()},
                            {"predicted", predicted}, {"actual", actual}};
        }
        return std::nullopt;
    });
    return !bad || Sweep{r}.fail(k, *bad, "AVA after insertion differs from the prediction");
}

bool check_wilf(int k, ClassStore& store, CheckResult& r) {
    const auto& classes = schroder_classes();
    auto des_sets = [&](const std::vector<Pattern>& pats) {
        TupleMultiset m;
        for (const auto& p : store.permutations(k, pats)) m.add({{des_set(p)}, {}});
        return m;
    };
    const auto base = des_sets(classes[0]);
    r.objects += base.total();
    for (std::size_t c : {std::size_t{2}, std::size_t{3}}) {
        const auto other = des_sets(classes[c]);
        r.objects += other.total();
        auto rep = equidistributed(base, other);
        if (!rep.equal) {
            auto j = report_mismatch(rep);
            j["classes"] = {patterns_to_string(classes[0], '-'), patterns_to_string(classes[c], '-')};
            return Sweep{r}.fail(k, j, "DES-set distributions differ");
        }
    }
    auto des_numbers = [&](const std::vector<Pattern>& pats) {
        TupleMultiset m;
        for (const auto& p : store.permutations(k, pats)) m.add({{}, {des(p)}});
        return m;
    };
    auto rep = equidistributed(des_numbers(classes[0]), des_numbers(classes[1]));
    r.objects += store.permutations(k, classes[1]).size();
    if (!rep.equal) {
        auto j = report_mismatch(rep);
        j["classes"] = {patterns_to_string(classes[0], '-'), patterns_to_string(classes[1], '-')};
        return Sweep{r}.fail(k, j, "des distributions differ");
    }
    return true;
}

std::vector<BigInt> padded(std::vector<BigInt> v, std::size_t len) {
    v.resize(std::max(v.size(), len), BigInt(0));
    while (v.size() > len && v.back() == 0) v.pop_back();
    return v;
}

Json bigs(const std::vector<BigInt>& v) { return Json::parse(integers_to_json(v)); }

bool check_gamma(int k, ClassStore& store, CheckResult& r) {
    const auto& seqs = store.inversion_sequences(k, p021());
    r.objects += seqs.size();
    std::vector<BigInt> asc_poly(static_cast<std::size_t>(k), BigInt(0));
    for (const auto& e : seqs) asc_poly[static_cast<std::size_t>(asc(e))] += 1;
    const auto tilde = tilde_invseq_gamma(k);
    const auto expanded = gamma_expand(tilde, k);
    const auto len = asc_poly.size();
    if (padded(expanded, len) != padded(asc_poly, len))
        return Sweep{r}.fail(k, Json{{"asc_polynomial", bigs(asc_poly)}, {"tilde_counts", bigs(tilde)},
                                     {"expansion", bigs(expanded)}},
                             "gamma expansion of the tilde counts differs from the ascent polynomial");
    const auto peeled = gamma_decompose(asc_poly, k);
    if (!peeled.ok || padded(peeled.gamma, tilde.size()) != padded(tilde, tilde.size()))
        return Sweep{r}.fail(k, Json{{"tilde_counts", bigs(tilde)}, {"peeled", bigs(peeled.gamma)},
                                     {"diagnostic", peeled.diagnostic}},
                             "peeled gamma vector differs from the tilde counts");
    const auto& perms = store.permutations(k, psi_class());
    r.objects += perms.size();
    const auto orbits = gamma_via_orbits(perms);
    if (padded(orbits, tilde.size()) != padded(tilde, tilde.size()))
        return Sweep{r}.fail(k, Json{{"tilde_counts", bigs(tilde)}, {"orbit_gamma", bigs(orbits)}},
                             "orbit gamma vector differs from the tilde counts");
    return true;
}

bool check_mfs(int k, ClassStore& store, CheckResult& r) {
    const auto& perms = store.permutations(k, psi_class());
    r.objects += perms.size();
    auto inv = check_invariance(perms);
    if (!inv.invariant)
        return Sweep{r}.fail(k, Json{{"p", inv.witness->to_string()}, {"x", inv.x},
                                     {"image", mfs_act(*inv.witness, inv.x).to_string()}},
                             "class not closed under the action");
    std::uint64_t covered = 0;
    std::optional<Json> bad;
    for (const auto& p : perms) {
        if (double_descents(p) != 0) continue;
        const auto orbit = mfs_orbit(p);
        covered += orbit.size();
        std::vector<BigInt> poly(static_cast<std::size_t>(std::max(k, 1)), BigInt(0));
        for (const auto& q : orbit) poly[static_cast<std::size_t>(des(q))] += 1;
        std::vector<BigInt> gamma(static_cast<std::size_t>(des(p)) + 1, BigInt(0));
        gamma.back() = 1;
        const auto expected = gamma_expand(gamma, k);
        if (padded(poly, poly.size()) != padded(expected, poly.size()) || canonical_rep(orbit.back()) != p) {
            bad = Json{{"representative", p.to_string()}, {"orbit_size", orbit.size()},
                       {"orbit_des_polynomial", bigs(poly)}, {"expected", bigs(expected)}};
            break;
        }
    }
    if (bad) return Sweep{r}.fail(k, *bad, "orbit descent polynomial is not t^d (1+t)^(n-1-2d)");
    if (covered != perms.size())
        return Sweep{r}.fail(k, Json{{"orbit_total", covered}, {"class_size", perms.size()}},
                             "orbits of the representatives do not partition the class");
    return true;
}

bool check_schroder_dist(int k, ClassStore& store, CheckResult& r) {
    const auto& seqs = store.inversion_sequences(k, p021());
    r.objects += seqs.size();
    const auto lhs = distribution(seqs, std::vector<NumericStat<InversionSequence>>{
                                            {"s", [](const InversionSequence& e) { return dist(e); }}});
    const auto rhs = schroder_asc_polynomial(k);
    return lhs == rhs || Sweep{r}.fail(k, Json{{"dist_polynomial", lhs.to_string()}, {"path_polynomial", rhs.to_string()}},
                                       "dist polynomial differs from the Schroder path ascent polynomial");
}

CheckResult run_cubic(int n, ClassStore&) {
    CheckResult r;
    r.name = "cubic";
    r.n = n;
    if (n < 1) return r;
    const auto sol = solve_gs_system(n);
    const auto st = sol.S.substitute_one(TruncatedSeries::u).substitute_one(TruncatedSeries::v);
    for (const auto& id : verify_cubic(st))
        if (!id.holds) {
            Sweep{r}.fail(n, Json{{"identity", id.name}, {"first_failing_order", *id.first_failing_order}},
                          "identity residual is nonzero");
            return r;
        }
    const auto again = solve_gs_system(n, 1);
    if (!(again.S == sol.S && again.B == sol.B && again.R == sol.R)) {
        Sweep{r}.fail(n, Json{{"order", n}}, "fixed point not stable under one extra round");
        return r;
    }
    const auto enumerated = series_from_enumeration(n);
    for (int k = 1; k <= n; ++k) {
        r.objects += schroder_number(k);
        if (enumerated.coefficient(k) != sol.S.coefficient(k)) {
            Sweep{r}.fail(k, Json{{"solved", sol.S.coefficient(k).to_string()},
                                  {"enumerated", enumerated.coefficient(k).to_string()}},
                          "solved coefficient differs from enumeration");
            return r;
        }
    }
    return r;
}

struct Entry {
    CheckInfo info;
    SizeCheck per_size;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {{"counts", "the 021 class and four permutation classes have Schroder size", false}, check_counts},
        {{"sextuple", "(DIST,ASC,ZERO,EMA,RMI,EXPO)e = (VID,DES,LMA,LMI,RMA,RMI)psi(e)", false}, check_sextuple},
        {{"lrm", "the six position-wise correspondences of psi, separately", false}, check_lrm},
        {{"outline-stats", "(dist,asc,zero,ema) = (turn,segment,red,return) of the outline", false},
         check_outline_stats},
        {{"first-return", "first-return decomposition of B_n and its bookkeeping", false}, check_first_return},
        {{"foata", "(ASC,dist) on I_n equidistributed with (DES,ides) on S_n", true}, check_foata},
        {{"quadruple", "(DIST,ASC,ZERO,EMA) on I_n equidistributed with (VID,DES,LMA,LMI) on S_n", true},
         check_quadruple},
        {{"restrict", "(dist,ASC) on I_n(021) equidistributed with (ides,DES) on S_n(2413,4213)", false},
         check_restrict},
        {{"phi-stats", "phi carries (DES,LMA,LMI,RMA) to (ASC,ZERO,EMA,RMI)", false}, check_phi_stats},
        {{"roundtrip", "psi, psi_inverse, phi, phi_inverse compose to identities", false}, check_roundtrip},
        {{"insert", "AVA after inserting each available value", false}, check_insert},
        {{"wilf", "DES-set Wilf-equivalences and the des match for 2413,3142", false}, check_wilf},
        {{"gamma", "ascent polynomial of I_n(021) from tilde counts and from MFS orbits", false}, check_gamma},
        {{"mfs-invariance", "S_n(2413,4213) closed under the action; orbit descent polynomials", false}, check_mfs},
        {{"cubic", "generating-function system: cubic, specializations, enumeration", false}, nullptr},
        {{"schroder-dist", "dist polynomial of I_n(021) = ascent polynomial of Schroder paths", false},
         check_schroder_dist},
    };
    return table;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

const CheckInfo* find_check(const std::string& name) {
    for (const auto& info : check_catalog())
        if (info.name == name) return &info;
    return nullptr;
}

CheckResult run_check(const std::string& name, int n, ClassStore& store) {
    const auto& table = entries();
    auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.name == name; });
    if (it == table.end()) throw ValidationError("unknown check '" + name + "'");
    if (n < 0) throw ValidationError("n must be non-negative");
    if (name == "cubic") return run_cubic(n, store);
    CheckResult result;
    result.name = name;
    result.n = n;
    for (int k = 1; k <= n; ++k)
        if (!it->per_size(k, store, result)) break;
    return result;
}

}  // namespace schroder

// Acceptance runner. One PASS/FAIL line per criterion; exits nonzero if any
// criterion fails. Reference values are frozen here rather than shared with
// the library's own verification tables.

#include "dproc/ltl_semantics.hpp"
#include "dproc/model_library.hpp"
#include "dproc/stakeholder_prefs.hpp"
#include "dproc/trace_enumeration.hpp"
#include "dproc/utility_ranking.hpp"
#include "dproc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dproc;

namespace {

constexpr double tol = 1e-6;

const std::vector<std::string> model_names{"FDAP", "FDAP-M1", "FDAP-M2", "FDAP-M3"};
const std::vector<std::string> stakeholder_names{"S1", "S2", "S3"};

const std::vector<std::uint64_t> valid_counts{46, 14, 144, 852};
// [model][stakeholder]
const std::vector<std::vector<std::uint64_t>> favourable{
    {43, 10, 32}, {12, 10, 11}, {141, 34, 137}, {849, 601, 838}};
const std::vector<std::vector<double>> utilities{{0.982869, 0.622806, 0.908149},
                                                 {0.947157, 0.885469, 0.917600},
                                                 {0.995799, 0.714394, 0.990058},
                                                 {0.999478, 0.948361, 0.997548}};
const std::vector<std::vector<int>> ranks{{3, 4, 4}, {4, 2, 3}, {2, 3, 2}, {1, 1, 1}};
const std::vector<double> h_values{0.388594, 0.150664, 0.285810, 0.051700};

struct CohortRef {
    std::vector<std::string> subset;
    std::vector<double> h;
};
const std::vector<CohortRef> cohorts{
    {{"S1"}, {0.017131, 0.052843, 0.004201, 0.000522}},
    {{"S2"}, {0.377194, 0.114531, 0.285606, 0.051639}},
    {{"S3"}, {0.091851, 0.082400, 0.009942, 0.002452}},
    {{"S1", "S2"}, {0.377583, 0.126134, 0.285637, 0.051642}},
    {{"S1", "S3"}, {0.093435, 0.097888, 0.010793, 0.002507}},
    {{"S2", "S3"}, {0.388216, 0.141093, 0.285779, 0.051697}},
    {{"S1", "S2", "S3"}, {0.388594, 0.150664, 0.285810, 0.051700}},
};

const std::vector<Trace> fdap_traces{
    {}, {1}, {1, 9, 10}, {1, 2, 3, 4},
    {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 9, 10}, {1, 2, 3, 9, 4, 10}, {1, 2, 3, 9, 10, 4},
    {1, 2, 9, 3, 4, 10}, {1, 2, 9, 3, 10, 4}, {1, 2, 9, 10, 3, 4}, {1, 9, 2, 3, 4, 10},
    {1, 9, 2, 3, 10, 4}, {1, 9, 2, 10, 3, 4}, {1, 9, 10, 2, 3, 4},
    {1, 2, 3, 4, 5, 7, 8},
    {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 7, 6, 8}, {1, 2, 3, 4, 5, 7, 8, 6},
    {1, 2, 3, 4, 5, 6, 9, 10}, {1, 2, 3, 4, 5, 9, 6, 10}, {1, 2, 3, 4, 5, 9, 10, 6},
    {1, 2, 3, 4, 9, 5, 6, 10}, {1, 2, 3, 4, 9, 5, 10, 6}, {1, 2, 3, 4, 9, 10, 5, 6},
    {1, 2, 3, 9, 4, 5, 6, 10}, {1, 2, 3, 9, 4, 5, 10, 6}, {1, 2, 3, 9, 4, 10, 5, 6},
    {1, 2, 3, 9, 10, 4, 5, 6}, {1, 2, 9, 3, 4, 5, 6, 10}, {1, 2, 9, 3, 4, 5, 10, 6},
    {1, 2, 9, 3, 4, 10, 5, 6}, {1, 2, 9, 3, 10, 4, 5, 6}, {1, 2, 9, 10, 3, 4, 5, 6},
    {1, 9, 2, 3, 4, 5, 6, 10}, {1, 9, 2, 3, 4, 5, 10, 6}, {1, 9, 2, 3, 4, 10, 5, 6},
    {1, 9, 2, 3, 10, 4, 5, 6}, {1, 9, 2, 10, 3, 4, 5, 6}, {1, 9, 10, 2, 3, 4, 5, 6},
    {1, 2, 3, 4, 5, 7, 8, 9, 10},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {1, 2, 3, 4, 5, 7, 6, 8, 9, 10},
    {1, 2, 3, 4, 5, 7, 8, 6, 9, 10}, {1, 2, 3, 4, 5, 7, 8, 9, 6, 10},
    {1, 2, 3, 4, 5, 7, 8, 9, 10, 6},
};

const std::vector<Trace> m1_traces{
    {}, {1}, {1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 7, 8},
    {1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 7, 6, 8}, {1, 2, 3, 4, 5, 7, 8, 6},
    {1, 2, 3, 4, 5, 7, 8, 9, 10}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {1, 2, 3, 4, 5, 7, 6, 8, 9, 10}, {1, 2, 3, 4, 5, 7, 8, 6, 9, 10},
    {1, 2, 3, 4, 5, 7, 8, 9, 6, 10}, {1, 2, 3, 4, 5, 7, 8, 9, 10, 6},
};

bool near(double a, double b) { return std::abs(a - b) <= tol; }

int failures = 0;

void report(int n, bool ok, const std::string &detail) {
    if (!ok)
        ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
}

// Computed once, shared by criteria 1 to 6.
struct Computed {
    std::vector<TraceSet> traces;
    std::vector<std::vector<std::uint64_t>> favourable;
    std::vector<UtilityRecord> records;
    double seconds = 0.0;
};

Computed compute() {
    Computed c;
    const auto start = std::chrono::steady_clock::now();
    for (const auto &model : fdap_models()) {
        c.traces.push_back(enumerate_pruned(model.process, {0}));
        auto &row = c.favourable.emplace_back();
        for (const auto &s : model.stakeholders) {
            row.push_back(count_favourable(s, c.traces.back()));
            c.records.push_back(make_record(model.process.name(), s.name, row.back(), c.traces.back().count()));
        }
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

bool same_set(std::vector<Trace> a, std::vector<Trace> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

void criterion1(const Computed &c) {
    const auto &fdap = c.traces[0].traces;
    const auto &m1 = c.traces[1].traces;
    const bool sets = same_set(fdap, fdap_traces) && same_set(m1, m1_traces);
    // The reference listings group by length but not lexicographically
    // within a length, so only the set is compared against them; our own
    // listing must be in canonical order.
    const auto canonical = [](const std::vector<Trace> &ts) {
        return std::is_sorted(ts.begin(), ts.end(), CanonicalTraceOrder{});
    };
    const bool order = canonical(fdap) && canonical(m1) && canonical(c.traces[2].traces) &&
                       canonical(c.traces[3].traces);
    const bool counts = c.traces[2].count() == 144 && c.traces[3].count() == 852;
    const bool fast = c.seconds < 5.0;
    std::ostringstream d;
    d << "counts " << c.traces[0].count() << '/' << c.traces[1].count() << '/' << c.traces[2].count() << '/'
      << c.traces[3].count() << ", listings " << (sets ? "match" : "differ") << ", canonical order "
      << (order ? "ok" : "differs") << ", " << c.seconds << " s";
    report(1, sets && order && counts && fast, d.str());
}

void criterion2(const Computed &c) {
    std::ostringstream d;
    for (std::size_t s = 0; s < 3; ++s) {
        d << (s ? "; " : "") << stakeholder_names[s] << ' ';
        for (std::size_t m = 0; m < 4; ++m)
            d << (m ? "/" : "") << c.favourable[m][s];
    }
    report(2, c.favourable == favourable, d.str());
}

void criterion3(const Computed &c) {
    const UtilityTable table(c.records);
    bool ok = true;
    double worst = 0.0;
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t s = 0; s < 3; ++s) {
            const double u = table.at(m, s).utility;
            worst = std::max(worst, std::abs(u - utilities[m][s]));
            ok = ok && near(u, utilities[m][s]);
        }
    bool rank_ok = true;
    const auto rankings = rank_processes(table);
    for (std::size_t s = 0; s < rankings.size(); ++s)
        for (const auto &r : rankings[s].ranking) {
            const auto m = std::find(model_names.begin(), model_names.end(), r.process_name) - model_names.begin();
            rank_ok = rank_ok && !r.tied && r.rank == ranks[m][s];
        }
    std::ostringstream d;
    d << "12 utilities, max deviation " << worst << "; per-stakeholder ranks " << (rank_ok ? "match" : "differ");
    report(3, ok && rank_ok, d.str());
}

void criterion4(const Computed &c) {
    const UtilityTable table(c.records);
    const auto collective = rank_collective(table);
    bool ok = collective.size() == 4;
    std::string order;
    for (const auto &r : collective) {
        const auto m = std::find(model_names.begin(), model_names.end(), r.process_name) - model_names.begin();
        ok = ok && near(r.score, h_values[m]);
        order += (order.empty() ? "" : " > ") + r.process_name;
    }
    ok = ok && order == "FDAP-M3 > FDAP-M1 > FDAP-M2 > FDAP";
    report(4, ok, "collective " + order);
}

void criterion5(const Computed &c) {
    const UtilityTable table(c.records);
    const auto rows = cohort_analysis(table);
    bool ok = rows.size() == cohorts.size();
    int matched = 0;
    for (std::size_t i = 0; ok && i < rows.size(); ++i) {
        bool row_ok = rows[i].subset == cohorts[i].subset && rows[i].argmin_process == "FDAP-M3" &&
                      !rows[i].tied;
        for (std::size_t m = 0; m < 4; ++m)
            row_ok = row_ok && near(rows[i].h_values[m], cohorts[i].h[m]);
        matched += row_ok;
    }
    ok = ok && matched == 7;
    report(5, ok, std::to_string(matched) + "/7 cohort rows match, argmin FDAP-M3");
}

void criterion6(const Computed &c) {
    int round_trips = 0;
    for (const auto &r : c.records) {
        const double back = std::round(favourable_for_exponent(r.utility, r.valid_count));
        round_trips += back == static_cast<double>(r.favourable_count);
    }
    const double low = favourable_for_exponent(0.714394, 1'000'000);
    const double high = favourable_for_exponent(0.997548, 1'000'000);
    const bool worked = std::abs(low - 19'335) <= 1.0 && std::abs(high - 966'691) <= 1.0;
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(1);
    d << round_trips << "/12 round trips; at 10^6 valid: " << low << ", " << high;
    report(6, round_trips == 12 && worked, d.str());
}

bool subset_of(const TraceSet &a, const TraceSet &b) {
    return std::all_of(a.traces.begin(), a.traces.end(), [&](const Trace &t) { return b.contains(t); });
}

std::vector<std::vector<ActivityId>> sequences(const std::vector<ActivityId> &ids) {
    std::vector<std::vector<ActivityId>> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (ActivityId a : ids)
            if (std::find(out[i].begin(), out[i].end(), a) == out[i].end()) {
                auto next = out[i];
                next.push_back(a);
                out.push_back(std::move(next));
            }
    return out;
}

void criterion7() {
    constexpr std::uint64_t seed = 42;
    constexpr int cases = 100;

    const auto campaign = run_oracle_campaign(seed, cases);

    // Monotonicity on the same ensemble: dropping the last constraint never
    // removes a trace.
    std::mt19937_64 rng(seed);
    int monotone = 0;
    for (int i = 0; i < cases; ++i) {
        const auto p = random_process(rng, static_cast<std::size_t>(i));
        if (p.constraints().empty()) {
            ++monotone;
            continue;
        }
        auto fewer = p.constraints();
        fewer.pop_back();
        const DeclarativeProcess q(p.name(), p.alphabet(), fewer);
        monotone += subset_of(enumerate_bruteforce(p), enumerate_bruteforce(q));
    }

    // Vacuity and desugaring over every trace of {1, 2, 3}.
    const std::vector<ActivityId> ids{1, 2, 3};
    const auto seqs = sequences(ids);
    bool laws = true;
    for (ActivityId a : ids)
        for (ActivityId b : ids) {
            if (a == b)
                continue;
            for (const auto &s : seqs) {
                const Trace t(s);
                const bool has_a = t.contains(a), has_b = t.contains(b);
                if (!has_b)
                    laws = laws && satisfies(t, Constraint::prec(a, b));
                if (!has_a) {
                    laws = laws && satisfies(t, Constraint::resp(a, b));
                    laws = laws && satisfies(t, Constraint::orresp(a, {b}));
                }
                if (!has_a || !has_b)
                    laws = laws && satisfies(t, Constraint::weakresp(a, b));
                laws = laws && satisfies(t, Constraint::succ(a, b)) ==
                                   (satisfies(t, Constraint::prec(a, b)) && satisfies(t, Constraint::resp(a, b)));
                laws = laws && satisfies(t, Constraint::orresp(a, {b})) == satisfies(t, Constraint::resp(a, b));
                laws = laws && PreferenceExpr::contains(a).evaluate(t) == has_a;
                laws = laws && satisfies(t, Constraint::mustexist(a)) == has_a;
            }
        }

    std::ostringstream d;
    d << (campaign.passed() ? "pruned = brute force" : "pruned/brute force disagree") << " on " << cases
      << " cases (seed " << seed << "), monotone " << monotone << '/' << cases << ", n=3 laws "
      << (laws ? "hold" : "broken") << " over " << seqs.size() << " traces";
    report(7, campaign.passed() && monotone == cases && laws, d.str());
}

void criterion8(const Computed &c) {
    const bool long_in = c.traces[0].contains(Trace{1, 2, 3, 4});
    const bool short_out = !c.traces[0].contains(Trace{1, 2});
    report(8, long_in && short_out,
           std::string("(1, 2, 3, 4) ") + (long_in ? "valid" : "missing") + ", (1, 2) " +
               (short_out ? "invalid" : "valid"));
}

void criterion9() {
    const auto n10 = unconstrained_count(10);
    std::ostringstream d;
    d << "n=10 count " << n10 << "; quoted figure " << quoted_unconstrained_count_10 << " differs by "
      << static_cast<long long>(quoted_unconstrained_count_10 - n10) << " (reported, not reconciled)";
    report(9, n10 == 9'864'101, d.str());
}

} // namespace

int main() {
    try {
        const auto computed = compute();
        criterion1(computed);
        criterion2(computed);
        criterion3(computed);
        criterion4(computed);
        criterion5(computed);
        criterion6(computed);
        criterion7();
        criterion8(computed);
        criterion9();
    } catch (const std::exception &e) {
        std::cout << "FAIL aborted: " << e.what() << '\n';
        return 1;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all 9 criteria passed") << '\n';
    return failures ? 1 : 0;
}

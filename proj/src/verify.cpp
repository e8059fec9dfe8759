#include "dproc/verify.hpp"

#include "dproc/dsl.hpp"
#include "dproc/model_library.hpp"
#include "dproc/report.hpp"
#include "dproc/stakeholder_prefs.hpp"
#include "dproc/trace_enumeration.hpp"
#include "dproc/utility_ranking.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dproc {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::write(std::ostream &os) const {
    for (const auto &c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty())
            os << "  [" << c.detail << ']';
        os << '\n';
    }
    for (const auto &n : notes)
        os << "NOTE " << n << '\n';
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.passed; });
    os << checks.size() - failed << '/' << checks.size() << " checks passed\n";
}

std::vector<GoldenCase> golden_cases() {
    return {
        {"FDAP", 46, {43, 10, 32}, {0.982869, 0.622806, 0.908149}, {3, 4, 4}, 0.388594, 4},
        {"FDAP-M1", 14, {12, 10, 11}, {0.947157, 0.885469, 0.917600}, {4, 2, 3}, 0.150664, 2},
        {"FDAP-M2", 144, {141, 34, 137}, {0.995799, 0.714394, 0.990058}, {2, 3, 2}, 0.285810, 3},
        {"FDAP-M3", 852, {849, 601, 838}, {0.999478, 0.948361, 0.997548}, {1, 1, 1}, 0.051700, 1},
    };
}

namespace {

struct GoldenCohort {
    std::vector<std::string> subset;
    std::vector<double> h; // FDAP, M1, M2, M3
};

std::vector<GoldenCohort> golden_cohorts() {
    return {
        {{"S1"}, {0.017131, 0.052843, 0.004201, 0.000522}},
        {{"S2"}, {0.377194, 0.114531, 0.285606, 0.051639}},
        {{"S3"}, {0.091851, 0.082400, 0.009942, 0.002452}},
        {{"S1", "S2"}, {0.377583, 0.126134, 0.285637, 0.051642}},
        {{"S1", "S3"}, {0.093435, 0.097888, 0.010793, 0.002507}},
        {{"S2", "S3"}, {0.388216, 0.141093, 0.285779, 0.051697}},
        {{"S1", "S2", "S3"}, {0.388594, 0.150664, 0.285810, 0.051700}},
    };
}

std::vector<Trace> golden_fdap_traces() {
    return {
        {},
        {1},
        {1, 9, 10},
        {1, 2, 3, 4},
        {1, 2, 3, 4, 5, 6},
        {1, 2, 3, 4, 9, 10},
        {1, 2, 3, 9, 4, 10},
        {1, 2, 3, 9, 10, 4},
        {1, 2, 9, 3, 4, 10},
        {1, 2, 9, 3, 10, 4},
        {1, 2, 9, 10, 3, 4},
        {1, 9, 2, 3, 4, 10},
        {1, 9, 2, 3, 10, 4},
        {1, 9, 2, 10, 3, 4},
        {1, 9, 10, 2, 3, 4},
        {1, 2, 3, 4, 5, 7, 8},
        {1, 2, 3, 4, 5, 6, 7, 8},
        {1, 2, 3, 4, 5, 7, 6, 8},
        {1, 2, 3, 4, 5, 7, 8, 6},
        {1, 2, 3, 4, 5, 6, 9, 10},
        {1, 2, 3, 4, 5, 9, 6, 10},
        {1, 2, 3, 4, 5, 9, 10, 6},
        {1, 2, 3, 4, 9, 5, 6, 10},
        {1, 2, 3, 4, 9, 5, 10, 6},
        {1, 2, 3, 4, 9, 10, 5, 6},
        {1, 2, 3, 9, 4, 5, 6, 10},
        {1, 2, 3, 9, 4, 5, 10, 6},
        {1, 2, 3, 9, 4, 10, 5, 6},
        {1, 2, 3, 9, 10, 4, 5, 6},
        {1, 2, 9, 3, 4, 5, 6, 10},
        {1, 2, 9, 3, 4, 5, 10, 6},
        {1, 2, 9, 3, 4, 10, 5, 6},
        {1, 2, 9, 3, 10, 4, 5, 6},
        {1, 2, 9, 10, 3, 4, 5, 6},
        {1, 9, 2, 3, 4, 5, 6, 10},
        {1, 9, 2, 3, 4, 5, 10, 6},
        {1, 9, 2, 3, 4, 10, 5, 6},
        {1, 9, 2, 3, 10, 4, 5, 6},
        {1, 9, 2, 10, 3, 4, 5, 6},
        {1, 9, 10, 2, 3, 4, 5, 6},
        {1, 2, 3, 4, 5, 7, 8, 9, 10},
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
        {1, 2, 3, 4, 5, 7, 6, 8, 9, 10},
        {1, 2, 3, 4, 5, 7, 8, 6, 9, 10},
        {1, 2, 3, 4, 5, 7, 8, 9, 6, 10},
        {1, 2, 3, 4, 5, 7, 8, 9, 10, 6},
    };
}

std::vector<Trace> golden_m1_traces() {
    return {
        {},
        {1},
        {1, 2, 3, 4},
        {1, 2, 3, 4, 5, 6},
        {1, 2, 3, 4, 5, 7, 8},
        {1, 2, 3, 4, 5, 6, 7, 8},
        {1, 2, 3, 4, 5, 7, 6, 8},
        {1, 2, 3, 4, 5, 7, 8, 6},
        {1, 2, 3, 4, 5, 7, 8, 9, 10},
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
        {1, 2, 3, 4, 5, 7, 6, 8, 9, 10},
        {1, 2, 3, 4, 5, 7, 8, 6, 9, 10},
        {1, 2, 3, 4, 5, 7, 8, 9, 6, 10},
        {1, 2, 3, 4, 5, 7, 8, 9, 10, 6},
    };
}

bool close(double a, double b) { return std::abs(a - b) <= golden_tolerance; }

std::string expected_actual(const std::string &expected, const std::string &actual) {
    return "expected " + expected + ", got " + actual;
}

void check_listing(VerificationReport &report, const std::string &name, std::vector<Trace> expected,
                   const TraceSet &actual) {
    sort_canonical(expected);
    std::ostringstream detail;
    detail << expected.size() << " listed traces, " << actual.count() << " enumerated";
    report.add(name, expected == actual.traces, detail.str());
}

} // namespace

VerificationReport run_golden_suite() {
    VerificationReport report;
    const auto models = fdap_models();
    const auto cases = golden_cases();

    std::vector<UtilityRecord> records;
    for (std::size_t m = 0; m < models.size(); ++m) {
        const auto &model = models[m];
        const auto &golden = cases[m];
        const auto traces = enumerate_pruned(model.process, {0});
        report.add(golden.model + " valid(D)", traces.count() == golden.valid,
                   expected_actual(std::to_string(golden.valid), std::to_string(traces.count())));
        for (std::size_t s = 0; s < model.stakeholders.size(); ++s) {
            const auto &sh = model.stakeholders[s];
            const auto fav = count_favourable(sh, traces);
            report.add(golden.model + " " + sh.name + "(D)", fav == golden.favourable[s],
                       expected_actual(std::to_string(golden.favourable[s]), std::to_string(fav)));
            records.push_back(make_record(model.process.name(), sh.name, fav, traces.count()));
            const double u = records.back().utility;
            report.add(golden.model + " u_" + sh.name, close(u, golden.utility[s]),
                       expected_actual(format_fixed(golden.utility[s]), format_fixed(u, 9)));
        }
        if (m == 0)
            check_listing(report, "FDAP trace listing", golden_fdap_traces(), traces);
        if (m == 1)
            check_listing(report, "FDAP-M1 trace listing", golden_m1_traces(), traces);
    }

    const UtilityTable table(records);
    const auto rankings = rank_processes(table);
    for (std::size_t s = 0; s < rankings.size(); ++s) {
        for (const auto &r : rankings[s].ranking) {
            const auto it = std::find_if(cases.begin(), cases.end(),
                                         [&](const GoldenCase &g) { return g.model == r.process_name; });
            report.add(r.process_name + " rank for " + rankings[s].stakeholder_name,
                       r.rank == it->rank[s] && !r.tied,
                       expected_actual(ordinal(it->rank[s]), ordinal(r.rank)));
        }
    }

    const auto collective = rank_collective(table);
    std::string order;
    for (const auto &r : collective) {
        const auto it = std::find_if(cases.begin(), cases.end(),
                                     [&](const GoldenCase &g) { return g.model == r.process_name; });
        report.add(r.process_name + " H", close(r.score, it->h),
                   expected_actual(format_fixed(it->h), format_fixed(r.score, 9)));
        report.add(r.process_name + " collective rank", r.rank == it->collective_rank,
                   expected_actual(ordinal(it->collective_rank), ordinal(r.rank)));
        order += (order.empty() ? "" : " > ") + r.process_name;
    }
    report.add("collective order", order == "FDAP-M3 > FDAP-M1 > FDAP-M2 > FDAP", order);

    const auto rows = cohort_analysis(table);
    const auto golden_rows = golden_cohorts();
    report.add("cohort row count", rows.size() == golden_rows.size(),
               expected_actual(std::to_string(golden_rows.size()), std::to_string(rows.size())));
    for (std::size_t i = 0; i < std::min(rows.size(), golden_rows.size()); ++i) {
        const auto &row = rows[i];
        const auto &g = golden_rows[i];
        bool ok = row.subset == g.subset && row.h_values.size() == g.h.size();
        std::string actual;
        for (std::size_t p = 0; ok && p < g.h.size(); ++p) {
            ok = close(row.h_values[p], g.h[p]);
            actual += (p ? ", " : "") + format_fixed(row.h_values[p]);
        }
        const std::string label = "{" + [&] {
            std::string s;
            for (const auto &n : g.subset)
                s += (s.empty() ? "" : ",") + n;
            return s;
        }() + "}";
        report.add("cohort " + label + " H", ok, "(" + actual + ")");
        report.add("cohort " + label + " argmin", row.argmin_process == "FDAP-M3" && !row.tied,
                   row.argmin_process);
    }

    for (const auto &r : records) {
        const double back = std::round(favourable_for_exponent(r.utility, r.valid_count));
        report.add("inversion " + r.process_name + " " + r.stakeholder_name,
                   back == static_cast<double>(r.favourable_count),
                   expected_actual(std::to_string(r.favourable_count), format_fixed(back, 0)));
    }

    report.notes.push_back("ten unconstrained activities admit " + std::to_string(partial_permutation_count(10)) +
                           " traces (closed form); the commonly quoted " +
                           std::to_string(quoted_unconstrained_count_10) + " is one too many");
    report.notes.push_back("FDAP-M2 without prec(1,11) admits " +
                           std::to_string(count_valid(fdap_m2_without_audit_ordering())) +
                           " traces; the bundled model includes it");
    return report;
}

DeclarativeProcess random_process(std::mt19937_64 &rng, std::size_t index) {
    auto below = [&rng](std::uint64_t n) { return static_cast<ActivityId>(rng() % n); };
    const ActivityId n = 3 + below(4);
    const std::size_t count = below(9);
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < count; ++i) {
        const auto kind = static_cast<ConstraintKind>(i == 0 ? index % 6 : below(6));
        const ActivityId a = 1 + below(n);
        auto other = [&](const std::vector<ActivityId> &taken) {
            ActivityId b;
            do {
                b = 1 + below(n);
            } while (b == a || std::find(taken.begin(), taken.end(), b) != taken.end());
            return b;
        };
        std::vector<ActivityId> objects;
        if (kind == ConstraintKind::orresp) {
            const std::size_t k = 1 + below(std::min<ActivityId>(3, n - 1));
            while (objects.size() < k)
                objects.push_back(other(objects));
        } else if (kind != ConstraintKind::mustexist) {
            objects.push_back(other({}));
        }
        cs.emplace_back(kind, a, std::move(objects));
    }
    return DeclarativeProcess("random-" + std::to_string(index), Alphabet::range(1, n), std::move(cs));
}

VerificationReport run_oracle_campaign(std::uint64_t seed, int cases) {
    if (cases < 1)
        throw AnalysisError("an oracle campaign needs at least one case");
    VerificationReport report;
    std::mt19937_64 rng(seed);
    std::vector<int> kinds_seen(6, 0);
    int agreed = 0;
    for (int i = 0; i < cases; ++i) {
        const auto process = random_process(rng, static_cast<std::size_t>(i));
        for (const auto &c : process.constraints())
            ++kinds_seen[static_cast<std::size_t>(c.kind())];
        const auto brute = enumerate_bruteforce(process);
        const auto pruned = enumerate_pruned(process);
        if (brute != pruned) {
            report.add("case " + std::to_string(i), false,
                       "brute force " + std::to_string(brute.count()) + " traces, pruned " +
                           std::to_string(pruned.count()) + "; process:\n" + serialize_process(process));
            break;
        }
        ++agreed;
    }
    report.add("pruned = brute force (seed " + std::to_string(seed) + ")", agreed == cases,
               std::to_string(agreed) + "/" + std::to_string(cases) + " cases agree");
    const bool all_kinds = std::all_of(kinds_seen.begin(), kinds_seen.end(), [](int k) { return k > 0; });
    report.add("every constraint kind exercised", all_kinds || cases < 6);
    return report;
}

std::uint64_t unconstrained_count(unsigned n, unsigned cap) {
    if (n > cap)
        throw AnalysisError("n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    const auto closed = partial_permutation_count(n);
    if (n <= 8) {
        const auto enumerated = count_valid(DeclarativeProcess("unconstrained", Alphabet::range(1, n), {}));
        if (enumerated != closed)
            throw AnalysisError("closed form " + std::to_string(closed) + " disagrees with enumeration " +
                                std::to_string(enumerated));
    }
    return closed;
}

} // namespace dproc

#include "dproc/cli.hpp"

#include "dproc/dsl.hpp"
#include "dproc/report.hpp"
#include "dproc/stakeholder_prefs.hpp"
#include "dproc/trace_enumeration.hpp"
#include "dproc/utility_ranking.hpp"
#include "dproc/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace dproc {

namespace {

/// Usage-level failure: unreadable input, parse or validation error.
struct UsageFailure {
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageFailure{"cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Parse> auto parse_file(const std::string &path, Parse parse) {
    const auto text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError &e) {
        throw UsageFailure{path + ":" + e.what()};
    } catch (const ModelError &e) {
        throw UsageFailure{path + ": " + e.what()};
    }
}

DeclarativeProcess load_process(const std::string &path) {
    return parse_file(path, [](const std::string &t) { return parse_process(t); });
}

std::vector<Stakeholder> load_stakeholders(const std::string &path) {
    return parse_file(path, [](const std::string &t) { return parse_stakeholders(t); });
}

std::vector<std::string> names_of(const std::vector<Stakeholder> &ss) {
    std::vector<std::string> out;
    for (const auto &s : ss)
        out.push_back(s.name);
    return out;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Enumerate declarative process traces and rank processes by stakeholder utility", "dproc"};
    app.require_subcommand(1);

    std::string format_name = "table";
    unsigned threads = 0;

    auto *enumerate = app.add_subcommand("enumerate", "List or count the valid traces of a process");
    std::string process_path;
    bool count_only = false, oracle = false;
    std::size_t max_bruteforce = default_bruteforce_cap;
    enumerate->add_option("process", process_path, "Process file (.dproc)")->required();
    enumerate->add_option("--format", format_name, "table, csv or jsonl")->capture_default_str();
    enumerate->add_flag("--count-only", count_only, "Print only the number of valid traces");
    enumerate->add_flag("--oracle", oracle, "Use brute-force enumeration instead of pruned search");
    enumerate->add_option("--max-bruteforce", max_bruteforce, "Largest alphabet accepted by --oracle")
        ->capture_default_str();
    enumerate->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

    auto *analyze = app.add_subcommand("analyze", "Stakeholder utilities and process rankings");
    std::vector<std::string> process_paths, stakeholder_paths;
    bool cohorts = false;
    analyze->add_option("processes", process_paths, "Process files (.dproc)")->required();
    analyze->add_option("--stakeholders,-s", stakeholder_paths,
                        "Stakeholder file (.dstake); give one for all processes or one per process")
        ->required();
    analyze->add_option("--format", format_name, "table, csv or jsonl")->capture_default_str();
    analyze->add_flag("--cohorts", cohorts, "Add H distances and minimizing process for every stakeholder subset");
    analyze->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

    auto *dot = app.add_subcommand("export-dot", "Write the constraint graph in Graphviz format");
    std::string dot_path;
    dot->add_option("process", dot_path, "Process file (.dproc)")->required();

    auto *verify = app.add_subcommand("verify", "Reproduce the bundled reference results");
    std::uint64_t seed = 42;
    int cases = 100;
    bool slow = false;
    verify->add_option("--seed", seed, "Oracle campaign seed")->capture_default_str();
    verify->add_option("--cases", cases, "Oracle campaign size")->capture_default_str();
    verify->add_flag("--slow", slow, "Also enumerate ten unconstrained activities");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto format = report_format_from_string(format_name);
    if (!format) {
        err << "error: unknown format '" << format_name << "' (expected table, csv or jsonl)\n";
        return exit_usage;
    }

    try {
        if (*enumerate) {
            const auto process = load_process(process_path);
            if (oracle) {
                const auto traces = enumerate_bruteforce(process, max_bruteforce);
                if (count_only)
                    write_count(out, process.name(), traces.count(), *format);
                else
                    write_traces(out, traces, *format);
            } else if (count_only) {
                write_count(out, process.name(), count_valid(process, {threads}), *format);
            } else {
                write_traces(out, enumerate_pruned(process, {threads}), *format);
            }
        } else if (*analyze) {
            std::vector<DeclarativeProcess> processes;
            for (const auto &p : process_paths)
                processes.push_back(load_process(p));
            if (stakeholder_paths.size() != 1 && stakeholder_paths.size() != processes.size())
                throw UsageFailure{"give one stakeholder file, or one per process (" +
                                   std::to_string(processes.size()) + ")"};
            std::vector<std::vector<Stakeholder>> cohorts_per_file;
            for (const auto &p : stakeholder_paths)
                cohorts_per_file.push_back(load_stakeholders(p));
            for (std::size_t i = 0; i < cohorts_per_file.size(); ++i) {
                if (cohorts_per_file[i].empty())
                    throw UsageFailure{stakeholder_paths[i] + ": no stakeholders defined"};
                if (names_of(cohorts_per_file[i]) != names_of(cohorts_per_file.front()))
                    throw UsageFailure{stakeholder_paths[i] + ": stakeholder names differ from " +
                                       stakeholder_paths.front()};
            }
            for (std::size_t i = 0; i < processes.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (processes[i].name() == processes[j].name())
                        throw UsageFailure{"duplicate process name '" + processes[i].name() + "'"};

            std::vector<UtilityRecord> records;
            for (std::size_t i = 0; i < processes.size(); ++i) {
                const auto traces = enumerate_pruned(processes[i], {threads});
                const auto &stakeholders = cohorts_per_file[cohorts_per_file.size() == 1 ? 0 : i];
                for (const auto &s : stakeholders)
                    records.push_back(make_record(processes[i].name(), s.name, count_favourable(s, traces),
                                                  traces.count()));
            }
            const UtilityTable table(std::move(records));
            write_utilities(out, table, *format);
            if (cohorts) {
                if (*format != ReportFormat::jsonl)
                    out << '\n';
                write_cohorts(out, table, *format);
            }
        } else if (*dot) {
            out << export_dot(load_process(dot_path));
        } else if (*verify) {
            const auto start = std::chrono::steady_clock::now();
            auto report = run_golden_suite();
            auto campaign = run_oracle_campaign(seed, cases);
            report.checks.insert(report.checks.end(), campaign.checks.begin(), campaign.checks.end());
            const auto closed = unconstrained_count(10);
            report.add("unconstrained n=10 closed form", closed == 9'864'101, std::to_string(closed));
            if (slow) {
                const auto n = count_valid(DeclarativeProcess("unconstrained", Alphabet::range(1, 10), {}), {threads});
                report.add("unconstrained n=10 enumeration", n == closed, std::to_string(n));
            }
            report.write(out);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            out << "elapsed " << format_fixed(elapsed.count(), 3) << " s\n";
            return report.passed() ? exit_ok : exit_analysis;
        }
    } catch (const UsageFailure &e) {
        err << "error: " << e.message << '\n';
        return exit_usage;
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << '\n';
        return exit_analysis;
    } catch (const AnalysisError &e) {
        err << "error: " << e.what() << '\n';
        return exit_analysis;
    }
    return exit_ok;
}

} // namespace dproc

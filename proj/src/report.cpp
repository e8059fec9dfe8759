#include "dproc/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dproc {

using json = nlohmann::ordered_json;

std::optional<ReportFormat> report_format_from_string(std::string_view s) {
    if (s == "table")
        return ReportFormat::table;
    if (s == "csv")
        return ReportFormat::csv;
    if (s == "jsonl")
        return ReportFormat::jsonl;
    return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << value;
    return os.str();
}

std::string ordinal(int n) {
    const int tens = n % 100;
    const char *suffix = "th";
    if (tens < 11 || tens > 13) {
        switch (n % 10) {
        case 1: suffix = "st"; break;
        case 2: suffix = "nd"; break;
        case 3: suffix = "rd"; break;
        default: break;
        }
    }
    return std::to_string(n) + suffix;
}

namespace {

std::string space_separated(std::span<const ActivityId> ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        out += (i ? " " : "") + std::to_string(ids[i]);
    return out;
}

std::string join(const std::vector<std::string> &xs, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i];
    return out;
}

std::string pad(std::string s, std::size_t width) {
    // Display width; ε is two bytes but one column.
    std::size_t cols = 0;
    for (unsigned char c : s)
        cols += (c & 0xC0) != 0x80;
    if (cols < width)
        s.append(width - cols, ' ');
    return s;
}

std::size_t name_width(const std::vector<std::string> &names, std::size_t minimum) {
    std::size_t w = minimum;
    for (const auto &n : names)
        w = std::max(w, n.size());
    return w + 2;
}

} // namespace

void write_traces(std::ostream &os, const TraceSet &traces, ReportFormat format) {
    switch (format) {
    case ReportFormat::table: {
        os << "Valid traces of " << traces.process_name << " (" << traces.count() << ")\n";
        const std::size_t w = std::to_string(traces.count()).size() + 1;
        for (std::size_t i = 0; i < traces.count(); ++i)
            os << std::setw(static_cast<int>(w)) << (std::to_string(i + 1) + ".") << ' '
               << traces.traces[i].to_string() << '\n';
        break;
    }
    case ReportFormat::csv:
        os << "index,length,trace\n";
        for (std::size_t i = 0; i < traces.count(); ++i)
            os << i + 1 << ',' << traces.traces[i].size() << ','
               << space_separated(traces.traces[i].entries()) << '\n';
        break;
    case ReportFormat::jsonl:
        for (std::size_t i = 0; i < traces.count(); ++i) {
            const auto e = traces.traces[i].entries();
            json j{{"process", traces.process_name},
                   {"index", i + 1},
                   {"trace", std::vector<ActivityId>(e.begin(), e.end())}};
            os << j.dump() << '\n';
        }
        break;
    }
}

void write_count(std::ostream &os, const std::string &process_name, std::uint64_t count,
                 ReportFormat format) {
    switch (format) {
    case ReportFormat::table:
        os << count << '\n';
        break;
    case ReportFormat::csv:
        os << "process,valid\n" << process_name << ',' << count << '\n';
        break;
    case ReportFormat::jsonl:
        os << json{{"process", process_name}, {"valid", count}}.dump() << '\n';
        break;
    }
}

void write_utilities(std::ostream &os, const UtilityTable &table, ReportFormat format) {
    const auto rankings = rank_processes(table);
    auto rank_of = [&](std::size_t s, const std::string &process) {
        for (const auto &r : rankings[s].ranking)
            if (r.process_name == process)
                return r;
        return RankedProcess{};
    };

    if (format == ReportFormat::csv)
        os << "process,stakeholder,valid,favourable,utility,rank\n";
    const std::size_t pw = name_width(table.processes(), 9);
    for (std::size_t s = 0; s < table.stakeholders().size(); ++s) {
        const auto &sname = table.stakeholders()[s];
        if (format == ReportFormat::table) {
            if (s)
                os << '\n';
            os << pad("Process", pw) << pad("valid(D)", 10) << pad(sname + "(D)", 10)
               << pad("u_" + sname + "(D)", 12) << "rank\n";
        }
        for (std::size_t p = 0; p < table.processes().size(); ++p) {
            const auto &r = table.at(p, s);
            const auto rank = rank_of(s, r.process_name);
            switch (format) {
            case ReportFormat::table:
                os << pad(r.process_name, pw) << pad(std::to_string(r.valid_count), 10)
                   << pad(std::to_string(r.favourable_count), 10) << pad(format_fixed(r.utility), 12)
                   << ordinal(rank.rank) << (rank.tied ? " (tie)" : "") << '\n';
                break;
            case ReportFormat::csv:
                os << r.process_name << ',' << sname << ',' << r.valid_count << ','
                   << r.favourable_count << ',' << format_fixed(r.utility) << ',' << rank.rank << '\n';
                break;
            case ReportFormat::jsonl:
                os << json{{"type", "utility"},
                           {"process", r.process_name},
                           {"stakeholder", sname},
                           {"valid", r.valid_count},
                           {"favourable", r.favourable_count},
                           {"utility", r.utility},
                           {"rank", rank.rank},
                           {"tied", rank.tied}}
                          .dump()
                   << '\n';
                break;
            }
        }
    }
}

void write_cohorts(std::ostream &os, const UtilityTable &table, ReportFormat format) {
    const auto collective = rank_collective(table);
    const auto rows = cohort_analysis(table);
    const auto &procs = table.processes();
    auto collective_of = [&](const std::string &p) {
        for (const auto &r : collective)
            if (r.process_name == p)
                return r;
        return RankedProcess{};
    };

    switch (format) {
    case ReportFormat::table: {
        const std::size_t pw = name_width(procs, 9);
        os << pad("Process", pw) << pad("H(D)", 12) << "Rank\n";
        for (const auto &p : procs) {
            const auto r = collective_of(p);
            os << pad(p, pw) << pad(format_fixed(r.score), 12) << ordinal(r.rank)
               << (r.tied ? " (tie)" : "") << '\n';
        }
        os << '\n';
        std::size_t sw = 8;
        for (const auto &row : rows)
            sw = std::max(sw, join(row.subset, ",").size() + 4);
        os << pad("Subset", sw);
        for (const auto &p : procs)
            os << pad(p, std::max<std::size_t>(p.size() + 2, 10));
        os << "argmin\n";
        for (const auto &row : rows) {
            os << pad("{" + join(row.subset, ",") + "}", sw);
            for (std::size_t i = 0; i < procs.size(); ++i)
                os << pad(format_fixed(row.h_values[i]), std::max<std::size_t>(procs[i].size() + 2, 10));
            os << row.argmin_process << (row.tied ? " (tie)" : "") << '\n';
        }
        break;
    }
    case ReportFormat::csv: {
        os << "process,h,rank\n";
        for (const auto &p : procs) {
            const auto r = collective_of(p);
            os << p << ',' << format_fixed(r.score) << ',' << r.rank << '\n';
        }
        os << "\nsubset";
        for (const auto &p : procs)
            os << ',' << p;
        os << ",argmin,tied\n";
        for (const auto &row : rows) {
            os << join(row.subset, " ");
            for (double h : row.h_values)
                os << ',' << format_fixed(h);
            os << ',' << row.argmin_process << ',' << (row.tied ? 1 : 0) << '\n';
        }
        break;
    }
    case ReportFormat::jsonl: {
        for (const auto &p : procs) {
            const auto r = collective_of(p);
            os << json{{"type", "collective"}, {"process", p}, {"h", r.score}, {"rank", r.rank}, {"tied", r.tied}}
                      .dump()
               << '\n';
        }
        for (const auto &row : rows) {
            json h = json::object();
            for (std::size_t i = 0; i < procs.size(); ++i)
                h[procs[i]] = row.h_values[i];
            os << json{{"type", "cohort"},
                       {"subset", row.subset},
                       {"h", h},
                       {"argmin", row.argmin_process},
                       {"tied", row.tied}}
                      .dump()
               << '\n';
        }
        break;
    }
    }
}

namespace {

std::string dot_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string export_dot(const DeclarativeProcess &process) {
    std::ostringstream os;
    os << "digraph \"" << dot_escape(process.name()) << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (const auto &a : process.alphabet().activities()) {
        os << "  \"" << a.id << "\" [label=\"" << a.id << '"';
        if (a.label)
            os << ", tooltip=\"" << dot_escape(*a.label) << '"';
        const bool must = std::any_of(process.constraints().begin(), process.constraints().end(),
                                      [&](const Constraint &c) {
                                          return c.kind() == ConstraintKind::mustexist && c.subject() == a.id;
                                      });
        if (must)
            os << ", peripheries=2, xlabel=\"mustexist\"";
        os << "];\n";
    }
    for (const auto &c : process.constraints()) {
        if (c.kind() == ConstraintKind::mustexist)
            continue;
        std::string label(to_string(c.kind()));
        if (c.kind() == ConstraintKind::orresp) {
            label += '(';
            for (std::size_t i = 0; i < c.objects().size(); ++i)
                label += (i ? "," : "") + std::to_string(c.objects()[i]);
            label += ')';
        }
        for (ActivityId b : c.objects())
            os << "  \"" << c.subject() << "\" -> \"" << b << "\" [label=\"" << label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace dproc

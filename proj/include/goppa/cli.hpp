#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <goppa/report.hpp>

namespace goppa {

struct RunConfig {
    std::string command;
    int l = 0;
    std::uint64_t seed = 1;
    std::optional<CodeId> code_id;
    int cap = 28;
    std::string format = "report-text";
    std::string out_path;
};

namespace detail {

inline std::string distance_structured(const Report& head, const CodeRow& row,
                                       const std::optional<DistanceResult>& d) {
    std::ostringstream os;
    emit_header(os, head);
    emit_code_line(os, row);
    if (d) {
        os << "witness_weight " << d->witness.weight() << '\n';
        os << "witness_support";
        for (std::size_t p : d->witness.support()) os << ' ' << p;
        os << '\n';
        os << "enumerated " << d->enumerated << '\n';
    }
    os << "end\n";
    return os.str();
}

inline std::string distance_report_text(const CodeRow& row,
                                        const std::optional<DistanceResult>& d,
                                        int l, std::uint64_t seed) {
    std::ostringstream os;
    os << "code " << to_string(row.id) << " l=" << l << " seed=" << seed
       << " n=" << row.n << " k=" << row.k << '\n';
    if (row.bound)
        os << "d " << *row.d << " bound (dimension above enumeration cap)\n";
    else if (!row.d)
        os << "d - none (no nonzero codewords)\n";
    else
        os << "d " << *row.d << " exact\n";
    if (d) {
        os << "witness weight " << d->witness.weight() << ", support:";
        for (std::size_t p : d->witness.support()) os << ' ' << p;
        os << '\n';
        os << "enumerated " << d->enumerated << " codewords\n";
    }
    return os.str();
}

inline std::string export_structured(const Report& head, const Code& c,
                                     CodeId id) {
    std::ostringstream os;
    emit_header(os, head);
    os << "code " << to_string(id) << ' ' << family_of(id) << ' ' << c.n()
       << ' ' << c.k() << " - none\n";
    os << "goppa_poly";
    for (Elem e : c.g().coeffs) os << ' ' << e;
    os << '\n';
    os << "locations";
    for (Elem e : c.locations().elems) os << ' ' << e;
    os << '\n';
    const auto& hf = c.h_field();
    for (std::size_t r = 0; r < hf.size(); ++r) {
        os << "h_field_row " << r;
        for (Elem e : hf[r]) os << ' ' << e;
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

inline std::string export_report_text(const Code& c, CodeId id, int l,
                                      std::uint64_t seed) {
    std::ostringstream os;
    os << "code " << to_string(id) << " family=" << family_of(id)
       << " l=" << l << " seed=" << seed << " n=" << c.n() << " k=" << c.k()
       << " design_distance=" << c.design_distance() << '\n';
    os << "goppa_poly (constant first):";
    for (Elem e : c.g().coeffs) os << ' ' << e;
    os << '\n';
    os << "parity rows (field form): " << c.h_field().size()
       << ", binary rows: " << c.h_bin().rows() << ", binary rank "
       << c.h_rank() << '\n';
    return os.str();
}

}  // namespace detail

// Parses and runs one invocation. Returns 0 on success, 1 on any failed
// check or an out-of-cap distance request, 2 on usage errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
    RunConfig cfg;
    std::string code_str;
    CLI::App app{"separable Goppa code chain: build, verify, distances, export"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool with_code, bool with_cap) {
        sub->add_option("--l", cfg.l, "field parameter l (2..4), GF(2^(2l))")
            ->required();
        sub->add_option("--seed", cfg.seed, "parameter draw seed (default 1)");
        if (with_code)
            sub->add_option("--code", code_str,
                            "chain member: 1,1s,2,3,3s,4,4s,5,6,7")
                ->required();
        if (with_cap)
            sub->add_option("--cap", cfg.cap,
                            "enumeration dimension cap (default 28)");
        sub->add_option("--format", cfg.format,
                        "report-text | structured | matrix-text");
        sub->add_option("--out", cfg.out_path, "write the document here");
    };
    add_common(app.add_subcommand("build", "build the chain and tabulate it"),
               false, true);
    add_common(app.add_subcommand("verify", "run every structural check"),
               false, true);
    add_common(
        app.add_subcommand("distance", "exact minimum distance of a member"),
        true, true);
    add_common(app.add_subcommand("export", "emit matrices of a member"), true,
               false);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    if (cfg.l < 2 || cfg.l > 4) {
        err << "error: --l must be 2, 3, or 4\n";
        return 2;
    }
    if (cfg.cap < 0 || cfg.cap > 40) {
        err << "error: --cap must lie in 0..40\n";
        return 2;
    }
    if (cfg.format != "report-text" && cfg.format != "structured" &&
        cfg.format != "matrix-text") {
        err << "error: unknown --format " << cfg.format << '\n';
        return 2;
    }
    if (cfg.format == "matrix-text" && cfg.command != "export") {
        err << "error: --format matrix-text applies to export only\n";
        return 2;
    }
    if (!code_str.empty()) {
        cfg.code_id = parse_code_id(code_str);
        if (!cfg.code_id) {
            err << "error: unknown --code " << code_str << '\n';
            return 2;
        }
    }

    auto emit = [&](const std::string& doc) -> int {
        if (cfg.out_path.empty()) {
            out << doc;
            return 0;
        }
        std::ofstream of(cfg.out_path, std::ios::binary);
        if (!of) {
            err << "error: cannot open " << cfg.out_path << '\n';
            return 2;
        }
        of << doc;
        return 0;
    };

    try {
        auto field = std::make_shared<Field>(cfg.l);
        Chain ch = build_chain(field, cfg.seed);

        if (cfg.command == "build") {
            Report rep = build_report(ch, cfg.cap, false);
            return emit(cfg.format == "structured" ? to_structured_text(rep)
                                                   : to_report_text(rep));
        }
        if (cfg.command == "verify") {
            Report rep = build_report(ch, cfg.cap, true);
            int failed = 0;
            for (const CheckResult& c : rep.checks) failed += c.pass ? 0 : 1;
            int e = emit(cfg.format == "structured" ? to_structured_text(rep)
                                                    : to_report_text(rep));
            if (e != 0) return e;
            return failed == 0 ? 0 : 1;
        }
        if (cfg.command == "distance") {
            CodeRow row = code_row(ch, *cfg.code_id, cfg.cap);
            std::optional<DistanceResult> d;
            if (!row.bound && row.d)
                d = min_distance(ch.code(*cfg.code_id), cfg.cap);
            Report head = report_head(ch);
            int e = emit(cfg.format == "structured"
                             ? detail::distance_structured(head, row, d)
                             : detail::distance_report_text(row, d, cfg.l,
                                                            cfg.seed));
            if (e != 0) return e;
            return row.bound ? 1 : 0;
        }
        // export
        const Code& c = ch.code(*cfg.code_id);
        if (cfg.format == "matrix-text") return emit(c.h_bin().to_text());
        if (cfg.format == "structured") {
            Report head = report_head(ch);
            return emit(detail::export_structured(head, c, *cfg.code_id));
        }
        return emit(
            detail::export_report_text(c, *cfg.code_id, cfg.l, cfg.seed));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace goppa

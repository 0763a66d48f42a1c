#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <goppa/analysis.hpp>

namespace goppa {

struct CodeRow {
    CodeId id = CodeId::L1;
    int family = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<int> d;
    bool bound = false;  // d carries the design lower bound, not an exact value
};

struct QCRep {
    CodeId id = CodeId::L1;
    QCWitness w;
};

struct Report {
    int l = 0;
    std::uint64_t seed = 0;
    std::uint32_t modulus = 0;
    ChainParams params;
    std::vector<CodeRow> rows;
    std::vector<CheckResult> checks;
    std::vector<QCRep> qc;
    bool with_checks = false;
};

inline CodeRow code_row(const Chain& ch, CodeId id, int cap) {
    const Code& c = ch.code(id);
    CodeRow row;
    row.id = id;
    row.family = family_of(id);
    row.n = c.n();
    row.k = c.k();
    if (c.k() == 0) return row;
    if (c.k() <= static_cast<std::size_t>(cap)) {
        auto d = min_distance(c, cap);
        if (d) row.d = d->d;
    } else {
        row.d = c.design_distance();
        row.bound = true;
    }
    return row;
}

// Header fields only: identification and parameters, no code rows.
inline Report report_head(const Chain& ch) {
    Report r;
    r.l = ch.params.l;
    r.seed = ch.params.seed;
    r.modulus = ch.field->modulus();
    r.params = ch.params;
    return r;
}

inline Report build_report(const Chain& ch, int cap, bool with_checks) {
    Report r = report_head(ch);
    r.with_checks = with_checks;
    for (CodeId id : chain_order) r.rows.push_back(code_row(ch, id, cap));
    if (with_checks) {
        r.checks = run_chain_checks(ch);
        for (const CheckResult& c : run_analysis_checks(ch, cap))
            r.checks.push_back(c);
        for (CodeId id : qc_members)
            r.qc.push_back({id, qc_row(ch, id).representative});
    }
    return r;
}

namespace detail {

inline void emit_code_line(std::ostringstream& os, const CodeRow& row) {
    os << "code " << to_string(row.id) << ' ' << row.family << ' ' << row.n
       << ' ' << row.k << ' ';
    if (row.d)
        os << *row.d << (row.bound ? " bound" : " exact");
    else
        os << "- none";
    os << '\n';
}

inline void emit_header(std::ostringstream& os, const Report& r) {
    os << "schema_version 1\n";
    os << "l " << r.l << '\n';
    os << "seed " << r.seed << '\n';
    os << "field " << r.l << ' ' << r.modulus << '\n';
    os << "param A " << r.params.A << '\n';
    os << "param beta3 " << r.params.beta3 << '\n';
    os << "param C " << r.params.C << '\n';
    os << "param beta8 " << r.params.beta8 << '\n';
    os << "param R " << r.params.R << '\n';
    os << "param V " << r.params.V << '\n';
    os << "param beta9 " << r.params.beta9 << '\n';
    os << "param B " << r.params.B << '\n';
    os << "draws " << r.params.draws << '\n';
    os << "c_zero_gap " << r.params.c_zero_gap << '\n';
}

}  // namespace detail

// Key/value records, one per line, golden-file stable.
inline std::string to_structured_text(const Report& r) {
    std::ostringstream os;
    detail::emit_header(os, r);
    for (const CodeRow& row : r.rows) detail::emit_code_line(os, row);
    for (const CheckResult& c : r.checks)
        os << "check " << c.name << ' ' << (c.pass ? "pass" : "fail") << '\n';
    for (const QCRep& q : r.qc)
        os << "qc_witness " << to_string(q.id) << ' ' << q.w.beta << ' '
           << q.w.gamma << ' ' << q.w.orbit_index << ' '
           << (q.w.pass ? "pass" : "fail") << '\n';
    os << "end\n";
    return os.str();
}

inline std::string to_report_text(const Report& r) {
    std::ostringstream os;
    os << "chain over GF(2^" << 2 * r.l << "), l=" << r.l
       << ", seed=" << r.seed << ", modulus mask " << r.modulus << '\n';
    os << "parameters: A=" << r.params.A << " beta3=" << r.params.beta3
       << " C=" << r.params.C << " beta8=" << r.params.beta8
       << " R=" << r.params.R << " V=" << r.params.V
       << " beta9=" << r.params.beta9 << " B=" << r.params.B << " (draws="
       << r.params.draws << ", c_zero_gap=" << r.params.c_zero_gap << ")\n\n";
    os << std::left << std::setw(6) << "code" << std::right << std::setw(7)
       << "family" << std::setw(6) << "n" << std::setw(6) << "k"
       << std::setw(6) << "d" << '\n';
    for (const CodeRow& row : r.rows) {
        os << std::left << std::setw(6) << to_string(row.id) << std::right
           << std::setw(7) << row.family << std::setw(6) << row.n
           << std::setw(6) << row.k;
        if (row.d)
            os << std::setw(6) << *row.d
               << (row.bound ? " bound" : " exact");
        else
            os << std::setw(6) << '-' << " none";
        os << '\n';
    }
    if (r.with_checks) {
        int passed = 0;
        for (const CheckResult& c : r.checks) passed += c.pass ? 1 : 0;
        os << "\nchecks: " << passed << '/' << r.checks.size() << " passed\n";
        for (const CheckResult& c : r.checks)
            os << "  " << (c.pass ? "pass" : "FAIL") << ' ' << c.name << '\n';
        os << "\nsubstitution representatives:\n";
        for (const QCRep& q : r.qc)
            os << "  " << to_string(q.id) << ": beta=" << q.w.beta
               << " gamma=" << q.w.gamma << " orbit=" << q.w.orbit_index
               << ' ' << (q.w.pass ? "pass" : "FAIL") << '\n';
    }
    return os.str();
}

}  // namespace goppa

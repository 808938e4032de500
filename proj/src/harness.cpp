#include "natq/harness.hpp"

#include <sstream>

#include "natq/error.hpp"
#include "natq/gpa.hpp"

namespace natq {

const std::vector<std::string>& verify_groups() {
    static const std::vector<std::string> groups{"thm2.2", "prop2.1", "lem5.2", "thm5.3",
                                                 "prop4.1", "cor4.2", "thm6.4", "prop3.1"};
    return groups;
}

namespace {

RelationReport only(const RelationReport& r, std::string_view group) {
    RelationReport out;
    for (auto& c : r.checks)
        if (c.group == group) out.checks.push_back(c);
    return out;
}

RelationReport gpa_quotient_checks(const AlgebraAnalysis& an) {
    RelationReport rep;
    SurjectionReport sr = gabriel_surjection(an);
    const GPAlgebra& g = sr.gpa;
    Subspace j = g.degree_at_least(1);
    Subspace js = g.degree_at_least(sr.truncation_s);
    auto attempt = [&](const std::string& name, const Subspace& ideal, std::size_t expected_dim) {
        try {
            Subspace rad = radical_of_gpa_quotient(g, ideal, sr.truncation_s);
            rep.add("prop3.1", name, rad.size() == expected_dim ? CheckStatus::Pass : CheckStatus::Fail,
                    "dim rad = " + std::to_string(rad.size()));
        } catch (const Error& e) {
            rep.add("prop3.1", name, CheckStatus::Fail, e.what());
        }
    };
    attempt("rad(G / ker phi) = J / ker phi", sr.kernel, j.size() - sr.kernel.size());
    attempt("rad(G / J) = 0", j, 0);
    attempt("rad(G / J^s) = J / J^s", js, j.size() - js.size());
    return rep;
}

}  // namespace

RelationReport verify_target(const AlgebraAnalysis& an, std::string_view target, bool strict) {
    bool all = target == "all";
    bool known = all;
    for (auto& g : verify_groups()) known = known || g == target;
    if (!known) fail(ErrorKind::ParseError, "unknown verify target '" + std::string(target) + "'");
    auto wants = [&](std::string_view g) { return all || g == target; };

    RelationReport rep;
    if (wants("thm2.2") || wants("prop2.1") || wants("lem5.2") || wants("thm5.3")) {
        RelationReport q = verify_quiver_relations(an);
        for (auto g : {"thm2.2", "prop2.1", "lem5.2", "thm5.3"})
            if (wants(g)) rep.append(only(q, g));
    }
    if (wants("prop4.1") || wants("cor4.2")) {
        try {
            GpaCheck gc = verify_gpa_ext_quiver(an);
            for (auto g : {"prop4.1", "cor4.2"})
                if (wants(g)) rep.append(only(gc.report, g));
        } catch (const Error& e) {
            if (strict || (e.kind() != ErrorKind::NotSplitting && e.kind() != ErrorKind::CyclicNaturalQuiver)) throw;
            std::string why = std::string("not applicable: ") + std::string(error_kind_name(e.kind()));
            for (auto g : {"prop4.1", "cor4.2"})
                if (wants(g)) rep.add(g, "GPA Ext-quiver identities", CheckStatus::Skipped, why);
        }
    }
    if (wants("thm6.4")) rep.append(verify_hereditary_isomorphism(an));
    if (wants("prop3.1")) rep.append(gpa_quotient_checks(an));
    return rep;
}

ReportSummary summarize(const RelationReport& r) {
    ReportSummary s;
    for (auto& c : r.checks) {
        if (c.status == CheckStatus::Pass) ++s.pass;
        else if (c.status == CheckStatus::Fail) ++s.fail;
        else ++s.skipped;
    }
    return s;
}

std::string format_report_text(const RelationReport& r) {
    std::ostringstream out;
    for (auto& c : r.checks) {
        out << "[" << check_status_name(c.status) << "] " << c.group << ": " << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    auto s = summarize(r);
    out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
    return out.str();
}

}  // namespace natq

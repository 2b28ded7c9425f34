#include "grassclique/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "grassclique/textio.hpp"

namespace grassclique {

Json count_report(int q, int n, int k) {
    return Json{{"n", n},
                {"k", k},
                {"q", q},
                {"grassmannian", gaussian_binomial(n, k, q)},
                {"star_size", q_bracket(n - k + 1, q)},
                {"top_size", q_bracket(k + 1, q)}};
}

namespace {

Json profile_json(const ColumnProfile& prof) {
    Json classes = Json::array();
    for (const auto& cls : prof.classes) {
        Json rep = Json::array();
        for (std::uint8_t v : cls.rep) rep.push_back(int(v));
        classes.push_back(Json{{"rep", std::move(rep)}, {"l", cls.size}});
    }
    return Json{{"c", prof.zero_count},
                {"classes", std::move(classes)},
                {"lS", prof.class_count()},
                {"L_size", prof.big_l_count()}};
}

}  // namespace

Json star_report_json(int q, const StarReport& report) {
    Json members = Json::array();
    for (const Subspace& m : report.members) members.push_back(format_subspace(m));
    Json extensions = Json::array();
    for (const auto& w : report.extensions) extensions.push_back(format_vector(w));

    Json classification{{"kind", to_string(report.theorem_class.kind)},
                        {"equals_top", report.theorem_class.equals_top}};
    classification["top_witness"] = report.theorem_class.top_witness
                                        ? Json(format_subspace(*report.theorem_class.top_witness))
                                        : Json(nullptr);

    Json oracle;
    oracle["maximal"] = report.oracle_maximal ? Json(*report.oracle_maximal) : Json(nullptr);
    oracle["witness"] =
        report.oracle_witness ? Json(format_subspace(*report.oracle_witness)) : Json(nullptr);

    return Json{{"q", q},
                {"n", report.s.ambient_dim()},
                {"k", report.s.dim() + 1},
                {"s", format_subspace(report.s)},
                {"profile", profile_json(report.profile)},
                {"predicted_size", report.predicted_size},
                {"actual_size", report.members.size()},
                {"members", std::move(members)},
                {"extensions", std::move(extensions)},
                {"w_dim", report.w_dim},
                {"classification", std::move(classification)},
                {"oracle", std::move(oracle)},
                {"agree", report.agree()}};
}

namespace {

Json census_row_json(const CensusRow& row) {
    Json out{{"s", format_subspace(row.s)},
             {"c", row.c},
             {"class_sizes", row.class_sizes},
             {"L_size", row.big_l},
             {"predicted", row.predicted},
             {"actual", row.actual},
             {"w_dim", row.w_dim},
             {"kind", to_string(row.kind)},
             {"equals_top", row.equals_top}};
    out["oracle_maximal"] = row.oracle_maximal ? Json(*row.oracle_maximal) : Json(nullptr);
    out["agree"] = row.agree;
    return out;
}

}  // namespace

Json census_json(const CensusResult& result) {
    Json rows = Json::array();
    for (const CensusRow& row : result.rows) rows.push_back(census_row_json(row));
    return Json{{"params", Json{{"q", result.q}, {"n", result.n}, {"k", result.k}}},
                {"rows", std::move(rows)},
                {"summary", Json{{"total", result.summary.total},
                                 {"empty", result.summary.empty},
                                 {"not_maximal", result.summary.not_maximal},
                                 {"star", result.summary.star},
                                 {"mismatches", result.summary.mismatches}}}};
}

std::string census_csv(const CensusResult& result) {
    std::ostringstream out;
    out << "s,c,class_sizes,L_size,predicted,actual,w_dim,kind,equals_top,oracle_maximal,agree\n";
    for (const CensusRow& row : result.rows) {
        out << '"' << format_subspace(row.s) << "\"," << row.c << ',';
        for (std::size_t i = 0; i < row.class_sizes.size(); ++i) {
            if (i) out << '+';
            out << row.class_sizes[i];
        }
        out << ',' << row.big_l << ',' << row.predicted << ',' << row.actual << ','
            << row.w_dim << ',' << to_string(row.kind) << ','
            << (row.equals_top ? "true" : "false") << ',';
        if (row.oracle_maximal) out << (*row.oracle_maximal ? "true" : "false");
        out << ',' << (row.agree ? "true" : "false") << '\n';
    }
    return out.str();
}

Json graph_report_json(int q, int n, int k, const GraphStats& stats) {
    return Json{{"q", q},          {"n", n},
                {"k", k},          {"vertices", stats.vertices},
                {"edges", stats.edges}, {"components", stats.components}};
}

}  // namespace grassclique

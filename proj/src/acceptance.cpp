#include "grassclique/acceptance.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "grassclique/report.hpp"
#include "grassclique/textio.hpp"

namespace grassclique {

namespace {

// Mirror of fixtures/worked_examples.json (kept in sync by a unit test).
constexpr const char* kFixturesJson = R"json({
  "worked_examples": [
    {
      "id": "q4_n4_k2_star_and_top",
      "q": 4,
      "n": 4,
      "k": 2,
      "matrix": "1 1 1 1",
      "expect": {
        "kind": "Star",
        "equals_top": true,
        "predicted": 2,
        "w_dim": 2,
        "members": ["1 1 1 1; 0 1 2 3", "1 1 1 1; 0 1 3 2"],
        "extensions": ["0 1 2 3", "0 1 3 2"],
        "non_projective_in_top": [
          "0 1 2 3; 0 1 3 2",
          "0 1 2 3; 1 0 2 3",
          "1 0 3 2; 0 1 3 2",
          "1 0 3 2; 1 0 2 3"
        ]
      }
    },
    {
      "id": "q4_n5_k3_not_maximal",
      "q": 4,
      "n": 5,
      "k": 3,
      "matrix": "1 0 1 1 1; 0 1 0 0 0",
      "expect": {
        "kind": "NotMaximal",
        "predicted": 2,
        "members": [
          "1 0 1 1 1; 0 1 0 0 0; 0 0 1 2 3",
          "1 0 1 1 1; 0 1 0 0 0; 0 0 1 3 2"
        ],
        "valid_witness": "1 0 1 1 1; 0 1 1 2 3; 0 0 1 3 2"
      }
    },
    {
      "id": "q3_n7_k4_degenerate_star",
      "q": 3,
      "n": 7,
      "k": 4,
      "matrix": "1 0 0 0 0 0 0; 0 1 0 0 1 0 1; 0 0 1 0 0 1 0",
      "expect": {
        "kind": "Star",
        "predicted": 4,
        "w_dim": 3,
        "extensions": [
          "0 0 0 1 1 1 2",
          "0 0 0 1 1 2 2",
          "0 0 0 2 1 1 2",
          "0 0 0 2 1 2 2"
        ]
      }
    },
    {
      "id": "q3_n5_k3_degenerate_not_maximal",
      "q": 3,
      "n": 5,
      "k": 3,
      "matrix": "1 0 0 1 1; 0 1 0 0 0",
      "expect": {
        "kind": "NotMaximal",
        "predicted": 2,
        "members": [
          "1 0 0 1 1; 0 1 0 0 0; 0 0 1 1 2",
          "1 0 0 1 1; 0 1 0 0 0; 0 0 2 1 2"
        ],
        "valid_witness": "1 0 0 1 1; 0 1 1 1 2; 0 0 2 1 2"
      }
    },
    {
      "id": "q2_n6_k3_two_element_star",
      "q": 2,
      "n": 6,
      "k": 3,
      "matrix": "1 0 1 1 0 1; 0 1 1 0 1 1",
      "expect": {
        "kind": "Star",
        "equals_top": true,
        "predicted": 2,
        "w_dim": 2,
        "extensions": ["0 0 0 1 1 1", "0 0 1 1 1 0"]
      }
    }
  ]
}
)json";

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (ok && detail.str().empty()) detail << what;
    }
};

std::vector<std::uint8_t> parse_vector(const std::string& text, const FieldPtr& field) {
    const MatFq m = parse_matrix(text, field);
    return {m.data().begin(), m.data().end()};
}

std::vector<std::uint8_t> normalize_projective(std::vector<std::uint8_t> v, const Field& F) {
    for (std::uint8_t x : v)
        if (x != 0) {
            const std::uint8_t iv = F.inv(x);
            for (auto& y : v) y = F.mul(y, iv);
            break;
        }
    return v;
}

bool same_subspace_set(std::vector<Subspace> a, std::vector<Subspace> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::equal(a.begin(), a.end(), b.begin());
}

bool valid_witness(const Subspace& w, const std::vector<Subspace>& members) {
    if (!is_projective(w)) return false;
    for (const Subspace& m : members) {
        if (w == m) return false;
        if (!adjacent(w, m)) return false;
    }
    return true;
}

// ---- criterion bodies -------------------------------------------------

Check field_axioms() {
    Check c;
    int fields = 0;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldPtr F = Field::make(q);
        ++fields;
        for (int a = 0; a < q; ++a) {
            c.expect(F->add(a, 0) == a, "additive identity");
            c.expect(F->mul(a, 1) == a, "multiplicative identity");
            c.expect(F->add(a, F->neg(a)) == 0, "additive inverse");
            if (a != 0) c.expect(F->mul(a, F->inv(a)) == 1, "multiplicative inverse");
            for (int b = 0; b < q; ++b) {
                c.expect(F->add(a, b) == F->add(b, a), "commutative +");
                c.expect(F->mul(a, b) == F->mul(b, a), "commutative *");
                for (int t = 0; t < q; ++t) {
                    c.expect(F->add(F->add(a, b), t) == F->add(a, F->add(b, t)),
                             "associative +");
                    c.expect(F->mul(F->mul(a, b), t) == F->mul(a, F->mul(b, t)),
                             "associative *");
                    c.expect(F->mul(a, F->add(b, t)) == F->add(F->mul(a, b), F->mul(a, t)),
                             "distributive");
                }
            }
        }
    }
    c.note(std::to_string(fields) + " fields checked exhaustively");
    return c;
}

Check counting_oracle() {
    Check c;
    const std::vector<std::tuple<int, int, int, std::uint64_t>> cases = {
        {2, 5, 2, 155}, {2, 6, 3, 1395}, {3, 4, 2, 130}, {3, 5, 3, 1210}, {4, 4, 2, 357}};
    for (const auto& [q, n, k, frozen] : cases) {
        // independent oracle: the product formula, evaluated directly
        unsigned __int128 expect = 1;
        for (int i = 0; i < k; ++i) {
            unsigned __int128 num = 1, den = 1;
            for (int t = 0; t < n - i; ++t) num *= q;
            for (int t = 0; t < i + 1; ++t) den *= q;
            expect = expect * (num - 1) / (den - 1);
        }
        c.expect(expect == frozen, "product formula disagrees with frozen value");
        GrassmannStream stream(Field::make(q), n, k);
        std::uint64_t count = 0;
        while (stream.next()) ++count;
        c.expect(count == frozen, "enumeration count mismatch at q=" + std::to_string(q) +
                                      " n=" + std::to_string(n) + " k=" + std::to_string(k));
        c.expect(gaussian_binomial(n, k, q) == frozen, "gaussian_binomial mismatch");
    }
    c.note("5 parameter sets");
    return c;
}

Check cardinality_sweep() {
    Check c;
    std::uint64_t instances = 0;
    for (const auto& [q, n, k] : std::vector<std::tuple<int, int, int>>{
             {2, 6, 3}, {3, 5, 3}, {4, 4, 2}}) {
        GrassmannStream stream(Field::make(q), n, k - 1);
        while (auto s = stream.next()) {
            const ColumnProfile prof = column_profile(*s);
            if (prof.zero_count != 0 || prof.max_class_size() <= 1) continue;
            ++instances;
            if (predicted_star_size(*s) != star_pi(*s).size()) {
                c.expect(false, "size mismatch at S = " + format_subspace(*s));
                return c;
            }
        }
    }
    c.note(std::to_string(instances) + " non-degenerate non-projective codes, exact match");
    return c;
}

Check cardinality2_sweep() {
    Check c;
    std::uint64_t instances = 0;
    for (const auto& [q, n, k] :
         std::vector<std::tuple<int, int, int>>{{2, 6, 3}, {3, 5, 3}}) {
        GrassmannStream stream(Field::make(q), n, k - 1);
        while (auto s = stream.next()) {
            if (column_profile(*s).zero_count != 1) continue;
            ++instances;
            if (predicted_star_size(*s) != star_pi(*s).size()) {
                c.expect(false, "size mismatch at S = " + format_subspace(*s));
                return c;
            }
        }
    }
    const FieldPtr f3 = Field::make(3);
    const Subspace s = rowspace(
        parse_matrix("1 0 0 0 0 0 0; 0 1 0 0 1 0 1; 0 0 1 0 0 1 0", f3));
    c.expect(predicted_star_size(s) == 4, "single-zero-column worked example must predict 4");
    c.expect(star_pi(s).size() == 4, "single-zero-column worked example must have 4 codes");
    c.note(std::to_string(instances) + " single-zero-column codes, exact match");
    return c;
}

struct CensusSet {
    std::map<std::string, CensusResult> results;
};

Check census_sweep(CensusSet& out, int jobs) {
    Check c;
    for (const auto& [q, n, k] : std::vector<std::tuple<int, int, int>>{
             {2, 5, 3}, {2, 6, 3}, {3, 5, 3}, {4, 4, 2}}) {
        GrassmannParams params{Field::make(q), n, k};
        CensusOptions opt;
        opt.jobs = jobs;
        CensusResult res = census(params, opt);
        c.expect(res.summary.mismatches == 0,
                 "census mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
        const std::string key =
            std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(k);
        out.results.emplace(key, std::move(res));
    }
    std::uint64_t rows = 0;
    for (const auto& [key, res] : out.results) rows += res.summary.total;
    c.note(std::to_string(rows) + " codes classified, theorem agrees with oracle");
    return c;
}

Check goldens() {
    Check c;
    const nlohmann::json fixtures = nlohmann::json::parse(kFixturesJson);
    for (const auto& fx : fixtures.at("worked_examples")) {
        const std::string id = fx.at("id");
        const FieldPtr F = Field::make(fx.at("q").get<int>());
        const Subspace s = rowspace(parse_matrix(fx.at("matrix").get<std::string>(), F));
        const auto& expect = fx.at("expect");
        const StarReport rep = analyze_star(s);

        c.expect(to_string(rep.theorem_class.kind) == expect.at("kind").get<std::string>(),
                 id + ": kind");
        c.expect(rep.predicted_size == expect.at("predicted").get<std::uint64_t>(),
                 id + ": predicted size");
        c.expect(rep.formula_ok(), id + ": formula vs enumeration");
        c.expect(rep.agree(), id + ": theorem vs oracle");

        if (expect.contains("w_dim"))
            c.expect(rep.w_dim == expect.at("w_dim").get<int>(), id + ": w_dim");
        if (expect.contains("equals_top"))
            c.expect(rep.theorem_class.equals_top == expect.at("equals_top").get<bool>(),
                     id + ": equals_top");

        if (expect.contains("members")) {
            std::vector<Subspace> want;
            for (const auto& text : expect.at("members"))
                want.push_back(rowspace(parse_matrix(text.get<std::string>(), F)));
            c.expect(same_subspace_set(rep.members, want), id + ": member set");
        }
        if (expect.contains("extensions")) {
            std::vector<std::vector<std::uint8_t>> got = rep.extensions;
            std::vector<std::vector<std::uint8_t>> want;
            for (const auto& text : expect.at("extensions"))
                want.push_back(
                    normalize_projective(parse_vector(text.get<std::string>(), F), *F));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            c.expect(got == want, id + ": extension vectors");
        }
        if (expect.contains("non_projective_in_top")) {
            for (const auto& text : expect.at("non_projective_in_top")) {
                const Subspace q2 = rowspace(parse_matrix(text.get<std::string>(), F));
                c.expect(!is_projective(q2), id + ": listed code must be non-projective");
                c.expect(rep.theorem_class.top_witness &&
                             contains(*rep.theorem_class.top_witness, q2),
                         id + ": listed code must lie in the witness top");
            }
        }
        if (expect.contains("valid_witness")) {
            c.expect(rep.oracle_maximal.has_value() && !*rep.oracle_maximal,
                     id + ": oracle must find an extension");
            c.expect(rep.oracle_witness && valid_witness(*rep.oracle_witness, rep.members),
                     id + ": scan witness must extend the clique");
            const Subspace listed =
                rowspace(parse_matrix(expect.at("valid_witness").get<std::string>(), F));
            c.expect(valid_witness(listed, rep.members),
                     id + ": listed witness must extend the clique");
        }
        if (rep.theorem_class.equals_top) {
            c.expect(rep.theorem_class.top_witness.has_value(), id + ": witness top present");
            if (rep.theorem_class.top_witness)
                c.expect(same_subspace_set(top_pi(*rep.theorem_class.top_witness), rep.members),
                         id + ": star must equal the witness top");
        }
    }
    c.note("5 worked examples");
    return c;
}

Check w_laws(const CensusSet& censuses) {
    Check c;
    std::uint64_t checked = 0;
    for (const auto& [key, res] : censuses.results) {
        for (const CensusRow& row : res.rows) {
            if (row.actual == 0) continue;
            ++checked;
            if (row.w_dim == 1)
                c.expect(row.kind == StarKind::NotMaximal &&
                             row.oracle_maximal && !*row.oracle_maximal,
                         "w_dim=1 must be non-maximal at S = " + format_subspace(row.s));
            if (row.w_dim > 2)
                c.expect(row.kind == StarKind::Star && row.oracle_maximal &&
                             *row.oracle_maximal,
                         "w_dim>2 must be a star at S = " + format_subspace(row.s));
            if (row.kind == StarKind::Star && row.w_dim == 2) {
                const Classification cls = classify_star(row.s);
                c.expect(cls.equals_top && cls.top_witness.has_value(),
                         "star with planar W must equal a top at S = " + format_subspace(row.s));
                if (cls.top_witness)
                    c.expect(same_subspace_set(star_pi(row.s), top_pi(*cls.top_witness)),
                             "star/top set mismatch at S = " + format_subspace(row.s));
            }
            if (!c.ok) return c;
        }
    }
    c.note(std::to_string(checked) + " nonempty stars cross-checked");
    return c;
}

Check derived_size_law(const CensusSet& censuses) {
    Check c;
    std::uint64_t instances = 0;
    for (const std::string key : {"2,6,3", "3,5,3"}) {
        const CensusResult& res = censuses.results.at(key);
        for (const CensusRow& row : res.rows) {
            if (row.c != 1) continue;
            const bool punctured_projective =
                std::all_of(row.class_sizes.begin(), row.class_sizes.end(),
                            [](int l) { return l == 1; });
            if (!punctured_projective) continue;
            ++instances;
            std::uint64_t want = 1;
            for (int i = 0; i < res.n - res.k; ++i) want *= res.q;
            c.expect(row.actual == want,
                     "expected q^(n-k) codes at S = " + format_subspace(row.s));
        }
    }
    c.expect(instances > 0, "sweeps must contain at least one qualifying code");
    c.note(std::to_string(instances) + " qualifying codes");
    return c;
}

Check connectivity_smoke() {
    Check c;
    GrassmannParams params{Field::make(7), 4, 2};
    const std::uint64_t components = component_count(params);
    c.expect(components == 1, "expected a connected graph, got " +
                                  std::to_string(components) + " components");
    c.note("q=7 n=4 k=2 connected");
    return c;
}

Check determinism(const CensusSet& censuses, int jobs_first) {
    Check c;
    GrassmannParams params{Field::make(2), 6, 3};
    CensusOptions opt;
    opt.jobs = (jobs_first == 3) ? 1 : 3;
    const CensusResult rerun = census(params, opt);
    const CensusResult& base = censuses.results.at("2,6,3");
    c.expect(census_json(base).dump(2) == census_json(rerun).dump(2),
             "JSON output differs across job counts");
    c.expect(census_csv(base) == census_csv(rerun), "CSV output differs across job counts");
    c.note("byte-identical across job counts");
    return c;
}

}  // namespace

const char* embedded_fixtures_json() { return kFixturesJson; }

std::vector<CriterionResult> run_acceptance(std::ostream& out, int jobs) {
    if (jobs <= 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        jobs = hc ? static_cast<int>(hc) : 1;
    }

    CensusSet censuses;
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"field-axioms", field_axioms},
        {"counting-oracle", counting_oracle},
        {"cardinality-formula", cardinality_sweep},
        {"cardinality-formula-degenerate", cardinality2_sweep},
        {"theorem-vs-oracle-census", [&] { return census_sweep(censuses, jobs); }},
        {"worked-example-goldens", goldens},
        {"w-span-laws", [&] { return w_laws(censuses); }},
        {"derived-size-law", [&] { return derived_size_law(censuses); }},
        {"connectivity-smoke", connectivity_smoke},
        {"census-determinism", [&] { return determinism(censuses, jobs); }},
    };

    // wall-clock budgets (seconds) where a criterion carries one
    const std::map<int, double> budgets = {{1, 5.0}, {2, 30.0}, {3, 600.0}, {5, 3600.0}, {9, 60.0}};

    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult res;
        res.id = static_cast<int>(i) + 1;
        res.name = criteria[i].first;
        const auto t0 = Clock::now();
        try {
            Check c = criteria[i].second();
            res.passed = c.ok;
            res.detail = c.detail.str();
        } catch (const std::exception& ex) {
            res.passed = false;
            res.detail = std::string("exception: ") + ex.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (const auto budget = budgets.find(res.id);
            budget != budgets.end() && res.seconds > budget->second) {
            res.passed = false;
            res.detail += (res.detail.empty() ? "" : "; ") + std::string("over time budget");
        }

        std::ostringstream line;
        line << (res.passed ? "[PASS] " : "[FAIL] ") << res.id << ". " << res.name;
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.2f s)", res.seconds);
        line << buf;
        if (!res.detail.empty()) line << " — " << res.detail;
        out << line.str() << "\n";
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace grassclique

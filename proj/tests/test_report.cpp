#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "grassclique/report.hpp"
#include "grassclique/textio.hpp"

using namespace grassclique;

TEST_CASE("count report fields") {
    const Json j = count_report(2, 6, 3);
    CHECK(j.at("n") == 6);
    CHECK(j.at("k") == 3);
    CHECK(j.at("q") == 2);
    CHECK(j.at("grassmannian") == 1395);
    CHECK(j.at("star_size") == 15);
    CHECK(j.at("top_size") == 15);
}

TEST_CASE("star report serialization") {
    const FieldPtr f4 = Field::make(4);
    const StarReport rep = analyze_star(rowspace(parse_matrix("1 1 1 1", f4)));
    const Json j = star_report_json(4, rep);
    CHECK(j.at("classification").at("kind") == "Star");
    CHECK(j.at("classification").at("equals_top") == true);
    CHECK(j.at("profile").at("c") == 0);
    CHECK(j.at("profile").at("lS") == 1);
    CHECK(j.at("profile").at("L_size") == 1);
    CHECK(j.at("profile").at("classes").size() == 1);
    CHECK(j.at("profile").at("classes").at(0).at("l") == 4);
    CHECK(j.at("predicted_size") == 2);
    CHECK(j.at("actual_size") == 2);
    CHECK(j.at("members").size() == 2);
    CHECK(j.at("extensions").at(0) == "0 1 2 3");
    CHECK(j.at("oracle").at("maximal") == true);
    CHECK(j.at("oracle").at("witness").is_null());
    CHECK(j.at("agree") == true);
}

TEST_CASE("census serialization") {
    GrassmannParams params{Field::make(3), 4, 2};
    const CensusResult res = census(params);
    const Json j = census_json(res);
    CHECK(j.at("params").at("q") == 3);
    CHECK(j.at("rows").size() == 40);
    CHECK(j.at("summary").at("total") == 40);
    CHECK(j.at("summary").at("mismatches") == 0);
    CHECK_FALSE(j.at("summary").contains("wall_seconds"));

    const std::string csv = census_csv(res);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "s,c,class_sizes,L_size,predicted,actual,w_dim,kind,equals_top,oracle_maximal,agree");
    std::size_t count = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 40);
    // empty stars have no oracle verdict: ",," between equals_top and agree
    CHECK(csv.find(",Empty,false,,true") != std::string::npos);
}

TEST_CASE("graph report fields") {
    const GraphStats stats = graph_stats({Field::make(2), 5, 3});
    const Json j = graph_report_json(2, 5, 3, stats);
    CHECK(j.at("vertices") == 15);
    CHECK(j.at("edges") == 45);
    CHECK(j.at("components") == 1);
}

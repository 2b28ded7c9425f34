#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "grassclique/starlab.hpp"

namespace grassclique {

using Json = nlohmann::ordered_json;

Json count_report(int q, int n, int k);
Json star_report_json(int q, const StarReport& report);
Json census_json(const CensusResult& result);
Json graph_report_json(int q, int n, int k, const GraphStats& stats);

/// Fixed columns, documented in the README:
/// s,c,class_sizes,L_size,predicted,actual,w_dim,kind,equals_top,oracle_maximal,agree
std::string census_csv(const CensusResult& result);

}  // namespace grassclique

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "carc/arc_model.hpp"
#include "carc/catalog.hpp"
#include "carc/graph.hpp"
#include "carc/gtc.hpp"
#include "carc/r_circular.hpp"
#include "carc/recognition.hpp"

namespace carc {

using json = nlohmann::ordered_json;

RPartiteGraph parse_graph(std::string_view text);
RPartiteGraph graph_from_json(const json& doc);
json to_json(const RPartiteGraph& g);
std::string serialize_graph(const RPartiteGraph& g);

ArcModel model_from_json(const json& doc);
json to_json(const ArcModel& m);

json to_json(const ViolationWitness& w, const std::string& pattern_id);
json to_json(const PatternConfig& c);
json to_json(const Decision& d);
json to_json(const HarnessReport& r);

// "i: anchor=s reached=[...] terminal=m"
std::string format_scan(const ScanResult& s);

// Comma-separated permutation, e.g. "1,2,3". Ranges "a..b" expand inclusively.
CircularOrdering parse_ordering(std::string_view text);

} // namespace carc

#pragma once

#include <string>

#include "carc/arc_model.hpp"
#include "carc/graph.hpp"

namespace carc {

// Clock with hour markers and one concentric band per arc, coloured by part.
std::string render_svg(const RPartiteGraph& g, const ArcModel& m);

} // namespace carc

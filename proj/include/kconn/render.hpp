#pragma once

#include <string>

#include "kconn/comm_graph.hpp"
#include "kconn/relocation.hpp"

namespace kconn {

// Deterministic SVG scene: robots as circles, communication edges as lines,
// and, when a plan is given, dashed gray displacement arrows plus the final
// topology. 2D instances only; throws RenderUnsupported for dim == 3.
std::string render_svg(const Instance& instance, const CommGraph& graph,
                       const RestorationPlan* plan = nullptr);

}  // namespace kconn

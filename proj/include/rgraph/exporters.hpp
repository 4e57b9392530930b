#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rgraph/gordian.hpp"
#include "rgraph/graph.hpp"

namespace rgraph {

// All exporters emit nodes and edges in index order, so output is
// byte-identical across runs.

std::string to_dot(const Ball& b);
std::string to_dot(const GordianBall& b);  // crossing-change edges dashed

std::string to_graphml(const Ball& b);
std::string to_graphml(const GordianBall& b);

nlohmann::ordered_json ball_json(const Ball& b);
nlohmann::ordered_json ball_json(const GordianBall& b);

}  // namespace rgraph

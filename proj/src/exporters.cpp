#include "rgraph/exporters.hpp"

namespace rgraph {

std::string to_dot(const Ball& b) {
  (void)b;
  throw unsupported_operation("to_dot: not implemented");
}

std::string to_dot(const GordianBall& b) {
  (void)b;
  throw unsupported_operation("to_dot: not implemented");
}

std::string to_graphml(const Ball& b) {
  (void)b;
  throw unsupported_operation("to_graphml: not implemented");
}

std::string to_graphml(const GordianBall& b) {
  (void)b;
  throw unsupported_operation("to_graphml: not implemented");
}

nlohmann::ordered_json ball_json(const Ball& b) {
  (void)b;
  throw unsupported_operation("ball_json: not implemented");
}

nlohmann::ordered_json ball_json(const GordianBall& b) {
  (void)b;
  throw unsupported_operation("ball_json: not implemented");
}

}  // namespace rgraph

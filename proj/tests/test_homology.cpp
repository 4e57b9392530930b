#include "doctest.h"
#include "rgraph/homology.hpp"

using namespace rgraph;

TEST_CASE("homology module placeholder") {
  // Real coverage lands with the implementation.
  CHECK(true);
}

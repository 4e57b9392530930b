#include <cstdio>

#include "CLI11.hpp"
#include "rgraph/diagram.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Reidemeister graph toolkit"};
  app.require_subcommand(0, 1);
  CLI11_PARSE(app, argc, argv);
  std::puts("rgraph: subcommands land with the cli module");
  return 0;
}

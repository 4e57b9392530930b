#include <cstdio>

int main() {
  std::puts("bench_ball: lands with the rgraph module");
  return 0;
}

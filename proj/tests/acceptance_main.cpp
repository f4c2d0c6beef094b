#include <cstdio>

#include "mono/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : mono::acceptance::run_primary_suite()) {
    std::puts(mono::acceptance::format_line(r).c_str());
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "golden_runner.hpp"

using namespace omega::testing;

TEST_CASE("golden transcripts") {
  const auto cases = load_golden_dir(OMEGA_GOLDEN_DIR);
  CHECK(cases.size() == 30);
  const bool update = std::getenv("OMEGA_UPDATE_GOLDEN") != nullptr;
  for (const auto& g : cases) {
    const auto first = transcript(g);
    const auto second = transcript(g);
    CHECK_MESSAGE(first == second, g.path.filename().string() << " is not deterministic");
    if (update) {
      write_golden(g, first);
      continue;
    }
    CHECK_MESSAGE(first == g.expected, g.path.filename().string() << "\n" << first);
  }
}

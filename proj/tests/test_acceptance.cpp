#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "mirrorext/acceptance.hpp"

TEST_CASE("reproduction suite: every criterion passes") {
    auto results = mirrorext::run_acceptance(128);
    REQUIRE(results.size() == 9);
    for (const auto& r : results) {
        std::printf("%s  criterion %d: %s  (%.2f s)%s%s\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : "  -- ", r.detail.c_str());
        std::fflush(stdout);
        INFO("criterion ", r.id, ": ", r.name, " -- ", r.detail);
        CHECK(r.pass);
    }
}

#include <doctest.h>

#include "cbperm/errors.hpp"
#include "cbperm/verify.hpp"

using namespace cbperm;

TEST_CASE("verify suites pass at small sizes") {
  for (const auto& name : suite_names()) {
    INFO(name);
    const auto results = run_suite(name, VerifyParams{6, 8});
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      INFO(r.name, " expected=", r.expected, " actual=", r.actual);
      CHECK(r.pass);
    }
  }
  CHECK(run_suite("all", VerifyParams{4, 4}).size() > 10);
  CHECK_THROWS_AS(run_suite("nope", {}), InvalidInput);
}

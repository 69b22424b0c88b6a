#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "swcx/acceptance.hpp"

using namespace swcx;

TEST_CASE("randomized property suites pass and are deterministic") {
    std::vector<PropertySuiteResult> a = run_property_suites(1);
    REQUIRE(a.size() == 6);
    std::vector<std::string> names = {"field-axioms",
                                      "swc-zero-count",
                                      "coset-dichotomy",
                                      "orbit-join",
                                      "swc-monomial-invariance",
                                      "coordinate-matrix-representative"};
    for (size_t i = 0; i < a.size(); ++i) {
        CAPTURE(a[i].name);
        CHECK(a[i].name == names[i]);
        CHECK(a[i].failures == 0);
        CHECK((a[i].exhaustive || a[i].cases >= 1000));
    }

    std::vector<PropertySuiteResult> b = run_property_suites(1);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].cases == b[i].cases);
        CHECK(a[i].failures == b[i].failures);
    }

    for (const PropertySuiteResult& r : run_property_suites(42)) {
        CAPTURE(r.name);
        CHECK(r.failures == 0);
    }
}

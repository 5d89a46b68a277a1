#include <doctest.h>

#include "properties.hpp"

TEST_SUITE("properties") {

TEST_CASE("randomized laws") {
    for (const auto& p : props::all_properties()) {
        const auto o = p.run(20241015, 150);
        INFO(p.name, ": ", o.first_failure);
        CHECK(o.cases >= 100);
        CHECK(o.failures == 0);
    }
}

}

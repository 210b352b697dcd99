#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "gomcol/errors.hpp"
#include "gomcol/oracle.hpp"

using namespace gomcol;

TEST_CASE("IntegerBox range and volume") {
    IntegerBox box{{0, -2}, {3, 2}};
    CHECK_FALSE(box.empty_range());
    CHECK(box.volume() == 20);

    IntegerBox point{{5}, {5}};
    CHECK(point.volume() == 1);

    // A crossed range means no integer value fits that coordinate.
    IntegerBox crossed{{1}, {0}};
    CHECK(crossed.empty_range());
    CHECK(crossed.volume() == 0);

    IntegerBox none{{}, {}};
    CHECK(none.empty_range());
}

TEST_CASE("bounding_box rounds the continuous bounds inward") {
    BoxResult r = bounding_box(example3());
    CHECK(r.status == BoxResult::Status::ok);
    // Continuous bounds are [15, 57/2] x [-37/2, -5].
    CHECK(r.box.lower == ZVec{15, -18});
    CHECK(r.box.upper == ZVec{28, -5});
    CHECK(r.box.volume() == 196);

    // y pinned to 1/2 exactly: the rounded range crosses.
    DualFormInstance half = make_instance(1, {{2}, {-2}}, {1}, {1, -1}, "");
    BoxResult rh = bounding_box(half);
    CHECK(rh.status == BoxResult::Status::ok);
    CHECK(rh.box.lower == ZVec{1});
    CHECK(rh.box.upper == ZVec{0});
    CHECK(rh.box.empty_range());
}

TEST_CASE("bounding_box reports unbounded and empty relaxations") {
    DualFormInstance open = make_instance(1, {{1}}, {1}, {0}, "");
    BoxResult r = bounding_box(open);
    CHECK(r.status == BoxResult::Status::unbounded);
    CHECK(r.coordinate == 0);
    CHECK(r.direction == -1);

    DualFormInstance empty = make_instance(1, {{1}, {-1}}, {1}, {0, -1}, "");
    CHECK(bounding_box(empty).status == BoxResult::Status::empty);
}

TEST_CASE("brute force agrees with the worked example") {
    DualFormInstance inst = example3();
    BoxResult r = bounding_box(inst);
    REQUIRE(r.status == BoxResult::Status::ok);
    BruteForceResult bf = brute_force_optimum(inst, r.box);
    CHECK(bf.feasible);
    CHECK(bf.z_star == 460);
    REQUIRE(bf.argmax.size() == 1);
    CHECK(bf.argmax[0] == ZVec{25, -10});
}

TEST_CASE("brute force reports infeasibility over a crossed box") {
    DualFormInstance half = make_instance(1, {{2}, {-2}}, {1}, {1, -1}, "");
    BruteForceResult bf = brute_force_optimum(half, IntegerBox{{1}, {0}});
    CHECK_FALSE(bf.feasible);
    CHECK(bf.argmax.empty());

    // A nonempty box can still contain no feasible point.
    BruteForceResult bf2 = brute_force_optimum(half, IntegerBox{{-5}, {5}});
    CHECK_FALSE(bf2.feasible);
}

TEST_CASE("brute force enumerates maximizers in ascending lex order") {
    // b = 0 makes every feasible point optimal with value 0.
    DualFormInstance inst = make_instance(
        2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {0, 0}, {2, 2, 2, 2}, "");
    IntegerBox box{{-2, -2}, {2, 2}};
    BruteForceResult bf = brute_force_optimum(inst, box);
    CHECK(bf.feasible);
    CHECK(bf.z_star == 0);
    REQUIRE(bf.argmax.size() == 25);
    CHECK(bf.argmax.front() == ZVec{-2, -2});
    CHECK(bf.argmax.back() == ZVec{2, 2});
    CHECK(std::is_sorted(bf.argmax.begin(), bf.argmax.end()));
}

TEST_CASE("brute force enforces the volume cap") {
    DualFormInstance inst = make_instance(1, {{1}, {-1}}, {1}, {5, 5}, "");
    CHECK_THROWS_AS(
        brute_force_optimum(inst, IntegerBox{{-5}, {5}}, Integer(10)),
        TooLargeError);
    // At the cap exactly, the walk runs.
    BruteForceResult bf =
        brute_force_optimum(inst, IntegerBox{{-5}, {5}}, Integer(11));
    CHECK(bf.feasible);
    CHECK(bf.z_star == 5);
    CHECK(bf.argmax == std::vector<ZVec>{{5}});
}

TEST_CASE("brute force validates the box dimension") {
    DualFormInstance inst = example3();
    CHECK_THROWS_AS(brute_force_optimum(inst, IntegerBox{{0}, {1}}),
                    UsageError);
}

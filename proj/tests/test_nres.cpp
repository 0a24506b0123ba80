#include <doctest.h>

#include <stdexcept>

#include "neorl/errors.hpp"
#include "neorl/nres.hpp"
#include "neorl/rng.hpp"

using namespace neorl;

TEST_SUITE("nres") {

const Rect kUnit{{0.0, 0.0}, {1.0, 1.0}};

TEST_CASE("construction and cell counts") {
    CHECK(NresGrid(3, kUnit).cell_count() == 9);
    CHECK(NresGrid(1, kUnit).cell_count() == 1);
    CHECK_THROWS_AS(NresGrid(0, kUnit), ConfigError);
    CHECK_THROWS_AS(NresGrid(3, Rect{{1.0, 0.0}, {0.0, 1.0}}), ConfigError);
}

TEST_CASE("cell_of addresses the expected cells") {
    const NresGrid grid(3, kUnit);
    CHECK(grid.cell_of({0.5, 0.5}) == 4);
    CHECK(grid.cell_of({0.0, 0.0}) == 0);
    // Exact upper boundary belongs to the last cell.
    CHECK(grid.cell_of({1.0, 1.0}) == 8);
    // Out-of-bounds coordinates clamp.
    CHECK(grid.cell_of({-5.0, -5.0}) == 0);
    CHECK(grid.cell_of({2.0, 0.1}) == 2);
}

TEST_CASE("cell_center round trip") {
    CHECK(NresGrid(1, kUnit).cell_center(0) == Vec2{0.5, 0.5});
    CHECK(NresGrid(3, kUnit).cell_center(4) == Vec2{0.5, 0.5});
    CHECK_THROWS_AS(NresGrid(3, kUnit).cell_center(9), std::out_of_range);

    for (const int n : {1, 3, 7, 23}) {
        const NresGrid grid(n, kUnit);
        for (CellIndex c = 0; c < static_cast<CellIndex>(grid.cell_count()); ++c) {
            CHECK(grid.cell_of(grid.cell_center(c)) == c);
        }
    }
}

TEST_CASE("cells partition the bounds") {
    const NresGrid grid(7, kUnit);
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const Vec2 p{uniform_double(rng), uniform_double(rng)};
        const CellIndex c = grid.cell_of(p);
        // Claimed cell really contains the point under the half-open rule.
        const int row = static_cast<int>(c) / 7;
        const int col = static_cast<int>(c) % 7;
        const double w = 1.0 / 7;
        CHECK(p.x >= col * w);
        CHECK(p.y >= row * w);
        if (col < 6) CHECK(p.x < (col + 1) * w);
        if (row < 6) CHECK(p.y < (row + 1) * w);
    }
}

TEST_CASE("compatibility is shared bounds") {
    const NresGrid a(7, kUnit);
    const NresGrid b(23, kUnit);
    const NresGrid c(7, Rect{{0.0, 0.0}, {2.0, 1.0}});
    CHECK(compatible(a, b));
    CHECK(compatible(b, a));
    CHECK(compatible(a, a));
    CHECK_FALSE(compatible(a, c));
}

}  // TEST_SUITE

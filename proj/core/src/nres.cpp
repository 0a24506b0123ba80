#include "neorl/nres.hpp"

#include <stdexcept>
#include <string>

#include "neorl/errors.hpp"

namespace neorl {

NresGrid::NresGrid(int resolution, Rect bounds)
    : resolution_(resolution), bounds_(bounds) {
    if (resolution < 1) {
        throw ConfigError("resolution: must be >= 1, got " + std::to_string(resolution));
    }
    if (!bounds.valid()) {
        throw ConfigError("bounds: must have positive width and height");
    }
}

CellIndex NresGrid::cell_of(Vec2 coord) const {
    const Vec2 c = clamp(coord, bounds_);
    const int n = resolution_;
    int col = static_cast<int>((c.x - bounds_.lo.x) / bounds_.width() * n);
    int row = static_cast<int>((c.y - bounds_.lo.y) / bounds_.height() * n);
    if (col >= n) col = n - 1;
    if (row >= n) row = n - 1;
    return static_cast<CellIndex>(row * n + col);
}

Vec2 NresGrid::cell_center(CellIndex cell) const {
    if (cell >= static_cast<CellIndex>(cell_count())) {
        throw std::out_of_range("cell_center: index " + std::to_string(cell) +
                                " out of range for " + std::to_string(cell_count()) + " cells");
    }
    const int n = resolution_;
    const int row = static_cast<int>(cell) / n;
    const int col = static_cast<int>(cell) % n;
    const double cw = bounds_.width() / n;
    const double ch = bounds_.height() / n;
    return {bounds_.lo.x + (col + 0.5) * cw, bounds_.lo.y + (row + 0.5) * ch};
}

}  // namespace neorl

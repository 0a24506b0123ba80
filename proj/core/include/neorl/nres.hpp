#pragma once

#include <cstdint>

#include "neorl/geometry.hpp"

namespace neorl {

using CellIndex = std::uint32_t;

// An N x N partition of a rectangle into mutually exclusive receptive-field
// cells, row-major from the lower-left corner: index = row * N + col, with
// rows along y and columns along x. Immutable after construction.
class NresGrid {
public:
    NresGrid(int resolution, Rect bounds);

    int resolution() const { return resolution_; }
    const Rect& bounds() const { return bounds_; }
    int cell_count() const { return resolution_ * resolution_; }

    // Total over the whole plane: out-of-bounds coordinates clamp to the
    // bounds first, so desire coordinates pointing outside the arena still
    // address a cell. Cells are half-open per axis; the exact upper boundary
    // maps to the last cell.
    CellIndex cell_of(Vec2 coord) const;

    // Geometric center of the cell rectangle. Throws std::out_of_range for
    // cell >= N^2.
    Vec2 cell_center(CellIndex cell) const;

    friend bool operator==(const NresGrid&, const NresGrid&) = default;

private:
    int resolution_;
    Rect bounds_;
};

// Two grids can exchange elements iff they cover the same Euclidean space;
// resolutions may differ.
inline bool compatible(const NresGrid& a, const NresGrid& b) {
    return a.bounds() == b.bounds();
}

}  // namespace neorl

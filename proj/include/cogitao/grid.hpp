#pragma once

// Grid representation and the placement-legality rules. Initial placement
// forbids overlap, touch (8-neighborhood, so diagonal contact counts) and
// containment; after a transformation only overlap is forbidden.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogitao/error.hpp"
#include "cogitao/object.hpp"

namespace cogitao {

constexpr int kMaxGridDim = 30;  // all benchmark configs use at most 20x20

class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 1 || rows > kMaxGridDim || cols > kMaxGridDim)
            raise(ErrorCode::DimensionOutOfRange,
                  "grid dims must be in [1," + std::to_string(kMaxGridDim) + "], got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Color at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, Color v) { cells_[static_cast<size_t>(r) * cols_ + c] = v; }
    bool in_bounds(int r, int c) const { return r >= 0 && c >= 0 && r < rows_ && c < cols_; }

    const std::vector<Color>& cells() const { return cells_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

    // Row-major byte string prefixed with the dims; dedup-ledger component.
    std::string key() const {
        std::string k;
        k.reserve(cells_.size() + 2);
        k.push_back(static_cast<char>(rows_));
        k.push_back(static_cast<char>(cols_));
        k.append(reinterpret_cast<const char*>(cells_.data()), cells_.size());
        return k;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Color> cells_;
};

inline Grid new_grid(int rows, int cols) { return Grid(rows, cols); }

struct Anchor {
    int row = 0;
    int col = 0;

    friend bool operator==(const Anchor& a, const Anchor& b) { return a.row == b.row && a.col == b.col; }
};

struct PlacedObject {
    GridObject object;
    Anchor anchor;
};

enum class PlacementMode { Initial, PostTransform };

enum class PlaceStatus { Ok, OutOfBounds, Overlap, Touch };

// Legality check without mutation; the rejection-sampling hot path.
inline PlaceStatus placement_status(const Grid& grid, const GridObject& obj, Anchor anchor,
                                    PlacementMode mode) {
    for (const Cell& c : obj.cells()) {
        int r = anchor.row + c.row, cc = anchor.col + c.col;
        if (!grid.in_bounds(r, cc)) return PlaceStatus::OutOfBounds;
        if (grid.at(r, cc) != 0) return PlaceStatus::Overlap;
    }
    if (mode == PlacementMode::Initial) {
        for (const Cell& c : obj.cells()) {
            int r = anchor.row + c.row, cc = anchor.col + c.col;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    if (grid.in_bounds(r + dr, cc + dc) && grid.at(r + dr, cc + dc) != 0)
                        return PlaceStatus::Touch;
                }
        }
    }
    return PlaceStatus::Ok;
}

inline void stamp(Grid& grid, const GridObject& obj, Anchor anchor) {
    for (const Cell& c : obj.cells()) grid.set(anchor.row + c.row, anchor.col + c.col, c.color);
}

inline void erase(Grid& grid, const GridObject& obj, Anchor anchor) {
    for (const Cell& c : obj.cells()) grid.set(anchor.row + c.row, anchor.col + c.col, 0);
}

inline Grid place_object(const Grid& grid, const PlacedObject& placed, PlacementMode mode) {
    switch (placement_status(grid, placed.object, placed.anchor, mode)) {
        case PlaceStatus::OutOfBounds:
            raise(ErrorCode::OutOfBounds, "object cell outside grid");
        case PlaceStatus::Overlap:
            raise(ErrorCode::Overlap, "object cell would overwrite a non-background cell");
        case PlaceStatus::Touch:
            raise(ErrorCode::TouchViolation, "object would touch an existing object");
        case PlaceStatus::Ok:
            break;
    }
    Grid out = grid;
    stamp(out, placed.object, placed.anchor);
    return out;
}

struct BBox {
    int row_min = 0, col_min = 0, row_max = 0, col_max = 0;

    friend bool operator==(const BBox& a, const BBox& b) {
        return a.row_min == b.row_min && a.col_min == b.col_min && a.row_max == b.row_max &&
               a.col_max == b.col_max;
    }
};

inline std::optional<BBox> occupied_bbox(const Grid& grid) {
    std::optional<BBox> box;
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c) {
            if (grid.at(r, c) == 0) continue;
            if (!box) box = BBox{r, c, r, c};
            else {
                box->row_min = std::min(box->row_min, r);
                box->col_min = std::min(box->col_min, c);
                box->row_max = std::max(box->row_max, r);
                box->col_max = std::max(box->col_max, c);
            }
        }
    return box;
}

} // namespace cogitao

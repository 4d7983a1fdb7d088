#pragma once

// Object representation and property classification. An object is a set of
// colored cells normalized so the bounding box starts at (0, 0). Properties
// (symmetry, connectivity, color pattern, footprint) are derived, never stored
// independently of the cells.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogitao/error.hpp"

namespace cogitao {

constexpr int kNumColors = 10;   // 0 = background, 1..9 object colors
constexpr int kMaxCatalogDim = 15;

using Color = uint8_t;

struct Cell {
    int row = 0;
    int col = 0;
    Color color = 0;

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.row == b.row && a.col == b.col && a.color == b.color;
    }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.row != b.row) return a.row < b.row;
        if (a.col != b.col) return a.col < b.col;
        return a.color < b.color;
    }
};

class GridObject {
public:
    GridObject() = default;

    // Accepts cells at arbitrary offsets; translates so min row/col become 0,
    // sorts, and validates. Duplicate positions and background colors reject.
    static GridObject from_cells(std::vector<Cell> cells) {
        if (cells.empty()) raise(ErrorCode::InvalidArgument, "object must have at least one cell");
        int min_r = cells[0].row, min_c = cells[0].col;
        for (const Cell& c : cells) {
            if (c.color < 1 || c.color > 9)
                raise(ErrorCode::InvalidArgument, "object cell color must be in [1,9]");
            min_r = std::min(min_r, c.row);
            min_c = std::min(min_c, c.col);
        }
        for (Cell& c : cells) {
            c.row -= min_r;
            c.col -= min_c;
        }
        std::sort(cells.begin(), cells.end());
        for (size_t i = 1; i < cells.size(); ++i)
            if (cells[i].row == cells[i - 1].row && cells[i].col == cells[i - 1].col)
                raise(ErrorCode::InvalidArgument, "duplicate cell position in object");
        GridObject o;
        o.cells_ = std::move(cells);
        for (const Cell& c : o.cells_) {
            o.rows_ = std::max(o.rows_, c.row + 1);
            o.cols_ = std::max(o.cols_, c.col + 1);
        }
        return o;
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return static_cast<int>(cells_.size()); }

    friend bool operator==(const GridObject& a, const GridObject& b) {
        return a.cells_ == b.cells_;
    }

    // Canonical byte string; dedup key and the unit the catalog hash is built from.
    std::string key() const {
        std::string k;
        k.reserve(cells_.size() * 3);
        for (const Cell& c : cells_) {
            k.push_back(static_cast<char>(c.row));
            k.push_back(static_cast<char>(c.col));
            k.push_back(static_cast<char>(c.color));
        }
        return k;
    }

private:
    std::vector<Cell> cells_;
    int rows_ = 0;
    int cols_ = 0;
};

// Dense occupancy of an object's bounding box; scratch structure for the
// classifiers and the morphological transforms.
struct ObjectMask {
    int rows = 0;
    int cols = 0;
    std::vector<Color> at;  // 0 = empty, else cell color

    explicit ObjectMask(const GridObject& o) : rows(o.rows()), cols(o.cols()), at(static_cast<size_t>(rows) * cols, 0) {
        for (const Cell& c : o.cells()) at[static_cast<size_t>(c.row) * cols + c.col] = c.color;
    }
    ObjectMask(int r, int c) : rows(r), cols(c), at(static_cast<size_t>(r) * c, 0) {}

    Color get(int r, int c) const {
        if (r < 0 || c < 0 || r >= rows || c >= cols) return 0;
        return at[static_cast<size_t>(r) * cols + c];
    }
    void set(int r, int c, Color v) { at[static_cast<size_t>(r) * cols + c] = v; }
    bool occupied(int r, int c) const { return get(r, c) != 0; }
};

enum class Symmetry : uint8_t { Horizontal = 0, Vertical = 1, DiagonalMain = 2, DiagonalAnti = 3, Point = 4 };

using SymmetrySet = uint8_t;  // bit per Symmetry

inline SymmetrySet symmetry_bit(Symmetry s) { return static_cast<SymmetrySet>(1u << static_cast<int>(s)); }
inline bool has_symmetry(SymmetrySet set, Symmetry s) { return (set & symmetry_bit(s)) != 0; }

enum class Connectivity : uint8_t { Four = 0, Eight = 1, Distance = 2 };
enum class ColorCount : uint8_t { Single = 0, Multi = 1 };
enum class ColorPattern : uint8_t {
    Uniform = 0,
    ColumnStripes = 1,
    RowStripes = 2,
    DiagonalStripes = 3,
    TopBottom = 4,
    LeftRight = 5,
    Random = 6,
};
enum class Footprint : uint8_t { Rectangle = 0, Square = 1, Disk = 2, Diamond = 3, Ellipse = 4, Freeform = 5 };

struct ObjectProperties {
    int n_rows = 0;
    int n_cols = 0;
    int n_pixels = 0;
    SymmetrySet symmetries = 0;
    Connectivity connectivity = Connectivity::Four;
    ColorCount color_count = ColorCount::Single;
    ColorPattern color_pattern = ColorPattern::Uniform;
    Footprint footprint = Footprint::Freeform;

    bool symmetric() const { return symmetries != 0; }

    friend bool operator==(const ObjectProperties& a, const ObjectProperties& b) {
        return a.n_rows == b.n_rows && a.n_cols == b.n_cols && a.n_pixels == b.n_pixels &&
               a.symmetries == b.symmetries && a.connectivity == b.connectivity &&
               a.color_count == b.color_count && a.color_pattern == b.color_pattern &&
               a.footprint == b.footprint;
    }
};

namespace detail {

// Image of a local cell under one dihedral element, within an R x C box.
inline Cell map_cell(const Cell& c, Symmetry s, int rows, int cols) {
    switch (s) {
        case Symmetry::Horizontal: return {rows - 1 - c.row, c.col, c.color};      // flip rows (up-down)
        case Symmetry::Vertical: return {c.row, cols - 1 - c.col, c.color};        // flip cols (left-right)
        case Symmetry::DiagonalMain: return {c.col, c.row, c.color};
        case Symmetry::DiagonalAnti: return {cols - 1 - c.col, rows - 1 - c.row, c.color};
        case Symmetry::Point: return {rows - 1 - c.row, cols - 1 - c.col, c.color};
    }
    return c;
}

inline bool invariant_under(const GridObject& o, const ObjectMask& m, Symmetry s) {
    int rows = o.rows(), cols = o.cols();
    if ((s == Symmetry::DiagonalMain || s == Symmetry::DiagonalAnti) && rows != cols) return false;
    for (const Cell& c : o.cells()) {
        Cell t = map_cell(c, s, rows, cols);
        if (m.get(t.row, t.col) != c.color) return false;
    }
    return true;
}

inline int count_components(const ObjectMask& m, bool diagonal) {
    std::vector<uint8_t> seen(m.at.size(), 0);
    std::vector<int> stack;
    int n = 0;
    const int dr4[] = {-1, 1, 0, 0}, dc4[] = {0, 0, -1, 1};
    const int dr8[] = {-1, -1, -1, 0, 0, 1, 1, 1}, dc8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
    const int* dr = diagonal ? dr8 : dr4;
    const int* dc = diagonal ? dc8 : dc4;
    int deg = diagonal ? 8 : 4;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            size_t idx = static_cast<size_t>(r) * m.cols + c;
            if (m.at[idx] == 0 || seen[idx]) continue;
            ++n;
            seen[idx] = 1;
            stack.push_back(static_cast<int>(idx));
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                int cr = cur / m.cols, cc = cur % m.cols;
                for (int k = 0; k < deg; ++k) {
                    int nr = cr + dr[k], nc = cc + dc[k];
                    if (nr < 0 || nc < 0 || nr >= m.rows || nc >= m.cols) continue;
                    size_t ni = static_cast<size_t>(nr) * m.cols + nc;
                    if (m.at[ni] != 0 && !seen[ni]) {
                        seen[ni] = 1;
                        stack.push_back(static_cast<int>(ni));
                    }
                }
            }
        }
    }
    return n;
}

// Integer-only membership tests for the analytic footprint silhouettes,
// scaled by (rows-1)^2 (cols-1)^2 so no floating point is involved.
inline bool in_ellipse_mask(int r, int c, int rows, int cols) {
    int64_t pr = 2 * r - (rows - 1);
    int64_t pc = 2 * c - (cols - 1);
    int64_t a = rows - 1, b = cols - 1;
    if (a == 0 && b == 0) return r == 0 && c == 0;
    if (a == 0) return pr == 0 && pc * pc <= b * b;
    if (b == 0) return pc == 0 && pr * pr <= a * a;
    return pr * pr * b * b + pc * pc * a * a <= a * a * b * b;
}

inline bool in_diamond_mask(int r, int c, int rows, int cols) {
    int64_t pr = 2 * r - (rows - 1);
    int64_t pc = 2 * c - (cols - 1);
    int64_t a = rows - 1, b = cols - 1;
    if (a == 0 && b == 0) return r == 0 && c == 0;
    if (a == 0) return pr == 0 && (pc < 0 ? -pc : pc) <= b;
    if (b == 0) return pc == 0 && (pr < 0 ? -pr : pr) <= a;
    return (pr < 0 ? -pr : pr) * b + (pc < 0 ? -pc : pc) * a <= a * b;
}

inline bool matches_silhouette(const ObjectMask& m, bool (*pred)(int, int, int, int)) {
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.occupied(r, c) != pred(r, c, m.rows, m.cols)) return false;
    return true;
}

// Stripe classification: the color must be a pure function of the stripe
// index and consecutive occupied stripes must differ. The second condition is
// what separates stripes from the half-split patterns below.
template <typename Proj>
inline bool is_stripes(const GridObject& o, int n_stripes, Proj proj) {
    std::vector<int> stripe_color(static_cast<size_t>(n_stripes), -1);
    for (const Cell& c : o.cells()) {
        int s = proj(c);
        if (stripe_color[s] == -1) stripe_color[s] = c.color;
        else if (stripe_color[s] != c.color) return false;
    }
    int prev = -1;
    bool varied = false;
    for (int s = 0; s < n_stripes; ++s) {
        if (stripe_color[s] == -1) continue;
        if (prev != -1) {
            if (stripe_color[s] == prev) return false;
            varied = true;
        }
        prev = stripe_color[s];
    }
    return varied;
}

inline bool is_half_split(const GridObject& o, bool by_rows) {
    int extent = by_rows ? o.rows() : o.cols();
    if (extent < 2) return false;
    int first_half = (extent + 1) / 2;  // the extra row/col joins the first half
    int color_a = -1, color_b = -1;
    for (const Cell& c : o.cells()) {
        int pos = by_rows ? c.row : c.col;
        int& slot = pos < first_half ? color_a : color_b;
        if (slot == -1) slot = c.color;
        else if (slot != c.color) return false;
    }
    return color_a != -1 && color_b != -1 && color_a != color_b;
}

} // namespace detail

// Hole cells: background positions inside the bounding box whose 4-connected
// background component never reaches the box border.
inline std::vector<int> hole_cells(const ObjectMask& m) {
    std::vector<uint8_t> reach(m.at.size(), 0);
    std::vector<int> stack;
    auto push = [&](int r, int c) {
        if (r < 0 || c < 0 || r >= m.rows || c >= m.cols) return;
        size_t idx = static_cast<size_t>(r) * m.cols + c;
        if (m.at[idx] != 0 || reach[idx]) return;
        reach[idx] = 1;
        stack.push_back(static_cast<int>(idx));
    };
    for (int r = 0; r < m.rows; ++r) {
        push(r, 0);
        push(r, m.cols - 1);
    }
    for (int c = 0; c < m.cols; ++c) {
        push(0, c);
        push(m.rows - 1, c);
    }
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        int r = cur / m.cols, c = cur % m.cols;
        push(r - 1, c);
        push(r + 1, c);
        push(r, c - 1);
        push(r, c + 1);
    }
    std::vector<int> holes;
    for (size_t i = 0; i < m.at.size(); ++i)
        if (m.at[i] == 0 && !reach[i]) holes.push_back(static_cast<int>(i));
    return holes;
}

inline int count_holes(const GridObject& o) {
    ObjectMask m(o);
    return static_cast<int>(hole_cells(m).size());
}

// Contour: object cells with at least one 4-neighbor outside the object.
// Interior: the rest.
inline bool is_contour_cell(const ObjectMask& m, int r, int c) {
    return !m.occupied(r - 1, c) || !m.occupied(r + 1, c) || !m.occupied(r, c - 1) || !m.occupied(r, c + 1);
}

inline int interior_size(const GridObject& o) {
    ObjectMask m(o);
    int n = 0;
    for (const Cell& c : o.cells())
        if (!is_contour_cell(m, c.row, c.col)) ++n;
    return n;
}

inline uint16_t color_mask(const GridObject& o) {
    uint16_t mask = 0;
    for (const Cell& c : o.cells()) mask |= static_cast<uint16_t>(1u << c.color);
    return mask;
}

// Majority color; ties resolved toward the smallest color value.
inline Color majority_color(const GridObject& o) {
    int counts[kNumColors] = {0};
    for (const Cell& c : o.cells()) counts[c.color]++;
    int best = 1;
    for (int v = 2; v < kNumColors; ++v)
        if (counts[v] > counts[best]) best = v;
    return static_cast<Color>(best);
}

inline Color cycle_color(Color c) { return static_cast<Color>(c % 9 + 1); }

inline ObjectProperties classify(const GridObject& o) {
    ObjectMask m(o);
    ObjectProperties p;
    p.n_rows = o.rows();
    p.n_cols = o.cols();
    p.n_pixels = o.size();

    for (Symmetry s : {Symmetry::Horizontal, Symmetry::Vertical, Symmetry::DiagonalMain,
                       Symmetry::DiagonalAnti, Symmetry::Point})
        if (detail::invariant_under(o, m, s)) p.symmetries |= symmetry_bit(s);

    if (detail::count_components(m, false) == 1) p.connectivity = Connectivity::Four;
    else if (detail::count_components(m, true) == 1) p.connectivity = Connectivity::Eight;
    else p.connectivity = Connectivity::Distance;

    uint16_t colors = color_mask(o);
    bool single = (colors & (colors - 1)) == 0;
    p.color_count = single ? ColorCount::Single : ColorCount::Multi;

    if (single) p.color_pattern = ColorPattern::Uniform;
    else if (detail::is_stripes(o, o.cols(), [](const Cell& c) { return c.col; }))
        p.color_pattern = ColorPattern::ColumnStripes;
    else if (detail::is_stripes(o, o.rows(), [](const Cell& c) { return c.row; }))
        p.color_pattern = ColorPattern::RowStripes;
    else if (detail::is_stripes(o, o.rows() + o.cols() - 1, [](const Cell& c) { return c.row + c.col; }))
        p.color_pattern = ColorPattern::DiagonalStripes;
    else if (detail::is_half_split(o, true)) p.color_pattern = ColorPattern::TopBottom;
    else if (detail::is_half_split(o, false)) p.color_pattern = ColorPattern::LeftRight;
    else p.color_pattern = ColorPattern::Random;

    bool full = p.n_pixels == p.n_rows * p.n_cols;
    if (full && p.n_rows == p.n_cols) p.footprint = Footprint::Square;
    else if (full) p.footprint = Footprint::Rectangle;
    else if (p.n_rows == p.n_cols && detail::matches_silhouette(m, detail::in_ellipse_mask))
        p.footprint = Footprint::Disk;
    else if (detail::matches_silhouette(m, detail::in_diamond_mask))
        p.footprint = Footprint::Diamond;
    else if (detail::matches_silhouette(m, detail::in_ellipse_mask))
        p.footprint = Footprint::Ellipse;
    else p.footprint = Footprint::Freeform;

    return p;
}

inline const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::Horizontal: return "horizontal";
        case Symmetry::Vertical: return "vertical";
        case Symmetry::DiagonalMain: return "diagonal_main";
        case Symmetry::DiagonalAnti: return "diagonal_anti";
        case Symmetry::Point: return "point";
    }
    return "?";
}

inline const char* connectivity_name(Connectivity c) {
    switch (c) {
        case Connectivity::Four: return "four";
        case Connectivity::Eight: return "eight";
        case Connectivity::Distance: return "distance";
    }
    return "?";
}

inline const char* pattern_name(ColorPattern p) {
    switch (p) {
        case ColorPattern::Uniform: return "uniform";
        case ColorPattern::ColumnStripes: return "column_stripes";
        case ColorPattern::RowStripes: return "row_stripes";
        case ColorPattern::DiagonalStripes: return "diagonal_stripes";
        case ColorPattern::TopBottom: return "top_bottom";
        case ColorPattern::LeftRight: return "left_right";
        case ColorPattern::Random: return "random";
    }
    return "?";
}

inline const char* footprint_name(Footprint f) {
    switch (f) {
        case Footprint::Rectangle: return "rectangle";
        case Footprint::Square: return "square";
        case Footprint::Disk: return "disk";
        case Footprint::Diamond: return "diamond";
        case Footprint::Ellipse: return "ellipse";
        case Footprint::Freeform: return "freeform";
    }
    return "?";
}

} // namespace cogitao

#pragma once

// The 28 atomic object transformations plus the identity token. Every
// transform acts in the object's bbox-local frame and reports how the bbox
// anchor moves through anchor_delta, so scene placement stays a separate
// concern. Semantics that need a convention (rotation pivot, contour and hole
// definitions, pad/duplicate geometry) are fixed here once and tested.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cogitao/constraints.hpp"
#include "cogitao/error.hpp"
#include "cogitao/object.hpp"

namespace cogitao {

enum class Transformation : uint8_t {
    TranslateUp = 0,
    TranslateDown,
    TranslateLeft,
    TranslateRight,
    MirrorHorizontal,
    MirrorVertical,
    Rotate90,
    CropTopSide,
    CropBottomSide,
    CropRightSide,
    CropLeftSide,
    CropContours,
    ChangeColor,
    FillHolesSameColor,
    FillHolesDifferentColor,
    EmptyInside,
    ExtendContoursSameColor,
    ExtendContoursDifferentColor,
    PadTop,
    PadBottom,
    PadLeft,
    PadRight,
    PadFull,
    DuplicateTop,
    DuplicateBottom,
    DuplicateLeft,
    DuplicateRight,
    DuplicateQuadruple,
    Identity,
};

constexpr int kNumTransformations = 28;  // non-identity variants

constexpr Color kDefaultPadColor = 5;

inline const std::array<Transformation, kNumTransformations>& all_transformations() {
    static const std::array<Transformation, kNumTransformations> all = {
        Transformation::TranslateUp,       Transformation::TranslateDown,
        Transformation::TranslateLeft,     Transformation::TranslateRight,
        Transformation::MirrorHorizontal,  Transformation::MirrorVertical,
        Transformation::Rotate90,          Transformation::CropTopSide,
        Transformation::CropBottomSide,    Transformation::CropRightSide,
        Transformation::CropLeftSide,      Transformation::CropContours,
        Transformation::ChangeColor,       Transformation::FillHolesSameColor,
        Transformation::FillHolesDifferentColor, Transformation::EmptyInside,
        Transformation::ExtendContoursSameColor, Transformation::ExtendContoursDifferentColor,
        Transformation::PadTop,            Transformation::PadBottom,
        Transformation::PadLeft,           Transformation::PadRight,
        Transformation::PadFull,           Transformation::DuplicateTop,
        Transformation::DuplicateBottom,   Transformation::DuplicateLeft,
        Transformation::DuplicateRight,    Transformation::DuplicateQuadruple,
    };
    return all;
}

inline const char* transformation_name(Transformation t) {
    switch (t) {
        case Transformation::TranslateUp: return "translate_up";
        case Transformation::TranslateDown: return "translate_down";
        case Transformation::TranslateLeft: return "translate_left";
        case Transformation::TranslateRight: return "translate_right";
        case Transformation::MirrorHorizontal: return "mirror_horizontal";
        case Transformation::MirrorVertical: return "mirror_vertical";
        case Transformation::Rotate90: return "rotate_90";
        case Transformation::CropTopSide: return "crop_top_side";
        case Transformation::CropBottomSide: return "crop_bottom_side";
        case Transformation::CropRightSide: return "crop_right_side";
        case Transformation::CropLeftSide: return "crop_left_side";
        case Transformation::CropContours: return "crop_contours";
        case Transformation::ChangeColor: return "change_object_color";
        case Transformation::FillHolesSameColor: return "fill_holes_same_color";
        case Transformation::FillHolesDifferentColor: return "fill_holes_different_color";
        case Transformation::EmptyInside: return "empty_inside";
        case Transformation::ExtendContoursSameColor: return "extend_contours_same_color";
        case Transformation::ExtendContoursDifferentColor: return "extend_contours_different_color";
        case Transformation::PadTop: return "pad_top";
        case Transformation::PadBottom: return "pad_bottom";
        case Transformation::PadLeft: return "pad_left";
        case Transformation::PadRight: return "pad_right";
        case Transformation::PadFull: return "pad_full";
        case Transformation::DuplicateTop: return "duplicate_top";
        case Transformation::DuplicateBottom: return "duplicate_bottom";
        case Transformation::DuplicateLeft: return "duplicate_left";
        case Transformation::DuplicateRight: return "duplicate_right";
        case Transformation::DuplicateQuadruple: return "duplicate_quadruple";
        case Transformation::Identity: return "identity";
    }
    return "?";
}

inline Transformation transformation_from_name(const std::string& name) {
    for (Transformation t : all_transformations())
        if (name == transformation_name(t)) return t;
    if (name == "identity") return Transformation::Identity;
    raise(ErrorCode::InvalidArgument, "unknown transformation name: " + name);
}

using TransformationSequence = std::vector<Transformation>;

inline std::string sequence_name(const TransformationSequence& seq) {
    std::string s;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += "-";
        s += transformation_name(seq[i]);
    }
    return s;
}

struct AnchorDelta {
    int d_row = 0;
    int d_col = 0;

    friend bool operator==(const AnchorDelta& a, const AnchorDelta& b) {
        return a.d_row == b.d_row && a.d_col == b.d_col;
    }
};

struct TransformedObject {
    GridObject object;
    AnchorDelta anchor_delta;

    friend bool operator==(const TransformedObject& a, const TransformedObject& b) {
        return a.object == b.object && a.anchor_delta == b.anchor_delta;
    }
};

// Applicability table. Dimensional requirements exist only to rule out
// degenerate results; fill-holes wants a connected object with a hole;
// empty-inside and crop-contours want a non-empty interior; pads want the pad
// color absent so the pad reads as a pad.
inline ObjectConstraints constraints_of(Transformation t, Color pad_color = kDefaultPadColor) {
    ObjectConstraints c;
    switch (t) {
        case Transformation::CropTopSide:
        case Transformation::CropBottomSide:
            c.min_rows = 2;
            break;
        case Transformation::CropLeftSide:
        case Transformation::CropRightSide:
            c.min_cols = 2;
            break;
        case Transformation::CropContours:
            c.min_rows = 3;
            c.min_cols = 3;
            c.needs_interior = true;
            break;
        case Transformation::EmptyInside:
            c.min_rows = 3;
            c.min_cols = 3;
            c.needs_interior = true;
            break;
        case Transformation::FillHolesSameColor:
        case Transformation::FillHolesDifferentColor:
            c.allowed_connectivity = connectivity_bit(Connectivity::Four) | connectivity_bit(Connectivity::Eight);
            c.needs_hole = true;
            break;
        case Transformation::PadTop:
        case Transformation::PadBottom:
        case Transformation::PadLeft:
        case Transformation::PadRight:
        case Transformation::PadFull:
            c.forbidden_colors = static_cast<uint16_t>(1u << pad_color);
            break;
        default:
            break;
    }
    return c;
}

namespace detail {

inline TransformedObject from_raw(std::vector<Cell> cells) {
    if (cells.empty()) raise(ErrorCode::DegenerateResult, "transform left no cells");
    int min_r = cells[0].row, min_c = cells[0].col;
    for (const Cell& c : cells) {
        min_r = std::min(min_r, c.row);
        min_c = std::min(min_c, c.col);
    }
    TransformedObject out;
    out.object = GridObject::from_cells(std::move(cells));
    out.anchor_delta = {min_r, min_c};
    return out;
}

inline std::vector<Cell> contour_cells(const GridObject& o, const ObjectMask& m, bool keep_contour) {
    std::vector<Cell> out;
    for (const Cell& c : o.cells())
        if (is_contour_cell(m, c.row, c.col) == keep_contour) out.push_back(c);
    return out;
}

} // namespace detail

inline TransformedObject apply(Transformation t, const GridObject& obj,
                               Color pad_color = kDefaultPadColor) {
    if (t == Transformation::Identity) return {obj, {0, 0}};

    const int rows = obj.rows(), cols = obj.cols();

    // Applicability. The hole requirement of the fill family and the
    // pad-color exclusion of the pad family are selection-time constraints
    // only: mid-sequence, filling a hole-free object is a no-op and padding
    // an object that already carries the pad color is still well defined.
    // Rejecting them here would make sequences that repeat those transforms
    // impossible to generate.
    switch (t) {
        case Transformation::CropTopSide:
        case Transformation::CropBottomSide:
            if (rows < 2) raise(ErrorCode::DegenerateResult, "cannot crop a 1-row object");
            break;
        case Transformation::CropLeftSide:
        case Transformation::CropRightSide:
            if (cols < 2) raise(ErrorCode::DegenerateResult, "cannot crop a 1-column object");
            break;
        case Transformation::CropContours:
        case Transformation::EmptyInside:
            if (interior_size(obj) == 0)
                raise(ErrorCode::ConstraintViolated,
                      std::string(transformation_name(t)) + " requires a non-empty interior");
            break;
        case Transformation::FillHolesSameColor:
        case Transformation::FillHolesDifferentColor: {
            ObjectProperties p = classify(obj);
            if (p.connectivity == Connectivity::Distance)
                raise(ErrorCode::ConstraintViolated, "fill_holes requires a connected object");
            break;
        }
        default:
            break;
    }

    std::vector<Cell> raw;
    raw.reserve(obj.cells().size() * 2);

    switch (t) {
        case Transformation::TranslateUp: return {obj, {-1, 0}};
        case Transformation::TranslateDown: return {obj, {1, 0}};
        case Transformation::TranslateLeft: return {obj, {0, -1}};
        case Transformation::TranslateRight: return {obj, {0, 1}};

        case Transformation::MirrorHorizontal:
            for (const Cell& c : obj.cells()) raw.push_back({rows - 1 - c.row, c.col, c.color});
            return {GridObject::from_cells(std::move(raw)), {0, 0}};

        case Transformation::MirrorVertical:
            for (const Cell& c : obj.cells()) raw.push_back({c.row, cols - 1 - c.col, c.color});
            return {GridObject::from_cells(std::move(raw)), {0, 0}};

        case Transformation::Rotate90: {
            // Counter-clockwise about the bbox center. Half-cell offsets
            // (odd rows-cols difference) truncate toward zero: truncation is
            // antisymmetric in (rows, cols), which is what makes four
            // rotations cancel to the identity anchor-wise.
            for (const Cell& c : obj.cells()) raw.push_back({cols - 1 - c.col, c.row, c.color});
            TransformedObject out{GridObject::from_cells(std::move(raw)), {0, 0}};
            out.anchor_delta = {(rows - cols) / 2, (cols - rows) / 2};
            return out;
        }

        case Transformation::CropTopSide:
        case Transformation::CropBottomSide:
        case Transformation::CropLeftSide:
        case Transformation::CropRightSide: {
            for (const Cell& c : obj.cells()) {
                if (t == Transformation::CropTopSide && c.row == 0) continue;
                if (t == Transformation::CropBottomSide && c.row == rows - 1) continue;
                if (t == Transformation::CropLeftSide && c.col == 0) continue;
                if (t == Transformation::CropRightSide && c.col == cols - 1) continue;
                raw.push_back(c);
            }
            return detail::from_raw(std::move(raw));  // delta keeps absolute cell positions
        }

        case Transformation::CropContours: {
            ObjectMask m(obj);
            raw = detail::contour_cells(obj, m, false);
            return detail::from_raw(std::move(raw));
        }

        case Transformation::ChangeColor:
            for (const Cell& c : obj.cells()) raw.push_back({c.row, c.col, cycle_color(c.color)});
            return {GridObject::from_cells(std::move(raw)), {0, 0}};

        case Transformation::FillHolesSameColor:
        case Transformation::FillHolesDifferentColor: {
            ObjectMask m(obj);
            Color fill = majority_color(obj);
            if (t == Transformation::FillHolesDifferentColor) fill = cycle_color(fill);
            raw = obj.cells();
            for (int idx : hole_cells(m)) raw.push_back({idx / cols, idx % cols, fill});
            return {GridObject::from_cells(std::move(raw)), {0, 0}};
        }

        case Transformation::EmptyInside: {
            ObjectMask m(obj);
            raw = detail::contour_cells(obj, m, true);
            return {GridObject::from_cells(std::move(raw)), {0, 0}};
        }

        case Transformation::ExtendContoursSameColor:
        case Transformation::ExtendContoursDifferentColor: {
            // One-step 4-neighborhood dilation of the contour. Same-color
            // takes the color of the nearest (adjacent) contour cell, ties
            // toward the smallest value; different-color uses the cycled
            // majority color for every added cell.
            ObjectMask m(obj);
            Color diff = cycle_color(majority_color(obj));
            ObjectMask added(rows + 2, cols + 2);  // shifted by (+1,+1)
            const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
            for (const Cell& c : obj.cells()) {
                if (!is_contour_cell(m, c.row, c.col)) continue;
                for (int k = 0; k < 4; ++k) {
                    int nr = c.row + dr[k], nc = c.col + dc[k];
                    if (m.occupied(nr, nc)) continue;
                    Color chosen = diff;
                    if (t == Transformation::ExtendContoursSameColor) {
                        // every occupied 4-neighbor of a background cell is a
                        // contour cell; ties resolve to the smallest color
                        chosen = 10;
                        for (int j = 0; j < 4; ++j) {
                            Color adj = m.get(nr + dr[j], nc + dc[j]);
                            if (adj != 0 && adj < chosen) chosen = adj;
                        }
                    }
                    Color prev = added.get(nr + 1, nc + 1);
                    if (prev == 0 || chosen < prev) added.set(nr + 1, nc + 1, chosen);
                }
            }
            raw = obj.cells();
            for (int r = 0; r < added.rows; ++r)
                for (int c = 0; c < added.cols; ++c)
                    if (added.get(r, c) != 0) raw.push_back({r - 1, c - 1, added.get(r, c)});
            return detail::from_raw(std::move(raw));
        }

        case Transformation::PadTop:
        case Transformation::PadBottom:
        case Transformation::PadLeft:
        case Transformation::PadRight: {
            raw = obj.cells();
            if (t == Transformation::PadTop)
                for (int c = 0; c < cols; ++c) raw.push_back({-1, c, pad_color});
            if (t == Transformation::PadBottom)
                for (int c = 0; c < cols; ++c) raw.push_back({rows, c, pad_color});
            if (t == Transformation::PadLeft)
                for (int r = 0; r < rows; ++r) raw.push_back({r, -1, pad_color});
            if (t == Transformation::PadRight)
                for (int r = 0; r < rows; ++r) raw.push_back({r, cols, pad_color});
            return detail::from_raw(std::move(raw));
        }

        case Transformation::PadFull: {
            raw = obj.cells();
            for (int c = -1; c <= cols; ++c) {
                raw.push_back({-1, c, pad_color});
                raw.push_back({rows, c, pad_color});
            }
            for (int r = 0; r < rows; ++r) {
                raw.push_back({r, -1, pad_color});
                raw.push_back({r, cols, pad_color});
            }
            return detail::from_raw(std::move(raw));
        }

        case Transformation::DuplicateTop:
        case Transformation::DuplicateBottom:
        case Transformation::DuplicateLeft:
        case Transformation::DuplicateRight: {
            int dr = 0, dc = 0;
            if (t == Transformation::DuplicateTop) dr = -rows;
            if (t == Transformation::DuplicateBottom) dr = rows;
            if (t == Transformation::DuplicateLeft) dc = -cols;
            if (t == Transformation::DuplicateRight) dc = cols;
            raw = obj.cells();
            for (const Cell& c : obj.cells()) raw.push_back({c.row + dr, c.col + dc, c.color});
            return detail::from_raw(std::move(raw));
        }

        case Transformation::DuplicateQuadruple: {
            // 2x2 block arrangement with the original at the bottom-right.
            raw = obj.cells();
            for (const Cell& c : obj.cells()) {
                raw.push_back({c.row - rows, c.col, c.color});
                raw.push_back({c.row, c.col - cols, c.color});
                raw.push_back({c.row - rows, c.col - cols, c.color});
            }
            return detail::from_raw(std::move(raw));
        }

        case Transformation::Identity:
            break;
    }
    raise(ErrorCode::InvalidArgument, "unhandled transformation");
}

inline TransformedObject apply_sequence(const TransformationSequence& seq, const GridObject& obj,
                                        Color pad_color = kDefaultPadColor) {
    TransformedObject acc{obj, {0, 0}};
    for (size_t i = 0; i < seq.size(); ++i) {
        try {
            TransformedObject step = apply(seq[i], acc.object, pad_color);
            acc.object = std::move(step.object);
            acc.anchor_delta.d_row += step.anchor_delta.d_row;
            acc.anchor_delta.d_col += step.anchor_delta.d_col;
        } catch (const Error& e) {
            raise(e.code(), "step " + std::to_string(i) + " (" + transformation_name(seq[i]) +
                                "): " + e.message());
        }
    }
    return acc;
}

} // namespace cogitao

#pragma once

// Constraint records used both by catalog queries and by the per-transform
// applicability tables. Merging is conjunction: the merged constraint accepts
// exactly the objects every operand accepts.

#include <cstdint>
#include <optional>

#include "cogitao/error.hpp"
#include "cogitao/object.hpp"

namespace cogitao {

constexpr uint8_t kAllConnectivity = 0b111;
constexpr uint8_t kAllColorCounts = 0b11;
constexpr uint8_t kAllPatterns = 0b1111111;
constexpr uint8_t kAllFootprints = 0b111111;

inline uint8_t connectivity_bit(Connectivity c) { return static_cast<uint8_t>(1u << static_cast<int>(c)); }
inline uint8_t color_count_bit(ColorCount c) { return static_cast<uint8_t>(1u << static_cast<int>(c)); }
inline uint8_t pattern_bit(ColorPattern p) { return static_cast<uint8_t>(1u << static_cast<int>(p)); }
inline uint8_t footprint_bit(Footprint f) { return static_cast<uint8_t>(1u << static_cast<int>(f)); }

struct ObjectConstraints {
    int min_rows = 1, max_rows = kMaxCatalogDim * 2;
    int min_cols = 1, max_cols = kMaxCatalogDim * 2;
    int min_pixels = 1, max_pixels = (kMaxCatalogDim * 2) * (kMaxCatalogDim * 2);
    SymmetrySet required_symmetries = 0;          // every listed symmetry must hold
    std::optional<bool> symmetric;                // true: >=1 symmetry, false: none
    uint8_t allowed_connectivity = kAllConnectivity;
    uint8_t allowed_color_counts = kAllColorCounts;
    uint8_t allowed_patterns = kAllPatterns;
    uint8_t allowed_footprints = kAllFootprints;
    bool needs_hole = false;
    bool needs_interior = false;
    uint16_t forbidden_colors = 0;                // bit per color 1..9

    bool satisfiable() const {
        return min_rows <= max_rows && min_cols <= max_cols && min_pixels <= max_pixels &&
               allowed_connectivity != 0 && allowed_color_counts != 0 && allowed_patterns != 0 &&
               allowed_footprints != 0 && !(symmetric == false && required_symmetries != 0);
    }

    bool accepts(const ObjectProperties& p, int n_holes, int n_interior, uint16_t colors) const {
        if (p.n_rows < min_rows || p.n_rows > max_rows) return false;
        if (p.n_cols < min_cols || p.n_cols > max_cols) return false;
        if (p.n_pixels < min_pixels || p.n_pixels > max_pixels) return false;
        if ((p.symmetries & required_symmetries) != required_symmetries) return false;
        if (symmetric && *symmetric != p.symmetric()) return false;
        if (!(allowed_connectivity & connectivity_bit(p.connectivity))) return false;
        if (!(allowed_color_counts & color_count_bit(p.color_count))) return false;
        if (!(allowed_patterns & pattern_bit(p.color_pattern))) return false;
        if (!(allowed_footprints & footprint_bit(p.footprint))) return false;
        if (needs_hole && n_holes == 0) return false;
        if (needs_interior && n_interior == 0) return false;
        if (colors & forbidden_colors) return false;
        return true;
    }

    bool accepts(const GridObject& o) const {
        return accepts(classify(o), count_holes(o), interior_size(o), color_mask(o));
    }
};

inline ObjectConstraints merge(const ObjectConstraints& a, const ObjectConstraints& b) {
    ObjectConstraints m = a;
    m.min_rows = std::max(a.min_rows, b.min_rows);
    m.max_rows = std::min(a.max_rows, b.max_rows);
    m.min_cols = std::max(a.min_cols, b.min_cols);
    m.max_cols = std::min(a.max_cols, b.max_cols);
    m.min_pixels = std::max(a.min_pixels, b.min_pixels);
    m.max_pixels = std::min(a.max_pixels, b.max_pixels);
    m.required_symmetries = a.required_symmetries | b.required_symmetries;
    if (b.symmetric) {
        if (m.symmetric && *m.symmetric != *b.symmetric)
            raise(ErrorCode::InvalidArgument, "contradictory symmetric/asymmetric constraints");
        m.symmetric = b.symmetric;
    }
    m.allowed_connectivity = a.allowed_connectivity & b.allowed_connectivity;
    m.allowed_color_counts = a.allowed_color_counts & b.allowed_color_counts;
    m.allowed_patterns = a.allowed_patterns & b.allowed_patterns;
    m.allowed_footprints = a.allowed_footprints & b.allowed_footprints;
    m.needs_hole = a.needs_hole || b.needs_hole;
    m.needs_interior = a.needs_interior || b.needs_interior;
    m.forbidden_colors = a.forbidden_colors | b.forbidden_colors;
    return m;
}

} // namespace cogitao

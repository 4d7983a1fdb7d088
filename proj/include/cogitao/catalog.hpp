#pragma once

// Object catalog: pre-generates a large pool of distinct objects by iterating
// the cross-product of property categories (size x symmetry x connectivity x
// color pattern x footprint), synthesizing random realizations of each
// combination and keeping only those whose classification matches the target.
// Unsatisfiable combinations simply never verify. Queries then select
// uniformly among entries matching a constraint record.

#include <cstdint>
#include <fstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cogitao/constraints.hpp"
#include "cogitao/error.hpp"
#include "cogitao/object.hpp"
#include "cogitao/rng.hpp"

namespace cogitao {

struct CatalogConfig {
    int max_dim = kMaxCatalogDim;
    int target_count = 23000;
    uint64_t seed = 0;
};

struct CatalogEntry {
    GridObject object;
    ObjectProperties props;
    uint16_t n_holes = 0;
    uint16_t n_interior = 0;
    uint16_t colors = 0;
};

namespace detail {

struct ComboTarget {
    int rows, cols;
    int sym;  // -1 = asymmetric target, else Symmetry index
    Connectivity conn;
    ColorPattern pattern;
    Footprint footprint;
};

using Pos = std::pair<int, int>;

inline bool mask_tight(const std::vector<Pos>& cells, int rows, int cols) {
    bool r0 = false, r1 = false, c0 = false, c1 = false;
    for (const Pos& p : cells) {
        if (p.first == 0) r0 = true;
        if (p.first == rows - 1) r1 = true;
        if (p.second == 0) c0 = true;
        if (p.second == cols - 1) c1 = true;
    }
    return r0 && r1 && c0 && c1;
}

inline std::vector<Pos> grow_blob(int rows, int cols, int want, bool diagonal_only, Rng& rng) {
    std::vector<uint8_t> occ(static_cast<size_t>(rows) * cols, 0);
    std::vector<Pos> cells;
    auto add = [&](int r, int c) {
        occ[static_cast<size_t>(r) * cols + c] = 1;
        cells.push_back({r, c});
    };
    add(rng.below(static_cast<uint32_t>(rows)), rng.below(static_cast<uint32_t>(cols)));
    const int dr4[] = {-1, 1, 0, 0}, dc4[] = {0, 0, -1, 1};
    const int dr8[] = {-1, -1, 1, 1}, dc8[] = {-1, 1, -1, 1};
    int attempts = want * 8 + 16;
    while (static_cast<int>(cells.size()) < want && attempts-- > 0) {
        const Pos& from = cells[rng.below(static_cast<uint32_t>(cells.size()))];
        int k = static_cast<int>(rng.below(4));
        int nr = from.first + (diagonal_only ? dr8[k] : dr4[k]);
        int nc = from.second + (diagonal_only ? dc8[k] : dc4[k]);
        if (nr < 0 || nc < 0 || nr >= rows || nc >= cols) continue;
        if (occ[static_cast<size_t>(nr) * cols + nc]) continue;
        add(nr, nc);
    }
    return cells;
}

// Solid box with a few strictly-interior cells carved out; the stock source
// of objects with holes (rings and pierced blocks).
inline std::vector<Pos> pierced_box(int rows, int cols, Rng& rng) {
    std::vector<Pos> cells;
    int inner = (rows - 2) * (cols - 2);
    int carve = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(std::max(1, inner / 2))));
    std::vector<uint8_t> removed(static_cast<size_t>(inner), 0);
    for (int i = 0; i < carve; ++i) removed[rng.below(static_cast<uint32_t>(inner))] = 1;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (r > 0 && r < rows - 1 && c > 0 && c < cols - 1 &&
                removed[static_cast<size_t>(r - 1) * (cols - 2) + (c - 1)])
                continue;
            cells.push_back({r, c});
        }
    return cells;
}

inline std::vector<Pos> scattered_clusters(int rows, int cols, Rng& rng) {
    int k = 2 + static_cast<int>(rng.below(2));
    std::vector<uint8_t> occ(static_cast<size_t>(rows) * cols, 0);
    std::vector<Pos> cells;
    auto blocked = [&](int r, int c, int h, int w) {
        for (int rr = r - 1; rr <= r + h; ++rr)
            for (int cc = c - 1; cc <= c + w; ++cc) {
                if (rr < 0 || cc < 0 || rr >= rows || cc >= cols) continue;
                if (occ[static_cast<size_t>(rr) * cols + cc]) return true;
            }
        return false;
    };
    int placed = 0;
    for (int attempt = 0; attempt < 40 && placed < k; ++attempt) {
        int h = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(std::min(3, rows))));
        int w = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(std::min(3, cols))));
        if (h > rows || w > cols) continue;
        int r = static_cast<int>(rng.below(static_cast<uint32_t>(rows - h + 1)));
        int c = static_cast<int>(rng.below(static_cast<uint32_t>(cols - w + 1)));
        if (blocked(r, c, h, w)) continue;
        for (int rr = r; rr < r + h; ++rr)
            for (int cc = c; cc < c + w; ++cc) {
                occ[static_cast<size_t>(rr) * cols + cc] = 1;
                cells.push_back({rr, cc});
            }
        ++placed;
    }
    if (placed < 2) cells.clear();
    return cells;
}

inline std::vector<Pos> build_mask(const ComboTarget& t, Rng& rng) {
    std::vector<Pos> cells;
    switch (t.footprint) {
        case Footprint::Square:
        case Footprint::Rectangle:
            for (int r = 0; r < t.rows; ++r)
                for (int c = 0; c < t.cols; ++c) cells.push_back({r, c});
            break;
        case Footprint::Disk:
        case Footprint::Ellipse:
            for (int r = 0; r < t.rows; ++r)
                for (int c = 0; c < t.cols; ++c)
                    if (in_ellipse_mask(r, c, t.rows, t.cols)) cells.push_back({r, c});
            break;
        case Footprint::Diamond:
            for (int r = 0; r < t.rows; ++r)
                for (int c = 0; c < t.cols; ++c)
                    if (in_diamond_mask(r, c, t.rows, t.cols)) cells.push_back({r, c});
            break;
        case Footprint::Freeform: {
            if (t.conn == Connectivity::Four) {
                bool want_hole = t.rows >= 3 && t.cols >= 3 && rng.chance(1, 3);
                if (want_hole) cells = pierced_box(t.rows, t.cols, rng);
                else {
                    int min_px = t.rows + t.cols - 1;
                    int span = t.rows * t.cols - min_px;
                    int want = min_px + (span > 0 ? static_cast<int>(rng.below(static_cast<uint32_t>(span + 1))) : 0);
                    cells = grow_blob(t.rows, t.cols, want, false, rng);
                }
            } else if (t.conn == Connectivity::Eight) {
                int want = std::max(t.rows, t.cols) + static_cast<int>(rng.below(static_cast<uint32_t>(std::max(2, t.rows * t.cols / 3))));
                cells = grow_blob(t.rows, t.cols, want, true, rng);
            } else {
                cells = scattered_clusters(t.rows, t.cols, rng);
            }
            // Close under the targeted symmetry so the verification has a chance.
            if (t.sym >= 0 && !cells.empty()) {
                Symmetry s = static_cast<Symmetry>(t.sym);
                if ((s == Symmetry::DiagonalMain || s == Symmetry::DiagonalAnti) && t.rows != t.cols)
                    return {};
                std::vector<uint8_t> occ(static_cast<size_t>(t.rows) * t.cols, 0);
                for (const Pos& p : cells) occ[static_cast<size_t>(p.first) * t.cols + p.second] = 1;
                std::vector<Pos> closed = cells;
                for (const Pos& p : cells) {
                    Cell img = map_cell({p.first, p.second, 1}, s, t.rows, t.cols);
                    size_t idx = static_cast<size_t>(img.row) * t.cols + img.col;
                    if (!occ[idx]) {
                        occ[idx] = 1;
                        closed.push_back({img.row, img.col});
                    }
                }
                cells = std::move(closed);
            }
            break;
        }
    }
    if (cells.empty() || !mask_tight(cells, t.rows, t.cols)) return {};
    return cells;
}

// Adjacent-distinct stripe color sequence; palindromic when the targeted
// symmetry reverses the stripe axis (only possible for odd lengths).
inline bool stripe_sequence(int len, bool palindrome, Rng& rng, std::vector<Color>& out) {
    if (palindrome && len % 2 == 0) return false;
    int head = palindrome ? (len + 1) / 2 : len;
    out.assign(static_cast<size_t>(len), 0);
    for (int i = 0; i < head; ++i) {
        Color c;
        do {
            c = static_cast<Color>(1 + rng.below(9));
        } while (i > 0 && c == out[i - 1]);
        out[i] = c;
    }
    if (palindrome)
        for (int i = head; i < len; ++i) out[i] = out[len - 1 - i];
    return true;
}

inline bool paint(const ComboTarget& t, const std::vector<Pos>& mask, Rng& rng, std::vector<Cell>& out) {
    out.clear();
    out.reserve(mask.size());
    Symmetry sym = static_cast<Symmetry>(t.sym < 0 ? 0 : t.sym);
    bool has_target_sym = t.sym >= 0;
    std::vector<Color> seq;
    switch (t.pattern) {
        case ColorPattern::Uniform: {
            Color c = static_cast<Color>(1 + rng.below(9));
            for (const Pos& p : mask) out.push_back({p.first, p.second, c});
            return true;
        }
        case ColorPattern::ColumnStripes: {
            if (has_target_sym && (sym == Symmetry::DiagonalMain || sym == Symmetry::DiagonalAnti)) return false;
            bool pal = has_target_sym && (sym == Symmetry::Vertical || sym == Symmetry::Point);
            if (!stripe_sequence(t.cols, pal, rng, seq)) return false;
            for (const Pos& p : mask) out.push_back({p.first, p.second, seq[p.second]});
            return true;
        }
        case ColorPattern::RowStripes: {
            if (has_target_sym && (sym == Symmetry::DiagonalMain || sym == Symmetry::DiagonalAnti)) return false;
            bool pal = has_target_sym && (sym == Symmetry::Horizontal || sym == Symmetry::Point);
            if (!stripe_sequence(t.rows, pal, rng, seq)) return false;
            for (const Pos& p : mask) out.push_back({p.first, p.second, seq[p.first]});
            return true;
        }
        case ColorPattern::DiagonalStripes: {
            if (has_target_sym && (sym == Symmetry::Horizontal || sym == Symmetry::Vertical)) return false;
            bool pal = has_target_sym && (sym == Symmetry::DiagonalAnti || sym == Symmetry::Point);
            if (!stripe_sequence(t.rows + t.cols - 1, pal, rng, seq)) return false;
            for (const Pos& p : mask) out.push_back({p.first, p.second, seq[p.first + p.second]});
            return true;
        }
        case ColorPattern::TopBottom: {
            if (has_target_sym && sym != Symmetry::Vertical) return false;
            Color a = static_cast<Color>(1 + rng.below(9));
            Color b;
            do {
                b = static_cast<Color>(1 + rng.below(9));
            } while (b == a);
            int split = (t.rows + 1) / 2;
            for (const Pos& p : mask) out.push_back({p.first, p.second, p.first < split ? a : b});
            return true;
        }
        case ColorPattern::LeftRight: {
            if (has_target_sym && sym != Symmetry::Horizontal) return false;
            Color a = static_cast<Color>(1 + rng.below(9));
            Color b;
            do {
                b = static_cast<Color>(1 + rng.below(9));
            } while (b == a);
            int split = (t.cols + 1) / 2;
            for (const Pos& p : mask) out.push_back({p.first, p.second, p.second < split ? a : b});
            return true;
        }
        case ColorPattern::Random: {
            if (!has_target_sym) {
                for (const Pos& p : mask) out.push_back({p.first, p.second, static_cast<Color>(1 + rng.below(9))});
                return true;
            }
            // Orbit-consistent random coloring under the targeted symmetry.
            std::vector<Color> colors(static_cast<size_t>(t.rows) * t.cols, 0);
            for (const Pos& p : mask) {
                size_t idx = static_cast<size_t>(p.first) * t.cols + p.second;
                if (colors[idx] == 0) {
                    Color c = static_cast<Color>(1 + rng.below(9));
                    colors[idx] = c;
                    Cell img = map_cell({p.first, p.second, c}, sym, t.rows, t.cols);
                    colors[static_cast<size_t>(img.row) * t.cols + img.col] = c;
                }
                out.push_back({p.first, p.second, colors[idx]});
            }
            return true;
        }
    }
    return false;
}

inline bool verify(const ObjectProperties& p, const ComboTarget& t) {
    if (p.n_rows != t.rows || p.n_cols != t.cols) return false;
    if (t.sym < 0) {
        if (p.symmetries != 0) return false;
    } else if (!has_symmetry(p.symmetries, static_cast<Symmetry>(t.sym))) {
        return false;
    }
    return p.connectivity == t.conn && p.color_pattern == t.pattern && p.footprint == t.footprint;
}

inline std::vector<ComboTarget> enumerate_combos(int max_dim) {
    std::vector<ComboTarget> combos;
    const ColorPattern patterns[] = {ColorPattern::Uniform, ColorPattern::ColumnStripes,
                                     ColorPattern::RowStripes, ColorPattern::DiagonalStripes,
                                     ColorPattern::TopBottom, ColorPattern::LeftRight,
                                     ColorPattern::Random};
    const Footprint footprints[] = {Footprint::Rectangle, Footprint::Square, Footprint::Disk,
                                    Footprint::Diamond, Footprint::Ellipse, Footprint::Freeform};
    const Connectivity conns[] = {Connectivity::Four, Connectivity::Eight, Connectivity::Distance};
    for (int rows = 1; rows <= max_dim; ++rows)
        for (int cols = 1; cols <= max_dim; ++cols)
            for (int sym = -1; sym < 5; ++sym)
                for (Connectivity conn : conns)
                    for (ColorPattern pattern : patterns)
                        for (Footprint fp : footprints) {
                            if (fp != Footprint::Freeform && conn != Connectivity::Four) continue;
                            if (fp == Footprint::Square && rows != cols) continue;
                            if (fp == Footprint::Rectangle && rows == cols) continue;
                            if ((fp == Footprint::Disk) && (rows != cols || rows < 3 || rows % 2 == 0)) continue;
                            if (fp == Footprint::Ellipse &&
                                (rows == cols || rows < 3 || cols < 3 || rows % 2 == 0 || cols % 2 == 0))
                                continue;
                            if (fp == Footprint::Diamond && (rows < 2 || cols < 2)) continue;
                            if (conn == Connectivity::Eight && (rows < 2 || cols < 2)) continue;
                            if (conn == Connectivity::Distance && rows * cols < 4) continue;
                            if (pattern == ColorPattern::ColumnStripes && cols < 2) continue;
                            if (pattern == ColorPattern::RowStripes && rows < 2) continue;
                            if (pattern == ColorPattern::DiagonalStripes && rows + cols < 3) continue;
                            if (pattern == ColorPattern::TopBottom && rows < 3) continue;
                            if (pattern == ColorPattern::LeftRight && cols < 3) continue;
                            if (pattern == ColorPattern::Random && rows * cols < 2) continue;
                            if (sym >= 0 &&
                                (sym == static_cast<int>(Symmetry::DiagonalMain) ||
                                 sym == static_cast<int>(Symmetry::DiagonalAnti)) &&
                                rows != cols)
                                continue;
                            combos.push_back({rows, cols, sym, conn, pattern, fp});
                        }
    return combos;
}

inline void put_u16(std::string& s, uint16_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>(v >> 8));
}
inline void put_u32(std::string& s, uint32_t v) {
    put_u16(s, static_cast<uint16_t>(v & 0xffff));
    put_u16(s, static_cast<uint16_t>(v >> 16));
}
inline void put_u64(std::string& s, uint64_t v) {
    put_u32(s, static_cast<uint32_t>(v & 0xffffffffu));
    put_u32(s, static_cast<uint32_t>(v >> 32));
}

class ByteReader {
public:
    ByteReader(const std::string& data) : data_(data) {}
    uint8_t u8() {
        need(1);
        return static_cast<uint8_t>(data_[pos_++]);
    }
    uint16_t u16() {
        uint16_t lo = u8();
        return static_cast<uint16_t>(lo | (static_cast<uint16_t>(u8()) << 8));
    }
    uint32_t u32() {
        uint32_t lo = u16();
        return lo | (static_cast<uint32_t>(u16()) << 16);
    }
    uint64_t u64() {
        uint64_t lo = u32();
        return lo | (static_cast<uint64_t>(u32()) << 32);
    }
    bool done() const { return pos_ == data_.size(); }

private:
    void need(size_t n) {
        if (pos_ + n > data_.size()) raise(ErrorCode::SchemaError, "truncated catalog file");
    }
    const std::string& data_;
    size_t pos_ = 0;
};

} // namespace detail

inline uint64_t fnv1a64(const std::string& bytes, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class ObjectCatalog {
public:
    static constexpr uint32_t kFormatVersion = 1;

    size_t size() const { return entries_.size(); }
    const CatalogEntry& entry(size_t i) const { return entries_[i]; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogConfig& config() const { return config_; }

    std::vector<uint32_t> match(const ObjectConstraints& c) const {
        std::vector<uint32_t> out;
        if (!c.satisfiable()) return out;
        int rlo = std::max(1, c.min_rows), rhi = std::min(kMaxCatalogDim, c.max_rows);
        for (int rows = rlo; rows <= rhi; ++rows) {
            int clo = std::max(1, c.min_cols), chi = std::min(kMaxCatalogDim, c.max_cols);
            for (int cols = clo; cols <= chi; ++cols) {
                auto [lo, hi] = bucket(rows, cols);
                for (uint32_t i = lo; i < hi; ++i) {
                    const CatalogEntry& e = entries_[i];
                    if (c.accepts(e.props, e.n_holes, e.n_interior, e.colors)) out.push_back(i);
                }
            }
        }
        return out;
    }

    const CatalogEntry& query_entry(const ObjectConstraints& c, Rng& rng) const {
        std::vector<uint32_t> ids = match(c);
        if (ids.empty()) raise(ErrorCode::NoMatch, "no catalog object satisfies the constraints");
        return entries_[ids[rng.below(static_cast<uint32_t>(ids.size()))]];
    }

    const GridObject& query(const ObjectConstraints& c, Rng& rng) const {
        return query_entry(c, rng).object;
    }

    // Serialized entry payload; also the input of the content hash, so the
    // hash is identical whether the catalog came from memory or from a file.
    std::string entry_bytes() const {
        std::string s;
        for (const CatalogEntry& e : entries_) {
            s.push_back(static_cast<char>(e.props.n_rows));
            s.push_back(static_cast<char>(e.props.n_cols));
            detail::put_u16(s, static_cast<uint16_t>(e.object.size()));
            for (const Cell& c : e.object.cells()) {
                s.push_back(static_cast<char>(c.row));
                s.push_back(static_cast<char>(c.col));
                s.push_back(static_cast<char>(c.color));
            }
            s.push_back(static_cast<char>(e.props.symmetries));
            s.push_back(static_cast<char>(e.props.connectivity));
            s.push_back(static_cast<char>(e.props.color_count));
            s.push_back(static_cast<char>(e.props.color_pattern));
            s.push_back(static_cast<char>(e.props.footprint));
            detail::put_u16(s, e.n_holes);
            detail::put_u16(s, e.n_interior);
            detail::put_u16(s, e.colors);
        }
        return s;
    }

    uint64_t content_hash() const { return fnv1a64(entry_bytes()); }

    void save(const std::string& path) const {
        std::string s = "COGC";
        detail::put_u32(s, kFormatVersion);
        s.push_back(static_cast<char>(config_.max_dim));
        detail::put_u32(s, static_cast<uint32_t>(config_.target_count));
        detail::put_u64(s, config_.seed);
        detail::put_u32(s, static_cast<uint32_t>(entries_.size()));
        s += entry_bytes();
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorCode::IoError, "cannot open " + path + " for writing");
        out.write(s.data(), static_cast<std::streamsize>(s.size()));
        if (!out) raise(ErrorCode::IoError, "write failed: " + path);
    }

    static ObjectCatalog load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) raise(ErrorCode::IoError, "cannot open " + path);
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        detail::ByteReader r(data);
        if (r.u8() != 'C' || r.u8() != 'O' || r.u8() != 'G' || r.u8() != 'C')
            raise(ErrorCode::SchemaError, "not a catalog file: " + path);
        if (r.u32() != kFormatVersion) raise(ErrorCode::SchemaError, "unsupported catalog version");
        ObjectCatalog cat;
        cat.config_.max_dim = r.u8();
        cat.config_.target_count = static_cast<int>(r.u32());
        cat.config_.seed = r.u64();
        uint32_t count = r.u32();
        cat.entries_.reserve(count);
        for (uint32_t i = 0; i < count; ++i) {
            int rows = r.u8(), cols = r.u8();
            uint16_t n = r.u16();
            std::vector<Cell> cells(n);
            for (Cell& c : cells) {
                c.row = r.u8();
                c.col = r.u8();
                c.color = r.u8();
            }
            CatalogEntry e;
            e.object = GridObject::from_cells(std::move(cells));
            e.props.n_rows = rows;
            e.props.n_cols = cols;
            e.props.n_pixels = n;
            e.props.symmetries = r.u8();
            e.props.connectivity = static_cast<Connectivity>(r.u8());
            e.props.color_count = static_cast<ColorCount>(r.u8());
            e.props.color_pattern = static_cast<ColorPattern>(r.u8());
            e.props.footprint = static_cast<Footprint>(r.u8());
            e.n_holes = r.u16();
            e.n_interior = r.u16();
            e.colors = r.u16();
            if (e.object.rows() != rows || e.object.cols() != cols)
                raise(ErrorCode::SchemaError, "catalog entry dims disagree with cells");
            cat.entries_.push_back(std::move(e));
        }
        if (!r.done()) raise(ErrorCode::SchemaError, "trailing bytes in catalog file");
        cat.build_index();
        return cat;
    }

    friend ObjectCatalog generate_catalog(const CatalogConfig& config);

private:
    std::pair<uint32_t, uint32_t> bucket(int rows, int cols) const {
        size_t b = static_cast<size_t>(rows - 1) * kMaxCatalogDim + (cols - 1);
        return {bucket_offsets_[b], bucket_offsets_[b + 1]};
    }

    void build_index() {
        std::sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
            if (a.props.n_rows != b.props.n_rows) return a.props.n_rows < b.props.n_rows;
            if (a.props.n_cols != b.props.n_cols) return a.props.n_cols < b.props.n_cols;
            return a.object.cells() < b.object.cells();
        });
        bucket_offsets_.assign(static_cast<size_t>(kMaxCatalogDim) * kMaxCatalogDim + 1, 0);
        size_t i = 0;
        for (int rows = 1; rows <= kMaxCatalogDim; ++rows)
            for (int cols = 1; cols <= kMaxCatalogDim; ++cols) {
                size_t b = static_cast<size_t>(rows - 1) * kMaxCatalogDim + (cols - 1);
                bucket_offsets_[b] = static_cast<uint32_t>(i);
                while (i < entries_.size() && entries_[i].props.n_rows == rows &&
                       entries_[i].props.n_cols == cols)
                    ++i;
                bucket_offsets_[b + 1] = static_cast<uint32_t>(i);
            }
        bucket_offsets_.back() = static_cast<uint32_t>(entries_.size());
    }

    CatalogConfig config_;
    std::vector<CatalogEntry> entries_;
    std::vector<uint32_t> bucket_offsets_;
};

inline ObjectCatalog generate_catalog(const CatalogConfig& config) {
    if (config.max_dim < 1 || config.max_dim > kMaxCatalogDim)
        raise(ErrorCode::InvalidArgument, "max_dim must be in [1,15]");
    if (config.target_count < 1) raise(ErrorCode::InvalidArgument, "target_count must be >= 1");

    Rng rng(derive_seed(config.seed, 0xca7a106ULL));
    std::vector<detail::ComboTarget> combos = detail::enumerate_combos(config.max_dim);

    ObjectCatalog cat;
    cat.config_ = config;
    std::unordered_set<std::string> seen;
    std::vector<Cell> cells;

    int stale_passes = 0;
    while (static_cast<int>(cat.entries_.size()) < config.target_count && stale_passes < 2) {
        // Fisher-Yates over the combo list keeps category order from biasing
        // which combinations fill first.
        for (size_t i = combos.size(); i > 1; --i)
            std::swap(combos[i - 1], combos[rng.below(static_cast<uint32_t>(i))]);
        size_t added = 0;
        for (const detail::ComboTarget& combo : combos) {
            if (static_cast<int>(cat.entries_.size()) >= config.target_count) break;
            for (int attempt = 0; attempt < 2; ++attempt) {
                std::vector<detail::Pos> mask = detail::build_mask(combo, rng);
                if (mask.empty()) continue;
                if (!detail::paint(combo, mask, rng, cells)) continue;
                GridObject obj = GridObject::from_cells(cells);
                ObjectProperties props = classify(obj);
                if (!detail::verify(props, combo)) continue;
                std::string key = obj.key();
                if (!seen.insert(key).second) continue;
                CatalogEntry e;
                e.n_holes = static_cast<uint16_t>(count_holes(obj));
                e.n_interior = static_cast<uint16_t>(interior_size(obj));
                e.colors = color_mask(obj);
                e.props = props;
                e.object = std::move(obj);
                cat.entries_.push_back(std::move(e));
                ++added;
                break;
            }
        }
        stale_passes = added == 0 ? stale_passes + 1 : 0;
    }

    if (static_cast<int>(cat.entries_.size()) < config.target_count)
        raise(ErrorCode::TargetUnreachable,
              "combination space under max_dim " + std::to_string(config.max_dim) + " yielded only " +
                  std::to_string(cat.entries_.size()) + " distinct objects");

    cat.build_index();
    return cat;
}

} // namespace cogitao

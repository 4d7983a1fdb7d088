#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "cogitao/catalog.hpp"
#include "cogitao/transform.hpp"

using namespace cogitao;

namespace {

const ObjectCatalog& shared_catalog() {
    static ObjectCatalog cat = generate_catalog({8, 3000, 404});
    return cat;
}

GridObject solid_block(int rows, int cols, Color color) {
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) cells.push_back({r, c, color});
    return GridObject::from_cells(cells);
}

GridObject ring(int rows, int cols, Color color) {
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (r == 0 || r == rows - 1 || c == 0 || c == cols - 1) cells.push_back({r, c, color});
    return GridObject::from_cells(cells);
}

// Absolute-position footprint of a transformed object, for oracles that
// reason about where cells land rather than the normalized shape.
std::set<std::tuple<int, int, int>> absolute_cells(const TransformedObject& t) {
    std::set<std::tuple<int, int, int>> out;
    for (const Cell& c : t.object.cells())
        out.insert({c.row + t.anchor_delta.d_row, c.col + t.anchor_delta.d_col, c.color});
    return out;
}

} // namespace

TEST_CASE("exactly 28 non-identity transformations with the published names") {
    CHECK(all_transformations().size() == 28);
    std::set<std::string> names;
    for (Transformation t : all_transformations()) {
        CHECK(t != Transformation::Identity);
        CHECK(names.insert(transformation_name(t)).second);
        CHECK(transformation_from_name(transformation_name(t)) == t);
    }
    CHECK(names.size() == 28);

    std::map<std::string, int> family_counts;
    for (const std::string& n : names) family_counts[n.substr(0, n.find('_'))]++;
    CHECK(family_counts["translate"] == 4);
    CHECK(family_counts["mirror"] == 2);
    CHECK(family_counts["rotate"] == 1);
    CHECK(family_counts["crop"] == 5);
    CHECK(family_counts["change"] == 1);
    CHECK(family_counts["fill"] == 2);
    CHECK(family_counts["empty"] == 1);
    CHECK(family_counts["extend"] == 2);
    CHECK(family_counts["pad"] == 5);
    CHECK(family_counts["duplicate"] == 5);

    CHECK_THROWS_AS(transformation_from_name("translate_up_right"), Error);
}

TEST_CASE("change_object_color applies the mod-9-plus-1 cycle per cell") {
    TransformedObject t = apply(Transformation::ChangeColor, solid_block(2, 2, 7));
    for (const Cell& c : t.object.cells()) CHECK(c.color == 8);
    CHECK(t.anchor_delta == AnchorDelta{0, 0});

    TransformedObject wrap = apply(Transformation::ChangeColor, GridObject::from_cells({{0, 0, 9}}));
    CHECK(wrap.object.cells()[0].color == 1);

    GridObject multi = GridObject::from_cells({{0, 0, 3}, {0, 1, 9}});
    TransformedObject m = apply(Transformation::ChangeColor, multi);
    CHECK(m.object.cells()[0].color == 4);
    CHECK(m.object.cells()[1].color == 1);
}

TEST_CASE("translations keep the cell set and move the anchor one pixel") {
    GridObject o = shared_catalog().entry(17).object;
    CHECK(apply(Transformation::TranslateUp, o) == TransformedObject{o, {-1, 0}});
    CHECK(apply(Transformation::TranslateDown, o) == TransformedObject{o, {1, 0}});
    CHECK(apply(Transformation::TranslateLeft, o) == TransformedObject{o, {0, -1}});
    CHECK(apply(Transformation::TranslateRight, o) == TransformedObject{o, {0, 1}});
}

TEST_CASE("rotate_90 has order four including anchor deltas") {
    for (size_t i = 0; i < shared_catalog().size(); i += 31) {
        GridObject o = shared_catalog().entry(i).object;
        TransformedObject acc{o, {0, 0}};
        for (int k = 0; k < 4; ++k) {
            TransformedObject step = apply(Transformation::Rotate90, acc.object);
            acc.object = step.object;
            acc.anchor_delta.d_row += step.anchor_delta.d_row;
            acc.anchor_delta.d_col += step.anchor_delta.d_col;
        }
        CHECK(acc.object == o);
        CHECK(acc.anchor_delta == AnchorDelta{0, 0});
    }
}

TEST_CASE("rotate_90 turns counter-clockwise about the bbox center") {
    // horizontal bar [A B] becomes a vertical bar with B on top
    GridObject bar = GridObject::from_cells({{0, 0, 1}, {0, 1, 2}});
    TransformedObject t = apply(Transformation::Rotate90, bar);
    CHECK(t.object.rows() == 2);
    CHECK(t.object.cols() == 1);
    CHECK(t.object.cells()[0] == Cell{0, 0, 2});
    CHECK(t.object.cells()[1] == Cell{1, 0, 1});
    // 1x2 -> 2x1: half-cell center offset truncates to a zero delta
    CHECK(t.anchor_delta == AnchorDelta{0, 0});

    // 2x3 -> 3x2 keeps the center exactly
    GridObject block = solid_block(2, 3, 4);
    CHECK(apply(Transformation::Rotate90, block).anchor_delta == AnchorDelta{0, 0});
    GridObject tall = solid_block(4, 2, 4);
    CHECK(apply(Transformation::Rotate90, tall).anchor_delta == AnchorDelta{1, -1});
}

TEST_CASE("empty_inside keeps the contour of a solid block") {
    TransformedObject t = apply(Transformation::EmptyInside, solid_block(3, 3, 4));
    CHECK(t.object == ring(3, 3, 4));
    CHECK(t.anchor_delta == AnchorDelta{0, 0});

    // no interior -> not applicable
    CHECK_THROWS_AS(apply(Transformation::EmptyInside, ring(3, 3, 4)), Error);
    try {
        apply(Transformation::EmptyInside, solid_block(2, 5, 1));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConstraintViolated);
    }
}

TEST_CASE("fill_holes colors hole cells with the majority-derived color") {
    TransformedObject diff = apply(Transformation::FillHolesDifferentColor, ring(3, 3, 4));
    CHECK(diff.object.size() == 9);
    ObjectMask m(diff.object);
    CHECK(m.get(1, 1) == 5);  // 4 mod 9 + 1

    TransformedObject same = apply(Transformation::FillHolesSameColor, ring(3, 3, 4));
    CHECK(same.object == solid_block(3, 3, 4));

    // hole-free object: filling is a no-op mid-sequence
    TransformedObject noop = apply(Transformation::FillHolesSameColor, solid_block(2, 2, 3));
    CHECK(noop.object == solid_block(2, 2, 3));
}

TEST_CASE("empty_inside then fill_holes_same_color restores a solid block, and vice versa") {
    for (int rows = 3; rows <= 5; ++rows)
        for (int cols = 3; cols <= 5; ++cols) {
            GridObject r = ring(rows, cols, 6);
            TransformedObject filled = apply(Transformation::FillHolesSameColor, r);
            CHECK(filled.object == solid_block(rows, cols, 6));
            TransformedObject emptied = apply(Transformation::EmptyInside, filled.object);
            CHECK(emptied.object == r);
            CHECK(emptied.anchor_delta == AnchorDelta{0, 0});
        }
}

// Oracle: brute-force 4-neighborhood dilation over an absolute-coordinate set.
TEST_CASE("extend_contours matches a brute-force dilation") {
    GridObject dot = GridObject::from_cells({{0, 0, 3}});
    TransformedObject t = apply(Transformation::ExtendContoursSameColor, dot);
    CHECK(t.object.size() == 5);
    CHECK(t.anchor_delta == AnchorDelta{-1, -1});
    std::set<std::tuple<int, int, int>> expected = {
        {0, 0, 3}, {-1, 0, 3}, {1, 0, 3}, {0, -1, 3}, {0, 1, 3}};
    CHECK(absolute_cells(t) == expected);

    for (size_t i = 0; i < shared_catalog().size(); i += 53) {
        const GridObject& o = shared_catalog().entry(i).object;
        TransformedObject ext = apply(Transformation::ExtendContoursDifferentColor, o);
        Color fill = cycle_color(majority_color(o));

        std::set<std::pair<int, int>> occ;
        for (const Cell& c : o.cells()) occ.insert({c.row, c.col});
        std::set<std::tuple<int, int, int>> expect;
        for (const Cell& c : o.cells()) expect.insert({c.row, c.col, c.color});
        const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
        for (const Cell& c : o.cells())
            for (int k = 0; k < 4; ++k)
                if (!occ.count({c.row + dr[k], c.col + dc[k]}))
                    expect.insert({c.row + dr[k], c.col + dc[k], fill});
        CHECK(absolute_cells(ext) == expect);
    }
}

TEST_CASE("crop removes the named side and keeps absolute positions") {
    GridObject block = solid_block(3, 2, 9);
    TransformedObject t = apply(Transformation::CropTopSide, block);
    CHECK(t.object == solid_block(2, 2, 9));
    CHECK(t.anchor_delta == AnchorDelta{1, 0});  // surviving cells stay put

    std::set<std::tuple<int, int, int>> expected;
    for (const Cell& c : block.cells())
        if (c.row != 0) expected.insert({c.row, c.col, c.color});
    CHECK(absolute_cells(t) == expected);

    CHECK(apply(Transformation::CropBottomSide, block).anchor_delta == AnchorDelta{0, 0});
    CHECK(apply(Transformation::CropLeftSide, block).anchor_delta == AnchorDelta{0, 1});
    CHECK(apply(Transformation::CropRightSide, block).anchor_delta == AnchorDelta{0, 0});

    CHECK_THROWS_AS(apply(Transformation::CropTopSide, solid_block(1, 3, 2)), Error);
    try {
        apply(Transformation::CropTopSide, solid_block(1, 3, 2));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateResult);
    }
}

TEST_CASE("crop_contours keeps only the interior") {
    TransformedObject t = apply(Transformation::CropContours, solid_block(4, 5, 2));
    CHECK(t.object == solid_block(2, 3, 2));
    CHECK(t.anchor_delta == AnchorDelta{1, 1});
    CHECK_THROWS_AS(apply(Transformation::CropContours, ring(4, 4, 2)), Error);
}

TEST_CASE("pad adds one full line of the pad color flush against the side") {
    GridObject block = solid_block(2, 3, 1);
    TransformedObject top = apply(Transformation::PadTop, block);
    CHECK(top.object.rows() == 3);
    CHECK(top.object.cols() == 3);
    CHECK(top.anchor_delta == AnchorDelta{-1, 0});
    ObjectMask m(top.object);
    for (int c = 0; c < 3; ++c) CHECK(m.get(0, c) == kDefaultPadColor);

    TransformedObject full = apply(Transformation::PadFull, block, 7);
    CHECK(full.object.rows() == 4);
    CHECK(full.object.cols() == 5);
    CHECK(full.anchor_delta == AnchorDelta{-1, -1});
    ObjectMask fm(full.object);
    for (int c = 0; c < 5; ++c) {
        CHECK(fm.get(0, c) == 7);
        CHECK(fm.get(3, c) == 7);
    }
    for (int r = 0; r < 4; ++r) {
        CHECK(fm.get(r, 0) == 7);
        CHECK(fm.get(r, 4) == 7);
    }
    CHECK(full.object.size() == 2 * 3 + 2 * 5 + 2 * 2);
}

// Oracle: each copy coincides with the original under the stacking shift.
TEST_CASE("duplicate stacks a verbatim copy against the named side") {
    GridObject o = GridObject::from_cells({{0, 0, 1}, {0, 1, 2}, {0, 2, 3}, {1, 0, 4}, {1, 1, 5}, {1, 2, 6}});
    TransformedObject t = apply(Transformation::DuplicateTop, o);
    CHECK(t.object.rows() == 4);
    CHECK(t.object.cols() == 3);
    CHECK(t.anchor_delta == AnchorDelta{-2, 0});
    ObjectMask m(t.object);
    for (const Cell& c : o.cells()) {
        CHECK(m.get(c.row, c.col) == c.color);      // copy
        CHECK(m.get(c.row + 2, c.col) == c.color);  // original shifted down in the new frame
    }

    TransformedObject quad = apply(Transformation::DuplicateQuadruple, o);
    CHECK(quad.object.rows() == 4);
    CHECK(quad.object.cols() == 6);
    CHECK(quad.anchor_delta == AnchorDelta{-2, -3});
    CHECK(quad.object.size() == 4 * o.size());
    ObjectMask qm(quad.object);
    for (const Cell& c : o.cells())
        for (int br = 0; br < 2; ++br)
            for (int bc = 0; bc < 2; ++bc) CHECK(qm.get(c.row + 2 * br, c.col + 3 * bc) == c.color);
}

TEST_CASE("identity and inverse pairs") {
    GridObject o = shared_catalog().entry(5).object;
    CHECK(apply(Transformation::Identity, o) == TransformedObject{o, {0, 0}});

    TransformedObject seq = apply_sequence({Transformation::Identity, Transformation::Identity}, o);
    CHECK(seq == TransformedObject{o, {0, 0}});

    TransformedObject updown = apply_sequence({Transformation::TranslateUp, Transformation::TranslateDown}, o);
    CHECK(updown == TransformedObject{o, {0, 0}});
    TransformedObject leftright =
        apply_sequence({Transformation::TranslateLeft, Transformation::TranslateRight}, o);
    CHECK(leftright == TransformedObject{o, {0, 0}});
}

TEST_CASE("algebraic identities over 500 catalog objects") {
    const ObjectCatalog& cat = shared_catalog();
    Rng rng(606);
    ObjectConstraints none;
    for (int i = 0; i < 500; ++i) {
        const CatalogEntry& e = cat.query_entry(none, rng);
        const GridObject& o = e.object;

        CHECK(apply_sequence({Transformation::MirrorHorizontal, Transformation::MirrorHorizontal}, o) ==
              TransformedObject{o, {0, 0}});
        CHECK(apply_sequence({Transformation::MirrorVertical, Transformation::MirrorVertical}, o) ==
              TransformedObject{o, {0, 0}});
        CHECK(apply_sequence({Transformation::Rotate90, Transformation::Rotate90, Transformation::Rotate90,
                              Transformation::Rotate90},
                             o) == TransformedObject{o, {0, 0}});

        if (e.props.color_count == ColorCount::Single) {
            TransformationSequence nine(9, Transformation::ChangeColor);
            CHECK(apply_sequence(nine, o) == TransformedObject{o, {0, 0}});
        }
    }
}

TEST_CASE("equivariant pairs commute on 500 catalog objects") {
    const ObjectCatalog& cat = shared_catalog();
    Rng rng(707);
    ObjectConstraints none;
    auto commutes = [](Transformation a, Transformation b, const GridObject& o) {
        return apply_sequence({a, b}, o) == apply_sequence({b, a}, o);
    };
    for (int i = 0; i < 500; ++i) {
        const GridObject& o = cat.query_entry(none, rng).object;
        CHECK(commutes(Transformation::TranslateUp, Transformation::Rotate90, o));
        CHECK(commutes(Transformation::MirrorHorizontal, Transformation::ExtendContoursDifferentColor, o));
    }
}

TEST_CASE("composition order matters for non-commuting transforms") {
    GridObject block = solid_block(3, 3, 2);
    TransformedObject a = apply_sequence({Transformation::PadTop, Transformation::Rotate90}, block);
    TransformedObject b = apply_sequence({Transformation::Rotate90, Transformation::PadTop}, block);
    CHECK_FALSE(a.object == b.object);
}

// Distinctness of atomic effects: on a generic (asymmetric, multi-colored,
// connected) object no two applicable transformations produce the same
// result. Disconnected objects are excluded: a lone corner cell can be both
// the whole top row and the whole right column, making two crops coincide.
TEST_CASE("atomic transformations are pairwise distinct on generic objects") {
    const ObjectCatalog& cat = shared_catalog();
    ObjectConstraints generic;
    generic.symmetric = false;
    generic.allowed_color_counts = color_count_bit(ColorCount::Multi);
    generic.allowed_connectivity = connectivity_bit(Connectivity::Four);
    generic.min_pixels = 4;
    Rng rng(808);
    for (int i = 0; i < 200; ++i) {
        const GridObject& o = cat.query(generic, rng);
        std::vector<std::pair<Transformation, TransformedObject>> results;
        for (Transformation t : all_transformations()) {
            if (!constraints_of(t).accepts(o)) continue;
            results.push_back({t, apply(t, o)});
        }
        for (size_t a = 0; a < results.size(); ++a)
            for (size_t b = a + 1; b < results.size(); ++b) {
                std::string pair_label = std::string(transformation_name(results[a].first)) + " vs " +
                                         transformation_name(results[b].first);
                INFO(pair_label);
                CHECK_FALSE(results[a].second == results[b].second);
            }
    }
}

TEST_CASE("apply keeps colors in range and objects non-empty") {
    const ObjectCatalog& cat = shared_catalog();
    Rng rng(909);
    ObjectConstraints none;
    for (int i = 0; i < 300; ++i) {
        const GridObject& o = cat.query_entry(none, rng).object;
        for (Transformation t : all_transformations()) {
            if (!constraints_of(t).accepts(o)) continue;
            TransformedObject r = apply(t, o);
            CHECK(r.object.size() >= 1);
            for (const Cell& c : r.object.cells()) {
                CHECK(c.color >= 1);
                CHECK(c.color <= 9);
            }
        }
    }
}

TEST_CASE("pixel count is preserved by the rigid family") {
    const ObjectCatalog& cat = shared_catalog();
    Rng rng(1010);
    ObjectConstraints none;
    for (int i = 0; i < 200; ++i) {
        const GridObject& o = cat.query_entry(none, rng).object;
        for (Transformation t : {Transformation::TranslateUp, Transformation::TranslateDown,
                                 Transformation::TranslateLeft, Transformation::TranslateRight,
                                 Transformation::MirrorHorizontal, Transformation::MirrorVertical,
                                 Transformation::Rotate90, Transformation::ChangeColor})
            CHECK(apply(t, o).object.size() == o.size());
    }
}

TEST_CASE("constraint table") {
    ObjectConstraints fill = constraints_of(Transformation::FillHolesSameColor);
    CHECK(fill.needs_hole);
    CHECK(fill.allowed_connectivity ==
          (connectivity_bit(Connectivity::Four) | connectivity_bit(Connectivity::Eight)));
    CHECK_FALSE(fill.accepts(solid_block(3, 3, 1)));
    CHECK(fill.accepts(ring(3, 3, 1)));

    ObjectConstraints up = constraints_of(Transformation::TranslateUp);
    CHECK(up.accepts(GridObject::from_cells({{0, 0, 1}})));

    ObjectConstraints empty_inside = constraints_of(Transformation::EmptyInside);
    CHECK(empty_inside.min_rows == 3);
    CHECK(empty_inside.min_cols == 3);
    CHECK(empty_inside.needs_interior);
    CHECK_FALSE(empty_inside.accepts(solid_block(2, 4, 1)));
    CHECK(empty_inside.accepts(solid_block(3, 3, 1)));

    ObjectConstraints pad = constraints_of(Transformation::PadTop, 5);
    CHECK_FALSE(pad.accepts(solid_block(2, 2, 5)));
    CHECK(pad.accepts(solid_block(2, 2, 4)));

    CHECK(constraints_of(Transformation::Identity).accepts(GridObject::from_cells({{0, 0, 5}})));
}

TEST_CASE("apply_sequence annotates the failing step") {
    GridObject dot = GridObject::from_cells({{0, 0, 1}});
    try {
        apply_sequence({Transformation::TranslateUp, Transformation::CropTopSide}, dot);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateResult);
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

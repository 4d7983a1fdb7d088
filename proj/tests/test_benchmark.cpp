#include <doctest.h>

#include <set>
#include <unordered_set>

#include "cogitao/benchmark.hpp"

using namespace cogitao;

namespace {

const ObjectCatalog& shared_catalog() {
    static ObjectCatalog cat = generate_catalog({10, 6000, 404});
    return cat;
}

std::set<std::string> names_of(const std::vector<TransformationSequence>& seqs) {
    std::set<std::string> out;
    for (const TransformationSequence& s : seqs) out.insert(sequence_name(s));
    return out;
}

SplitSizes tiny_sizes() { return {24, 6, 6, 6, 6}; }

} // namespace

TEST_CASE("C1-1 holds out translate_up-rotate_90 from atomics plus depth-2") {
    ExperimentSpec spec = build_experiment(Setting::C1, 1);
    CHECK(spec.study == Study::CompGen);
    CHECK(spec.train_sequences.size() == 3 + 9 - 1);
    CHECK(spec.ood_sequences.size() == 1);
    CHECK(sequence_name(spec.ood_sequences[0]) == "translate_up-rotate_90");

    std::set<std::string> train = names_of(spec.train_sequences);
    CHECK(train.count("translate_up"));
    CHECK(train.count("rotate_90"));
    CHECK(train.count("mirror_horizontal"));
    CHECK(train.count("rotate_90-translate_up"));  // the inverse order stays in training
    CHECK(!train.count("translate_up-rotate_90"));

    // CompGen environment: 20x20, 2 objects, <=6x6, 4-connected, both sides
    CHECK(spec.env_train.grid_rows == IntRange{20, 20});
    CHECK(spec.env_train.n_objects == IntRange{2, 2});
    CHECK(spec.env_train.object_constraints.max_rows == 6);
    CHECK(spec.env_train.object_constraints.allowed_connectivity == connectivity_bit(Connectivity::Four));
    CHECK(spec.env_ood.grid_rows == spec.env_train.grid_rows);
    CHECK(spec.env_ood.n_objects == spec.env_train.n_objects);
}

TEST_CASE("C2 trains on composites only") {
    ExperimentSpec spec = build_experiment(Setting::C2, 4);
    CHECK(spec.train_sequences.size() == 9 - 1);
    for (const TransformationSequence& s : spec.train_sequences) CHECK(s.size() == 2);
    CHECK(names_of(spec.ood_sequences) ==
          std::set<std::string>{"mirror_horizontal-extend_contours_different_color"});
    std::set<std::string> train = names_of(spec.train_sequences);
    CHECK(train.count("extend_contours_different_color-mirror_horizontal"));
}

TEST_CASE("C3 tests all 27 depth-3 compositions") {
    ExperimentSpec spec = build_experiment(Setting::C3, 2);
    CHECK(spec.train_sequences.size() == 3 + 9);
    CHECK(spec.ood_sequences.size() == 27);
    std::set<std::string> atoms = {"change_object_color", "pad_right", "fill_holes_different_color"};
    for (const TransformationSequence& s : spec.ood_sequences) {
        CHECK(s.size() == 3);
        for (Transformation t : s) CHECK(atoms.count(transformation_name(t)));
    }
    CHECK(names_of(spec.ood_sequences).size() == 27);
}

TEST_CASE("C1/C2 invariants across all experiments") {
    for (Setting setting : {Setting::C1, Setting::C2})
        for (int idx = 1; idx <= 5; ++idx) {
            ExperimentSpec spec = build_experiment(setting, idx);
            CHECK(spec.ood_sequences.size() == 1);
            std::set<std::string> train = names_of(spec.train_sequences);
            std::set<std::string> ood = names_of(spec.ood_sequences);
            for (const std::string& s : ood) CHECK(!train.count(s));
            // train + ood covers exactly the expected composition set
            size_t expected = setting == Setting::C1 ? 12 : 9;
            CHECK(train.size() + ood.size() == expected);
        }
}

TEST_CASE("G settings transcribe the environment ranges") {
    ExperimentSpec g1 = build_experiment(Setting::G1, 4);
    CHECK(g1.study == Study::EnvGen);
    CHECK(names_of(g1.train_sequences) == std::set<std::string>{"crop_top_side"});
    CHECK(g1.ood_sequences == g1.train_sequences);
    CHECK(g1.env_train.grid_rows == IntRange{15, 15});
    CHECK(g1.env_train.n_objects == IntRange{1, 2});
    CHECK(g1.env_ood.n_objects == IntRange{3, 4});

    ExperimentSpec g2 = build_experiment(Setting::G2, 1);
    CHECK(g2.env_train.grid_rows == IntRange{10, 15});
    CHECK(g2.env_ood.grid_rows == IntRange{16, 20});
    CHECK(g2.env_train.n_objects == IntRange{2, 2});
    CHECK(names_of(g2.train_sequences) == std::set<std::string>{"translate_up"});

    ExperimentSpec g3 = build_experiment(Setting::G3, 5);
    CHECK(g3.env_train.object_constraints.max_rows == 5);
    CHECK(g3.env_ood.object_constraints.min_rows == 6);
    CHECK(g3.env_ood.object_constraints.max_rows == 10);
    CHECK(names_of(g3.train_sequences) == std::set<std::string>{"extend_contours_same_color"});

    ExperimentSpec g4 = build_experiment(Setting::G4, 2);
    CHECK(g4.env_train.object_constraints.symmetric == true);
    CHECK(g4.env_train.object_constraints.allowed_color_counts == color_count_bit(ColorCount::Single));
    CHECK(g4.env_ood.object_constraints.symmetric == false);
    CHECK(g4.env_ood.object_constraints.allowed_color_counts == color_count_bit(ColorCount::Multi));
    CHECK(g4.env_train.grid_rows == IntRange{15, 15});
    CHECK(g4.env_train.object_constraints.max_rows == 5);

    ExperimentSpec g5 = build_experiment(Setting::G5, 3);
    CHECK(g5.env_train.grid_rows == IntRange{10, 15});
    CHECK(g5.env_ood.grid_rows == IntRange{16, 20});
    CHECK(g5.env_train.n_objects == IntRange{1, 2});
    CHECK(g5.env_ood.n_objects == IntRange{3, 4});
    CHECK(g5.env_train.object_constraints.symmetric == true);
    CHECK(g5.env_ood.object_constraints.symmetric == false);
    CHECK(g5.env_ood.object_constraints.min_rows == 6);
}

TEST_CASE("unknown experiments are rejected") {
    CHECK_THROWS_AS(build_experiment(Setting::C1, 0), Error);
    CHECK_THROWS_AS(build_experiment(Setting::G5, 6), Error);
    CHECK_THROWS_AS(setting_from_name("C4"), Error);
    CHECK(setting_from_name("G3") == Setting::G3);
}

TEST_CASE("generate_splits enforces sizes, uniqueness and sequence pools") {
    ExperimentSpec spec = build_experiment(Setting::C1, 1);
    spec.sizes = tiny_sizes();
    DatasetSplits ds = generate_splits(spec, shared_catalog(), 7);

    std::unordered_set<std::string> ledger;
    std::set<std::string> ood_names = names_of(spec.ood_sequences);
    std::set<std::string> train_names = names_of(spec.train_sequences);
    for (size_t split = 0; split < 5; ++split) {
        CHECK(static_cast<int>(ds.splits[split].size()) == spec.sizes[split]);
        bool ood = split == 2 || split == 4;
        for (const TaskSample& s : ds.splits[split]) {
            CHECK(ledger.insert(dedup_key(s.sequence, s.input)).second);
            std::string name = sequence_name(s.sequence);
            if (ood) CHECK(ood_names.count(name));
            else {
                CHECK(train_names.count(name));
                CHECK(!ood_names.count(name));
            }
        }
    }
}

TEST_CASE("generate_splits is deterministic and worker-count invariant") {
    ExperimentSpec spec = build_experiment(Setting::G2, 1);
    spec.sizes = tiny_sizes();
    DatasetSplits a = generate_splits(spec, shared_catalog(), 42, 1);
    DatasetSplits b = generate_splits(spec, shared_catalog(), 42, 4);
    DatasetSplits c = generate_splits(spec, shared_catalog(), 43, 2);
    for (size_t split = 0; split < 5; ++split) {
        REQUIRE(a.splits[split].size() == b.splits[split].size());
        for (size_t i = 0; i < a.splits[split].size(); ++i) {
            CHECK(a.splits[split][i].input == b.splits[split][i].input);
            CHECK(a.splits[split][i].output == b.splits[split][i].output);
            CHECK(a.splits[split][i].sequence == b.splits[split][i].sequence);
        }
    }
    bool differs = false;
    for (size_t i = 0; i < a.splits[0].size() && !differs; ++i)
        differs = !(a.splits[0][i].input == c.splits[0][i].input);
    CHECK(differs);
}

TEST_CASE("G2 splits respect the grid-size ranges") {
    ExperimentSpec spec = build_experiment(Setting::G2, 1);
    spec.sizes = tiny_sizes();
    DatasetSplits ds = generate_splits(spec, shared_catalog(), 11);
    for (size_t split = 0; split < 5; ++split) {
        bool ood = split == 2 || split == 4;
        const GenerationParams& env = ood ? spec.env_ood : spec.env_train;
        for (const TaskSample& s : ds.splits[split]) {
            CHECK(env.grid_rows.contains(s.input.rows()));
            CHECK(env.grid_cols.contains(s.input.cols()));
            CHECK(env.n_objects.contains(static_cast<int>(s.input_objects.size())));
        }
    }
}

TEST_CASE("grid_accuracy padded exact match") {
    auto grid_of = [](int rows, int cols, Color fill) {
        Grid g(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) g.set(r, c, fill);
        return g;
    };

    std::vector<PredictionRecord> targets;
    for (int i = 0; i < 100; ++i)
        targets.push_back({"t" + std::to_string(i), grid_of(3 + i % 4, 4, static_cast<Color>(1 + i % 9))});

    CHECK(grid_accuracy(targets, targets, 20, 20) == 1.0);

    std::vector<PredictionRecord> preds = targets;
    for (int k = 0; k < 3; ++k) {
        Grid g = preds[static_cast<size_t>(k) * 7].grid;
        g.set(0, 0, static_cast<Color>(g.at(0, 0) % 9 + 1));
        preds[static_cast<size_t>(k) * 7].grid = g;
    }
    CHECK(grid_accuracy(preds, targets, 20, 20) == doctest::Approx(0.97));

    // same content, wrong declared size: the padding region cannot match
    std::vector<PredictionRecord> resized = targets;
    Grid bigger(5, 4);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) bigger.set(r, c, targets[0].grid.at(r, c));
    resized[0].grid = bigger;
    CHECK(grid_accuracy(resized, targets, 20, 20) == doctest::Approx(0.99));

    std::vector<PredictionRecord> missing(targets.begin() + 1, targets.end());
    CHECK_THROWS_AS(grid_accuracy(missing, targets, 20, 20), Error);

    CHECK_THROWS_AS(grid_accuracy(targets, targets, 2, 2), Error);
    try {
        grid_accuracy(targets, targets, 2, 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("dedup keys distinguish sequence and grid") {
    Grid g(2, 2);
    g.set(0, 0, 1);
    Grid h = g;
    h.set(1, 1, 2);
    TransformationSequence a = {Transformation::TranslateUp};
    TransformationSequence b = {Transformation::TranslateDown};
    CHECK(dedup_key(a, g) != dedup_key(b, g));
    CHECK(dedup_key(a, g) != dedup_key(a, h));
    CHECK(dedup_key(a, g) == dedup_key(a, g));
}

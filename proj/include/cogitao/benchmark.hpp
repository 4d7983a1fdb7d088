#pragma once

// Benchmark construction: the 40 experiments (C1-1..C3-5, G1-1..G5-5) as
// fully resolved recipes, split generation with cross-split uniqueness
// control, and the exact-match grid-accuracy evaluator.
//
// Split content is a pure function of (experiment, catalog, master seed):
// sample i of split s at retry a is generated from the derived seed
// (master, s, i, a), and the dedup ledger is committed in index order, so the
// output is identical no matter how many worker threads prefetch candidates.

#include <array>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cogitao/catalog.hpp"
#include "cogitao/error.hpp"
#include "cogitao/generator.hpp"

namespace cogitao {

enum class Study { CompGen, EnvGen };
enum class Setting { C1, C2, C3, G1, G2, G3, G4, G5 };

inline const char* study_name(Study s) { return s == Study::CompGen ? "CompGen" : "EnvGen"; }

inline const char* setting_name(Setting s) {
    switch (s) {
        case Setting::C1: return "C1";
        case Setting::C2: return "C2";
        case Setting::C3: return "C3";
        case Setting::G1: return "G1";
        case Setting::G2: return "G2";
        case Setting::G3: return "G3";
        case Setting::G4: return "G4";
        case Setting::G5: return "G5";
    }
    return "?";
}

inline Setting setting_from_name(const std::string& name) {
    for (Setting s : {Setting::C1, Setting::C2, Setting::C3, Setting::G1, Setting::G2, Setting::G3,
                      Setting::G4, Setting::G5})
        if (name == setting_name(s)) return s;
    raise(ErrorCode::UnknownExperiment, "unknown setting: " + name);
}

struct SplitSizes {
    int train = 100000;
    int val_id = 1000;
    int val_ood = 1000;
    int test_id = 1000;
    int test_ood = 1000;

    static SplitSizes full() { return {}; }
    static SplitSizes ci() { return {1000, 100, 100, 100, 100}; }

    int operator[](size_t i) const {
        const int v[5] = {train, val_id, val_ood, test_id, test_ood};
        return v[i];
    }
};

constexpr std::array<const char*, 5> kSplitNames = {"train", "val_id", "val_ood", "test_id", "test_ood"};

struct ExperimentSpec {
    Study study = Study::CompGen;
    Setting setting = Setting::C1;
    int experiment_index = 1;
    std::vector<TransformationSequence> train_sequences;
    std::vector<TransformationSequence> ood_sequences;
    GenerationParams env_train;
    GenerationParams env_ood;
    SplitSizes sizes;

    std::string name() const {
        return std::string(setting_name(setting)) + "-" + std::to_string(experiment_index);
    }
};

namespace detail {

struct CompGenRecipe {
    std::array<Transformation, 3> atomics;
    std::array<Transformation, 2> holdout;
};

inline const CompGenRecipe& compgen_recipe(int index) {
    using T = Transformation;
    static const std::array<CompGenRecipe, 5> recipes = {{
        {{T::TranslateUp, T::Rotate90, T::MirrorHorizontal}, {T::TranslateUp, T::Rotate90}},
        {{T::ChangeColor, T::PadRight, T::FillHolesDifferentColor}, {T::ChangeColor, T::PadRight}},
        {{T::CropBottomSide, T::Rotate90, T::PadTop}, {T::Rotate90, T::CropBottomSide}},
        {{T::ExtendContoursDifferentColor, T::MirrorHorizontal, T::TranslateDown},
         {T::MirrorHorizontal, T::ExtendContoursDifferentColor}},
        {{T::ExtendContoursSameColor, T::MirrorVertical, T::PadLeft},
         {T::PadLeft, T::ExtendContoursSameColor}},
    }};
    return recipes[static_cast<size_t>(index - 1)];
}

inline Transformation envgen_transform(int index) {
    using T = Transformation;
    static const std::array<Transformation, 5> transforms = {
        T::TranslateUp, T::Rotate90, T::MirrorHorizontal, T::CropTopSide, T::ExtendContoursSameColor};
    return transforms[static_cast<size_t>(index - 1)];
}

} // namespace detail

inline ExperimentSpec build_experiment(Setting setting, int experiment_index) {
    if (experiment_index < 1 || experiment_index > 5)
        raise(ErrorCode::UnknownExperiment,
              "experiment index must be 1..5, got " + std::to_string(experiment_index));

    ExperimentSpec spec;
    spec.setting = setting;
    spec.experiment_index = experiment_index;

    bool compgen = setting == Setting::C1 || setting == Setting::C2 || setting == Setting::C3;
    if (compgen) {
        spec.study = Study::CompGen;
        const auto& recipe = detail::compgen_recipe(experiment_index);
        TransformationSequence holdout(recipe.holdout.begin(), recipe.holdout.end());

        std::vector<TransformationSequence> atomics, depth2, depth3;
        for (Transformation a : recipe.atomics) {
            atomics.push_back({a});
            for (Transformation b : recipe.atomics) {
                depth2.push_back({a, b});
                for (Transformation c : recipe.atomics) depth3.push_back({a, b, c});
            }
        }

        if (setting == Setting::C1 || setting == Setting::C2) {
            if (setting == Setting::C1) spec.train_sequences = atomics;
            for (const TransformationSequence& s : depth2)
                if (s != holdout) spec.train_sequences.push_back(s);
            spec.ood_sequences = {holdout};
        } else {  // C3: all atomics + depth-2 in training, every depth-3 held out
            spec.train_sequences = atomics;
            spec.train_sequences.insert(spec.train_sequences.end(), depth2.begin(), depth2.end());
            spec.ood_sequences = depth3;
        }

        GenerationParams env;
        env.grid_rows = {20, 20};
        env.grid_cols = {20, 20};
        env.n_objects = {2, 2};
        env.object_constraints.max_rows = 6;
        env.object_constraints.max_cols = 6;
        env.object_constraints.allowed_connectivity = connectivity_bit(Connectivity::Four);
        env.max_trials = 20000;
        spec.env_train = env;
        spec.env_ood = env;
        return spec;
    }

    spec.study = Study::EnvGen;
    TransformationSequence seq{detail::envgen_transform(experiment_index)};
    spec.train_sequences = {seq};
    spec.ood_sequences = {seq};

    GenerationParams id_env, ood_env;
    switch (setting) {
        case Setting::G1:
            id_env.grid_rows = id_env.grid_cols = {15, 15};
            id_env.n_objects = {1, 2};
            id_env.object_constraints.max_rows = id_env.object_constraints.max_cols = 6;
            ood_env = id_env;
            ood_env.n_objects = {3, 4};
            break;
        case Setting::G2:
            id_env.grid_rows = id_env.grid_cols = {10, 15};
            id_env.n_objects = {2, 2};
            id_env.object_constraints.max_rows = id_env.object_constraints.max_cols = 6;
            ood_env = id_env;
            ood_env.grid_rows = ood_env.grid_cols = {16, 20};
            break;
        case Setting::G3:
            id_env.grid_rows = id_env.grid_cols = {20, 20};
            id_env.n_objects = {2, 2};
            id_env.object_constraints.max_rows = id_env.object_constraints.max_cols = 5;
            ood_env = id_env;
            ood_env.object_constraints.min_rows = ood_env.object_constraints.min_cols = 6;
            ood_env.object_constraints.max_rows = ood_env.object_constraints.max_cols = 10;
            break;
        case Setting::G4:
            id_env.grid_rows = id_env.grid_cols = {15, 15};
            id_env.n_objects = {2, 2};
            id_env.object_constraints.max_rows = id_env.object_constraints.max_cols = 5;
            ood_env = id_env;
            id_env.object_constraints.symmetric = true;
            id_env.object_constraints.allowed_color_counts = color_count_bit(ColorCount::Single);
            ood_env.object_constraints.symmetric = false;
            ood_env.object_constraints.allowed_color_counts = color_count_bit(ColorCount::Multi);
            break;
        case Setting::G5:
            id_env.grid_rows = id_env.grid_cols = {10, 15};
            id_env.n_objects = {1, 2};
            id_env.object_constraints.max_rows = id_env.object_constraints.max_cols = 5;
            id_env.object_constraints.symmetric = true;
            id_env.object_constraints.allowed_color_counts = color_count_bit(ColorCount::Single);
            ood_env.grid_rows = ood_env.grid_cols = {16, 20};
            ood_env.n_objects = {3, 4};
            ood_env.object_constraints.min_rows = ood_env.object_constraints.min_cols = 6;
            ood_env.object_constraints.max_rows = ood_env.object_constraints.max_cols = 10;
            ood_env.object_constraints.symmetric = false;
            ood_env.object_constraints.allowed_color_counts = color_count_bit(ColorCount::Multi);
            break;
        default:
            raise(ErrorCode::UnknownExperiment, "not an EnvGen setting");
    }
    // Crowded OOD environments (G5: 3-4 grown objects on 16-20 grids) may
    // discard hundreds of pairs before one survives; the cap only has to
    // bound the pathological case.
    id_env.max_trials = 20000;
    ood_env.max_trials = 20000;
    spec.env_train = id_env;
    spec.env_ood = ood_env;
    return spec;
}

struct DatasetSplits {
    ExperimentSpec spec;
    uint64_t master_seed = 0;
    uint64_t catalog_hash = 0;
    std::array<std::vector<TaskSample>, 5> splits;
};

inline std::string dedup_key(const TransformationSequence& seq, const Grid& input) {
    return sequence_name(seq) + '\x01' + input.key();
}

namespace detail {

// Parallel candidate prefetch with sequential in-order commit. Workers only
// ever compute candidate(i, attempt=0); retries after a dedup collision are
// recomputed inline by the committer, so results never depend on the worker
// count or on scheduling.
template <typename Fn>
class Prefetcher {
public:
    struct Slot {
        TaskSample sample;
        std::exception_ptr error;
    };

    Prefetcher(size_t n, int workers, Fn fn) : n_(n), fn_(std::move(fn)) {
        int count = std::max(1, workers) - 1;
        window_ = static_cast<size_t>((count + 1)) * 8;
        for (int w = 0; w < count; ++w)
            threads_.emplace_back([this] { work(); });
    }

    ~Prefetcher() {
        {
            std::lock_guard<std::mutex> lk(mu_);
            stop_ = true;
        }
        cv_produce_.notify_all();
        for (std::thread& t : threads_) t.join();
    }

    Slot get(size_t i) {
        std::unique_lock<std::mutex> lk(mu_);
        needed_ = i;
        cv_produce_.notify_all();
        if (threads_.empty()) {
            lk.unlock();
            return compute(i);
        }
        // The committer pitches in instead of idling when workers are behind.
        while (!ready_.count(i)) {
            if (claim_ <= i) {
                size_t mine = claim_++;
                lk.unlock();
                Slot s = compute(mine);
                lk.lock();
                if (mine == i) return s;
                ready_.emplace(mine, std::move(s));
                continue;
            }
            cv_consume_.wait(lk);
        }
        Slot s = std::move(ready_.at(i));
        ready_.erase(i);
        cv_produce_.notify_all();
        return s;
    }

private:
    Slot compute(size_t i) {
        Slot s;
        try {
            s.sample = fn_(i);
        } catch (...) {
            s.error = std::current_exception();
        }
        return s;
    }

    void work() {
        std::unique_lock<std::mutex> lk(mu_);
        for (;;) {
            while (!stop_ && (claim_ >= n_ || claim_ >= needed_ + window_)) cv_produce_.wait(lk);
            if (stop_) return;
            size_t i = claim_++;
            lk.unlock();
            Slot s = compute(i);
            lk.lock();
            ready_.emplace(i, std::move(s));
            cv_consume_.notify_all();
        }
    }

    size_t n_;
    Fn fn_;
    size_t window_;
    std::mutex mu_;
    std::condition_variable cv_produce_, cv_consume_;
    std::map<size_t, Slot> ready_;
    size_t claim_ = 0;
    size_t needed_ = 0;
    bool stop_ = false;
    std::vector<std::thread> threads_;
};

} // namespace detail

inline DatasetSplits generate_splits(const ExperimentSpec& spec, const ObjectCatalog& catalog,
                                     uint64_t master_seed, int workers = 1) {
    if (catalog.size() == 0) raise(ErrorCode::NoMatch, "catalog is empty");

    DatasetSplits out;
    out.spec = spec;
    out.master_seed = master_seed;
    out.catalog_hash = catalog.content_hash();

    TaskGenerator train_gen(catalog, spec.env_train);
    TaskGenerator ood_gen(catalog, spec.env_ood);

    // Resolve every sequence pool up front; afterwards the generators are
    // read-only and safe to share across worker threads.
    for (const TransformationSequence& s : spec.train_sequences) train_gen.warm(s);
    for (const TransformationSequence& s : spec.ood_sequences) ood_gen.warm(s);

    std::unordered_set<std::string> ledger;
    constexpr int kMaxRetries = 1000;

    for (size_t split = 0; split < 5; ++split) {
        bool ood = split == 2 || split == 4;  // val_ood, test_ood
        const TaskGenerator& gen = ood ? ood_gen : train_gen;
        const std::vector<TransformationSequence>& seqs = ood ? spec.ood_sequences : spec.train_sequences;
        size_t count = static_cast<size_t>(spec.sizes[split]);

        auto candidate = [&, split](size_t index, int attempt) {
            Rng rng(derive_seed(master_seed, split, index, static_cast<uint64_t>(attempt)));
            const TransformationSequence& seq = seqs[rng.below(static_cast<uint32_t>(seqs.size()))];
            return gen.generate(seq, rng);
        };

        std::vector<TaskSample>& samples = out.splits[split];
        samples.reserve(count);

        detail::Prefetcher prefetch(count, workers, [&](size_t i) { return candidate(i, 0); });
        for (size_t i = 0; i < count; ++i) {
            auto slot = prefetch.get(i);
            if (slot.error) std::rethrow_exception(slot.error);
            TaskSample sample = std::move(slot.sample);
            int attempt = 0;
            while (!ledger.insert(dedup_key(sample.sequence, sample.input)).second) {
                if (++attempt > kMaxRetries)
                    raise(ErrorCode::ExhaustedUniquePool,
                          "cannot find a unique sample for " + std::string(kSplitNames[split]) +
                              "[" + std::to_string(i) + "]");
                sample = candidate(i, attempt);
            }
            samples.push_back(std::move(sample));
        }
    }
    return out;
}

struct PredictionRecord {
    std::string task_id;
    Grid grid;
};

constexpr Color kPadToken = 10;  // outside the color range, so a wrong declared size never matches

namespace detail {

inline std::vector<Color> pad_grid(const Grid& g, int rows, int cols) {
    if (g.rows() > rows || g.cols() > cols)
        raise(ErrorCode::DimensionMismatch, "grid " + std::to_string(g.rows()) + "x" +
                                                std::to_string(g.cols()) + " exceeds pad_to " +
                                                std::to_string(rows) + "x" + std::to_string(cols));
    std::vector<Color> out(static_cast<size_t>(rows) * cols, kPadToken);
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) out[static_cast<size_t>(r) * cols + c] = g.at(r, c);
    return out;
}

} // namespace detail

inline double grid_accuracy(const std::vector<PredictionRecord>& predictions,
                            const std::vector<PredictionRecord>& targets, int pad_rows, int pad_cols) {
    if (targets.empty()) raise(ErrorCode::InvalidArgument, "no targets to evaluate");
    std::unordered_map<std::string, const Grid*> by_id;
    for (const PredictionRecord& p : predictions) by_id[p.task_id] = &p.grid;
    size_t correct = 0;
    for (const PredictionRecord& t : targets) {
        auto it = by_id.find(t.task_id);
        if (it == by_id.end())
            raise(ErrorCode::MissingPrediction, "no prediction for task " + t.task_id);
        if (detail::pad_grid(*it->second, pad_rows, pad_cols) ==
            detail::pad_grid(t.grid, pad_rows, pad_cols))
            ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(targets.size());
}

} // namespace cogitao

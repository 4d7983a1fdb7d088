#pragma once

// End-to-end task generation: sample a transformation sequence, set up an
// initial scene, apply the sequence to every object with bounds/collision
// checking, and emit the task. Any placement or applicability failure
// discards the whole input-output pair and generation restarts with fresh
// draws, up to max_trials.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cogitao/catalog.hpp"
#include "cogitao/constraints.hpp"
#include "cogitao/error.hpp"
#include "cogitao/grid.hpp"
#include "cogitao/object.hpp"
#include "cogitao/rng.hpp"
#include "cogitao/transform.hpp"

namespace cogitao {

constexpr int kTaskCodeDepth = 4;

struct IntRange {
    int lo = 1;
    int hi = 1;

    IntRange() = default;
    IntRange(int v) : lo(v), hi(v) {}
    IntRange(int l, int h) : lo(l), hi(h) {}

    bool contains(int v) const { return v >= lo && v <= hi; }

    friend bool operator==(const IntRange& a, const IntRange& b) { return a.lo == b.lo && a.hi == b.hi; }
};

struct GenerationParams {
    IntRange grid_rows{20, 20};
    IntRange grid_cols{20, 20};
    IntRange n_objects{2, 2};
    ObjectConstraints object_constraints;
    Color pad_color = kDefaultPadColor;
    int max_trials = 1000;
    int anchor_budget = 200;  // per-object rejection budget inside one trial
    int wanted_examples = 1;

    void validate() const {
        if (grid_rows.lo < 1 || grid_rows.hi > kMaxGridDim || grid_rows.lo > grid_rows.hi ||
            grid_cols.lo < 1 || grid_cols.hi > kMaxGridDim || grid_cols.lo > grid_cols.hi)
            raise(ErrorCode::DimensionOutOfRange, "grid ranges must be non-empty within [1,30]");
        if (n_objects.lo < 1 || n_objects.lo > n_objects.hi)
            raise(ErrorCode::InvalidArgument, "object count range must be non-empty and >= 1");
        if (max_trials < 1) raise(ErrorCode::InvalidArgument, "max_trials must be >= 1");
        if (wanted_examples < 1) raise(ErrorCode::InvalidArgument, "wanted_examples must be >= 1");
        if (pad_color < 1 || pad_color > 9)
            raise(ErrorCode::InvalidArgument, "pad_color must be in [1,9]");
    }
};

struct Scene {
    Grid grid;
    std::vector<PlacedObject> placed;
};

struct TaskSample {
    Grid input;
    Grid output;
    TransformationSequence sequence;
    std::vector<std::string> task_code;  // length 4, identity-padded
    uint64_t seed_trace = 0;             // replaying this seed reproduces the sample
    std::vector<PlacedObject> input_objects;
};

inline std::vector<std::string> task_code(const TransformationSequence& seq) {
    if (seq.size() > kTaskCodeDepth)
        raise(ErrorCode::DepthExceeded, "task codes cover depth <= 4, got " + std::to_string(seq.size()));
    if (seq.empty()) raise(ErrorCode::InvalidArgument, "sequence depth must be >= 1");
    std::vector<std::string> code;
    code.reserve(kTaskCodeDepth);
    for (Transformation t : seq) code.push_back(transformation_name(t));
    while (code.size() < kTaskCodeDepth) code.push_back("identity");
    return code;
}

inline TransformationSequence sample_transformations(const std::vector<Transformation>& pool,
                                                     int depth, Rng& rng) {
    if (pool.empty()) raise(ErrorCode::InvalidArgument, "transformation pool is empty");
    if (depth < 1) raise(ErrorCode::InvalidArgument, "depth must be >= 1");
    TransformationSequence seq;
    seq.reserve(static_cast<size_t>(depth));
    for (int i = 0; i < depth; ++i)
        seq.push_back(pool[rng.below(static_cast<uint32_t>(pool.size()))]);
    return seq;
}

// Minimal unsigned big integer: enough for exact n^k task-space counts.
class BigUint {
public:
    BigUint(uint64_t v = 0) {
        while (v) {
            digits_.push_back(static_cast<uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    BigUint& operator*=(uint32_t m) {
        uint64_t carry = 0;
        for (uint32_t& d : digits_) {
            uint64_t cur = static_cast<uint64_t>(d) * m + carry;
            d = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) {
            digits_.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
        return *this;
    }

    std::string to_string() const {
        if (digits_.empty()) return "0";
        std::string s = std::to_string(digits_.back());
        for (size_t i = digits_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(digits_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.digits_ == b.digits_; }
    friend bool operator==(const BigUint& a, uint64_t v) { return a == BigUint(v); }

private:
    static constexpr uint32_t kBase = 1000000000;
    std::vector<uint32_t> digits_;  // little-endian base 1e9
};

inline BigUint task_space_size(int n_transforms, int depth) {
    if (n_transforms < 1 || depth < 1)
        raise(ErrorCode::InvalidArgument, "task_space_size needs n >= 1 and k >= 1");
    BigUint n(1);
    for (int i = 0; i < depth; ++i) n *= static_cast<uint32_t>(n_transforms);
    return n;
}

namespace detail {

inline bool restartable(ErrorCode c) {
    return c == ErrorCode::PlacementFailed || c == ErrorCode::OutOfBounds ||
           c == ErrorCode::Overlap || c == ErrorCode::TouchViolation ||
           c == ErrorCode::ConstraintViolated || c == ErrorCode::DegenerateResult;
}

} // namespace detail

// Removes the object from the grid, applies the transformation, and re-places
// it at anchor + anchor_delta. Post-transform placement allows adjacency but
// never overlap; bounds and collisions signal "discard this sample".
inline Scene transform_and_position(const Scene& scene, size_t object_index, Transformation t,
                                    Color pad_color = kDefaultPadColor) {
    if (object_index >= scene.placed.size())
        raise(ErrorCode::InvalidArgument, "object index out of range");
    Scene out = scene;
    PlacedObject& po = out.placed[object_index];
    erase(out.grid, po.object, po.anchor);
    TransformedObject tr = apply(t, po.object, pad_color);
    Anchor anchor{po.anchor.row + tr.anchor_delta.d_row, po.anchor.col + tr.anchor_delta.d_col};
    switch (placement_status(out.grid, tr.object, anchor, PlacementMode::PostTransform)) {
        case PlaceStatus::OutOfBounds:
            raise(ErrorCode::OutOfBounds, "transformed object leaves the grid");
        case PlaceStatus::Overlap:
            raise(ErrorCode::Overlap, "transformed object collides with another object");
        default:
            break;
    }
    stamp(out.grid, tr.object, anchor);
    po = {std::move(tr.object), anchor};
    return out;
}

// Caches the catalog indices matching each merged constraint set, so dataset
// builders do not rescan the catalog for every sample.
class TaskGenerator {
public:
    TaskGenerator(const ObjectCatalog& catalog, GenerationParams params)
        : catalog_(catalog), params_(std::move(params)) {
        params_.validate();
    }

    const GenerationParams& params() const { return params_; }

    // One full trial from an explicit seed; replaying the seed_trace of a
    // sample goes through here and must reproduce it bit for bit.
    TaskSample run_trial(const TransformationSequence& seq, uint64_t trial_seed) const {
        Rng rng(trial_seed);
        Scene scene = initial_scene(seq, rng);
        TaskSample sample;
        sample.input = scene.grid;
        sample.input_objects = scene.placed;
        for (size_t i = 0; i < scene.placed.size(); ++i)
            for (Transformation t : seq)
                scene = transform_and_position(scene, i, t, params_.pad_color);
        sample.output = std::move(scene.grid);
        sample.sequence = seq;
        sample.task_code = task_code(seq);
        sample.seed_trace = trial_seed;
        return sample;
    }

    TaskSample generate(const TransformationSequence& seq, Rng& rng) const {
        for (int trial = 0; trial < params_.max_trials; ++trial) {
            uint64_t trial_seed = rng.next_u64();
            try {
                return run_trial(seq, trial_seed);
            } catch (const Error& e) {
                if (!detail::restartable(e.code())) throw;
            }
        }
        raise(ErrorCode::MaxTrialsExceeded,
              "no valid sample for '" + sequence_name(seq) + "' within " +
                  std::to_string(params_.max_trials) + " trials");
    }

    Scene initial_scene(const TransformationSequence& seq, Rng& rng) const {
        const std::vector<uint32_t>& pool = pool_for(seq);
        if (pool.empty())
            raise(ErrorCode::NoMatch, "no catalog object satisfies the merged constraints of '" +
                                          sequence_name(seq) + "'");
        int rows = rng.range(params_.grid_rows.lo, params_.grid_rows.hi);
        int cols = rng.range(params_.grid_cols.lo, params_.grid_cols.hi);
        int count = rng.range(params_.n_objects.lo, params_.n_objects.hi);

        Scene scene{Grid(rows, cols), {}};
        scene.placed.reserve(static_cast<size_t>(count));
        // Per slot: draw an object, try a handful of anchors, redraw when
        // none fits. Redrawing keeps crowded scenes placeable (a too-large
        // draw gets replaced instead of sinking the whole trial).
        const int anchor_tries = 32;
        for (int i = 0; i < count; ++i) {
            bool placed = false;
            for (int draw = 0; draw < params_.anchor_budget && !placed; ++draw) {
                const CatalogEntry& e = catalog_.entry(pool[rng.below(static_cast<uint32_t>(pool.size()))]);
                if (e.props.n_rows > rows || e.props.n_cols > cols) continue;
                for (int attempt = 0; attempt < anchor_tries; ++attempt) {
                    Anchor a{static_cast<int>(rng.below(static_cast<uint32_t>(rows - e.props.n_rows + 1))),
                             static_cast<int>(rng.below(static_cast<uint32_t>(cols - e.props.n_cols + 1)))};
                    if (placement_status(scene.grid, e.object, a, PlacementMode::Initial) == PlaceStatus::Ok) {
                        stamp(scene.grid, e.object, a);
                        scene.placed.push_back({e.object, a});
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed)
                raise(ErrorCode::PlacementFailed,
                      "no legal placement for object " + std::to_string(i) + " within budget");
        }
        return scene;
    }

    ObjectConstraints merged_constraints(const TransformationSequence& seq) const {
        ObjectConstraints merged = params_.object_constraints;
        for (Transformation t : seq) merged = merge(merged, constraints_of(t, params_.pad_color));
        return merged;
    }

    // Resolves and caches the candidate pool for a sequence. Call for every
    // sequence before sharing the generator across threads; afterwards the
    // cache is read-only.
    void warm(const TransformationSequence& seq) const { pool_for(seq); }

private:
    const std::vector<uint32_t>& pool_for(const TransformationSequence& seq) const {
        std::string key = sequence_name(seq);
        auto it = pools_.find(key);
        if (it == pools_.end())
            it = pools_.emplace(std::move(key), catalog_.match(merged_constraints(seq))).first;
        return it->second;
    }

    const ObjectCatalog& catalog_;
    GenerationParams params_;
    mutable std::map<std::string, std::vector<uint32_t>> pools_;
};

inline Scene set_initial_grid(const GenerationParams& params, const TransformationSequence& seq,
                              const ObjectCatalog& catalog, Rng& rng) {
    return TaskGenerator(catalog, params).initial_scene(seq, rng);
}

inline TaskSample generate_task(const GenerationParams& params, const TransformationSequence& seq,
                                const ObjectCatalog& catalog, Rng& rng) {
    return TaskGenerator(catalog, params).generate(seq, rng);
}

// The paper-throughput configuration: 20x20 grid, 4 objects smaller than 6x6,
// random depth-2 sequences over the full transformation pool.
struct ThroughputReport {
    int samples = 0;
    int failures = 0;   // MaxTrialsExceeded sequences, counted but not fatal
    double mean_ms = 0;
    double stddev_ms = 0;
};

inline ThroughputReport measure_throughput(const ObjectCatalog& catalog, int samples, uint64_t seed) {
    GenerationParams params;
    params.grid_rows = {20, 20};
    params.grid_cols = {20, 20};
    params.n_objects = {4, 4};
    params.object_constraints.max_rows = 5;
    params.object_constraints.max_cols = 5;
    TaskGenerator gen(catalog, params);
    std::vector<Transformation> pool(all_transformations().begin(), all_transformations().end());
    Rng rng(derive_seed(seed, 0x7157a75ULL));

    // Warm pools and caches outside the timed region.
    for (int i = 0; i < 8; ++i) {
        TransformationSequence seq = sample_transformations(pool, 2, rng);
        try {
            gen.generate(seq, rng);
        } catch (const Error&) {
        }
    }

    ThroughputReport rep;
    rep.samples = samples;
    std::vector<double> times_ms;
    times_ms.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        TransformationSequence seq = sample_transformations(pool, 2, rng);
        auto start = std::chrono::steady_clock::now();
        try {
            gen.generate(seq, rng);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::MaxTrialsExceeded) throw;
            ++rep.failures;
        }
        auto end = std::chrono::steady_clock::now();
        times_ms.push_back(std::chrono::duration<double, std::milli>(end - start).count());
    }
    double sum = 0;
    for (double v : times_ms) sum += v;
    rep.mean_ms = sum / samples;
    double var = 0;
    for (double v : times_ms) var += (v - rep.mean_ms) * (v - rep.mean_ms);
    rep.stddev_ms = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
    return rep;
}

} // namespace cogitao

// Command-line front end: catalog building, ad-hoc task generation, benchmark
// dataset construction, rendering, evaluation, and the throughput stat.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cogitao/benchmark.hpp"
#include "cogitao/catalog.hpp"
#include "cogitao/generator.hpp"
#include "cogitao/io.hpp"

namespace {

using namespace cogitao;

uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("COGITAO_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            raise(ErrorCode::InvalidArgument, "COGITAO_SEED is not an integer");
        }
    }
    return 0;
}

IntRange parse_range(const std::string& text, const char* flag) {
    size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        raise(ErrorCode::InvalidArgument, std::string(flag) + ": expected N or N:M, got " + text);
    }
}

// "RxC" or "RxC:RxC" (a dimension range).
void parse_grid_spec(const std::string& text, IntRange& rows, IntRange& cols) {
    auto parse_dims = [](const std::string& part) {
        size_t x = part.find('x');
        if (x == std::string::npos)
            raise(ErrorCode::InvalidArgument, "--grid: expected RxC, got " + part);
        return std::pair<int, int>{std::stoi(part.substr(0, x)), std::stoi(part.substr(x + 1))};
    };
    size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            auto [r, c] = parse_dims(text);
            rows = {r, r};
            cols = {c, c};
        } else {
            auto [r1, c1] = parse_dims(text.substr(0, colon));
            auto [r2, c2] = parse_dims(text.substr(colon + 1));
            rows = {r1, r2};
            cols = {c1, c2};
        }
    } catch (const std::exception&) {
        raise(ErrorCode::InvalidArgument, "--grid: expected RxC or RxC:RxC, got " + text);
    }
}

ObjectCatalog obtain_catalog(const std::string& path, uint64_t fallback_seed) {
    if (!path.empty()) return ObjectCatalog::load(path);
    // No file given: build the default catalog in memory. Slower per run but
    // keeps every command usable standalone.
    CatalogConfig cfg;
    cfg.seed = fallback_seed;
    std::cerr << "note: no --catalog given, generating the default 23000-object catalog in memory\n";
    return generate_catalog(cfg);
}

int run(int argc, char** argv) {
    CLI::App app{"COGITAO-style grid-transformation task generator"};
    app.require_subcommand(1);

    // --- catalog build -----------------------------------------------------
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "object catalog commands");
    catalog_cmd->require_subcommand(1);
    CLI::App* catalog_build = catalog_cmd->add_subcommand("build", "pre-generate the object catalog");
    int cat_max_dim = kMaxCatalogDim;
    int cat_count = 23000;
    std::optional<uint64_t> cat_seed;
    std::string cat_out;
    catalog_build->add_option("--max-dim", cat_max_dim, "max object dimension")->check(CLI::Range(1, 15));
    catalog_build->add_option("--count", cat_count, "target object count");
    catalog_build->add_option("--seed", cat_seed, "catalog seed");
    catalog_build->add_option("--out", cat_out, "output file")->required();

    // --- gen ----------------------------------------------------------------
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate samples for an explicit sequence");
    std::string gen_grid = "20x20";
    std::string gen_objects = "2";
    std::string gen_transforms;
    int gen_n = 1;
    std::optional<uint64_t> gen_seed;
    std::string gen_out, gen_catalog;
    int gen_pad = kDefaultPadColor;
    gen_cmd->add_option("--grid", gen_grid, "grid dims RxC or range RxC:RxC");
    gen_cmd->add_option("--objects", gen_objects, "object count N or range N:M");
    gen_cmd->add_option("--transforms", gen_transforms, "comma-separated transformation names")->required();
    gen_cmd->add_option("--n", gen_n, "number of samples")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_seed, "seed");
    gen_cmd->add_option("--out", gen_out, "output JSONL file")->required();
    gen_cmd->add_option("--catalog", gen_catalog, "catalog file (built once, reused)");
    gen_cmd->add_option("--pad-color", gen_pad, "pad color")->check(CLI::Range(1, 9));

    // --- bench build ---------------------------------------------------------
    CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark dataset commands");
    bench_cmd->require_subcommand(1);
    CLI::App* bench_build = bench_cmd->add_subcommand("build", "materialize one benchmark experiment");
    std::string bench_setting;
    int bench_experiment = 1;
    std::optional<uint64_t> bench_seed;
    std::string bench_out_dir, bench_catalog;
    std::string bench_scale = "full";
    int bench_workers = 1;
    bench_build->add_option("--setting", bench_setting, "C1|C2|C3|G1|G2|G3|G4|G5")
        ->required()
        ->check(CLI::IsMember({"C1", "C2", "C3", "G1", "G2", "G3", "G4", "G5"}));
    bench_build->add_option("--experiment", bench_experiment, "experiment index 1..5")
        ->check(CLI::Range(1, 5));
    bench_build->add_option("--seed", bench_seed, "master seed");
    bench_build->add_option("--out-dir", bench_out_dir, "output directory")->required();
    bench_build->add_option("--catalog", bench_catalog, "catalog file");
    bench_build->add_option("--scale", bench_scale, "split sizes: full (100000/1000x4) or ci (1000/100x4)")
        ->check(CLI::IsMember({"full", "ci"}));
    bench_build->add_option("--workers", bench_workers, "worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);

    // --- render ---------------------------------------------------------------
    CLI::App* render_cmd = app.add_subcommand("render", "render one sample grid");
    std::string render_in, render_format = "ansi", render_out, render_which = "output";
    int render_index = 0, render_cell = 10;
    render_cmd->add_option("--in", render_in, "JSONL file")->required();
    render_cmd->add_option("--index", render_index, "record index");
    render_cmd->add_option("--format", render_format, "ansi|ppm|svg")
        ->check(CLI::IsMember({"ansi", "ppm", "svg"}));
    render_cmd->add_option("--which", render_which, "input|output")
        ->check(CLI::IsMember({"input", "output"}));
    render_cmd->add_option("--out", render_out, "output file (default stdout)");
    render_cmd->add_option("--cell-size", render_cell, "pixels per cell (ppm/svg)")->check(CLI::PositiveNumber);

    // --- eval -----------------------------------------------------------------
    CLI::App* eval_cmd = app.add_subcommand("eval", "exact-match grid accuracy");
    std::string eval_pred, eval_target, eval_pad;
    eval_cmd->add_option("--pred", eval_pred, "predictions JSONL (task_id + output)")->required();
    eval_cmd->add_option("--target", eval_target, "target JSONL")->required();
    eval_cmd->add_option("--pad-to", eval_pad, "pad dims RxC (default: max dims observed)");

    // --- stats ------------------------------------------------------------------
    CLI::App* stats_cmd = app.add_subcommand("stats", "generator statistics");
    std::string stats_preset = "paper-throughput";
    int stats_samples = 200;
    std::optional<uint64_t> stats_seed;
    std::string stats_catalog;
    stats_cmd->add_option("--preset", stats_preset, "preset name")
        ->check(CLI::IsMember({"paper-throughput"}));
    stats_cmd->add_option("--samples", stats_samples, "timed samples")->check(CLI::PositiveNumber);
    stats_cmd->add_option("--seed", stats_seed, "seed");
    stats_cmd->add_option("--catalog", stats_catalog, "catalog file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*catalog_build) {
        CatalogConfig cfg{cat_max_dim, cat_count, resolve_seed(cat_seed)};
        ObjectCatalog cat = generate_catalog(cfg);
        cat.save(cat_out);
        std::printf("catalog: %zu objects (max-dim %d, seed %llu) -> %s\n", cat.size(), cfg.max_dim,
                    static_cast<unsigned long long>(cfg.seed), cat_out.c_str());
        return 0;
    }

    if (*gen_cmd) {
        uint64_t seed = resolve_seed(gen_seed);
        GenerationParams params;
        parse_grid_spec(gen_grid, params.grid_rows, params.grid_cols);
        params.n_objects = parse_range(gen_objects, "--objects");
        params.pad_color = static_cast<Color>(gen_pad);
        params.wanted_examples = gen_n;
        TransformationSequence seq;
        std::stringstream ss(gen_transforms);
        std::string name;
        while (std::getline(ss, name, ',')) seq.push_back(transformation_from_name(name));
        if (seq.empty()) raise(ErrorCode::InvalidArgument, "--transforms must name at least one transformation");

        ObjectCatalog cat = obtain_catalog(gen_catalog, 0);
        TaskGenerator gen(cat, params);
        Rng rng(derive_seed(seed, 0x9e2ULL));
        std::vector<TaskRecord> records;
        char id[32];
        for (int i = 0; i < gen_n; ++i) {
            std::snprintf(id, sizeof(id), "sample-%06d", i);
            records.push_back(to_record(gen.generate(seq, rng), id));
        }
        write_jsonl(records, gen_out);
        std::printf("wrote %d samples of '%s' -> %s\n", gen_n, sequence_name(seq).c_str(), gen_out.c_str());
        return 0;
    }

    if (*bench_build) {
        uint64_t seed = resolve_seed(bench_seed);
        ExperimentSpec spec = build_experiment(setting_from_name(bench_setting), bench_experiment);
        spec.sizes = bench_scale == "ci" ? SplitSizes::ci() : SplitSizes::full();
        ObjectCatalog cat = obtain_catalog(bench_catalog, 0);
        DatasetSplits splits = generate_splits(spec, cat, seed, bench_workers);
        write_dataset(splits, bench_out_dir);
        std::printf("%s: %d/%d/%d/%d/%d samples -> %s\n", spec.name().c_str(), spec.sizes.train,
                    spec.sizes.val_id, spec.sizes.val_ood, spec.sizes.test_id, spec.sizes.test_ood,
                    bench_out_dir.c_str());
        return 0;
    }

    if (*render_cmd) {
        std::vector<TaskRecord> records = read_jsonl(render_in);
        if (render_index < 0 || static_cast<size_t>(render_index) >= records.size())
            raise(ErrorCode::InvalidArgument, "--index out of range (file has " +
                                                  std::to_string(records.size()) + " records)");
        const TaskRecord& rec = records[static_cast<size_t>(render_index)];
        const Grid& grid = render_which == "input" ? rec.input : rec.output;
        std::string bytes = render(grid, render_format_from_name(render_format), render_cell);
        if (render_out.empty()) {
            std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        } else {
            std::ofstream out(render_out, std::ios::binary | std::ios::trunc);
            if (!out) raise(ErrorCode::IoError, "cannot open " + render_out);
            out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        }
        return 0;
    }

    if (*eval_cmd) {
        std::vector<PredictionRecord> preds = read_predictions(eval_pred);
        std::vector<TaskRecord> target_records = read_jsonl(eval_target);
        std::vector<PredictionRecord> targets;
        targets.reserve(target_records.size());
        int pad_rows = 0, pad_cols = 0;
        for (const TaskRecord& r : target_records) {
            targets.push_back({r.task_id, r.output});
            pad_rows = std::max(pad_rows, r.grid_rows);
            pad_cols = std::max(pad_cols, r.grid_cols);
        }
        for (const PredictionRecord& p : preds) {
            pad_rows = std::max(pad_rows, p.grid.rows());
            pad_cols = std::max(pad_cols, p.grid.cols());
        }
        if (!eval_pad.empty()) {
            IntRange rows, cols;
            parse_grid_spec(eval_pad, rows, cols);
            pad_rows = rows.lo;
            pad_cols = cols.lo;
        }
        double acc = grid_accuracy(preds, targets, pad_rows, pad_cols);
        std::printf("%.3f\n", acc);
        return 0;
    }

    if (*stats_cmd) {
        ObjectCatalog cat = [&] {
            if (!stats_catalog.empty()) return ObjectCatalog::load(stats_catalog);
            // Throughput only needs objects that fit the preset's 5x5 cap;
            // a small catalog keeps setup time out of the way.
            CatalogConfig cfg{5, 4000, resolve_seed(stats_seed)};
            return generate_catalog(cfg);
        }();
        ThroughputReport rep = measure_throughput(cat, stats_samples, resolve_seed(stats_seed));
        std::printf("paper-throughput: %d samples on a 20x20 grid, 4 objects < 6x6, depth 2\n",
                    rep.samples);
        std::printf("mean %.3f ms +- %.3f ms per input-output pair (%d unsatisfiable sequences)\n",
                    rep.mean_ms, rep.stddev_ms, rep.failures);
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cogitao::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

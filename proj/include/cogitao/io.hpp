#pragma once

// Serialization (JSONL task records + dataset manifest) and grid rendering.
// Record writing is hand-rolled so the byte layout is canonical: fixed key
// order, no whitespace, one record per line. Reading goes through a JSON
// parser and validates the schema strictly.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cogitao/benchmark.hpp"
#include "cogitao/error.hpp"
#include "cogitao/grid.hpp"

namespace cogitao {

constexpr const char* kGeneratorName = "cogitao";
constexpr const char* kGeneratorVersion = "0.1.0";
constexpr int kDatasetFormatVersion = 1;

struct TaskRecord {
    std::string task_id;
    std::vector<std::string> transformations;
    std::vector<std::string> task_code;
    int grid_rows = 0;
    int grid_cols = 0;
    Grid input;
    Grid output;

    friend bool operator==(const TaskRecord& a, const TaskRecord& b) {
        return a.task_id == b.task_id && a.transformations == b.transformations &&
               a.task_code == b.task_code && a.grid_rows == b.grid_rows &&
               a.grid_cols == b.grid_cols && a.input == b.input && a.output == b.output;
    }
};

inline TaskRecord to_record(const TaskSample& sample, std::string task_id) {
    TaskRecord r;
    r.task_id = std::move(task_id);
    for (Transformation t : sample.sequence) r.transformations.push_back(transformation_name(t));
    r.task_code = sample.task_code;
    r.grid_rows = sample.input.rows();
    r.grid_cols = sample.input.cols();
    r.input = sample.input;
    r.output = sample.output;
    return r;
}

namespace detail {

inline void append_escaped(std::string& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20)
                    raise(ErrorCode::SchemaError, "control character in string field");
                out += c;
        }
    }
}

inline void append_grid(std::string& out, const Grid& g) {
    out += '[';
    for (int r = 0; r < g.rows(); ++r) {
        if (r) out += ',';
        out += '[';
        for (int c = 0; c < g.cols(); ++c) {
            if (c) out += ',';
            out += static_cast<char>('0' + g.at(r, c));
        }
        out += ']';
    }
    out += ']';
}

inline Grid parse_grid(const nlohmann::json& j, const char* field) {
    if (!j.is_array() || j.empty()) raise(ErrorCode::SchemaError, std::string(field) + " must be a non-empty 2D array");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty())
        raise(ErrorCode::SchemaError, std::string(field) + " rows must be non-empty arrays");
    int cols = static_cast<int>(j[0].size());
    if (rows > kMaxGridDim || cols > kMaxGridDim)
        raise(ErrorCode::SchemaError, std::string(field) + " exceeds the grid dimension cap");
    Grid g(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const nlohmann::json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            raise(ErrorCode::SchemaError, std::string(field) + " is not rectangular");
        for (int c = 0; c < cols; ++c) {
            const nlohmann::json& v = row[static_cast<size_t>(c)];
            if (!v.is_number_integer())
                raise(ErrorCode::SchemaError, std::string(field) + " cells must be integers");
            int64_t cell = v.get<int64_t>();
            if (cell < 0 || cell > 9)
                raise(ErrorCode::SchemaError, std::string(field) + " cell value out of range [0,9]");
            g.set(r, c, static_cast<Color>(cell));
        }
    }
    return g;
}

} // namespace detail

inline std::string record_line(const TaskRecord& r) {
    std::string s = "{\"task_id\":\"";
    detail::append_escaped(s, r.task_id);
    s += "\",\"transformations\":[";
    for (size_t i = 0; i < r.transformations.size(); ++i) {
        if (i) s += ',';
        s += '"';
        detail::append_escaped(s, r.transformations[i]);
        s += '"';
    }
    s += "],\"task_code\":[";
    for (size_t i = 0; i < r.task_code.size(); ++i) {
        if (i) s += ',';
        s += '"';
        detail::append_escaped(s, r.task_code[i]);
        s += '"';
    }
    s += "],\"grid_size\":[" + std::to_string(r.grid_rows) + "," + std::to_string(r.grid_cols) + "]";
    s += ",\"input\":";
    detail::append_grid(s, r.input);
    s += ",\"output\":";
    detail::append_grid(s, r.output);
    s += "}";
    return s;
}

inline void write_jsonl(const std::vector<TaskRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::IoError, "cannot open " + path + " for writing");
    for (const TaskRecord& r : records) out << record_line(r) << '\n';
    if (!out) raise(ErrorCode::IoError, "write failed: " + path);
}

inline TaskRecord parse_record(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) raise(ErrorCode::SchemaError, "record must be a JSON object");
    static const std::vector<std::string> keys = {"task_id", "transformations", "task_code",
                                                  "grid_size", "input", "output"};
    for (const std::string& k : keys)
        if (!j.contains(k)) raise(ErrorCode::SchemaError, "missing key: " + k);
    if (j.size() != keys.size()) raise(ErrorCode::SchemaError, "unknown extra keys in record");

    TaskRecord r;
    if (!j["task_id"].is_string()) raise(ErrorCode::SchemaError, "task_id must be a string");
    r.task_id = j["task_id"].get<std::string>();
    for (const nlohmann::json& t : j["transformations"]) {
        if (!t.is_string()) raise(ErrorCode::SchemaError, "transformations must be strings");
        std::string name = t.get<std::string>();
        transformation_from_name(name);  // validates
        r.transformations.push_back(std::move(name));
    }
    if (!j["task_code"].is_array() || j["task_code"].size() != kTaskCodeDepth)
        raise(ErrorCode::SchemaError, "task_code must have exactly 4 tokens");
    for (const nlohmann::json& t : j["task_code"]) {
        std::string name = t.get<std::string>();
        transformation_from_name(name);
        r.task_code.push_back(std::move(name));
    }
    if (!j["grid_size"].is_array() || j["grid_size"].size() != 2)
        raise(ErrorCode::SchemaError, "grid_size must be [rows, cols]");
    r.grid_rows = j["grid_size"][0].get<int>();
    r.grid_cols = j["grid_size"][1].get<int>();
    r.input = detail::parse_grid(j["input"], "input");
    r.output = detail::parse_grid(j["output"], "output");
    if (r.input.rows() != r.grid_rows || r.input.cols() != r.grid_cols ||
        r.output.rows() != r.grid_rows || r.output.cols() != r.grid_cols)
        raise(ErrorCode::SchemaError, "grid_size disagrees with input/output dims");
    return r;
}

inline std::vector<TaskRecord> read_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::IoError, "cannot open " + path);
    std::vector<TaskRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(parse_record(line));
        } catch (const Error& e) {
            raise(e.code(), path + ":" + std::to_string(line_no) + ": " + e.message());
        }
    }
    return records;
}

// Prediction files are task records or any JSONL with task_id + output.
inline std::vector<PredictionRecord> read_predictions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::IoError, "cannot open " + path);
    std::vector<PredictionRecord> preds;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            raise(ErrorCode::SchemaError,
                  path + ":" + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        if (!j.contains("task_id") || !j.contains("output"))
            raise(ErrorCode::SchemaError,
                  path + ":" + std::to_string(line_no) + ": prediction needs task_id and output");
        preds.push_back({j["task_id"].get<std::string>(), detail::parse_grid(j["output"], "output")});
    }
    return preds;
}

// ---------------------------------------------------------------------------
// Dataset directory: manifest.json + one JSONL file per split.

namespace detail {

inline nlohmann::ordered_json range_json(const IntRange& r) {
    return nlohmann::ordered_json::array({r.lo, r.hi});
}

inline nlohmann::ordered_json constraints_json(const ObjectConstraints& c) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array({c.min_rows, c.max_rows});
    j["cols"] = nlohmann::ordered_json::array({c.min_cols, c.max_cols});
    if (c.symmetric) j["symmetric"] = *c.symmetric;
    if (c.allowed_connectivity != kAllConnectivity) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (Connectivity v : {Connectivity::Four, Connectivity::Eight, Connectivity::Distance})
            if (c.allowed_connectivity & connectivity_bit(v)) arr.push_back(connectivity_name(v));
        j["connectivity"] = arr;
    }
    if (c.allowed_color_counts != kAllColorCounts)
        j["color_count"] = (c.allowed_color_counts & color_count_bit(ColorCount::Single)) ? "single" : "multi";
    return j;
}

inline nlohmann::ordered_json params_json(const GenerationParams& p) {
    nlohmann::ordered_json j;
    j["grid_rows"] = range_json(p.grid_rows);
    j["grid_cols"] = range_json(p.grid_cols);
    j["n_objects"] = range_json(p.n_objects);
    j["objects"] = constraints_json(p.object_constraints);
    j["pad_color"] = p.pad_color;
    j["max_trials"] = p.max_trials;
    return j;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace detail

inline std::string manifest_json(const DatasetSplits& ds) {
    nlohmann::ordered_json j;
    j["format_version"] = kDatasetFormatVersion;
    j["generator"] = kGeneratorName;
    j["generator_version"] = kGeneratorVersion;
    j["experiment"] = ds.spec.name();
    j["study"] = study_name(ds.spec.study);
    j["setting"] = setting_name(ds.spec.setting);
    j["experiment_index"] = ds.spec.experiment_index;
    j["master_seed"] = ds.master_seed;
    j["catalog_hash"] = detail::hex64(ds.catalog_hash);
    j["sequence_mixture"] = "uniform";
    nlohmann::ordered_json train_seqs = nlohmann::ordered_json::array();
    for (const TransformationSequence& s : ds.spec.train_sequences) train_seqs.push_back(sequence_name(s));
    j["train_sequences"] = train_seqs;
    nlohmann::ordered_json ood_seqs = nlohmann::ordered_json::array();
    for (const TransformationSequence& s : ds.spec.ood_sequences) ood_seqs.push_back(sequence_name(s));
    j["ood_sequences"] = ood_seqs;
    j["env_train"] = detail::params_json(ds.spec.env_train);
    j["env_ood"] = detail::params_json(ds.spec.env_ood);
    nlohmann::ordered_json counts;
    for (size_t i = 0; i < 5; ++i) counts[kSplitNames[i]] = static_cast<int>(ds.splits[i].size());
    j["split_counts"] = counts;
    return j.dump(2) + "\n";
}

inline void write_dataset(const DatasetSplits& ds, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) raise(ErrorCode::IoError, "cannot create directory " + dir + ": " + ec.message());
    {
        std::ofstream out(dir + "/manifest.json", std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorCode::IoError, "cannot write manifest in " + dir);
        out << manifest_json(ds);
    }
    char id[32];
    for (size_t i = 0; i < 5; ++i) {
        std::vector<TaskRecord> records;
        records.reserve(ds.splits[i].size());
        for (size_t k = 0; k < ds.splits[i].size(); ++k) {
            std::snprintf(id, sizeof(id), "%s-%06zu", kSplitNames[i], k);
            records.push_back(to_record(ds.splits[i][k], id));
        }
        write_jsonl(records, dir + "/" + std::string(kSplitNames[i]) + ".jsonl");
    }
}

// ---------------------------------------------------------------------------
// Rendering. Fixed 10-color palette (the de-facto ARC community palette).

struct Rgb {
    uint8_t r, g, b;
};

inline const std::array<Rgb, 10>& palette() {
    static const std::array<Rgb, 10> p = {{
        {0x00, 0x00, 0x00},  // 0 black (background)
        {0x00, 0x74, 0xd9},  // 1 blue
        {0xff, 0x41, 0x36},  // 2 red
        {0x2e, 0xcc, 0x40},  // 3 green
        {0xff, 0xdc, 0x00},  // 4 yellow
        {0xaa, 0xaa, 0xaa},  // 5 grey
        {0xf0, 0x12, 0xbe},  // 6 fuchsia
        {0xff, 0x85, 0x1b},  // 7 orange
        {0x7f, 0xdb, 0xff},  // 8 azure
        {0x87, 0x0c, 0x25},  // 9 maroon
    }};
    return p;
}

enum class RenderFormat { Ansi, Ppm, Svg };

inline RenderFormat render_format_from_name(const std::string& name) {
    if (name == "ansi") return RenderFormat::Ansi;
    if (name == "ppm") return RenderFormat::Ppm;
    if (name == "svg") return RenderFormat::Svg;
    raise(ErrorCode::InvalidArgument, "unknown render format: " + name);
}

inline std::string render_ansi(const Grid& g) {
    std::string out;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            const Rgb& col = palette()[g.at(r, c)];
            out += "\x1b[48;2;" + std::to_string(col.r) + ";" + std::to_string(col.g) + ";" +
                   std::to_string(col.b) + "m  ";
        }
        out += "\x1b[0m\n";
    }
    return out;
}

inline std::string render_ppm(const Grid& g, int cell_size = 10) {
    if (cell_size < 1) raise(ErrorCode::InvalidArgument, "cell size must be >= 1");
    int width = g.cols() * cell_size, height = g.rows() * cell_size;
    std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.reserve(out.size() + static_cast<size_t>(width) * height * 3);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const Rgb& col = palette()[g.at(y / cell_size, x / cell_size)];
            out += static_cast<char>(col.r);
            out += static_cast<char>(col.g);
            out += static_cast<char>(col.b);
        }
    return out;
}

inline std::string render_svg(const Grid& g, int cell_size = 10) {
    if (cell_size < 1) raise(ErrorCode::InvalidArgument, "cell size must be >= 1");
    char buf[160];
    int width = g.cols() * cell_size, height = g.rows() * cell_size;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                      "\" height=\"" + std::to_string(height) + "\">\n";
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) {
            const Rgb& col = palette()[g.at(r, c)];
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"#%02x%02x%02x\"/>\n",
                          c * cell_size, r * cell_size, cell_size, cell_size, col.r, col.g, col.b);
            out += buf;
        }
    out += "</svg>\n";
    return out;
}

inline std::string render(const Grid& g, RenderFormat format, int cell_size = 10) {
    switch (format) {
        case RenderFormat::Ansi: return render_ansi(g);
        case RenderFormat::Ppm: return render_ppm(g, cell_size);
        case RenderFormat::Svg: return render_svg(g, cell_size);
    }
    raise(ErrorCode::InvalidArgument, "bad render format");
}

} // namespace cogitao

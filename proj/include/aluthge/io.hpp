#ifndef ALUTHGE_IO_HPP
#define ALUTHGE_IO_HPP

// TupleFile JSON format shared by inputs, witnesses, and transform output,
// plus serializers for the report types. One format everywhere keeps every
// artifact replayable as a standalone input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aluthge/radii.hpp"
#include "aluthge/transform.hpp"
#include "aluthge/tuple.hpp"

namespace aluthge {

using json = nlohmann::ordered_json;

struct tuple_file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TupleFileMetadata {
    std::optional<std::string> name;
    std::optional<std::string> description;
    std::optional<std::int64_t> seed;
};

struct TupleFile {
    OperatorTuple tuple;
    TupleFileMetadata metadata;
};

inline json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json tuple_to_json(const TupleFile& tf) {
    json out;
    out["d"] = tf.tuple.d();
    out["n"] = tf.tuple.dim();
    json mats = json::array();
    for (const auto& m : tf.tuple.entries) mats.push_back(matrix_to_json(m));
    out["matrices"] = std::move(mats);
    if (tf.metadata.name || tf.metadata.description || tf.metadata.seed) {
        json meta;
        if (tf.metadata.name) meta["name"] = *tf.metadata.name;
        if (tf.metadata.description) meta["description"] = *tf.metadata.description;
        if (tf.metadata.seed) meta["seed"] = *tf.metadata.seed;
        out["metadata"] = std::move(meta);
    }
    return out;
}

inline json tuple_to_json(const OperatorTuple& t) {
    return tuple_to_json(TupleFile{t, {}});
}

inline TupleFile tuple_from_json(const json& j) {
    if (!j.is_object()) throw tuple_file_error("tuple file: top level must be a JSON object");
    for (const char* field : {"d", "n", "matrices"})
        if (!j.contains(field))
            throw tuple_file_error(std::string("tuple file: missing field '") + field + "'");
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 1)
        throw tuple_file_error("tuple file: field 'd' must be a positive integer");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw tuple_file_error("tuple file: field 'n' must be a positive integer");
    const int d = j["d"].get<int>();
    const Eigen::Index n = j["n"].get<Eigen::Index>();
    const json& mats = j["matrices"];
    if (!mats.is_array() || static_cast<int>(mats.size()) != d)
        throw tuple_file_error("tuple file: field 'matrices' must be an array of length d");

    std::vector<ComplexMatrix> entries;
    entries.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const json& mj = mats[k];
        if (!mj.is_array() || static_cast<Eigen::Index>(mj.size()) != n)
            throw tuple_file_error("tuple file: matrices[" + std::to_string(k) +
                                   "] must be an n-row array");
        ComplexMatrix m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const json& row = mj[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
                throw tuple_file_error("tuple file: matrices[" + std::to_string(k) + "][" +
                                       std::to_string(i) + "] must have n entries");
            for (Eigen::Index jj = 0; jj < n; ++jj) {
                const json& e = row[static_cast<std::size_t>(jj)];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                    throw tuple_file_error("tuple file: entry matrices[" + std::to_string(k) +
                                           "][" + std::to_string(i) + "][" + std::to_string(jj) +
                                           "] must be an [re, im] pair");
                m(i, jj) = Complex(e[0].get<double>(), e[1].get<double>());
                if (!std::isfinite(m(i, jj).real()) || !std::isfinite(m(i, jj).imag()))
                    throw tuple_file_error("tuple file: entry matrices[" + std::to_string(k) +
                                           "][" + std::to_string(i) + "][" + std::to_string(jj) +
                                           "] must be finite");
            }
        }
        entries.push_back(std::move(m));
    }

    TupleFile tf;
    tf.tuple = OperatorTuple(std::move(entries));
    if (j.contains("metadata")) {
        const json& meta = j["metadata"];
        if (!meta.is_object()) throw tuple_file_error("tuple file: 'metadata' must be an object");
        if (meta.contains("name")) tf.metadata.name = meta["name"].get<std::string>();
        if (meta.contains("description"))
            tf.metadata.description = meta["description"].get<std::string>();
        if (meta.contains("seed")) tf.metadata.seed = meta["seed"].get<std::int64_t>();
    }
    return tf;
}

inline TupleFile read_tuple_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tuple_file_error("tuple file: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw tuple_file_error("tuple file: invalid JSON in '" + path + "': " + e.what());
    }
    return tuple_from_json(j);
}

// temp + rename so readers never see a partial file.
inline void write_json_atomic(const std::string& path, const json& j, int indent = 2) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << j.dump(indent) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

inline void write_text_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

inline json radius_estimate_to_json(const RadiusEstimate& est) {
    json out;
    out["value"] = est.value;
    out["method"] = est.method;
    out["is_lower_bound"] = est.is_lower_bound;
    json trace = json::array();
    for (const auto& [step, value] : est.trace) trace.push_back(json::array({step, value}));
    out["trace"] = std::move(trace);
    out["params"] = est.params;
    return out;
}

inline json iteration_to_json(const AluthgeIteration& it, bool include_tuples = true) {
    json out;
    out["stop_reason"] = to_string(it.stop_reason);
    out["norm_trace"] = it.norm_trace;
    out["ranks"] = it.ranks;
    if (include_tuples) {
        json tuples = json::array();
        for (const auto& t : it.tuples) tuples.push_back(tuple_to_json(t));
        out["tuples"] = std::move(tuples);
    }
    return out;
}

inline std::string iteration_trace_csv(const AluthgeIteration& it) {
    std::ostringstream csv;
    csv << "step,value,rank\n";
    for (std::size_t i = 0; i < it.norm_trace.size(); ++i) {
        csv << i << ',';
        csv.precision(17);
        csv << it.norm_trace[i] << ',';
        // rank[i] is the rank used to produce step i+1; the last step has none.
        if (i < it.ranks.size())
            csv << it.ranks[i];
        else
            csv << "";
        csv << '\n';
    }
    return csv.str();
}

}  // namespace aluthge

#endif  // ALUTHGE_IO_HPP

#ifndef FRAMEKIT_FRAME_IO_HPP
#define FRAMEKIT_FRAME_IO_HPP

// Frame file format:
//   {"ambient_dim": m, "field": "real" | "complex", "vectors": [[...], ...]}
// Real entries are numbers, complex entries are [re, im]. Each row of
// "vectors" is one frame vector (a column of the synthesis matrix).
// "label" is optional.

#include <framekit/frame.hpp>

#include <json.hpp>

#include <string>

namespace framekit {

namespace detail {

inline Complex parse_entry(const nlohmann::json& e, bool complex_field, std::size_t row, std::size_t col) {
    const std::string where = "vectors[" + std::to_string(row) + "][" + std::to_string(col) + "]";
    if (complex_field) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw Error(ErrorKind::ParseError, where + ": complex entries must be [re, im]");
        }
        return {e[0].get<double>(), e[1].get<double>()};
    }
    if (!e.is_number()) {
        throw Error(ErrorKind::ParseError, where + ": real entries must be numbers");
    }
    return {e.get<double>(), 0.0};
}

} // namespace detail

inline Frame frame_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::ParseError, "frame document must be a JSON object");
    }
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer() ||
        doc["ambient_dim"].get<long long>() < 1) {
        throw Error(ErrorKind::ParseError, "\"ambient_dim\" must be a positive integer");
    }
    const auto m = static_cast<std::size_t>(doc["ambient_dim"].get<long long>());
    bool complex_field = false;
    if (doc.contains("field")) {
        if (doc["field"] == "complex") {
            complex_field = true;
        } else if (doc["field"] != "real") {
            throw Error(ErrorKind::ParseError, "\"field\" must be \"real\" or \"complex\"");
        }
    }
    if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty()) {
        throw Error(ErrorKind::ParseError, "\"vectors\" must be a non-empty array");
    }
    const auto& rows = doc["vectors"];
    ComplexMatrix cols(static_cast<Index>(m), static_cast<Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array()) {
            throw Error(ErrorKind::ParseError, "vectors[" + std::to_string(i) + "] is not an array");
        }
        if (row.size() != m) {
            throw Error(ErrorKind::ParseError, "vectors[" + std::to_string(i) + "] has " + std::to_string(row.size()) +
                                                   " entries, expected ambient_dim = " + std::to_string(m));
        }
        for (std::size_t j = 0; j < m; ++j) {
            cols(static_cast<Index>(j), static_cast<Index>(i)) = detail::parse_entry(row[j], complex_field, i, j);
        }
    }
    if (!cols.allFinite()) {
        throw Error(ErrorKind::ParseError, "frame entries must be finite");
    }
    std::string label;
    if (doc.contains("label") && doc["label"].is_string()) {
        label = doc["label"].get<std::string>();
    }
    return Frame(std::move(cols), std::move(label));
}

inline Frame parse_frame(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return frame_from_json(doc);
}

/// Columns of `m` as a frame document. Uses the real field when every
/// imaginary part is exactly zero.
inline nlohmann::json matrix_columns_to_json(const ComplexMatrix& m) {
    const bool is_real = (m.imag().array() == 0.0).all();
    nlohmann::json vectors = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (Index i = 0; i < m.rows(); ++i) {
            if (is_real) {
                row.push_back(m(i, j).real());
            } else {
                row.push_back(nlohmann::json::array({m(i, j).real(), m(i, j).imag()}));
            }
        }
        vectors.push_back(std::move(row));
    }
    return {{"ambient_dim", m.rows()}, {"field", is_real ? "real" : "complex"}, {"vectors", std::move(vectors)}};
}

inline nlohmann::json frame_to_json(const Frame& frame) {
    nlohmann::json doc = matrix_columns_to_json(frame.columns());
    if (!frame.label().empty()) {
        doc["label"] = frame.label();
    }
    return doc;
}

} // namespace framekit

#endif

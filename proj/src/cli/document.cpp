#include <cmath>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "renyi/cli.hpp"
#include "renyi/error.hpp"

namespace renyi::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string &what) { throw Error(ErrorKind::InvalidInput, what); }

std::vector<double> number_list(const json &node, const std::string &key) {
    if (!node.is_array()) schema_error("\"" + key + "\" must be an array of numbers");
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto &v : node) {
        if (!v.is_number()) schema_error("\"" + key + "\" must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<double> square_rows(const json &node, const std::string &key, std::size_t &dim) {
    if (!node.is_array() || node.empty()) schema_error("\"matrix." + key + "\" must be a non-empty array of rows");
    dim = node.size();
    std::vector<double> flat;
    flat.reserve(dim * dim);
    for (const auto &row : node) {
        std::vector<double> r = number_list(row, "matrix." + key);
        if (r.size() != dim) schema_error("\"matrix." + key + "\" is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
}

Matrix parse_matrix(const json &node) {
    if (!node.is_object() || !node.contains("re")) schema_error("\"matrix\" must be an object with \"re\" and \"im\"");
    std::size_t dim = 0;
    std::vector<double> re = square_rows(node.at("re"), "re", dim);
    std::vector<double> im;
    if (node.contains("im")) {
        std::size_t im_dim = 0;
        im = square_rows(node.at("im"), "im", im_dim);
        if (im_dim != dim) schema_error("\"matrix.re\" and \"matrix.im\" dimensions differ");
    }
    return Matrix{SquareMatrix::from_parts(dim, re, im)};
}

json rows_of(const SquareMatrix &m, bool imaginary) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

InputDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        schema_error(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) schema_error("document must be a JSON object");

    const int payloads = static_cast<int>(root.contains("probabilities")) +
                         static_cast<int>(root.contains("energies")) + static_cast<int>(root.contains("matrix"));
    if (payloads != 1)
        schema_error("document needs exactly one of \"probabilities\", \"energies\", \"matrix\"");

    InputDocument doc;
    if (root.contains("probabilities"))
        doc.payload = Probabilities{number_list(root.at("probabilities"), "probabilities")};
    else if (root.contains("energies"))
        doc.payload = Energies{number_list(root.at("energies"), "energies")};
    else
        doc.payload = parse_matrix(root.at("matrix"));

    if (root.contains("temp0")) {
        if (!root.at("temp0").is_number()) schema_error("\"temp0\" must be a number");
        doc.temp0 = root.at("temp0").get<double>();
    }
    if (root.contains("label")) {
        if (!root.at("label").is_string()) schema_error("\"label\" must be a string");
        doc.label = root.at("label").get<std::string>();
    }
    return doc;
}

std::string serialize_document(const InputDocument &doc) {
    json root = json::object();
    if (const auto *p = std::get_if<Probabilities>(&doc.payload))
        root["probabilities"] = p->values;
    else if (const auto *e = std::get_if<Energies>(&doc.payload))
        root["energies"] = e->values;
    else {
        const auto &m = std::get<Matrix>(doc.payload).values;
        root["matrix"] = {{"re", rows_of(m, false)}, {"im", rows_of(m, true)}};
    }
    if (doc.temp0) root["temp0"] = *doc.temp0;
    if (doc.label) root["label"] = *doc.label;
    return root.dump(2);
}

std::string format_scalar(double x) {
    if (x == 0.0) x = 0.0; // drops the sign of -0
    const double mag = std::abs(x);
    if (x == 0.0 || (mag >= 1e-4 && mag < 1e12)) return fmt::format("{:.12f}", x);
    return fmt::format("{:.11e}", x);
}

} // namespace renyi::cli

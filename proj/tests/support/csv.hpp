#pragma once

// Minimal reader for the numeric CSV the sweep command writes.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::size_t column(const std::string &name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::out_of_range("no column " + name);
    }
};

inline std::vector<std::string> split(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

inline Table parse(const std::string &text) {
    Table t;
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw std::runtime_error("empty CSV");
    t.header = split(line);
    while (std::getline(ss, line)) {
        if (line.empty() || line == "\r") continue;
        std::vector<double> row;
        for (const std::string &cell : split(line)) {
            std::size_t used = 0;
            row.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::runtime_error("bad number " + cell);
        }
        if (row.size() != t.header.size()) throw std::runtime_error("ragged CSV row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace csv

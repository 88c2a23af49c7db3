#include "qclone/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace qclone::csv {

Table::Table(std::vector<std::string> header, char separator)
    : header_(std::move(header)), sep_(separator) {}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("csv::Table: row width does not match the header");
    rows_.push_back(std::move(cells));
}

std::string Table::num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string Table::cell(std::optional<double> v) { return v ? num(*v) : std::string(); }

namespace {

std::string quoted_if_needed(const std::string& s, char sep) {
    if (s.find(sep) == std::string::npos && s.find('"') == std::string::npos &&
        s.find('\n') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string Table::str() const {
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += sep_;
            out += quoted_if_needed(row[i], sep_);
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out;
}

void Table::write(const std::string& path) const {
    std::string body = str();
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("csv::Table: cannot open " + tmp);
        f << body;
        if (!f) throw std::runtime_error("csv::Table: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("csv::Table: rename failed for " + path);
}

}  // namespace qclone::csv

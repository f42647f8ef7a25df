#include "almg/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace almg::csv {

std::string format(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format(const Value& v) {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<double>(v)) return format(std::get<double>(v));
    return std::get<std::string>(v);
}

Writer::Writer(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << (i ? "," : "") << header[i];
    out_ << '\n';
}

void Writer::row(const std::vector<Value>& values) {
    if (values.size() != columns_)
        throw std::runtime_error("csv row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << (i ? "," : "") << format(values[i]);
    out_ << '\n';
}

namespace {
std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}
}  // namespace

bool Table::has_column(const std::string& name) const {
    for (const auto& h : header)
        if (h == name) return true;
    return false;
}

std::vector<double> Table::column(const std::string& name) const {
    std::size_t idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) idx = i;
    if (idx == header.size())
        throw std::runtime_error("csv column not found: " + name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        const std::string& cell = r.at(idx);
        if (cell == "inf") out.push_back(HUGE_VAL);
        else if (cell == "-inf") out.push_back(-HUGE_VAL);
        else out.push_back(std::stod(cell));
    }
    return out;
}

Table read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    Table t;
    std::string line;
    if (std::getline(in, line)) t.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        t.rows.push_back(split(line));
    }
    return t;
}

}  // namespace almg::csv

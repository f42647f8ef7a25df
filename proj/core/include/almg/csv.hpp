#pragma once

#include <fstream>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace almg::csv {

using Value = std::variant<long long, double, std::string>;

/// Doubles rendered with 12 significant digits (round-trips regression diffs).
std::string format(double v);
std::string format(const Value& v);

/// Comma-separated, UTF-8, LF line endings, one header row.
class Writer {
  public:
    Writer(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<Value>& values);

  private:
    std::ofstream out_;
    std::size_t columns_;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool has_column(const std::string& name) const;
    /// Column looked up by header name, parsed as double.
    std::vector<double> column(const std::string& name) const;
};

Table read(const std::string& path);

}  // namespace almg::csv

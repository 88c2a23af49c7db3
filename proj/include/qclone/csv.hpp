#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qclone::csv {

// Small RFC-4180-style table writer with reproducible number formatting:
// 15 significant digits, '.' decimal separator, '\n' line endings. Files are
// written to a temporary path and renamed on success so failures never leave
// partial output behind.
class Table {
  public:
    explicit Table(std::vector<std::string> header, char separator = ',');

    void add_row(std::vector<std::string> cells);

    static std::string num(double v);
    static std::string cell(std::optional<double> v);

    // Serialized table including the header row.
    std::string str() const;

    // Write to the path, or to stdout when path is empty.
    void write(const std::string& path) const;

    char separator() const { return sep_; }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    char sep_;
};

}  // namespace qclone::csv

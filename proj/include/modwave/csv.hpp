#pragma once

#include <string>
#include <vector>

#include "modwave/types.hpp"

namespace modwave {

/// Deterministic CSV output: fixed column order, %.17g doubles, '\n' endings.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(const std::vector<double>& row);
    void write(const std::string& path) const;

    size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

std::string format_double(double x);

}  // namespace modwave

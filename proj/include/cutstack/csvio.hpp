#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "cutstack/errors.hpp"

namespace cutstack {

// Minimal deterministic CSV writer: caller provides already-formatted cells.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw invalid_parameter_error("cannot open for writing: " + path);
    }
    void row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

} // namespace cutstack

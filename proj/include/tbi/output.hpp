#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tbi/types.hpp"

namespace tbi::output {

enum class Format { csv, json };

// One computed result plus an echo of the inputs that produced it.  The
// input echo is an ordered list so CSV columns are stable.
struct OutputRecord {
    std::string operation;
    std::vector<std::pair<std::string, std::string>> inputs;
    double value = 0.0;
    double abs_error = 0.0;
    long terms_used = 0;
    bool converged = true;
    double wall_time_seconds = 0.0;
};

OutputRecord make_record(std::string operation,
                         std::vector<std::pair<std::string, std::string>> inputs,
                         const IntegralResult& result);

// Scientific notation with 17 significant digits; round-trips doubles.
std::string format_value(double v);

// CSV: one header line (input names, then value,abs_err,terms,converged)
// and one data line.  Wall time is deliberately omitted so identical inputs
// give byte-identical output.
std::string to_csv(const OutputRecord& rec);

// JSON object mirroring the record, wall time included.
std::string to_json(const OutputRecord& rec);

std::string render(const OutputRecord& rec, Format fmt);

}  // namespace tbi::output

#include "tbi/output.hpp"

#include <cstdio>

#include "json.hpp"

namespace tbi::output {

OutputRecord make_record(std::string operation,
                         std::vector<std::pair<std::string, std::string>> inputs,
                         const IntegralResult& result) {
    OutputRecord rec;
    rec.operation = std::move(operation);
    rec.inputs = std::move(inputs);
    rec.value = result.value;
    rec.abs_error = result.abs_error_estimate;
    rec.terms_used = result.terms_used;
    rec.converged = result.converged;
    return rec;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16E", v);
    return buf;
}

std::string to_csv(const OutputRecord& rec) {
    std::string header;
    std::string row;
    for (const auto& [name, value] : rec.inputs) {
        header += name;
        header += ',';
        row += value;
        row += ',';
    }
    header += "value,abs_err,terms,converged";
    row += format_value(rec.value);
    row += ',';
    row += format_value(rec.abs_error);
    row += ',';
    row += std::to_string(rec.terms_used);
    row += ',';
    row += rec.converged ? '1' : '0';
    return header + "\n" + row + "\n";
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["operation"] = rec.operation;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rec.inputs) in[name] = value;
    j["inputs"] = in;
    j["value"] = format_value(rec.value);
    j["abs_error"] = format_value(rec.abs_error);
    j["terms"] = rec.terms_used;
    j["converged"] = rec.converged;
    j["wall_time_seconds"] = rec.wall_time_seconds;
    return j.dump(2) + "\n";
}

std::string render(const OutputRecord& rec, Format fmt) {
    return fmt == Format::csv ? to_csv(rec) : to_json(rec);
}

}  // namespace tbi::output

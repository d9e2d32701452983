#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsc/double_code.hpp"

namespace dsc {

struct FieldConfig {
    int p = 0;
    int m = 0;
    std::optional<std::vector<int>> modulus;  // Conway default when absent
    std::string label;
};

// {"field": {...}, "i", "r", "s", "g_v", "g_vp", "l_v", "l_vp", "h_v", "h_vp",
//  optional "label", "gray": [n00, n01, n10, n11], "budget_ops", "budget_secs", "format"}
struct JobConfig {
    std::string label;
    FieldConfig field_cfg;
    FieldPtr field;
    int i = 1;
    int r = 0;
    int s = 0;
    std::array<std::string, 6> polys;  // g_v, g_vp, l_v, l_vp, h_v, h_vp as given
    std::optional<std::array<std::string, 4>> gray;
    std::optional<double> budget_ops;
    std::optional<double> budget_secs;
    std::optional<std::string> format;

    DoubleCodeSpec code() const;
    GrayMatrix gray_matrix() const;
};

JobConfig parse_job(std::string_view json_text);
JobConfig load_job(const std::string& path);
// Canonical form: polynomials re-emitted by the library printer, modulus made explicit.
std::string job_to_json(const JobConfig& job, int indent = 2);

struct TableRow {
    std::string label;
    JobConfig job;
    int n = 0, k = 0, d = 0;
    bool starred = false;
};

// {"rows": [{"label", "config": {...}, "expect": {"n", "k", "d"}, "starred"}]}
std::vector<TableRow> parse_manifest(std::string_view json_text);
std::vector<TableRow> load_manifest(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace dsc

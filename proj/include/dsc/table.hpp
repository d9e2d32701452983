#pragma once

#include <string>

#include "dsc/config.hpp"
#include "dsc/distance.hpp"

namespace dsc {

enum class RowStatus { Match, Bounded, Contradiction, Invalid };

const char* to_string(RowStatus s);

struct RowOutcome {
    std::string label;
    int n = 0, k = 0;
    int expect_n = 0, expect_k = 0, expect_d = 0;
    std::string path;  // plain, construction or none
    DistanceResult plain;
    DistanceResult construction;
    bool construction_run = false;
    bool shift_closed = true;
    RowStatus status = RowStatus::Invalid;
};

// Plain Gray image first; the construction only when the plain distance
// does not already match. Bounded means the tabulated d lies inside the
// certified interval of the path that is reported.
RowOutcome evaluate_row(const TableRow& row, const DistanceOptions& opt = {});

}  // namespace dsc

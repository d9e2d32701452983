#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsc/linear_code.hpp"

namespace dsc {

struct DistanceResult {
    int n = 0;
    int k = 0;                 // rank of the generator matrix
    int lower = 0;
    int upper = 0;
    bool exact = false;
    bool empty = false;        // no nonzero codeword (k = 0)
    bool rank_reduced = false; // input rows were dependent and got reduced
    int level = 0;             // largest message weight fully enumerated through the first set
    std::vector<int> witness;  // codeword of weight upper, as logs
    std::uint64_t work = 0;    // codewords enumerated
    std::vector<int> set_ranks;
    std::string stop_reason;
};

struct DistanceOptions {
    double budget_ops = 1e9;   // codewords; checked before each level so results are reproducible
    double budget_secs = 0;    // wall clock, 0 = unlimited
    unsigned workers = 0;      // 0 = hardware concurrency
};

// Enumerates every message up to scalar multiples. Refuses when q^k > budget.
DistanceResult min_distance_exhaustive(const LinearCodeMatrix& m, double budget = 67108864.0);
// Brouwer-Zimmermann with disjoint information sets.
DistanceResult min_distance_bz(const LinearCodeMatrix& m, const DistanceOptions& opt = {});
// Minimum weight over messages of support size <= max_message_weight through
// one information set; nullopt when the code has no nonzero codeword.
std::optional<int> distance_upper_bound(const LinearCodeMatrix& m, int max_message_weight);
// Witness lies in the row space and has weight equal to the reported upper bound.
bool verify_witness(const LinearCodeMatrix& m, const DistanceResult& r);

}  // namespace dsc

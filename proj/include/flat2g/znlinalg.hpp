#pragma once

// Exact linear algebra over Z_N for the Cech gauge systems: solve A x = b
// (mod N) with a particular solution and kernel generators. N factors into
// prime powers; each factor is eliminated with full pivoting on the entry of
// least p-adic valuation, and the results recombine by CRT.

#include <optional>
#include <vector>

#include "flat2g/common.hpp"

namespace flat2g {

struct SparseRow {
    std::vector<std::pair<int, int64_t>> entries;  // (column, coefficient)
};

struct LinearSolution {
    std::vector<int64_t> particular;           // one solution mod N
    std::vector<std::vector<int64_t>> kernel;  // generators of the solution lattice mod N
};

// Returns nullopt when inconsistent.
std::optional<LinearSolution> solve_mod_n(const std::vector<SparseRow>& rows,
                                          const std::vector<int64_t>& rhs, int cols, int64_t n);

// Convenience: consistency only.
bool solvable_mod_n(const std::vector<SparseRow>& rows, const std::vector<int64_t>& rhs, int cols,
                    int64_t n);

}  // namespace flat2g

#pragma once

#include <cstdint>
#include <optional>

#include "perron/matana.hpp"
#include "perron/numfield.hpp"

namespace perron {

enum class SearchMode { Primitive, Irreducible };

const char* to_string(SearchMode mode);

// Largest dimension the exhaustive search accepts.
constexpr int search_dimension_ceiling = 6;

struct SearchOptions {
    SearchMode mode = SearchMode::Primitive;
    int n_max = 4;
    // Search-tree nodes (single entry assignments) allowed before giving up.
    std::uint64_t budget = 100000000;
    bool prune = true;
    // Optional cap on every entry, below the cycle-trace bound.
    std::optional<long> entry_cap;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t pruned = 0;
};

struct SearchResult {
    SearchMode mode = SearchMode::Primitive;
    std::optional<int> n_found;
    std::optional<NonNegIntMatrix> witness;
    // Every n up to this one was searched completely.
    int exhausted_through = 0;
    SearchStats stats;
};

// Smallest n in [d, n_max] admitting an n x n witness, searched in row-major
// order with ascending entries. Throws BudgetExceeded (partial = nodes).
SearchResult brute_force_dpf(const FieldContext& ctx, const SearchOptions& options);

// First monic irreducible cubic x^3 + a x^2 + b x + c with a > 0 (negative
// trace) whose largest root is Perron, scanning 1 <= a <= box and
// -box <= b, c <= box. Throws NotFound.
IntPolynomial find_negative_trace_cubic(int box);

}  // namespace perron

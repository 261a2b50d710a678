#ifndef MP_KNOWN_COUNTS_HPP
#define MP_KNOWN_COUNTS_HPP

#include "mp/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mp {

// Published spanning-tree counts for standard graph families (totals and the
// type split under canonical ordering). Used by `verify` and the test suites.
struct KnownFamilyRow {
    GraphFamily family;
    int n;
    int nodes;
    int edges;
    std::uint64_t total;
    std::uint64_t type1; // includes the root tree
};

const std::vector<KnownFamilyRow>& known_family_rows();
std::optional<KnownFamilyRow> known_family_row(GraphFamily family, int n);

// Random-graph expectation reference points (V, E, expected total, expected
// type-1 percent as printed at one decimal).
struct ExpectationRow {
    int v;
    int e;
    double expected_total;
    double expected_type1_pct;
};

const std::vector<ExpectationRow>& expectation_reference_rows();

// Polyhedron facet-adjacency reference results: total, type-1 count, average
// partition size expressed as (avg - 1).
struct PolyhedronRow {
    const char* name;
    int nodes;
    int edges;
    std::uint64_t total;
    std::uint64_t type1;
    double partition_epsilon;
};

const std::vector<PolyhedronRow>& polyhedron_reference_rows();

} // namespace mp

#endif

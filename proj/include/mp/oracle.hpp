#ifndef MP_ORACLE_HPP
#define MP_ORACLE_HPP

#include "mp/graph.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace mp {

class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

using EdgeSet = std::vector<EdgeOrder>; // sorted, length V-1

// All spanning trees by combination generation with union-find cycle pruning.
// Ground truth only; guarded by a subset budget.
std::set<EdgeSet> brute_force_enumerate(const Graph& g, std::uint64_t max_subsets = 10000000ULL);

// Exact spanning-tree count: fraction-free integer elimination of the reduced
// Laplacian (128-bit intermediates, overflow reported).
std::uint64_t kirchhoff_count(const Graph& g);

struct DefinitionalChild {
    EdgeSet tree;
    NodeId promoted;
};

// Children of `tree` straight from the definitions: every pair's unique
// promotion, kept when the promoted pair is the pilot of the result.
std::vector<DefinitionalChild> definitional_children(const Graph& g, const EdgeSet& tree);

// Pilot node of a tree given as an edge set (-1 for NIL), plus its type.
struct TreeFacts {
    int type;
    NodeId pilot;
    long long sigma;
};
TreeFacts tree_facts(const Graph& g, const EdgeSet& tree);

} // namespace mp

#endif

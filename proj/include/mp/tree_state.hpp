#ifndef MP_TREE_STATE_HPP
#define MP_TREE_STATE_HPP

#include "mp/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mp {

// Pilot standings: lower depth wins, then higher node order.
struct Standings {
    int depth;
    NodeId node;

    friend bool operator<(const Standings& a, const Standings& b) {
        if (a.depth != b.depth)
            return a.depth < b.depth;
        return a.node > b.node;
    }
    friend bool operator==(const Standings& a, const Standings& b) {
        return a.depth == b.depth && a.node == b.node;
    }
};

enum class PairClass { minimal, maximal, both, neither };

struct TreeClassification {
    int type;     // 1 or 2
    NodeId pilot; // -1 for NIL
};

struct PairRecord {
    EdgeOrder edge = 0;               // 0 = NIL (node zero while internal)
    NodeId parent = -1;               // other endpoint of edge, toward node zero
    int degree_in_tree = 0;
    int path_len_to_zero = 0;
    int non_minimal_descendants = 0;
};

struct PromotionDelta {
    NodeId node = -1;
    EdgeOrder removed = 0;
    EdgeOrder added = 0;
    NodeId covered = -1;
    NodeId uncovered = -1;
    bool was_non_minimal = false; // promoted pair before the promotion
    bool zero_flip = false;       // node-zero leaf promotion (re-roots the tree)
    int old_path_len = 0;
    int subtree_size = 0;         // nodes moved by the exchange
    int child_type = 2;           // 1 = internal promotion, 2 = leaf promotion
    std::uint64_t seq = 0;        // undo-ordering check
};

// The augmented spanning tree: one PairRecord per node, child lists, sigma.
// Mutated only through promote/undo; all attributes stay recompute-equal.
class SpanningTreeState {
public:
    explicit SpanningTreeState(const Graph& g); // builds the minimal-ranks-tree

    // Rebuilds this state over an arbitrary spanning tree (oracle use).
    void reset_to_edges(const std::vector<EdgeOrder>& tree_edges);

    const Graph& graph() const { return *g_; }
    int node_count() const { return g_->node_count(); }

    const PairRecord& record(NodeId v) const { return rec_[v]; }
    const std::vector<NodeId>& tree_children(NodeId v) const { return children_[v]; }
    long long sigma() const { return sigma_; }

    bool has_pair(NodeId v) const { return rec_[v].edge != 0; }
    bool is_leaf(NodeId v) const { return rec_[v].degree_in_tree == 1; }
    bool is_minimal_pair(NodeId v) const { return rec_[v].edge == g_->min_order_edge(v); }
    bool is_maximal_pair(NodeId v) const { return rec_[v].edge == g_->max_order_edge(v); }

    int depth(NodeId v) const {
        return is_leaf(v) ? 0 : node_count() - rec_[v].path_len_to_zero;
    }
    Standings standings(NodeId v) const { return {depth(v), v}; }

    PairClass classify_pair(NodeId v) const;
    TreeClassification classify_tree() const;

    // True iff query's path to node zero passes through root (inclusive).
    bool subtree_contains(NodeId root, NodeId query) const;

    // Next-in-order incident edge that reconnects the tree; 0 if none.
    EdgeOrder find_promotion(NodeId v) const;

    PromotionDelta promote(NodeId v) { return promote_with(v, find_promotion(v)); }
    PromotionDelta promote_with(NodeId v, EdgeOrder target);
    void undo(const PromotionDelta& delta);

    // Scratch outputs of the latest promote/undo, for structure maintenance:
    // the moved subtree and the nodes whose non-minimal-descendant count
    // crossed the 0/1 boundary.
    const std::vector<NodeId>& last_subtree() const { return subtree_scratch_; }
    const std::vector<NodeId>& last_nmd_crossed() const { return nmd_crossed_; }

    void for_each_in_subtree(NodeId v, const std::function<void(NodeId)>& fn) const;
    int subtree_size(NodeId v) const;
    std::vector<EdgeOrder> tree_edges_sorted() const;

    // From-scratch recomputation check of every maintained attribute.
    bool verify_attributes(std::string* diag = nullptr) const;

private:
    void build_minimal_ranks_tree();
    void rebuild_from_parents(); // children lists, path lengths, nmd, sigma, degrees
    void shift_subtree(NodeId v, int delta_pl);
    void adjust_nmd_chain(NodeId from, int delta);
    PromotionDelta promote_zero(EdgeOrder target);
    void apply_zero_exchange(EdgeOrder removed, EdgeOrder added);

    const Graph* g_;
    std::vector<PairRecord> rec_;
    std::vector<std::vector<NodeId>> children_;
    long long sigma_ = 0;
    std::uint64_t seq_ = 0;
    std::vector<NodeId> subtree_scratch_;
    std::vector<NodeId> nmd_crossed_;
};

} // namespace mp

#endif

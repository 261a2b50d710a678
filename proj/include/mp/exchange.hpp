#ifndef MP_EXCHANGE_HPP
#define MP_EXCHANGE_HPP

#include "mp/tree_state.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mp {

// Ordered set of nodes keyed by standings (depth ascending, node descending),
// one bucket bitmap per depth. All operations are O(V/64).
class StandingSet {
public:
    void reset(int node_count);

    bool contains(NodeId n) const { return depth_of_[n] >= 0; }
    int depth_of(NodeId n) const { return depth_of_[n]; }
    int size() const { return size_; }

    void insert(NodeId n, int depth);
    void erase(NodeId n);
    void clear();

    struct Cursor {
        int depth = -1;
        NodeId node = -1;
        bool valid = false;
    };
    Cursor first() const;
    Cursor next(const Cursor& c) const;

    Standings key(const Cursor& c) const { return {c.depth, c.node}; }

private:
    Cursor scan_from(int depth, int below_node) const;

    int nodes_ = 0, words_ = 0, depth_slots_ = 0;
    std::vector<std::uint64_t> depth_present_;
    std::vector<std::uint64_t> buckets_;
    std::vector<int> depth_of_;
    int size_ = 0;
};

// Enumeration engine state: the augmented spanning tree plus the two ordered
// structures (promotable-pairs, pilot-candidates) and the cached next
// promotion per pair, maintained across promote/revert.
class Engine {
public:
    explicit Engine(const Graph& g);

    const Graph& graph() const { return *g_; }
    const SpanningTreeState& state() const { return st_; }
    const StandingSet& promotable_pairs() const { return pp_; }
    const StandingSet& pilot_candidates() const { return pc_; }
    EdgeOrder cached_promotion(NodeId v) const { return cand_[v]; }

    NodeId pilot() const {
        auto c = pc_.first();
        return c.valid ? c.node : -1;
    }
    NodeId next_to_pilot() const {
        auto c = pc_.first();
        if (!c.valid)
            return -1;
        c = pc_.next(c);
        return c.valid ? c.node : -1;
    }

    // Exact emission test: would promoting v's cached promotion make it the
    // pilot of the resulting tree?
    bool would_be_pilot(NodeId v) const;

    struct Applied {
        PromotionDelta delta;
        bool rebuilt = false;
    };
    Applied apply(NodeId v);
    void revert(const Applied& a);

    void rebuild_structures();

    // From-definition scratch rebuild comparison (membership and keys of both
    // structures, cached promotions, pc head vs classify_tree pilot).
    bool matches_scratch_rebuild(std::string* diag = nullptr) const;

    // Membership per Properties 3.1-3.6 (3.3 excluded: enforced at traversal).
    bool pp_member(NodeId v, EdgeOrder cand) const;
    int pp_key_depth(NodeId v, EdgeOrder cand) const;
    int pc_key_depth(NodeId v) const {
        return st_.is_leaf(v) ? 0 : st_.node_count() - st_.record(v).path_len_to_zero;
    }

private:
    bool uncover_check(NodeId v, EdgeOrder cand, Standings post, Standings* out) const;
    void refresh_node(NodeId v);
    void refresh_after_move(const PromotionDelta& d);
    void mark(NodeId v);

    const Graph* g_;
    SpanningTreeState st_;
    StandingSet pp_, pc_;
    std::vector<EdgeOrder> cand_;
    std::vector<std::uint32_t> mark_epoch_;
    std::uint32_t epoch_ = 0;
    std::vector<NodeId> marked_;
    std::vector<NodeId> recand_scratch_;
};

} // namespace mp

#endif

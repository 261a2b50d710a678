#include "mp/exchange.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace mp {

// ---------------------------------------------------------------------------
// StandingSet

void StandingSet::reset(int node_count) {
    nodes_ = node_count;
    words_ = (node_count + 63) / 64;
    depth_slots_ = node_count + 1;
    depth_present_.assign((depth_slots_ + 63) / 64, 0);
    buckets_.assign(static_cast<std::size_t>(depth_slots_) * words_, 0);
    depth_of_.assign(node_count, -1);
    size_ = 0;
}

void StandingSet::insert(NodeId n, int depth) {
    if (depth_of_[n] == depth)
        return;
    if (depth_of_[n] >= 0)
        erase(n);
    depth_of_[n] = depth;
    auto* bucket = &buckets_[static_cast<std::size_t>(depth) * words_];
    bucket[n >> 6] |= std::uint64_t(1) << (n & 63);
    depth_present_[depth >> 6] |= std::uint64_t(1) << (depth & 63);
    ++size_;
}

void StandingSet::erase(NodeId n) {
    int depth = depth_of_[n];
    if (depth < 0)
        return;
    depth_of_[n] = -1;
    auto* bucket = &buckets_[static_cast<std::size_t>(depth) * words_];
    bucket[n >> 6] &= ~(std::uint64_t(1) << (n & 63));
    --size_;
    for (int w = 0; w < words_; ++w)
        if (bucket[w])
            return;
    depth_present_[depth >> 6] &= ~(std::uint64_t(1) << (depth & 63));
}

void StandingSet::clear() {
    std::fill(depth_present_.begin(), depth_present_.end(), 0);
    std::fill(buckets_.begin(), buckets_.end(), 0);
    std::fill(depth_of_.begin(), depth_of_.end(), -1);
    size_ = 0;
}

StandingSet::Cursor StandingSet::scan_from(int depth, int below_node) const {
    if (size_ == 0)
        return {};
    while (depth < depth_slots_) {
        if (depth_present_[depth >> 6] & (std::uint64_t(1) << (depth & 63))) {
            const auto* bucket = &buckets_[static_cast<std::size_t>(depth) * words_];
            int bw = below_node >> 6;
            for (int w = std::min(bw, words_ - 1); w >= 0; --w) {
                std::uint64_t bits = bucket[w];
                if (w == bw) {
                    int bb = below_node & 63;
                    bits &= bb == 0 ? 0 : ~std::uint64_t(0) >> (64 - bb);
                }
                if (bits)
                    return {depth, (w << 6) + 63 - std::countl_zero(bits), true};
            }
        }
        ++depth;
        below_node = words_ * 64;
        while (depth < depth_slots_) {
            std::uint64_t wbits = depth_present_[depth >> 6] >> (depth & 63);
            if (wbits) {
                depth += std::countr_zero(wbits);
                break;
            }
            depth = ((depth >> 6) + 1) << 6;
        }
    }
    return {};
}

StandingSet::Cursor StandingSet::first() const {
    return scan_from(0, words_ * 64);
}

StandingSet::Cursor StandingSet::next(const Cursor& c) const {
    if (!c.valid)
        return {};
    return scan_from(c.depth, c.node);
}

// ---------------------------------------------------------------------------
// Engine

Engine::Engine(const Graph& g) : g_(&g), st_(g) {
    int v = g.node_count();
    cand_.assign(v, 0);
    mark_epoch_.assign(v, 0);
    pp_.reset(v);
    pc_.reset(v);
    rebuild_structures();
}

int Engine::pp_key_depth(NodeId v, EdgeOrder cand) const {
    if (v == 0 || st_.is_leaf(v))
        return 0;
    NodeId w = g_->other_end(cand, v);
    return st_.node_count() - st_.record(w).path_len_to_zero - 1;
}

// Property 3.2: the promotion must not uncover a pair of better standings
// than the promoted pair's post-promotion standings.
bool Engine::uncover_check(NodeId v, EdgeOrder cand, Standings post, Standings* out) const {
    (void)cand;
    if (v == 0) {
        // Re-rooting turns the uncovered node into a non-minimal leaf exactly
        // when it degrades to degree 1 (it is adjacent to node zero, so its
        // minimum-order edge is the removed pendant edge).
        return st_.record(st_.record(0).parent).degree_in_tree != 2;
    }
    NodeId u = st_.record(v).parent;
    if (u == 0) {
        if (st_.record(0).degree_in_tree == 2) {
            // Node zero becomes a leaf and adopts its remaining edge.
            NodeId c = st_.tree_children(0).front();
            if (c == v)
                c = st_.tree_children(0).back();
            if (st_.record(c).edge != g_->min_order_edge(0)) {
                Standings s{0, 0};
                if (out)
                    *out = s;
                return !(s < post);
            }
        }
        return true;
    }
    if (st_.is_minimal_pair(u))
        return true;
    Standings su = st_.record(u).degree_in_tree == 2
                       ? Standings{0, u}
                       : Standings{st_.node_count() - st_.record(u).path_len_to_zero, u};
    if (out)
        *out = su;
    return !(su < post);
}

bool Engine::pp_member(NodeId v, EdgeOrder cand) const {
    if (cand == 0 || !st_.has_pair(v))
        return false;
    if (v != 0 && st_.record(v).non_minimal_descendants != 0)
        return false;
    Standings post{pp_key_depth(v, cand), v};
    return uncover_check(v, cand, post, nullptr);
}

bool Engine::would_be_pilot(NodeId v) const {
    EdgeOrder cand = cand_[v];
    if (cand == 0 || !st_.has_pair(v))
        return false;
    if (v != 0 && st_.record(v).non_minimal_descendants != 0)
        return false;

    Standings post{pp_key_depth(v, cand), v};
    if (!uncover_check(v, cand, post, nullptr))
        return false;

    // Remaining non-minimal pairs, with the covered pair's degradation
    // applied; the first surviving pilot-candidate bounds all the rest.
    NodeId w = g_->other_end(cand, v);
    bool w_degrades = st_.is_leaf(w) && !st_.is_minimal_pair(w);
    if (w_degrades) {
        Standings sw{st_.node_count() - st_.record(w).path_len_to_zero, w};
        if (sw < post)
            return false;
    }
    for (auto c = pc_.first(); c.valid; c = pc_.next(c)) {
        if (c.node == v || (w_degrades && c.node == w))
            continue;
        return post < pc_.key(c);
    }
    return true;
}

void Engine::refresh_node(NodeId v) {
    if (!st_.has_pair(v)) {
        cand_[v] = 0;
        pp_.erase(v);
        pc_.erase(v);
        return;
    }
    if (st_.is_minimal_pair(v))
        pc_.erase(v);
    else
        pc_.insert(v, pc_key_depth(v));
    EdgeOrder cand = cand_[v];
    if (pp_member(v, cand))
        pp_.insert(v, pp_key_depth(v, cand));
    else
        pp_.erase(v);
}

void Engine::rebuild_structures() {
    pp_.clear();
    pc_.clear();
    for (NodeId v = 0; v < g_->node_count(); ++v) {
        cand_[v] = st_.find_promotion(v);
        refresh_node(v);
    }
}

void Engine::mark(NodeId v) {
    if (mark_epoch_[v] != epoch_) {
        mark_epoch_[v] = epoch_;
        marked_.push_back(v);
    }
}

// Re-derive cached promotions, membership and keys for every node the move
// can affect: the promoted node and both exchange endpoints, their tree
// children (leaf-status and minimality feed Property 3.2), every node with an
// edge into the moved subtree (Lemmas 14/15 legality flips and post-key
// depths), the subtree itself (path lengths shifted), nmd 0/1 crossings
// (Property 3.4), and node zero pair adoption.
void Engine::refresh_after_move(const PromotionDelta& d) {
    ++epoch_;
    marked_.clear();
    recand_scratch_.clear();

    for (NodeId y : st_.last_subtree())
        mark(y);

    auto want_recand = [&](NodeId m) {
        if (mark_epoch_[m] != epoch_)
            mark(m);
        recand_scratch_.push_back(m);
    };
    want_recand(d.node);
    want_recand(d.covered);
    want_recand(d.uncovered);
    for (NodeId y : st_.last_subtree())
        for (const auto& inc : g_->adjacency(y))
            if (mark_epoch_[inc.neighbor] != epoch_) {
                mark(inc.neighbor);
                recand_scratch_.push_back(inc.neighbor);
            }
    for (NodeId m : recand_scratch_)
        cand_[m] = st_.find_promotion(m);

    for (NodeId c : st_.tree_children(d.node))
        mark(c);
    for (NodeId c : st_.tree_children(d.covered))
        mark(c);
    for (NodeId c : st_.tree_children(d.uncovered))
        mark(c);
    for (NodeId x : st_.last_nmd_crossed())
        mark(x);
    if (d.uncovered == 0) {
        cand_[0] = st_.find_promotion(0);
        mark(0);
    } else if (st_.record(0).degree_in_tree == 1 &&
               (d.covered == st_.record(0).parent || d.uncovered == st_.record(0).parent)) {
        // Node zero's eligibility tracks its pendant neighbor's degree.
        mark(0);
    }

    for (NodeId m : marked_)
        refresh_node(m);
}

Engine::Applied Engine::apply(NodeId v) {
    Applied a;
    a.delta = st_.promote_with(v, cand_[v]);
    if (a.delta.zero_flip || a.delta.subtree_size > g_->node_count() / 2) {
        rebuild_structures();
        a.rebuilt = true;
    } else {
        refresh_after_move(a.delta);
    }
    return a;
}

void Engine::revert(const Applied& a) {
    st_.undo(a.delta);
    if (a.rebuilt)
        rebuild_structures();
    else
        refresh_after_move(a.delta);
}

bool Engine::matches_scratch_rebuild(std::string* diag) const {
    auto fail = [&](const std::string& msg) {
        if (diag)
            *diag = msg;
        return false;
    };
    for (NodeId v = 0; v < g_->node_count(); ++v) {
        EdgeOrder fresh = st_.find_promotion(v);
        if (fresh != cand_[v])
            return fail("cached promotion stale at node " + std::to_string(v) + ": cached " +
                        std::to_string(cand_[v]) + " fresh " + std::to_string(fresh));
        bool in_pc = st_.has_pair(v) && !st_.is_minimal_pair(v);
        if (in_pc != pc_.contains(v))
            return fail("pilot-candidates membership mismatch at node " + std::to_string(v));
        if (in_pc && pc_.depth_of(v) != pc_key_depth(v))
            return fail("pilot-candidates key mismatch at node " + std::to_string(v));
        bool in_pp = pp_member(v, fresh);
        if (in_pp != pp_.contains(v))
            return fail("promotable-pairs membership mismatch at node " + std::to_string(v));
        if (in_pp && pp_.depth_of(v) != pp_key_depth(v, fresh))
            return fail("promotable-pairs key mismatch at node " + std::to_string(v));
    }
    auto cls = st_.classify_tree();
    if (pilot() != cls.pilot)
        return fail("pc head disagrees with classify_tree pilot");
    return true;
}

} // namespace mp

#include "mp/tree_state.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mp {

SpanningTreeState::SpanningTreeState(const Graph& g) : g_(&g) {
    build_minimal_ranks_tree();
}

void SpanningTreeState::build_minimal_ranks_tree() {
    int v = node_count();
    rec_.assign(v, {});
    for (NodeId n = 1; n < v; ++n) {
        EdgeOrder e = g_->min_order_edge(n);
        rec_[n].edge = e;
        rec_[n].parent = g_->other_end(e, n);
        // BFS canonicalization guarantees the minimal edge points downward.
        assert(rec_[n].parent < n);
    }
    rec_[0] = {};
    rec_[0].parent = -1;
    rebuild_from_parents();
}

void SpanningTreeState::reset_to_edges(const std::vector<EdgeOrder>& tree_edges) {
    int v = node_count();
    std::vector<std::vector<std::pair<NodeId, EdgeOrder>>> adj(v);
    for (EdgeOrder e : tree_edges) {
        auto [a, b] = g_->endpoints(e);
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    rec_.assign(v, {});
    rec_[0].parent = -1;
    std::vector<NodeId> stack{0};
    std::vector<char> seen(v, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (auto [nb, e] : adj[x]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                rec_[nb].edge = e;
                rec_[nb].parent = x;
                stack.push_back(nb);
            }
        }
    }
    rebuild_from_parents();
}

void SpanningTreeState::rebuild_from_parents() {
    int v = node_count();
    children_.assign(v, {});
    sigma_ = 0;
    for (NodeId n = 0; n < v; ++n) {
        rec_[n].degree_in_tree = 0;
        rec_[n].non_minimal_descendants = 0;
    }
    for (NodeId n = 1; n < v; ++n) {
        children_[rec_[n].parent].push_back(n);
        rec_[n].degree_in_tree++;
        rec_[rec_[n].parent].degree_in_tree++;
        sigma_ += rec_[n].edge;
    }
    // Path lengths by walking down from node zero.
    rec_[0].path_len_to_zero = 0;
    std::vector<NodeId> order{0};
    order.reserve(v);
    for (std::size_t i = 0; i < order.size(); ++i) {
        NodeId x = order[i];
        for (NodeId c : children_[x]) {
            rec_[c].path_len_to_zero = rec_[x].path_len_to_zero + 1;
            order.push_back(c);
        }
    }
    // Node zero's pair exists only while it is a leaf (its one incident edge).
    if (rec_[0].degree_in_tree == 1) {
        NodeId c0 = children_[0].front();
        rec_[0].edge = rec_[c0].edge;
        rec_[0].parent = c0;
    } else {
        rec_[0].edge = 0;
        rec_[0].parent = -1;
    }
    // nmd bottom-up (deepest first).
    for (std::size_t i = order.size(); i-- > 1;) {
        NodeId x = order[i];
        NodeId p = rec_[x].parent;
        rec_[p].non_minimal_descendants +=
            rec_[x].non_minimal_descendants + (is_minimal_pair(x) ? 0 : 1);
    }
}

PairClass SpanningTreeState::classify_pair(NodeId v) const {
    if (!has_pair(v))
        throw std::logic_error("classify_pair: node zero has no pair while internal");
    bool mn = is_minimal_pair(v);
    bool mx = is_maximal_pair(v);
    if (mn && mx)
        return PairClass::both;
    if (mn)
        return PairClass::minimal;
    if (mx)
        return PairClass::maximal;
    return PairClass::neither;
}

TreeClassification SpanningTreeState::classify_tree() const {
    int v = node_count();
    bool nm_leaf = false;
    Standings best{v + 1, -1};
    NodeId best_node = -1;
    for (NodeId n = 0; n < v; ++n) {
        if (!has_pair(n) || is_minimal_pair(n))
            continue;
        Standings s = standings(n);
        if (is_leaf(n))
            nm_leaf = true;
        if (best_node < 0 || s < best) {
            best = s;
            best_node = n;
        }
    }
    return {nm_leaf ? 2 : 1, best_node};
}

bool SpanningTreeState::subtree_contains(NodeId root, NodeId query) const {
    if (root == 0)
        return true;
    int rl = rec_[root].path_len_to_zero;
    NodeId x = query;
    while (rec_[x].path_len_to_zero > rl)
        x = rec_[x].parent;
    return x == root;
}

EdgeOrder SpanningTreeState::find_promotion(NodeId v) const {
    if (!has_pair(v))
        return 0;
    EdgeOrder cur = rec_[v].edge;
    bool leaf = is_leaf(v) || v == 0;
    for (const auto& inc : g_->incident_by_order(v)) {
        if (inc.order <= cur)
            continue;
        if (leaf || !subtree_contains(v, inc.neighbor))
            return inc.order;
    }
    return 0;
}

void SpanningTreeState::for_each_in_subtree(NodeId v, const std::function<void(NodeId)>& fn) const {
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        fn(x);
        for (NodeId c : children_[x])
            stack.push_back(c);
    }
}

int SpanningTreeState::subtree_size(NodeId v) const {
    int n = 0;
    for_each_in_subtree(v, [&](NodeId) { ++n; });
    return n;
}

std::vector<EdgeOrder> SpanningTreeState::tree_edges_sorted() const {
    std::vector<EdgeOrder> out;
    out.reserve(node_count() - 1);
    for (NodeId n = 1; n < node_count(); ++n)
        out.push_back(rec_[n].edge);
    std::sort(out.begin(), out.end());
    return out;
}

void SpanningTreeState::shift_subtree(NodeId v, int delta_pl) {
    subtree_scratch_.clear();
    std::vector<NodeId>& stack = subtree_scratch_;
    stack.push_back(v);
    std::size_t i = 0;
    while (i < stack.size()) {
        NodeId x = stack[i++];
        rec_[x].path_len_to_zero += delta_pl;
        for (NodeId c : children_[x])
            stack.push_back(c);
    }
}

void SpanningTreeState::adjust_nmd_chain(NodeId from, int delta) {
    for (NodeId x = from;; x = rec_[x].parent) {
        int before = rec_[x].non_minimal_descendants;
        rec_[x].non_minimal_descendants = before + delta;
        if ((before == 0) != (rec_[x].non_minimal_descendants == 0))
            nmd_crossed_.push_back(x);
        if (x == 0)
            break;
    }
}

PromotionDelta SpanningTreeState::promote_with(NodeId v, EdgeOrder target) {
    if (target == 0)
        throw std::logic_error("promote: pair has no legal promotion");
    if (v == 0)
        return promote_zero(target);

    PromotionDelta d;
    d.node = v;
    d.removed = rec_[v].edge;
    d.added = target;
    d.uncovered = rec_[v].parent;
    d.covered = g_->other_end(target, v);
    d.was_non_minimal = !is_minimal_pair(v);
    d.old_path_len = rec_[v].path_len_to_zero;
    d.child_type = is_leaf(v) ? 2 : 1;
    d.seq = ++seq_;
    assert(d.covered != 0);

    nmd_crossed_.clear();
    NodeId u = d.uncovered, w = d.covered;

    int new_pl = rec_[w].path_len_to_zero + 1;
    shift_subtree(v, new_pl - d.old_path_len);
    d.subtree_size = static_cast<int>(subtree_scratch_.size());

    auto& cu = children_[u];
    cu.erase(std::find(cu.begin(), cu.end(), v));
    children_[w].push_back(v);
    rec_[v].edge = d.added;
    rec_[v].parent = w;
    rec_[u].degree_in_tree--;
    rec_[w].degree_in_tree++;
    sigma_ += d.added - d.removed;

    if (d.was_non_minimal)
        adjust_nmd_chain(u, -1);
    adjust_nmd_chain(w, +1);

    // Uncovering may turn node zero into a leaf; it then adopts its one edge.
    if (u == 0 && rec_[0].degree_in_tree == 1) {
        NodeId c0 = children_[0].front();
        rec_[0].edge = rec_[c0].edge;
        rec_[0].parent = c0;
    }
    return d;
}

void SpanningTreeState::undo(const PromotionDelta& d) {
    if (d.seq != seq_)
        throw std::logic_error("undo: deltas must be reverted in stack order");
    --seq_;
    if (d.zero_flip) {
        apply_zero_exchange(d.added, d.removed);
        return;
    }
    NodeId v = d.node;
    assert(rec_[v].edge == d.added && rec_[v].parent == d.covered);
    nmd_crossed_.clear();

    if (d.was_non_minimal)
        adjust_nmd_chain(d.uncovered, +1);
    adjust_nmd_chain(d.covered, -1);

    shift_subtree(v, d.old_path_len - rec_[v].path_len_to_zero);

    auto& cw = children_[d.covered];
    cw.erase(std::find(cw.begin(), cw.end(), v));
    children_[d.uncovered].push_back(v);
    rec_[v].edge = d.removed;
    rec_[v].parent = d.uncovered;
    rec_[d.covered].degree_in_tree--;
    rec_[d.uncovered].degree_in_tree++;
    sigma_ -= d.added - d.removed;

    if (d.uncovered == 0 && rec_[0].degree_in_tree == 2) {
        rec_[0].edge = 0;
        rec_[0].parent = -1;
    }
}

PromotionDelta SpanningTreeState::promote_zero(EdgeOrder target) {
    PromotionDelta d;
    d.node = 0;
    d.removed = rec_[0].edge;
    d.added = target;
    d.uncovered = rec_[0].parent;
    d.covered = g_->other_end(target, 0);
    d.was_non_minimal = !is_minimal_pair(0);
    d.old_path_len = 0;
    d.subtree_size = 1;
    d.child_type = 2;
    d.zero_flip = true;
    d.seq = ++seq_;
    apply_zero_exchange(d.removed, d.added);
    return d;
}

void SpanningTreeState::apply_zero_exchange(EdgeOrder removed, EdgeOrder added) {
    // Node zero's pendant edge moves; parent orientation flips along the old
    // path from the newly covered node up to node zero.
    NodeId w = g_->other_end(added, 0);
    std::vector<NodeId> chain;
    for (NodeId x = w; x != 0; x = rec_[x].parent)
        chain.push_back(x);
    std::vector<EdgeOrder> old_edges(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i)
        old_edges[i] = rec_[chain[i]].edge;

    rec_[w].edge = added;
    rec_[w].parent = 0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        rec_[chain[i + 1]].edge = old_edges[i];
        rec_[chain[i + 1]].parent = chain[i];
    }
    (void)removed; // the old pendant edge simply leaves the tree
    rebuild_from_parents();
    subtree_scratch_.assign(1, 0);
    nmd_crossed_.clear();
}

bool SpanningTreeState::verify_attributes(std::string* diag) const {
    int v = node_count();
    auto fail = [&](const std::string& msg) {
        if (diag)
            *diag = msg;
        return false;
    };

    std::vector<int> deg(v, 0);
    long long sig = 0;
    for (NodeId n = 1; n < v; ++n) {
        if (rec_[n].edge == 0)
            return fail("missing pair edge at node " + std::to_string(n));
        auto [a, b] = g_->endpoints(rec_[n].edge);
        if (a != n && b != n)
            return fail("pair edge not incident at node " + std::to_string(n));
        if (g_->other_end(rec_[n].edge, n) != rec_[n].parent)
            return fail("parent mismatch at node " + std::to_string(n));
        deg[a]++;
        deg[b]++;
        sig += rec_[n].edge;
    }
    if (sig != sigma_)
        return fail("sigma mismatch");
    for (NodeId n = 0; n < v; ++n)
        if (deg[n] != rec_[n].degree_in_tree)
            return fail("degree mismatch at node " + std::to_string(n));

    // Path lengths + acyclicity via downward BFS.
    std::vector<int> pl(v, -1);
    pl[0] = 0;
    std::vector<NodeId> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        NodeId x = order[i];
        for (NodeId c : children_[x]) {
            if (pl[c] != -1)
                return fail("cycle in children lists");
            pl[c] = pl[x] + 1;
            order.push_back(c);
        }
    }
    if (static_cast<int>(order.size()) != v)
        return fail("children lists do not span the tree");
    for (NodeId n = 0; n < v; ++n)
        if (pl[n] != rec_[n].path_len_to_zero)
            return fail("path length mismatch at node " + std::to_string(n));

    std::vector<int> nmd(v, 0);
    for (std::size_t i = order.size(); i-- > 1;) {
        NodeId x = order[i];
        nmd[rec_[x].parent] += nmd[x] + (is_minimal_pair(x) ? 0 : 1);
    }
    for (NodeId n = 0; n < v; ++n)
        if (nmd[n] != rec_[n].non_minimal_descendants)
            return fail("nmd mismatch at node " + std::to_string(n));

    if (rec_[0].degree_in_tree == 1) {
        NodeId c0 = children_[0].front();
        if (rec_[0].edge != rec_[c0].edge || rec_[0].parent != c0)
            return fail("node zero leaf pair not adopted");
    } else if (rec_[0].edge != 0) {
        return fail("internal node zero must have NIL pair");
    }
    return true;
}

} // namespace mp

#include "mp/enumerator.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace mp {

namespace {

struct Frame {
    std::uint64_t id = 0;
    int parent_type = 1;
    int phase = 0; // 0 = promotable-pairs traversal, 1 = pilot adjacency loop, 2 = done
    bool pp_started = false;
    StandingSet::Cursor pp_cursor;
    std::size_t adj_idx = 0;
    Engine::Applied applied; // how this tree was reached (unused for the root)
    ChildInfo info;
};

class Walker {
public:
    Walker(const Graph& g, EventSink* sink, const EnumerateOptions& opts)
        : g_(g), sink_(sink), opts_(opts), engine_(g) {}

    EnumerationSummary run() {
        try {
            walk();
        } catch (...) {
            while (stack_.size() > 1) {
                engine_.revert(stack_.back().applied);
                stack_.pop_back();
            }
            throw;
        }
        return summary_;
    }

private:
    void check_event(const ChildInfo& info) {
        if (opts_.check_invariants) {
            auto [a1, b1] = g_.endpoints(info.removed);
            auto [a2, b2] = g_.endpoints(info.added);
            int shared = (a1 == a2) + (a1 == b2) + (b1 == a2) + (b1 == b2);
            if (shared != 1)
                throw VerificationError("exchange does not share exactly one endpoint");
            if (info.added <= info.removed)
                throw VerificationError("sigma not strictly increasing");
            if (info.tree_type == 2 && info.partition_size != 1)
                throw VerificationError("type-2 exchange with partition size != 1");
            std::uint64_t bound =
                2ULL * g_.edge_count() - static_cast<std::uint64_t>(g_.node_count());
            if (stack_.size() - 1 > bound)
                throw VerificationError("computational-tree depth exceeds 2E - V");
        }
        if (opts_.verify_attributes_every &&
            summary_.total % opts_.verify_attributes_every == 0) {
            std::string diag;
            if (!engine_.state().verify_attributes(&diag))
                throw VerificationError("attribute recompute mismatch: " + diag);
        }
        if (opts_.verify_structures_every &&
            summary_.total % opts_.verify_structures_every == 0) {
            std::string diag;
            if (!engine_.matches_scratch_rebuild(&diag))
                throw VerificationError("structure scratch-rebuild mismatch: " + diag);
        }
    }

    void descend(NodeId v, Frame& parent) {
        Engine::Applied applied = engine_.apply(v);
        const auto& d = applied.delta;

        Frame child;
        child.id = next_id_++;
        child.parent_type = d.child_type;
        child.applied = applied;
        child.info.id = child.id;
        child.info.parent_id = parent.id;
        child.info.removed = d.removed;
        child.info.added = d.added;
        child.info.tree_type = d.child_type;
        child.info.promoted = d.node;
        child.info.covered = d.covered;
        child.info.uncovered = d.uncovered;
        child.info.subtree_size = d.subtree_size;
        child.info.partition_size = std::min(d.subtree_size, g_.node_count() - d.subtree_size);

        // Pushed before any check can throw, so abort paths revert it.
        stack_.push_back(std::move(child));
        const ChildInfo& info = stack_.back().info;
        summary_.max_dfs_depth =
            std::max<std::uint64_t>(summary_.max_dfs_depth, stack_.size() - 1);

        summary_.total++;
        if (d.child_type == 1) {
            summary_.type1++;
            if (parent_is_type2_)
                summary_.type1_from_2++;
        } else {
            summary_.type2++;
        }
        summary_.partition_size_sum += info.partition_size;
        summary_.max_partition = std::max(summary_.max_partition, info.partition_size);

        if (summary_.total > opts_.max_trees)
            throw GuardExceeded("tree-count guard exceeded (" + std::to_string(opts_.max_trees) +
                                ")");
        if (sink_)
            sink_->on_child(engine_.state(), info);
        check_event(info);
    }

    // One step of the top frame; returns false when the frame is exhausted.
    bool step(Frame& f) {
        NodeId pilot = engine_.pilot();
        bool type2_parent = pilot >= 0 && engine_.state().is_leaf(pilot);
        parent_is_type2_ = type2_parent;

        if (f.phase == 0) {
            const auto& pp = engine_.promotable_pairs();
            auto cur = f.pp_started ? pp.next(f.pp_cursor) : pp.first();
            // Traversal bound: type-1 parents run until next-to-pilot; type-2
            // parents take leaves down to the pilot's node order inclusive.
            Standings bound{0, -1};
            bool bounded = false;
            if (type2_parent) {
                bound = {0, pilot};
                bounded = true;
            } else if (pilot >= 0) {
                NodeId ntp = engine_.next_to_pilot();
                if (ntp >= 0) {
                    bound = {engine_.pilot_candidates().depth_of(ntp), ntp};
                    bounded = true;
                }
            }
            while (cur.valid) {
                Standings key{cur.depth, cur.node};
                if (bounded && (type2_parent ? bound < key : !(key < bound)))
                    break;
                f.pp_started = true;
                f.pp_cursor = cur;
                if (engine_.would_be_pilot(cur.node)) {
                    descend(cur.node, f);
                    return true;
                }
                cur = pp.next(cur);
            }
            f.phase = type2_parent ? 1 : 2;
            f.adj_idx = 0;
        }
        if (f.phase == 1) {
            // Promotions that cover the pilot node. Leaf promotions with node
            // order above the pilot already ran in the traversal; internal
            // promotions never did (their post-promotion depth is positive).
            const auto& adj = g_.adjacency(pilot);
            while (f.adj_idx < adj.size()) {
                auto inc = adj[f.adj_idx++];
                NodeId x = inc.neighbor;
                if (!engine_.state().has_pair(x))
                    continue;
                if (engine_.state().is_leaf(x) && x > pilot)
                    continue;
                if (engine_.cached_promotion(x) != inc.order)
                    continue;
                if (engine_.would_be_pilot(x)) {
                    descend(x, f);
                    return true;
                }
            }
            f.phase = 2;
        }
        return false;
    }

    void walk() {
        summary_ = {};
        next_id_ = 0;

        Frame root;
        root.id = next_id_++;
        summary_.total = 1;
        summary_.type1 = 1;
        if (sink_)
            sink_->on_root(engine_.state(), engine_.state().tree_edges_sorted());
        stack_.push_back(std::move(root));

        while (!stack_.empty()) {
            if (step(stack_.back()))
                continue;
            Frame done = std::move(stack_.back());
            stack_.pop_back();
            if (stack_.empty())
                break;
            engine_.revert(done.applied);
            if (sink_)
                sink_->on_undo(engine_.state(), done.info);
        }
    }

    const Graph& g_;
    EventSink* sink_;
    EnumerateOptions opts_;
    Engine engine_;
    EnumerationSummary summary_;
    std::vector<Frame> stack_;
    std::uint64_t next_id_ = 0;
    bool parent_is_type2_ = false;
};

} // namespace

EnumerationSummary enumerate(const Graph& g, EventSink* sink, const EnumerateOptions& opts) {
    Walker walker(g, sink, opts);
    return walker.run();
}

EnumerationSummary count_only(const Graph& g, const EnumerateOptions& opts) {
    return enumerate(g, nullptr, opts);
}

void write_root_event(std::ostream& out, const std::vector<EdgeOrder>& edges) {
    out << 'R';
    for (EdgeOrder e : edges)
        out << ' ' << e;
    out << '\n';
}

void write_child_event(std::ostream& out, const ChildInfo& info) {
    out << "C " << info.id << ' ' << info.parent_id << " - " << info.removed << " + "
        << info.added << " K " << info.tree_type << '\n';
}

void write_summary_line(std::ostream& out, const EnumerationSummary& s) {
    out << "S total=" << s.total << " t1=" << s.type1 << " t2=" << s.type2
        << " t1f2=" << s.type1_from_2 << " depth=" << s.max_dfs_depth << '\n';
}

void StreamSink::on_root(const SpanningTreeState&, const std::vector<EdgeOrder>& edges) {
    write_root_event(*out_, edges);
}

void StreamSink::on_child(const SpanningTreeState&, const ChildInfo& info) {
    write_child_event(*out_, info);
}

void replay(std::istream& events,
            const std::function<void(std::uint64_t, const std::vector<EdgeOrder>&)>& emit) {
    std::string line;
    std::vector<char> present; // indexed by edge order, tracks the stack top's tree
    struct Entry {
        std::uint64_t id;
        EdgeOrder removed, added;
    };
    std::vector<Entry> stack;
    // Retained diffs for parents no longer on the stack (non-preorder input).
    std::unordered_map<std::uint64_t, Entry> retained;
    std::vector<EdgeOrder> root_edges;
    bool have_root = false;
    std::vector<EdgeOrder> scratch;

    auto snapshot = [&]() {
        scratch.clear();
        for (std::size_t e = 1; e < present.size(); ++e)
            if (present[e])
                scratch.push_back(static_cast<EdgeOrder>(e));
        return scratch;
    };
    auto rebuild_to = [&](std::uint64_t parent_id) {
        // Reconstruct the parent's tree from the root along retained diffs.
        std::vector<std::pair<std::uint64_t, Entry>> chain;
        std::uint64_t at = parent_id;
        while (at != 0) {
            auto it = retained.find(at);
            if (it == retained.end())
                throw std::runtime_error("replay: dangling parent id " + std::to_string(parent_id));
            chain.push_back({at, it->second});
            at = it->second.id; // id field holds the parent link in the retained map
        }
        std::fill(present.begin(), present.end(), 0);
        for (EdgeOrder e : root_edges)
            present[e] = 1;
        stack.clear();
        stack.push_back({0, 0, 0});
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            present[it->second.removed] = 0;
            present[it->second.added] = 1;
            stack.push_back({it->first, it->second.removed, it->second.added});
        }
    };

    while (std::getline(events, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'S')
            continue;
        if (tag == 'R') {
            if (have_root)
                throw std::runtime_error("replay: duplicate root event");
            have_root = true;
            EdgeOrder e;
            while (ls >> e)
                root_edges.push_back(e);
            EdgeOrder max_e =
                root_edges.empty() ? 0 : *std::max_element(root_edges.begin(), root_edges.end());
            present.assign(max_e + 1, 0);
            for (EdgeOrder x : root_edges)
                present[x] = 1;
            stack.push_back({0, 0, 0});
            emit(0, snapshot());
            continue;
        }
        if (tag != 'C')
            throw std::runtime_error("replay: unrecognized event line: " + line);
        if (!have_root)
            throw std::runtime_error("replay: child event before root");
        std::uint64_t id, parent_id;
        char dash, plus, kay;
        long removed, added;
        int type;
        if (!(ls >> id >> parent_id >> dash >> removed >> plus >> added >> kay >> type) ||
            dash != '-' || plus != '+' || kay != 'K')
            throw std::runtime_error("replay: malformed child event: " + line);
        bool on_stack = false;
        for (const auto& s : stack)
            if (s.id == parent_id) {
                on_stack = true;
                break;
            }
        if (on_stack) {
            while (stack.back().id != parent_id) {
                present[stack.back().added] = 0;
                present[stack.back().removed] = 1;
                stack.pop_back();
            }
        } else {
            rebuild_to(parent_id);
        }
        if (removed <= 0 || removed >= static_cast<long>(present.size()) || !present[removed])
            throw std::runtime_error("replay: removed edge not present in parent");
        if (added <= 0)
            throw std::runtime_error("replay: bad added edge");
        if (added >= static_cast<long>(present.size()))
            present.resize(added + 1, 0);
        if (present[added])
            throw std::runtime_error("replay: added edge already present");
        present[removed] = 0;
        present[added] = 1;
        stack.push_back({id, static_cast<EdgeOrder>(removed), static_cast<EdgeOrder>(added)});
        retained[id] = {parent_id, static_cast<EdgeOrder>(removed), static_cast<EdgeOrder>(added)};
        emit(id, snapshot());
    }
    if (!have_root)
        throw std::runtime_error("replay: empty event stream");
}

} // namespace mp

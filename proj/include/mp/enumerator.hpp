#ifndef MP_ENUMERATOR_HPP
#define MP_ENUMERATOR_HPP

#include "mp/exchange.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mp {

class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

struct ChildInfo {
    std::uint64_t id = 0;
    std::uint64_t parent_id = 0;
    EdgeOrder removed = 0;
    EdgeOrder added = 0;
    int tree_type = 2;      // 1 = internal promotion, 2 = leaf promotion
    NodeId promoted = -1;
    NodeId covered = -1;
    NodeId uncovered = -1;
    int subtree_size = 0;   // nodes moved by the exchange
    int partition_size = 0; // smaller side of the cut, min(s, V-s)
};

// Sink callbacks run synchronously on the enumerating thread. on_undo fires
// after a child's subtree is fully explored and the exchange reverted; the
// state passed is the parent tree again.
class EventSink {
public:
    virtual ~EventSink() = default;
    virtual void on_root(const SpanningTreeState&, const std::vector<EdgeOrder>& edges) {
        (void)edges;
    }
    virtual void on_child(const SpanningTreeState&, const ChildInfo&) {}
    virtual void on_undo(const SpanningTreeState&, const ChildInfo&) {}
};

struct EnumerationSummary {
    std::uint64_t total = 0;
    std::uint64_t type1 = 0; // includes the root tree
    std::uint64_t type2 = 0;
    std::uint64_t type1_from_2 = 0;
    std::uint64_t max_dfs_depth = 0;
    std::uint64_t partition_size_sum = 0; // sum of min(s, V-s) over child events
    int max_partition = 0;
};

struct EnumerateOptions {
    std::uint64_t max_trees = 100000000ULL;
    int verify_structures_every = 0; // scratch-rebuild equality check (0 = off)
    int verify_attributes_every = 0; // recompute-equality check (0 = off)
    bool check_invariants = false;   // single-end, sigma-monotone, depth bound, type-2 partition
};

EnumerationSummary enumerate(const Graph& g, EventSink* sink, const EnumerateOptions& opts = {});
EnumerationSummary count_only(const Graph& g, const EnumerateOptions& opts = {});

// Event-stream text format.
void write_root_event(std::ostream& out, const std::vector<EdgeOrder>& edges);
void write_child_event(std::ostream& out, const ChildInfo& info);
void write_summary_line(std::ostream& out, const EnumerationSummary& s);

class StreamSink : public EventSink {
public:
    explicit StreamSink(std::ostream& out) : out_(&out) {}
    void on_root(const SpanningTreeState&, const std::vector<EdgeOrder>& edges) override;
    void on_child(const SpanningTreeState&, const ChildInfo& info) override;

private:
    std::ostream* out_;
};

// Reconstructs explicit edge sets from an event stream. Memory stays
// proportional to the DFS path for preorder streams (parents are popped as
// soon as a sibling branch starts).
void replay(std::istream& events,
            const std::function<void(std::uint64_t id, const std::vector<EdgeOrder>&)>& emit);

} // namespace mp

#endif

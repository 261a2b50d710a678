#include "mp/oracle.hpp"

#include "mp/tree_state.hpp"

#include <algorithm>
#include <numeric>

namespace mp {

namespace {

// Union-find with undo, no path compression.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x)
            x = parent_[x];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        return true;
    }

    void rollback() {
        int b = trail_.back();
        trail_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<int> parent_, size_;
    std::vector<int> trail_;
};

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap)
            return cap + 1;
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

std::set<EdgeSet> brute_force_enumerate(const Graph& g, std::uint64_t max_subsets) {
    int v = g.node_count();
    int e = g.edge_count();
    int need = v - 1;
    if (binomial_capped(e, need, max_subsets) > max_subsets)
        throw OracleError("brute force instance too large");

    std::set<EdgeSet> out;
    RollbackDsu dsu(v);
    EdgeSet picked;
    picked.reserve(need);

    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(picked.size()) == need) {
            out.insert(picked);
            return;
        }
        int remaining = need - static_cast<int>(picked.size());
        for (int ord = start; ord + remaining - 1 <= e; ++ord) {
            auto [a, b] = g.endpoints(ord);
            if (!dsu.unite(a, b))
                continue;
            picked.push_back(ord);
            self(self, ord + 1);
            picked.pop_back();
            dsu.rollback();
        }
    };
    rec(rec, 1);
    return out;
}

std::uint64_t kirchhoff_count(const Graph& g) {
    using Wide = __int128;
    int n = g.node_count() - 1; // delete row/column of node zero
    if (n == 0)
        return 1;
    std::vector<std::vector<Wide>> m(n, std::vector<Wide>(n, 0));
    for (NodeId v = 1; v < g.node_count(); ++v)
        m[v - 1][v - 1] = g.degree(v);
    for (EdgeOrder e = 1; e <= g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a > 0 && b > 0) {
            m[a - 1][b - 1] -= 1;
            m[b - 1][a - 1] -= 1;
        }
    }

    auto checked_mul = [](Wide a, Wide b) {
        Wide r;
        if (__builtin_mul_overflow(a, b, &r))
            throw OracleError("kirchhoff determinant overflows 128-bit intermediates");
        return r;
    };

    // Bareiss fraction-free elimination: every division is exact.
    Wide prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return 0;
            std::swap(m[k], m[swap_row]);
            for (auto& x : m[k])
                x = -x;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (checked_mul(m[i][j], m[k][k]) - checked_mul(m[i][k], m[k][j])) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Wide det = m[n - 1][n - 1];
    if (det < 0)
        throw OracleError("kirchhoff determinant negative (not a Laplacian minor?)");
    if (det > Wide(~std::uint64_t(0)))
        throw OracleError("kirchhoff count exceeds 64 bits");
    return static_cast<std::uint64_t>(det);
}

TreeFacts tree_facts(const Graph& g, const EdgeSet& tree) {
    SpanningTreeState st(g);
    st.reset_to_edges(tree);
    auto cls = st.classify_tree();
    return {cls.type, cls.pilot, st.sigma()};
}

std::vector<DefinitionalChild> definitional_children(const Graph& g, const EdgeSet& tree) {
    SpanningTreeState st(g);
    st.reset_to_edges(tree);

    std::vector<DefinitionalChild> out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!st.has_pair(v))
            continue;
        EdgeOrder target = st.find_promotion(v);
        if (target == 0)
            continue;
        EdgeOrder removed = st.record(v).edge;
        EdgeSet child = tree;
        child.erase(std::find(child.begin(), child.end(), removed));
        child.push_back(target);
        std::sort(child.begin(), child.end());

        SpanningTreeState cs(g);
        cs.reset_to_edges(child);
        auto cls = cs.classify_tree();
        if (cls.pilot == v)
            out.push_back({std::move(child), v});
    }
    return out;
}

} // namespace mp

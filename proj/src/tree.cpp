#include "treearch/tree.hpp"

#include <algorithm>
#include <queue>

namespace treearch {

Tree::Tree(std::vector<std::vector<int>> neighbors, std::vector<std::string> labels,
           int root, std::unordered_map<std::uint64_t, double> weights)
    : adj_(std::move(neighbors)), labels_(std::move(labels)), root_(root),
      weights_(std::move(weights)) {
    if (labels_.empty()) labels_.resize(adj_.size());
    validate_and_index();
}

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                      std::vector<std::string> labels, int root,
                      std::unordered_map<std::uint64_t, double> weights) {
    if (n <= 0) throw invalid_tree_error("tree is empty");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_tree_error("edge endpoint out of range: " + std::to_string(u) +
                                     "-" + std::to_string(v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return Tree(std::move(adj), std::move(labels), root, std::move(weights));
}

void Tree::validate_and_index() {
    const int n = this->n();
    if (n == 0) throw invalid_tree_error("tree is empty");
    if (static_cast<int>(labels_.size()) != n)
        throw invalid_tree_error("label list length does not match vertex count");
    if (root_ < -1 || root_ >= n)
        throw invalid_tree_error("root vertex out of range");

    std::size_t dir_edges = 0;
    for (int u = 0; u < n; ++u) dir_edges += adj_[u].size();
    dir_index_.reserve(dir_edges * 2);

    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(adj_[u].size()); ++i) {
            int v = adj_[u][i];
            if (v < 0 || v >= n)
                throw invalid_tree_error("neighbor id out of range at vertex " +
                                         std::to_string(u));
            if (v == u)
                throw invalid_tree_error("self-loop at vertex " + std::to_string(u));
            if (!dir_index_.emplace(dir_key(u, v), i).second)
                throw invalid_tree_error("duplicate edge " + std::to_string(u) + "-" +
                                         std::to_string(v) + " in rotation at vertex " +
                                         std::to_string(u));
        }
    }
    for (const auto& [key, idx] : dir_index_) {
        (void)idx;
        int u = static_cast<int>(key >> 32);
        int v = static_cast<int>(key & 0xffffffffu);
        if (dir_index_.count(dir_key(v, u)) == 0)
            throw invalid_tree_error("adjacency not symmetric for edge " + std::to_string(u) +
                                     "-" + std::to_string(v));
    }

    std::size_t undirected = dir_edges / 2;
    if (undirected != static_cast<std::size_t>(n) - 1) {
        std::string msg = "expected " + std::to_string(n - 1) + " edges, got " +
                          std::to_string(undirected);
        msg += undirected > static_cast<std::size_t>(n) - 1 ? " (cycle detected)"
                                                            : " (disconnected)";
        throw invalid_tree_error(msg);
    }

    // Connectivity; with n-1 edges this also rules out cycles.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != n) throw invalid_tree_error("tree is disconnected (with a cycle elsewhere)");

    for (const auto& [key, w] : weights_) {
        int u = static_cast<int>(key >> 32);
        int v = static_cast<int>(key & 0xffffffffu);
        if (key != edge_key(u, v) || dir_index_.count(dir_key(u, v)) == 0)
            throw invalid_tree_error("weight given for non-edge " + std::to_string(u) + "-" +
                                     std::to_string(v));
        if (!(w > 0.0))
            throw invalid_tree_error("non-positive weight on edge " + std::to_string(u) + "-" +
                                     std::to_string(v));
    }
}

int Tree::find_label(const std::string& label) const {
    for (int v = 0; v < n(); ++v)
        if (labels_[v] == label) return v;
    return -1;
}

double Tree::weight(int u, int v) const {
    auto it = weights_.find(edge_key(u, v));
    if (it == weights_.end())
        throw invalid_tree_error("missing weight on edge " + std::to_string(u) + "-" +
                                 std::to_string(v));
    return it->second;
}

int Tree::index_of(int u, int v) const {
    auto it = dir_index_.find(dir_key(u, v));
    if (it == dir_index_.end())
        throw invalid_tree_error("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->second;
}

int Tree::rot_next(int u, int v) const {
    const auto& nb = adj_[u];
    int i = index_of(u, v);
    return nb[(i + 1) % nb.size()];
}

int Tree::rot_prev(int u, int v) const {
    const auto& nb = adj_[u];
    int i = index_of(u, v);
    return nb[(i + nb.size() - 1) % nb.size()];
}

Tree Tree::with_rotation(std::vector<std::vector<int>> neighbors) const {
    return Tree(std::move(neighbors), labels_, root_, weights_);
}

Tree Tree::with_root(int root) const {
    Tree t = *this;
    if (root < -1 || root >= n()) throw invalid_tree_error("root vertex out of range");
    t.root_ = root;
    return t;
}

bool Tree::operator==(const Tree& o) const {
    return adj_ == o.adj_ && labels_ == o.labels_ && root_ == o.root_ && weights_ == o.weights_;
}

std::vector<int> leaves_in_tour_order(const Tree& t, int root) {
    std::vector<int> out;
    if (t.n() == 1) {
        out.push_back(root);
        return out;
    }
    bool root_is_leaf = t.degree(root) <= 1;
    if (root_is_leaf) out.push_back(root);
    for_each_tour_edge(t, root, t.neighbors(root)[0], [&](int, int v) {
        if (v != root && t.degree(v) <= 1) out.push_back(v);
    });
    return out;
}

std::vector<char> degree3_hull(const Tree& t) {
    const int n = t.n();
    std::vector<char> alive(n, 1);
    std::vector<int> cur_deg(n);
    std::queue<int> prune;
    for (int v = 0; v < n; ++v) {
        cur_deg[v] = t.degree(v);
        if (cur_deg[v] <= 1 && t.degree(v) != 3) prune.push(v);
    }
    while (!prune.empty()) {
        int v = prune.front();
        prune.pop();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (int w : t.neighbors(v)) {
            if (!alive[w]) continue;
            if (--cur_deg[w] <= 1 && t.degree(w) != 3) prune.push(w);
        }
    }
    return alive;
}

int choose_root(const Tree& t) {
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) >= 4) return v;
    std::vector<char> hull = degree3_hull(t);
    int branch_count = 0;
    int best = -1;
    for (int v = 0; v < t.n(); ++v) {
        if (!hull[v]) continue;
        int d = 0;
        for (int w : t.neighbors(v))
            if (hull[w]) ++d;
        if (d == 3) {
            ++branch_count;
            if (best < 0) best = v;
        }
    }
    if (branch_count < 2)
        throw invalid_tree_error(
            "root selection requires a vertex of degree >= 4 or at least two branch "
            "vertices in the degree-3 hull");
    return best;
}

} // namespace treearch

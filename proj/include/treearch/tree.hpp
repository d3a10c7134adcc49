#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treearch/errors.hpp"

namespace treearch {

// ---------------------------------------------------------------------------
// Tree with rotation system
// ---------------------------------------------------------------------------

// Undirected tree on vertices 0..n-1.  The neighbor list of each vertex is
// ordered: it is the counterclockwise rotation of edges around that vertex,
// i.e. a plane embedding.  Optionally carries a designated root, per-vertex
// labels, and positive edge weights.  Immutable after construction; the
// constructor validates tree-ness and builds an O(1) directed-edge index.
class Tree {
public:
    Tree() = default;

    explicit Tree(std::vector<std::vector<int>> neighbors,
                  std::vector<std::string> labels = {},
                  int root = -1,
                  std::unordered_map<std::uint64_t, double> weights = {});

    // Builds adjacency in edge-list order (each endpoint's list gets the other
    // endpoint appended as edges are scanned).
    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                           std::vector<std::string> labels = {}, int root = -1,
                           std::unordered_map<std::uint64_t, double> weights = {});

    int n() const noexcept { return static_cast<int>(adj_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int root() const noexcept { return root_; }
    bool has_root() const noexcept { return root_ >= 0; }

    const std::string& label(int v) const { return labels_[v]; }
    // Vertex with the given label, or -1.  Labels are display names; lookup is
    // linear and meant for CLI argument resolution only.
    int find_label(const std::string& label) const;

    bool weighted() const noexcept { return !weights_.empty(); }
    bool has_weight(int u, int v) const { return weights_.count(edge_key(u, v)) != 0; }
    double weight(int u, int v) const;
    const std::unordered_map<std::uint64_t, double>& weights() const noexcept { return weights_; }

    // Position of v within neighbors(u); throws if (u,v) is not an edge.
    int index_of(int u, int v) const;
    bool has_edge(int u, int v) const { return dir_index_.count(dir_key(u, v)) != 0; }
    // Neighbor of u cyclically after / before v in the rotation at u.
    int rot_next(int u, int v) const;
    int rot_prev(int u, int v) const;

    // Same tree, different embedding / root.
    Tree with_rotation(std::vector<std::vector<int>> neighbors) const;
    Tree with_root(int root) const;

    bool operator==(const Tree& o) const;
    bool operator!=(const Tree& o) const { return !(*this == o); }

    static std::uint64_t edge_key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

private:
    static std::uint64_t dir_key(int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    void validate_and_index();

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int root_ = -1;
    std::unordered_map<std::uint64_t, double> weights_;
    std::unordered_map<std::uint64_t, int> dir_index_; // (u,v) -> position of v in adj_[u]
};

// ---------------------------------------------------------------------------
// Traversal
// ---------------------------------------------------------------------------

// Walks the boundary of the single face of the embedded tree: starting from
// the directed edge (u0, v0), each step continues with the neighbor of the
// head that follows the tail in the head's rotation.  Visits every directed
// edge exactly once — 2(n-1) steps — then stops.
template <typename Visit>
void for_each_tour_edge(const Tree& t, int u0, int v0, Visit&& visit) {
    int u = u0;
    int v = v0;
    do {
        visit(u, v);
        int w = t.rot_next(v, u);
        u = v;
        v = w;
    } while (u != u0 || v != v0);
}

// Leaves (degree <= 1 vertices) in the cyclic order the face tour meets them,
// starting from the root's first edge.  When the root itself is a leaf it
// comes first.  A single-vertex tree yields just the root.
std::vector<int> leaves_in_tour_order(const Tree& t, int root);

// ---------------------------------------------------------------------------
// Structure helpers
// ---------------------------------------------------------------------------

// Membership mask of the minimal subtree spanning all degree-3 vertices,
// computed by repeatedly pruning leaves whose degree in the whole tree is not
// three.  All-zero when the tree has no degree-3 vertex.
std::vector<char> degree3_hull(const Tree& t);

// Root selection for trees that are not paths, rakes, or triple rakes: the
// smallest vertex of degree >= 4, or failing that the smallest vertex with
// three neighbors inside degree3_hull.  Throws invalid_tree_error when no such
// vertex exists (caller should have dispatched the simpler classes).
int choose_root(const Tree& t);

} // namespace treearch

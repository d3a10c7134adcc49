#include "treearch/optimize.hpp"

#include <algorithm>

namespace treearch {

namespace {

// Rooted traversal scaffolding shared by the functions below.
struct Rooted {
    std::vector<int> parent;
    std::vector<int> preorder;
};

Rooted root_at(const Tree& t, int root) {
    Rooted r;
    r.parent.assign(t.n(), -2);
    r.preorder.reserve(t.n());
    std::vector<int> stack{root};
    r.parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        r.preorder.push_back(v);
        for (int w : t.neighbors(v))
            if (w != r.parent[v]) {
                r.parent[w] = v;
                stack.push_back(w);
            }
    }
    return r;
}

// Children of v in rotation order: everything after the parent cyclically, or
// the whole rotation at the root.
std::vector<int> children_in_order(const Tree& t, int v, int parent) {
    std::vector<int> kids;
    int deg = t.degree(v);
    if (parent < 0) {
        kids = t.neighbors(v);
    } else {
        kids.reserve(deg - 1);
        int pi = t.index_of(v, parent);
        for (int s = 1; s < deg; ++s) kids.push_back(t.neighbors(v)[(pi + s) % deg]);
    }
    return kids;
}

} // namespace

ForkReport fork_report(const Tree& t, int root) {
    const int n = t.n();
    ForkReport rep;
    rep.root = root;
    rep.classes = classify_subtrees(t, root);
    rep.forks_at.assign(n, 0);
    rep.excess_at.assign(n, 0);
    rep.subtree_forks.assign(n, 0);

    Rooted r = root_at(t, root);
    for (int v : r.preorder) {
        std::vector<int> kids = children_in_order(t, v, r.parent[v]);
        const int m = static_cast<int>(kids.size());
        int paths = 0, others = 0;
        for (int w : kids) {
            if (rep.classes[w] == SubtreeClass::Path) ++paths;
            if (rep.classes[w] == SubtreeClass::Other) ++others;
        }
        rep.excess_at[v] = std::max(0, v == root ? paths - others : paths - others - 1);

        if (v != root) {
            int last_path = -1, rakes = 0;
            for (int i = 0; i < m; ++i) {
                switch (rep.classes[kids[i]]) {
                    case SubtreeClass::Path:
                        if (last_path >= 0)
                            rep.forks.push_back({v, kids[last_path], kids[i], rakes});
                        last_path = i;
                        rakes = 0;
                        break;
                    case SubtreeClass::Rake:
                        ++rakes;
                        break;
                    case SubtreeClass::Other:
                        last_path = -1;
                        rakes = 0;
                        break;
                }
            }
        } else {
            // Cyclic order: each path child pairs with the next non-rake child
            // clockwise, which may be itself when every sibling is a rake.
            for (int i = 0; i < m; ++i) {
                if (rep.classes[kids[i]] != SubtreeClass::Path) continue;
                int rakes = 0;
                int j = (i + 1) % m;
                while (rep.classes[kids[j]] == SubtreeClass::Rake) {
                    ++rakes;
                    j = (j + 1) % m;
                }
                if (rep.classes[kids[j]] == SubtreeClass::Path)
                    rep.forks.push_back({v, kids[i], kids[j], rakes});
            }
        }
    }

    for (const Fork& f : rep.forks) ++rep.forks_at[f.vertex];
    for (int v = 0; v < n; ++v) {
        rep.total_forks += rep.forks_at[v];
        rep.total_excess += rep.excess_at[v];
        rep.subtree_forks[v] = rep.forks_at[v];
    }
    for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it)
        if (r.parent[*it] >= 0) rep.subtree_forks[r.parent[*it]] += rep.subtree_forks[*it];
    return rep;
}

Tree embed_min_forks(const Tree& t, int root) {
    std::vector<SubtreeClass> classes = classify_subtrees(t, root);
    Rooted r = root_at(t, root);
    std::vector<std::vector<int>> adj(t.n());
    for (int v : r.preorder) {
        std::vector<int> kids = children_in_order(t, v, r.parent[v]);
        std::vector<int> paths, others, rakes;
        for (int w : kids) {
            switch (classes[w]) {
                case SubtreeClass::Path: paths.push_back(w); break;
                case SubtreeClass::Rake: rakes.push_back(w); break;
                case SubtreeClass::Other: others.push_back(w); break;
            }
        }
        std::vector<int>& order = adj[v];
        if (r.parent[v] >= 0) order.push_back(r.parent[v]);
        std::size_t p = 0, o = 0;
        while (p < paths.size() && o < others.size()) {
            order.push_back(paths[p++]);
            order.push_back(others[o++]);
        }
        while (o < others.size()) order.push_back(others[o++]);
        while (p < paths.size()) order.push_back(paths[p++]);
        for (int w : rakes) order.push_back(w);
    }
    return t.with_rotation(std::move(adj)).with_root(root);
}

TurnAngle optimal_resolution(const Tree& t, LayoutMode mode) {
    TreeClassification cls = classify_tree(t);
    switch (cls.kind) {
        case TreeKind::Path:
            return TurnAngle::turns(1, 2);
        case TreeKind::Rake: {
            if (mode == LayoutMode::Free) return TurnAngle::turns(1, 3);
            std::int64_t k = cls.rake.double_turns;
            return TurnAngle(Rational(1, 4) + Rational(1, 2 * (6 + 2 * k)));
        }
        case TreeKind::TripleRake: {
            std::int64_t s = cls.triple.short_paths;
            std::int64_t d = mode == LayoutMode::FixedEmbedding ? cls.triple.double_turns : 0;
            return TurnAngle(Rational(1, 4) + Rational(1, 4 * (9 - 2 * s + 2 * d)));
        }
        case TreeKind::General:
            break;
    }
    int root = choose_root(t);
    ForkReport rep = fork_report(t, root);
    std::int64_t divisor =
        mode == LayoutMode::FixedEmbedding ? rep.total_forks : rep.total_excess;
    if (divisor <= 0) throw verification_error("fork/excess accounting produced a non-positive count");
    return TurnAngle(Rational(1, divisor));
}

} // namespace treearch

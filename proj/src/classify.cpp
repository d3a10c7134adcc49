#include "treearch/classify.hpp"

#include <algorithm>

namespace treearch {

namespace {

// Turns along an oriented path at its interior degree-3 vertices.
std::vector<RakeTurn> path_turns(const Tree& t, const std::vector<int>& path) {
    std::vector<RakeTurn> turns;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        int v = path[i];
        if (t.degree(v) != 3) continue;
        RakeTurn turn;
        turn.vertex = v;
        for (int w : t.neighbors(v))
            if (w != path[i - 1] && w != path[i + 1]) turn.tooth = w;
        turn.hand = turn_hand(t, v, path[i - 1], path[i + 1]);
        turns.push_back(turn);
    }
    return turns;
}

// Walks the degree-3 hull from `start` away from `ban` until a hull endpoint.
std::vector<int> hull_path(const Tree& t, const std::vector<char>& hull, int start, int ban) {
    std::vector<int> path{start};
    int prev = ban;
    int cur = start;
    for (;;) {
        int next = -1;
        for (int w : t.neighbors(cur))
            if (hull[w] && w != prev) next = w;
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

int max_degree(const Tree& t) {
    int best = 0;
    for (int v = 0; v < t.n(); ++v) best = std::max(best, t.degree(v));
    return best;
}

} // namespace

Handedness turn_hand(const Tree& t, int v, int prev, int next) {
    return t.rot_next(v, prev) == next ? Handedness::Right : Handedness::Left;
}

int count_double_turns(const std::vector<RakeTurn>& turns) {
    int k = 0;
    for (std::size_t i = 1; i < turns.size(); ++i)
        if (turns[i].hand == turns[i - 1].hand) ++k;
    return k;
}

std::vector<SubtreeClass> classify_subtrees(const Tree& t, int root) {
    const int n = t.n();
    std::vector<int> parent(n, -2);
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.neighbors(v))
            if (w != parent[v]) {
                parent[w] = v;
                stack.push_back(w);
            }
    }

    std::vector<SubtreeClass> cls(n, SubtreeClass::Path);
    for (int idx = n - 1; idx >= 0; --idx) {
        int v = order[idx];
        int kids = 0, rakes = 0, others = 0;
        SubtreeClass single = SubtreeClass::Path;
        for (int w : t.neighbors(v)) {
            if (w == parent[v]) continue;
            ++kids;
            single = cls[w];
            if (cls[w] == SubtreeClass::Rake) ++rakes;
            if (cls[w] == SubtreeClass::Other) ++others;
        }
        if (kids == 0)
            cls[v] = SubtreeClass::Path;
        else if (kids == 1)
            cls[v] = single;
        else if (kids >= 3 || others > 0 || rakes == 2)
            cls[v] = SubtreeClass::Other;
        else
            cls[v] = SubtreeClass::Rake; // {path,path} or {path,rake}
    }
    return cls;
}

RakeStats rake_stats(const Tree& t) {
    RakeStats stats;
    std::vector<char> hull = degree3_hull(t);
    std::vector<int> ends;
    int hull_size = 0;
    for (int v = 0; v < t.n(); ++v) {
        if (!hull[v]) continue;
        ++hull_size;
        int d = 0;
        for (int w : t.neighbors(v))
            if (hull[w]) ++d;
        if (d >= 3) throw invalid_tree_error("not a rake: branching degree-3 hull");
        if (d <= 1) ends.push_back(v);
    }
    if (max_degree(t) > 3) throw invalid_tree_error("not a rake: vertex of degree 4 or more");
    if (hull_size == 0) throw invalid_tree_error("not a rake: no degree-3 vertex");
    if (hull_size == 1) {
        stats.spine = {ends[0]};
        return stats;
    }
    int start = std::min(ends[0], ends[1]);
    stats.spine = hull_path(t, hull, start, -1);
    stats.turns = path_turns(t, stats.spine);
    stats.double_turns = count_double_turns(stats.turns);
    return stats;
}

TripleRakeStats triple_rake_stats(const Tree& t) {
    if (max_degree(t) > 3)
        throw invalid_tree_error("not a triple rake: vertex of degree 4 or more");
    std::vector<char> hull = degree3_hull(t);
    int hub = -1;
    int branch_vertices = 0;
    for (int v = 0; v < t.n(); ++v) {
        if (!hull[v]) continue;
        int d = 0;
        for (int w : t.neighbors(v))
            if (hull[w]) ++d;
        if (d == 3) {
            ++branch_vertices;
            hub = v;
        }
    }
    if (branch_vertices != 1)
        throw invalid_tree_error("not a triple rake: hull must have exactly one branch vertex");

    TripleRakeStats stats;
    stats.hub = hub;
    int slot = 0;
    for (int w : t.neighbors(hub)) {
        std::vector<int> branch = hull_path(t, hull, w, hub);
        branch.insert(branch.begin(), hub);
        stats.turns[slot] = path_turns(t, branch);
        if (stats.turns[slot].empty()) ++stats.short_paths;
        stats.double_turns += count_double_turns(stats.turns[slot]);
        stats.branches[slot] = std::move(branch);
        ++slot;
    }
    return stats;
}

TreeClassification classify_tree(const Tree& t) {
    TreeClassification out;
    int maxdeg = max_degree(t);
    if (maxdeg <= 2) {
        out.kind = TreeKind::Path;
        return out;
    }
    if (maxdeg >= 4) {
        out.kind = TreeKind::General;
        return out;
    }
    std::vector<char> hull = degree3_hull(t);
    int branch_vertices = 0;
    for (int v = 0; v < t.n(); ++v) {
        if (!hull[v]) continue;
        int d = 0;
        for (int w : t.neighbors(v))
            if (hull[w]) ++d;
        if (d == 3) ++branch_vertices;
    }
    if (branch_vertices == 0) {
        out.kind = TreeKind::Rake;
        out.rake = rake_stats(t);
    } else if (branch_vertices == 1) {
        out.kind = TreeKind::TripleRake;
        out.triple = triple_rake_stats(t);
    } else {
        out.kind = TreeKind::General;
    }
    return out;
}

const char* kind_name(TreeKind k) {
    switch (k) {
        case TreeKind::Path: return "path";
        case TreeKind::Rake: return "rake";
        case TreeKind::TripleRake: return "triple-rake";
        case TreeKind::General: return "general";
    }
    return "unknown";
}

} // namespace treearch

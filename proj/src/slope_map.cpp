#include "treearch/slope_map.hpp"

namespace treearch {

SlopeMap::SlopeMap(const Tree& t, int root)
    : root_(root), parent_(t.n(), -2), down_(t.n()), assigned_(t.n(), 0) {
    std::vector<int> stack{root};
    parent_[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v))
            if (w != parent_[v]) {
                parent_[w] = v;
                stack.push_back(w);
            }
    }
}

void SlopeMap::set_down(int v, const TurnAngle& a) {
    if (v == root_) throw verification_error("cannot assign a slope to the root");
    down_[v] = a;
    assigned_[v] = 1;
}

TurnAngle SlopeMap::down(int v) const {
    if (v == root_ || !assigned_[v])
        throw verification_error("no slope assigned for vertex " + std::to_string(v));
    return down_[v];
}

TurnAngle SlopeMap::slope(int u, int v) const {
    if (parent_[v] == u) return down(v);
    if (parent_[u] == v) return down(u).opposite();
    throw verification_error("slope queried for a non-edge " + std::to_string(u) + "-" +
                             std::to_string(v));
}

bool SlopeMap::complete() const {
    for (std::size_t v = 0; v < assigned_.size(); ++v)
        if (static_cast<int>(v) != root_ && !assigned_[v]) return false;
    return true;
}

} // namespace treearch

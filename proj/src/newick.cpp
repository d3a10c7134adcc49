#include "treearch/newick.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace treearch {

namespace {

bool structural(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == ';';
}

bool label_char(char c) {
    return !structural(c) && !std::isspace(static_cast<unsigned char>(c));
}

std::string format_weight(double w) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, w);
    return std::string(buf, res.ptr);
}

} // namespace

Tree parse_newick(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::unordered_map<std::uint64_t, double> weights;

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto new_node = [&](int par) {
        labels.emplace_back();
        parent.push_back(par);
        children.emplace_back();
        int id = static_cast<int>(labels.size()) - 1;
        if (par >= 0) children[par].push_back(id);
        return id;
    };
    auto read_label = [&]() {
        std::size_t start = i;
        while (i < text.size() && label_char(text[i])) ++i;
        return text.substr(start, i - start);
    };

    skip_ws();
    if (i >= text.size()) throw parse_error("empty input");

    std::vector<int> open;     // group nodes whose child lists are still being read
    int current = -1;          // most recently completed node, -1 while one is expected
    bool current_had_length = false;
    bool done = false;

    while (!done) {
        skip_ws();
        if (i >= text.size()) throw parse_error("unexpected end of input", i);
        char c = text[i];

        if (current < 0) {
            int par = open.empty() ? -1 : open.back();
            if (c == '(') {
                open.push_back(new_node(par));
                ++i;
            } else {
                // A leaf; ",", ")", ":" or ";" right after a separator denote
                // an anonymous one, so unlabelled trees round-trip.
                current = new_node(par);
                labels[current] = read_label();
                current_had_length = false;
            }
            continue;
        }

        if (c == ':') {
            if (current_had_length) throw parse_error("duplicate length", i);
            ++i;
            skip_ws();
            double w = 0.0;
            auto res = std::from_chars(text.data() + i, text.data() + text.size(), w);
            if (res.ec != std::errc())
                throw parse_error("expected a number after ':'", i);
            if (!std::isfinite(w) || w <= 0.0)
                throw parse_error("non-positive weight", i);
            i = static_cast<std::size_t>(res.ptr - text.data());
            if (parent[current] >= 0)
                weights[Tree::edge_key(parent[current], current)] = w;
            current_had_length = true;
        } else if (c == ',') {
            if (open.empty()) throw parse_error("comma outside parentheses", i);
            current = -1;
            ++i;
        } else if (c == ')') {
            if (open.empty()) throw parse_error("unbalanced ')'", i);
            current = open.back();
            open.pop_back();
            ++i;
            skip_ws();
            if (i < text.size() && label_char(text[i])) labels[current] = read_label();
            current_had_length = false;
        } else if (c == ';') {
            if (!open.empty()) throw parse_error("unbalanced '(' at end of input", i);
            ++i;
            skip_ws();
            if (i < text.size()) throw parse_error("trailing characters after ';'", i);
            done = true;
        } else {
            throw parse_error("unexpected character after node", i);
        }
    }

    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) adj[v].push_back(parent[v]);
        for (int c2 : children[v]) adj[v].push_back(c2);
    }
    return Tree(std::move(adj), std::move(labels), 0, std::move(weights));
}

std::string to_newick(const Tree& t) {
    int root = t.has_root() ? t.root() : 0;

    struct Frame {
        int v;
        int parent;
        std::size_t slot = 0;
        std::vector<int> kids;
    };
    auto kids_of = [&](int v, int parent) {
        std::vector<int> kids;
        int deg = t.degree(v);
        if (parent < 0) {
            kids = t.neighbors(v);
        } else {
            int pi = t.index_of(v, parent);
            for (int s = 1; s < deg; ++s) kids.push_back(t.neighbors(v)[(pi + s) % deg]);
        }
        return kids;
    };

    std::string out;
    std::vector<Frame> stack;
    stack.push_back({root, -1, 0, kids_of(root, -1)});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.slot == 0 && !f.kids.empty()) out += '(';
        if (f.slot < f.kids.size()) {
            if (f.slot > 0) out += ',';
            int c = f.kids[f.slot++];
            int par = f.v;
            stack.push_back({c, par, 0, kids_of(c, par)});
            continue;
        }
        if (!f.kids.empty()) out += ')';
        out += t.label(f.v);
        if (f.parent >= 0 && t.has_weight(f.parent, f.v))
            out += ':' + format_weight(t.weight(f.parent, f.v));
        stack.pop_back();
    }
    out += ';';
    return out;
}

} // namespace treearch

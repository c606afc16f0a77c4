// Free-tree enumeration via canonical level sequences.
//
// A rooted tree on n vertices is written as the sequence of depths met on a
// preorder walk (root depth 0); the canonical representative of a rooted
// isomorphism class is the lexicographically largest such sequence, and
// successive canonical sequences are produced by a constant-amortized-time
// "chop and copy" step. A free tree is kept when rooting it at its canonical
// root gives the sequence at hand: split off the first root subtree and
// require the remainder to be at least as tall (ties broken by size, then
// lexicographically). Invalid candidates are skipped in one jump instead of
// one at a time, which is what keeps the walk linear in the output.

#include "royal/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace royal {

namespace {

using Layout = std::vector<int>;

// Successor of a canonical rooted layout: find the last entry > 1, step it
// down by copying the pattern that starts at its depth-matching predecessor.
// Returns an empty layout when the walk is exhausted. If p >= 0 the caller
// pins the chop position.
Layout next_rooted(const Layout& layout, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(layout.size()) - 1;
        while (p >= 0 && layout[p] == 1) --p;
        if (p <= 0) return {};
    }
    int q = p - 1;
    while (layout[q] != layout[p] - 1) --q;
    Layout out = layout;
    for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
    return out;
}

// Split off the root's first subtree: left holds its depths shifted up by
// one, rest is the root plus everything after the subtree.
void split(const Layout& layout, Layout& left, Layout& rest) {
    left.clear();
    rest.clear();
    std::size_t m = layout.size();
    for (std::size_t i = 2; i < layout.size(); ++i)
        if (layout[i] == 1) {
            m = i;
            break;
        }
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    rest.push_back(0);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Advance candidate to the next layout that is canonical as a free tree
// (possibly candidate itself). Empty result ends the walk.
Layout next_free(Layout candidate) {
    Layout left, rest;
    split(candidate, left, rest);
    int left_h = left.empty() ? 0 : *std::max_element(left.begin(), left.end());
    int rest_h = rest.empty() ? 0 : *std::max_element(rest.begin(), rest.end());
    bool valid = rest_h >= left_h;
    if (valid && rest_h == left_h) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return candidate;

    // Not a canonical free layout: jump past the whole invalid block by
    // chopping at the end of the first subtree.
    int p = static_cast<int>(left.size());
    Layout next = next_rooted(candidate, p);
    if (next.empty()) return {};
    if (candidate[p] > 2) {
        Layout nleft, nrest;
        split(next, nleft, nrest);
        int h = *std::max_element(nleft.begin(), nleft.end());
        // Reset the tail to the deepest possible path so nothing is skipped.
        std::size_t tail = next.size() - static_cast<std::size_t>(h) - 1;
        for (std::size_t i = tail; i < next.size(); ++i)
            next[i] = static_cast<int>(i - tail) + 1;
    }
    return next;
}

Graph layout_to_graph(const Layout& layout) {
    int n = static_cast<int>(layout.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // Parent of vertex i: the most recent vertex one level up.
    std::vector<int> last_at_depth(n, -1);
    last_at_depth[0] = 0;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(last_at_depth[layout[i] - 1], i);
        last_at_depth[layout[i]] = i;
    }
    return Graph(n, std::move(edges));
}

template <typename Fn>
void walk(int order, Fn&& fn) {
    if (order < 1 || order > 18)
        throw std::invalid_argument("free tree order must be in 1..18");
    if (order == 1) {
        fn(Layout{0});
        return;
    }
    if (order == 2) {
        fn(Layout{0, 1});
        return;
    }
    Layout layout;
    for (int i = 0; i <= order / 2; ++i) layout.push_back(i);
    for (int i = 1; i <= (order + 1) / 2 - 1; ++i) layout.push_back(i);
    while (!layout.empty()) {
        layout = next_free(std::move(layout));
        if (layout.empty()) break;
        fn(layout);
        layout = next_rooted(layout);
    }
}

}  // namespace

void for_each_free_tree(int order, const std::function<void(const Graph&)>& fn) {
    walk(order, [&](const Layout& layout) { fn(layout_to_graph(layout)); });
}

std::vector<Graph> all_free_trees(int order) {
    std::vector<Graph> out;
    for_each_free_tree(order, [&](const Graph& g) { out.push_back(g); });
    return out;
}

long long count_free_trees(int order) {
    long long count = 0;
    walk(order, [&](const Layout&) { ++count; });
    return count;
}

}  // namespace royal

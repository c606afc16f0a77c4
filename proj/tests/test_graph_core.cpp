#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "royal/generators.hpp"
#include "royal/graph.hpp"
#include "royal/graph6.hpp"
#include "royal/trees.hpp"

using namespace royal;

namespace {

// Independent graph6 encoder used as the oracle: written straight from the
// format definition (column-major upper triangle, 6-bit groups, +63), with no
// code shared with the implementation under test.
std::string oracle_g6(int n, const std::set<std::pair<int, int>>& edges) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>((n >> 12 & 63) + 63));
        out.push_back(static_cast<char>((n >> 6 & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(edges.count({i, j}) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t b = 0; b < bits.size(); b += 6) {
        int val = 0;
        for (int t = 0; t < 6; ++t) val = val * 2 + bits[b + t];
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    return {g.edges().begin(), g.edges().end()};
}

// ---- Labeled-tree oracle: Prufer decode + AHU canonical form ----

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

std::string ahu_encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu_encode(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
}

// Canonical string of a free tree: AHU encoding rooted at the center (minimum
// of both encodings for bicentral trees).
std::string tree_canon(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++deg[u];
        ++deg[v];
    }
    // Peel leaves layer by layer; the last one or two vertices are the center.
    std::vector<int> layer, removed(n, 0);
    int remaining = n;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = next;
    }
    std::string best;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            std::string enc = ahu_encode(adj, v, -1);
            if (best.empty() || enc < best) best = enc;
        }
    return best;
}

std::string tree_canon(const Graph& g) { return tree_canon(g.order(), g.edges()); }

}  // namespace

TEST_CASE("graph construction and lookups") {
    Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    // Edges normalized to u < v and sorted.
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.edge_index(3, 2) == 2);
    CHECK(g.edge_index(0, 3) == -1);

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 1}}), std::invalid_argument);
}

TEST_CASE("metrics") {
    Metrics c7 = metrics(cycle_graph(7));
    CHECK(c7.order == 7);
    CHECK(c7.size == 7);
    CHECK(c7.min_degree == 2);
    CHECK(c7.max_degree == 2);
    CHECK(c7.connected);
    CHECK(c7.diameter == 3);

    Metrics lone = metrics(Graph(2, {}));
    CHECK(!lone.connected);
    CHECK(!lone.diameter.has_value());

    Metrics k1 = metrics(complete_graph(1));
    CHECK(k1.connected);
    CHECK(k1.diameter == 0);

    Metrics star9 = metrics(star_graph(9));
    CHECK(star9.min_degree == 1);
    CHECK(star9.max_degree == 8);
    CHECK(star9.diameter == 2);

    Metrics comp = metrics(complement(cycle_graph(7)));
    CHECK(comp.size == 21 - 7);
    CHECK(comp.min_degree == 4);
    CHECK(comp.connected);
}

TEST_CASE("graph6 frozen strings") {
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(path_graph(4)) == "Ch");
    CHECK(encode_graph6(complete_graph(1)) == "@");
    CHECK(edge_set(parse_graph6("C~")) == edge_set(complete_graph(4)));
    CHECK(edge_set(parse_graph6("Ch")) == edge_set(path_graph(4)));
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6(">>graph6<<Ch").order() == 4);
}

TEST_CASE("graph6 agrees with the bit-layout oracle and round-trips") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        std::set<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.insert({u, v});
        Graph g(n, {edges.begin(), edges.end()});
        std::string enc = encode_graph6(g);
        CHECK(enc == oracle_g6(n, edges));
        Graph back = parse_graph6(enc);
        CHECK(back.order() == n);
        CHECK(edge_set(back) == edges);
    }
}

TEST_CASE("graph6 long form (order above 62)") {
    std::mt19937 rng(7);
    for (int n : {63, 64, 100}) {
        std::set<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 7 == 0) edges.insert({u, v});
        Graph g(n, {edges.begin(), edges.end()});
        std::string enc = encode_graph6(g);
        CHECK(enc == oracle_g6(n, edges));
        CHECK(enc[0] == '~');
        Graph back = parse_graph6(enc);
        CHECK(back.order() == n);
        CHECK(edge_set(back) == edges);
    }
}

TEST_CASE("graph6 malformed inputs name the byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6(":Ch"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("&Ch"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);       // truncated body
    CHECK_THROWS_AS(parse_graph6("Chh"), Graph6Error);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("C\x20"), Graph6Error);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("B\x7f"), Graph6Error);   // byte above 126
    CHECK_THROWS_AS(parse_graph6("~~"), Graph6Error);      // 8-byte order form
    CHECK_THROWS_AS(parse_graph6("A\x7e"), Graph6Error);   // nonzero padding (K_2 body 10000 ok, 111111 bad)

    try {
        parse_graph6("Chh");
        CHECK(false);
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 2);
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
}

TEST_CASE("generator families") {
    CHECK(generate({Family::Path, 5}) == path_graph(5));
    CHECK(path_graph(5).size() == 4);
    CHECK(cycle_graph(5).size() == 5);
    CHECK(complete_graph(6).size() == 15);
    CHECK(star_graph(7).size() == 6);
    CHECK_THROWS_AS(path_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    CHECK(parse_family("caterpillar") == Family::CubicCaterpillar);
    CHECK(parse_family("gk") == Family::Gk);
    CHECK(!parse_family("tree").has_value());
    CHECK(family_name(Family::Hypercube) == "hypercube");
}

TEST_CASE("hypercubes match the iterated product construction") {
    Metrics q2 = metrics(hypercube_graph(2));
    CHECK(q2.order == 4);
    CHECK(q2.size == 4);
    CHECK(q2.min_degree == 2);
    CHECK(q2.max_degree == 2);
    CHECK(q2.connected);

    // Q_k = Q_{k-1} [] K_2 with the same vertex numbering.
    Graph q = complete_graph(2);
    for (int k = 2; k <= 5; ++k) {
        q = cartesian_k2(q);
        CHECK(q == hypercube_graph(k));
    }
}

TEST_CASE("gk family shape") {
    Graph g3 = gk_graph(3);
    CHECK(g3.order() == 7);
    CHECK(g3.size() == 15);
    // Vertex 6 is {1,2,3}; it meets every nonempty subset.
    CHECK(g3.degree(6) == 6);
    // Vertex 0 is {1}: meets the other three subsets containing 1.
    CHECK(g3.degree(0) == 3);
    Metrics m = metrics(g3);
    CHECK(m.connected);
    CHECK(m.diameter == 2);
}

TEST_CASE("cubic caterpillar shape") {
    for (int s = 3; s <= 9; ++s) {
        Graph t = cubic_caterpillar_graph(s);
        CHECK(t.order() == 2 * s - 2);
        CHECK(t.size() == 2 * s - 3);
        CHECK(is_connected(t));
        int deg3 = 0, deg1 = 0;
        for (int v = 0; v < t.order(); ++v) {
            if (t.degree(v) == 3) ++deg3;
            if (t.degree(v) == 1) ++deg1;
        }
        CHECK(deg3 == s - 2);
        CHECK(deg1 == t.order() - (s - 2));
    }
    CHECK_THROWS_AS(cubic_caterpillar_graph(2), std::invalid_argument);
}

TEST_CASE("corona and cartesian product shapes") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);

        Graph cor = corona(g);
        CHECK(cor.order() == 2 * n);
        CHECK(cor.size() == g.size() + n);
        for (int i = 0; i < n; ++i) {
            CHECK(cor.degree(n + i) == 1);
            CHECK(cor.has_edge(i, n + i));
        }

        Graph prod = cartesian_k2(g);
        CHECK(prod.order() == 2 * n);
        CHECK(prod.size() == 2 * g.size() + n);
        for (int i = 0; i < n; ++i) CHECK(prod.has_edge(i, n + i));
        for (auto [u, v] : g.edges()) {
            CHECK(prod.has_edge(u, v));
            CHECK(prod.has_edge(n + u, n + v));
        }
    }
}

TEST_CASE("spanning trees") {
    Graph k5 = complete_graph(5);
    Graph bfs = spanning_tree(k5, SpanningStrategy::Bfs);
    CHECK(edge_set(bfs) == edge_set(star_graph(5)));
    Graph dfs = spanning_tree(k5, SpanningStrategy::Dfs);
    CHECK(edge_set(dfs) == edge_set(path_graph(5)));

    Graph r1 = spanning_tree(gk_graph(3), SpanningStrategy::Random, 42);
    Graph r2 = spanning_tree(gk_graph(3), SpanningStrategy::Random, 42);
    CHECK(r1 == r2);
    CHECK(r1.size() == 6);
    CHECK(is_connected(r1));
    Graph r3 = spanning_tree(gk_graph(3), SpanningStrategy::Random, 43);
    CHECK(r3.size() == 6);
    CHECK(is_connected(r3));

    CHECK_THROWS_AS(spanning_tree(Graph(4, {{0, 1}, {2, 3}}), SpanningStrategy::Bfs),
                    std::invalid_argument);
}

TEST_CASE("free tree counts") {
    const long long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n) CHECK(count_free_trees(n) == expected[n]);
    CHECK_THROWS_AS(count_free_trees(0), std::invalid_argument);
    CHECK_THROWS_AS(count_free_trees(19), std::invalid_argument);
}

TEST_CASE("free tree stream: every output is a tree, deterministic, distinct") {
    for (int n = 3; n <= 10; ++n) {
        auto trees = all_free_trees(n);
        std::set<std::string> canon;
        for (const Graph& t : trees) {
            CHECK(t.order() == n);
            CHECK(t.size() == n - 1);
            CHECK(is_connected(t));
            canon.insert(tree_canon(t));
        }
        // Pairwise non-isomorphic.
        CHECK(canon.size() == trees.size());
        // Deterministic order across invocations.
        CHECK(all_free_trees(n) == trees);
    }
    // The order-5 stream starts at the path and ends at the star.
    auto five = all_free_trees(5);
    CHECK(edge_set(five.front()) ==
          std::set<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {3, 4}});
    CHECK(edge_set(five.back()) == edge_set(star_graph(5)));
}

TEST_CASE("free tree stream covers every labeled-tree class (Prufer oracle)") {
    for (int n = 2; n <= 9; ++n) {
        std::set<std::string> oracle;
        if (n == 2) {
            oracle.insert(tree_canon(2, {{0, 1}}));
        } else {
            std::vector<int> seq(n - 2, 0);
            while (true) {
                oracle.insert(tree_canon(n, prufer_decode(seq, n)));
                int i = n - 3;
                while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
                if (i < 0) break;
                ++seq[i];
            }
        }
        std::set<std::string> streamed;
        for_each_free_tree(n, [&](const Graph& t) { streamed.insert(tree_canon(t)); });
        CHECK(streamed == oracle);
    }
}

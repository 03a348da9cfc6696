#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "arboret/double_node.hpp"
#include "arboret/enumerate.hpp"
#include "arboret/labeled.hpp"
#include "arboret/ordered_tree.hpp"
#include "arboret/rng.hpp"
#include "arboret/sample.hpp"

using namespace arboret;

TEST_CASE("ordered tree construction and canonical ids") {
    auto t = parse_paren("(()(()))");
    REQUIRE(t.n() == 4);
    REQUIRE(t.leaf_count() == 2);
    REQUIRE(t.parent(0) == -1);
    REQUIRE(t.children(0) == std::vector<int>{1, 2});
    REQUIRE(t.children(2) == std::vector<int>{3});
    REQUIRE(t.depths() == std::vector<int>{0, 1, 1, 2});
    REQUIRE(t.height() == 2);
    REQUIRE(t.level_sizes() == std::vector<int>{1, 2, 1});
    REQUIRE(t.child_counts() == std::vector<int>{2, 0, 1, 0});
    REQUIRE(bfs_order(t) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("from_children renumbers arbitrary ids into BFS ranks") {
    // Same shape presented with scrambled ids and a non-zero root.
    std::vector<std::vector<int>> kids(4);
    kids[3] = {0, 1};  // root 3 has children 0 then 1
    kids[1] = {2};
    auto t = OrderedTree::from_children(kids, 3);
    REQUIRE(t == parse_paren("(()(()))"));
}

TEST_CASE("from_children rejects malformed input") {
    REQUIRE_THROWS_AS(OrderedTree::from_children({}, 0), std::invalid_argument);
    std::vector<std::vector<int>> two_parents{{1, 1}, {}};
    REQUIRE_THROWS_AS(OrderedTree::from_children(two_parents, 0), std::invalid_argument);
    std::vector<std::vector<int>> unreachable{{}, {}};
    REQUIRE_THROWS_AS(OrderedTree::from_children(unreachable, 0), std::invalid_argument);
    std::vector<std::vector<int>> out_of_range{{7}};
    REQUIRE_THROWS_AS(OrderedTree::from_children(out_of_range, 0), std::invalid_argument);
}

TEST_CASE("parenthesis text round trip and errors") {
    for (const char* s : {"()", "(())", "(()())", "((())())", "(()(())())"}) {
        REQUIRE(to_paren(parse_paren(s)) == s);
    }
    REQUIRE_THROWS_AS(parse_paren(""), ParseError);
    REQUIRE_THROWS_AS(parse_paren("(()"), ParseError);
    REQUIRE_THROWS_AS(parse_paren("())"), ParseError);
    REQUIRE_THROWS_AS(parse_paren("()()"), ParseError);
    REQUIRE_THROWS_AS(parse_paren("(a)"), ParseError);
    try {
        parse_paren("(x)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.offset() == 1);
    }
}

TEST_CASE("unordered key identifies shapes up to child order") {
    REQUIRE(parse_paren("(()(()))").unordered_key() == parse_paren("((())())").unordered_key());
    REQUIRE(parse_paren("(()(()))").unordered_key() != parse_paren("((()))").unordered_key());
}

TEST_CASE("labeled tree validation") {
    LabeledTree t(4, {{2, 1}, {3, 1}, {4, 2}});
    REQUIRE(t.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}});
    REQUIRE(t.adjacency()[1] == std::vector<int>{2, 3});
    REQUIRE(t.key() == "4:1-2,1-3,2-4,");
    REQUIRE_THROWS_AS(LabeledTree(3, {{1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(LabeledTree(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(LabeledTree(3, {{1, 2}, {4, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(LabeledTree(3, {{1, 2}, {3, 3}}), std::invalid_argument);
}

TEST_CASE("rooted shape of a labeled tree") {
    LabeledTree t(4, {{1, 2}, {1, 3}, {2, 4}});
    REQUIRE(t.rooted_shape() == parse_paren("((())())"));
}

TEST_CASE("edge list text round trip") {
    LabeledTree t(5, {{1, 5}, {2, 1}, {3, 2}, {2, 4}});
    REQUIRE(edge_list_text(t) == "1 2\n1 5\n2 3\n2 4\n");
    REQUIRE(parse_edge_list(edge_list_text(t)) == t);
    REQUIRE_THROWS_AS(parse_edge_list("1 2\n3"), ParseError);
}

TEST_CASE("prufer bijection on all 16 sequences for n = 4") {
    std::set<std::string> seen;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            LabeledTree t = prufer_decode({a, b}, 4);
            REQUIRE(prufer_encode(t) == std::vector<int>{a, b});
            seen.insert(t.key());
        }
    REQUIRE(seen.size() == 16);
}

TEST_CASE("prufer round trip on random trees") {
    Rng rng(101, 0);
    for (int k = 0; k < 200; ++k) {
        int n = 2 + static_cast<int>(rng.next_below(60));
        std::vector<int> seq(n - 2);
        for (int& x : seq) x = 1 + static_cast<int>(rng.next_below(n));
        LabeledTree t = prufer_decode(seq, n);
        REQUIRE(prufer_encode(t) == seq);
        REQUIRE(prufer_decode(prufer_encode(t), n) == t);
    }
    REQUIRE_THROWS_AS(prufer_decode({5}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(prufer_decode({1, 2}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(prufer_encode(LabeledTree::single()), std::invalid_argument);
}

TEST_CASE("simple graph basics") {
    SimpleGraph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 1);  // duplicate ignored
    g.add_edge(3, 4);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(2, 1));
    REQUIRE_FALSE(g.has_edge(1, 3));
    REQUIRE_FALSE(g.connected());
    g.add_edge(2, 3);
    REQUIRE(g.connected());
    REQUIRE(SimpleGraph::complete(5).edge_count() == 10);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
    LabeledTree t(3, {{1, 2}, {2, 3}});
    REQUIRE(SimpleGraph::from_tree(t).connected());
    REQUIRE(SimpleGraph(1).connected());
}

TEST_CASE("double-node bijection, exhaustive n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> images;
        long count = 0;
        enumerate_ordered(n, [&](const OrderedTree& t) {
            ++count;
            OrderedTree b = double_node(t);
            REQUIRE(b.n() == 2 * n - 1);
            for (int v = 0; v < b.n(); ++v) {
                auto deg = b.children(v).size();
                REQUIRE((deg == 0 || deg == 2));
            }
            images.insert(to_paren(b));
            REQUIRE(double_node_inverse(b) == t);
        });
        REQUIRE(static_cast<long>(images.size()) == count);
    }
}

TEST_CASE("double-node inverse rejects non-full-binary input") {
    REQUIRE_THROWS_AS(double_node_inverse(parse_paren("(())")), DecodeError);    // even count
    REQUIRE_THROWS_AS(double_node_inverse(parse_paren("((()))")), DecodeError);  // unary node
}

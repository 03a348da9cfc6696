#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "arboret/enumerate.hpp"

using namespace arboret;

TEST_CASE("catalan numbers") {
    REQUIRE(catalan(0) == 1);
    REQUIRE(catalan(1) == 1);
    REQUIRE(catalan(2) == 2);
    REQUIRE(catalan(3) == 5);
    REQUIRE(catalan(9) == 4862);
    REQUIRE(catalan(19) == mpz_class("1767263190"));
    REQUIRE(catalan(30) == mpz_class("3814986502092304"));
    REQUIRE_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("ordered enumeration sizes are Catalan and trees are distinct") {
    for (int n = 1; n <= 10; ++n) {
        std::set<std::string> seen;
        long count = 0;
        enumerate_ordered(n, [&](const OrderedTree& t) {
            ++count;
            REQUIRE(t.n() == n);
            seen.insert(to_paren(t));
        });
        REQUIRE(mpz_class(count) == catalan(n - 1));
        REQUIRE(static_cast<long>(seen.size()) == count);
    }
    REQUIRE_THROWS_AS(enumerate_ordered(0, [](const OrderedTree&) {}), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_ordered(17, [](const OrderedTree&) {}), std::invalid_argument);
}

TEST_CASE("unordered count sequence and enumeration agree") {
    // 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766
    const long expect[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766};
    for (int n = 1; n <= 12; ++n) {
        REQUIRE(count_unordered(n) == expect[n - 1]);
        std::set<std::string> keys;
        long count = 0;
        enumerate_unordered(n, [&](const OrderedTree& t) {
            ++count;
            REQUIRE(t.n() == n);
            keys.insert(t.unordered_key());
        });
        REQUIRE(count == expect[n - 1]);
        REQUIRE(static_cast<long>(keys.size()) == count);
    }
    REQUIRE(count_unordered(20) == mpz_class("12826228"));
    REQUIRE_THROWS_AS(count_unordered(0), std::invalid_argument);
}

TEST_CASE("every ordered tree maps onto some enumerated unordered representative") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> canon;
        enumerate_unordered(n, [&](const OrderedTree& t) { canon.insert(t.unordered_key()); });
        enumerate_ordered(n, [&](const OrderedTree& t) {
            REQUIRE(canon.count(t.unordered_key()) == 1);
        });
    }
}

TEST_CASE("labeled counts and enumeration") {
    REQUIRE(count_labeled(1) == 1);
    REQUIRE(count_labeled(2) == 1);
    REQUIRE(count_labeled(3) == 3);
    REQUIRE(count_labeled(4) == 16);
    REQUIRE(count_labeled(8) == 262144);
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> keys;
        long count = 0;
        enumerate_labeled(n, [&](const LabeledTree& t) {
            ++count;
            REQUIRE(t.n() == n);
            keys.insert(t.key());
        });
        REQUIRE(mpz_class(count) == count_labeled(n));
        REQUIRE(static_cast<long>(keys.size()) == count);
    }
}

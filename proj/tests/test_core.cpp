#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oramsey/arith.hpp"
#include "oramsey/certificate.hpp"
#include "oramsey/coloring.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/io.hpp"
#include "oramsey/pattern.hpp"
#include "oramsey/random.hpp"

using namespace oramsey;

namespace {

// independent oracle: factorial-quotient binomial over __int128 (small n)
i64 binomial_by_factorials(int n, int k) {
    if (k > n) return 0;
    __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return static_cast<i64>(num / den);
}

// independent oracle: Pascal's triangle, addition only
i64 binomial_by_pascal(int n, int k) {
    std::vector<std::vector<i64>> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] +
                row[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
    }
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("binomial basics and overflow") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(15, 3) == binomial_by_factorials(15, 3));
    CHECK(binomial(15, 3) == 455);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(66, 33) == binomial_by_pascal(66, 33));
    CHECK_THROWS_AS(binomial(300, 150), std::overflow_error);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("subset rank formula values") {
    const std::vector<int> a{0, 1, 2};
    const std::vector<int> b{0, 1, 3};
    const std::vector<int> c{1, 2, 3};
    CHECK(subset_rank(a) == 0);
    CHECK(subset_rank(b) == 1);
    CHECK(subset_rank(c) == 3);
    const std::vector<int> unsorted{2, 1, 3};
    CHECK_THROWS_AS(subset_rank(unsorted), std::invalid_argument);
    const std::vector<int> dup{1, 1, 3};
    CHECK_THROWS_AS(subset_rank(dup), std::invalid_argument);
}

TEST_CASE("subset unrank basics") {
    CHECK(subset_unrank(0, 3) == std::vector<int>{0, 1, 2});
    CHECK(subset_unrank(3, 3) == std::vector<int>{1, 2, 3});
    // colex order: {0,1,2},{0,1,3},{0,2,3},{1,2,3},{0,1,4}
    CHECK(subset_unrank(4, 3) == std::vector<int>{0, 1, 4});
}

TEST_CASE("rank/unrank are inverse bijections for k <= 5, N <= 12") {
    for (int k = 2; k <= 5; ++k) {
        for (int n = k; n <= 12; ++n) {
            const i64 total = binomial(n, k);
            std::vector<int> sub(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = i;
            i64 expected = 0;
            do {
                REQUIRE(subset_rank(sub) == expected);
                REQUIRE(subset_unrank(expected, k) == sub);
                ++expected;
            } while (next_subset_colex(sub, n));
            REQUIRE(expected == total);
        }
    }
}

TEST_CASE("tower function") {
    CHECK(tower(1, 5) == 5);
    CHECK(tower(2, 3) == 8);
    CHECK(tower(3, 2) == 16);
    CHECK(tower(4, 1) == 16);  // 1 -> 2 -> 4 -> 16
    CHECK_FALSE(tower(4, 3).has_value());  // 2^2^8 leaves 64 bits
    CHECK_THROWS_AS(tower(0, 1), std::invalid_argument);

    // strictly increasing in both arguments on non-saturating inputs
    for (int i = 1; i <= 3; ++i) {
        for (i64 x = 1; x <= 4; ++x) {
            const auto base = tower(i, x);
            const auto up_i = tower(i + 1, x);
            const auto up_x = tower(i, x + 1);
            if (base && up_i) CHECK(*up_i > *base);
            if (base && up_x) CHECK(*up_x > *base);
        }
    }
}

TEST_CASE("exact log2 comparison") {
    // log2(240000/287) = 9.7077... < 9.7434
    CHECK(log2_rational_less(240000, 287, 97434, 10000));
    CHECK_FALSE(log2_rational_less(240000, 287, 97000, 10000));
    CHECK(log2_rational_less(2, 1, 11, 10));
    CHECK_FALSE(log2_rational_less(2, 1, 9, 10));
}

TEST_CASE("coloring bit semantics") {
    OrderedColoring all_red(3, 5, Color::Red);
    OrderedColoring all_blue(3, 5);
    std::vector<int> sub{0, 1, 2};
    do {
        CHECK(all_red.color(sub) == Color::Red);
        CHECK(all_blue.color(sub) == Color::Blue);
    } while (next_subset_colex(sub, 5));

    OrderedColoring c(3, 4);
    c.set_at(0, Color::Red);
    const std::vector<int> first{0, 1, 2};
    CHECK(c.color(first) == Color::Red);
    const std::vector<int> second{0, 1, 3};
    CHECK(c.color(second) == Color::Blue);

    const std::vector<int> bad{0, 1, 7};
    CHECK_THROWS_AS(c.color(bad), std::invalid_argument);
    const std::vector<int> short_sub{0, 1};
    CHECK_THROWS_AS(c.color(short_sub), std::invalid_argument);
}

TEST_CASE("flip and induce") {
    const auto c = random_coloring(3, 9, 17);
    const auto f = c.flipped();
    for (i64 r = 0; r < c.edge_count(); ++r) CHECK(f.color_at(r) == opposite(c.color_at(r)));

    const std::vector<int> verts{1, 3, 4, 7, 8};
    const auto ind = c.induced(verts);
    CHECK(ind.vertex_count() == 5);
    std::vector<int> sub{0, 1, 2};
    do {
        std::vector<int> mapped;
        for (int v : sub) mapped.push_back(verts[static_cast<std::size_t>(v)]);
        CHECK(ind.color(sub) == c.color(mapped));
    } while (next_subset_colex(sub, 5));
}

TEST_CASE("file round-trip is bit exact") {
    // k=2 N=5 all red: 10 bits
    OrderedColoring small(2, 5, Color::Red);
    std::stringstream buf;
    save_coloring(small, buf);
    CHECK(load_coloring(buf) == small);

    for (int k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = k + trial % (21 - k);
            const auto c = random_coloring(k, n, static_cast<std::uint64_t>(1000 * k + trial));
            std::stringstream io;
            save_coloring(c, io);
            const auto back = load_coloring(io);
            REQUIRE(back == c);
        }
    }
}

TEST_CASE("payload sizes and padding") {
    // C(8,4) = 70 bits -> 9 payload bytes
    OrderedColoring c(4, 8, Color::Red);
    std::stringstream buf;
    save_coloring(c, buf);
    const std::string data = buf.str();
    const auto header_end = data.find('\n');
    CHECK(data.substr(0, header_end) == "ordered-coloring v1 k=4 n=8");
    CHECK(data.size() - header_end - 1 == 9);

    // header declares k=3 n=4 (needs C(4,3)=4 bits -> 1 byte) but no payload
    std::stringstream bad("ordered-coloring v1 k=3 n=4\n");
    CHECK_THROWS_AS(load_coloring(bad), parse_error);

    // nonzero pad bit
    std::stringstream pad("ordered-coloring v1 k=3 n=4\n\x30", std::ios::in | std::ios::binary);
    CHECK_THROWS_AS(load_coloring(pad), parse_error);

    // malformed header
    std::stringstream magic("ordered-colouring v1 k=3 n=4\n");
    magic << '\0';
    CHECK_THROWS_AS(load_coloring(magic), parse_error);

    // unverified marker round-trips
    std::stringstream marked;
    save_coloring(OrderedColoring(2, 3), marked, true);
    bool unverified = false;
    load_coloring(marked, &unverified);
    CHECK(unverified);
}

TEST_CASE("pattern tokens and edges") {
    const auto p = parse_pattern("path:2:5");
    CHECK(format_pattern(p) == "path:2:5");
    CHECK(pattern_vertex_count(p) == 5);
    CHECK(pattern_uniformity(p) == 2);
    CHECK(pattern_edges(p).size() == 4 + 3);  // distances 1 and 2

    const auto t = parse_pattern("tight:3:5");
    CHECK(pattern_edges(t).size() == 3);
    const auto b = parse_pattern("broom:3:4:2");
    CHECK(pattern_vertex_count(b) == 6);
    CHECK(pattern_edges(b).size() == 2 + 2);  // two windows, two bristle edges
    const auto q = parse_pattern("clique:2:4");
    CHECK(pattern_edges(q).size() == 6);
    CHECK_THROWS_AS(parse_pattern("path:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("broom:3:1:2"), std::invalid_argument);

    // PathPower(1,s) is the ordered path; Clique(2,s) equals PathPower(s-1,s)
    auto pe = pattern_edges(parse_pattern("path:3:4"));
    auto ce = pattern_edges(parse_pattern("clique:2:4"));
    std::sort(pe.begin(), pe.end());
    std::sort(ce.begin(), ce.end());
    CHECK(pe == ce);
}

TEST_CASE("certificate json round trip") {
    Embedding e{Broom{3, 4, 2}, Color::Blue, {0, 2, 3, 5, 7, 8}};
    const auto j = certificate_to_json(Certificate{e});
    CHECK(j.at("kind") == "embedding");
    CHECK(j.at("color") == "blue");
    const auto back = certificate_from_json(j);
    CHECK(std::get<Embedding>(back).vertices == e.vertices);

    Violation v{{ViolationKind::Type::TRed, 3}, {0, 1, 2, 3}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}};
    const auto jv = certificate_to_json(Certificate{v});
    CHECK(jv.at("kind") == "violation");
    CHECK(jv.at("red_edges").size() == 3);
    const auto vb = std::get<Violation>(certificate_from_json(jv));
    CHECK(vb.kind.t == 3);
    CHECK(vb.vertices == v.vertices);
}

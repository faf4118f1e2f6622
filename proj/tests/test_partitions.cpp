#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "spincrystal/partitions.hpp"

using namespace spincrystal;

namespace {

// Brute-force oracle: all partitions of n, no strictness filter.
void all_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        all_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    all_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

}  // namespace

TEST_CASE("column residues") {
    auto h5 = CartanType::finite(2);
    int want[] = {0, 1, 2, 1, 0, 0};
    for (int c = 1; c <= 6; ++c) CHECK(residue(c, h5) == want[c - 1]);
    CHECK(residue(7, h5) == 1);  // second period

    auto h3 = CartanType::finite(1);
    CHECK(residue(1, h3) == 0);
    CHECK(residue(2, h3) == 1);
    CHECK(residue(3, h3) == 0);
    CHECK(residue(4, h3) == 0);

    auto inf = CartanType::b_infinity();
    for (int c = 1; c <= 10; ++c) CHECK(residue(c, inf) == c - 1);
}

TEST_CASE("h-strict and restricted predicates") {
    auto h3 = CartanType::finite(1);
    CHECK(is_h_strict({}, h3));
    CHECK(is_h_strict({3, 3}, h3));       // repeat divisible by 3
    CHECK(is_h_strict({6, 3, 3, 1}, h3));
    CHECK(!is_h_strict({2, 2}, h3));
    CHECK(!is_h_strict({4, 4, 1}, h3));
    CHECK(is_h_strict({4, 1}, h3));

    CHECK(is_restricted({4, 1}, h3));     // 4-1=3 <= 3 at a non-multiple
    CHECK(!is_restricted({3, 3}, h3));    // last part 3 needs difference < 3
    CHECK(!is_restricted({5, 1}, h3));
    CHECK(is_restricted({3, 2, 1}, h3));
    CHECK(is_restricted({}, h3));

    auto inf = CartanType::b_infinity();
    CHECK(is_h_strict({5, 3, 2}, inf));
    CHECK(!is_h_strict({3, 3}, inf));     // infinity-strict = distinct parts
    CHECK(is_restricted({100, 1}, inf));  // no bound at h = infinity
}

TEST_CASE("content") {
    auto h3 = CartanType::finite(1);
    ContentVector g = content({4, 1}, h3);
    CHECK(g[0] == 4);
    CHECK(g[1] == 1);
    CHECK(g.degree() == 5);

    g = content({3, 2}, h3);
    CHECK(g[0] == 3);
    CHECK(g[1] == 2);

    CHECK(content({}, h3) == ContentVector{});
}

TEST_CASE("enumeration vs brute-force filter") {
    for (int ell : {1, 2, 3}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 12; ++n) {
            std::vector<Partition> expect_strict, expect_res;
            for (auto& lam : all_partitions(n)) {
                if (!is_h_strict(lam, ct)) continue;
                expect_strict.push_back(lam);
                if (is_restricted(lam, ct)) expect_res.push_back(lam);
            }
            std::sort(expect_strict.begin(), expect_strict.end());
            std::sort(expect_res.begin(), expect_res.end());
            CHECK(enumerate_h_strict(n, ct) == expect_strict);
            CHECK(enumerate_restricted(n, ct) == expect_res);
        }
    }
}

TEST_CASE("enumeration examples") {
    auto h3 = CartanType::finite(1);
    CHECK(enumerate_restricted(5, h3) == std::vector<Partition>{{3, 2}, {4, 1}});
    CHECK(enumerate_restricted(10, h3).size() == 4);
    CHECK(enumerate_restricted(0, h3) == std::vector<Partition>{{}});
    CHECK(enumerate_h_strict(0, h3) == std::vector<Partition>{{}});
}

TEST_CASE("h-bars") {
    auto h3 = CartanType::finite(1);

    auto bars = h_bars({3, 2}, h3);
    REQUIRE(bars.size() == 1);
    CHECK(bars[0].kind == BarKind::B1);
    CHECK(bars[0].row1 == 1);
    CHECK(remove_bar({3, 2}, bars[0], h3) == Partition{2});

    CHECK(h_bars({4, 1}, h3).empty());

    bars = h_bars({2, 1}, h3);
    REQUIRE(bars.size() == 1);
    CHECK(bars[0].kind == BarKind::B2);
    CHECK(bars[0].row1 == 1);
    CHECK(bars[0].row2 == 2);
    CHECK(remove_bar({2, 1}, bars[0], h3) == Partition{});
}

TEST_CASE("bar core and weight") {
    auto h3 = CartanType::finite(1);
    CHECK(bar_core({3, 2}, h3) == Partition{2});
    CHECK(bar_weight({3, 2}, h3) == 1);
    CHECK(bar_core({4, 1}, h3) == Partition{4, 1});  // already a core
    CHECK(bar_weight({4, 1}, h3) == 0);
    CHECK(bar_core({}, h3) == Partition{});

    auto h5 = CartanType::finite(2);
    Partition e1{16, 11, 10, 10, 9, 5, 1};
    CHECK(bar_core(e1, h5) == Partition{6, 1});
    CHECK(bar_weight(e1, h5) == 11);
    CHECK(bar_weight(e1, h5) * 5 + degree(bar_core(e1, h5)) == degree(e1));
}

TEST_CASE("bar core is confluent: every removal order agrees") {
    for (int ell : {1, 2}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 12; ++n) {
            for (auto& lam : enumerate_h_strict(n, ct)) {
                Partition canonical = bar_core(lam, ct);
                // explore every legal removal sequence
                std::vector<Partition> stack{lam};
                std::set<Partition> seen{lam};
                while (!stack.empty()) {
                    Partition cur = stack.back();
                    stack.pop_back();
                    auto bars = h_bars(cur, ct);
                    if (bars.empty()) {
                        REQUIRE(cur == canonical);
                        continue;
                    }
                    for (auto& b : bars) {
                        Partition nxt = remove_bar(cur, b, ct);
                        if (seen.insert(nxt).second) stack.push_back(nxt);
                    }
                }
            }
        }
    }
}

TEST_CASE("content determines bar core and conversely") {
    for (int ell : {1, 2}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 14; ++n) {
            auto layer = enumerate_h_strict(n, ct);
            std::map<Partition, ContentVector> cont;
            for (auto& lam : layer) cont[lam] = content(lam, ct);
            for (size_t i = 0; i < layer.size(); ++i)
                for (size_t j = i + 1; j < layer.size(); ++j) {
                    bool same_cont = cont[layer[i]] == cont[layer[j]];
                    bool same_core = bar_core(layer[i], ct) == bar_core(layer[j], ct);
                    REQUIRE(same_cont == same_core);
                }
        }
    }
}

TEST_CASE("b and a statistics") {
    auto h5 = CartanType::finite(2);
    CHECK(b_of({5, 4, 1}, h5) == 2);
    CHECK(a_of({5, 4, 1}, h5) == 8);  // degree 10 minus b
    CHECK(b_of({5, 2}, h5) == 1);
    CHECK(a_of({5, 2}, h5) == 6);
    CHECK(b_of({}, h5) == 0);
    CHECK(a_of({}, h5) == 0);
}

TEST_CASE("b has the parity of the residue-0 content") {
    for (int ell : {1, 2, 3}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 14; ++n)
            for (auto& lam : enumerate_restricted(n, ct))
                REQUIRE((b_of(lam, ct) - content(lam, ct)[0]) % 2 == 0);
    }
}

TEST_CASE("partition text round trip") {
    CHECK(to_string({4, 1}) == "[4,1]");
    CHECK(to_string({}) == "[]");
    CHECK(parse_partition("4,1") == Partition{4, 1});
    CHECK(parse_partition("[4,1]") == Partition{4, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("[]") == Partition{});
    CHECK_THROWS(parse_partition("1,4"));   // not weakly decreasing
    CHECK_THROWS(parse_partition("abc"));
}

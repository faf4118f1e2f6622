#include <doctest.h>

#include <map>

#include "spincrystal/blocks.hpp"

using namespace spincrystal;

namespace {

// Oracle: count multisets of colored parts (size, color) summing to N by
// direct recursion over the part sizes.
long long colored_count(int remaining, int max_part, int colors) {
    if (remaining == 0) return 1;
    if (max_part == 0) return 0;
    long long total = 0;
    // choose how many parts of size max_part, distributed over colors:
    // multisets of m colored copies = C(m + colors - 1, colors - 1)
    for (int m = 0; m * max_part <= remaining; ++m) {
        long long ways = 1;
        for (int t = 1; t <= colors - 1; ++t) ways = ways * (m + t) / t;
        total += ways * colored_count(remaining - m * max_part, max_part - 1, colors);
    }
    return total;
}

}  // namespace

TEST_CASE("colored partition numbers") {
    CHECK(par_ell(2, 1) == 2);
    CHECK(par_ell(2, 2) == 5);
    for (int ell : {1, 2, 3}) CHECK(par_ell(0, ell) == 1);
    CHECK(par_ell(11, 2) == 752);

    for (int ell = 1; ell <= 3; ++ell)
        for (int N = 0; N <= 10; ++N)
            REQUIRE(par_ell(N, ell) == colored_count(N, N == 0 ? 1 : N, ell));

    CHECK_THROWS_AS(par_ell(300, 3), std::overflow_error);
}

TEST_CASE("block identifiers") {
    auto ct = CartanType::finite(1);
    BlockId b1 = block_of({4, 1}, ct);
    BlockId b2 = block_of({3, 2}, ct);
    CHECK(!(b1 == b2));
    CHECK(b1.gamma[0] == 4);
    CHECK(b2.gamma[1] == 2);
    CHECK(b1.core == Partition{4, 1});
    CHECK(b1.weight == 0);
    CHECK(b2.core == Partition{2});
    CHECK(b2.weight == 1);
    CHECK(block_of({}, ct).gamma == ContentVector{});
}

TEST_CASE("block sizes and the colored-partition identity") {
    auto h3 = CartanType::finite(1);
    CHECK(block_size({4, 1}, h3) == 1);
    CHECK(block_size({3, 2}, h3) == 1);

    auto h5 = CartanType::finite(2);
    Partition e1{16, 11, 10, 10, 9, 5, 1};
    CHECK(bar_weight(e1, h5) == 11);
    CHECK(block_size(e1, h5) == 752);
    CHECK(block_size(e1, h5) == par_ell(bar_weight(e1, h5), 2));

    for (int ell : {1, 2, 3}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 12; ++n) {
            auto rep = kac_check(n, ct);
            CHECK_MESSAGE(rep.ok(), (rep.failures.empty() ? std::string() : rep.failures.front()));
            CHECK(rep.checked == static_cast<int>(enumerate_restricted(n, ct).size()));
        }
    }
}

TEST_CASE("block sizes partition each layer") {
    auto ct = CartanType::finite(1);
    for (int n = 0; n <= 12; ++n) {
        auto layer = enumerate_restricted(n, ct);
        std::map<ContentVector, long long> by_content;
        for (auto& lam : layer) ++by_content[content(lam, ct)];
        long long total = 0;
        for (auto& [g, size] : by_content) total += size;
        CHECK(total == static_cast<long long>(layer.size()));
        for (auto& lam : layer)
            REQUIRE(block_size(lam, ct) == by_content[content(lam, ct)]);
    }
}

TEST_CASE("module types") {
    auto ct = CartanType::finite(1);
    CHECK(type_W({}, ct) == ModuleType::M);
    CHECK(type_S({}, ct) == ModuleType::M);
    CHECK(type_W({2, 1}, ct) == ModuleType::M);  // b = 2
    CHECK(type_S({2, 1}, ct) == ModuleType::Q);  // a = 1

    for (int ell : {1, 2}) {
        auto c = CartanType::finite(ell);
        for (int n = 0; n <= 12; ++n)
            for (auto& lam : enumerate_restricted(n, c))
                REQUIRE(type_W(lam, c) == type_from_content(content(lam, c)));
    }
}

TEST_CASE("projectivity = bar core") {
    auto ct = CartanType::finite(1);
    CHECK(is_projective_W({4, 1}, ct));
    CHECK(!is_projective_W({3, 2}, ct));
    CHECK(is_projective_W({}, ct));
    CHECK(is_projective_S({4, 1}, ct));

    for (int n = 0; n <= 12; ++n)
        for (auto& lam : enumerate_restricted(n, ct))
            if (is_projective_W(lam, ct)) REQUIRE(block_size(lam, ct) == 1);
}

TEST_CASE("irreducible counts over S(n) and A(n)") {
    auto ct = CartanType::finite(1);
    CHECK(count_ungraded_S(0, ct) == 1);
    CHECK(count_irreducible_A(0, ct) == 2);
    CHECK(count_ungraded_S(1, ct) == 1);   // only (1), a = 0 even
    CHECK(count_irreducible_A(1, ct) == 2);
    CHECK(count_ungraded_S(2, ct) == 2);   // only (2), b = 1 so a = 1 odd
    CHECK(count_irreducible_A(2, ct) == 1);
    CHECK(count_ungraded_S(3, ct) == 2);   // only (2,1), a = 1 odd
    CHECK(count_irreducible_A(3, ct) == 1);

    // each partition contributes 1+2 or 2+1 across the two counts
    for (int n = 0; n <= 10; ++n)
        CHECK(count_ungraded_S(n, ct) + count_irreducible_A(n, ct) ==
              3 * static_cast<long long>(enumerate_restricted(n, ct).size()));
}

TEST_CASE("h = infinity: every block is a singleton") {
    auto ct = CartanType::b_infinity();
    for (int n = 0; n <= 12; ++n) {
        auto layer = enumerate_restricted(n, ct);
        std::map<ContentVector, int> by_content;
        for (auto& lam : layer) ++by_content[content(lam, ct)];
        for (auto& [g, c] : by_content) REQUIRE(c == 1);
    }
}

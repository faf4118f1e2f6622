#include <doctest.h>

#include "spincrystal/crystal.hpp"
#include "spincrystal/partitions.hpp"

using namespace spincrystal;

namespace {

const Partition kE1{16, 11, 10, 10, 9, 5, 1};

std::vector<Node> nodes_of(const std::vector<SignedNode>& v) {
    std::vector<Node> out;
    for (auto& s : v) out.push_back(s.node);
    return out;
}

std::string sign_string(const Signature& sig) {
    std::string s;
    for (auto& x : sig) s += (x.sign == Sign::plus ? '+' : '-');
    return s;
}

}  // namespace

TEST_CASE("removable/addable nodes of the worked h=5 example") {
    auto ct = CartanType::finite(2);
    auto rem = removable_nodes(kE1, ct, 0);
    CHECK(nodes_of(rem) == std::vector<Node>{{7, 1}, {6, 5}, {2, 11}, {1, 15}, {1, 16}});
    auto add = addable_nodes(kE1, ct, 0);
    CHECK(nodes_of(add) == std::vector<Node>{{6, 6}, {5, 10}});
}

TEST_CASE("signature of the worked h=5 example reduces to three minuses") {
    auto ct = CartanType::finite(2);
    auto sig = signature(kE1, ct, 0);
    CHECK(sign_string(sig) == "--++---");
    auto red = reduce_signature(sig);
    CHECK(sign_string(red) == "---");
    CHECK(eps(kE1, ct, 0) == 3);
    CHECK(phi(kE1, ct, 0) == 0);

    // good node = rightmost surviving minus = (1,16)
    auto mu = e_tilde(kE1, ct, 0);
    REQUIRE(mu.has_value());
    CHECK(*mu == Partition{15, 11, 10, 10, 9, 5, 1});
    CHECK(f_tilde(kE1, ct, 0) == std::nullopt);
}

TEST_CASE("small h=3 signatures") {
    auto ct = CartanType::finite(1);

    auto sig = signature({3, 2, 1}, ct, 0);
    CHECK(sign_string(sig) == "-++");
    CHECK(nodes_of(sig) == std::vector<Node>{{3, 1}, {2, 3}, {1, 4}});
    CHECK(sign_string(reduce_signature(sig)) == "-++");  // nothing adjacent to erase

    auto add = addable_nodes({2}, ct, 0);
    REQUIRE(add.size() == 3);
    CHECK(nodes_of(add) == std::vector<Node>{{2, 1}, {1, 3}, {1, 4}});
    CHECK(add[0].rule == RuleCase::A1);
    CHECK(add[1].rule == RuleCase::A1);
    CHECK(add[2].rule == RuleCase::A2);

    CHECK(eps({2}, ct, 0) == 0);
    CHECK(phi({2}, ct, 0) == 3);
    CHECK(eps({2}, ct, 1) == 1);
    CHECK(phi({2}, ct, 1) == 0);

    CHECK(signature({}, ct, 0).size() == 1);
    CHECK(eps({}, ct, 0) == 0);
    CHECK(phi({}, ct, 0) == 1);
    CHECK(eps({}, ct, 1) == 0);
    CHECK(phi({}, ct, 1) == 0);
}

TEST_CASE("operators along the bottom of the h=3 graph") {
    auto ct = CartanType::finite(1);
    CHECK(f_tilde({}, ct, 0) == Partition{1});
    CHECK(f_tilde({1}, ct, 1) == Partition{2});
    CHECK(f_tilde({2}, ct, 0) == Partition{2, 1});
    CHECK(f_tilde({2, 1}, ct, 0) == Partition{3, 1});
    CHECK(f_tilde({1}, ct, 0) == std::nullopt);
    CHECK(e_tilde({}, ct, 0) == std::nullopt);
}

TEST_CASE("weight") {
    auto ct = CartanType::finite(1);
    auto [l0, gamma] = weight({2}, ct);
    CHECK(l0 == 1);
    CHECK(gamma[0] == 1);
    CHECK(gamma[1] == 1);
    CHECK(weight({}, ct).second == ContentVector{});
}

TEST_CASE("reduce_signature erases adjacent plus-minus pairs") {
    auto mk = [](const std::string& s) {
        Signature sig;
        for (size_t k = 0; k < s.size(); ++k)
            sig.push_back({{1, static_cast<int>(k + 1)},
                           s[k] == '+' ? Sign::plus : Sign::minus, RuleCase::R1});
        return sig;
    };
    CHECK(sign_string(reduce_signature(mk("--++---"))) == "---");
    CHECK(sign_string(reduce_signature(mk(""))).empty());
    CHECK(sign_string(reduce_signature(mk("-++"))) == "-++");
    CHECK(sign_string(reduce_signature(mk("+-+-"))).empty());
    CHECK(sign_string(reduce_signature(mk("++--"))).empty());
    CHECK(sign_string(reduce_signature(mk("-+-+-"))) == "-");
}

TEST_CASE("exhaustive structural properties of the operators") {
    for (int ell : {1, 2}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 10; ++n) {
            for (auto& lam : enumerate_h_strict(n, ct)) {
                bool restricted = is_restricted(lam, ct);
                for (Residue i = 0; i <= ell; ++i) {
                    int e = eps(lam, ct, i), p = phi(lam, ct, i);

                    // reduced signature matches -*+*, parity of erasures
                    auto red = reduce_signature(signature(lam, ct, i));
                    REQUIRE(sign_string(red).find("+-") == std::string::npos);
                    REQUIRE((signature(lam, ct, i).size() - (e + p)) % 2 == 0);

                    // counter law against the Cartan pairing
                    REQUIRE(p - e == pairing_hi(i, content(lam, ct), ct));

                    // eps = number of times e_tilde applies
                    int cnt = 0;
                    for (auto cur = std::optional<Partition>(lam);
                         (cur = e_tilde(*cur, ct, i));)
                        ++cnt;
                    REQUIRE(cnt == e);

                    // phi = number of times f_tilde applies (within h-strict)
                    cnt = 0;
                    for (auto cur = std::optional<Partition>(lam);
                         (cur = f_tilde(*cur, ct, i));)
                        ++cnt;
                    REQUIRE(cnt == p);

                    // mutual inverse; one-step content change; restrictedness closure
                    if (auto mu = e_tilde(lam, ct, i)) {
                        REQUIRE(f_tilde(*mu, ct, i) == lam);
                        ContentVector g = content(lam, ct);
                        g.add(i, -1);
                        REQUIRE(content(*mu, ct) == g);
                        if (restricted) REQUIRE(is_restricted(*mu, ct));
                    }
                    if (auto mu = f_tilde(lam, ct, i)) {
                        REQUIRE(e_tilde(*mu, ct, i) == lam);
                        ContentVector g = content(lam, ct);
                        g.add(i, 1);
                        REQUIRE(content(*mu, ct) == g);
                    }
                    if (restricted) {
                        // f_tilde of a restricted partition stays restricted
                        if (auto mu = f_tilde(lam, ct, i))
                            REQUIRE(is_restricted(*mu, ct));
                    }
                }
            }
        }
    }
}

TEST_CASE("h = infinity: reduced signatures have at most one of each sign") {
    auto ct = CartanType::b_infinity();
    for (int n = 0; n <= 10; ++n) {
        for (auto& lam : enumerate_h_strict(n, ct)) {
            for (Residue i = 0; i <= n; ++i) {
                REQUIRE(eps(lam, ct, i) <= 1);
                REQUIRE(phi(lam, ct, i) <= 1);
                if (auto mu = e_tilde(lam, ct, i)) REQUIRE(f_tilde(*mu, ct, i) == lam);
                if (auto mu = f_tilde(lam, ct, i)) REQUIRE(e_tilde(*mu, ct, i) == lam);
            }
        }
    }
}

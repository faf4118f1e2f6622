#include <doctest.h>

#include <nlohmann/json.hpp>

#include "spincrystal/branching.hpp"
#include "spincrystal/crystal.hpp"

using namespace spincrystal;

namespace {

const BranchPiece* piece_at(const BranchReport& rep, Residue i) {
    for (auto& p : rep.pieces)
        if (p.i == i) return &p;
    return nullptr;
}

}  // namespace

TEST_CASE("restriction of (2,1) over W at h=3") {
    auto ct = CartanType::finite(1);
    auto rep = restrict_W({2, 1}, ct);
    CHECK(rep.algebra == Algebra::W);
    CHECK(rep.direction == Direction::restrict);

    auto* p0 = piece_at(rep, 0);
    REQUIRE(p0);
    CHECK(p0->outer_mult == 1);  // b = 2 even
    CHECK(p0->socle == Partition{2});
    CHECK(p0->socle_mult == 1);
    CHECK(p0->irreducible);

    auto* p1 = piece_at(rep, 1);
    REQUIRE(p1);
    CHECK(p1->outer_mult == 2);
    CHECK(!p1->socle.has_value());  // eps_1 = 0
    CHECK(p1->socle_mult == 0);

    CHECK(rep.completely_reducible);
}

TEST_CASE("restriction of the empty partition is vacuous") {
    auto ct = CartanType::finite(1);
    auto rep = restrict_W({}, ct);
    for (auto& p : rep.pieces) {
        CHECK(!p.socle.has_value());
        CHECK(p.socle_mult == 0);
    }
    CHECK(rep.completely_reducible);
}

TEST_CASE("worked h=5 example restricts with socle multiplicity 3 at residue 0") {
    auto ct = CartanType::finite(2);
    Partition e1{16, 11, 10, 10, 9, 5, 1};
    auto rep = restrict_W(e1, ct);
    auto* p0 = piece_at(rep, 0);
    REQUIRE(p0);
    CHECK(p0->socle_mult == 3);
    CHECK(!p0->irreducible);
    CHECK(!rep.completely_reducible);
    CHECK(p0->socle == e_tilde(e1, ct, 0));
}

TEST_CASE("outer multiplicities over S follow the a-parity") {
    auto ct = CartanType::finite(1);
    auto odd = restrict_S({2, 1}, ct);  // a = 1 odd
    CHECK(piece_at(odd, 0)->outer_mult == 1);
    CHECK(piece_at(odd, 1)->outer_mult == 2);

    auto even = restrict_S({1}, ct);  // a = 0 even
    CHECK(piece_at(even, 0)->outer_mult == 1);
    CHECK(piece_at(even, 1)->outer_mult == 1);
}

TEST_CASE("reports agree with the crystal operators") {
    for (int ell : {1, 2}) {
        auto ct = CartanType::finite(ell);
        for (int n = 0; n <= 8; ++n) {
            for (auto& lam : enumerate_restricted(n, ct)) {
                auto rw = restrict_W(lam, ct);
                auto rs = restrict_S(lam, ct);
                auto iw = induce_W(lam, ct);
                for (Residue i = 0; i <= ell; ++i) {
                    auto* pw = piece_at(rw, i);
                    auto* ps = piece_at(rs, i);
                    auto* pi = piece_at(iw, i);
                    REQUIRE(pw);
                    REQUIRE(ps);
                    REQUIRE(pi);
                    // restrict_W and restrict_S share all eps-derived data
                    REQUIRE(pw->socle == ps->socle);
                    REQUIRE(pw->socle_mult == ps->socle_mult);
                    REQUIRE(pw->irreducible == ps->irreducible);

                    int e = eps(lam, ct, i), f = phi(lam, ct, i);
                    REQUIRE(pw->socle_mult == e);
                    REQUIRE(pw->socle == e_tilde(lam, ct, i));
                    REQUIRE(pw->irreducible == (e == 1));
                    REQUIRE(pi->socle_mult == f);
                    REQUIRE(pi->socle == f_tilde(lam, ct, i));
                    REQUIRE(pi->irreducible == (f == 1));
                }
            }
        }
    }
}

TEST_CASE("branching rejects non-restricted input") {
    auto ct = CartanType::finite(1);
    CHECK_THROWS_AS(restrict_W({3, 3}, ct), std::invalid_argument);
    CHECK_THROWS_AS(induce_S({5, 1}, ct), std::invalid_argument);
}

TEST_CASE("irreducible-restriction predicates") {
    auto h3 = CartanType::finite(1);
    CHECK(jantzen_seitz_S({1}, h3));      // a even, eps_0 = sum = 1
    CHECK(jantzen_seitz_S({2, 1}, h3));   // a odd, sum eps = 1
    CHECK(!jantzen_seitz_S({3, 1}, h3));  // a odd, eps_0 = 2
    CHECK(jantzen_seitz_A({1}, h3));      // a even flips to the sum-only test

    // a JS partition restricts through exactly one irreducible piece
    for (int ell : {1, 2}) {
        auto ct = CartanType::finite(ell);
        for (int n = 1; n <= 10; ++n)
            for (auto& lam : enumerate_restricted(n, ct))
                if (jantzen_seitz_S(lam, ct)) {
                    auto rep = restrict_S(lam, ct);
                    int with_socle = 0;
                    for (auto& p : rep.pieces)
                        if (p.socle) {
                            ++with_socle;
                            REQUIRE(p.irreducible);
                        }
                    REQUIRE(with_socle == 1);
                }
    }
}

TEST_CASE("basic spin labels") {
    auto h5 = CartanType::finite(2);
    CHECK(omega(7, h5) == Partition{5, 2});
    CHECK(omega(10, h5) == Partition{5, 4, 1});
    CHECK(omega(3, h5) == Partition{3});

    for (int ell : {1, 2, 3}) {
        auto ct = CartanType::finite(ell);
        for (int n = 1; n <= 30; ++n) {
            Partition w = omega(n, ct);
            REQUIRE(degree(w) == n);
            REQUIRE(is_h_strict(w, ct));
            REQUIRE(is_restricted(w, ct));
        }
    }
}

TEST_CASE("basic spin dimensions") {
    auto h5 = CartanType::finite(2);
    CHECK(basic_spin_dims(5, h5) == std::pair<unsigned long long, unsigned long long>{16, 4});
    CHECK(basic_spin_dims(1, h5) == std::pair<unsigned long long, unsigned long long>{2, 1});
    CHECK(basic_spin_dims(10, h5) == std::pair<unsigned long long, unsigned long long>{512, 16});
    CHECK(basic_spin_dims(7, h5) == std::pair<unsigned long long, unsigned long long>{128, 8});
}

TEST_CASE("report JSON shape") {
    auto ct = CartanType::finite(1);
    auto j = nlohmann::json::parse(branch_report_json(restrict_W({2, 1}, ct)));
    CHECK(j["algebra"] == "W");
    CHECK(j["direction"] == "res");
    CHECK(j["source"] == nlohmann::json({2, 1}));
    REQUIRE(j["pieces"].size() == 2);
    CHECK(j["pieces"][0]["i"] == 0);
    CHECK(j["pieces"][0]["outer_mult"] == 1);
    CHECK(j["pieces"][0]["socle"] == nlohmann::json({2}));
    CHECK(j["pieces"][0]["irreducible"] == true);
    CHECK(j["pieces"][1]["socle"].is_null());
    CHECK(j["completely_reducible"] == true);
}

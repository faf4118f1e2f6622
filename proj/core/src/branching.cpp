#include "spincrystal/branching.hpp"

#include <nlohmann/json.hpp>

#include "spincrystal/crystal.hpp"

namespace spincrystal {

namespace {

// residues carrying a piece in the report: the whole index set when
// finite; 0..lam_1+1 covers every nonzero statistic when infinite
int piece_range(const Partition& lam, const CartanType& ct) {
    if (!ct.is_infinite()) return ct.ell() + 1;
    return (lam.empty() ? 0 : lam[0]) + 2;
}

BranchReport make_report(const Partition& lam, const CartanType& ct, Algebra alg,
                         Direction dir) {
    if (!is_restricted(lam, ct))
        throw std::invalid_argument("branching: not restricted h-strict: " + to_string(lam));
    BranchReport rep;
    rep.algebra = alg;
    rep.direction = dir;
    rep.source = lam;

    bool doubled;  // whether the non-distinguished residues carry 2 e_i / 2 f_i
    int m0;
    if (alg == Algebra::W) {
        // b odd: every residue doubled; b even: residue 0 single
        doubled = true;
        m0 = b_of(lam, ct) % 2 == 0 ? 1 : 2;
    } else {
        // a odd: residue 0 single, others doubled; a even: all single
        doubled = a_of(lam, ct) % 2 != 0;
        m0 = 1;
    }

    for (Residue i = 0; i < piece_range(lam, ct); ++i) {
        BranchPiece p;
        p.i = i;
        p.outer_mult = i == 0 ? m0 : (doubled ? 2 : 1);
        int stat = dir == Direction::restrict ? eps(lam, ct, i) : phi(lam, ct, i);
        p.socle_mult = stat;
        if (stat > 0)
            p.socle = dir == Direction::restrict ? *e_tilde(lam, ct, i) : *f_tilde(lam, ct, i);
        p.irreducible = stat == 1;
        if (stat > 1) rep.completely_reducible = false;
        rep.pieces.push_back(std::move(p));
    }
    return rep;
}

}  // namespace

BranchReport restrict_W(const Partition& lam, const CartanType& ct) {
    return make_report(lam, ct, Algebra::W, Direction::restrict);
}
BranchReport induce_W(const Partition& lam, const CartanType& ct) {
    return make_report(lam, ct, Algebra::W, Direction::induce);
}
BranchReport restrict_S(const Partition& lam, const CartanType& ct) {
    return make_report(lam, ct, Algebra::S, Direction::restrict);
}
BranchReport induce_S(const Partition& lam, const CartanType& ct) {
    return make_report(lam, ct, Algebra::S, Direction::induce);
}

namespace {

std::pair<long long, long long> eps_stats(const Partition& lam, const CartanType& ct) {
    if (!is_restricted(lam, ct))
        throw std::invalid_argument("jantzen_seitz: not restricted h-strict: " + to_string(lam));
    long long e0 = eps(lam, ct, 0), total = e0;
    int limit = ct.is_infinite() ? (lam.empty() ? 1 : lam[0] + 1) : ct.ell() + 1;
    for (Residue i = 1; i < limit; ++i) total += eps(lam, ct, i);
    return {e0, total};
}

}  // namespace

bool jantzen_seitz_S(const Partition& lam, const CartanType& ct) {
    auto [e0, total] = eps_stats(lam, ct);
    if (a_of(lam, ct) % 2 == 0) return e0 == 1 && total == 1;
    return total == 1;
}

bool jantzen_seitz_A(const Partition& lam, const CartanType& ct) {
    auto [e0, total] = eps_stats(lam, ct);
    if (a_of(lam, ct) % 2 == 0) return total == 1;
    return e0 == 1 && total == 1;
}

Partition omega(int n, const CartanType& ct) {
    if (n < 1) throw std::invalid_argument("omega: n must be >= 1");
    int h = ct.h();  // throws for B_infinity
    int a = n / h, b = n % h;
    Partition lam;
    if (b != 0) {
        lam.assign(a, h);
        lam.push_back(b);
    } else {
        lam.assign(a - 1, h);
        lam.push_back(h - 1);
        lam.push_back(1);
    }
    return lam;
}

std::pair<unsigned long long, unsigned long long> basic_spin_dims(int n, const CartanType& ct) {
    if (n < 1) throw std::invalid_argument("basic_spin_dims: n must be >= 1");
    int h = ct.h();
    bool divides = n % h == 0;
    unsigned long long dw = 1ULL << (divides ? n - 1 : n);
    unsigned long long ds = 1ULL << (divides ? (n - 1) / 2 : n / 2);
    return {dw, ds};
}

std::string branch_report_json(const BranchReport& rep) {
    nlohmann::ordered_json j;
    j["algebra"] = rep.algebra == Algebra::W ? "W" : "S";
    j["direction"] = rep.direction == Direction::restrict ? "res" : "ind";
    j["source"] = rep.source;
    j["pieces"] = nlohmann::ordered_json::array();
    for (const auto& p : rep.pieces) {
        nlohmann::ordered_json jp;
        jp["i"] = p.i;
        jp["outer_mult"] = p.outer_mult;
        if (p.socle)
            jp["socle"] = *p.socle;
        else
            jp["socle"] = nullptr;
        jp["socle_mult"] = p.socle_mult;
        jp["irreducible"] = p.irreducible;
        j["pieces"].push_back(std::move(jp));
    }
    j["completely_reducible"] = rep.completely_reducible;
    return j.dump(2) + "\n";
}

}  // namespace spincrystal

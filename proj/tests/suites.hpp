// Fixtures shared by the unit tests and the acceptance suite.
#pragma once

#include <algorithm>

#include "icp/bundle.hpp"

namespace suites {

using namespace icp;

inline bool is_triple(const std::string& preset)
{
    const auto t = braided_triple_presets();
    return std::find(t.begin(), t.end(), preset) != t.end();
}

inline QLink gallery_link(const std::string& preset, Field f = Field::rationals())
{
    if (is_triple(preset)) {
        const TwistedTriple t = braided_triple(preset, f);
        return twisted_triple_link(t.A, t.B, t.C, t.R1, t.R2, t.R3);
    }
    const SmashData s = smash_preset(preset, f);
    return two_sided_q(s.left, s.right);
}

/// Every preset whose link satisfies the Q conditions.
inline std::vector<std::string> good_presets()
{
    std::vector<std::string> out;
    for (const auto& p : gallery_presets())
        if (p != "broken") out.push_back(p);
    return out;
}

struct Twisting {
    std::string name;
    Algebra A, B;
    LinMap R;
};

/// The pairwise twisting maps of every triple preset, plus the smash-type
/// maps R(b⊗h) = h₁⊗b·h₂ of the bialgebra presets.
inline std::vector<Twisting> twisting_suite(Field f = Field::rationals())
{
    std::vector<Twisting> out;
    for (const auto& p : braided_triple_presets()) {
        const TwistedTriple t = braided_triple(p, f);
        out.push_back({p + "/R1", t.A, t.B, t.R1});
        out.push_back({p + "/R2", t.B, t.C, t.R2});
        out.push_back({p + "/R3", t.A, t.C, t.R3});
    }
    for (const auto& p : smash_presets()) {
        if (p == "quasi-smash-z2") continue; // σ is not of twisted type there
        const SmashData s = smash_preset(p, f);
        const BrzData d = right_smash(s.right);
        out.push_back({p + "/right", d.A, make_algebra(s.right.A.space, s.right.A.mul, s.right.A.unit()), d.R});
    }
    return out;
}

/// Q from R3 with the halves built from R1 and R2; Q itself is not checked.
inline QLink triple_link_unchecked(const TwistedTriple& t)
{
    return make_qlink(mirror_from_twisted(t.A, t.B, t.R1), brz_from_twisted(t.B, t.C, t.R2),
                      q_from_r3(t.A, t.B, t.C, t.R3));
}

/// R3(c⊗a) = (c·a)⊗c where the generator of a two-element C permutes the basis of A.
inline LinMap permutation_twist(const Algebra& A, const Algebra& C, const std::vector<std::size_t>& perm)
{
    const std::size_t na = A.dim();
    LinMap R = LinMap::zero({C.space(), A.space()}, {A.space(), C.space()}, A.field());
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t a = 0; a < na; ++a)
            R = R.with_entry((c ? perm[a] : a) * 2 + c, c * na + a, Scalar::one(A.field()));
    return R;
}

/// Triples whose R3 is a twisting map: the presets, and R3 swapped for
/// other twisting maps (some of which break the hexagon).
inline std::vector<TwistedTriple> hexagon_suite()
{
    const Field Q = Field::rationals();
    std::vector<TwistedTriple> suite;
    for (const auto& p : braided_triple_presets()) suite.push_back(braided_triple(p, Q));
    suite.push_back(braided_triple("sign-braid", Field::prime(7)));
    {
        TwistedTriple t = braided_triple("sign-braid", Q);
        t.name = "sign-braid/unsigned-R3";
        t.R3 = flip(t.C.space(), t.A.space(), Q);
        suite.push_back(t);
    }
    {
        TwistedTriple t = braided_triple("flips", Q);
        t.name = "flips/signed-R3";
        // c⊗a -> -a⊗c on the generators
        t.R3 = t.R3.with_entry(3, 3, Scalar(Q, -1L));
        suite.push_back(t);
    }
    // Klein four basis 1, s, t, st; the generator of B swaps s and t
    for (const auto& [name, perm] : std::vector<std::pair<std::string, std::vector<std::size_t>>>{
             {"swap-s-st", {0, 3, 2, 1}}, {"swap-s-t", {0, 2, 1, 3}}}) {
        TwistedTriple t = braided_triple("commuting-actions", Q);
        t.name = "actions/" + name;
        t.R3 = permutation_twist(t.A, t.C, perm);
        suite.push_back(t);
    }
    return suite;
}

} // namespace suites

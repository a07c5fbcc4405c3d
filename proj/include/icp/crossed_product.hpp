#pragma once

#include "icp/algebra.hpp"

namespace icp {

/// Data for a crossed product A⊗_{R,σ}V: an algebra A, a space V whose marked
/// basis element is 1_V, R: V⊗A -> A⊗V and σ: V⊗V -> A⊗V.
struct BrzData {
    Algebra A;
    Space V;
    LinMap R;
    LinMap sigma;
};

/// Data for a mirror crossed product W⊗̄_{P,ν}B: a space W whose marked basis
/// element is 1_W, an algebra B, P: B⊗W -> W⊗B and ν: W⊗W -> W⊗B.
struct MirrorData {
    Space W;
    Algebra B;
    LinMap P;
    LinMap nu;
};

/// Checks shapes (dimensions; labels are taken from A and V) and that V has
/// a marked element. Does not check the axioms.
BrzData make_brz_data(Algebra A, Space V, const LinMap& R, const LinMap& sigma);
MirrorData make_mirror_data(Space W, Algebra B, const LinMap& P, const LinMap& nu);

/// The basis vector of the marked element, as a map k -> X.
LinMap marked_element(const Space& x, Field field);

/// Twisting-map conditions for R: B⊗A -> A⊗B, items
/// "unit-A", "unit-B", "multiplicative-A", "multiplicative-B".
AxiomReport check_twisting_map(const Algebra& A, const Algebra& B, const LinMap& R,
                               const CheckOptions& options = {});

/// Items "R-unit", "sigma-unit", "R-multiplicative", "sigma-cocycle",
/// "sigma-R-compatible", each a whole-map equality.
AxiomReport check_brz(const BrzData& data, const CheckOptions& options = {});

/// Items "P-unit", "nu-unit", "P-multiplicative", "nu-cocycle",
/// "nu-P-compatible".
AxiomReport check_mirror(const MirrorData& data, const CheckOptions& options = {});

/// The multiplication (μ₂⊗id_V)∘(id_A⊗id_A⊗σ)∘(id_A⊗R⊗id_V) on A⊗V⊗A⊗V,
/// without any validation.
LinMap brz_multiplication(const BrzData& data);

/// (id_W⊗μ₂)∘(ν⊗id_B⊗id_B)∘(id_W⊗P⊗id_B) on W⊗B⊗W⊗B.
LinMap mirror_multiplication(const MirrorData& data);

/// Algebra on A⊗V with unit 1_A⊗1_V. Throws AxiomError if check_brz fails and
/// InternalError if the product is not associative anyway.
Algebra build_brz(const BrzData& data, const CheckOptions& options = {});

/// Algebra on W⊗B with unit 1_W⊗1_B; errors as build_brz.
Algebra build_mirror(const MirrorData& data, const CheckOptions& options = {});

/// A⊗_R B via (a⊗b)(a'⊗b') = aa'_R⊗b_Rb'. Throws AxiomError unless R is a
/// twisting map.
Algebra build_twisted(const Algebra& A, const Algebra& B, const LinMap& R, const CheckOptions& options = {});

/// V = B with 1_V = 1_B and σ(b⊗b') = 1_A⊗bb'. B's unit must be a basis vector.
BrzData brz_from_twisted(const Algebra& A, const Algebra& B, const LinMap& R, const CheckOptions& options = {});

/// W = A with 1_W = 1_A, P = R and ν(a⊗a') = aa'⊗1_B. A's unit must be a basis vector.
MirrorData mirror_from_twisted(const Algebra& A, const Algebra& B, const LinMap& R,
                               const CheckOptions& options = {});

} // namespace icp

#pragma once

#include "icp/crossed_product.hpp"

namespace icp {

/// A mirror crossed product W⊗̄_{P,ν}D and a crossed product D⊗_{R,σ}V over
/// the same algebra D, linked by Q: V⊗W -> W⊗D⊗V.
struct QLink {
    MirrorData mirror;
    BrzData brz;
    LinMap Q;

    const Space& W() const { return mirror.W; }
    const Algebra& D() const { return brz.A; }
    const Space& V() const { return brz.V; }
};

/// Requires mirror.B and brz.A to be the same algebra (labels, structure
/// constants and unit) and conforms Q to V⊗W -> W⊗D⊗V.
QLink make_qlink(MirrorData mirror, BrzData brz, const LinMap& Q);

/// The four maps that turn the pair into crossed products one level up:
/// σ̄: V⊗V -> (W⊗D)⊗V, R̄: V⊗(W⊗D) -> (W⊗D)⊗V,
/// ν̄: W⊗W -> W⊗(D⊗V), P̄: (D⊗V)⊗W -> W⊗(D⊗V).
/// W⊗D and D⊗V appear as single spaces (tensor_space).
struct BarMaps {
    LinMap sigma_bar;
    LinMap R_bar;
    LinMap nu_bar;
    LinMap P_bar;
};

/// Items "Q-unit", "Q-P-R" (Q intertwines P and R), "Q-nu" and "Q-sigma",
/// each checked as an equality of composite maps.
AxiomReport check_q(const QLink& link, const CheckOptions& options = {});

/// Throws AxiomError when check_q fails.
BarMaps build_bar_maps(const QLink& link, const CheckOptions& options = {});

/// Both bracketings of the iterated product, built independently.
struct Bracketings {
    /// (W⊗̄_{P,ν}D)⊗_{R̄,σ̄}V
    Algebra outer_brz;
    /// W⊗̄_{P̄,ν̄}(D⊗_{R,σ}V)
    Algebra outer_mirror;
};

/// Throws as build_iterated, without comparing the two results.
Bracketings build_bracketings(const QLink& link, const CheckOptions& options = {});

/// The iterated crossed product on W⊗D⊗V. Builds both bracketings and throws
/// InternalError unless their multiplication tables and units coincide under
/// the flat-index identification; throws AxiomError when check_mirror,
/// check_brz or check_q fails.
Algebra build_iterated(const QLink& link, const CheckOptions& options = {});

/// Embeddings of W, D and V (and of W⊗D, D⊗V) into W⊗D⊗V via the units.
struct Embeddings {
    LinMap w, d, v, wd, dv;
};

/// Hypotheses for recovering Q from an algebra M on W⊗D⊗V: items
/// "embedding-WD", "embedding-DV" (algebra maps, units included) and
/// "canonical-decomposition" (w⊗d⊗v = (w⊗1⊗1)(1⊗d⊗1)(1⊗1⊗v)).
AxiomReport check_extraction(const Algebra& M, const MirrorData& mirror, const BrzData& brz,
                             const CheckOptions& options = {});

/// The relations d·w = w_P·d_P, v·d = d_R·v_R, w·w' = ν₁·ν₂, v·v' = σ₁·σ₂
/// inside M, items "d-w", "v-d", "w-w", "v-v".
AxiomReport check_commutation_relations(const Algebra& M, const MirrorData& mirror, const BrzData& brz,
                                        const CheckOptions& options = {});

/// Q(v⊗w) = (1⊗1⊗v)·(w⊗1⊗1) computed in M. Throws AxiomError when
/// check_extraction fails, InternalError if the resulting link violates the
/// commutation relations or check_q.
QLink extract_q(const Algebra& M, const MirrorData& mirror, const BrzData& brz, const CheckOptions& options = {});

/// Braid relation for R1: B⊗A -> A⊗B, R2: C⊗B -> B⊗C, R3: C⊗A -> A⊗C
/// (spaces read off the maps), one item "hexagon" on C⊗B⊗A.
AxiomReport hexagon_check(const LinMap& R1, const LinMap& R2, const LinMap& R3, const CheckOptions& options = {});

/// Q(c⊗a) = a_{R3}⊗1_B⊗c_{R3}. Throws AxiomError unless R3 is a twisting map.
LinMap q_from_r3(const Algebra& A, const Algebra& B, const Algebra& C, const LinMap& R3,
                 const CheckOptions& options = {});

/// The link for an iterated twisted tensor product: A⊗_{R1}B as a mirror
/// crossed product, B⊗_{R2}C as a crossed product, Q from R3.
QLink twisted_triple_link(const Algebra& A, const Algebra& B, const Algebra& C, const LinMap& R1, const LinMap& R2,
                          const LinMap& R3, const CheckOptions& options = {});

} // namespace icp

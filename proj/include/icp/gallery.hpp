#pragma once

#include <string>
#include <vector>

#include "icp/iteration.hpp"

namespace icp {

// Quasi-bialgebras follow Drinfeld's conventions:
//   (id⊗Δ)(Δ(h)) Φ = Φ (Δ⊗id)(Δ(h)),
//   (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ),
//   (id⊗ε⊗id)(Φ) = 1⊗1,
// with Δ, ε algebra maps and ε a two-sided counit for Δ. A left module
// algebra reassociates with Φ, (ab)c = (X¹·a)((X²·b)(X³·c)); a right module
// algebra with Φ⁻¹, (ab)c = (a·x¹)((b·x²)(c·x³)).

struct QuasiBialgebra {
    Algebra H;
    /// H -> H⊗H
    LinMap comul;
    /// H -> k
    LinMap counit;
    /// Φ and Φ⁻¹ as coordinate vectors on H⊗H⊗H.
    Vector phi;
    Vector phi_inv;
};

/// Items "comul-multiplicative", "comul-unital", "counit-multiplicative",
/// "counit-unital", "counit", "quasi-coassociative", "associator-inverse",
/// "pentagon", "associator-counit".
AxiomReport check_quasi_bialgebra(const Algebra& H, const LinMap& comul, const LinMap& counit, const Vector& phi,
                                  const Vector& phi_inv, const CheckOptions& options = {});

/// Ordinary bialgebra axioms; "coassociative" replaces the Φ-dependent items.
AxiomReport check_bialgebra(const Algebra& H, const LinMap& comul, const LinMap& counit,
                            const CheckOptions& options = {});

/// Throws AxiomError when check_quasi_bialgebra fails.
QuasiBialgebra make_quasi_bialgebra(Algebra H, const LinMap& comul, const LinMap& counit, Vector phi,
                                    Vector phi_inv, const CheckOptions& options = {});

/// Φ = 1⊗1⊗1, for bialgebras viewed as quasi-bialgebras.
Vector trivial_associator(const Algebra& H);

/// (a⊗b⊗c)(a'⊗b'⊗c') in H⊗H⊗H, or any tensor power.
Vector tensor_power_multiply(const Algebra& H, std::size_t power, const Vector& x, const Vector& y);

/// A unital multiplication that need not be associative. The unit must be
/// the marked basis element of the space.
struct Carrier {
    Space space;
    LinMap mul;

    Vector unit() const;
};

Carrier make_carrier(Space space, const LinMap& mul);
Carrier carrier_of(const Algebra& a);

enum class Side { left, right };

struct ModuleAlgebraAction {
    Side side;
    QuasiBialgebra H;
    Carrier A;
    /// H⊗A -> A (left) or A⊗H -> A (right).
    LinMap action;
};

/// Items "carrier-unit" (the marked element is a two-sided unit of A),
/// "module-unit", "module-associative", "action-unital",
/// "action-multiplicative", "quasi-associative". With `inverse_associator`
/// the roles of Φ and Φ⁻¹ in "quasi-associative" are swapped.
AxiomReport check_module_algebra(const ModuleAlgebraAction& act, const CheckOptions& options = {},
                                 bool inverse_associator = false);

/// Throws AxiomError when check_module_algebra fails.
ModuleAlgebraAction make_module_algebra(Side side, QuasiBialgebra H, Carrier A, const LinMap& action,
                                        const CheckOptions& options = {});

/// A#H as a mirror crossed product: P(h⊗a) = h₁·a⊗h₂, ν(a⊗a') = (x¹·a)(x²·a')⊗x³.
/// Throws AxiomError if check_mirror fails.
MirrorData left_smash(const ModuleAlgebraAction& act, const CheckOptions& options = {});

/// H#B as a crossed product: R(b⊗h) = h₁⊗b·h₂, σ(b⊗b') = x¹⊗(b·x²)(b'·x³).
/// Throws AxiomError if check_brz fails.
BrzData right_smash(const ModuleAlgebraAction& act, const CheckOptions& options = {});

/// The link for A#H#B: Q(b⊗a) = x¹·a⊗x²⊗b·x³. Throws ShapeError when the two
/// actions are over different quasi-bialgebras and AxiomError if check_q fails.
QLink two_sided_q(const ModuleAlgebraAction& left, const ModuleAlgebraAction& right,
                  const CheckOptions& options = {});

/// Three algebras with twisting maps R1: B⊗A→A⊗B, R2: C⊗B→B⊗C, R3: C⊗A→A⊗C.
struct TwistedTriple {
    std::string name;
    Algebra A, B, C;
    LinMap R1, R2, R3;
};

/// "trivial" (three copies of k), "flips", "sign-braid", "commuting-actions", "mixed-braid", "broken".
/// All maps are twisting maps; every preset but "broken" satisfies the
/// hexagon. Presets needing -1 ≠ 1 refuse characteristic 2.
TwistedTriple braided_triple(const std::string& preset, Field field);
std::vector<std::string> braided_triple_presets();

/// A quasi-bialgebra with a left and a right module algebra over it.
struct SmashData {
    std::string name;
    ModuleAlgebraAction left;
    ModuleAlgebraAction right;
};

/// "trivial-action" (k[ℤ₂] acting through ε), "smash-z2" (k[ℤ₂] acting by
/// sign on k[x]/(x²) from both sides) and "quasi-smash-z2" (the same actions
/// over k[ℤ₂] with the associator 1⊗1⊗1 - 2p⊗p⊗p, p = (1-g)/2).
SmashData smash_preset(const std::string& preset, Field field);
std::vector<std::string> smash_presets();

/// k[x]/(x²) with basis {1, x}.
Algebra dual_numbers(Field field, const std::string& var = "x");

/// k[ℤ₂] with Δ(g) = g⊗g, ε(g) = 1 and the given associator (trivial when empty).
QuasiBialgebra z2_quasi_bialgebra(Field field, bool nontrivial_associator);

} // namespace icp

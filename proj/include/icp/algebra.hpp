#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icp/linmap.hpp"
#include "icp/report.hpp"

namespace icp {

/// A finite-dimensional unital associative algebra given by structure
/// constants. Instances only come out of make_algebra (or builders that call
/// it), so every Algebra has passed the associativity and unit checks.
class Algebra {
public:
    const Space& space() const { return space_; }
    Field field() const { return mul_.field(); }
    std::size_t dim() const { return space_.dim(); }
    /// A⊗A -> A.
    const LinMap& mul() const { return mul_; }
    const Vector& unit() const { return unit_; }
    /// k -> A, 1 ↦ 1_A.
    LinMap unit_map() const { return LinMap::element({space_}, unit_); }
    LinMap id() const { return identity(space_, field()); }

    Vector multiply(const Vector& a, const Vector& b) const;

    /// Equal labels and structure constants, units included.
    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    friend Algebra make_algebra(Space space, LinMap mul, Vector unit, const CheckOptions& options);
    Algebra(Space space, LinMap mul, Vector unit)
        : space_(std::move(space)), mul_(std::move(mul)), unit_(std::move(unit))
    {
    }

    Space space_;
    LinMap mul_;
    Vector unit_;
};

/// Associativity and both unit laws, exhaustively over basis tuples.
/// `mul` may be carried on any factorization with the right dimensions.
AxiomReport check_algebra(const Space& space, const LinMap& mul, const Vector& unit,
                          const CheckOptions& options = {});

/// Validates and returns the algebra; throws AxiomError with the report when
/// associativity or a unit law fails. If the unit is a basis vector the
/// returned space marks it.
Algebra make_algebra(Space space, LinMap mul, Vector unit, const CheckOptions& options = {});

/// k[G] from a Cayley table: e_i e_j = e_{table[i][j]}.
Algebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::size_t unit_index, Field field,
                      std::vector<std::string> labels = {});

/// The one-dimensional algebra k.
Algebra ground_algebra(Field field, std::string label = "1");

/// μ∘(μ⊗id) (= μ∘(id⊗μ) for a valid algebra): A⊗A⊗A -> A.
LinMap mu2(const Algebra& a);

} // namespace icp

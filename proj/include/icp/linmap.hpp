#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "icp/scalar.hpp"

namespace icp {

/// Raised when shapes do not conform.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A based vector space with unique basis labels and an optional
/// distinguished basis element.
class Space {
public:
    Space(std::vector<std::string> labels, std::optional<std::size_t> marked = std::nullopt);

    /// Space with labels prefix0, prefix1, ...
    static Space numbered(const std::string& prefix, std::size_t dim,
                          std::optional<std::size_t> marked = std::nullopt);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> marked() const { return marked_; }

    Space with_marked(std::optional<std::size_t> marked) const { return Space(labels_, marked); }

    /// Conformance ignores the marked element.
    friend bool operator==(const Space& a, const Space& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::optional<std::size_t> marked_;
};

/// Single space on X⊗Y with labels "x⊗y" under the leftmost-slowest flat index.
Space tensor_space(const Space& x, const Space& y);

/// An ordered tensor product X1⊗...⊗Xk. The empty list is the ground field.
using Factors = std::vector<Space>;

std::size_t total_dim(const Factors& factors);
Factors concat(const Factors& a, const Factors& b);

/// Flat index -> per-factor indices, leftmost factor varying slowest.
std::vector<std::size_t> unflatten(const Factors& factors, std::size_t flat);
std::string basis_label(const Factors& factors, std::size_t flat);

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector basis_vector(Field field, std::size_t n, std::size_t i);

/// "2*x⊗1 - 1/2*g⊗g", or "0".
std::string format_vector(const Factors& factors, std::span<const Scalar> v);

/// A linear map between tensor products of based spaces, stored densely.
/// Rows index the codomain tensor basis, columns the domain tensor basis.
class LinMap {
public:
    LinMap(Factors domain, Factors codomain, Field field, std::vector<Scalar> entries);

    static LinMap zero(Factors domain, Factors codomain, Field field);
    static LinMap identity(Factors factors, Field field);
    /// The map k -> codomain sending 1 to v.
    static LinMap element(Factors codomain, Vector v);
    /// Builds the map column by column.
    static LinMap from_columns(Factors domain, Factors codomain, Field field,
                               const std::vector<Vector>& columns);

    const Factors& domain() const { return domain_; }
    const Factors& codomain() const { return codomain_; }
    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    const std::vector<Scalar>& entries() const { return entries_; }
    Vector column(std::size_t col) const;

    /// Same matrix, different factorization of domain and codomain.
    LinMap retyped(Factors domain, Factors codomain) const;

    LinMap with_entry(std::size_t row, std::size_t col, Scalar value) const;
    LinMap scaled(const Scalar& s) const;

    friend bool operator==(const LinMap& a, const LinMap& b);

private:
    Factors domain_;
    Factors codomain_;
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// f∘g.
LinMap compose(const LinMap& f, const LinMap& g);

/// Right-to-left composite: compose_all({f, g, h}) = f∘g∘h.
LinMap compose_all(std::initializer_list<LinMap> maps);

LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor_all(std::initializer_list<LinMap> maps);

LinMap identity(const Space& x, Field field);
LinMap identity(const Factors& xs, Field field);

/// X⊗Y -> Y⊗X.
LinMap flip(const Space& x, const Space& y, Field field);

/// X_0⊗...⊗X_{k-1} -> X_{order[0]}⊗...⊗X_{order[k-1]}.
LinMap permutation(const Factors& factors, const std::vector<std::size_t>& order, Field field);

/// Call as icp::apply: with std::vector arguments ADL also finds std::apply.
Vector apply(const LinMap& f, std::span<const Scalar> v);

} // namespace icp

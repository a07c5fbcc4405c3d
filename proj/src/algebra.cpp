#include "icp/algebra.hpp"

namespace icp {

namespace {

LinMap conform_mul(const Space& space, const LinMap& mul)
{
    if (mul.cols() != space.dim() * space.dim() || mul.rows() != space.dim())
        throw ShapeError("multiplication must map a " + std::to_string(space.dim()) + "-dim space squared to itself");
    return mul.retyped({space, space}, {space});
}

std::optional<std::size_t> basis_index_of(const Vector& v)
{
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (found || !v[i].is_one()) return std::nullopt;
        found = i;
    }
    return found;
}

} // namespace

Vector Algebra::multiply(const Vector& a, const Vector& b) const
{
    Vector ab = zero_vector(field(), a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) ab[i * b.size() + j] = a[i] * b[j];
    }
    return icp::apply(mul_, ab);
}

bool operator==(const Algebra& a, const Algebra& b)
{
    return a.space_ == b.space_ && a.mul_ == b.mul_ && a.unit_ == b.unit_;
}

AxiomReport check_algebra(const Space& space, const LinMap& raw_mul, const Vector& unit, const CheckOptions& options)
{
    const LinMap mul = conform_mul(space, raw_mul);
    const Field field = mul.field();
    if (unit.size() != space.dim()) throw ShapeError("unit vector has wrong length");
    const LinMap id = identity(space, field);
    const LinMap u = LinMap::element({space}, unit);
    const std::size_t cap = options.max_witnesses;

    std::vector<std::function<AxiomItem()>> tasks{
        [&] {
            return compare_maps("associativity", compose(mul, tensor(mul, id)), compose(mul, tensor(id, mul)), cap);
        },
        [&] { return compare_maps("left unit", compose(mul, tensor(u, id)), id, cap); },
        [&] { return compare_maps("right unit", compose(mul, tensor(id, u)), id, cap); },
    };
    return run_checks("algebra", tasks, options.jobs);
}

Algebra make_algebra(Space space, LinMap mul, Vector unit, const CheckOptions& options)
{
    AxiomReport report = check_algebra(space, mul, unit, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    Space marked = space.with_marked(basis_index_of(unit));
    LinMap typed = mul.retyped({marked, marked}, {marked});
    return Algebra(std::move(marked), std::move(typed), std::move(unit));
}

Algebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::size_t unit_index, Field field,
                      std::vector<std::string> labels)
{
    const std::size_t n = cayley.size();
    if (n == 0) throw ShapeError("empty Cayley table");
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    if (labels.size() != n) throw ShapeError("label count does not match the Cayley table");
    if (unit_index >= n) throw ShapeError("unit index out of range");
    Space space(std::move(labels));
    std::vector<Scalar> e(n * n * n, Scalar::zero(field));
    for (std::size_t i = 0; i < n; ++i) {
        if (cayley[i].size() != n) throw ShapeError("Cayley table is not square");
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = cayley[i][j];
            if (k >= n) throw ShapeError("Cayley table entry out of range");
            e[k * n * n + i * n + j] = Scalar::one(field);
        }
    }
    LinMap mul({space, space}, {space}, field, std::move(e));
    return make_algebra(space, std::move(mul), basis_vector(field, n, unit_index));
}

Algebra ground_algebra(Field field, std::string label)
{
    Space k({std::move(label)});
    return make_algebra(k, LinMap::identity({k}, field).retyped({k, k}, {k}), {Scalar::one(field)});
}

LinMap mu2(const Algebra& a)
{
    return compose(a.mul(), tensor(a.mul(), a.id()));
}

} // namespace icp

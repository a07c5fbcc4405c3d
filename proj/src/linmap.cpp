#include "icp/linmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace icp {

namespace {

constexpr const char* kTensorSep = "⊗";

std::string describe(const Factors& fs)
{
    if (fs.empty()) return "k";
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += kTensorSep;
        out += "[" + std::to_string(fs[i].dim()) + "]";
    }
    return out;
}

void require_field(const LinMap& f, const LinMap& g)
{
    if (!(f.field() == g.field()))
        throw FieldMismatch("maps over " + f.field().name() + " and " + g.field().name());
}

} // namespace

Space::Space(std::vector<std::string> labels, std::optional<std::size_t> marked)
    : labels_(std::move(labels)), marked_(marked)
{
    if (labels_.empty()) throw ShapeError("a space must have positive dimension");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw ShapeError("basis labels must be unique");
    if (marked_ && *marked_ >= labels_.size())
        throw ShapeError("marked index " + std::to_string(*marked_) + " out of range");
}

Space Space::numbered(const std::string& prefix, std::size_t dim, std::optional<std::size_t> marked)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
    return Space(std::move(labels), marked);
}

Space tensor_space(const Space& x, const Space& y)
{
    std::vector<std::string> labels;
    labels.reserve(x.dim() * y.dim());
    for (const auto& a : x.labels())
        for (const auto& b : y.labels()) labels.push_back(a + kTensorSep + b);
    std::optional<std::size_t> marked;
    if (x.marked() && y.marked()) marked = *x.marked() * y.dim() + *y.marked();
    return Space(std::move(labels), marked);
}

std::size_t total_dim(const Factors& factors)
{
    std::size_t n = 1;
    for (const auto& s : factors) n *= s.dim();
    return n;
}

Factors concat(const Factors& a, const Factors& b)
{
    Factors out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<std::size_t> unflatten(const Factors& factors, std::size_t flat)
{
    std::vector<std::size_t> idx(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
        idx[k] = flat % factors[k].dim();
        flat /= factors[k].dim();
    }
    return idx;
}

std::string basis_label(const Factors& factors, std::size_t flat)
{
    if (factors.empty()) return "1";
    auto idx = unflatten(factors, flat);
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out += kTensorSep;
        out += factors[k].label(idx[k]);
    }
    return out;
}

Vector zero_vector(Field field, std::size_t n)
{
    return Vector(n, Scalar::zero(field));
}

Vector basis_vector(Field field, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(field, n);
    v.at(i) = Scalar::one(field);
    return v;
}

std::string format_vector(const Factors& factors, std::span<const Scalar> v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Scalar& c = v[i];
        if (c.is_zero()) continue;
        const std::string label = basis_label(factors, i);
        std::string coef;
        bool negative = false;
        if (c.field().is_rational()) {
            negative = sgn(c.rational()) < 0;
            mpq_class mag = abs(c.rational());
            if (mag != 1) coef = mag.get_str();
        } else if (!c.is_one()) {
            coef = std::to_string(c.residue());
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coef.empty() ? label : coef + "*" + label;
    }
    return out.empty() ? "0" : out;
}

LinMap::LinMap(Factors domain, Factors codomain, Field field, std::vector<Scalar> entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), field_(field),
      rows_(total_dim(codomain_)), cols_(total_dim(domain_)), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("matrix for " + describe(domain_) + " -> " + describe(codomain_) + " needs " +
                         std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
    for (const auto& e : entries_)
        if (!(e.field() == field_)) throw FieldMismatch("entry over " + e.field().name() + " in a " + field_.name() + " map");
}

LinMap LinMap::zero(Factors domain, Factors codomain, Field field)
{
    const std::size_t n = total_dim(domain) * total_dim(codomain);
    return LinMap(std::move(domain), std::move(codomain), field, std::vector<Scalar>(n, Scalar::zero(field)));
}

LinMap LinMap::identity(Factors factors, Field field)
{
    const std::size_t n = total_dim(factors);
    std::vector<Scalar> e(n * n, Scalar::zero(field));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar::one(field);
    return LinMap(factors, factors, field, std::move(e));
}

LinMap LinMap::element(Factors codomain, Vector v)
{
    if (v.empty()) throw ShapeError("empty element vector");
    Field field = v.front().field();
    if (v.size() != total_dim(codomain))
        throw ShapeError("element of length " + std::to_string(v.size()) + " for " + describe(codomain));
    return LinMap({}, std::move(codomain), field, std::move(v));
}

LinMap LinMap::from_columns(Factors domain, Factors codomain, Field field, const std::vector<Vector>& columns)
{
    const std::size_t rows = total_dim(codomain), cols = total_dim(domain);
    if (columns.size() != cols) throw ShapeError("wrong number of columns");
    std::vector<Scalar> e(rows * cols, Scalar::zero(field));
    for (std::size_t c = 0; c < cols; ++c) {
        if (columns[c].size() != rows) throw ShapeError("column " + std::to_string(c) + " has wrong length");
        for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = columns[c][r];
    }
    return LinMap(std::move(domain), std::move(codomain), field, std::move(e));
}

Vector LinMap::column(std::size_t col) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, col));
    return v;
}

LinMap LinMap::retyped(Factors domain, Factors codomain) const
{
    if (total_dim(domain) != cols_ || total_dim(codomain) != rows_)
        throw ShapeError("cannot retype " + describe(domain_) + " -> " + describe(codomain_) + " as " +
                         describe(domain) + " -> " + describe(codomain));
    return LinMap(std::move(domain), std::move(codomain), field_, entries_);
}

LinMap LinMap::with_entry(std::size_t row, std::size_t col, Scalar value) const
{
    if (row >= rows_ || col >= cols_) throw ShapeError("entry index out of range");
    LinMap out = *this;
    out.entries_[row * cols_ + col] = std::move(value);
    return out;
}

LinMap LinMap::scaled(const Scalar& s) const
{
    LinMap out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

bool operator==(const LinMap& a, const LinMap& b)
{
    return a.field_ == b.field_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.entries_ == b.entries_;
}

LinMap compose(const LinMap& f, const LinMap& g)
{
    require_field(f, g);
    if (!(g.codomain() == f.domain()))
        throw ShapeError("cannot compose: codomain " + describe(g.codomain()) + " vs domain " + describe(f.domain()) +
                         " (dims or labels differ)");
    const Field field = f.field();
    const std::size_t rows = f.rows(), inner = f.cols(), cols = g.cols();
    std::vector<Scalar> out(rows * cols, Scalar::zero(field));
    for (std::size_t i = 0; i < rows; ++i) {
        Scalar* row = out.data() + i * cols;
        for (std::size_t l = 0; l < inner; ++l) {
            const Scalar& a = f.at(i, l);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                const Scalar& b = g.at(l, j);
                if (!b.is_zero()) row[j].add_product(a, b);
            }
        }
    }
    return LinMap(g.domain(), f.codomain(), field, std::move(out));
}

LinMap compose_all(std::initializer_list<LinMap> maps)
{
    if (maps.size() == 0) throw ShapeError("empty composite");
    auto it = std::rbegin(maps);
    LinMap acc = *it++;
    for (; it != std::rend(maps); ++it) acc = compose(*it, acc);
    return acc;
}

LinMap tensor(const LinMap& f, const LinMap& g)
{
    require_field(f, g);
    const std::size_t r1 = f.rows(), c1 = f.cols(), r2 = g.rows(), c2 = g.cols();
    const std::size_t cols = c1 * c2;
    std::vector<Scalar> out(r1 * r2 * cols, Scalar::zero(f.field()));
    for (std::size_t i1 = 0; i1 < r1; ++i1)
        for (std::size_t j1 = 0; j1 < c1; ++j1) {
            const Scalar& a = f.at(i1, j1);
            if (a.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < r2; ++i2)
                for (std::size_t j2 = 0; j2 < c2; ++j2) {
                    const Scalar& b = g.at(i2, j2);
                    if (!b.is_zero()) out[(i1 * r2 + i2) * cols + j1 * c2 + j2] = a * b;
                }
        }
    return LinMap(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()), f.field(), std::move(out));
}

LinMap tensor_all(std::initializer_list<LinMap> maps)
{
    if (maps.size() == 0) throw ShapeError("empty tensor product");
    auto it = maps.begin();
    LinMap acc = *it++;
    for (; it != maps.end(); ++it) acc = tensor(acc, *it);
    return acc;
}

LinMap identity(const Space& x, Field field)
{
    return LinMap::identity({x}, field);
}

LinMap identity(const Factors& xs, Field field)
{
    return LinMap::identity(xs, field);
}

LinMap flip(const Space& x, const Space& y, Field field)
{
    return permutation({x, y}, {1, 0}, field);
}

LinMap permutation(const Factors& factors, const std::vector<std::size_t>& order, Field field)
{
    const std::size_t k = factors.size();
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(k);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw ShapeError("permutation order is not a permutation of the factors");

    Factors target;
    for (std::size_t i : order) target.push_back(factors[i]);
    const std::size_t n = total_dim(factors);
    std::vector<Scalar> e(n * n, Scalar::zero(field));
    for (std::size_t col = 0; col < n; ++col) {
        auto idx = unflatten(factors, col);
        std::size_t row = 0;
        for (std::size_t t = 0; t < k; ++t) row = row * target[t].dim() + idx[order[t]];
        e[row * n + col] = Scalar::one(field);
    }
    return LinMap(factors, std::move(target), field, std::move(e));
}

Vector apply(const LinMap& f, std::span<const Scalar> v)
{
    if (v.size() != f.cols())
        throw ShapeError("vector of length " + std::to_string(v.size()) + " for a map with " +
                         std::to_string(f.cols()) + " columns");
    Vector out = zero_vector(f.field(), f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!f.at(i, j).is_zero() && !v[j].is_zero()) out[i].add_product(f.at(i, j), v[j]);
    return out;
}

} // namespace icp

#include "icp/crossed_product.hpp"

namespace icp {

namespace {

LinMap conform(const LinMap& f, Factors domain, Factors codomain, const char* what)
{
    if (f.cols() != total_dim(domain) || f.rows() != total_dim(codomain))
        throw ShapeError(std::string(what) + " has the wrong shape");
    return f.retyped(std::move(domain), std::move(codomain));
}

/// Appends the product space and unit vector for the algebra built on x⊗y.
Algebra finish_product(const Space& x, const Space& y, const LinMap& mul4, const Vector& unit,
                       const CheckOptions& options, const char* what)
{
    Space xy = tensor_space(x, y);
    LinMap mul = mul4.retyped({xy, xy}, {xy});
    try {
        return make_algebra(std::move(xy), std::move(mul), unit, options);
    } catch (const AxiomError& e) {
        throw InternalError(std::string(what) + " passed its axioms but the product is not an algebra:\n" +
                            e.report().to_text());
    }
}

Vector tensor_vectors(const Vector& a, const Vector& b)
{
    Vector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

void require_marked(const Space& s, const char* name)
{
    if (!s.marked()) throw ShapeError(std::string(name) + " needs a marked basis element");
}

} // namespace

BrzData make_brz_data(Algebra A, Space V, const LinMap& R, const LinMap& sigma)
{
    require_marked(V, "V");
    const Space& a = A.space();
    LinMap r = conform(R, {V, a}, {a, V}, "R");
    LinMap s = conform(sigma, {V, V}, {a, V}, "sigma");
    return BrzData{std::move(A), std::move(V), std::move(r), std::move(s)};
}

MirrorData make_mirror_data(Space W, Algebra B, const LinMap& P, const LinMap& nu)
{
    require_marked(W, "W");
    const Space& b = B.space();
    LinMap p = conform(P, {b, W}, {W, b}, "P");
    LinMap n = conform(nu, {W, W}, {W, b}, "nu");
    return MirrorData{std::move(W), std::move(B), std::move(p), std::move(n)};
}

LinMap marked_element(const Space& x, Field field)
{
    if (!x.marked()) throw ShapeError("space has no marked element");
    return LinMap::element({x}, basis_vector(field, x.dim(), *x.marked()));
}

AxiomReport check_twisting_map(const Algebra& A, const Algebra& B, const LinMap& raw_R, const CheckOptions& options)
{
    const LinMap R = conform(raw_R, {B.space(), A.space()}, {A.space(), B.space()}, "R");
    const LinMap ia = A.id(), ib = B.id(), ua = A.unit_map(), ub = B.unit_map();
    const std::size_t cap = options.max_witnesses;
    std::vector<std::function<AxiomItem()>> tasks{
        [&] { return compare_maps("unit-A", compose(R, tensor(ub, ia)), tensor(ia, ub), cap); },
        [&] { return compare_maps("unit-B", compose(R, tensor(ib, ua)), tensor(ua, ib), cap); },
        [&] {
            return compare_maps("multiplicative-A", compose(R, tensor(ib, A.mul())),
                                compose_all({tensor(A.mul(), ib), tensor(ia, R), tensor(R, ia)}), cap);
        },
        [&] {
            return compare_maps("multiplicative-B", compose(R, tensor(B.mul(), ia)),
                                compose_all({tensor(ia, B.mul()), tensor(R, ib), tensor(ib, R)}), cap);
        },
    };
    return run_checks("twisting map", tasks, options.jobs);
}

AxiomReport check_brz(const BrzData& d, const CheckOptions& options)
{
    const Field f = d.A.field();
    const LinMap& R = d.R;
    const LinMap& s = d.sigma;
    const LinMap& mu = d.A.mul();
    const LinMap ia = d.A.id(), iv = identity(d.V, f), ua = d.A.unit_map(), uv = marked_element(d.V, f);
    const LinMap mu_v = tensor(mu, iv);
    const std::size_t cap = options.max_witnesses;

    std::vector<std::function<AxiomItem()>> tasks{
        [&] {
            AxiomItem item{"R-unit", 0, {}};
            compare_into(item, "R(1_V⊗a) = a⊗1_V", compose(R, tensor(uv, ia)), tensor(ia, uv), cap);
            compare_into(item, "R(v⊗1_A) = 1_A⊗v", compose(R, tensor(iv, ua)), tensor(ua, iv), cap);
            return item;
        },
        [&] {
            AxiomItem item{"sigma-unit", 0, {}};
            compare_into(item, "σ(1_V⊗v) = 1_A⊗v", compose(s, tensor(uv, iv)), tensor(ua, iv), cap);
            compare_into(item, "σ(v⊗1_V) = 1_A⊗v", compose(s, tensor(iv, uv)), tensor(ua, iv), cap);
            return item;
        },
        [&] {
            return compare_maps("R-multiplicative", compose(R, tensor(iv, mu)),
                                compose_all({mu_v, tensor(ia, R), tensor(R, ia)}), cap);
        },
        [&] {
            return compare_maps("sigma-cocycle",
                                compose_all({mu_v, tensor(ia, s), tensor(R, iv), tensor(iv, s)}),
                                compose_all({mu_v, tensor(ia, s), tensor(s, iv)}), cap);
        },
        [&] {
            return compare_maps("sigma-R-compatible",
                                compose_all({mu_v, tensor(ia, s), tensor(R, iv), tensor(iv, R)}),
                                compose_all({mu_v, tensor(ia, R), tensor(s, ia)}), cap);
        },
    };
    return run_checks("crossed product", tasks, options.jobs);
}

AxiomReport check_mirror(const MirrorData& d, const CheckOptions& options)
{
    const Field f = d.B.field();
    const LinMap& P = d.P;
    const LinMap& n = d.nu;
    const LinMap& mu = d.B.mul();
    const LinMap ib = d.B.id(), iw = identity(d.W, f), ub = d.B.unit_map(), uw = marked_element(d.W, f);
    const LinMap w_mu = tensor(iw, mu);
    const std::size_t cap = options.max_witnesses;

    std::vector<std::function<AxiomItem()>> tasks{
        [&] {
            AxiomItem item{"P-unit", 0, {}};
            compare_into(item, "P(b⊗1_W) = 1_W⊗b", compose(P, tensor(ib, uw)), tensor(uw, ib), cap);
            compare_into(item, "P(1_B⊗w) = w⊗1_B", compose(P, tensor(ub, iw)), tensor(iw, ub), cap);
            return item;
        },
        [&] {
            AxiomItem item{"nu-unit", 0, {}};
            compare_into(item, "ν(w⊗1_W) = w⊗1_B", compose(n, tensor(iw, uw)), tensor(iw, ub), cap);
            compare_into(item, "ν(1_W⊗w) = w⊗1_B", compose(n, tensor(uw, iw)), tensor(iw, ub), cap);
            return item;
        },
        [&] {
            return compare_maps("P-multiplicative", compose(P, tensor(mu, iw)),
                                compose_all({w_mu, tensor(P, ib), tensor(ib, P)}), cap);
        },
        [&] {
            return compare_maps("nu-cocycle",
                                compose_all({w_mu, tensor(n, ib), tensor(iw, P), tensor(n, iw)}),
                                compose_all({w_mu, tensor(n, ib), tensor(iw, n)}), cap);
        },
        [&] {
            return compare_maps("nu-P-compatible",
                                compose_all({w_mu, tensor(n, ib), tensor(iw, P), tensor(P, iw)}),
                                compose_all({w_mu, tensor(P, ib), tensor(ib, n)}), cap);
        },
    };
    return run_checks("mirror crossed product", tasks, options.jobs);
}

LinMap brz_multiplication(const BrzData& d)
{
    const Field f = d.A.field();
    const LinMap ia = d.A.id(), iv = identity(d.V, f);
    return compose_all({tensor(mu2(d.A), iv), tensor_all({ia, ia, d.sigma}), tensor_all({ia, d.R, iv})});
}

LinMap mirror_multiplication(const MirrorData& d)
{
    const Field f = d.B.field();
    const LinMap ib = d.B.id(), iw = identity(d.W, f);
    return compose_all({tensor(iw, mu2(d.B)), tensor_all({d.nu, ib, ib}), tensor_all({iw, d.P, ib})});
}

Algebra build_brz(const BrzData& d, const CheckOptions& options)
{
    AxiomReport report = check_brz(d, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    const Vector unit = tensor_vectors(d.A.unit(), basis_vector(d.A.field(), d.V.dim(), *d.V.marked()));
    return finish_product(d.A.space(), d.V, brz_multiplication(d), unit, options, "crossed product data");
}

Algebra build_mirror(const MirrorData& d, const CheckOptions& options)
{
    AxiomReport report = check_mirror(d, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    const Vector unit = tensor_vectors(basis_vector(d.B.field(), d.W.dim(), *d.W.marked()), d.B.unit());
    return finish_product(d.W, d.B.space(), mirror_multiplication(d), unit, options, "mirror crossed product data");
}

Algebra build_twisted(const Algebra& A, const Algebra& B, const LinMap& raw_R, const CheckOptions& options)
{
    AxiomReport report = check_twisting_map(A, B, raw_R, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    const LinMap R = raw_R.retyped({B.space(), A.space()}, {A.space(), B.space()});
    const LinMap mul = compose(tensor(A.mul(), B.mul()), tensor_all({A.id(), R, B.id()}));
    return finish_product(A.space(), B.space(), mul, tensor_vectors(A.unit(), B.unit()), options, "twisting map");
}

BrzData brz_from_twisted(const Algebra& A, const Algebra& B, const LinMap& R, const CheckOptions& options)
{
    AxiomReport report = check_twisting_map(A, B, R, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    if (!B.space().marked()) throw ShapeError("the unit of B must be a basis vector to serve as 1_V");
    const LinMap sigma = tensor(A.unit_map(), B.mul());
    return make_brz_data(A, B.space(), R, sigma);
}

MirrorData mirror_from_twisted(const Algebra& A, const Algebra& B, const LinMap& R, const CheckOptions& options)
{
    AxiomReport report = check_twisting_map(A, B, R, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    if (!A.space().marked()) throw ShapeError("the unit of A must be a basis vector to serve as 1_W");
    const LinMap nu = tensor(A.mul(), B.unit_map());
    return make_mirror_data(A.space(), B, R, nu);
}

} // namespace icp

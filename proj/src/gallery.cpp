#include "icp/gallery.hpp"

#include <numeric>

namespace icp {

namespace {

Factors power(const Space& s, std::size_t n)
{
    return Factors(n, s);
}

/// Multiplication of H^{⊗n}: H^{⊗n}⊗H^{⊗n} -> H^{⊗n}.
LinMap power_mul(const Algebra& H, std::size_t n)
{
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
        order.push_back(i);
        order.push_back(n + i);
    }
    LinMap acc = H.mul();
    for (std::size_t i = 1; i < n; ++i) acc = tensor(acc, H.mul());
    return compose(acc, permutation(power(H.space(), 2 * n), order, H.field()));
}

LinMap conform(const LinMap& f, Factors domain, Factors codomain, const char* what)
{
    if (f.cols() != total_dim(domain) || f.rows() != total_dim(codomain))
        throw ShapeError(std::string(what) + " has the wrong shape");
    return f.retyped(std::move(domain), std::move(codomain));
}

Vector scaled_sum(const Vector& a, const Vector& b, const Scalar& s)
{
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
    return out;
}

void require_odd_characteristic(Field field, const std::string& preset)
{
    if (field.characteristic() == 2)
        throw std::invalid_argument("preset '" + preset + "' needs characteristic different from 2");
}

/// R: Y⊗X -> X⊗Y, y⊗x ↦ (-1)^{|x||y|} x⊗y for homogeneous bases.
LinMap koszul_twist(const Space& x, const std::vector<int>& x_odd, const Space& y, const std::vector<int>& y_odd,
                    Field field)
{
    LinMap r = flip(y, x, field);
    for (std::size_t i = 0; i < y.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j)
            if (x_odd[j] && y_odd[i]) {
                const std::size_t col = i * x.dim() + j, row = j * y.dim() + i;
                r = r.with_entry(row, col, Scalar(field, -1L));
            }
    return r;
}

/// Group acting on a group algebra by permuting its basis: perms[h][a] = h·a.
LinMap permutation_action(const Algebra& H, const Algebra& A, const std::vector<std::vector<std::size_t>>& perms)
{
    std::vector<Vector> cols;
    for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t a = 0; a < A.dim(); ++a) cols.push_back(basis_vector(A.field(), A.dim(), perms[h][a]));
    return LinMap::from_columns({H.space(), A.space()}, {A.space()}, A.field(), cols);
}

/// h⊗a ↦ h₁·a⊗h₂ for a group algebra acting on A (Δ(h) = h⊗h).
LinMap group_smash_twist(const Algebra& H, const Algebra& A, const LinMap& action)
{
    const Field f = H.field();
    LinMap comul = LinMap::zero({H.space()}, {H.space(), H.space()}, f);
    for (std::size_t h = 0; h < H.dim(); ++h) comul = comul.with_entry(h * H.dim() + h, h, Scalar::one(f));
    return compose_all({tensor(action, H.id()), permutation({H.space(), H.space(), A.space()}, {0, 2, 1}, f),
                        tensor(comul, A.id())});
}

Algebra klein_four(Field field)
{
    // basis 1, s, t, st
    return group_algebra({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0, field, {"1", "s", "t", "st"});
}

Algebra z2(Field field, const std::string& gen)
{
    return group_algebra({{0, 1}, {1, 0}}, 0, field, {"1", gen});
}

/// H = k[ℤ₂] acting on A = k[x]/(x²) by g·x = -x, as a map H⊗A -> A or A⊗H -> A.
LinMap sign_action(const Algebra& H, const Algebra& A, Side side)
{
    const Field f = H.field();
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const std::size_t h = side == Side::left ? i : j, a = side == Side::left ? j : i;
            Vector v = basis_vector(f, 2, a);
            if (h == 1 && a == 1) v[1] = Scalar(f, -1L);
            cols.push_back(v);
        }
    Factors dom = side == Side::left ? Factors{H.space(), A.space()} : Factors{A.space(), H.space()};
    return LinMap::from_columns(dom, {A.space()}, f, cols);
}

} // namespace

Vector trivial_associator(const Algebra& H)
{
    const Vector& u = H.unit();
    Vector out;
    for (const auto& a : u)
        for (const auto& b : u)
            for (const auto& c : u) out.push_back(a * b * c);
    return out;
}

Vector tensor_power_multiply(const Algebra& H, std::size_t n, const Vector& x, const Vector& y)
{
    const LinMap m = power_mul(H, n);
    Vector xy;
    xy.reserve(x.size() * y.size());
    for (const auto& a : x)
        for (const auto& b : y) xy.push_back(a * b);
    return icp::apply(m, xy);
}

namespace {

/// Items shared by bialgebras and quasi-bialgebras.
std::vector<std::function<AxiomItem()>> algebra_map_tasks(const Algebra& H, const LinMap& D, const LinMap& e,
                                                          std::size_t cap)
{
    const Field f = H.field();
    return {
        [&H, D, cap] { return compare_maps("comul-multiplicative", compose(D, H.mul()), compose(power_mul(H, 2), tensor(D, D)), cap); },
        [&H, D, cap] { return compare_maps("comul-unital", compose(D, H.unit_map()), tensor(H.unit_map(), H.unit_map()), cap); },
        [&H, e, cap] { return compare_maps("counit-multiplicative", compose(e, H.mul()), tensor(e, e), cap); },
        [&H, e, f, cap] { return compare_maps("counit-unital", compose(e, H.unit_map()), LinMap::identity({}, f), cap); },
        [&H, D, e, cap] {
            AxiomItem item{"counit", 0, {}};
            compare_into(item, "(ε⊗id)Δ = id", compose(tensor(e, H.id()), D), H.id(), cap);
            compare_into(item, "(id⊗ε)Δ = id", compose(tensor(H.id(), e), D), H.id(), cap);
            return item;
        },
    };
}

} // namespace

AxiomReport check_quasi_bialgebra(const Algebra& H, const LinMap& raw_comul, const LinMap& raw_counit,
                                  const Vector& phi, const Vector& phi_inv, const CheckOptions& options)
{
    const Space& h = H.space();
    const LinMap D = conform(raw_comul, {h}, {h, h}, "comultiplication");
    const LinMap e = conform(raw_counit, {h}, {}, "counit");
    if (phi.size() != h.dim() * h.dim() * h.dim() || phi_inv.size() != phi.size())
        throw ShapeError("associator must live in H⊗H⊗H");
    const std::size_t cap = options.max_witnesses;
    const LinMap id = H.id(), u = H.unit_map();
    const LinMap Phi = LinMap::element(power(h, 3), phi);
    const LinMap PhiInv = LinMap::element(power(h, 3), phi_inv);
    const LinMap m3 = power_mul(H, 3), m4 = power_mul(H, 4);

    auto tasks = algebra_map_tasks(H, D, e, cap);
    tasks.push_back([&] {
        const LinMap right = compose(tensor(id, D), D), left = compose(tensor(D, id), D);
        return compare_maps("quasi-coassociative", compose(m3, tensor(right, Phi)), compose(m3, tensor(Phi, left)), cap);
    });
    tasks.push_back([&] {
        AxiomItem item{"associator-inverse", 0, {}};
        const LinMap one = tensor_all({u, u, u});
        compare_into(item, "ΦΦ⁻¹ = 1", compose(m3, tensor(Phi, PhiInv)), one, cap);
        compare_into(item, "Φ⁻¹Φ = 1", compose(m3, tensor(PhiInv, Phi)), one, cap);
        return item;
    });
    tasks.push_back([&] {
        const LinMap a = tensor(u, Phi), b = compose(tensor_all({id, D, id}), Phi), c = tensor(Phi, u);
        const LinMap d = compose(tensor_all({id, id, D}), Phi), g = compose(tensor_all({D, id, id}), Phi);
        const LinMap lhs = compose(m4, tensor(compose(m4, tensor(a, b)), c));
        return compare_maps("pentagon", lhs, compose(m4, tensor(d, g)), cap);
    });
    tasks.push_back([&] {
        return compare_maps("associator-counit", compose(tensor_all({id, e, id}), Phi), tensor(u, u), cap);
    });
    return run_checks("quasi-bialgebra", tasks, options.jobs);
}

AxiomReport check_bialgebra(const Algebra& H, const LinMap& raw_comul, const LinMap& raw_counit,
                            const CheckOptions& options)
{
    const Space& h = H.space();
    const LinMap D = conform(raw_comul, {h}, {h, h}, "comultiplication");
    const LinMap e = conform(raw_counit, {h}, {}, "counit");
    auto tasks = algebra_map_tasks(H, D, e, options.max_witnesses);
    tasks.push_back([&] {
        return compare_maps("coassociative", compose(tensor(D, H.id()), D), compose(tensor(H.id(), D), D),
                            options.max_witnesses);
    });
    return run_checks("bialgebra", tasks, options.jobs);
}

QuasiBialgebra make_quasi_bialgebra(Algebra H, const LinMap& comul, const LinMap& counit, Vector phi, Vector phi_inv,
                                    const CheckOptions& options)
{
    AxiomReport report = check_quasi_bialgebra(H, comul, counit, phi, phi_inv, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    const Space& h = H.space();
    LinMap D = comul.retyped({h}, {h, h});
    LinMap e = counit.retyped({h}, {});
    return QuasiBialgebra{std::move(H), std::move(D), std::move(e), std::move(phi), std::move(phi_inv)};
}

Vector Carrier::unit() const
{
    return basis_vector(mul.field(), space.dim(), *space.marked());
}

Carrier make_carrier(Space space, const LinMap& mul)
{
    if (!space.marked()) throw ShapeError("a carrier needs its unit as the marked basis element");
    LinMap m = conform(mul, {space, space}, {space}, "carrier multiplication");
    return Carrier{std::move(space), std::move(m)};
}

Carrier carrier_of(const Algebra& a)
{
    return make_carrier(a.space(), a.mul());
}

AxiomReport check_module_algebra(const ModuleAlgebraAction& act, const CheckOptions& options, bool inverse_associator)
{
    const Algebra& H = act.H.H;
    const Field f = H.field();
    const Space& a = act.A.space;
    const Space& h = H.space();
    const bool left = act.side == Side::left;
    const LinMap alpha = left ? conform(act.action, {h, a}, {a}, "action") : conform(act.action, {a, h}, {a}, "action");
    const LinMap& m = act.A.mul;
    const LinMap ia = identity(a, f), ih = H.id(), ua = LinMap::element({a}, act.A.unit()), uh = H.unit_map();
    const LinMap& D = act.H.comul;
    const LinMap& e = act.H.counit;
    const bool use_phi = left != inverse_associator;
    const LinMap assoc = LinMap::element(power(h, 3), use_phi ? act.H.phi : act.H.phi_inv);
    const std::size_t cap = options.max_witnesses;

    std::vector<std::function<AxiomItem()>> tasks{
        [&] {
            AxiomItem item{"carrier-unit", 0, {}};
            compare_into(item, "1a = a", compose(m, tensor(ua, ia)), ia, cap);
            compare_into(item, "a1 = a", compose(m, tensor(ia, ua)), ia, cap);
            return item;
        },
        [&] {
            if (left) return compare_maps("module-unit", compose(alpha, tensor(uh, ia)), ia, cap);
            return compare_maps("module-unit", compose(alpha, tensor(ia, uh)), ia, cap);
        },
        [&] {
            if (left)
                return compare_maps("module-associative", compose(alpha, tensor(H.mul(), ia)),
                                    compose(alpha, tensor(ih, alpha)), cap);
            return compare_maps("module-associative", compose(alpha, tensor(ia, H.mul())),
                                compose(alpha, tensor(alpha, ih)), cap);
        },
        [&] {
            if (left) return compare_maps("action-unital", compose(alpha, tensor(ih, ua)), tensor(e, ua), cap);
            return compare_maps("action-unital", compose(alpha, tensor(ua, ih)), tensor(ua, e), cap);
        },
        [&] {
            if (left) {
                const LinMap rhs = compose_all({m, tensor(alpha, alpha), permutation({h, h, a, a}, {0, 2, 1, 3}, f),
                                                tensor_all({D, ia, ia})});
                return compare_maps("action-multiplicative", compose(alpha, tensor(ih, m)), rhs, cap);
            }
            const LinMap rhs = compose_all({m, tensor(alpha, alpha), permutation({a, a, h, h}, {0, 2, 1, 3}, f),
                                            tensor_all({ia, ia, D})});
            return compare_maps("action-multiplicative", compose(alpha, tensor(m, ih)), rhs, cap);
        },
        [&] {
            const LinMap lhs = compose(m, tensor(m, ia));
            const LinMap spread = left ? compose(tensor_all({alpha, alpha, alpha}),
                                                 permutation({h, h, h, a, a, a}, {0, 3, 1, 4, 2, 5}, f))
                                       : compose(tensor_all({alpha, alpha, alpha}),
                                                 permutation({h, h, h, a, a, a}, {3, 0, 4, 1, 5, 2}, f));
            const LinMap rhs = compose_all({m, tensor(ia, m), spread, tensor_all({assoc, ia, ia, ia})});
            return compare_maps("quasi-associative", lhs, rhs, cap);
        },
    };
    return run_checks(left ? "left module algebra" : "right module algebra", tasks, options.jobs);
}

ModuleAlgebraAction make_module_algebra(Side side, QuasiBialgebra H, Carrier A, const LinMap& action,
                                        const CheckOptions& options)
{
    const Space& h = H.H.space();
    LinMap typed = side == Side::left ? conform(action, {h, A.space}, {A.space}, "action")
                                      : conform(action, {A.space, h}, {A.space}, "action");
    ModuleAlgebraAction act{side, std::move(H), std::move(A), std::move(typed)};
    AxiomReport report = check_module_algebra(act, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    return act;
}

MirrorData left_smash(const ModuleAlgebraAction& act, const CheckOptions& options)
{
    if (act.side != Side::left) throw std::invalid_argument("left_smash needs a left module algebra");
    const Algebra& H = act.H.H;
    const Field f = H.field();
    const Space& a = act.A.space;
    const Space& h = H.space();
    const LinMap ia = identity(a, f), ih = H.id();
    const LinMap P = compose_all({tensor(act.action, ih), permutation({h, h, a}, {0, 2, 1}, f), tensor(act.H.comul, ia)});
    const LinMap nu = compose_all({tensor(act.A.mul, ih), tensor_all({act.action, act.action, ih}),
                                   permutation({h, h, h, a, a}, {0, 3, 1, 4, 2}, f),
                                   tensor_all({LinMap::element(power(h, 3), act.H.phi_inv), ia, ia})});
    MirrorData data = make_mirror_data(a, H, P, nu);
    AxiomReport report = check_mirror(data, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    return data;
}

BrzData right_smash(const ModuleAlgebraAction& act, const CheckOptions& options)
{
    if (act.side != Side::right) throw std::invalid_argument("right_smash needs a right module algebra");
    const Algebra& H = act.H.H;
    const Field f = H.field();
    const Space& b = act.A.space;
    const Space& h = H.space();
    const LinMap ib = identity(b, f), ih = H.id();
    const LinMap R = compose_all({tensor(ih, act.action), permutation({b, h, h}, {1, 0, 2}, f), tensor(ib, act.H.comul)});
    const LinMap sigma = compose_all({tensor(ih, act.A.mul), tensor_all({ih, act.action, act.action}),
                                      permutation({h, h, h, b, b}, {0, 3, 1, 4, 2}, f),
                                      tensor_all({LinMap::element(power(h, 3), act.H.phi_inv), ib, ib})});
    BrzData data = make_brz_data(H, b, R, sigma);
    AxiomReport report = check_brz(data, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    return data;
}

QLink two_sided_q(const ModuleAlgebraAction& left, const ModuleAlgebraAction& right, const CheckOptions& options)
{
    const QuasiBialgebra& qa = left.H;
    const QuasiBialgebra& qb = right.H;
    if (!(qa.H == qb.H) || !(qa.comul == qb.comul) || !(qa.counit == qb.counit) || !(qa.phi == qb.phi) ||
        !(qa.phi_inv == qb.phi_inv))
        throw ShapeError("the two module algebras must be over the same quasi-bialgebra");
    const Field f = qa.H.field();
    const Space& a = left.A.space;
    const Space& b = right.A.space;
    const Space& h = qa.H.space();
    const LinMap Q = compose_all({tensor_all({left.action, qa.H.id(), right.action}),
                                  permutation({h, h, h, b, a}, {0, 4, 1, 3, 2}, f),
                                  tensor_all({LinMap::element(power(h, 3), qa.phi_inv), identity(b, f), identity(a, f)})});
    QLink link = make_qlink(left_smash(left, options), right_smash(right, options), Q);
    AxiomReport report = check_q(link, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    return link;
}

Algebra dual_numbers(Field field, const std::string& var)
{
    Space s({"1", var});
    std::vector<Scalar> e(8, Scalar::zero(field));
    // columns (i,j) flat i*2+j; rows k
    e[0 * 4 + 0] = Scalar::one(field); // 1*1 = 1
    e[1 * 4 + 1] = Scalar::one(field); // 1*x = x
    e[1 * 4 + 2] = Scalar::one(field); // x*1 = x
    return make_algebra(s, LinMap({s, s}, {s}, field, std::move(e)), basis_vector(field, 2, 0));
}

QuasiBialgebra z2_quasi_bialgebra(Field field, bool nontrivial_associator)
{
    Algebra H = z2(field, "g");
    const Space& h = H.space();
    LinMap comul = LinMap::zero({h}, {h, h}, field).with_entry(0, 0, Scalar::one(field)).with_entry(3, 1, Scalar::one(field));
    LinMap counit({h}, {}, field, {Scalar::one(field), Scalar::one(field)});
    Vector phi = trivial_associator(H);
    if (nontrivial_associator) {
        require_odd_characteristic(field, "quasi-smash-z2");
        const Scalar half = Scalar(field, 1L) / Scalar(field, 2L);
        const Vector p{half, -half}; // (1-g)/2
        Vector ppp;
        for (const auto& x : p)
            for (const auto& y : p)
                for (const auto& z : p) ppp.push_back(x * y * z);
        phi = scaled_sum(phi, ppp, Scalar(field, -2L));
    }
    // Φ is an involution in both cases.
    Vector phi_inv = phi;
    return make_quasi_bialgebra(std::move(H), comul, counit, std::move(phi), std::move(phi_inv));
}

std::vector<std::string> braided_triple_presets()
{
    return {"trivial", "flips", "sign-braid", "commuting-actions", "mixed-braid", "broken"};
}

TwistedTriple braided_triple(const std::string& preset, Field field)
{
    if (preset == "trivial") {
        Algebra k = ground_algebra(field);
        LinMap one = flip(k.space(), k.space(), field);
        return TwistedTriple{preset, k, k, k, one, one, one};
    }
    if (preset == "flips") {
        Algebra A = z2(field, "a"), B = z2(field, "b"), C = z2(field, "c");
        LinMap R1 = flip(B.space(), A.space(), field), R2 = flip(C.space(), B.space(), field),
               R3 = flip(C.space(), A.space(), field);
        return TwistedTriple{preset, A, B, C, R1, R2, R3};
    }
    if (preset == "sign-braid") {
        require_odd_characteristic(field, preset);
        Algebra A = z2(field, "a"), B = dual_numbers(field, "x"), C = z2(field, "c");
        const std::vector<int> odd{0, 1};
        LinMap R1 = koszul_twist(A.space(), odd, B.space(), odd, field);
        LinMap R2 = koszul_twist(B.space(), odd, C.space(), odd, field);
        LinMap R3 = koszul_twist(A.space(), odd, C.space(), odd, field);
        return TwistedTriple{preset, A, B, C, R1, R2, R3};
    }
    if (preset == "commuting-actions" || preset == "broken" || preset == "mixed-braid") {
        // k[ℤ₂] generators act on the Klein four-group algebra by automorphisms.
        Algebra A = klein_four(field), B = z2(field, "g");
        const std::vector<std::vector<std::size_t>> swap{{0, 1, 2, 3}, {0, 2, 1, 3}};       // s <-> t
        const std::vector<std::vector<std::size_t>> transvect{{0, 1, 2, 3}, {0, 1, 3, 2}};  // t <-> st
        LinMap R1 = group_smash_twist(B, A, permutation_action(B, A, swap));
        if (preset == "mixed-braid") {
            Algebra C = dual_numbers(field, "y");
            return TwistedTriple{preset, A, B, C, R1, flip(C.space(), B.space(), field), flip(C.space(), A.space(), field)};
        }
        Algebra C = z2(field, "h");
        LinMap R3 = group_smash_twist(C, A, permutation_action(C, A, preset == "broken" ? transvect : swap));
        return TwistedTriple{preset, A, B, C, R1, flip(C.space(), B.space(), field), R3};
    }
    throw std::invalid_argument("unknown braided triple preset '" + preset + "'");
}

std::vector<std::string> smash_presets()
{
    return {"trivial-action", "smash-z2", "quasi-smash-z2"};
}

SmashData smash_preset(const std::string& preset, Field field)
{
    if (preset == "trivial-action") {
        QuasiBialgebra H = z2_quasi_bialgebra(field, false);
        Algebra A = dual_numbers(field, "x"), B = dual_numbers(field, "y");
        LinMap left = tensor(H.counit, A.id());
        LinMap right = tensor(B.id(), H.counit);
        return SmashData{preset, make_module_algebra(Side::left, H, carrier_of(A), left),
                         make_module_algebra(Side::right, H, carrier_of(B), right)};
    }
    if (preset == "smash-z2" || preset == "quasi-smash-z2") {
        require_odd_characteristic(field, preset);
        QuasiBialgebra H = z2_quasi_bialgebra(field, preset == "quasi-smash-z2");
        Algebra A = dual_numbers(field, "x"), B = dual_numbers(field, "y");
        return SmashData{preset, make_module_algebra(Side::left, H, carrier_of(A), sign_action(H.H, A, Side::left)),
                         make_module_algebra(Side::right, H, carrier_of(B), sign_action(H.H, B, Side::right))};
    }
    throw std::invalid_argument("unknown smash preset '" + preset + "'");
}

} // namespace icp

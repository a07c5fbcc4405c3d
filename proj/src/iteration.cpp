#include "icp/iteration.hpp"

#include <future>

namespace icp {

namespace {

struct Units {
    LinMap w, d, v;
};

Units units_of(const MirrorData& mirror, const BrzData& brz)
{
    const Field f = brz.A.field();
    return {marked_element(mirror.W, f), brz.A.unit_map(), marked_element(brz.V, f)};
}

/// id_W⊗μ_D⊗id_V, the contraction that closes every Q-condition.
LinMap middle_mul(const QLink& l)
{
    const Field f = l.D().field();
    return tensor_all({identity(l.W(), f), l.D().mul(), identity(l.V(), f)});
}

Embeddings embeddings_into(const Algebra& M, const MirrorData& mirror, const BrzData& brz)
{
    const Field f = M.field();
    const Space& W = mirror.W;
    const Space& D = brz.A.space();
    const Space& V = brz.V;
    if (M.dim() != W.dim() * D.dim() * V.dim())
        throw ShapeError("algebra of dimension " + std::to_string(M.dim()) + " cannot live on W⊗D⊗V");
    const Units u = units_of(mirror, brz);
    const LinMap iw = identity(W, f), id = brz.A.id(), iv = identity(V, f);
    const Factors m{M.space()};
    const Space wd = tensor_space(W, D), dv = tensor_space(D, V);
    return Embeddings{
        tensor_all({iw, u.d, u.v}).retyped({W}, m),
        tensor_all({u.w, id, u.v}).retyped({D}, m),
        tensor_all({u.w, u.d, iv}).retyped({V}, m),
        tensor_all({iw, id, u.v}).retyped({wd}, m),
        tensor_all({u.w, id, iv}).retyped({dv}, m),
    };
}

} // namespace

QLink make_qlink(MirrorData mirror, BrzData brz, const LinMap& Q)
{
    if (!(mirror.B == brz.A))
        throw ShapeError("the mirror and crossed product data must share the middle algebra D");
    const Space& W = mirror.W;
    const Space& D = brz.A.space();
    const Space& V = brz.V;
    if (Q.cols() != V.dim() * W.dim() || Q.rows() != W.dim() * D.dim() * V.dim())
        throw ShapeError("Q must map V⊗W to W⊗D⊗V");
    LinMap q = Q.retyped({V, W}, {W, D, V});
    return QLink{std::move(mirror), std::move(brz), std::move(q)};
}

AxiomReport check_q(const QLink& l, const CheckOptions& options)
{
    const Field f = l.D().field();
    const LinMap& Q = l.Q;
    const LinMap& P = l.mirror.P;
    const LinMap& nu = l.mirror.nu;
    const LinMap& R = l.brz.R;
    const LinMap& sigma = l.brz.sigma;
    const LinMap& muD = l.D().mul();
    const LinMap iw = identity(l.W(), f), id = l.D().id(), iv = identity(l.V(), f);
    const Units u = units_of(l.mirror, l.brz);
    const LinMap close = middle_mul(l);
    const std::size_t cap = options.max_witnesses;

    std::vector<std::function<AxiomItem()>> tasks{
        [&] {
            AxiomItem item{"Q-unit", 0, {}};
            compare_into(item, "Q(1_V⊗w) = w⊗1_D⊗1_V", compose(Q, tensor(u.v, iw)), tensor_all({iw, u.d, u.v}), cap);
            compare_into(item, "Q(v⊗1_W) = 1_W⊗1_D⊗v", compose(Q, tensor(iv, u.w)), tensor_all({u.w, u.d, iv}), cap);
            return item;
        },
        [&] {
            // on V⊗D⊗W
            return compare_maps("Q-P-R",
                                compose_all({close, tensor_all({iw, id, R}), tensor(Q, id), tensor(iv, P)}),
                                compose_all({close, tensor_all({P, id, iv}), tensor(id, Q), tensor(R, iw)}), cap);
        },
        [&] {
            // on V⊗W⊗W
            return compare_maps("Q-nu",
                                compose_all({close, tensor_all({iw, id, R}), tensor(Q, id), tensor(iv, nu)}),
                                compose_all({close, tensor_all({nu, muD, iv}), tensor_all({iw, P, id, iv}),
                                             tensor_all({iw, id, Q}), tensor(Q, iw)}),
                                cap);
        },
        [&] {
            // on V⊗V⊗W
            return compare_maps("Q-sigma",
                                compose_all({close, tensor_all({P, id, iv}), tensor(id, Q), tensor(sigma, iw)}),
                                compose_all({close, tensor_all({iw, muD, sigma}), tensor_all({iw, id, R, iv}),
                                             tensor_all({Q, id, iv}), tensor(iv, Q)}),
                                cap);
        },
    };
    return run_checks("Q link", tasks, options.jobs);
}

BarMaps build_bar_maps(const QLink& l, const CheckOptions& options)
{
    AxiomReport report = check_q(l, options);
    if (!report.passed()) throw AxiomError(std::move(report));

    const Field f = l.D().field();
    const Space& W = l.W();
    const Space& D = l.D().space();
    const Space& V = l.V();
    const Space wd = tensor_space(W, D), dv = tensor_space(D, V);
    const LinMap iw = identity(W, f), id = l.D().id(), iv = identity(V, f);
    const Units u = units_of(l.mirror, l.brz);
    const LinMap close = middle_mul(l);

    LinMap sigma_bar = tensor(u.w, l.brz.sigma).retyped({V, V}, {wd, V});
    LinMap R_bar = compose_all({close, tensor_all({iw, id, l.brz.R}), tensor(l.Q, id)}).retyped({V, wd}, {wd, V});
    LinMap nu_bar = tensor(l.mirror.nu, u.v).retyped({W, W}, {W, dv});
    LinMap P_bar = compose_all({close, tensor_all({l.mirror.P, id, iv}), tensor(id, l.Q)}).retyped({dv, W}, {W, dv});
    return BarMaps{std::move(sigma_bar), std::move(R_bar), std::move(nu_bar), std::move(P_bar)};
}

Bracketings build_bracketings(const QLink& l, const CheckOptions& options)
{
    // Invalid halves are bad input; only the outer builds are guaranteed.
    const Algebra wd = build_mirror(l.mirror, options);
    const Algebra dv = build_brz(l.brz, options);
    const BarMaps bars = build_bar_maps(l, options);

    auto outer_brz = [&] { return build_brz(make_brz_data(wd, l.V(), bars.R_bar, bars.sigma_bar), options); };
    auto outer_mirror = [&] { return build_mirror(make_mirror_data(l.W(), dv, bars.P_bar, bars.nu_bar), options); };
    try {
        if (options.jobs > 1) {
            auto left = std::async(std::launch::async, outer_brz);
            Algebra right = outer_mirror();
            return Bracketings{left.get(), std::move(right)};
        }
        Algebra left = outer_brz();
        return Bracketings{std::move(left), outer_mirror()};
    } catch (const AxiomError& e) {
        throw InternalError("Q passed its conditions but a bracketing failed its axioms:\n" + e.report().to_text());
    }
}

Algebra build_iterated(const QLink& l, const CheckOptions& options)
{
    Bracketings b = build_bracketings(l, options);
    if (!(b.outer_brz.mul().entries() == b.outer_mirror.mul().entries()) ||
        !(b.outer_brz.unit() == b.outer_mirror.unit())) {
        AxiomItem item = compare_maps("bracketing", b.outer_brz.mul(), b.outer_mirror.mul(), options.max_witnesses);
        throw InternalError("the two bracketings of the iterated product differ:\n" +
                            AxiomReport{"iterated product", {item}}.to_text());
    }
    return std::move(b.outer_brz);
}

AxiomReport check_extraction(const Algebra& M, const MirrorData& mirror, const BrzData& brz,
                             const CheckOptions& options)
{
    const Embeddings e = embeddings_into(M, mirror, brz);
    const std::size_t cap = options.max_witnesses;
    const LinMap& mu = M.mul();

    std::vector<std::function<AxiomItem()>> tasks{
        [&] {
            Algebra wd = build_mirror(mirror, options);
            AxiomItem item{"embedding-WD", 0, {}};
            compare_into(item, "multiplicative", compose(e.wd, wd.mul()), compose(mu, tensor(e.wd, e.wd)), cap);
            compare_into(item, "unital", compose(e.wd, wd.unit_map()), M.unit_map(), cap);
            return item;
        },
        [&] {
            Algebra dv = build_brz(brz, options);
            AxiomItem item{"embedding-DV", 0, {}};
            compare_into(item, "multiplicative", compose(e.dv, dv.mul()), compose(mu, tensor(e.dv, e.dv)), cap);
            compare_into(item, "unital", compose(e.dv, dv.unit_map()), M.unit_map(), cap);
            return item;
        },
        [&] {
            const Factors wdv{mirror.W, brz.A.space(), brz.V};
            const LinMap product = compose_all({mu, tensor(mu, M.id()), tensor_all({e.w, e.d, e.v})});
            return compare_maps("canonical-decomposition", product,
                                LinMap::identity(wdv, M.field()).retyped(wdv, {M.space()}), cap);
        },
    };
    return run_checks("extraction hypotheses", tasks, options.jobs);
}

AxiomReport check_commutation_relations(const Algebra& M, const MirrorData& mirror, const BrzData& brz,
                                        const CheckOptions& options)
{
    const Embeddings e = embeddings_into(M, mirror, brz);
    const std::size_t cap = options.max_witnesses;
    const LinMap& mu = M.mul();
    auto prod = [&](const LinMap& x, const LinMap& y) { return compose(mu, tensor(x, y)); };

    std::vector<std::function<AxiomItem()>> tasks{
        [&] { return compare_maps("d-w", prod(e.d, e.w), compose(prod(e.w, e.d), mirror.P), cap); },
        [&] { return compare_maps("v-d", prod(e.v, e.d), compose(prod(e.d, e.v), brz.R), cap); },
        [&] { return compare_maps("w-w", prod(e.w, e.w), compose(prod(e.w, e.d), mirror.nu), cap); },
        [&] { return compare_maps("v-v", prod(e.v, e.v), compose(prod(e.d, e.v), brz.sigma), cap); },
    };
    return run_checks("commutation relations", tasks, options.jobs);
}

QLink extract_q(const Algebra& M, const MirrorData& mirror, const BrzData& brz, const CheckOptions& options)
{
    AxiomReport hyp = check_extraction(M, mirror, brz, options);
    if (!hyp.passed()) throw AxiomError(std::move(hyp));

    AxiomReport rel = check_commutation_relations(M, mirror, brz, options);
    if (!rel.passed())
        throw InternalError("embeddings are algebra maps but the commutation relations fail:\n" + rel.to_text());

    const Embeddings e = embeddings_into(M, mirror, brz);
    const Space& W = mirror.W;
    const Space& D = brz.A.space();
    const Space& V = brz.V;
    LinMap Q = compose(M.mul(), tensor(e.v, e.w)).retyped({V, W}, {W, D, V});
    QLink link = make_qlink(mirror, brz, Q);

    AxiomReport q = check_q(link, options);
    if (!q.passed()) throw InternalError("the extracted Q violates its conditions:\n" + q.to_text());
    return link;
}

AxiomReport hexagon_check(const LinMap& R1, const LinMap& R2, const LinMap& R3, const CheckOptions& options)
{
    if (R1.domain().size() != 2 || R2.domain().size() != 2 || R3.domain().size() != 2 ||
        R1.codomain().size() != 2 || R2.codomain().size() != 2 || R3.codomain().size() != 2)
        throw ShapeError("hexagon maps must act on two tensor factors");
    const Space& A = R1.codomain()[0];
    const Space& B = R1.codomain()[1];
    const Space& C = R2.codomain()[1];
    if (!(R1.domain() == Factors{B, A}) || !(R2.domain() == Factors{C, B}) || !(R2.codomain() == Factors{B, C}) ||
        !(R3.domain() == Factors{C, A}) || !(R3.codomain() == Factors{A, C}))
        throw ShapeError("hexagon maps must be R1: B⊗A→A⊗B, R2: C⊗B→B⊗C, R3: C⊗A→A⊗C");
    const Field f = R1.field();
    const LinMap ia = identity(A, f), ib = identity(B, f), ic = identity(C, f);

    std::vector<std::function<AxiomItem()>> tasks{[&] {
        return compare_maps("hexagon", compose_all({tensor(ia, R2), tensor(R3, ib), tensor(ic, R1)}),
                            compose_all({tensor(R1, ic), tensor(ib, R3), tensor(R2, ia)}), options.max_witnesses);
    }};
    return run_checks("hexagon", tasks, options.jobs);
}

LinMap q_from_r3(const Algebra& A, const Algebra& B, const Algebra& C, const LinMap& R3, const CheckOptions& options)
{
    AxiomReport report = check_twisting_map(A, C, R3, options);
    if (!report.passed()) throw AxiomError(std::move(report));
    const LinMap r3 = R3.retyped({C.space(), A.space()}, {A.space(), C.space()});
    return compose(tensor_all({A.id(), B.unit_map(), C.id()}), r3);
}

QLink twisted_triple_link(const Algebra& A, const Algebra& B, const Algebra& C, const LinMap& R1, const LinMap& R2,
                          const LinMap& R3, const CheckOptions& options)
{
    MirrorData mirror = mirror_from_twisted(A, B, R1, options);
    BrzData brz = brz_from_twisted(B, C, R2, options);
    return make_qlink(std::move(mirror), std::move(brz), q_from_r3(A, B, C, R3, options));
}

} // namespace icp

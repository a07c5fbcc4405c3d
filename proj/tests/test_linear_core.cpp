#include <doctest.h>

#include "oracles.hpp"

using namespace icp;

namespace {

const Field Q = Field::rationals();

Scalar q(long n, long d = 1)
{
    return Scalar(Q, mpq_class(n, d));
}

LinMap matrix(const Space& x, const Space& y, std::vector<long> entries)
{
    std::vector<Scalar> e;
    for (long v : entries) e.push_back(q(v));
    return LinMap({x}, {y}, Q, std::move(e));
}

} // namespace

TEST_CASE("rationals are kept in lowest terms")
{
    const Scalar a(Q, mpq_class(-6, 4));
    CHECK(a.to_string() == "-3/2");
    CHECK((q(1, 3) + q(1, 6)).to_string() == "1/2");
    CHECK((q(2) * q(1, 2)).is_one());
    CHECK(Scalar::parse("10/4", Q).to_string() == "5/2");
    CHECK(Scalar::parse("-7", Q) == q(-7));
    CHECK((q(3, 4) / q(3, 4)).is_one());
    CHECK_THROWS_AS(Scalar::parse("1.5", Q), ScalarParseError);
}

TEST_CASE("GF(p) arithmetic")
{
    const Field f = Field::prime(7);
    const Scalar three(f, 3L);
    CHECK((three * three).to_string() == "2 mod 7");
    CHECK((three * three.inverse()).is_one());
    CHECK(Scalar(f, -1L).residue() == 6);
    CHECK(Scalar::parse("1/2", f) == Scalar(f, 4L));
    CHECK(Scalar::parse("5 mod 7", f) == Scalar(f, 5L));
    CHECK_THROWS_AS(Scalar::parse("5 mod 11", f), FieldMismatch);
    CHECK_THROWS_AS(Scalar::parse("1/7", f), ScalarParseError);
    CHECK_THROWS(Field::prime(9));
    CHECK(Field::parse("GF:5") == Field::parse("GF(5)"));
}

TEST_CASE("distinct fields never mix")
{
    const Scalar a(Field::prime(5), 1L), b(Field::prime(7), 1L);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS((void)(a == q(1)), FieldMismatch);
}

TEST_CASE("scalar serialization round-trips")
{
    std::mt19937 rng(11);
    for (Field f : {Q, Field::prime(2), Field::prime(101), Field::prime(2147483647)}) {
        for (int i = 0; i < 200; ++i) {
            Scalar s = oracle::random_scalar(rng, f) * oracle::random_scalar(rng, f) + oracle::random_scalar(rng, f);
            CHECK(Scalar::parse(s.to_string(), f) == s);
        }
    }
}

TEST_CASE("spaces reject bad labels")
{
    CHECK_THROWS_AS(Space({}), ShapeError);
    CHECK_THROWS_AS(Space({"a", "a"}), ShapeError);
    CHECK_THROWS_AS(Space({"a", "b"}, 2), ShapeError);
    const Space s = tensor_space(Space({"1", "x"}, 0), Space({"1", "g"}, 0));
    CHECK(s.labels() == std::vector<std::string>{"1⊗1", "1⊗g", "x⊗1", "x⊗g"});
    CHECK(s.marked() == 0);
}

TEST_CASE("flat index is leftmost slowest")
{
    const Factors fs{Space::numbered("a", 2), Space::numbered("b", 3), Space::numbered("c", 2)};
    CHECK(unflatten(fs, 0) == std::vector<std::size_t>{0, 0, 0});
    CHECK(unflatten(fs, 1) == std::vector<std::size_t>{0, 0, 1});
    CHECK(unflatten(fs, 2) == std::vector<std::size_t>{0, 1, 0});
    CHECK(unflatten(fs, 11) == std::vector<std::size_t>{1, 2, 1});
    CHECK(basis_label(fs, 7) == "a1⊗b0⊗c1");
    CHECK(basis_label({}, 0) == "1");
}

TEST_CASE("compose")
{
    const Space x = Space::numbered("x", 2), y = Space::numbered("y", 2), z = Space::numbered("z", 2);
    const LinMap f = matrix(y, z, {1, 2, 3, 4});
    const LinMap g = matrix(x, y, {0, 1, -1, 5});
    // [[1,2],[3,4]] * [[0,1],[-1,5]] by hand
    CHECK(compose(f, g).entries() == std::vector<Scalar>{q(-2), q(11), q(-4), q(23)});
    CHECK(compose(identity(z, Q), f) == f);
    CHECK(compose(flip(x, y, Q), flip(y, x, Q)) == identity(Factors{y, x}, Q));
    CHECK_THROWS_AS(compose(g, f), ShapeError);
}

TEST_CASE("tensor matches the Kronecker product")
{
    std::mt19937 rng(3);
    const Space x = Space::numbered("x", 2), y = Space::numbered("y", 3), u = Space::numbered("u", 2),
                v = Space::numbered("v", 2);
    const LinMap f = oracle::random_map(rng, {x}, {u}, Q);
    const LinMap g = oracle::random_map(rng, {y}, {v, u}, Q);
    const LinMap fg = tensor(f, g);
    CHECK(fg.entries() == oracle::kron(f, g));
    CHECK(fg.domain() == Factors{x, y});
    CHECK(fg.codomain() == Factors{u, v, u});
    // (f⊗g)(e0⊗e1) = f(e0)⊗g(e1)
    const oracle::Vec lhs = oracle::apply(fg, oracle::basis(Q, 6, 1));
    const oracle::Vec fe = oracle::apply(f, oracle::basis(Q, 2, 0)), ge = oracle::apply(g, oracle::basis(Q, 3, 1));
    oracle::Vec rhs;
    for (const auto& a : fe)
        for (const auto& b : ge) rhs.push_back(a * b);
    CHECK(lhs == rhs);
    CHECK(tensor(identity(x, Q), identity(y, Q)) == identity(Factors{x, y}, Q));
    const LinMap one = identity(Space({"1"}), Q);
    CHECK(tensor(one, f).entries() == f.entries());
    CHECK(tensor(f, one).entries() == f.entries());
}

TEST_CASE("flip")
{
    const Space x = Space::numbered("x", 2), y = Space::numbered("y", 3);
    const LinMap s = flip(x, y, Q);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t r = 0; r < 6; ++r) CHECK(s.at(r, i * 3 + j) == q(r == j * 2 + i ? 1 : 0));
    const Space one({"1"});
    CHECK(flip(one, one, Q).entries() == std::vector<Scalar>{q(1)});
    CHECK(compose(flip(y, x, Q), s) == identity(Factors{x, y}, Q));
}

TEST_CASE("apply")
{
    std::mt19937 rng(5);
    const Space x = Space::numbered("x", 3), y = Space::numbered("y", 2);
    const oracle::Vec v = oracle::random_vector(rng, 3, Q);
    CHECK(icp::apply(identity(x, Q), v) == v);
    CHECK(icp::apply(LinMap::zero({x}, {y}, Q), v) == zero_vector(Q, 2));
    CHECK(icp::apply(flip(y, x, Q), basis_vector(Q, 6, 1)) == basis_vector(Q, 6, 2));
    CHECK_THROWS_AS(icp::apply(identity(y, Q), v), ShapeError);
}

TEST_CASE("permutation reorders factors")
{
    const Space a = Space::numbered("a", 2), b = Space::numbered("b", 3), c = Space::numbered("c", 2);
    const LinMap p = permutation({a, b, c}, {2, 0, 1}, Q);
    CHECK(p.codomain() == Factors{c, a, b});
    // a1⊗b2⊗c0 -> c0⊗a1⊗b2
    CHECK(icp::apply(p, basis_vector(Q, 12, 1 * 6 + 2 * 2 + 0)) == basis_vector(Q, 12, 0 * 6 + 1 * 3 + 2));
}

TEST_CASE("composition and tensor laws on random maps")
{
    std::mt19937 rng(17);
    for (Field f : {Q, Field::prime(13)}) {
        for (int round = 0; round < 20; ++round) {
            const Space x = Space::numbered("x", 1 + rng() % 3), y = Space::numbered("y", 1 + rng() % 3),
                        z = Space::numbered("z", 1 + rng() % 3), w = Space::numbered("w", 1 + rng() % 3);
            const LinMap h = oracle::random_map(rng, {x}, {y}, f);
            const LinMap g = oracle::random_map(rng, {y}, {z}, f);
            const LinMap k = oracle::random_map(rng, {z}, {w}, f);
            CHECK(compose(k, compose(g, h)) == compose(compose(k, g), h));

            const LinMap g2 = oracle::random_map(rng, {w}, {x, y}, f);
            const LinMap k2 = oracle::random_map(rng, {x, y}, {z}, f);
            CHECK(compose(tensor(g, k2), tensor(h, g2)) == tensor(compose(g, h), compose(k2, g2)));

            const oracle::Vec v = oracle::random_vector(rng, x.dim(), f);
            CHECK(icp::apply(compose(g, h), v) == icp::apply(g, icp::apply(h, v)));
            CHECK(compose(g, h).entries() == oracle::matmul(g.entries(), h.entries(), z.dim(), y.dim(), x.dim(), f));
        }
    }
}

TEST_CASE("vectors print in basis terms")
{
    const Factors fs{Space({"1", "x"}), Space({"1", "g"})};
    Vector v = zero_vector(Q, 4);
    v[2] = q(2);
    v[3] = q(-1, 2);
    CHECK(format_vector(fs, v) == "2*x⊗1 - 1/2*x⊗g");
    CHECK(format_vector(fs, zero_vector(Q, 4)) == "0");
    CHECK(format_vector(fs, basis_vector(Field::prime(5), 4, 0)) == "1⊗1");
}

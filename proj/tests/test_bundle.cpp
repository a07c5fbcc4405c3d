#include <doctest.h>

#include "icp/bundle.hpp"
#include "oracles.hpp"

using namespace icp;

namespace {

const Field Q = Field::rationals();

json z2_algebra_json()
{
    return json::parse(R"({
        "labels": ["1", "g"],
        "unit": ["1", "0"],
        "mul": {"entries": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]]}
    })");
}

json small_bundle()
{
    json doc;
    doc["algebras"]["A"] = z2_algebra_json();
    doc["algebras"]["B"] = z2_algebra_json();
    doc["linmaps"]["R"] = linmap_to_json(flip(Space({"1", "g"}), Space({"1", "g"}), Q));
    doc["twisting"]["AB"] = {{"A", "A"}, {"B", "B"}, {"R", "R"}};
    return doc;
}

} // namespace

TEST_CASE("scalars in JSON")
{
    CHECK(scalar_to_json(Scalar(Q, mpq_class(3, 4))) == json("3/4"));
    CHECK(scalar_from_json(json("-3/4"), Q) == Scalar(Q, mpq_class(-3, 4)));
    CHECK(scalar_from_json(json(5), Q) == Scalar(Q, 5L));
    CHECK(scalar_from_json(json("5 mod 7"), Field::prime(7)) == Scalar(Field::prime(7), 5L));
    CHECK_THROWS_AS(scalar_from_json(json("abc"), Q), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(json(1.5), Q), std::invalid_argument);
    CHECK_THROWS_AS(vector_from_json(json::array({"1"}), Q, 2), InputError);
}

TEST_CASE("linear maps round-trip through JSON")
{
    std::mt19937 rng(31);
    for (Field f : {Q, Field::prime(11)}) {
        for (int i = 0; i < 20; ++i) {
            const Space x = Space::numbered("x", 1 + rng() % 3), y = Space::numbered("y", 1 + rng() % 3);
            const LinMap m = oracle::random_map(rng, {x, y}, {y}, f);
            const LinMap back = linmap_from_json(linmap_to_json(m), f);
            CHECK(back.entries() == m.entries());
            CHECK(back.rows() == m.rows());
            CHECK(back.cols() == m.cols());
        }
    }
    json bad = linmap_to_json(identity(Space::numbered("x", 2), Q));
    bad["entries"].erase(0);
    CHECK_THROWS_AS(linmap_from_json(bad, Q), InputError);
}

TEST_CASE("algebras round-trip through JSON")
{
    const Algebra d = dual_numbers(Q);
    const Algebra back = algebra_from_json(algebra_to_json(d), Q);
    CHECK(back.mul() == d.mul());
    CHECK(back.unit() == d.unit());
    CHECK(back.space().labels() == d.space().labels());
    CHECK(algebra_to_json(d).at("field") == "Q");
    CHECK_FALSE(algebra_to_json(d, false).contains("field"));

    json bad = z2_algebra_json();
    bad["mul"]["entries"][2][3] = "0"; // g*1 = 0
    CHECK_THROWS_AS(algebra_from_json(bad, Q), AxiomError);
    bad = z2_algebra_json();
    bad["mul"]["entries"][0][0] = 2;
    CHECK_THROWS_AS(algebra_from_json(bad, Q), InputError);
}

TEST_CASE("multiplication tables")
{
    CHECK(format_table(ground_algebra(Q)) == "1 * 1 = 1\n");
    const Algebra z2 = algebra_from_json(z2_algebra_json(), Q);
    CHECK(format_table(z2) == "1 * 1 = 1\n1 * g = g\ng * 1 = g\ng * g = 1\n");
    const Algebra d = dual_numbers(Q);
    CHECK(format_table(d) == "1 * 1 = 1\n1 * x = x\nx * 1 = x\nx * x = 0\n");
}

TEST_CASE("bundle parsing")
{
    SUBCASE("a twisting map")
    {
        const Bundle b = Bundle::parse(small_bundle());
        CHECK(b.kind_of("AB") == Kind::twisting);
        CHECK(b.kind_of("A") == Kind::algebra);
        const auto reports = b.check("AB");
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].passed());
        CHECK(b.build("AB").dim() == 4);
    }
    SUBCASE("unknown section")
    {
        json doc = small_bundle();
        doc["widgets"] = json::object();
        CHECK_THROWS_AS(Bundle::parse(doc), InputError);
    }
    SUBCASE("dangling reference")
    {
        json doc = small_bundle();
        doc["twisting"]["AB"]["R"] = "missing";
        CHECK_THROWS_AS(Bundle::parse(doc), InputError);
    }
    SUBCASE("shape mismatch")
    {
        json doc = small_bundle();
        doc["linmaps"]["R"] = linmap_to_json(identity(Space::numbered("x", 3), Q));
        CHECK_THROWS_AS(Bundle::parse(doc).check("AB"), InputError);
    }
    SUBCASE("unknown and ambiguous names")
    {
        json doc = small_bundle();
        CHECK_THROWS_AS(Bundle::parse(doc).kind_of("nope"), InputError);
        doc["algebras"]["AB"] = z2_algebra_json();
        CHECK_THROWS_AS(Bundle::parse(doc).kind_of("AB"), InputError);
    }
    SUBCASE("field override")
    {
        json doc = small_bundle();
        doc["field"] = "Q";
        const Bundle b = Bundle::parse(doc, Field::prime(5));
        CHECK(b.field() == Field::prime(5));
        CHECK(b.build("AB").field() == Field::prime(5));
        doc["field"] = "GF:4";
        CHECK_THROWS_AS(Bundle::parse(doc), std::invalid_argument);
    }
    SUBCASE("a failing twisting map")
    {
        json doc = small_bundle();
        doc["linmaps"]["R"]["entries"][0] = "2";
        const Bundle b = Bundle::parse(doc);
        CHECK_FALSE(b.check("AB")[0].passed());
        CHECK_THROWS_AS(b.build("AB"), AxiomError);
    }
}

TEST_CASE("gallery bundles re-check from their JSON")
{
    for (const auto& p : gallery_presets()) {
        CAPTURE(p);
        const GalleryResult g = gallery_bundle(p, Q);
        CHECK(g.passed() == (p != "broken"));
        const Bundle b = Bundle::parse(json::parse(g.bundle.dump()));
        CHECK(b.kind_of(g.qlink) == Kind::qlink);
        const auto reports = b.check(g.qlink);
        bool all = true;
        for (const auto& r : reports) all = all && r.passed();
        CHECK(all == (p != "broken"));
        if (p == "broken") {
            CHECK_THROWS_AS(b.build(g.qlink), AxiomError);
            continue;
        }
        CHECK(reports.back().subject == "bracketings '" + p + "'");
        const QLink link = b.qlink(g.qlink);
        CHECK(b.build(g.qlink).mul() == build_iterated(link).mul());
    }
}

TEST_CASE("an extracted Q can be added to the bundle")
{
    const GalleryResult g = gallery_bundle("sign-braid", Q);
    const Bundle b = Bundle::parse(g.bundle);
    const Algebra M = b.build(g.qlink);
    const QLink link = extract_q(M, b.mirror("A#B"), b.brz("B#C"));
    const Bundle extended = Bundle::parse(add_qlink(b.document(), "again", "A#B", "B#C", link.Q));
    CHECK(extended.qlink("again").Q == b.qlink(g.qlink).Q);
    CHECK(algebra_to_json(extended.build("again")).dump() == algebra_to_json(M).dump());
    CHECK_THROWS_AS(add_qlink(b.document(), g.qlink, "A#B", "B#C", link.Q), InputError);
}

TEST_CASE("reports as JSON")
{
    const GalleryResult g = gallery_bundle("broken", Q);
    json failing;
    for (const auto& r : g.reports)
        if (!r.passed()) failing = report_to_json(r);
    REQUIRE_FALSE(failing.is_null());
    CHECK(failing["passed"] == false);
    bool found = false;
    for (const auto& item : failing["items"]) {
        if (item["passed"] == true) continue;
        found = true;
        CHECK(item["failures"].get<std::size_t>() >= item["witnesses"].size());
        for (const auto& w : item["witnesses"]) {
            CHECK(w.contains("input"));
            CHECK(w.contains("lhs"));
            CHECK(w.contains("rhs"));
        }
    }
    CHECK(found);
}

TEST_CASE("bracketing report")
{
    const GalleryResult g = gallery_bundle("mixed-braid", Q);
    const Bundle b = Bundle::parse(g.bundle);
    const AxiomReport r = bracketing_report(b.qlink(g.qlink));
    CHECK(r.passed());
    CHECK(r.failed_names().empty());
    CHECK(r.find("bracketing-equality") != nullptr);
}

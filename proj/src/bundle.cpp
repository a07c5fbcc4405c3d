#include "icp/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace icp {

namespace {

const std::vector<std::string> kSections{"spaces",  "algebras", "linmaps", "twisting",        "brz",
                                         "mirror",  "qlink",    "hexagon", "quasibialgebras", "actions"};

std::size_t as_index(const json& j, const char* what)
{
    if (!j.is_number_unsigned()) throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const json& member(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::string string_member(const json& obj, const char* key, const std::string& where)
{
    const json& j = member(obj, key, where);
    if (!j.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
    return j.get<std::string>();
}

std::vector<std::size_t> dims_of(const json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + " must be a list of dimensions");
    std::vector<std::size_t> out;
    for (const auto& d : j) {
        const std::size_t n = as_index(d, "dimension");
        if (n == 0) throw InputError(where + " contains a zero dimension");
        out.push_back(n);
    }
    return out;
}

std::vector<std::string> labels_of(const json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": \"labels\" must be a list of strings");
    std::vector<std::string> out;
    for (const auto& l : j) {
        if (!l.is_string()) throw InputError(where + ": labels must be strings");
        out.push_back(l.get<std::string>());
    }
    return out;
}

std::optional<std::size_t> basis_index(const Vector& v)
{
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_one() || found) return std::nullopt;
        found = i;
    }
    return found;
}

struct AlgebraParts {
    Space space;
    LinMap mul;
    Vector unit;
};

AlgebraParts algebra_parts(const json& j, Field field, const std::string& where)
{
    std::vector<std::string> labels = labels_of(member(j, "labels", where), where);
    if (labels.empty()) throw InputError(where + ": an algebra needs at least one basis element");
    const std::size_t n = labels.size();
    Vector unit = vector_from_json(member(j, "unit", where), field, n);
    Space space(std::move(labels), basis_index(unit));
    const json& entries = member(member(j, "mul", where), "entries", where);
    if (!entries.is_array()) throw InputError(where + ": mul.entries must be a list");
    LinMap mul = LinMap::zero({space, space}, {space}, field);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 4) throw InputError(where + ": mul entries are [i, j, k, \"c\"]");
        const std::size_t i = as_index(e[0], "i"), jj = as_index(e[1], "j"), k = as_index(e[2], "k");
        if (i >= n || jj >= n || k >= n) throw InputError(where + ": mul entry index out of range");
        const std::size_t col = i * n + jj;
        mul = mul.with_entry(k, col, mul.at(k, col) + scalar_from_json(e[3], field));
    }
    return AlgebraParts{std::move(space), std::move(mul), std::move(unit)};
}

Space space_from_json(const json& j, const std::string& where)
{
    std::optional<std::size_t> marked;
    if (j.contains("marked")) marked = as_index(j.at("marked"), "marked");
    try {
        return Space(labels_of(member(j, "labels", where), where), marked);
    } catch (const ShapeError& e) {
        throw InputError(where + ": " + e.what());
    }
}

std::vector<std::size_t> factor_dims(const Factors& fs)
{
    std::vector<std::size_t> out;
    for (const auto& f : fs) out.push_back(f.dim());
    return out;
}

AxiomReport named(AxiomReport r, const std::string& name)
{
    r.subject += " '" + name + "'";
    return r;
}

} // namespace

json scalar_to_json(const Scalar& s)
{
    return s.to_string();
}

Scalar scalar_from_json(const json& j, Field field)
{
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
    if (j.is_number_integer()) return Scalar(field, j.get<long>());
    throw InputError("scalars must be strings such as \"-3/4\" or \"5 mod 7\"");
}

json vector_to_json(const Vector& v)
{
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Vector vector_from_json(const json& j, Field field, std::size_t expected)
{
    if (!j.is_array()) throw InputError("a coordinate vector must be a list of scalars");
    if (j.size() != expected)
        throw InputError("coordinate vector has length " + std::to_string(j.size()) + ", expected " +
                         std::to_string(expected));
    Vector out;
    for (const auto& s : j) out.push_back(scalar_from_json(s, field));
    return out;
}

json linmap_to_json(const LinMap& f)
{
    return json{{"domain", factor_dims(f.domain())},
                {"codomain", factor_dims(f.codomain())},
                {"entries", vector_to_json(f.entries())}};
}

LinMap linmap_from_json(const json& j, Field field)
{
    const std::vector<std::size_t> dom = dims_of(member(j, "domain", "linmap"), "linmap domain");
    const std::vector<std::size_t> cod = dims_of(member(j, "codomain", "linmap"), "linmap codomain");
    Factors d, c;
    for (std::size_t i = 0; i < dom.size(); ++i) d.push_back(Space::numbered("d" + std::to_string(i) + "_", dom[i]));
    for (std::size_t i = 0; i < cod.size(); ++i) c.push_back(Space::numbered("c" + std::to_string(i) + "_", cod[i]));
    const std::size_t size = total_dim(d) * total_dim(c);
    Vector entries = vector_from_json(member(j, "entries", "linmap"), field, size);
    return LinMap(std::move(d), std::move(c), field, std::move(entries));
}

json algebra_to_json(const Algebra& a, bool with_field)
{
    json entries = json::array();
    const LinMap& m = a.mul();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = m.at(k, i * n + j);
                if (!c.is_zero()) entries.push_back(json::array({i, j, k, scalar_to_json(c)}));
            }
    json out{{"labels", a.space().labels()}, {"unit", vector_to_json(a.unit())}, {"mul", {{"entries", entries}}}};
    if (with_field) out["field"] = a.field().name();
    return out;
}

Algebra algebra_from_json(const json& j, Field field)
{
    AlgebraParts p = algebra_parts(j, field, "algebra");
    return make_algebra(std::move(p.space), std::move(p.mul), std::move(p.unit));
}

json report_to_json(const AxiomReport& r)
{
    json items = json::array();
    for (const auto& item : r.items) {
        json witnesses = json::array();
        for (const auto& w : item.witnesses) {
            json jw{{"input", w.input}, {"lhs", w.lhs}, {"rhs", w.rhs}};
            if (!w.equation.empty()) jw["equation"] = w.equation;
            witnesses.push_back(std::move(jw));
        }
        items.push_back(
            {{"name", item.name}, {"passed", item.passed()}, {"failures", item.failures}, {"witnesses", witnesses}});
    }
    return json{{"subject", r.subject}, {"passed", r.passed()}, {"items", items}};
}

std::string format_table(const Algebra& a)
{
    std::ostringstream out;
    const std::size_t n = a.dim();
    const Factors target{a.space()};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out << a.space().label(i) << " * " << a.space().label(j) << " = "
                << format_vector(target, a.mul().column(i * n + j)) << "\n";
    return out.str();
}

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::algebra: return "algebra";
    case Kind::twisting: return "twisting map";
    case Kind::brz: return "crossed product";
    case Kind::mirror: return "mirror crossed product";
    case Kind::qlink: return "Q link";
    case Kind::hexagon: return "twisted triple";
    case Kind::quasibialgebra: return "quasi-bialgebra";
    case Kind::action: return "module algebra";
    }
    return "?";
}

Bundle Bundle::parse(json doc, std::optional<Field> field)
{
    if (!doc.is_object()) throw InputError("a bundle must be a JSON object");
    if (!field) {
        if (!doc.contains("field")) {
            field = Field::rationals();
        } else {
            if (!doc.at("field").is_string()) throw InputError("\"field\" must be a string");
            field = Field::parse(doc.at("field").get<std::string>());
        }
    }
    for (const auto& [key, value] : doc.items()) {
        if (key == "field" || key == "description") continue;
        if (std::find(kSections.begin(), kSections.end(), key) == kSections.end())
            throw InputError("unknown bundle section \"" + key + "\"");
        if (!value.is_object()) throw InputError("section \"" + key + "\" must be an object");
    }
    Bundle b(std::move(doc), *field);
    b.validate();
    return b;
}

Bundle Bundle::load(const std::string& path, std::optional<Field> field)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse(std::move(doc), field);
}

const json& Bundle::entry(const char* section, const std::string& name) const
{
    if (!doc_.contains(section) || !doc_.at(section).contains(name))
        throw InputError(std::string("no ") + section + " entry named '" + name + "'");
    return doc_.at(section).at(name);
}

void Bundle::validate() const
{
    auto section = [&](const char* s) -> const json& {
        static const json empty = json::object();
        return doc_.contains(s) ? doc_.at(s) : empty;
    };
    auto need = [&](const json& decl, const char* key, std::initializer_list<const char*> targets,
                    const std::string& where) {
        const std::string ref = string_member(decl, key, where);
        for (const char* t : targets)
            if (section(t).contains(ref)) return;
        throw InputError(where + ": \"" + key + "\" refers to undeclared '" + ref + "'");
    };

    for (const auto& [name, s] : section("spaces").items()) space_from_json(s, "space '" + name + "'");
    for (const auto& [name, a] : section("algebras").items()) algebra_parts(a, field_, "algebra '" + name + "'");
    for (const auto& [name, f] : section("linmaps").items()) {
        try {
            linmap_from_json(f, field_);
        } catch (const InputError& e) {
            throw InputError("linmap '" + name + "': " + e.what());
        }
    }
    for (const auto& [name, d] : section("twisting").items()) {
        const std::string where = "twisting '" + name + "'";
        need(d, "A", {"algebras"}, where);
        need(d, "B", {"algebras"}, where);
        need(d, "R", {"linmaps"}, where);
    }
    for (const auto& [name, d] : section("brz").items()) {
        const std::string where = "brz '" + name + "'";
        need(d, "A", {"algebras"}, where);
        need(d, "V", {"spaces", "algebras"}, where);
        need(d, "R", {"linmaps"}, where);
        need(d, "sigma", {"linmaps"}, where);
    }
    for (const auto& [name, d] : section("mirror").items()) {
        const std::string where = "mirror '" + name + "'";
        need(d, "W", {"spaces", "algebras"}, where);
        need(d, "B", {"algebras"}, where);
        need(d, "P", {"linmaps"}, where);
        need(d, "nu", {"linmaps"}, where);
    }
    for (const auto& [name, d] : section("qlink").items()) {
        const std::string where = "qlink '" + name + "'";
        need(d, "mirror", {"mirror"}, where);
        need(d, "brz", {"brz"}, where);
        need(d, "Q", {"linmaps"}, where);
    }
    for (const auto& [name, d] : section("hexagon").items()) {
        const std::string where = "hexagon '" + name + "'";
        for (const char* k : {"A", "B", "C"}) need(d, k, {"algebras"}, where);
        for (const char* k : {"R1", "R2", "R3"}) need(d, k, {"linmaps"}, where);
    }
    for (const auto& [name, d] : section("quasibialgebras").items()) {
        const std::string where = "quasibialgebra '" + name + "'";
        need(d, "algebra", {"algebras"}, where);
        need(d, "comul", {"linmaps"}, where);
        need(d, "counit", {"linmaps"}, where);
        member(d, "phi", where);
        member(d, "phi_inv", where);
    }
    for (const auto& [name, d] : section("actions").items()) {
        const std::string where = "action '" + name + "'";
        const std::string side = string_member(d, "side", where);
        if (side != "left" && side != "right") throw InputError(where + ": side must be \"left\" or \"right\"");
        need(d, "H", {"quasibialgebras"}, where);
        need(d, "action", {"linmaps"}, where);
        if (d.contains("algebra")) {
            need(d, "algebra", {"algebras"}, where);
        } else {
            need(d, "space", {"spaces"}, where);
            need(d, "mul", {"linmaps"}, where);
        }
    }
}

Kind Bundle::kind_of(const std::string& name) const
{
    static const std::vector<std::pair<const char*, Kind>> checkable{
        {"algebras", Kind::algebra}, {"twisting", Kind::twisting}, {"brz", Kind::brz},
        {"mirror", Kind::mirror},     {"qlink", Kind::qlink},       {"hexagon", Kind::hexagon},
        {"quasibialgebras", Kind::quasibialgebra}, {"actions", Kind::action}};
    std::optional<Kind> found;
    for (const auto& [section, kind] : checkable) {
        if (!doc_.contains(section) || !doc_.at(section).contains(name)) continue;
        if (found) throw InputError("'" + name + "' is declared in more than one section");
        found = kind;
    }
    if (!found) throw InputError("no checkable object named '" + name + "'");
    return *found;
}

Space Bundle::space(const std::string& name) const
{
    if (doc_.contains("spaces") && doc_.at("spaces").contains(name))
        return space_from_json(doc_.at("spaces").at(name), "space '" + name + "'");
    return algebra_parts(entry("algebras", name), field_, "algebra '" + name + "'").space;
}

Algebra Bundle::algebra(const std::string& name) const
{
    AlgebraParts p = algebra_parts(entry("algebras", name), field_, "algebra '" + name + "'");
    try {
        return make_algebra(std::move(p.space), std::move(p.mul), std::move(p.unit));
    } catch (const AxiomError& e) {
        throw AxiomError(named(e.report(), name));
    }
}

LinMap Bundle::linmap(const std::string& name, Factors domain, Factors codomain) const
{
    const LinMap raw = linmap_from_json(entry("linmaps", name), field_);
    if (factor_dims(raw.domain()) != factor_dims(domain) || factor_dims(raw.codomain()) != factor_dims(codomain))
        throw InputError("linmap '" + name + "' has the wrong shape for its role");
    return raw.retyped(std::move(domain), std::move(codomain));
}

BrzData Bundle::brz(const std::string& name) const
{
    const json& d = entry("brz", name);
    Algebra A = algebra(d.at("A").get<std::string>());
    Space V = space(d.at("V").get<std::string>());
    LinMap R = linmap(d.at("R").get<std::string>(), {V, A.space()}, {A.space(), V});
    LinMap sigma = linmap(d.at("sigma").get<std::string>(), {V, V}, {A.space(), V});
    return make_brz_data(std::move(A), std::move(V), R, sigma);
}

MirrorData Bundle::mirror(const std::string& name) const
{
    const json& d = entry("mirror", name);
    Space W = space(d.at("W").get<std::string>());
    Algebra B = algebra(d.at("B").get<std::string>());
    LinMap P = linmap(d.at("P").get<std::string>(), {B.space(), W}, {W, B.space()});
    LinMap nu = linmap(d.at("nu").get<std::string>(), {W, W}, {W, B.space()});
    return make_mirror_data(std::move(W), std::move(B), P, nu);
}

QLink Bundle::qlink(const std::string& name) const
{
    const json& d = entry("qlink", name);
    MirrorData m = mirror(d.at("mirror").get<std::string>());
    BrzData b = brz(d.at("brz").get<std::string>());
    LinMap Q = linmap(d.at("Q").get<std::string>(), {b.V, m.W}, {m.W, b.A.space(), b.V});
    return make_qlink(std::move(m), std::move(b), Q);
}

TwistedTriple Bundle::hexagon(const std::string& name) const
{
    const json& d = entry("hexagon", name);
    Algebra A = algebra(d.at("A").get<std::string>());
    Algebra B = algebra(d.at("B").get<std::string>());
    Algebra C = algebra(d.at("C").get<std::string>());
    const Space &a = A.space(), &b = B.space(), &c = C.space();
    LinMap R1 = linmap(d.at("R1").get<std::string>(), {b, a}, {a, b});
    LinMap R2 = linmap(d.at("R2").get<std::string>(), {c, b}, {b, c});
    LinMap R3 = linmap(d.at("R3").get<std::string>(), {c, a}, {a, c});
    return TwistedTriple{name, std::move(A), std::move(B), std::move(C), std::move(R1), std::move(R2), std::move(R3)};
}

QuasiBialgebra Bundle::quasibialgebra(const std::string& name, const CheckOptions& options) const
{
    const json& d = entry("quasibialgebras", name);
    Algebra H = algebra(d.at("algebra").get<std::string>());
    const Space& h = H.space();
    LinMap comul = linmap(d.at("comul").get<std::string>(), {h}, {h, h});
    LinMap counit = linmap(d.at("counit").get<std::string>(), {h}, {});
    const std::size_t n = h.dim() * h.dim() * h.dim();
    Vector phi = vector_from_json(d.at("phi"), field_, n);
    Vector phi_inv = vector_from_json(d.at("phi_inv"), field_, n);
    try {
        return make_quasi_bialgebra(std::move(H), comul, counit, std::move(phi), std::move(phi_inv), options);
    } catch (const AxiomError& e) {
        throw AxiomError(named(e.report(), name));
    }
}

ModuleAlgebraAction Bundle::action(const std::string& name, const CheckOptions& options) const
{
    const json& d = entry("actions", name);
    const Side side = d.at("side").get<std::string>() == "left" ? Side::left : Side::right;
    QuasiBialgebra H = quasibialgebra(d.at("H").get<std::string>(), options);
    Carrier A = [&] {
        if (d.contains("algebra")) return carrier_of(algebra(d.at("algebra").get<std::string>()));
        Space s = space(d.at("space").get<std::string>());
        LinMap mul = linmap(d.at("mul").get<std::string>(), {s, s}, {s});
        return make_carrier(std::move(s), mul);
    }();
    const Space& h = H.H.space();
    LinMap act = side == Side::left ? linmap(d.at("action").get<std::string>(), {h, A.space}, {A.space})
                                    : linmap(d.at("action").get<std::string>(), {A.space, h}, {A.space});
    return ModuleAlgebraAction{side, std::move(H), std::move(A), std::move(act)};
}

std::vector<AxiomReport> Bundle::check(const std::string& name, const CheckOptions& options) const
{
    std::vector<AxiomReport> out;
    switch (kind_of(name)) {
    case Kind::algebra: {
        AlgebraParts p = algebra_parts(entry("algebras", name), field_, "algebra '" + name + "'");
        out.push_back(named(check_algebra(p.space, p.mul, p.unit, options), name));
        break;
    }
    case Kind::twisting: {
        const json& d = entry("twisting", name);
        Algebra A = algebra(d.at("A").get<std::string>());
        Algebra B = algebra(d.at("B").get<std::string>());
        LinMap R = linmap(d.at("R").get<std::string>(), {B.space(), A.space()}, {A.space(), B.space()});
        out.push_back(named(check_twisting_map(A, B, R, options), name));
        break;
    }
    case Kind::brz: out.push_back(named(check_brz(brz(name), options), name)); break;
    case Kind::mirror: out.push_back(named(check_mirror(mirror(name), options), name)); break;
    case Kind::qlink: {
        const QLink link = qlink(name);
        const json& d = entry("qlink", name);
        out.push_back(named(check_mirror(link.mirror, options), d.at("mirror").get<std::string>()));
        out.push_back(named(check_brz(link.brz, options), d.at("brz").get<std::string>()));
        out.push_back(named(check_q(link, options), name));
        if (std::all_of(out.begin(), out.end(), [](const AxiomReport& r) { return r.passed(); }))
            out.push_back(named(bracketing_report(link, options), name));
        break;
    }
    case Kind::hexagon: {
        const TwistedTriple t = hexagon(name);
        const json& d = entry("hexagon", name);
        out.push_back(named(check_twisting_map(t.A, t.B, t.R1, options), d.at("R1").get<std::string>()));
        out.push_back(named(check_twisting_map(t.B, t.C, t.R2, options), d.at("R2").get<std::string>()));
        out.push_back(named(check_twisting_map(t.A, t.C, t.R3, options), d.at("R3").get<std::string>()));
        out.push_back(named(hexagon_check(t.R1, t.R2, t.R3, options), name));
        break;
    }
    case Kind::quasibialgebra: {
        const json& d = entry("quasibialgebras", name);
        Algebra H = algebra(d.at("algebra").get<std::string>());
        const Space& h = H.space();
        const std::size_t n = h.dim() * h.dim() * h.dim();
        out.push_back(named(check_quasi_bialgebra(H, linmap(d.at("comul").get<std::string>(), {h}, {h, h}),
                                                  linmap(d.at("counit").get<std::string>(), {h}, {}),
                                                  vector_from_json(d.at("phi"), field_, n),
                                                  vector_from_json(d.at("phi_inv"), field_, n), options),
                            name));
        break;
    }
    case Kind::action: {
        const json& d = entry("actions", name);
        const bool inverse = d.value("inverse_associator", false);
        out.push_back(named(check_module_algebra(action(name, options), options, inverse), name));
        break;
    }
    }
    return out;
}

Algebra Bundle::build(const std::string& name, const CheckOptions& options) const
{
    switch (kind_of(name)) {
    case Kind::algebra: return algebra(name);
    case Kind::twisting: {
        const json& d = entry("twisting", name);
        Algebra A = algebra(d.at("A").get<std::string>());
        Algebra B = algebra(d.at("B").get<std::string>());
        LinMap R = linmap(d.at("R").get<std::string>(), {B.space(), A.space()}, {A.space(), B.space()});
        return build_twisted(A, B, R, options);
    }
    case Kind::brz: return build_brz(brz(name), options);
    case Kind::mirror: return build_mirror(mirror(name), options);
    case Kind::qlink: return build_iterated(qlink(name), options);
    case Kind::hexagon: {
        const TwistedTriple t = hexagon(name);
        return build_iterated(twisted_triple_link(t.A, t.B, t.C, t.R1, t.R2, t.R3, options), options);
    }
    case Kind::quasibialgebra:
    case Kind::action: break;
    }
    throw InputError("'" + name + "' does not define an algebra to build");
}

json add_qlink(json doc, const std::string& name, const std::string& mirror, const std::string& brz, const LinMap& Q)
{
    const std::string q = name + ".Q";
    if (doc.contains("linmaps") && doc["linmaps"].contains(q)) throw InputError("linmap '" + q + "' already exists");
    for (const char* s : {"algebras", "twisting", "brz", "mirror", "qlink", "hexagon", "quasibialgebras", "actions"})
        if (doc.contains(s) && doc[s].contains(name)) throw InputError("'" + name + "' is already declared");
    doc["linmaps"][q] = linmap_to_json(Q);
    doc["qlink"][name] = {{"mirror", mirror}, {"brz", brz}, {"Q", q}};
    return doc;
}

bool GalleryResult::passed() const
{
    return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.passed(); });
}

std::vector<std::string> gallery_presets()
{
    std::vector<std::string> out = braided_triple_presets();
    for (auto& s : smash_presets()) out.push_back(s);
    return out;
}

AxiomReport bracketing_report(const QLink& link, const CheckOptions& options)
{
    const Bracketings b = build_bracketings(link, options);
    const Space& s = b.outer_mirror.space();
    AxiomItem item{"bracketing-equality", 0, {}};
    compare_into(item, "multiplication", b.outer_brz.mul().retyped({s, s}, {s}), b.outer_mirror.mul(),
                 options.max_witnesses);
    compare_into(item, "unit", LinMap::element({s}, b.outer_brz.unit()), b.outer_mirror.unit_map(),
                 options.max_witnesses);
    return AxiomReport{"bracketings", {std::move(item)}};
}

namespace {

void add_mirror(json& doc, const std::string& name, const std::string& W, const std::string& B, const MirrorData& m)
{
    doc["linmaps"]["P_" + name] = linmap_to_json(m.P);
    doc["linmaps"]["nu_" + name] = linmap_to_json(m.nu);
    doc["mirror"][name] = {{"W", W}, {"B", B}, {"P", "P_" + name}, {"nu", "nu_" + name}};
}

void add_brz(json& doc, const std::string& name, const std::string& A, const std::string& V, const BrzData& b)
{
    doc["linmaps"]["R_" + name] = linmap_to_json(b.R);
    doc["linmaps"]["sigma_" + name] = linmap_to_json(b.sigma);
    doc["brz"][name] = {{"A", A}, {"V", V}, {"R", "R_" + name}, {"sigma", "sigma_" + name}};
}

json space_to_json(const Space& s)
{
    json out{{"labels", s.labels()}};
    if (s.marked()) out["marked"] = *s.marked();
    return out;
}

void finish_link(GalleryResult& g, const QLink& link, const std::string& mirror, const std::string& brz,
                 const CheckOptions& options)
{
    g.reports.push_back(named(check_mirror(link.mirror, options), mirror));
    g.reports.push_back(named(check_brz(link.brz, options), brz));
    g.reports.push_back(named(check_q(link, options), g.qlink));
    if (g.passed()) g.reports.push_back(named(bracketing_report(link, options), g.qlink));
    g.bundle = add_qlink(std::move(g.bundle), g.qlink, mirror, brz, link.Q);
}

} // namespace

GalleryResult gallery_bundle(const std::string& preset, Field field, const CheckOptions& options)
{
    GalleryResult g{json{{"field", field.name()}}, preset, {}};
    json& doc = g.bundle;
    const auto triples = braided_triple_presets();
    if (std::find(triples.begin(), triples.end(), preset) != triples.end()) {
        const TwistedTriple t = braided_triple(preset, field);
        doc["algebras"]["A"] = algebra_to_json(t.A, false);
        doc["algebras"]["B"] = algebra_to_json(t.B, false);
        doc["algebras"]["C"] = algebra_to_json(t.C, false);
        doc["linmaps"]["R1"] = linmap_to_json(t.R1);
        doc["linmaps"]["R2"] = linmap_to_json(t.R2);
        doc["linmaps"]["R3"] = linmap_to_json(t.R3);
        doc["twisting"]["AB"] = {{"A", "A"}, {"B", "B"}, {"R", "R1"}};
        doc["twisting"]["BC"] = {{"A", "B"}, {"B", "C"}, {"R", "R2"}};
        doc["twisting"]["AC"] = {{"A", "A"}, {"B", "C"}, {"R", "R3"}};
        doc["hexagon"]["hexagon"] = {{"A", "A"}, {"B", "B"}, {"C", "C"}, {"R1", "R1"}, {"R2", "R2"}, {"R3", "R3"}};
        g.reports.push_back(named(check_twisting_map(t.A, t.B, t.R1, options), "AB"));
        g.reports.push_back(named(check_twisting_map(t.B, t.C, t.R2, options), "BC"));
        g.reports.push_back(named(check_twisting_map(t.A, t.C, t.R3, options), "AC"));
        g.reports.push_back(named(hexagon_check(t.R1, t.R2, t.R3, options), "hexagon"));
        const QLink link = twisted_triple_link(t.A, t.B, t.C, t.R1, t.R2, t.R3, options);
        add_mirror(doc, "A#B", "A", "B", link.mirror);
        add_brz(doc, "B#C", "B", "C", link.brz);
        finish_link(g, link, "A#B", "B#C", options);
        return g;
    }
    const SmashData s = smash_preset(preset, field);
    const QuasiBialgebra& H = s.left.H;
    doc["algebras"]["H"] = algebra_to_json(H.H, false);
    doc["linmaps"]["comul"] = linmap_to_json(H.comul);
    doc["linmaps"]["counit"] = linmap_to_json(H.counit);
    doc["quasibialgebras"]["Hq"] = {{"algebra", "H"},
                                    {"comul", "comul"},
                                    {"counit", "counit"},
                                    {"phi", vector_to_json(H.phi)},
                                    {"phi_inv", vector_to_json(H.phi_inv)}};
    doc["spaces"]["A"] = space_to_json(s.left.A.space);
    doc["spaces"]["B"] = space_to_json(s.right.A.space);
    doc["linmaps"]["mul_A"] = linmap_to_json(s.left.A.mul);
    doc["linmaps"]["mul_B"] = linmap_to_json(s.right.A.mul);
    doc["linmaps"]["act_A"] = linmap_to_json(s.left.action);
    doc["linmaps"]["act_B"] = linmap_to_json(s.right.action);
    doc["actions"]["left"] = {{"side", "left"}, {"H", "Hq"}, {"space", "A"}, {"mul", "mul_A"}, {"action", "act_A"}};
    doc["actions"]["right"] = {{"side", "right"}, {"H", "Hq"}, {"space", "B"}, {"mul", "mul_B"}, {"action", "act_B"}};
    g.reports.push_back(named(check_quasi_bialgebra(H.H, H.comul, H.counit, H.phi, H.phi_inv, options), "Hq"));
    g.reports.push_back(named(check_module_algebra(s.left, options), "left"));
    g.reports.push_back(named(check_module_algebra(s.right, options), "right"));
    const QLink link = two_sided_q(s.left, s.right, options);
    add_mirror(doc, "A#H", "A", "H", link.mirror);
    add_brz(doc, "H#B", "H", "B", link.brz);
    finish_link(g, link, "A#H", "H#B", options);
    return g;
}

} // namespace icp

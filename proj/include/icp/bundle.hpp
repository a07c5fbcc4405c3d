#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "icp/gallery.hpp"

namespace icp {

using json = nlohmann::json;

/// Malformed files, unknown names, unresolvable references.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Field field);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, Field field, std::size_t expected);

/// {"domain": [dims], "codomain": [dims], "entries": [row-major scalars]}
json linmap_to_json(const LinMap& f);
/// Factors are numbered placeholders until the map is retyped onto named spaces.
LinMap linmap_from_json(const json& j, Field field);

/// {"labels", "unit", "mul": {"entries": [[i, j, k, "c"], ...]}}; "field" is
/// written only when `with_field`. Entries are sorted by (i, j, k).
json algebra_to_json(const Algebra& a, bool with_field = true);
/// Throws AxiomError when the table is not a unital associative algebra.
Algebra algebra_from_json(const json& j, Field field);

json report_to_json(const AxiomReport& r);

/// One line per basis pair in basis order: "e_i * e_j = combination".
std::string format_table(const Algebra& a);

enum class Kind { algebra, twisting, brz, mirror, qlink, hexagon, quasibialgebra, action };

std::string kind_name(Kind k);

/// A named collection of definitions over one field. References and shapes
/// are validated when the bundle is parsed; axioms are only checked on demand.
class Bundle {
public:
    /// `field` overrides the "field" entry of the document.
    static Bundle parse(json doc, std::optional<Field> field = std::nullopt);
    static Bundle load(const std::string& path, std::optional<Field> field = std::nullopt);

    Field field() const { return field_; }
    const json& document() const { return doc_; }

    /// InputError when the name is undeclared or declared in several sections.
    Kind kind_of(const std::string& name) const;

    /// An entry of "spaces", or the underlying space of an algebra.
    Space space(const std::string& name) const;
    Algebra algebra(const std::string& name) const;
    LinMap linmap(const std::string& name, Factors domain, Factors codomain) const;

    BrzData brz(const std::string& name) const;
    MirrorData mirror(const std::string& name) const;
    QLink qlink(const std::string& name) const;
    TwistedTriple hexagon(const std::string& name) const;
    QuasiBialgebra quasibialgebra(const std::string& name, const CheckOptions& options = {}) const;
    ModuleAlgebraAction action(const std::string& name, const CheckOptions& options = {}) const;

    /// Every report relevant to the object (a qlink also checks its two halves).
    std::vector<AxiomReport> check(const std::string& name, const CheckOptions& options = {}) const;

    /// The algebra an object defines: twisted tensor product, crossed
    /// product, mirror crossed product or iterated crossed product.
    Algebra build(const std::string& name, const CheckOptions& options = {}) const;

private:
    Bundle(json doc, Field field) : doc_(std::move(doc)), field_(field) {}
    const json& entry(const char* section, const std::string& name) const;
    void validate() const;

    json doc_;
    Field field_;
};

/// Writes Q as "<name>.Q" and a qlink "<name>" over the given mirror and brz
/// declarations into a copy of `doc`.
json add_qlink(json doc, const std::string& name, const std::string& mirror, const std::string& brz, const LinMap& Q);

struct GalleryResult {
    json bundle;
    /// Name of the qlink the preset declares.
    std::string qlink;
    std::vector<AxiomReport> reports;

    bool passed() const;
};

std::vector<std::string> gallery_presets();
GalleryResult gallery_bundle(const std::string& preset, Field field, const CheckOptions& options = {});

/// Compares the two bracketings of an iterated product; one item
/// "bracketing-equality".
AxiomReport bracketing_report(const QLink& link, const CheckOptions& options = {});

} // namespace icp

// icp: command-line front end for JSON bundles.
//
// Exit codes: 0 pass, 1 axiom failure, 2 input error, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "icp/bundle.hpp"

namespace {

using icp::json;

struct Common {
    bool as_json = false;
    std::string field;
    std::string out;
    std::size_t max_witnesses = 10;
    unsigned jobs = 1;

    std::optional<icp::Field> field_override() const
    {
        if (field.empty()) return std::nullopt;
        return icp::Field::parse(field);
    }
    icp::CheckOptions options() const { return {max_witnesses, jobs}; }
};

void add_common(CLI::App* cmd, Common& c, bool with_out)
{
    cmd->add_flag("--json", c.as_json, "Machine-readable output");
    cmd->add_option("--field", c.field, "Override the field: Q or GF:p");
    cmd->add_option("--max-witnesses", c.max_witnesses, "Witnesses kept per axiom")->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "Worker threads per checker")->capture_default_str()->check(CLI::Range(1u, 256u));
    if (with_out) cmd->add_option("--out", c.out, "Output file (default: stdout)");
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw icp::InputError("cannot write " + path);
    out << text;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

bool all_passed(const std::vector<icp::AxiomReport>& reports)
{
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

std::string render_reports(const std::vector<icp::AxiomReport>& reports, bool as_json, const json& header)
{
    if (as_json) {
        json out = header;
        out["passed"] = all_passed(reports);
        out["reports"] = json::array();
        for (const auto& r : reports) out["reports"].push_back(icp::report_to_json(r));
        return dump(out);
    }
    std::string text;
    for (const auto& r : reports) text += r.to_text();
    return text;
}

icp::Algebra load_algebra_file(const std::string& path, std::optional<icp::Field> field)
{
    std::ifstream in(path);
    if (!in) throw icp::InputError("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw icp::InputError(path + ": " + e.what());
    }
    if (!field) field = j.contains("field") ? icp::Field::parse(j.at("field").get<std::string>()) : icp::Field::rationals();
    return icp::algebra_from_json(j, *field);
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact crossed products of finite-dimensional algebras"};
    app.require_subcommand(1);
    Common c;

    std::string bundle_path, name, algebra_path, mirror, brz, preset, qlink_name = "extracted";
    bool list = false;

    auto* check = app.add_subcommand("check", "Run the axiom checkers for a declared object");
    check->add_option("bundle", bundle_path, "Bundle file")->required();
    check->add_option("name", name, "Object name")->required();
    add_common(check, c, false);

    auto* build = app.add_subcommand("build", "Build the algebra an object defines and write it as JSON");
    build->add_option("bundle", bundle_path, "Bundle file")->required();
    build->add_option("name", name, "twisting, brz, mirror, qlink or hexagon name")->required();
    add_common(build, c, true);

    auto* iterate = app.add_subcommand("iterate", "Build the iterated crossed product of a qlink");
    iterate->add_option("bundle", bundle_path, "Bundle file")->required();
    iterate->add_option("name", name, "qlink or hexagon name")->required();
    add_common(iterate, c, true);

    auto* extract = app.add_subcommand("extract-q", "Recover Q from an algebra on W⊗D⊗V");
    extract->add_option("bundle", bundle_path, "Bundle file")->required();
    extract->add_option("algebra", algebra_path, "Algebra JSON file")->required();
    extract->add_option("mirror", mirror, "Mirror crossed product W⊗D")->required();
    extract->add_option("brz", brz, "Crossed product D⊗V")->required();
    extract->add_option("--name", qlink_name, "Name of the new qlink")->capture_default_str();
    add_common(extract, c, true);

    auto* table = app.add_subcommand("table", "Print a multiplication table");
    table->add_option("file", bundle_path, "Algebra JSON file, or a bundle when a name is given")->required();
    table->add_option("name", name, "Object to build from the bundle");
    add_common(table, c, true);

    auto* gallery = app.add_subcommand("gallery", "Write a preset as a bundle and verify it");
    gallery->add_option("preset", preset, "Preset name");
    gallery->add_flag("--list", list, "List presets");
    add_common(gallery, c, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const icp::CheckOptions opts = c.options();
    const auto field = c.field_override();

    if (check->parsed()) {
        const icp::Bundle b = icp::Bundle::load(bundle_path, field);
        const icp::Kind kind = b.kind_of(name);
        const auto reports = b.check(name, opts);
        std::cout << render_reports(reports, c.as_json, {{"object", name}, {"kind", icp::kind_name(kind)}});
        return all_passed(reports) ? 0 : 1;
    }
    if (build->parsed() || iterate->parsed()) {
        const icp::Bundle b = icp::Bundle::load(bundle_path, field);
        const icp::Kind kind = b.kind_of(name);
        if (iterate->parsed() && kind != icp::Kind::qlink && kind != icp::Kind::hexagon)
            throw icp::InputError("'" + name + "' is a " + icp::kind_name(kind) + ", not a qlink");
        write_output(c.out, dump(icp::algebra_to_json(b.build(name, opts))));
        return 0;
    }
    if (extract->parsed()) {
        const icp::Bundle b = icp::Bundle::load(bundle_path, field);
        const icp::Algebra M = load_algebra_file(algebra_path, b.field());
        const icp::QLink link = icp::extract_q(M, b.mirror(mirror), b.brz(brz), opts);
        write_output(c.out, dump(icp::add_qlink(b.document(), qlink_name, mirror, brz, link.Q)));
        return 0;
    }
    if (table->parsed()) {
        if (name.empty()) {
            write_output(c.out, icp::format_table(load_algebra_file(bundle_path, field)));
        } else {
            const icp::Bundle b = icp::Bundle::load(bundle_path, field);
            write_output(c.out, icp::format_table(b.build(name, opts)));
        }
        return 0;
    }
    if (gallery->parsed()) {
        if (list) {
            for (const auto& p : icp::gallery_presets()) std::cout << p << "\n";
            return 0;
        }
        if (preset.empty()) throw icp::InputError("gallery needs a preset name (see --list)");
        const icp::Field f = field.value_or(icp::Field::rationals());
        const icp::GalleryResult g = icp::gallery_bundle(preset, f, opts);
        const std::string report =
            render_reports(g.reports, c.as_json, {{"preset", preset}, {"field", f.name()}, {"qlink", g.qlink}});
        write_output(c.out, dump(g.bundle));
        (c.out.empty() ? std::cerr : std::cout) << report;
        return g.passed() ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const icp::AxiomError& e) {
        std::cerr << e.report().to_text();
        return 1;
    } catch (const icp::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const icp::FieldMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // InputError, ShapeError, ScalarParseError, bad field or preset names
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

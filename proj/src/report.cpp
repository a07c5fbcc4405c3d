#include "icp/report.hpp"

#include <future>
#include <sstream>

namespace icp {

bool AxiomReport::passed() const
{
    for (const auto& item : items)
        if (!item.passed()) return false;
    return true;
}

const AxiomItem* AxiomReport::find(std::string_view name) const
{
    for (const auto& item : items)
        if (item.name == name) return &item;
    return nullptr;
}

std::vector<std::string> AxiomReport::failed_names() const
{
    std::vector<std::string> out;
    for (const auto& item : items)
        if (!item.passed()) out.push_back(item.name);
    return out;
}

std::string AxiomReport::to_text() const
{
    std::ostringstream os;
    os << subject << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& item : items) {
        os << "  " << item.name << ": ";
        if (item.passed()) {
            os << "pass\n";
            continue;
        }
        os << "FAIL (" << item.failures << " failing tuple" << (item.failures == 1 ? "" : "s") << ")\n";
        for (const auto& w : item.witnesses) {
            os << "    at (" << w.input << ")";
            if (!w.equation.empty()) os << " [" << w.equation << "]";
            os << "\n      lhs = " << w.lhs << "\n      rhs = " << w.rhs << "\n";
        }
        if (item.witnesses.size() < item.failures)
            os << "    ... " << item.failures - item.witnesses.size() << " more\n";
    }
    return os.str();
}

AxiomError::AxiomError(AxiomReport report)
    : std::runtime_error(report.to_text()), report_(std::move(report))
{
}

void compare_into(AxiomItem& item, std::string_view equation, const LinMap& lhs, const LinMap& rhs,
                  std::size_t max_witnesses)
{
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw InternalError("axiom " + item.name + ": sides have different shapes");
    if (max_witnesses == 0) max_witnesses = 1;
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        bool same = true;
        for (std::size_t r = 0; r < lhs.rows() && same; ++r) same = lhs.at(r, c) == rhs.at(r, c);
        if (same) continue;
        ++item.failures;
        if (item.witnesses.size() < max_witnesses) {
            auto l = lhs.column(c), rv = rhs.column(c);
            item.witnesses.push_back(Witness{std::string(equation), basis_label(lhs.domain(), c),
                                             format_vector(lhs.codomain(), l), format_vector(rhs.codomain(), rv)});
        }
    }
}

AxiomItem compare_maps(std::string name, const LinMap& lhs, const LinMap& rhs, std::size_t max_witnesses)
{
    AxiomItem item{std::move(name), 0, {}};
    compare_into(item, "", lhs, rhs, max_witnesses);
    return item;
}

AxiomReport run_checks(std::string subject, const std::vector<std::function<AxiomItem()>>& tasks, unsigned jobs)
{
    AxiomReport report{std::move(subject), {}};
    report.items.resize(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) report.items[i] = tasks[i]();
        return report;
    }
    for (std::size_t start = 0; start < tasks.size(); start += jobs) {
        std::vector<std::future<AxiomItem>> batch;
        for (std::size_t i = start; i < tasks.size() && i < start + jobs; ++i)
            batch.push_back(std::async(std::launch::async, tasks[i]));
        for (std::size_t k = 0; k < batch.size(); ++k) report.items[start + k] = batch[k].get();
    }
    return report;
}

} // namespace icp

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icp/linmap.hpp"

namespace icp {

/// How exhaustive checkers run and how much they report.
struct CheckOptions {
    /// Witnesses kept per axiom; the full failure count is always reported.
    std::size_t max_witnesses = 10;
    /// Axioms of one report are evaluated on up to this many threads.
    unsigned jobs = 1;
};

/// One failing basis tuple: the input tuple and both sides of the equation.
struct Witness {
    std::string equation;
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct AxiomItem {
    std::string name;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;

    bool passed() const { return failures == 0; }
};

struct AxiomReport {
    std::string subject;
    std::vector<AxiomItem> items;

    bool passed() const;
    /// nullptr when no item has that name.
    const AxiomItem* find(std::string_view name) const;
    std::vector<std::string> failed_names() const;
    std::string to_text() const;
};

/// Carries the report of a failed validation out of a builder.
class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(AxiomReport report);
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

/// A property the construction guarantees did not hold: a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Compares two maps column by column and appends witnesses for each
/// disagreeing domain basis tuple to `item`. `equation` tags the witnesses
/// when an axiom consists of several equations.
void compare_into(AxiomItem& item, std::string_view equation, const LinMap& lhs, const LinMap& rhs,
                  std::size_t max_witnesses);

AxiomItem compare_maps(std::string name, const LinMap& lhs, const LinMap& rhs, std::size_t max_witnesses);

/// Evaluates every task (possibly concurrently) and returns the items in task order.
AxiomReport run_checks(std::string subject, const std::vector<std::function<AxiomItem()>>& tasks,
                       unsigned jobs);

} // namespace icp

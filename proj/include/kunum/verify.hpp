#pragma once

#include "kunum/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kunum {

enum class CheckStatus { Pass, Fail, PaperInternalDiscrepancy };

std::string_view to_string(CheckStatus s);

struct VerifyCheck {
    std::string name;
    std::string group;
    std::string paper_ref;
    std::string expected;
    std::string computed;
    CheckStatus status;
    /// Only for discrepancy entries: every published value, verbatim.
    std::vector<std::string> paper_values;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    std::size_t count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// Group names accepted by run_verify's filter.
std::vector<std::string> verify_groups();

/// Runs the regression table. With `only`, keeps checks of that group;
/// throws std::invalid_argument for an unknown group.
VerifyReport run_verify(const std::optional<std::string>& only = std::nullopt);

Json to_json(const VerifyReport& r);
std::string format_report(const VerifyReport& r);

} // namespace kunum

#ifndef TOROCOB_REPORT_HPP
#define TOROCOB_REPORT_HPP

#include <string>
#include <vector>

#include "errors.hpp"

namespace torocob {

struct Violation {
    std::string code;    // short machine-readable tag, e.g. "dependent-vectors"
    std::string subject; // offending id (face, facet, term index, ...)
    std::string detail;  // human-readable explanation
};

// Invalidity is data, not an exception: a report lists every violated
// invariant with the offending ids and is valid iff the list is empty.
struct ValidityReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }

    void add(std::string code, std::string subject, std::string detail) {
        violations.push_back({std::move(code), std::move(subject), std::move(detail)});
    }

    void merge(const ValidityReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    std::string summary() const {
        if (valid()) return "valid";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.code + "(" + v.subject + ")";
        }
        return s;
    }
};

// Thrown by constructions whose precondition is a valid characteristic
// function; carries the failing report.
struct InvalidCharFunctionError : DomainError {
    ValidityReport report;
    InvalidCharFunctionError(const std::string& what, ValidityReport rep)
        : DomainError(what + ": " + rep.summary()), report(std::move(rep)) {}
};

} // namespace torocob

#endif

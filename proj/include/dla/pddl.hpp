#ifndef DLA_PDDL_HPP
#define DLA_PDDL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dla/model.hpp"

namespace dla {

// Parse/validation failure. Carries a 1-based source position when known.
struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(line ? msg + " (line " + std::to_string(line) +
                                        ", column " + std::to_string(column) + ")"
                                  : msg),
          line(line),
          column(column) {}
};

// Non-fatal findings (e.g. potentially unifiable duplicate deletes).
struct Diagnostics {
    std::vector<std::string> warnings;
};

DomainModel parse_domain(const std::string& text);
ProblemModel parse_problem(const std::string& text);

// Checks del ⊆ pre per schema (hard error) and warns when two delete atoms
// of one schema can unify under some instantiation.
DomainModel validate_strips(const DomainModel& d, Diagnostics* diags = nullptr);

// Replaces every constant inside a schema body with a fresh parameter T_c,
// guarded by a fresh static predicate is-<c>; adds is-<c>(c) to init.
std::pair<DomainModel, ProblemModel> lift_constants(const DomainModel& d,
                                                    const ProblemModel& p);

// Round-trippable pretty printers.
std::string print_domain(const DomainModel& d);
std::string print_problem(const ProblemModel& p);

// Cross-checks a problem against its domain (arities, objects in init).
void validate_problem(const DomainModel& d, const ProblemModel& p);

}  // namespace dla

#endif

#ifndef DLA_REPORT_HPP
#define DLA_REPORT_HPP

#include <string>

#include "dla/analysis.hpp"

namespace dla {

// The "TIM:"-sectioned text report.
std::string render_text(const Analysis& a);

// Machine-readable twin of the text report (types, invariants, attribute
// spaces, parameter restrictions), as a JSON document.
std::string render_json(const Analysis& a);

// Helpers shared with tests.
std::string type_union_name(const std::vector<int>& types);
std::string render_rules_dump(const Analysis& a);
std::string render_spaces_dump(const Analysis& a);

}  // namespace dla

#endif

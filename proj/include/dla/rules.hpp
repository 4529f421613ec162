#ifndef DLA_RULES_HPP
#define DLA_RULES_HPP

#include <string>
#include <vector>

#include "dla/bag.hpp"
#include "dla/model.hpp"

namespace dla {

struct Origin {
    std::string schema;
    std::string param;
    bool operator==(const Origin&) const = default;
};

// Property Relating Structure: how one parameter's properties are related by
// one schema.
struct PRS {
    Bag precs;
    Bag deleted_precs;
    Bag add_elements;
    Origin origin;
};

enum class RuleKind { state, increasing, decreasing };

struct TransitionRule {
    Bag enablers;
    Bag start;   // empty == null for increasing rules
    Bag finish;  // empty == null for decreasing rules
    RuleKind kind = RuleKind::state;
    Origin origin;

    bool is_attribute() const { return kind != RuleKind::state; }
};

// Paper notation: "E => S -> F" with "null" for empty bags and the enabler
// arrow omitted when there are no enablers.
std::string to_string(const TransitionRule& r);

struct PropertyClass {
    int id = 0;
    std::vector<Property> members;  // canonical order
};

PRS build_prs(const OperatorSchema& s, const std::string& param);
std::vector<PRS> split_prs(const PRS& p);
std::vector<TransitionRule> prs_to_rules(const PRS& p);

// All rules for a domain: per schema, per parameter, split then converted.
std::vector<TransitionRule> build_rules(const DomainModel& d);

// Union-find over properties co-occurring in any rule's start ⊕ finish.
// Enablers are ignored; enabler-only/static properties are not members.
std::vector<PropertyClass> unite(const std::vector<TransitionRule>& rules);

}  // namespace dla

#endif

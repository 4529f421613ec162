#ifndef DLA_MODEL_HPP
#define DLA_MODEL_HPP

#include <string>
#include <vector>

namespace dla {

// A (possibly ground) atom. Variables carry their '?' prefix so that
// constants and variables can share one representation.
struct Atom {
    std::string pred;
    std::vector<std::string> args;

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Atom& a);

struct OperatorSchema {
    std::string name;
    std::vector<std::string> params;  // with '?' prefix
    std::vector<Atom> pre;            // sets, kept sorted & deduplicated
    std::vector<Atom> add;
    std::vector<Atom> del;
};

struct DomainModel {
    std::string name;
    std::vector<std::pair<std::string, int>> predicates;  // (name, arity)
    std::vector<OperatorSchema> schemas;

    int arity_of(const std::string& pred) const;  // -1 if undeclared
};

struct ProblemModel {
    std::string name;
    std::string domain_name;
    std::vector<std::string> objects;  // file order; fixes type numbering
    std::vector<Atom> init;            // set, sorted
    std::vector<Atom> goal;            // parsed for the oracle only
};

}  // namespace dla

#endif

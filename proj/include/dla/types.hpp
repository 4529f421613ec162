#ifndef DLA_TYPES_HPP
#define DLA_TYPES_HPP

#include <map>
#include <string>
#include <vector>

#include "dla/spaces.hpp"

namespace dla {

// One bit per primary space, in space-creation order. mixed_retired spaces
// keep their bit; sub-spaces never get one.
using TypeVector = std::vector<uint8_t>;

struct TypeInfo {
    int id = 0;
    TypeVector vec;
    std::vector<std::string> objects;  // problem object order
};

struct TypeTable {
    std::vector<TypeInfo> types;  // T0.. by first occurrence over objects
    std::map<std::string, int> of_object;
    // (sub, super) pairs: bits(super) ⊂ bits(sub), both inhabited.
    std::vector<std::pair<int, int>> subtype_edges;

    int type_of(const std::string& o) const;
    const TypeVector& vec_of(int t) const { return types[t].vec; }
};

// bits(b) ⊆ bits(a): every space of b is a space of a.
bool vector_subsumes(const TypeVector& a, const TypeVector& b);

TypeTable infer_types(const std::vector<Space>& spaces,
                      const std::vector<std::string>& objects);

struct TypedParam {
    enum Kind { type_union, polymorphic, no_instances } kind = polymorphic;
    std::vector<int> types;  // sorted type ids, kind == type_union only
};

struct TypedSchema {
    std::string name;
    std::vector<std::string> params;
    std::vector<TypedParam> param_types;
};

// Each parameter's admissible types: the types whose vectors have every bit
// of the spaces owning the parameter's precondition properties. Parameters
// with no preconditions are polymorphic; parameters whose precondition
// properties have no owning space fall back to the types of the init
// satisfiers of those (static) preconditions.
std::vector<TypedSchema> parameter_types(const DomainModel& d,
                                         const std::vector<Space>& spaces,
                                         const OwnerMap& owners,
                                         const TypeTable& tt,
                                         const std::vector<Atom>& init);

}  // namespace dla

#endif

#include "dla/types.hpp"

#include <algorithm>
#include <set>

namespace dla {

int TypeTable::type_of(const std::string& o) const {
    auto it = of_object.find(o);
    return it == of_object.end() ? -1 : it->second;
}

bool vector_subsumes(const TypeVector& a, const TypeVector& b) {
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] && !a[i]) return false;
    return true;
}

TypeTable infer_types(const std::vector<Space>& spaces,
                      const std::vector<std::string>& objects) {
    TypeTable tt;
    for (const auto& o : objects) {
        TypeVector v(spaces.size(), 0);
        for (const auto& s : spaces)
            if (s.has_object(o)) v[s.id] = 1;
        int id = -1;
        for (const auto& t : tt.types)
            if (t.vec == v) {
                id = t.id;
                break;
            }
        if (id < 0) {
            id = static_cast<int>(tt.types.size());
            tt.types.push_back({id, v, {}});
        }
        tt.types[id].objects.push_back(o);
        tt.of_object[o] = id;
    }
    for (const auto& a : tt.types)
        for (const auto& b : tt.types)
            if (a.id != b.id && vector_subsumes(a.vec, b.vec) && !(a.vec == b.vec))
                tt.subtype_edges.emplace_back(a.id, b.id);
    return tt;
}

std::vector<TypedSchema> parameter_types(const DomainModel& d,
                                         const std::vector<Space>& spaces,
                                         const OwnerMap& owners,
                                         const TypeTable& tt,
                                         const std::vector<Atom>& init) {
    std::vector<TypedSchema> out;
    for (const auto& s : d.schemas) {
        TypedSchema ts;
        ts.name = s.name;
        ts.params = s.params;
        for (const auto& param : s.params) {
            std::vector<Property> props;
            for (const auto& a : s.pre)
                for (size_t i = 0; i < a.args.size(); ++i)
                    if (a.args[i] == param)
                        props.push_back({a.pred, static_cast<int>(i) + 1});
            TypedParam tp;
            if (props.empty()) {
                tp.kind = TypedParam::polymorphic;
                ts.param_types.push_back(tp);
                continue;
            }
            TypeVector need(spaces.size(), 0);
            bool any_owned = false;
            std::vector<Property> unowned;
            for (const auto& p : props) {
                auto it = owners.find(p);
                if (it != owners.end()) {
                    need[it->second] = 1;
                    any_owned = true;
                } else {
                    unowned.push_back(p);
                }
            }
            std::set<int> types;
            if (any_owned) {
                for (const auto& t : tt.types)
                    if (vector_subsumes(t.vec, need)) types.insert(t.id);
            } else {
                // Pure static preconditions with no owning space: fall back
                // to the types of the initial satisfiers.
                for (const auto& p : unowned)
                    for (const auto& a : init)
                        if (a.pred == p.pred &&
                            static_cast<int>(a.args.size()) >= p.pos) {
                            int t = tt.type_of(a.args[p.pos - 1]);
                            if (t >= 0) types.insert(t);
                        }
            }
            if (types.empty()) {
                tp.kind = TypedParam::no_instances;
            } else {
                tp.kind = TypedParam::type_union;
                tp.types.assign(types.begin(), types.end());
            }
            ts.param_types.push_back(tp);
        }
        out.push_back(std::move(ts));
    }
    return out;
}

}  // namespace dla

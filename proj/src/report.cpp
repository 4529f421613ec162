#include "dla/report.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace dla {

namespace {

std::vector<int> type_union_of(const std::vector<std::string>& objs,
                               const TypeTable& tt) {
    std::set<int> ts;
    for (const auto& o : objs) {
        int t = tt.type_of(o);
        if (t >= 0) ts.insert(t);
    }
    return {ts.begin(), ts.end()};
}

const char* family_name(InvariantFamily f) {
    switch (f) {
        case InvariantFamily::identity: return "identity";
        case InvariantFamily::membership: return "membership";
        case InvariantFamily::uniqueness: return "uniqueness";
        case InvariantFamily::fixed_resource: return "fixed_resource";
    }
    return "";
}

const char* kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::property: return "property";
        case SpaceKind::attribute: return "attribute";
        case SpaceKind::mixed_retired: return "mixed";
    }
    return "";
}

// The "can/all have property" body for one property of an attribute space:
// the same per-atom existential shape the invariants use.
std::string attribute_line(const Property& p, const Analysis& a) {
    int arity = a.domain.arity_of(p.pred);
    Atom atom;
    atom.pred = p.pred;
    atom.args.resize(arity);
    std::string prefix;
    int n = 0;
    for (int i = 1; i <= arity; ++i) {
        if (i == p.pos) {
            atom.args[i - 1] = "x";
            continue;
        }
        std::string v = "y" + std::to_string(++n);
        atom.args[i - 1] = v;
        auto it = a.owners.find({p.pred, i});
        std::vector<int> ts;
        if (it != a.owners.end())
            ts = type_union_of(a.spaces[it->second].objects, a.types);
        prefix += "Exists " + v;
        if (!ts.empty()) prefix += ":" + type_union_name(ts);
        prefix += ". ";
    }
    return prefix + to_string(atom);
}

std::string param_sig(const TypedSchema& s) {
    std::string line = s.name + "(";
    for (size_t i = 0; i < s.params.size(); ++i) {
        if (i) line += ", ";
        line += "x" + std::to_string(i + 1);
        const TypedParam& tp = s.param_types[i];
        if (tp.kind == TypedParam::type_union)
            line += ":" + type_union_name(tp.types);
        else if (tp.kind == TypedParam::no_instances)
            line += ":NONE";
    }
    return line + ")";
}

}  // namespace

std::string type_union_name(const std::vector<int>& types) {
    std::string s;
    for (size_t i = 0; i < types.size(); ++i) {
        if (i) s += " U ";
        s += "T" + std::to_string(types[i]);
    }
    return s;
}

std::string render_text(const Analysis& a) {
    std::ostringstream os;
    os << "TIM: Domain analysis complete for " << a.domain.name << "\n";
    for (const auto& w : a.diags.warnings) os << "TIM: WARNING: " << w << "\n";

    os << "TIM: TYPES:\n";
    for (const auto& t : a.types.types) {
        os << "Type T" << t.id << " = {";
        for (size_t i = 0; i < t.objects.size(); ++i)
            os << (i ? ", " : "") << t.objects[i];
        os << "}\n";
    }

    os << "TIM: STATE INVARIANTS:\n";
    for (const auto& inv : a.invariants)
        if (!inv.from_subspace && inv.family != InvariantFamily::fixed_resource)
            os << render(*inv.formula, a.types) << "\n";

    os << "TIM: DOMAIN INVARIANTS:\n";
    for (const auto& inv : a.invariants)
        if (inv.family == InvariantFamily::fixed_resource)
            os << render(*inv.formula, a.types) << "\n";

    os << "TIM: ATTRIBUTE SPACES:\n";
    for (const auto& s : a.spaces) {
        if (s.kind != SpaceKind::attribute || s.objects.empty()) continue;
        std::string tu = type_union_name(type_union_of(s.objects, a.types));
        if (s.singleton_seed && s.static_pred) {
            os << "Objects, x, in " << tu
               << " all have property: " << attribute_line(s.properties[0], a)
               << ";\n";
        } else {
            os << "Objects, x, in " << tu << " can have property:\n";
            for (const auto& p : s.properties)
                os << "    " << attribute_line(p, a) << ";\n";
        }
    }

    os << "TIM: OPERATOR PARAMETER RESTRICTIONS:\n";
    for (const auto& s : a.typed_schemas) os << param_sig(s) << "\n";

    os << "TIM: ADDITIONAL STATE INVARIANTS, USING SUB-SPACE ANALYSIS:\n";
    // Sub-space results come in blocks, one per (space, type); a block is
    // reported in full unless every invariant in it is subsumed.
    for (size_t i = 0; i < a.invariants.size();) {
        const Invariant& lead = a.invariants[i];
        if (!lead.from_subspace) {
            ++i;
            continue;
        }
        size_t j = i;
        bool all_subsumed = true;
        while (j < a.invariants.size() && a.invariants[j].from_subspace &&
               a.invariants[j].space == lead.space &&
               a.invariants[j].subspace_type == lead.subspace_type) {
            if (!a.invariants[j].subsumed) all_subsumed = false;
            ++j;
        }
        if (!all_subsumed)
            for (size_t k = i; k < j; ++k)
                os << render(*a.invariants[k].formula, a.types) << "\n";
        i = j;
    }
    return os.str();
}

std::string render_json(const Analysis& a) {
    nlohmann::json j;
    j["domain"] = a.domain.name;
    j["problem"] = a.problem.name;
    j["warnings"] = a.diags.warnings;
    j["types"] = nlohmann::json::array();
    for (const auto& t : a.types.types) {
        nlohmann::json jt;
        jt["id"] = t.id;
        jt["objects"] = t.objects;
        std::vector<int> bits;
        for (size_t i = 0; i < t.vec.size(); ++i)
            if (t.vec[i]) bits.push_back(static_cast<int>(i));
        jt["spaces"] = bits;
        j["types"].push_back(jt);
    }
    j["subtypes"] = nlohmann::json::array();
    for (const auto& [sub, super] : a.types.subtype_edges)
        j["subtypes"].push_back({{"sub", sub}, {"super", super}});
    j["invariants"] = nlohmann::json::array();
    for (const auto& inv : a.invariants) {
        nlohmann::json ji;
        ji["family"] = family_name(inv.family);
        ji["text"] = render(*inv.formula, a.types);
        if (inv.space >= 0) ji["space"] = inv.space;
        if (!inv.pred.empty()) ji["predicate"] = inv.pred;
        ji["from_subspace"] = inv.from_subspace;
        if (inv.from_subspace) {
            ji["subspace_type"] = inv.subspace_type;
            ji["subsumed"] = inv.subsumed;
        }
        j["invariants"].push_back(ji);
    }
    j["spaces"] = nlohmann::json::array();
    for (const auto& s : a.spaces) {
        nlohmann::json js;
        js["id"] = s.id;
        js["kind"] = kind_name(s.kind);
        std::vector<std::string> props;
        for (const auto& p : s.properties) props.push_back(to_string(p));
        js["properties"] = props;
        js["objects"] = s.objects;
        if (s.is_property_space()) {
            std::vector<std::string> states;
            for (const auto& st : s.states) states.push_back(to_string(st));
            js["states"] = states;
        }
        j["spaces"].push_back(js);
    }
    j["parameter_restrictions"] = nlohmann::json::array();
    for (const auto& s : a.typed_schemas)
        j["parameter_restrictions"].push_back(param_sig(s));
    return j.dump(2) + "\n";
}

std::string render_rules_dump(const Analysis& a) {
    std::ostringstream os;
    for (const auto& r : a.rules)
        os << r.origin.schema << "/" << r.origin.param << ": " << to_string(r)
           << "\n";
    return os.str();
}

std::string render_spaces_dump(const Analysis& a) {
    std::ostringstream os;
    auto dump = [&](const Space& s, bool sub) {
        os << (sub ? "sub-space of " : "space ") << s.id;
        if (sub) os << " (type T" << s.subspace_type << ")";
        os << " [" << kind_name(s.kind) << "]\n  properties:";
        for (const auto& p : s.properties) os << " " << to_string(p);
        os << "\n  objects:";
        for (const auto& o : s.objects) os << " " << o;
        os << "\n";
        if (s.is_property_space()) {
            os << "  states:";
            for (const auto& st : s.states) os << " " << to_string(st);
            os << "\n";
        }
        for (const auto& r : s.rules) os << "  rule: " << to_string(r) << "\n";
    };
    for (const auto& s : a.spaces) dump(s, false);
    for (const auto& s : a.subspaces) dump(s, true);
    return os.str();
}

}  // namespace dla

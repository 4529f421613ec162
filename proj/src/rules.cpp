#include "dla/rules.hpp"

#include <map>

namespace dla {

std::string to_string(const TransitionRule& r) {
    std::string s;
    if (!r.enablers.empty()) {
        std::string e;
        for (size_t i = 0; i < r.enablers.items().size(); ++i) {
            if (i) e += ", ";
            e += to_string(r.enablers.items()[i]);
        }
        s += e + " => ";
    }
    auto side = [](const Bag& b) {
        if (b.empty()) return std::string("null");
        std::string t;
        for (size_t i = 0; i < b.items().size(); ++i) {
            if (i) t += ", ";
            t += to_string(b.items()[i]);
        }
        return t;
    };
    return s + side(r.start) + " -> " + side(r.finish);
}

namespace {

// Properties of `param` mentioned by `atoms`, one occurrence per mention.
Bag properties_of(const std::vector<Atom>& atoms, const std::string& param) {
    Bag b;
    for (const auto& a : atoms)
        for (size_t i = 0; i < a.args.size(); ++i)
            if (a.args[i] == param)
                b.insert(Property{a.pred, static_cast<int>(i) + 1});
    return b;
}

}  // namespace

PRS build_prs(const OperatorSchema& s, const std::string& param) {
    PRS p;
    p.precs = properties_of(s.pre, param);
    p.deleted_precs = properties_of(s.del, param);
    p.add_elements = properties_of(s.add, param);
    p.origin = {s.name, param};
    return p;
}

std::vector<PRS> split_prs(const PRS& p) {
    Bag exchanged = p.deleted_precs.intersect(p.add_elements);
    std::vector<PRS> out;
    for (const auto& c : exchanged.items()) {
        PRS piece;
        piece.precs = p.precs;
        piece.deleted_precs = Bag{{c}};
        piece.add_elements = Bag{{c}};
        piece.origin = p.origin;
        out.push_back(piece);
    }
    PRS rest;
    rest.precs = p.precs;
    rest.deleted_precs = p.deleted_precs.diff(exchanged);
    rest.add_elements = p.add_elements.diff(exchanged);
    rest.origin = p.origin;
    if (!rest.deleted_precs.empty() || !rest.add_elements.empty())
        out.push_back(rest);
    return out;
}

std::vector<TransitionRule> prs_to_rules(const PRS& p) {
    std::vector<TransitionRule> out;
    Bag enablers = p.precs.diff(p.deleted_precs);
    if (p.deleted_precs.empty() && p.add_elements.empty()) return out;
    if (p.add_elements.empty()) {
        out.push_back({enablers, p.deleted_precs, Bag{}, RuleKind::decreasing,
                       p.origin});
    } else if (p.deleted_precs.empty()) {
        // One increasing rule per added occurrence.
        for (const auto& a : p.add_elements.items())
            out.push_back(
                {enablers, Bag{}, Bag{{a}}, RuleKind::increasing, p.origin});
    } else {
        out.push_back({enablers, p.deleted_precs, p.add_elements,
                       RuleKind::state, p.origin});
    }
    return out;
}

std::vector<TransitionRule> build_rules(const DomainModel& d) {
    std::vector<TransitionRule> out;
    for (const auto& s : d.schemas)
        for (const auto& param : s.params)
            for (const auto& piece : split_prs(build_prs(s, param)))
                for (auto& r : prs_to_rules(piece)) out.push_back(std::move(r));
    return out;
}

namespace {

struct DSU {
    std::map<Property, Property> parent;
    Property find(const Property& p) {
        auto it = parent.find(p);
        if (it == parent.end()) {
            parent[p] = p;
            return p;
        }
        if (it->second == p) return p;
        Property root = find(it->second);
        parent[p] = root;
        return root;
    }
    void unite_(const Property& a, const Property& b) {
        Property ra = find(a), rb = find(b);
        if (!(ra == rb)) parent[ra] = rb;
    }
};

}  // namespace

std::vector<PropertyClass> unite(const std::vector<TransitionRule>& rules) {
    DSU dsu;
    for (const auto& r : rules) {
        Bag both = r.start.sum(r.finish);
        const auto& xs = both.items();
        if (xs.empty()) continue;
        dsu.find(xs[0]);
        for (size_t i = 1; i < xs.size(); ++i) dsu.unite_(xs[0], xs[i]);
    }
    // Class ids follow the first appearance of any member, in rule order.
    std::vector<PropertyClass> classes;
    std::map<Property, int> class_of_root;
    for (const auto& r : rules) {
        const Bag both = r.start.sum(r.finish);
        for (const auto& p : both.items()) {
            Property root = dsu.find(p);
            if (!class_of_root.count(root)) {
                class_of_root[root] = static_cast<int>(classes.size());
                classes.push_back({static_cast<int>(classes.size()), {}});
            }
        }
    }
    for (const auto& [p, _] : dsu.parent) {
        int id = class_of_root.at(dsu.find(p));
        classes[id].members.push_back(p);
    }
    for (auto& c : classes) std::sort(c.members.begin(), c.members.end());
    for (auto& c : classes)
        c.members.erase(std::unique(c.members.begin(), c.members.end()),
                        c.members.end());
    return classes;
}

}  // namespace dla

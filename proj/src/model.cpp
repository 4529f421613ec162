#include "dla/model.hpp"

namespace dla {

std::string to_string(const Atom& a) {
    std::string s = a.pred + "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (i) s += ",";
        s += a.args[i];
    }
    return s + ")";
}

int DomainModel::arity_of(const std::string& pred) const {
    for (const auto& [name, ar] : predicates)
        if (name == pred) return ar;
    return -1;
}

}  // namespace dla

#include "dla/bag.hpp"

namespace dla {

std::string to_string(const Property& p) {
    return p.pred + "_" + std::to_string(p.pos);
}

size_t Bag::count(const Property& p) const {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), p);
    return static_cast<size_t>(hi - lo);
}

Bag Bag::sum(const Bag& o) const {
    std::vector<Property> out;
    out.reserve(items_.size() + o.items_.size());
    std::merge(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
               std::back_inserter(out));
    Bag b;
    b.items_ = std::move(out);
    return b;
}

Bag Bag::diff(const Bag& o) const {
    std::vector<Property> out;
    std::set_difference(items_.begin(), items_.end(), o.items_.begin(),
                        o.items_.end(), std::back_inserter(out));
    Bag b;
    b.items_ = std::move(out);
    return b;
}

Bag Bag::intersect(const Bag& o) const {
    std::vector<Property> out;
    std::set_intersection(items_.begin(), items_.end(), o.items_.begin(),
                          o.items_.end(), std::back_inserter(out));
    Bag b;
    b.items_ = std::move(out);
    return b;
}

bool Bag::includes(const Bag& o) const {
    return std::includes(items_.begin(), items_.end(), o.items_.begin(),
                         o.items_.end());
}

std::vector<Property> Bag::support() const {
    std::vector<Property> out;
    for (const auto& p : items_)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    return out;
}

std::string to_string(const Bag& b) {
    if (b.empty()) return "null";
    std::string s = "[";
    const auto& xs = b.items();
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += to_string(xs[i]);
    }
    return s + "]";
}

}  // namespace dla

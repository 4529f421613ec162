#ifndef DLA_BAG_HPP
#define DLA_BAG_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace dla {

// A predicate subscripted by an argument position (1-based).
struct Property {
    std::string pred;
    int pos = 1;

    bool operator==(const Property&) const = default;
    auto operator<=>(const Property&) const = default;
};

std::string to_string(const Property& p);

// Multiset of properties kept in canonical order (pred, then position), so
// that equality of bags is plain vector equality.
class Bag {
   public:
    Bag() = default;
    Bag(std::initializer_list<Property> xs) : items_(xs) { normalize(); }
    explicit Bag(std::vector<Property> xs) : items_(std::move(xs)) { normalize(); }

    void insert(const Property& p) {
        items_.insert(std::upper_bound(items_.begin(), items_.end(), p), p);
    }

    bool empty() const { return items_.empty(); }
    size_t size() const { return items_.size(); }
    const std::vector<Property>& items() const { return items_; }

    size_t count(const Property& p) const;
    bool contains(const Property& p) const { return count(p) > 0; }

    Bag sum(const Bag& o) const;        // ⊕
    Bag diff(const Bag& o) const;       // ⊖ (saturating)
    Bag intersect(const Bag& o) const;  // ⊗ (min of counts)
    bool includes(const Bag& o) const;  // o ⊑ this
    bool strictly_includes(const Bag& o) const {
        return size() > o.size() && includes(o);
    }

    // Distinct properties, in canonical order.
    std::vector<Property> support() const;

    bool operator==(const Bag&) const = default;
    auto operator<=>(const Bag&) const = default;

   private:
    void normalize() { std::sort(items_.begin(), items_.end()); }
    std::vector<Property> items_;
};

// Paper-style rendering: "[at_1, in_1]" / "null" for the empty bag.
std::string to_string(const Bag& b);

}  // namespace dla

#endif

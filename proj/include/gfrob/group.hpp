#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gfrob {

// Element of a grading group in the canonical flat encoding defined by its
// GroupModel: one slot for Z / Z/n / table index, n slots of bits for Z2^n,
// concatenated slots for products. Equal elements have identical encodings,
// so values can be used directly as map keys.
struct GroupValue {
    std::vector<int64_t> enc;

    auto operator<=>(const GroupValue&) const = default;
};

// The grading group G. Models: the integers, Z/n, Z2^n (componentwise xor),
// finite products, and finite groups given by a Cayley table. Immutable after
// construction; elements do not reference their model, every operation takes
// the model explicitly.
class GroupModel {
public:
    enum class Kind { Integers, Cyclic, BoolVec, Product, Table };

    static GroupModel integers();
    static GroupModel cyclic(int64_t n);
    static GroupModel bool_vec(int n);
    static GroupModel product(std::vector<GroupModel> parts);
    // names[i] are element labels; cayley[g][h] is the index of g*h. Rejects
    // non-Latin-square, identity-free, or non-associative tables, naming a
    // witness. Throws InvalidTable.
    static GroupModel table(std::vector<std::string> names, std::vector<std::vector<int>> cayley);

    Kind kind() const { return kind_; }
    int flat_width() const { return width_; }
    const std::vector<GroupModel>& parts() const { return parts_; } // Product only

    GroupValue identity() const;
    GroupValue compose(const GroupValue& a, const GroupValue& b) const;
    GroupValue invert(const GroupValue& a) const;
    bool contains(const GroupValue& a) const;

    bool finite() const;
    size_t order() const;                    // throws Error on infinite models
    std::vector<GroupValue> elements() const; // sorted; throws Error on infinite models

    // Grammar: "Z" | "Z/n" | "Z2^n" | "product(g1,g2,...)" |
    // "table{n1 n2 ...; row1; row2; ...}" (rows list products in name order).
    std::string describe() const;
    static GroupModel parse(std::string_view text);

    std::string render_element(const GroupValue& a) const;
    GroupValue parse_element(std::string_view text) const;

    bool operator==(const GroupModel& o) const { return describe() == o.describe(); }

private:
    GroupModel() = default;
    void check(const GroupValue& a) const;

    Kind kind_ = Kind::Integers;
    int width_ = 1;
    int64_t n_ = 0;                        // Cyclic modulus or BoolVec length
    std::vector<GroupModel> parts_;        // Product
    std::vector<std::string> names_;       // Table
    std::vector<std::vector<int>> cayley_; // Table
    std::vector<int> inverse_;             // Table
    int identity_index_ = 0;               // Table
};

} // namespace gfrob

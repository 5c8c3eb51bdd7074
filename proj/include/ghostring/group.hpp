#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ghostring {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table over element indices 0..n-1.
/// Immutable after construction; the subgroup/conjugacy caches are filled once
/// under a lock and are then safe for concurrent reads.
class FiniteGroup {
public:
    static constexpr int kDefaultMaxOrder = 120;

    /// Z/n under addition; identity 0, distinguished generator 1.
    static GroupPtr cyclic(int n);
    /// Permutations of {0..n-1}, n <= 5, indexed by lexicographic rank.
    static GroupPtr symmetric(int n);
    /// Dihedral group of the given (even) order.
    static GroupPtr dihedral(int order);
    /// Cayley-file format: line 1 = n, then n rows of n 0-based indices.
    static GroupPtr from_cayley_file(const std::string& path);
    /// Validates the group axioms: reports a violating triple on failure.
    static GroupPtr from_table(std::vector<int> table, int order, std::string label);
    /// Element index of (g, h) is g*|B|+h; this encoding is part of the contract.
    static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }
    /// g x g^{-1}
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    const std::string& label() const { return label_; }
    bool abelian() const;
    int element_order(int x) const;

    bool is_product() const { return static_cast<bool>(left_); }
    const GroupPtr& left_factor() const { return left_; }
    const GroupPtr& right_factor() const { return right_; }
    int pair_first(int e) const { return e / right_->order(); }
    int pair_second(int e) const { return e % right_->order(); }
    int pair_encode(int g, int h) const { return g * right_->order() + h; }

    /// All subgroups in canonical (sorted element list) form, sorted
    /// lexicographically. Throws if order() exceeds max_order.
    const std::vector<std::vector<int>>& subgroups(int max_order = kDefaultMaxOrder) const;

    struct ConjClasses {
        std::vector<std::vector<int>> classes;  // subgroup indices per class
        std::vector<int> class_of;              // subgroup index -> class index
        std::vector<int> rep;                   // class index -> representative subgroup index
    };
    const ConjClasses& subgroup_classes(int max_order = kDefaultMaxOrder) const;

    /// Index of a canonical subgroup element list in subgroups(), -1 if absent.
    int subgroup_index(const std::vector<int>& elements) const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::string label_;
    GroupPtr left_, right_;

    mutable std::mutex cache_mutex_;
    mutable bool subs_built_ = false;
    mutable std::vector<std::vector<int>> subs_;
    mutable std::vector<int> sub_index_;  // flat lookup helper, see .cpp
    mutable bool classes_built_ = false;
    mutable ConjClasses classes_;

    void build_subgroups_locked(int max_order) const;
};

/// A subgroup as a canonical strictly-sorted index set within a parent group.
struct SubgroupSet {
    GroupPtr parent;
    std::vector<int> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
    bool contains_all(const SubgroupSet& other) const;
    bool operator==(const SubgroupSet& o) const { return elements == o.elements; }
    bool operator!=(const SubgroupSet& o) const { return !(*this == o); }
};

struct Section {
    SubgroupSet upper;  // P
    SubgroupSet lower;  // K, normal in P
};

/// P/K with coset blocks identified by their minimal element index.
struct QuotientGroup {
    Section base;
    std::vector<std::vector<int>> blocks;  // sorted blocks, ordered by min element
    std::vector<int> table;                // block-index Cayley table
    int identity_block = 0;

    int size() const { return static_cast<int>(blocks.size()); }
    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * blocks.size() + b]; }
    int block_of(int element) const;
};

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
std::vector<int> conjugate_subgroup(const FiniteGroup& g, const std::vector<int>& elements, int by);
bool is_normal_in(const SubgroupSet& k, const SubgroupSet& p);
SubgroupSet normalizer(const GroupPtr& g, const SubgroupSet& u);
SubgroupSet trivial_subgroup(const GroupPtr& g);
SubgroupSet full_subgroup(const GroupPtr& g);
SubgroupSet make_subgroup(const GroupPtr& g, std::vector<int> elements);

QuotientGroup quotient(const Section& s);

/// Parses built-in group names: C<n>, S<n>, D<2n>, and x-products like C2xC2.
GroupPtr parse_group_name(const std::string& name);

}  // namespace ghostring

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ghostring/group.hpp"
#include "ghostring/poset.hpp"
#include "ghostring/rational.hpp"

namespace ghostring {

/// The subgroup lattice of G x H with Goursat projections, conjugacy classes,
/// inclusion poset and Moebius data. This is the working context behind
/// B(G,H) and the ghost space QS_{G x H}.
///
/// Everything is immutable after create(); lazily filled caches (Moebius
/// columns, downsets) are guarded and single-assignment.
class BisetSpace : public std::enable_shared_from_this<BisetSpace> {
public:
    static std::shared_ptr<BisetSpace> create(GroupPtr left, GroupPtr right,
                                              int max_order = FiniteGroup::kDefaultMaxOrder);

    const GroupPtr& left() const { return left_; }
    const GroupPtr& right() const { return right_; }
    const GroupPtr& product() const { return prod_; }
    int max_order() const { return max_order_; }

    int count() const { return static_cast<int>(subs_.size()); }
    const std::vector<int>& subgroup(int i) const { return subs_[i]; }
    int subgroup_order(int i) const { return static_cast<int>(subs_[i].size()); }
    SubgroupSet subgroup_set(int i) const { return SubgroupSet{prod_, subs_[i]}; }
    int index_of(const std::vector<int>& elements) const;

    bool leq(int a, int b) const;                 // inclusion
    const std::vector<int>& downset(int i) const; // subgroups contained in i
    const FinitePoset& poset() const { return poset_; }
    const std::vector<std::pair<int, long long>>& moebius_column(int top) const;

    int class_count() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int i) const { return class_of_[i]; }
    int class_rep_of(int i) const { return class_reps_[class_of_[i]]; }
    const std::vector<int>& class_reps() const { return class_reps_; }
    const std::vector<int>& class_members(int cls) const { return class_members_[cls]; }
    int conjugate_index(int i, int by) const;

    // Goursat projections; ids index the factor groups' own subgroup lists.
    int p1_id(int i) const { return proj_[i].p1; }
    int k1_id(int i) const { return proj_[i].k1; }
    int p2_id(int i) const { return proj_[i].p2; }
    int k2_id(int i) const { return proj_[i].k2; }
    int p1_order(int i) const;
    int k1_order(int i) const;
    int p2_order(int i) const;
    int k2_order(int i) const;
    const std::vector<int>& p1_elements(int i) const;
    const std::vector<int>& p2_elements(int i) const;
    const std::vector<int>& k1_elements(int i) const;
    const std::vector<int>& k2_elements(int i) const;

    /// P(L): subgroups of L with both projections equal to those of L.
    const std::vector<int>& full_projection_downset(int i) const;

private:
    BisetSpace() = default;

    GroupPtr left_, right_, prod_;
    int max_order_ = FiniteGroup::kDefaultMaxOrder;
    std::vector<std::vector<int>> subs_;
    struct Proj {
        int p1, k1, p2, k2;
    };
    std::vector<Proj> proj_;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    std::vector<std::vector<int>> class_members_;
    FinitePoset poset_;

    mutable std::mutex mutex_;
    mutable std::vector<std::optional<std::vector<int>>> downsets_;
    mutable std::vector<std::optional<std::vector<int>>> full_proj_downsets_;
    mutable std::vector<std::optional<std::vector<std::pair<int, long long>>>> moebius_cols_;
};

using SpacePtr = std::shared_ptr<BisetSpace>;

/// Star/kappa machinery between S_{G x H} x S_{H x K} -> S_{G x K}.
/// The three spaces must share group instances pairwise (left/middle/right).
class TripleSpace {
public:
    TripleSpace(SpacePtr gh, SpacePtr hk, SpacePtr gk);

    const SpacePtr& gh() const { return gh_; }
    const SpacePtr& hk() const { return hk_; }
    const SpacePtr& gk() const { return gk_; }
    const GroupPtr& middle() const { return gh_->right(); }

    /// Index in gk of L * M (composition of relations).
    int star_index(int l, int m) const;
    /// |k2(L) ∩ k1(M)| as an integer; kappa(L,M) times |H|.
    long long kappa_numerator(int l, int m) const;
    Rational kappa(int l, int m) const;

    /// Sparse row of the ghost product L ~*_H M over subgroup indices of gk,
    /// computed with the simplified (theorem) structure-constant evaluator.
    const std::vector<std::pair<int, Rational>>& ghost_row(int l, int m) const;

    Rational structure_constant_def(int l, int m, int n) const;
    Rational structure_constant_thm(int l, int m, int n) const;

private:
    SpacePtr gh_, hk_, gk_;
    mutable std::mutex mutex_;
    mutable std::vector<int> star_cache_;          // count(gh) x count(hk), -1 = unknown
    mutable std::vector<long long> kappa_cache_;   // same shape, -1 = unknown
    mutable std::unordered_map<long long, std::vector<std::pair<int, Rational>>> row_cache_;

    int star_index_locked(int l, int m) const;
    long long kappa_numerator_locked(int l, int m) const;
};

/// Cross-checking cache for the structure constants: every entry is evaluated
/// by both the defining Moebius sum and the simplified formula and must agree.
class StructureConstantTable {
public:
    explicit StructureConstantTable(std::shared_ptr<TripleSpace> ts) : ts_(std::move(ts)) {}

    Rational get(int l, int m, int n);
    std::size_t size() const;

private:
    std::shared_ptr<TripleSpace> ts_;
    mutable std::mutex mutex_;
    std::map<std::tuple<int, int, int>, Rational> entries_;
};

}  // namespace ghostring

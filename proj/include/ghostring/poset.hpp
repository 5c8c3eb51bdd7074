#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "ghostring/group.hpp"

namespace ghostring {

/// A finite poset on indices 0..size-1 with a memoized Moebius function.
/// Immutable after construction; the memo table is single-assignment and safe
/// for concurrent reads after a fill (results are identical either way).
class FinitePoset {
public:
    FinitePoset() = default;
    explicit FinitePoset(std::vector<std::vector<bool>> leq);

    int size() const { return static_cast<int>(leq_.size()); }
    bool leq(int x, int y) const { return leq_[x][y]; }

    /// mu(x,y): 0 when x is not below y, else the recursive value.
    long long moebius(int x, int y) const;

    /// All (x, mu(x,y)) with mu != 0, ascending in x.
    std::vector<std::pair<int, long long>> moebius_column(int y) const;

private:
    std::vector<std::vector<bool>> leq_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<long long>> memo_;
    mutable std::vector<std::vector<char>> known_;

    long long moebius_locked(int x, int y) const;
    void check_partial_order() const;
};

FinitePoset subgroup_poset(const GroupPtr& g, int max_order = FiniteGroup::kDefaultMaxOrder);
FinitePoset induced_subposet(const FinitePoset& p, const std::vector<int>& subset);
FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q);

/// Index of (x, y) in the product poset of sizes (|p|, |q|): x*|q|+y.
inline int product_index(int x, int y, int q_size) { return x * q_size + y; }

}  // namespace ghostring

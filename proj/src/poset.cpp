#include "ghostring/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghostring {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
    for (const auto& row : leq_)
        if (row.size() != leq_.size()) throw std::invalid_argument("leq relation is not square");
    check_partial_order();
    memo_.assign(leq_.size(), std::vector<long long>(leq_.size(), 0));
    known_.assign(leq_.size(), std::vector<char>(leq_.size(), 0));
}

void FinitePoset::check_partial_order() const {
    const int n = size();
    for (int x = 0; x < n; ++x) {
        if (!leq_[x][x]) throw std::invalid_argument("leq not reflexive");
        for (int y = 0; y < n; ++y) {
            if (x != y && leq_[x][y] && leq_[y][x])
                throw std::invalid_argument("leq not antisymmetric");
            if (!leq_[x][y]) continue;
            for (int z = 0; z < n; ++z)
                if (leq_[y][z] && !leq_[x][z]) throw std::invalid_argument("leq not transitive");
        }
    }
}

long long FinitePoset::moebius_locked(int x, int y) const {
    if (!leq_[x][y]) return 0;
    if (known_[x][y]) return memo_[x][y];
    long long value;
    if (x == y) {
        value = 1;
    } else {
        // sum_{x <= z <= y} mu(x,z) = 0 for x < y
        long long acc = 0;
        for (int z = 0; z < size(); ++z)
            if (z != y && leq_[x][z] && leq_[z][y]) acc += moebius_locked(x, z);
        value = -acc;
    }
    memo_[x][y] = value;
    known_[x][y] = 1;
    return value;
}

long long FinitePoset::moebius(int x, int y) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return moebius_locked(x, y);
}

std::vector<std::pair<int, long long>> FinitePoset::moebius_column(int y) const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::pair<int, long long>> out;
    for (int x = 0; x < size(); ++x) {
        const long long m = moebius_locked(x, y);
        if (m != 0) out.emplace_back(x, m);
    }
    return out;
}

FinitePoset subgroup_poset(const GroupPtr& g, int max_order) {
    const auto& subs = g->subgroups(max_order);
    const int n = static_cast<int>(subs.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            leq[x][y] = std::includes(subs[y].begin(), subs[y].end(), subs[x].begin(), subs[x].end());
    return FinitePoset(std::move(leq));
}

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<int>& subset) {
    const int n = static_cast<int>(subset.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) {
        if (subset[x] < 0 || subset[x] >= p.size())
            throw std::invalid_argument("induced_subposet: index out of range");
        for (int y = 0; y < n; ++y) leq[x][y] = p.leq(subset[x], subset[y]);
    }
    return FinitePoset(std::move(leq));
}

FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
    const int n = p.size() * q.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            for (int c = 0; c < p.size(); ++c)
                for (int d = 0; d < q.size(); ++d)
                    leq[product_index(a, b, q.size())][product_index(c, d, q.size())] =
                        p.leq(a, c) && q.leq(b, d);
    return FinitePoset(std::move(leq));
}

}  // namespace ghostring

#include "ghostring/spaces.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ghostring/goursat.hpp"

namespace ghostring {

std::shared_ptr<BisetSpace> BisetSpace::create(GroupPtr left, GroupPtr right, int max_order) {
    auto sp = std::shared_ptr<BisetSpace>(new BisetSpace());
    sp->left_ = left;
    sp->right_ = right;
    sp->max_order_ = max_order;
    sp->prod_ = FiniteGroup::direct_product(left, right);
    left->subgroups(max_order);
    right->subgroups(max_order);
    sp->subs_ = sp->prod_->subgroups(max_order);
    const auto& classes = sp->prod_->subgroup_classes(max_order);
    sp->class_of_ = classes.class_of;
    sp->class_reps_ = classes.rep;
    sp->class_members_ = classes.classes;
    sp->poset_ = subgroup_poset(sp->prod_, max_order);

    const int n = sp->count();
    sp->proj_.resize(n);
    for (int i = 0; i < n; ++i) {
        std::set<int> p1, p2, k1, k2;
        for (int e : sp->subs_[i]) {
            const int a = sp->prod_->pair_first(e), b = sp->prod_->pair_second(e);
            p1.insert(a);
            p2.insert(b);
            if (b == right->identity()) k1.insert(a);
            if (a == left->identity()) k2.insert(b);
        }
        sp->proj_[i].p1 = left->subgroup_index({p1.begin(), p1.end()});
        sp->proj_[i].k1 = left->subgroup_index({k1.begin(), k1.end()});
        sp->proj_[i].p2 = right->subgroup_index({p2.begin(), p2.end()});
        sp->proj_[i].k2 = right->subgroup_index({k2.begin(), k2.end()});
        if (sp->proj_[i].p1 < 0 || sp->proj_[i].k1 < 0 || sp->proj_[i].p2 < 0 ||
            sp->proj_[i].k2 < 0)
            throw std::logic_error("projection subgroup not found in factor lattice");
    }
    sp->downsets_.resize(n);
    sp->full_proj_downsets_.resize(n);
    sp->moebius_cols_.resize(n);
    return sp;
}

int BisetSpace::index_of(const std::vector<int>& elements) const {
    auto it = std::lower_bound(subs_.begin(), subs_.end(), elements);
    if (it == subs_.end() || *it != elements) return -1;
    return static_cast<int>(it - subs_.begin());
}

bool BisetSpace::leq(int a, int b) const { return poset_.leq(a, b); }

const std::vector<int>& BisetSpace::downset(int i) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!downsets_[i]) {
        std::vector<int> d;
        for (int j = 0; j < count(); ++j)
            if (poset_.leq(j, i)) d.push_back(j);
        downsets_[i] = std::move(d);
    }
    return *downsets_[i];
}

const std::vector<int>& BisetSpace::full_projection_downset(int i) const {
    downset(i);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!full_proj_downsets_[i]) {
        std::vector<int> d;
        for (int j : *downsets_[i])
            if (proj_[j].p1 == proj_[i].p1 && proj_[j].p2 == proj_[i].p2) d.push_back(j);
        full_proj_downsets_[i] = std::move(d);
    }
    return *full_proj_downsets_[i];
}

const std::vector<std::pair<int, long long>>& BisetSpace::moebius_column(int top) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (moebius_cols_[top]) return *moebius_cols_[top];
    }
    auto col = poset_.moebius_column(top);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!moebius_cols_[top]) moebius_cols_[top] = std::move(col);
    return *moebius_cols_[top];
}

int BisetSpace::conjugate_index(int i, int by) const {
    const int idx = index_of(conjugate_subgroup(*prod_, subs_[i], by));
    if (idx < 0) throw std::logic_error("conjugate subgroup missing from lattice");
    return idx;
}

int BisetSpace::p1_order(int i) const { return static_cast<int>(p1_elements(i).size()); }
int BisetSpace::k1_order(int i) const { return static_cast<int>(k1_elements(i).size()); }
int BisetSpace::p2_order(int i) const { return static_cast<int>(p2_elements(i).size()); }
int BisetSpace::k2_order(int i) const { return static_cast<int>(k2_elements(i).size()); }

const std::vector<int>& BisetSpace::p1_elements(int i) const {
    return left_->subgroups()[proj_[i].p1];
}
const std::vector<int>& BisetSpace::k1_elements(int i) const {
    return left_->subgroups()[proj_[i].k1];
}
const std::vector<int>& BisetSpace::p2_elements(int i) const {
    return right_->subgroups()[proj_[i].p2];
}
const std::vector<int>& BisetSpace::k2_elements(int i) const {
    return right_->subgroups()[proj_[i].k2];
}

TripleSpace::TripleSpace(SpacePtr gh, SpacePtr hk, SpacePtr gk)
    : gh_(std::move(gh)), hk_(std::move(hk)), gk_(std::move(gk)) {
    if (gh_->right() != hk_->left())
        throw std::invalid_argument("TripleSpace: middle groups differ");
    if (gh_->left() != gk_->left() || hk_->right() != gk_->right())
        throw std::invalid_argument("TripleSpace: outer groups differ");
    star_cache_.assign(static_cast<std::size_t>(gh_->count()) * hk_->count(), -1);
    kappa_cache_.assign(static_cast<std::size_t>(gh_->count()) * hk_->count(), -1);
}

int TripleSpace::star_index_locked(int l, int m) const {
    const std::size_t key = static_cast<std::size_t>(l) * hk_->count() + m;
    if (star_cache_[key] >= 0) return star_cache_[key];
    const auto& ghp = *gh_->product();
    const auto& hkp = *hk_->product();
    const int kn = hk_->right()->order();
    std::vector<std::vector<int>> by_mid(middle()->order());
    for (int e : hk_->subgroup(m)) by_mid[hkp.pair_first(e)].push_back(hkp.pair_second(e));
    std::set<int> out;
    for (int e : gh_->subgroup(l)) {
        const int g = ghp.pair_first(e), h = ghp.pair_second(e);
        for (int k : by_mid[h]) out.insert(g * kn + k);
    }
    const int idx = gk_->index_of({out.begin(), out.end()});
    if (idx < 0) throw std::logic_error("star result missing from target lattice");
    star_cache_[key] = idx;
    return idx;
}

int TripleSpace::star_index(int l, int m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return star_index_locked(l, m);
}

long long TripleSpace::kappa_numerator_locked(int l, int m) const {
    const std::size_t key = static_cast<std::size_t>(l) * hk_->count() + m;
    if (kappa_cache_[key] >= 0) return kappa_cache_[key];
    const auto& a = gh_->k2_elements(l);
    const auto& b = hk_->k1_elements(m);
    long long n = 0;
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) ++n;
    kappa_cache_[key] = n;
    return n;
}

long long TripleSpace::kappa_numerator(int l, int m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return kappa_numerator_locked(l, m);
}

Rational TripleSpace::kappa(int l, int m) const {
    return rat(kappa_numerator(l, m), middle()->order());
}

Rational TripleSpace::structure_constant_def(int l, int m, int n) const {
    const auto& lcol = gh_->moebius_column(l);
    const auto& mcol = hk_->moebius_column(m);
    long long acc = 0;
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [lp, mul] : lcol)
        for (const auto& [mp, mum] : mcol) {
            const int s = star_index_locked(lp, mp);
            if (gk_->leq(n, s)) acc += mul * mum * kappa_numerator_locked(lp, mp);
        }
    return rat(acc, middle()->order());
}

Rational TripleSpace::structure_constant_thm(int l, int m, int n) const {
    // Y_N membership: p1(L)=p1(N), p2(L)=p1(M), p2(M)=p2(N), N <= L*M.
    if (gh_->p2_id(l) != hk_->p1_id(m)) return Rational(0);
    if (gk_->p1_id(n) != gh_->p1_id(l) || gk_->p2_id(n) != hk_->p2_id(m)) return Rational(0);
    if (!gk_->leq(n, star_index(l, m))) return Rational(0);

    std::vector<std::pair<int, int>> ys;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (int lp : gh_->downset(l)) {
            if (gh_->p1_id(lp) != gk_->p1_id(n)) continue;
            for (int mp : hk_->downset(m)) {
                if (hk_->p1_id(mp) != gh_->p2_id(lp) || hk_->p2_id(mp) != gk_->p2_id(n)) continue;
                if (gk_->leq(n, star_index_locked(lp, mp))) ys.emplace_back(lp, mp);
            }
        }
    }
    const int sz = static_cast<int>(ys.size());
    int top = -1;
    std::vector<std::vector<bool>> leq(sz, std::vector<bool>(sz, false));
    for (int i = 0; i < sz; ++i) {
        if (ys[i] == std::make_pair(l, m)) top = i;
        for (int j = 0; j < sz; ++j)
            leq[i][j] = gh_->leq(ys[i].first, ys[j].first) && hk_->leq(ys[i].second, ys[j].second);
    }
    if (top < 0) throw std::logic_error("(L,M) missing from its own Y_N poset");
    FinitePoset yn(std::move(leq));  // induced subposet; Moebius recomputed from scratch
    Rational acc(0);
    for (int i = 0; i < sz; ++i) {
        const long long mu = yn.moebius(i, top);
        if (mu != 0) acc += rat(mu * kappa_numerator(ys[i].first, ys[i].second), middle()->order());
    }
    return acc;
}

const std::vector<std::pair<int, Rational>>& TripleSpace::ghost_row(int l, int m) const {
    const long long key = static_cast<long long>(l) * hk_->count() + m;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = row_cache_.find(key);
        if (it != row_cache_.end()) return it->second;
    }
    std::vector<std::pair<int, Rational>> row;
    if (gh_->p2_id(l) == hk_->p1_id(m)) {
        const int s = star_index(l, m);
        for (int n : gk_->downset(s)) {
            if (gk_->p1_id(n) != gh_->p1_id(l) || gk_->p2_id(n) != hk_->p2_id(m)) continue;
            Rational a = structure_constant_thm(l, m, n);
            if (a != 0) row.emplace_back(n, std::move(a));
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return row_cache_.emplace(key, std::move(row)).first->second;
}

Rational StructureConstantTable::get(int l, int m, int n) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find({l, m, n});
        if (it != entries_.end()) return it->second;
    }
    Rational via_def = ts_->structure_constant_def(l, m, n);
    Rational via_thm = ts_->structure_constant_thm(l, m, n);
    if (via_def != via_thm)
        throw std::logic_error("structure constant evaluators disagree at (" + std::to_string(l) +
                               "," + std::to_string(m) + "," + std::to_string(n) + "): " +
                               rat_str(via_def) + " vs " + rat_str(via_thm));
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.emplace(std::make_tuple(l, m, n), std::move(via_def)).first->second;
}

std::size_t StructureConstantTable::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

}  // namespace ghostring

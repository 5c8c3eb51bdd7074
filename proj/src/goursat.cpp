#include "ghostring/goursat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ghostring {

namespace {

void require_product(const SubgroupSet& l, const char* who) {
    if (!l.parent || !l.parent->is_product())
        throw std::invalid_argument(std::string(who) + ": parent is not a direct product");
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (&a == &b) return true;
    if (a.order() != b.order()) return false;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (a.mul(x, y) != b.mul(x, y)) return false;
    return true;
}

// Minimal representative of x*K inside its parent group.
int coset_min_rep(const FiniteGroup& g, int x, const std::vector<int>& k) {
    int best = g.order();
    for (int e : k) best = std::min(best, g.mul(x, e));
    return best;
}

}  // namespace

std::vector<int> set_product(const FiniteGroup& g, const std::vector<int>& a,
                             const std::vector<int>& b) {
    std::set<int> out;
    for (int x : a)
        for (int y : b) out.insert(g.mul(x, y));
    return std::vector<int>(out.begin(), out.end());
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

GoursatQuintuple quintuple_from_subgroup(const SubgroupSet& l) {
    require_product(l, "quintuple_from_subgroup");
    const auto& prod = *l.parent;
    const auto& g = prod.left_factor();
    const auto& h = prod.right_factor();

    std::set<int> p1s, p2s, k1s, k2s;
    for (int e : l.elements) {
        const int a = prod.pair_first(e), b = prod.pair_second(e);
        p1s.insert(a);
        p2s.insert(b);
        if (b == h->identity()) k1s.insert(a);
        if (a == g->identity()) k2s.insert(b);
    }
    GoursatQuintuple q;
    q.p1 = SubgroupSet{g, {p1s.begin(), p1s.end()}};
    q.k1 = SubgroupSet{g, {k1s.begin(), k1s.end()}};
    q.p2 = SubgroupSet{h, {p2s.begin(), p2s.end()}};
    q.k2 = SubgroupSet{h, {k2s.begin(), k2s.end()}};
    for (int e : l.elements) {
        const int a = prod.pair_first(e), b = prod.pair_second(e);
        q.eta[coset_min_rep(*h, b, q.k2.elements)] = coset_min_rep(*g, a, q.k1.elements);
    }
    return q;
}

SubgroupSet subgroup_from_quintuple(const GroupPtr& product, const GoursatQuintuple& q) {
    if (!product->is_product())
        throw std::invalid_argument("subgroup_from_quintuple: target is not a direct product");
    if (!is_normal_in(q.k1, q.p1) || !is_normal_in(q.k2, q.p2))
        throw std::invalid_argument("quintuple: kernels are not normal in the projections");
    const auto qu1 = quotient(Section{q.p1, q.k1});
    const auto qu2 = quotient(Section{q.p2, q.k2});
    if (qu1.size() != qu2.size())
        throw std::invalid_argument("quintuple: eta cannot be an isomorphism (size mismatch)");

    // eta on coset reps -> map on quotient block ids; must be a bijective homomorphism.
    std::vector<int> eta_block(qu2.size(), -1);
    for (int b2 = 0; b2 < qu2.size(); ++b2) {
        auto it = q.eta.find(qu2.blocks[b2].front());
        if (it == q.eta.end())
            throw std::invalid_argument("quintuple: eta misses a coset");
        eta_block[b2] = qu1.block_of(it->second);
        if (eta_block[b2] < 0) throw std::invalid_argument("quintuple: eta image outside p1");
    }
    std::vector<char> hit(qu1.size(), 0);
    for (int b = 0; b < qu2.size(); ++b) {
        if (hit[eta_block[b]]) throw std::invalid_argument("quintuple: eta is not injective");
        hit[eta_block[b]] = 1;
    }
    for (int a = 0; a < qu2.size(); ++a)
        for (int b = 0; b < qu2.size(); ++b)
            if (eta_block[qu2.mul(a, b)] != qu1.mul(eta_block[a], eta_block[b]))
                throw std::invalid_argument("quintuple: eta is not a homomorphism");

    std::vector<int> elems;
    for (int a : q.p1.elements) {
        const int ba = qu1.block_of(a);
        for (int b : q.p2.elements)
            if (eta_block[qu2.block_of(b)] == ba) elems.push_back(product->pair_encode(a, b));
    }
    std::sort(elems.begin(), elems.end());
    SubgroupSet l{product, std::move(elems)};
    if (static_cast<int>(l.elements.size()) != q.p1.order() * q.k2.order())
        throw std::logic_error("quintuple: |L| != |p1|*|k2|");
    return l;
}

SubgroupSet star(const SubgroupSet& l, const SubgroupSet& m, const GroupPtr& gk) {
    require_product(l, "star");
    require_product(m, "star");
    const auto& lp = *l.parent;
    const auto& mp = *m.parent;
    if (!same_group(*lp.right_factor(), *mp.left_factor()))
        throw std::invalid_argument("star: middle groups differ");
    const int kn = mp.right_factor()->order();
    // bucket M by its middle coordinate
    std::vector<std::vector<int>> by_mid(mp.left_factor()->order());
    for (int e : m.elements) by_mid[mp.pair_first(e)].push_back(mp.pair_second(e));
    std::set<int> out;
    for (int e : l.elements) {
        const int g = lp.pair_first(e), h = lp.pair_second(e);
        for (int k : by_mid[h]) out.insert(g * kn + k);
    }
    return SubgroupSet{gk, {out.begin(), out.end()}};
}

SubgroupSet star(const SubgroupSet& l, const SubgroupSet& m) {
    require_product(l, "star");
    require_product(m, "star");
    auto gk = FiniteGroup::direct_product(l.parent->left_factor(), m.parent->right_factor());
    return star(l, m, gk);
}

ButterflyData butterfly(const Section& s1, const Section& s2) {
    const auto& g = s1.upper.parent;
    const auto& b = s1.upper.elements;
    const auto& a = s1.lower.elements;
    const auto& d = s2.upper.elements;
    const auto& c = s2.lower.elements;
    const auto bd = set_intersection(b, d);
    ButterflyData out;
    out.b_prime = SubgroupSet{g, set_product(*g, bd, a)};
    out.a_prime = SubgroupSet{g, set_product(*g, set_intersection(b, c), a)};
    out.d_prime = SubgroupSet{g, set_product(*g, bd, c)};
    out.c_prime = SubgroupSet{g, set_product(*g, set_intersection(d, a), c)};
    for (int x : bd)
        out.beta[coset_min_rep(*g, x, out.c_prime.elements)] =
            coset_min_rep(*g, x, out.a_prime.elements);
    return out;
}

bool linked(const Section& s1, const Section& s2) {
    const auto& g = *s1.upper.parent;
    const auto& b = s1.upper.elements;
    const auto& a = s1.lower.elements;
    const auto& d = s2.upper.elements;
    const auto& c = s2.lower.elements;
    const auto bd = set_intersection(b, d);
    return set_intersection(d, a) == set_intersection(c, b) && set_product(g, bd, c) == d &&
           set_product(g, bd, a) == b;
}

SubgroupSet star_via_butterfly(const SubgroupSet& l, const SubgroupSet& m, const GroupPtr& gk) {
    require_product(l, "star_via_butterfly");
    require_product(m, "star_via_butterfly");
    const auto& lp = *l.parent;
    const auto& mp = *m.parent;
    if (!same_group(*lp.right_factor(), *mp.left_factor()))
        throw std::invalid_argument("star_via_butterfly: middle groups differ");
    const auto ql = quintuple_from_subgroup(l);
    const auto qm = quintuple_from_subgroup(m);
    const auto& h = lp.right_factor();

    const auto fly = butterfly(Section{ql.p2, ql.k2}, Section{qm.p1, qm.k1});
    const auto& p2p = fly.b_prime;  // inside H
    const auto& k2p = fly.a_prime;
    const auto& p3p = fly.d_prime;
    const auto& k3p = fly.c_prime;

    // Lift through L and M; phi/psi are read off the subgroups directly.
    auto lift_left = [&](const std::vector<int>& hs) {
        std::set<int> out;
        for (int e : l.elements) {
            const int a = lp.pair_first(e), b = lp.pair_second(e);
            if (std::binary_search(hs.begin(), hs.end(), b)) out.insert(a);
        }
        return std::vector<int>(out.begin(), out.end());
    };
    auto lift_right = [&](const std::vector<int>& hs) {
        std::set<int> out;
        for (int e : m.elements) {
            const int a = mp.pair_first(e), b = mp.pair_second(e);
            if (std::binary_search(hs.begin(), hs.end(), a)) out.insert(b);
        }
        return std::vector<int>(out.begin(), out.end());
    };

    GoursatQuintuple qc;
    qc.p1 = SubgroupSet{lp.left_factor(), lift_left(p2p.elements)};
    qc.k1 = SubgroupSet{lp.left_factor(), lift_left(k2p.elements)};
    qc.p2 = SubgroupSet{mp.right_factor(), lift_right(p3p.elements)};
    qc.k2 = SubgroupSet{mp.right_factor(), lift_right(k3p.elements)};

    // eta = phi-bar o beta o psi-bar on canonical coset representatives.
    const auto bd = set_intersection(ql.p2.elements, qm.p1.elements);
    std::set<int> seen;
    for (int z : qc.p2.elements) {
        const int zrep = coset_min_rep(*mp.right_factor(), z, qc.k2.elements);
        if (!seen.insert(zrep).second) continue;
        int mid = -1;  // h in p3' with (h,z) in M
        for (int e : m.elements)
            if (mp.pair_second(e) == z) {
                mid = mp.pair_first(e);
                break;
            }
        if (mid < 0) throw std::logic_error("butterfly star: no lift of z through M");
        int x = -1;  // x in p2 ∩ p3 with mid in x*K3
        for (int cand : bd) {
            const int diff = h->mul(h->inv(cand), mid);
            if (std::binary_search(qm.k1.elements.begin(), qm.k1.elements.end(), diff)) {
                x = cand;
                break;
            }
        }
        if (x < 0) throw std::logic_error("butterfly star: no butterfly representative");
        int img = -1;  // g with (g,x) in L
        for (int e : l.elements)
            if (lp.pair_second(e) == x) {
                img = lp.pair_first(e);
                break;
            }
        if (img < 0) throw std::logic_error("butterfly star: no lift of x through L");
        qc.eta[zrep] = coset_min_rep(*lp.left_factor(), img, qc.k1.elements);
    }
    return subgroup_from_quintuple(gk, qc);
}

SubgroupSet opposite(const SubgroupSet& l, const GroupPtr& hg) {
    require_product(l, "opposite");
    const auto& lp = *l.parent;
    std::vector<int> out;
    out.reserve(l.elements.size());
    const int gn = lp.left_factor()->order();
    for (int e : l.elements) out.push_back(lp.pair_second(e) * gn + lp.pair_first(e));
    std::sort(out.begin(), out.end());
    return SubgroupSet{hg, std::move(out)};
}

SubgroupSet opposite(const SubgroupSet& l) {
    require_product(l, "opposite");
    auto hg = FiniteGroup::direct_product(l.parent->right_factor(), l.parent->left_factor());
    return opposite(l, hg);
}

SubgroupSet idempotent_section(const SubgroupSet& p, const SubgroupSet& k, const GroupPtr& gg) {
    if (!is_normal_in(k, p)) throw std::invalid_argument("idempotent_section: K not normal in P");
    const auto& g = *p.parent;
    std::vector<int> out;
    for (int x : p.elements)
        for (int y : p.elements)
            if (k.contains(g.mul(g.inv(x), y))) out.push_back(gg->pair_encode(x, y));
    std::sort(out.begin(), out.end());
    return SubgroupSet{gg, std::move(out)};
}

SubgroupSet diagonal_subgroup(const GroupPtr& gg) {
    std::vector<int> out;
    const auto& g = gg->left_factor();
    for (int x = 0; x < g->order(); ++x) out.push_back(gg->pair_encode(x, x));
    std::sort(out.begin(), out.end());
    return SubgroupSet{gg, std::move(out)};
}

SubgroupSet twisted_diagonal(const GroupPtr& gg, int g) {
    const auto& grp = gg->left_factor();
    std::vector<int> out;
    for (int x = 0; x < grp->order(); ++x) out.push_back(gg->pair_encode(grp->conj(g, x), x));
    std::sort(out.begin(), out.end());
    return SubgroupSet{gg, std::move(out)};
}

}  // namespace ghostring

#include "ghostring/burnside.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ghostring/goursat.hpp"

namespace ghostring {

namespace {

void check_same_space(const SpacePtr& a, const SpacePtr& b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": elements live in different spaces");
}

}  // namespace

void BisetElement::add(int subgroup_index, const Rational& c) {
    if (c == 0) return;
    const int rep = space->class_rep_of(subgroup_index);
    auto it = coeffs.find(rep);
    if (it == coeffs.end()) {
        coeffs.emplace(rep, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

void GhostElement::add(int subgroup_index, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs.find(subgroup_index);
    if (it == coeffs.end()) {
        coeffs.emplace(subgroup_index, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

Rational GhostElement::at(int subgroup_index) const {
    auto it = coeffs.find(subgroup_index);
    return it == coeffs.end() ? Rational(0) : it->second;
}

GhostElement& GhostElement::operator+=(const GhostElement& o) {
    check_same_space(space, o.space, "ghost +=");
    for (const auto& [k, v] : o.coeffs) add(k, v);
    return *this;
}

GhostElement& GhostElement::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs) v *= c;
    return *this;
}

BisetElement standard_basis_element(const SpacePtr& space, int subgroup_index) {
    BisetElement e{space, {}};
    e.add(subgroup_index, Rational(1));
    return e;
}

GhostElement ghost_basis_element(const SpacePtr& space, int subgroup_index) {
    GhostElement e{space, {}};
    e.add(subgroup_index, Rational(1));
    return e;
}

long long fixed_point_count(const BisetSpace& space, int u, int l) {
    // |(Gamma/L)^U| = #{gamma : U^gamma <= L} / |L|
    const auto& gamma = *space.product();
    const auto& usub = space.subgroup(u);
    const auto& lsub = space.subgroup(l);
    long long count = 0;
    for (int g = 0; g < gamma.order(); ++g) {
        bool inside = true;
        const int gi = gamma.inv(g);
        for (int x : usub) {
            if (!std::binary_search(lsub.begin(), lsub.end(), gamma.mul(gamma.mul(gi, x), g))) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
    }
    return count / static_cast<long long>(lsub.size());
}

GhostElement marks(const BisetElement& a) {
    GhostElement out{a.space, {}};
    for (int u = 0; u < a.space->count(); ++u) {
        Rational acc(0);
        for (const auto& [l, c] : a.coeffs) acc += c * rat(fixed_point_count(*a.space, u, l));
        out.add(u, acc);
    }
    return out;
}

GhostElement alpha_map(const BisetElement& a) {
    GhostElement out{a.space, {}};
    const long long order = a.space->product()->order();
    for (const auto& [l, c] : a.coeffs) {
        const int cls = a.space->class_of(l);
        const auto& members = a.space->class_members(cls);
        // [N(L):L] = |Gamma| / (|class| * |L|)
        const long long idx =
            order / (static_cast<long long>(members.size()) * a.space->subgroup_order(l));
        for (int m : members) out.add(m, c * rat(idx));
    }
    return out;
}

GhostElement zeta_map(const GhostElement& x) {
    GhostElement out{x.space, {}};
    for (const auto& [u, c] : x.coeffs)
        for (int v : x.space->downset(u)) out.add(v, c);
    return out;
}

GhostElement mu_inv_map(const GhostElement& x) {
    GhostElement out{x.space, {}};
    for (const auto& [u, c] : x.coeffs)
        for (const auto& [v, mu] : x.space->moebius_column(u)) out.add(v, c * rat(mu));
    return out;
}

std::vector<GhostElement> fixed_point_basis(const SpacePtr& space) {
    std::vector<GhostElement> out;
    for (int cls = 0; cls < space->class_count(); ++cls) {
        GhostElement e{space, {}};
        for (int m : space->class_members(cls)) e.add(m, Rational(1));
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

// First element of each (A,B)-double coset of H in the given scan order.
std::vector<int> double_coset_reps(const FiniteGroup& h, const std::vector<int>& a,
                                   const std::vector<int>& b, bool reversed) {
    std::vector<char> seen(h.order(), 0);
    std::vector<int> reps;
    for (int step = 0; step < h.order(); ++step) {
        const int x = reversed ? h.order() - 1 - step : step;
        if (seen[x]) continue;
        reps.push_back(x);
        for (int u : a)
            for (int v : b) seen[h.mul(h.mul(u, x), v)] = 1;
    }
    return reps;
}

}  // namespace

BisetElement mackey_product(const BisetElement& a, const BisetElement& b, const TripleSpace& ts,
                            bool reversed_scan) {
    check_same_space(a.space, ts.gh(), "mackey_product left");
    check_same_space(b.space, ts.hk(), "mackey_product right");
    const auto& h = *ts.middle();
    const auto& hk = *ts.hk();
    BisetElement out{ts.gk(), {}};
    for (const auto& [l, ca] : a.coeffs) {
        const auto& p2l = a.space->p2_elements(l);
        for (const auto& [m, cb] : b.coeffs) {
            const auto& p1m = hk.p1_elements(m);
            const Rational c = ca * cb;
            for (int x : double_coset_reps(h, p2l, p1m, reversed_scan)) {
                // ^(x,1) M inside H x K
                const int mc = hk.conjugate_index(m, hk.product()->pair_encode(x, h.identity()));
                out.add(ts.star_index(l, mc), c);
            }
        }
    }
    return out;
}

BisetElement biset_tensor_oracle(const TripleSpace& ts, int l, int m) {
    const auto& ghp = *ts.gh()->product();
    const auto& hkp = *ts.hk()->product();
    const auto& gkp = *ts.gk()->product();
    const auto& h = *ts.middle();
    const auto& lsub = ts.gh()->subgroup(l);
    const auto& msub = ts.hk()->subgroup(m);

    // Cosets of L in G x H and of M in H x K; ids in order of minimal element.
    auto cosets = [](const FiniteGroup& g, const std::vector<int>& sub) {
        std::vector<int> coset_of(g.order(), -1);
        std::vector<int> rep;
        for (int e = 0; e < g.order(); ++e) {
            if (coset_of[e] >= 0) continue;
            const int id = static_cast<int>(rep.size());
            rep.push_back(e);
            for (int s : sub) coset_of[g.mul(e, s)] = id;
        }
        return std::make_pair(coset_of, rep);
    };
    const auto [xcoset, xrep] = cosets(ghp, lsub);
    const auto [ycoset, yrep] = cosets(hkp, msub);
    const int nx = static_cast<int>(xrep.size()), ny = static_cast<int>(yrep.size());

    // h . (x, y) = ((1,h)x, (h,1)y); orbits of the middle group.
    const int npoints = nx * ny;
    std::vector<int> orbit(npoints, -1);
    std::vector<int> orbit_rep;
    for (int p = 0; p < npoints; ++p) {
        if (orbit[p] >= 0) continue;
        const int id = static_cast<int>(orbit_rep.size());
        orbit_rep.push_back(p);
        std::vector<int> stack{p};
        orbit[p] = id;
        while (!stack.empty()) {
            const int q = stack.back();
            stack.pop_back();
            const int qx = q / ny, qy = q % ny;
            for (int hh = 0; hh < h.order(); ++hh) {
                const int tx = xcoset[ghp.mul(ghp.pair_encode(ts.gh()->left()->identity(), hh),
                                              xrep[qx])];
                const int ty = ycoset[hkp.mul(hkp.pair_encode(hh, ts.hk()->right()->identity()),
                                              yrep[qy])];
                const int t = tx * ny + ty;
                if (orbit[t] < 0) {
                    orbit[t] = id;
                    stack.push_back(t);
                }
            }
        }
    }

    // (g,k) . [x,y] = [(g,1)x, (1,k)y]; stabilizers give the orbit types.
    BisetElement out{ts.gk(), {}};
    for (int rep : orbit_rep) {
        const int rx = rep / ny, ry = rep % ny;
        std::vector<int> stab;
        for (int e = 0; e < gkp.order(); ++e) {
            const int g = gkp.pair_first(e), k = gkp.pair_second(e);
            const int tx = xcoset[ghp.mul(ghp.pair_encode(g, h.identity()), xrep[rx])];
            const int ty = ycoset[hkp.mul(hkp.pair_encode(h.identity(), k), yrep[ry])];
            if (orbit[tx * ny + ty] == orbit[rep]) stab.push_back(e);
        }
        const int idx = ts.gk()->index_of(stab);
        if (idx < 0) throw std::logic_error("tensor oracle: stabilizer is not in the lattice");
        out.add(idx, Rational(1));
    }
    return out;
}

BisetElement opposite_element(const BisetElement& a, const SpacePtr& hg) {
    if (hg->left() != a.space->right() || hg->right() != a.space->left())
        throw std::invalid_argument("opposite_element: target space has wrong factors");
    BisetElement out{hg, {}};
    const int gn = a.space->left()->order();
    for (const auto& [l, c] : a.coeffs) {
        std::vector<int> flipped;
        for (int e : a.space->subgroup(l))
            flipped.push_back(a.space->product()->pair_second(e) * gn +
                              a.space->product()->pair_first(e));
        std::sort(flipped.begin(), flipped.end());
        const int idx = hg->index_of(flipped);
        if (idx < 0) throw std::logic_error("opposite subgroup missing from target lattice");
        out.add(idx, c);
    }
    return out;
}

GhostElement opposite_element(const GhostElement& a, const SpacePtr& hg) {
    if (hg->left() != a.space->right() || hg->right() != a.space->left())
        throw std::invalid_argument("opposite_element: target space has wrong factors");
    GhostElement out{hg, {}};
    const int gn = a.space->left()->order();
    for (const auto& [l, c] : a.coeffs) {
        std::vector<int> flipped;
        for (int e : a.space->subgroup(l))
            flipped.push_back(a.space->product()->pair_second(e) * gn +
                              a.space->product()->pair_first(e));
        std::sort(flipped.begin(), flipped.end());
        const int idx = hg->index_of(flipped);
        if (idx < 0) throw std::logic_error("opposite subgroup missing from target lattice");
        out.add(idx, c);
    }
    return out;
}

}  // namespace ghostring

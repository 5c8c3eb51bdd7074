#pragma once

#include <map>
#include <vector>

#include "ghostring/group.hpp"

namespace ghostring {

/// Goursat data of a subgroup L <= G x H: sections (p1,k1) of G and (p2,k2)
/// of H together with the induced isomorphism eta: p2/k2 -> p1/k1.
/// eta is stored on canonical coset representatives (minimal element index).
struct GoursatQuintuple {
    SubgroupSet p1, k1;      // section of the left factor
    SubgroupSet p2, k2;      // section of the right factor
    std::map<int, int> eta;  // min rep of h*k2 -> min rep of g*k1
};

/// Butterfly (Zassenhaus) data for sections (B,A) and (D,C) of one group:
/// B'=(B∩D)A, A'=(B∩C)A, D'=(D∩B)C, C'=(D∩A)C and the canonical
/// isomorphism beta: D'/C' -> B'/A', x C' -> x A' for x in B∩D.
struct ButterflyData {
    SubgroupSet b_prime, a_prime, d_prime, c_prime;
    std::map<int, int> beta;  // min rep of x*C' -> min rep of x*A'
};

GoursatQuintuple quintuple_from_subgroup(const SubgroupSet& l);
SubgroupSet subgroup_from_quintuple(const GroupPtr& product, const GoursatQuintuple& q);

/// {(g,k) | exists h: (g,h) in L, (h,k) in M}, by direct scan.
/// gk must be the direct product of L's left factor and M's right factor.
SubgroupSet star(const SubgroupSet& l, const SubgroupSet& m, const GroupPtr& gk);
SubgroupSet star(const SubgroupSet& l, const SubgroupSet& m);

/// The same composition computed through the Butterfly Lemma; used as an
/// independent verifier of star().
SubgroupSet star_via_butterfly(const SubgroupSet& l, const SubgroupSet& m, const GroupPtr& gk);

ButterflyData butterfly(const Section& s1, const Section& s2);
bool linked(const Section& s1, const Section& s2);

SubgroupSet opposite(const SubgroupSet& l, const GroupPtr& hg);
SubgroupSet opposite(const SubgroupSet& l);

/// e_(P,K) = (P, K, id, P, K) as a subgroup of G x G.
SubgroupSet idempotent_section(const SubgroupSet& p, const SubgroupSet& k, const GroupPtr& gg);

/// Elementwise product set A*B inside one group (not necessarily a subgroup).
std::vector<int> set_product(const FiniteGroup& g, const std::vector<int>& a,
                             const std::vector<int>& b);
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);

SubgroupSet diagonal_subgroup(const GroupPtr& gg);
/// Graph of conjugation by g: {(g x g^{-1}, x)}.
SubgroupSet twisted_diagonal(const GroupPtr& gg, int g);

}  // namespace ghostring

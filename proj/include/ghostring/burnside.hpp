#pragma once

#include <map>

#include "ghostring/spaces.hpp"

namespace ghostring {

/// Element of QB(G,H) in the standard basis: a sparse rational combination of
/// [G x H / L] over conjugacy-class representatives L. add() re-canonicalizes
/// indices to their class representative and drops zeros.
struct BisetElement {
    SpacePtr space;
    std::map<int, Rational> coeffs;

    void add(int subgroup_index, const Rational& c);
    bool operator==(const BisetElement& o) const { return coeffs == o.coeffs; }
};

/// Element of the ghost space QS_{G x H}: sparse over all subgroup indices.
struct GhostElement {
    SpacePtr space;
    std::map<int, Rational> coeffs;

    void add(int subgroup_index, const Rational& c);
    Rational at(int subgroup_index) const;
    bool operator==(const GhostElement& o) const { return coeffs == o.coeffs; }
    GhostElement& operator+=(const GhostElement& o);
    GhostElement& operator*=(const Rational& c);
};

BisetElement standard_basis_element(const SpacePtr& space, int subgroup_index);
GhostElement ghost_basis_element(const SpacePtr& space, int subgroup_index);

/// |(G x H / L)^U| by direct coset count.
long long fixed_point_count(const BisetSpace& space, int u, int l);

/// The mark homomorphism rho: [X] -> sum_U |X^U| * U.
GhostElement marks(const BisetElement& a);

/// alpha: [Gamma/L] -> [N_Gamma(L):L] * (sum of the conjugates of L).
GhostElement alpha_map(const BisetElement& a);

/// zeta: U -> sum of subgroups of U; mu_inv is its inverse via lattice Moebius.
GhostElement zeta_map(const GhostElement& x);
GhostElement mu_inv_map(const GhostElement& x);

/// One class-sum vector [L]^+ per conjugacy class.
std::vector<GhostElement> fixed_point_basis(const SpacePtr& space);

/// Bouc's Mackey-type formula; double coset representatives are the first
/// element of each (p2(L), p1(M))-double coset in scan order. The scan order
/// is reversible to check representative independence.
BisetElement mackey_product(const BisetElement& a, const BisetElement& b, const TripleSpace& ts,
                            bool reversed_scan = false);

/// Independent oracle: materializes the bisets, forms the tensor product over
/// the middle group point-by-point and decomposes into orbits. Never touches
/// the star/Mackey code path.
BisetElement biset_tensor_oracle(const TripleSpace& ts, int l, int m);

BisetElement opposite_element(const BisetElement& a, const SpacePtr& hg);
GhostElement opposite_element(const GhostElement& a, const SpacePtr& hg);

}  // namespace ghostring

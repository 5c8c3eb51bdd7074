#include "ghostring/ghost.hpp"

#include <sstream>
#include <stdexcept>

#include "ghostring/goursat.hpp"

namespace ghostring {

GhostElement twisted_product(const GhostElement& x, const GhostElement& y, const TripleSpace& ts) {
    if (x.space != ts.gh() || y.space != ts.hk())
        throw std::invalid_argument("twisted_product: spaces do not match the triple");
    GhostElement out{ts.gk(), {}};
    for (const auto& [l, cl] : x.coeffs)
        for (const auto& [m, cm] : y.coeffs) {
            const long long num = ts.kappa_numerator(l, m);
            if (num == 0) continue;  // never happens: both kernels contain the identity
            out.add(ts.star_index(l, m), cl * cm * rat(num, ts.middle()->order()));
        }
    return out;
}

GhostElement ghost_product(const GhostElement& x, const GhostElement& y, const TripleSpace& ts) {
    if (x.space != ts.gh() || y.space != ts.hk())
        throw std::invalid_argument("ghost_product: spaces do not match the triple");
    GhostElement out{ts.gk(), {}};
    for (const auto& [l, cl] : x.coeffs)
        for (const auto& [m, cm] : y.coeffs) {
            const Rational c = cl * cm;
            for (const auto& [n, a] : ts.ghost_row(l, m)) out.add(n, c * a);
        }
    return out;
}

GhostElement idempotent_e(const SpacePtr& gg) {
    if (gg->left() != gg->right())
        throw std::invalid_argument("idempotent_e needs a diagonal space (G,G)");
    GhostElement out{gg, {}};
    const auto& g = gg->left();
    for (int x = 0; x < g->order(); ++x) {
        const auto delta = twisted_diagonal(gg->product(), x);
        const int idx = gg->index_of(delta.elements);
        if (idx < 0) throw std::logic_error("twisted diagonal missing from lattice");
        out.add(idx, Rational(1));
    }
    return out;
}

GhostElement tilde_e(const SpacePtr& gg) { return zeta_map(idempotent_e(gg)); }

namespace {

Matrix rows_of(const std::vector<GhostElement>& elems, int dim) {
    Matrix m;
    for (const auto& e : elems) {
        std::vector<Rational> row(dim, Rational(0));
        for (const auto& [k, v] : e.coeffs) row[k] = v;
        m.push_back(std::move(row));
    }
    return m;
}

std::size_t stacked_rank(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    m.insert(m.end(), b.begin(), b.end());
    return matrix_rank(std::move(m));
}

}  // namespace

CondensationReport condensation_check(const GroupPtr& g, const GroupPtr& h, int max_order) {
    CondensationReport report;
    auto gg = BisetSpace::create(g, g, max_order);
    auto gh = g == h ? gg : BisetSpace::create(g, h, max_order);
    auto hh = g == h ? gg : BisetSpace::create(h, h, max_order);
    TripleSpace t_ggh(gg, gh, gh);
    TripleSpace t_ghh(gh, hh, gh);

    const auto eg = idempotent_e(gg);
    const auto eh = idempotent_e(hh);

    // e_G is idempotent for *_kappa.
    {
        TripleSpace t_ggg(gg, gg, gg);
        if (!(twisted_product(eg, eg, t_ggg) == eg)) report.fail("e_G *k e_G != e_G");
    }

    // e_G *k L *k e_H = (|N(L)| / |G x H|) [L]^+ for every L.
    std::vector<GhostElement> condensed;
    for (int l = 0; l < gh->count(); ++l) {
        const auto lhs =
            twisted_product(twisted_product(eg, ghost_basis_element(gh, l), t_ggh), eh, t_ghh);
        GhostElement rhs{gh, {}};
        const auto& members = gh->class_members(gh->class_of(l));
        for (int m : members) rhs.add(m, rat(1, static_cast<long>(members.size())));
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "e_G *k L *k e_H != (|N(L)|/|GxH|) [L]+ at subgroup " << l;
            report.fail(os.str());
        }
        condensed.push_back(lhs);
    }

    // Span comparison: alpha image, fixed points, condensed slice.
    std::vector<GhostElement> alpha_rows;
    for (int rep : gh->class_reps()) alpha_rows.push_back(alpha_map(standard_basis_element(gh, rep)));
    const auto fixed_rows = fixed_point_basis(gh);
    const Matrix ma = rows_of(alpha_rows, gh->count());
    const Matrix mf = rows_of(fixed_rows, gh->count());
    const Matrix mc = rows_of(condensed, gh->count());
    report.dim_alpha = matrix_rank(ma);
    report.dim_fixed = matrix_rank(mf);
    report.dim_condensed = matrix_rank(mc);
    if (report.dim_alpha != report.dim_fixed || stacked_rank(ma, mf) != report.dim_fixed)
        report.fail("alpha image differs from the fixed-point span");
    if (report.dim_condensed != report.dim_fixed || stacked_rank(mc, mf) != report.dim_fixed)
        report.fail("condensed slice differs from the fixed-point span");
    if (report.dim_alpha != static_cast<std::size_t>(gh->class_count()))
        report.fail("alpha is not injective on the standard basis");

    // Ring isomorphism part (G = H): alpha(a . b) = alpha(a) *k alpha(b).
    if (g == h) {
        TripleSpace t_ggg(gg, gg, gg);
        for (int la : gg->class_reps())
            for (int lb : gg->class_reps()) {
                const auto a = standard_basis_element(gg, la);
                const auto b = standard_basis_element(gg, lb);
                if (!(alpha_map(mackey_product(a, b, t_ggg)) ==
                      twisted_product(alpha_map(a), alpha_map(b), t_ggg))) {
                    std::ostringstream os;
                    os << "alpha not multiplicative at basis pair (" << la << "," << lb << ")";
                    report.fail(os.str());
                }
            }
    }
    return report;
}

}  // namespace ghostring

#include "ghostring/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ghostring {

namespace {

std::vector<int> identity_permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Lexicographic rank <-> permutation of {0..n-1}.
std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p = identity_permutation(n);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<int> table, int order, std::string label) {
    if (order <= 0) throw std::invalid_argument("group order must be positive");
    if (table.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("Cayley table size does not match order");
    for (int v : table)
        if (v < 0 || v >= order) throw std::invalid_argument("Cayley table entry out of range");

    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * order + b]; };

    // Identity: unique e with e*x = x*e = x for all x.
    int identity = -1;
    for (int e = 0; e < order && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < order && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw std::invalid_argument("Cayley table has no identity element");

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (at(at(a, b), c) != at(a, at(b, c))) {
                    std::ostringstream os;
                    os << "Cayley table not associative at triple (" << a << "," << b << "," << c
                       << "): (" << a << "*" << b << ")*" << c << "=" << at(at(a, b), c) << " but "
                       << a << "*(" << b << "*" << c << ")=" << at(a, at(b, c));
                    throw std::invalid_argument(os.str());
                }

    std::vector<int> inverse(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (at(a, b) == identity && at(b, a) == identity) {
                inverse[a] = b;
                break;
            }
        if (inverse[a] < 0) {
            std::ostringstream os;
            os << "element " << a << " has no two-sided inverse";
            throw std::invalid_argument(os.str());
        }
    }

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = order;
    g->identity_ = identity;
    g->table_ = std::move(table);
    g->inverse_ = std::move(inverse);
    g->label_ = std::move(label);
    return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return from_table(std::move(table), n, "C" + std::to_string(n));
}

GroupPtr FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
    const auto perms = all_permutations(n);
    const int order = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < order; ++i) rank[perms[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            std::vector<int> comp(n);
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            table[static_cast<std::size_t>(a) * order + b] = rank[comp];
        }
    return from_table(std::move(table), order, "S" + std::to_string(n));
}

GroupPtr FiniteGroup::dihedral(int order) {
    if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even and >= 2");
    const int n = order / 2;
    // 0..n-1 rotations r^i, n..2n-1 reflections r^i s.
    auto enc = [&](bool refl, int i) { return (refl ? n : 0) + ((i % n) + n) % n; };
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            const bool ra = a >= n, rb = b >= n;
            const int i = a % n, j = b % n;
            int v;
            if (!ra && !rb) v = enc(false, i + j);
            else if (!ra && rb) v = enc(true, i + j);
            else if (ra && !rb) v = enc(true, i - j);
            else v = enc(false, i - j);
            table[static_cast<std::size_t>(a) * order + b] = v;
        }
    return from_table(std::move(table), order, "D" + std::to_string(order));
}

GroupPtr FiniteGroup::from_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Cayley file: " + path);
    int n = 0;
    if (!(in >> n) || n <= 0) throw std::invalid_argument("Cayley file: bad order line");
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) {
        int v;
        if (!(in >> v)) throw std::invalid_argument("Cayley file: truncated table");
        table.push_back(v);
    }
    return from_table(std::move(table), n, path);
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
    const int na = a->order(), nb = b->order();
    const int n = na * nb;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int g = a->mul(x / nb, y / nb);
            const int h = b->mul(x % nb, y % nb);
            table[static_cast<std::size_t>(x) * n + y] = g * nb + h;
        }
    auto prod = from_table(std::move(table), n, a->label() + "x" + b->label());
    auto* mut = const_cast<FiniteGroup*>(prod.get());
    mut->left_ = a;
    mut->right_ = b;
    return prod;
}

bool FiniteGroup::abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int x) const {
    int k = 1, y = x;
    while (y != identity_) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> queue;
    in[g.identity()] = 1;
    queue.push_back(g.identity());
    for (int x : generators)
        if (!in[x]) {
            in[x] = 1;
            queue.push_back(x);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int y : generators) {
            const int p = g.mul(x, y);
            if (!in[p]) {
                in[p] = 1;
                queue.push_back(p);
            }
            const int q = g.mul(y, x);
            if (!in[q]) {
                in[q] = 1;
                queue.push_back(q);
            }
        }
        const int ix = g.inv(x);
        if (!in[ix]) {
            in[ix] = 1;
            queue.push_back(ix);
        }
    }
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
    std::vector<char> in(g.order(), 0);
    for (int x : elements) in[x] = 1;
    if (!in[g.identity()]) return false;
    for (int x : elements) {
        if (!in[g.inv(x)]) return false;
        for (int y : elements)
            if (!in[g.mul(x, y)]) return false;
    }
    return true;
}

std::vector<int> conjugate_subgroup(const FiniteGroup& g, const std::vector<int>& elements, int by) {
    std::vector<int> out;
    out.reserve(elements.size());
    for (int x : elements) out.push_back(g.conj(by, x));
    std::sort(out.begin(), out.end());
    return out;
}

void FiniteGroup::build_subgroups_locked(int max_order) const {
    if (order_ > max_order) {
        std::ostringstream os;
        os << "group " << label_ << " of order " << order_ << " exceeds the enumeration bound "
           << max_order << " (raise --max-order / GHOST_MAX_ORDER)";
        throw std::invalid_argument(os.str());
    }
    // Seed with all cyclic subgroups, then close under pairwise join.
    std::set<std::vector<int>> pool;
    for (int x = 0; x < order_; ++x) pool.insert(generated_subgroup(*this, {x}));
    std::vector<std::vector<int>> work(pool.begin(), pool.end());
    std::vector<std::vector<int>> fresh = work;
    while (!fresh.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : fresh)
            for (const auto& b : work) {
                if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                    std::includes(b.begin(), b.end(), a.begin(), a.end()))
                    continue;
                std::vector<int> gens = a;
                gens.insert(gens.end(), b.begin(), b.end());
                auto join = generated_subgroup(*this, gens);
                if (pool.insert(join).second) next.push_back(std::move(join));
            }
        for (auto& s : next) work.push_back(s);
        fresh = std::move(next);
    }
    subs_.assign(pool.begin(), pool.end());  // std::set order = lexicographic
    subs_built_ = true;
}

const std::vector<std::vector<int>>& FiniteGroup::subgroups(int max_order) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!subs_built_) build_subgroups_locked(max_order);
    return subs_;
}

int FiniteGroup::subgroup_index(const std::vector<int>& elements) const {
    const auto& subs = subgroups();
    auto it = std::lower_bound(subs.begin(), subs.end(), elements);
    if (it == subs.end() || *it != elements) return -1;
    return static_cast<int>(it - subs.begin());
}

const FiniteGroup::ConjClasses& FiniteGroup::subgroup_classes(int max_order) const {
    subgroups(max_order);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (classes_built_) return classes_;
    const int ns = static_cast<int>(subs_.size());
    classes_.class_of.assign(ns, -1);
    for (int i = 0; i < ns; ++i) {
        if (classes_.class_of[i] >= 0) continue;
        const int cls = static_cast<int>(classes_.classes.size());
        std::vector<int> members;
        for (int g = 0; g < order_; ++g) {
            auto conj = conjugate_subgroup(*this, subs_[i], g);
            auto it = std::lower_bound(subs_.begin(), subs_.end(), conj);
            const int j = static_cast<int>(it - subs_.begin());
            if (classes_.class_of[j] < 0) {
                classes_.class_of[j] = cls;
                members.push_back(j);
            }
        }
        std::sort(members.begin(), members.end());
        classes_.rep.push_back(members.front());  // lexicographically smallest member
        classes_.classes.push_back(std::move(members));
    }
    classes_built_ = true;
    return classes_;
}

bool SubgroupSet::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool SubgroupSet::contains_all(const SubgroupSet& other) const {
    return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                         other.elements.end());
}

SubgroupSet make_subgroup(const GroupPtr& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup(*g, elements)) throw std::invalid_argument("element set is not a subgroup");
    return SubgroupSet{g, std::move(elements)};
}

SubgroupSet trivial_subgroup(const GroupPtr& g) { return SubgroupSet{g, {g->identity()}}; }

SubgroupSet full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return SubgroupSet{g, std::move(all)};
}

bool is_normal_in(const SubgroupSet& k, const SubgroupSet& p) {
    if (!p.contains_all(k)) return false;
    const auto& g = *p.parent;
    for (int x : p.elements)
        for (int y : k.elements)
            if (!k.contains(g.conj(x, y))) return false;
    return true;
}

SubgroupSet normalizer(const GroupPtr& g, const SubgroupSet& u) {
    std::vector<int> out;
    for (int x = 0; x < g->order(); ++x)
        if (conjugate_subgroup(*g, u.elements, x) == u.elements) out.push_back(x);
    return SubgroupSet{g, std::move(out)};
}

QuotientGroup quotient(const Section& s) {
    if (!is_normal_in(s.lower, s.upper))
        throw std::invalid_argument("quotient: lower subgroup is not normal in upper");
    const auto& g = *s.upper.parent;
    QuotientGroup q;
    q.base = s;
    std::vector<int> block_of_elem(g.order(), -1);
    for (int x : s.upper.elements) {
        if (block_of_elem[x] >= 0) continue;
        std::vector<int> block;
        for (int k : s.lower.elements) block.push_back(g.mul(x, k));
        std::sort(block.begin(), block.end());
        for (int e : block) block_of_elem[e] = 0;  // mark seen; real ids assigned below
        q.blocks.push_back(std::move(block));
    }
    std::sort(q.blocks.begin(), q.blocks.end());  // block id order = minimal element order
    for (int b = 0; b < q.size(); ++b)
        for (int e : q.blocks[b]) block_of_elem[e] = b;
    const int m = q.size();
    q.table.assign(static_cast<std::size_t>(m) * m, -1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int prod = g.mul(q.blocks[a].front(), q.blocks[b].front());
            q.table[static_cast<std::size_t>(a) * m + b] = block_of_elem[prod];
        }
    q.identity_block = block_of_elem[g.identity()];
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int x : q.blocks[a])
                for (int y : q.blocks[b])
                    if (block_of_elem[g.mul(x, y)] != q.mul(a, b))
                        throw std::logic_error("quotient block product not well defined");
    return q;
}

int QuotientGroup::block_of(int element) const {
    for (int b = 0; b < size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), element)) return b;
    return -1;
}

GroupPtr parse_group_name(const std::string& name) {
    const auto x = name.find('x');
    if (x != std::string::npos)
        return FiniteGroup::direct_product(parse_group_name(name.substr(0, x)),
                                           parse_group_name(name.substr(x + 1)));
    if (name.size() < 2) throw std::invalid_argument("bad group name: " + name);
    const char kind = name[0];
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(name.substr(1), &used);
        if (used + 1 != name.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group name: " + name);
    }
    switch (kind) {
        case 'C': return FiniteGroup::cyclic(n);
        case 'S': return FiniteGroup::symmetric(n);
        case 'D': return FiniteGroup::dihedral(n);
        default: throw std::invalid_argument("bad group name: " + name);
    }
}

}  // namespace ghostring

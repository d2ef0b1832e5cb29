#include "weylarr/subsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace weylarr {

namespace {

IntVec to_ll(const std::vector<int>& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

// Identify an irreducible type from (rank, positive-root count, number of
// positive roots strictly shorter than the longest in the component).
// This triple separates all irreducible crystallographic types; B2 = C2
// reports as B2 and D3 as A3.
RootSystemId identify_type(int rank, long long npos, long long nshort) {
    auto classical = [&](char f) -> long long {
        switch (f) {
            case 'A': return (long long)rank * (rank + 1) / 2;
            case 'B':
            case 'C': return (long long)rank * rank;
            case 'D': return (long long)rank * (rank - 1);
        }
        return -1;
    };
    if (rank == 1) return {'A', 1};
    if (nshort == 0) {
        if (rank == 6 && npos == 36) return {'E', 6};
        if (rank == 7 && npos == 63) return {'E', 7};
        if (rank == 8 && npos == 120) return {'E', 8};
        if (npos == classical('A')) return {'A', rank};
        if (npos == classical('D')) return rank == 3 ? RootSystemId{'A', 3} : RootSystemId{'D', rank};
    } else {
        if (rank == 2 && npos == 6) return {'G', 2};
        if (rank == 4 && npos == 24) return {'F', 4};
        if (npos == classical('B')) {
            if (rank == 2) return {'B', 2};
            if (nshort == rank) return {'B', rank};
            if (nshort == npos - rank) return {'C', rank};
        }
    }
    throw std::logic_error("unrecognized component: rank " + std::to_string(rank) + ", " +
                           std::to_string(npos) + " positive roots, " + std::to_string(nshort) +
                           " short");
}

} // namespace

Subsystem span_subsystem(const RootSystem& rs, const std::vector<std::vector<int>>& gamma) {
    if (gamma.empty()) throw std::invalid_argument("span_subsystem: empty generating set");
    IntMat rows;
    for (const auto& g : gamma) rows.push_back(to_ll(g));
    IntMat ech = int_row_echelon(rows);

    Subsystem sub;
    sub.ambient = &rs;
    sub.rank = (int)ech.size();
    for (int i = 0; i < rs.num_positive(); ++i) {
        IntVec res = echelon_residual(ech, to_ll(rs.root(i).c));
        if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; }))
            sub.positive.push_back(i);
    }

    // Base: indecomposable elements of the induced positive system.
    std::set<std::vector<int>> members;
    for (int i : sub.positive) members.insert(rs.root(i).c);
    for (int i : sub.positive) {
        const std::vector<int>& b = rs.root(i).c;
        bool decomposable = false;
        for (int j : sub.positive) {
            const std::vector<int>& g = rs.root(j).c;
            std::vector<int> d(b.size());
            bool nonneg = true, nonzero = false;
            for (size_t k = 0; k < b.size(); ++k) {
                d[k] = b[k] - g[k];
                if (d[k] < 0) nonneg = false;
                if (d[k] != 0) nonzero = true;
            }
            if (nonneg && nonzero && members.count(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) sub.base.push_back(i);
    }
    if ((int)sub.base.size() != sub.rank)
        throw std::logic_error("base size does not match span rank");

    // Connected components of the base under nonzero inner products.
    int n = (int)sub.base.size();
    std::vector<int> comp(n, -1);
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = i;
        std::vector<int> stack = {i};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (comp[w] >= 0) continue;
                if (!rs.inner(rs.root(sub.base[v]).c, rs.root(sub.base[w]).c).is_zero()) {
                    comp[w] = i;
                    stack.push_back(w);
                }
            }
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[comp[i]].push_back(i);
    for (auto& [root_of, g] : groups) sub.components.push_back(g);

    // Type of each component from its own span.
    for (const auto& g : sub.components) {
        IntMat crows;
        for (int pos : g) crows.push_back(to_ll(rs.root(sub.base[pos]).c));
        IntMat cech = int_row_echelon(crows);
        long long npos = 0, nshort = 0;
        Rational longest(0);
        std::vector<int> comp_roots;
        for (int i : sub.positive) {
            IntVec res = echelon_residual(cech, to_ll(rs.root(i).c));
            if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; })) {
                comp_roots.push_back(i);
                ++npos;
                if (rs.root(i).normsq > longest) longest = rs.root(i).normsq;
            }
        }
        for (int i : comp_roots)
            if (rs.root(i).normsq < longest) ++nshort;
        sub.type_label.push_back(identify_type((int)g.size(), npos, nshort));
    }
    return sub;
}

std::string Subsystem::type_str() const {
    std::vector<std::string> names;
    for (const auto& t : type_label) names.push_back(t.str());
    std::sort(names.begin(), names.end());
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += " x ";
        out += names[i];
    }
    return out;
}

std::vector<long long> Subsystem::base_coefficients(const std::vector<int>& root) const {
    const RootSystem& rs = *ambient;
    size_t l = root.size();
    RatMat a(l, RatVec(base.size()));
    RatVec b(l);
    for (size_t i = 0; i < l; ++i) {
        for (size_t j = 0; j < base.size(); ++j) a[i][j] = Rational(rs.root(base[j]).c[i]);
        b[i] = Rational(root[i]);
    }
    RatVec x;
    if (!solve_rational(a, b, x))
        throw std::invalid_argument("root is not in the span of the subsystem base");
    std::vector<long long> out;
    for (const Rational& r : x) out.push_back(r.as_integer());
    return out;
}

long long Subsystem::local_height(const std::vector<int>& root) const {
    int idx = ambient->index_of(root);
    if (idx < 0 || !std::binary_search(positive.begin(), positive.end(), idx))
        throw std::invalid_argument("local_height: root is not in the subsystem");
    std::vector<long long> c = base_coefficients(root);
    long long s = 0;
    for (long long x : c) {
        if (x < 0) throw std::logic_error("positive member with a negative base coefficient");
        s += x;
    }
    return s;
}

std::vector<int> Subsystem::component_highest_root(int comp) const {
    const RootSystem& rs = *ambient;
    IntMat crows;
    for (int pos : components[comp]) crows.push_back(to_ll(rs.root(base[pos]).c));
    IntMat cech = int_row_echelon(crows);
    int best = -1;
    long long best_h = -1;
    for (int i : positive) {
        IntVec res = echelon_residual(cech, to_ll(rs.root(i).c));
        if (!std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; })) continue;
        long long h = local_height(rs.root(i).c);
        if (h > best_h) {
            best_h = h;
            best = i;
        }
    }
    return rs.root(best).c;
}

int Subsystem::component_coxeter_number(int comp) const {
    const RootSystem& rs = *ambient;
    IntMat crows;
    for (int pos : components[comp]) crows.push_back(to_ll(rs.root(base[pos]).c));
    IntMat cech = int_row_echelon(crows);
    long long npos = 0;
    for (int i : positive) {
        IntVec res = echelon_residual(cech, to_ll(rs.root(i).c));
        if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; })) ++npos;
    }
    return (int)(2 * npos / (long long)components[comp].size());
}

long long Subsystem::component_c_max(int comp) const {
    std::vector<long long> c = base_coefficients(component_highest_root(comp));
    long long m = 0;
    for (size_t j = 0; j < base.size(); ++j) m = std::max(m, c[j]);
    return m;
}

int Subsystem::component_of_base_vector(const std::vector<int>& root) const {
    int idx = ambient->index_of(root);
    for (size_t ci = 0; ci < components.size(); ++ci)
        for (int pos : components[ci])
            if (base[pos] == idx) return (int)ci;
    return -1;
}

PairClassification classify_pair(const RootSystem& rs, std::vector<int> b1, std::vector<int> b2) {
    auto normalize = [&](std::vector<int>& v) {
        for (int x : v) {
            if (x > 0) break;
            if (x < 0) {
                for (int& y : v) y = -y;
                break;
            }
        }
        if (!rs.is_positive_root(v)) throw std::invalid_argument("classify_pair: not a root");
    };
    normalize(b1);
    normalize(b2);
    if (b1 == b2) throw std::invalid_argument("classify_pair: proportional roots");

    PairClassification pc;
    pc.beta1 = b1;
    pc.beta2 = b2;
    pc.is_orthogonal = rs.inner(b1, b2).is_zero();

    Subsystem span = span_subsystem(rs, {b1, b2});
    pc.is_a12 = span.positive.size() == 2;
    pc.span_irreducible = span.irreducible();
    if (span.irreducible()) pc.span_type = span.type_label[0];

    if (pc.is_orthogonal) {
        // RO condition (b'): the roots orthogonal to b1, minus +-b2, agree
        // with the roots orthogonal to b2, minus +-b1. Positive roots suffice.
        std::vector<int> p1, p2;
        for (int i = 0; i < rs.num_positive(); ++i) {
            const auto& r = rs.root(i).c;
            if (rs.inner(r, b1).is_zero() && r != b2) p1.push_back(i);
            if (rs.inner(r, b2).is_zero() && r != b1) p2.push_back(i);
        }
        pc.is_ro = p1 == p2;
    }
    return pc;
}

std::vector<PairKey> all_a12_pairs(const RootSystem& rs) {
    std::vector<PairKey> pairs;
    int n = rs.num_positive();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!rs.inner(rs.root(i).c, rs.root(j).c).is_zero()) continue;
            Subsystem span = span_subsystem(rs, {rs.root(i).c, rs.root(j).c});
            if (span.positive.size() == 2) pairs.push_back({i, j});
        }
    return pairs;
}

std::vector<PairOrbit> pair_orbits(const RootSystem& rs) {
    if (rs.rank() < 3) throw std::invalid_argument("pair_orbits requires rank >= 3");
    std::vector<PairKey> pairs = all_a12_pairs(rs);
    std::set<PairKey> pending(pairs.begin(), pairs.end());
    std::vector<PairOrbit> orbits;
    while (!pending.empty()) {
        PairKey seed = *pending.begin();
        std::set<PairKey> orbit;
        std::vector<PairKey> queue = {seed};
        orbit.insert(seed);
        while (!queue.empty()) {
            PairKey p = queue.back();
            queue.pop_back();
            for (int k = 0; k < rs.rank(); ++k) {
                const std::vector<int>& tbl = rs.simple_reflection_table(k);
                int a = tbl[p.first], b = tbl[p.second];
                PairKey q{std::min(a, b), std::max(a, b)};
                if (orbit.insert(q).second) queue.push_back(q);
            }
        }
        PairOrbit o;
        o.representative = *orbit.begin();
        o.members.assign(orbit.begin(), orbit.end());
        bool first = true;
        for (const PairKey& p : o.members) {
            if (!pending.erase(p))
                throw std::logic_error("orbit reached a pair that is not A1^2");
            PairClassification pc = classify_pair(rs, rs.root(p.first).c, rs.root(p.second).c);
            if (first) {
                o.ro = pc.is_ro;
                first = false;
            } else if (pc.is_ro != o.ro) {
                throw std::logic_error("RO flag is not constant on a Weyl orbit");
            }
        }
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const PairOrbit& a, const PairOrbit& b) { return a.representative < b.representative; });
    return orbits;
}

ThetaPerp theta_perp_decomposition(const RootSystem& rs) {
    if (rs.rank() < 2) throw std::invalid_argument("theta_perp requires rank >= 2");
    const std::vector<int>& theta = rs.highest_root().c;
    std::vector<std::vector<int>> gen;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (rs.inner(rs.root(i).c, theta).is_zero()) gen.push_back(rs.root(i).c);
    ThetaPerp tp;
    if (gen.empty()) { // rank-2 systems other than A2 have empty theta-perp? (A1: n/a)
        tp.sub.ambient = &rs;
        return tp;
    }
    tp.sub = span_subsystem(rs, gen);
    for (size_t c = 0; c < tp.sub.components.size(); ++c)
        tp.component_coxeter.push_back(tp.sub.component_coxeter_number((int)c));
    return tp;
}

} // namespace weylarr

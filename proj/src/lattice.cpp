#include "weylarr/lattice.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <stdexcept>

namespace weylarr {

namespace {
constexpr int kMaxForms = 80;
using Key = std::bitset<kMaxForms>;

struct Flat {
    Key key;       // hyperplanes containing the flat (closed set)
    int dim = 0;
    long long mobius = 0;
};
} // namespace

std::string CharPoly::str() const {
    std::string s;
    for (size_t i = coeff.size(); i-- > 0;) {
        if (coeff[i] == 0) continue;
        if (!s.empty()) s += coeff[i] > 0 ? " + " : " - ";
        else if (coeff[i] < 0) s += "-";
        long long a = coeff[i] < 0 ? -coeff[i] : coeff[i];
        if (a != 1 || i == 0) s += std::to_string(a);
        if (i > 0) s += "t";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

long long CharPoly::eval(long long t) const {
    long long v = 0;
    for (size_t i = coeff.size(); i-- > 0;) v = v * t + coeff[i];
    return v;
}

CharPoly char_poly_from_roots(const std::vector<long long>& roots) {
    CharPoly p;
    p.coeff = {1};
    for (long long r : roots) {
        std::vector<long long> next(p.coeff.size() + 1, 0);
        for (size_t i = 0; i < p.coeff.size(); ++i) {
            next[i + 1] += p.coeff[i];
            next[i] -= r * p.coeff[i];
        }
        p.coeff = std::move(next);
    }
    return p;
}

CharPoly char_poly(const std::vector<IntVec>& forms, int dim, int max_dim) {
    int n = (int)forms.size();
    if (dim > max_dim)
        throw LatticeBoundExceeded("lattice: ambient dimension " + std::to_string(dim) +
                                   " exceeds bound " + std::to_string(max_dim));
    if (n > kMaxForms)
        throw LatticeBoundExceeded("lattice: " + std::to_string(n) + " hyperplanes exceed bound");
    std::vector<IntVec> prims;
    for (const IntVec& f : forms) prims.push_back(primitive_covector(f));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (prims[i] == prims[j])
                throw std::invalid_argument("lattice: duplicate hyperplanes " + std::to_string(i) +
                                            "," + std::to_string(j));

    // Breadth-first build, one codimension at a time. A candidate subspace
    // is canonical through its reduced echelon basis, so duplicates coming
    // from different (flat, hyperplane) pairs collapse before the closure
    // scan, which is the expensive step.
    std::vector<Flat> flats;
    Flat top;
    top.dim = dim;
    flats.push_back(top);

    std::vector<std::pair<IntMat, int>> frontier; // (echelon basis, flat index)
    frontier.push_back({{}, 0});
    while (!frontier.empty()) {
        std::map<IntMat, Key> candidates; // canonical span -> union of seed keys
        for (const auto& [ech, fi] : frontier) {
            const Key& fkey = flats[fi].key;
            for (int j = 0; j < n; ++j) {
                if (fkey[j]) continue;
                IntMat rows2 = ech;
                rows2.push_back(forms[j]);
                IntMat nech = int_row_echelon(std::move(rows2));
                Key seed = fkey;
                seed[j] = true;
                candidates[std::move(nech)] |= seed;
            }
        }
        std::vector<std::pair<IntMat, int>> next;
        for (auto& [ech, seed] : candidates) {
            // closure: every hyperplane whose form lies in the span
            Key nkey;
            for (int i = 0; i < n; ++i) {
                if (seed[i]) {
                    nkey[i] = true;
                    continue;
                }
                IntVec res = echelon_residual(ech, forms[i]);
                if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; }))
                    nkey[i] = true;
            }
            Flat nf;
            nf.key = nkey;
            nf.dim = dim - (int)ech.size();
            next.push_back({ech, (int)flats.size()});
            flats.push_back(nf);
        }
        frontier = std::move(next);
    }

    // Mobius, top-down by decreasing dimension: mu(X) = -sum over flats Y
    // strictly above X (key(Y) strictly inside key(X)).
    std::vector<int> order(flats.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return flats[a].dim > flats[b].dim; });
    for (int oi : order) {
        Flat& x = flats[oi];
        if (x.dim == dim) {
            x.mobius = 1;
            continue;
        }
        long long s = 0;
        for (int oj : order) {
            const Flat& y = flats[oj];
            if (y.dim <= x.dim) break;
            if ((y.key & x.key) == y.key) s += y.mobius;
        }
        x.mobius = -s;
    }

    CharPoly chi;
    chi.coeff.assign(dim + 1, 0);
    for (const Flat& f : flats) chi.coeff[f.dim] += f.mobius;
    return chi;
}

long long complement_point_count(const std::vector<IntVec>& forms, int dim, long long p) {
    if (dim > 3) throw std::invalid_argument("point count only supported for dim <= 3");
    std::vector<long long> x(dim, 0);
    long long count = 0;
    while (true) {
        bool on_some = false;
        for (const IntVec& f : forms) {
            long long s = 0;
            for (int i = 0; i < dim; ++i) s = (s + f[i] % p * x[i]) % p;
            if (s % p == 0) {
                on_some = true;
                break;
            }
        }
        if (!on_some) ++count;
        int i = 0;
        while (i < dim && ++x[i] == p) x[i++] = 0;
        if (i == dim) break;
    }
    return count;
}

} // namespace weylarr

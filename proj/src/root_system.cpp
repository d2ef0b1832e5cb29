#include "weylarr/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>

namespace weylarr {

bool is_admissible(char family, int rank) {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 3;
        case 'D': return rank >= 3; // D3 = A3, canonicalized on parse
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

RootSystemId RootSystemId::parse(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad root system name: " + name);
    char f = (char)std::toupper((unsigned char)name[0]);
    int r = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit((unsigned char)name[i]))
            throw std::invalid_argument("bad root system name: " + name);
        r = r * 10 + (name[i] - '0');
    }
    if (!is_admissible(f, r))
        throw std::invalid_argument("inadmissible root system: " + name);
    if (f == 'D' && r == 3) f = 'A';
    return RootSystemId{f, r};
}

std::vector<RootSystemId> catalog_ids(int max_rank) {
    std::vector<RootSystemId> ids;
    for (int r = 1; r <= max_rank; ++r)
        for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
            if (is_admissible(f, r) && !(f == 'D' && r == 3)) ids.push_back({f, r});
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

// Bourbaki numbering. Simple chains run 1..l; in D the last two nodes both
// attach to node l-2; in E node 2 attaches to node 4 of the chain
// 1-3-4-5-6(-7)(-8).
struct CartanData {
    std::vector<std::vector<int>> cartan;
    std::vector<Rational> normsq; // per simple root, long = 2
};

CartanData bourbaki_cartan(const RootSystemId& id) {
    int l = id.rank;
    std::vector<std::pair<int, int>> edges; // single edges (0-based)
    std::vector<Rational> norm(l, Rational(2));
    std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) c[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1});
    };
    switch (id.family) {
        case 'A': chain(l); break;
        case 'B':
            chain(l - 1);
            norm[l - 1] = Rational(1);
            edges.push_back({l - 2, l - 1});
            break;
        case 'C':
            for (int i = 0; i + 1 < l; ++i) norm[i] = Rational(1);
            chain(l - 1);
            edges.push_back({l - 2, l - 1});
            break;
        case 'D':
            chain(l - 1);
            edges.push_back({l - 3, l - 1});
            break;
        case 'E': {
            std::vector<int> spine = {0, 2, 3, 4, 5, 6, 7};
            for (int i = 0; i + 1 < l - 1; ++i) edges.push_back({spine[i], spine[i + 1]});
            edges.push_back({1, 3});
            break;
        }
        case 'F':
            norm[2] = norm[3] = Rational(1);
            chain(4);
            break;
        case 'G':
            norm[0] = Rational(2, 3);
            edges.push_back({0, 1});
            break;
    }
    for (auto [i, j] : edges) {
        // On a diagram edge the inner product is -normsq/2 of the longer root.
        Rational nl = norm[i] > norm[j] ? norm[i] : norm[j];
        Rational ip = -nl / Rational(2);
        c[i][j] = (Rational(2) * ip / norm[j]).as_integer();
        c[j][i] = (Rational(2) * ip / norm[i]).as_integer();
    }
    return {c, norm};
}

} // namespace

const RootSystem& RootSystem::get(const RootSystemId& id) {
    static std::map<RootSystemId, std::unique_ptr<RootSystem>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) {
        auto rs = std::make_unique<RootSystem>(build(id));
        it = cache.emplace(id, std::move(rs)).first;
    }
    return *it->second;
}

RootSystem RootSystem::build(const RootSystemId& id) {
    if (!is_admissible(id.family, id.rank) || (id.family == 'D' && id.rank == 3))
        throw std::invalid_argument("inadmissible root system: " + id.str());
    RootSystem rs;
    rs.id_ = id;
    CartanData cd = bourbaki_cartan(id);
    rs.cartan_ = cd.cartan;
    int l = id.rank;
    rs.gram6_.assign(l, IntVec(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            // (a_i, a_j) = c_ij (a_j, a_j) / 2, scaled by 6
            Rational ip = Rational(cd.cartan[i][j]) * cd.normsq[j] / Rational(2);
            rs.gram6_[i][j] = (ip * Rational(6)).as_integer();
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (rs.gram6_[i][j] != rs.gram6_[j][i])
                throw std::logic_error("gram matrix not symmetric for " + id.str());
    rs.generate_positive_roots();
    rs.simply_laced_ = true;
    for (const Root& r : rs.positive_)
        if (r.normsq != Rational(2)) rs.simply_laced_ = false;

    // Coxeter number, exponents, c_max from the generated poset.
    rs.coxeter_ = rs.positive_.back().height + 1;
    if ((long long)rs.positive_.size() * 2 != (long long)l * rs.coxeter_)
        throw std::logic_error("generation bug: |Phi+| != l h / 2 for " + id.str());
    rs.exponents_ = rs.exponents_via_dual_partition();
    rs.c_max_ = *std::max_element(rs.positive_.back().c.begin(), rs.positive_.back().c.end());

    // Tables of the simple reflections on positive roots.
    rs.refl_table_.assign(l, std::vector<int>(rs.positive_.size()));
    for (int k = 0; k < l; ++k) {
        std::vector<int> alpha(l, 0);
        alpha[k] = 1;
        for (size_t i = 0; i < rs.positive_.size(); ++i) {
            std::vector<int> img = rs.reflect(alpha, rs.positive_[i].c);
            bool neg = std::any_of(img.begin(), img.end(), [](int x) { return x < 0; });
            if (neg)
                for (int& x : img) x = -x;
            rs.refl_table_[k][i] = rs.index_of(img);
            if (rs.refl_table_[k][i] < 0) throw std::logic_error("reflection left the root set");
        }
    }
    return rs;
}

void RootSystem::generate_positive_roots() {
    int l = id_.rank;
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> level;
    for (int i = 0; i < l; ++i) {
        std::vector<int> a(l, 0);
        a[i] = 1;
        known.insert(a);
        level.push_back(a);
    }
    auto add_root = [&](const std::vector<int>& v, int h) {
        Root r;
        r.c = v;
        r.height = h;
        positive_.push_back(r);
    };
    int h = 1;
    for (const auto& a : level) add_root(a, 1);
    while (!level.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& gamma : level) {
            for (int i = 0; i < l; ++i) {
                // root string through gamma in direction alpha_i:
                // gamma + alpha_i is a root iff p - <gamma, alpha_i> >= 1,
                // where p is the largest m with gamma - m alpha_i a root.
                long long pairing_val = 0;
                for (int j = 0; j < l; ++j) pairing_val += (long long)gamma[j] * cartan_[j][i];
                int p = 0;
                std::vector<int> down = gamma;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
                    bool neg = std::any_of(down.begin(), down.end(), [](int x) { return x < 0; });
                    if (zero || neg || !known.count(down)) break;
                    ++p;
                }
                if (p - pairing_val >= 1) {
                    std::vector<int> up = gamma;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        ++h;
        level.assign(next.begin(), next.end());
        for (const auto& v : level) {
            known.insert(v);
            add_root(v, h);
        }
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.c < b.c;
    });
    for (size_t i = 0; i < positive_.size(); ++i) {
        index_[positive_[i].c] = (int)i;
        positive_[i].normsq = normsq(positive_[i].c);
    }
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_positive_root(const std::vector<int>& coeffs) const {
    return index_.count(coeffs) > 0;
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
    if (index_.count(coeffs)) return true;
    std::vector<int> neg(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
    return index_.count(neg) > 0;
}

Rational RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
    long long s = 0;
    int l = id_.rank;
    for (int i = 0; i < l; ++i) {
        if (a[i] == 0) continue;
        long long row = 0;
        for (int j = 0; j < l; ++j) row += gram6_[i][j] * b[j];
        s += a[i] * row;
    }
    return Rational(s, 6);
}

long long RootSystem::pairing(const std::vector<int>& a, const std::vector<int>& b) const {
    return (Rational(2) * inner(a, b) / normsq(b)).as_integer();
}

Rational RootSystem::unit_inner_sq(const std::vector<int>& a, const std::vector<int>& b) const {
    Rational ip = inner(a, b);
    return ip * ip / (normsq(a) * normsq(b));
}

std::vector<int> RootSystem::reflect(const std::vector<int>& a, const std::vector<int>& b) const {
    long long k = pairing(b, a);
    std::vector<int> out = b;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= (int)k * a[i];
    if (!is_root(out)) throw std::logic_error("reflection image is not a root (generation bug)");
    return out;
}

std::vector<int> RootSystem::roots_of_height(int h) const {
    std::vector<int> idx;
    for (size_t i = 0; i < positive_.size(); ++i)
        if (positive_[i].height == h) idx.push_back((int)i);
    return idx;
}

std::vector<int> RootSystem::exponents_via_dual_partition() const {
    int hmax = positive_.back().height;
    std::vector<int> t(hmax + 2, 0);
    for (const Root& r : positive_) t[r.height]++;
    for (int r = 1; r < hmax; ++r)
        if (t[r] < t[r + 1])
            throw std::logic_error("height distribution not weakly decreasing");
    std::vector<int> exps;
    for (int r = 1; r <= hmax; ++r)
        for (int k = 0; k < t[r] - t[r + 1]; ++k) exps.push_back(r);
    return exps;
}

RootSystem::EigenExponents RootSystem::exponents_via_cartan_eigenvalues(double tol) const {
    int l = id_.rank;
    // The Cartan matrix is similar to a symmetric one: conjugate by
    // diag(sqrt(normsq)) to get 2 (a_i,a_j)/sqrt((a_i,a_i)(a_j,a_j)).
    std::vector<std::vector<double>> sym(l, std::vector<double>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            double ip = gram6_[i][j] / 6.0;
            double ni = gram6_[i][i] / 6.0, nj = gram6_[j][j] / 6.0;
            sym[i][j] = 2.0 * ip / std::sqrt(ni * nj);
        }
    std::vector<double> eig = symmetric_eigenvalues(sym);
    EigenExponents out;
    int h = coxeter_;
    for (double e : eig) {
        double m = (double)h / M_PI * std::acos((e - 2.0) / 2.0);
        out.raw.push_back(m);
        long long r = std::llround(m);
        double res = std::fabs(m - (double)r);
        out.max_residual = std::max(out.max_residual, res);
        if (res > tol)
            throw std::runtime_error("Cartan eigenvalue does not round to an integer exponent");
        out.rounded.push_back((int)r);
    }
    std::sort(out.rounded.begin(), out.rounded.end());
    return out;
}

HeightProfile RootSystem::height_profile() const {
    if (rank() < 2) throw std::invalid_argument("height_profile requires rank >= 2");
    HeightProfile hp;
    int l = rank(), h = coxeter_;
    std::vector<int> t(h + 1, 0);
    for (const Root& r : positive_) t[r.height]++;
    for (int r = 1; r <= h - 1; ++r) hp.theta_counts.push_back(t[r]);
    hp.dual_partition = exponents_;

    int m_second_top = exponents_[l - 2]; // m_{l-1}
    for (int ht = h - 1; ht > m_second_top; --ht) {
        std::vector<int> level = roots_of_height(ht);
        if (level.size() != 1)
            throw std::logic_error("expected a single root at height " + std::to_string(ht));
        hp.top_roots.push_back(positive_[level[0]]);
    }
    int m = (int)hp.top_roots.size();
    if (m != exponents_[1] - 1)
        throw std::logic_error("|U| != m_2 - 1");

    std::vector<int> neg_theta(l);
    for (int i = 0; i < l; ++i) neg_theta[i] = -hp.top_roots[0].c[i];
    hp.xi.push_back(neg_theta);
    for (int i = 0; i + 1 < m; ++i) {
        std::vector<int> d(l);
        for (int j = 0; j < l; ++j) d[j] = hp.top_roots[i].c[j] - hp.top_roots[i + 1].c[j];
        int sum = 0, nonneg = 1;
        for (int x : d) { sum += x; if (x < 0) nonneg = 0; }
        if (!nonneg || sum != 1)
            throw std::logic_error("difference of consecutive top roots is not simple");
        hp.xi.push_back(d);
    }

    hp.case1 = false;
    for (int tix = 1; tix < m; ++tix)
        if (pairing(hp.top_roots[tix - 1].c, hp.xi[tix]) == 3) hp.case1 = true;

    // Shortest chain -theta = lambda_0, lambda_1, ... with consecutive
    // negative inner products, ending at a coefficient-c_max simple root.
    const std::vector<int>& theta = positive_.back().c;
    std::vector<std::vector<int>> verts; // 0 = -theta, then simples
    verts.push_back(neg_theta);
    for (int i = 0; i < l; ++i) {
        std::vector<int> a(l, 0);
        a[i] = 1;
        verts.push_back(a);
    }
    auto coeff_of = [&](int v) { return v == 0 ? 1 : theta[v - 1]; };
    std::vector<int> prev(l + 1, -2);
    std::vector<int> queue = {0};
    prev[0] = -1;
    int found = coeff_of(0) == c_max_ ? 0 : -1;
    while (found < 0 && !queue.empty()) {
        std::vector<int> nq;
        for (int v : queue) {
            for (int w = 1; w <= l && found < 0; ++w) {
                if (prev[w] != -2) continue;
                if (inner(verts[v], verts[w]) < Rational(0)) {
                    prev[w] = v;
                    nq.push_back(w);
                    if (coeff_of(w) == c_max_) found = w;
                }
            }
            if (found >= 0) break;
        }
        queue = nq;
    }
    if (found < 0) throw std::logic_error("no coefficient chain to c_max");
    std::vector<int> path;
    for (int v = found; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (size_t s = 0; s < path.size(); ++s) {
        if (coeff_of(path[s]) != (int)s + 1)
            throw std::logic_error("coefficient chain is not 1,2,...,c_max");
        hp.lambda_chain.push_back(verts[path[s]]);
    }
    if ((int)hp.lambda_chain.size() != c_max_)
        throw std::logic_error("|Lambda| != c_max");
    return hp;
}

bool LemmaReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& p) { return p.second; });
}

LemmaReport RootSystem::structural_checks() const {
    if (rank() < 3) throw std::invalid_argument("structural_checks requires rank >= 3");
    LemmaReport rep;
    int l = rank();
    int m_second_top = exponents_[l - 2];
    std::vector<int> level = roots_of_height(m_second_top);

    bool has_long = std::any_of(level.begin(), level.end(), [&](int i) {
        return positive_[i].normsq == Rational(2);
    });
    rep.results.push_back({"long_root_at_second_top_height", has_long});

    HeightProfile hp = height_profile();
    bool irr_ok = true;
    for (int gi : level) {
        for (const Root& th : hp.top_roots) {
            std::vector<int> d(l);
            for (int j = 0; j < l; ++j) d[j] = th.c[j] - positive_[gi].c[j];
            bool hit = false;
            for (int k = 1; k <= 3 && !hit; ++k) {
                std::vector<int> q(l);
                bool divides = true;
                for (int j = 0; j < l; ++j) {
                    if (d[j] % k) { divides = false; break; }
                    q[j] = d[j] / k;
                }
                if (divides && is_positive_root(q)) hit = true;
            }
            if (!hit) irr_ok = false;
        }
    }
    rep.results.push_back({"top_minus_second_top_in_kPhi", irr_ok});

    if (l >= 5) {
        bool two = level.size() == 2 && exponents_[l - 3] < exponents_[l - 2];
        rep.results.push_back({"exactly_two_at_second_top_height", two});
    }

    if (l <= 4) {
        // two-of-three partial sums, over all signed triples with sum a root
        std::vector<std::vector<int>> all;
        for (const Root& r : positive_) {
            all.push_back(r.c);
            std::vector<int> n(l);
            for (int j = 0; j < l; ++j) n[j] = -r.c[j];
            all.push_back(n);
        }
        bool ok = true;
        size_t n = all.size();
        for (size_t a = 0; a < n && ok; ++a)
            for (size_t b = a + 1; b < n && ok; ++b) {
                std::vector<int> sab(l);
                bool ab_zero = true;
                for (int j = 0; j < l; ++j) { sab[j] = all[a][j] + all[b][j]; if (sab[j]) ab_zero = false; }
                if (ab_zero) continue;
                for (size_t c = b + 1; c < n && ok; ++c) {
                    std::vector<int> s(l), sac(l), sbc(l);
                    bool ac_zero = true, bc_zero = true;
                    for (int j = 0; j < l; ++j) {
                        sac[j] = all[a][j] + all[c][j];
                        sbc[j] = all[b][j] + all[c][j];
                        s[j] = sab[j] + all[c][j];
                        if (sac[j]) ac_zero = false;
                        if (sbc[j]) bc_zero = false;
                    }
                    if (ac_zero || bc_zero) continue;
                    if (!is_root(s)) continue;
                    int cnt = (is_root(sab) ? 1 : 0) + (is_root(sac) ? 1 : 0) + (is_root(sbc) ? 1 : 0);
                    if (cnt < 2) ok = false;
                }
            }
        rep.results.push_back({"two_of_three_partial_sums", ok});
    }
    return rep;
}

} // namespace weylarr

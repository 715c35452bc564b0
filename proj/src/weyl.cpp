#include "dp2/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dp2 {

int RootSet::count() const {
    return std::popcount(bits[0]) + std::popcount(bits[1]);
}

bool RootSet::operator<(const RootSet& o) const {
    if (bits[1] != o.bits[1]) return bits[1] < o.bits[1];
    return bits[0] < o.bits[0];
}

long long chamber_value(const CurveClass& r) {
    // digits of roots are bounded by 2 in absolute value, so powers of 3
    // make this functional injective near zero
    long long acc = 0, p = 1;
    for (int i = 0; i < 8; ++i, p *= 3) acc += p * r[i];
    return acc;
}

const std::vector<CurveClass>& e7_base() {
    static const std::vector<CurveClass> base = [] {
        const auto& roots = enumerate_roots();
        std::vector<CurveClass> pos;
        for (const auto& r : roots) {
            long long v = chamber_value(r);
            if (v == 0) throw std::logic_error("chamber functional vanishes on a root");
            if (v > 0) pos.push_back(r);
        }
        // simple = positive, not a sum of two positives
        std::vector<CurveClass> simple;
        for (const auto& p : pos) {
            bool decomposable = false;
            for (const auto& q : pos) {
                CurveClass d;
                for (size_t i = 0; i < d.size(); ++i) d[i] = p[i] - q[i];
                if (d == CurveClass{}) continue;
                if (intersect(d, d) == -2 && root_index(d) >= 0 && chamber_value(d) > 0) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) simple.push_back(p);
        }
        if (simple.size() != 7) throw std::logic_error("E7 base extraction failed");
        std::sort(simple.begin(), simple.end());
        return simple;
    }();
    return base;
}

namespace {

// permutation of root indices induced by the reflection in base root k
const std::vector<std::array<int, 126>>& base_reflection_perms() {
    static const std::vector<std::array<int, 126>> perms = [] {
        const auto& roots = enumerate_roots();
        std::vector<std::array<int, 126>> out;
        for (const auto& s : e7_base()) {
            std::array<int, 126> p{};
            for (int i = 0; i < 126; ++i) {
                int j = root_index(reflect(s, roots[i]));
                if (j < 0) throw std::logic_error("reflection left the root system");
                p[i] = j;
            }
            out.push_back(p);
        }
        return out;
    }();
    return perms;
}

RootSet apply_perm(const RootSet& s, const std::array<int, 126>& p) {
    RootSet out;
    for (int w = 0; w < 2; ++w) {
        std::uint64_t b = s.bits[w];
        while (b) {
            int i = std::countr_zero(b) + 64 * w;
            b &= b - 1;
            out.set(p[i]);
        }
    }
    return out;
}

// Dynkin node list for a full (multi-component) type: nodes carry their
// component id; adjacency matrix over all nodes.
struct DynkinPattern {
    int n = 0;
    std::vector<int> comp_of;
    std::vector<std::vector<int>> adj;  // 0/1
    std::vector<int> comp_first;        // first node index of each component
    AdeType type;
};

DynkinPattern make_pattern(const AdeType& t) {
    DynkinPattern pat;
    pat.type = t;
    for (size_t ci = 0; ci < t.comps.size(); ++ci) {
        int base = pat.n;
        pat.comp_first.push_back(base);
        pat.n += t.comps[ci].rank;
        for (int k = 0; k < t.comps[ci].rank; ++k) pat.comp_of.push_back(static_cast<int>(ci));
        pat.adj.resize(pat.n, std::vector<int>(pat.n, 0));
        for (auto [a, b] : dynkin_edges(t.comps[ci])) {
            pat.adj[base + a][base + b] = 1;
            pat.adj[base + b][base + a] = 1;
        }
    }
    // fix sizes for single-node case
    pat.adj.resize(pat.n, std::vector<int>(pat.n, 0));
    for (auto& row : pat.adj) row.resize(pat.n, 0);
    return pat;
}

int positive_root_count(const AdeType& t) {
    int n = 0;
    for (const auto& c : t.comps) {
        if (c.letter == 'A') n += c.rank * (c.rank + 1) / 2;
        else if (c.letter == 'D') n += c.rank * (c.rank - 1);
        else n += c.rank == 6 ? 36 : (c.rank == 7 ? 63 : 120);
    }
    return n;
}

// Exact small integer linear algebra: solve G x = p where G is the Gram
// matrix of the simple roots, via adjugate and determinant (entries stay
// tiny for rank <= 7). Returns false if the root is not in the span with
// integral coordinates; otherwise writes coords.
struct GramSolver {
    int k;
    long long det = 0;
    long long adj[7][7] = {};

    static long long minor_det(const long long m[7][7], const std::vector<int>& rows,
                               const std::vector<int>& cols) {
        int n = static_cast<int>(rows.size());
        if (n == 0) return 1;
        if (n == 1) return m[rows[0]][cols[0]];
        long long acc = 0, sign = 1;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        for (int j = 0; j < n; ++j, sign = -sign) {
            if (m[rows[0]][cols[j]] != 0) {
                std::vector<int> sub_cols;
                for (int jj = 0; jj < n; ++jj)
                    if (jj != j) sub_cols.push_back(cols[jj]);
                acc += sign * m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
            }
        }
        return acc;
    }

    explicit GramSolver(const std::vector<CurveClass>& base) {
        k = static_cast<int>(base.size());
        long long g[7][7] = {};
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) g[i][j] = intersect(base[i], base[j]);
        std::vector<int> all;
        for (int i = 0; i < k; ++i) all.push_back(i);
        det = minor_det(g, all, all);
        if (det == 0) throw std::logic_error("singular Gram matrix");
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                std::vector<int> rows, cols;
                for (int t = 0; t < k; ++t) {
                    if (t != j) rows.push_back(t);
                    if (t != i) cols.push_back(t);
                }
                long long c = minor_det(g, rows, cols);
                adj[i][j] = ((i + j) % 2 == 0) ? c : -c;
            }
    }

    bool integral_coords(const std::vector<CurveClass>& base, const CurveClass& r,
                         std::vector<long long>& coords) const {
        long long p[7];
        for (int i = 0; i < k; ++i) p[i] = intersect(base[i], r);
        coords.assign(k, 0);
        for (int i = 0; i < k; ++i) {
            long long y = 0;
            for (int j = 0; j < k; ++j) y += adj[i][j] * p[j];
            if (y % det != 0) return false;
            coords[i] = y / det;
        }
        // verify reconstruction (the root must actually lie in the span)
        CurveClass rec{};
        for (int i = 0; i < k; ++i)
            for (size_t c = 0; c < rec.size(); ++c)
                rec[c] += static_cast<int>(coords[i]) * base[i][c];
        return rec == r;
    }
};

struct SubsystemInfo {
    RootSet proper;  // roots of the subsystem, both signs
    std::vector<CurveClass> witness_base;
};

// Enumerate all saturated simple systems of the given type over the
// chamber-positive roots; returns one entry per subsystem.
std::vector<SubsystemInfo> enumerate_subsystems(const AdeType& type) {
    const auto& roots = enumerate_roots();
    std::vector<int> pos_idx;
    for (int i = 0; i < 126; ++i)
        if (chamber_value(roots[i]) > 0) pos_idx.push_back(i);

    DynkinPattern pat = make_pattern(type);
    const int n = pat.n;
    const int expected_pos = positive_root_count(type);

    std::unordered_map<RootSet, SubsystemInfo, RootSetHash> found;
    std::vector<int> chosen(n, -1);

    auto saturated_record = [&](const std::vector<int>& sel) {
        std::vector<CurveClass> base;
        base.reserve(n);
        for (int i : sel) base.push_back(roots[i]);
        GramSolver solver(base);
        RootSet proper;
        int nonneg = 0;
        std::vector<long long> coords;
        for (int ri = 0; ri < 126; ++ri) {
            if (!solver.integral_coords(base, roots[ri], coords)) continue;
            bool all_nn = true, all_np = true;
            for (long long x : coords) {
                if (x < 0) all_nn = false;
                if (x > 0) all_np = false;
            }
            if (all_nn || all_np) proper.set(ri);
            if (all_nn) ++nonneg;
        }
        if (nonneg != expected_pos) return;  // extra effective roots; not this type
        auto it = found.find(proper);
        if (it == found.end()) found.emplace(proper, SubsystemInfo{proper, std::move(base)});
    };

    // precomputed pairing table over all 126 roots
    static const auto& pair_tab = [] {
        static std::vector<std::array<signed char, 126>> t(126);
        const auto& rs = enumerate_roots();
        for (int i = 0; i < 126; ++i)
            for (int j = 0; j < 126; ++j)
                t[i][j] = static_cast<signed char>(intersect(rs[i], rs[j]));
        return t;
    }();

    // backtracking over chamber-positive roots
    auto rec = [&](auto&& self, int t) -> void {
        if (t == n) {
            saturated_record(chosen);
            return;
        }
        int ci = pat.comp_of[t];
        for (int idx : pos_idx) {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s) {
                if (pair_tab[chosen[s]][idx] != pat.adj[s][t]) ok = false;
                if (chosen[s] == idx) ok = false;
            }
            if (!ok) continue;
            // symmetry pruning: order equal-type components by their first root
            if (t == pat.comp_first[ci] && ci > 0 &&
                pat.type.comps[ci] == pat.type.comps[ci - 1] &&
                idx <= chosen[pat.comp_first[ci - 1]])
                continue;
            chosen[t] = idx;
            self(self, t + 1);
            chosen[t] = -1;
        }
    };
    rec(rec, 0);

    std::vector<SubsystemInfo> out;
    out.reserve(found.size());
    for (auto& [k, v] : found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(),
              [](const SubsystemInfo& a, const SubsystemInfo& b) { return a.proper < b.proper; });
    return out;
}

// extract the canonical base of a subsystem bitmask: chamber-positive roots
// that are not sums of two chamber-positive roots of the subsystem
std::vector<CurveClass> canonical_base(const RootSet& subsystem) {
    const auto& roots = enumerate_roots();
    std::vector<CurveClass> pos;
    for (int i = 0; i < 126; ++i)
        if (subsystem.test(i) && chamber_value(roots[i]) > 0) pos.push_back(roots[i]);
    std::vector<CurveClass> base;
    for (const auto& p : pos) {
        bool decomposable = false;
        for (const auto& q : pos) {
            CurveClass d;
            for (size_t i = 0; i < d.size(); ++i) d[i] = p[i] - q[i];
            if (d == CurveClass{}) continue;
            int j = root_index(d);
            if (j >= 0 && subsystem.test(j) && chamber_value(d) > 0) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) base.push_back(p);
    }
    std::sort(base.begin(), base.end());
    return base;
}

int count_lines(const std::vector<CurveClass>& base) {
    int n = 0;
    for (const auto& l : enumerate_line_classes()) {
        bool ok = true;
        for (const auto& r : base)
            if (intersect(l, r) < 0) { ok = false; break; }
        if (ok) ++n;
    }
    return n;
}

std::vector<Embedding> classify(const AdeType& type) {
    auto subs = enumerate_subsystems(type);
    std::unordered_set<RootSet, RootSetHash> all;
    for (const auto& s : subs) all.insert(s.proper);

    const auto& perms = base_reflection_perms();
    std::unordered_set<RootSet, RootSetHash> visited;
    std::vector<Embedding> orbits;

    for (const auto& s : subs) {
        if (visited.count(s.proper)) continue;
        // BFS over the W-orbit
        RootSet best = s.proper;
        long size = 0;
        std::vector<RootSet> stack{s.proper};
        visited.insert(s.proper);
        while (!stack.empty()) {
            RootSet cur = stack.back();
            stack.pop_back();
            ++size;
            if (cur < best) best = cur;
            for (const auto& p : perms) {
                RootSet img = apply_perm(cur, p);
                if (visited.insert(img).second) {
                    if (!all.count(img))
                        throw std::logic_error("orbit left the enumerated subsystem set");
                    stack.push_back(img);
                }
            }
        }
        Embedding emb;
        emb.type = type;
        emb.subsystem = best;
        emb.simple_roots = canonical_base(best);
        emb.line_count = count_lines(emb.simple_roots);
        emb.orbit_size = size;
        if (emb.simple_roots.size() != static_cast<size_t>(type.total_rank()))
            throw std::logic_error("canonical base has wrong rank");
        if (emb.line_count >= 1) orbits.push_back(std::move(emb));
    }
    std::sort(orbits.begin(), orbits.end(), [](const Embedding& a, const Embedding& b) {
        if (a.line_count != b.line_count) return a.line_count > b.line_count;
        return a.subsystem < b.subsystem;
    });
    return orbits;
}

}  // namespace

const std::vector<Embedding>& enumerate_embeddings(const AdeType& type) {
    static std::map<std::string, std::vector<Embedding>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = type.str();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, classify(type)).first;
    return it->second;
}

}  // namespace dp2

#include "dp2/surface.hpp"

#include "dp2/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dp2 {

namespace {

// classify a connected Dynkin subgraph and order its nodes canonically:
// A_k along the path, D/E with the fork leaves first (matching dynkin_edges)
SurfaceModel::Component classify_component(const SurfaceModel& m, std::vector<int> ids) {
    SurfaceModel::Component comp;
    int n = static_cast<int>(ids.size());
    auto deg = [&](int id) {
        int d = 0;
        for (int other : ids)
            if (other != id && m.pair(id, other) == 1) ++d;
        return d;
    };
    int branch = -1;
    for (int id : ids)
        if (deg(id) == 3) branch = id;

    std::vector<int> ordered;
    if (branch < 0) {
        // A_n: walk from an end; pick the lex-smaller end class for determinism
        std::vector<int> ends;
        for (int id : ids)
            if (deg(id) <= 1) ends.push_back(id);
        if (n == 1) ends = {ids[0], ids[0]};
        int start = ends[0];
        if (ends.size() >= 2 && m.curve(ends[1]) < m.curve(ends[0])) start = ends[1];
        ordered.push_back(start);
        while (static_cast<int>(ordered.size()) < n) {
            int cur = ordered.back();
            for (int id : ids) {
                if (std::find(ordered.begin(), ordered.end(), id) != ordered.end()) continue;
                if (m.pair(cur, id) == 1) {
                    ordered.push_back(id);
                    break;
                }
            }
        }
        comp.kind = {'A', n};
    } else {
        // arms from the branch node, shortest first
        std::vector<std::vector<int>> arms;
        for (int id : ids) {
            if (id == branch || m.pair(branch, id) != 1) continue;
            std::vector<int> arm{id};
            int prev = branch;
            while (true) {
                int cur = arm.back(), next = -1;
                for (int j : ids)
                    if (j != prev && j != cur && m.pair(cur, j) == 1) next = j;
                if (next < 0) break;
                arm.push_back(next);
                prev = cur;
            }
            arms.push_back(std::move(arm));
        }
        std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return m.curve(a[0]) < m.curve(b[0]);
        });
        if (arms[1].size() == 1) {
            // D_n layout: leaves, branch, then the long arm
            comp.kind = {'D', n};
            ordered = {arms[0][0], arms[1][0], branch};
            for (int id : arms[2]) ordered.push_back(id);
        } else {
            // E_n layout: long path through the branch, then the short arm
            comp.kind = {'E', n};
            for (auto it = arms[1].rbegin(); it != arms[1].rend(); ++it) ordered.push_back(*it);
            ordered.push_back(branch);
            for (int id : arms[2]) ordered.push_back(id);
            for (int id : arms[0]) ordered.push_back(id);
        }
    }
    comp.curve_ids = std::move(ordered);
    return comp;
}

void finalize_model(SurfaceModel& m) {
    // connected components of the (-2) Dynkin graph
    std::vector<bool> seen(m.num_neg_two, false);
    for (int i = 0; i < m.num_neg_two; ++i) {
        if (seen[i]) continue;
        std::vector<int> queue{i}, ids;
        seen[i] = true;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            ids.push_back(cur);
            for (int j = 0; j < m.num_neg_two; ++j)
                if (!seen[j] && m.pair(cur, j) == 1) {
                    seen[j] = true;
                    queue.push_back(j);
                }
        }
        std::sort(ids.begin(), ids.end());
        m.comps_.push_back(classify_component(m, ids));
    }
    std::sort(m.comps_.begin(), m.comps_.end(),
              [](const SurfaceModel::Component& a, const SurfaceModel::Component& b) {
                  if (!(a.kind == b.kind)) return a.kind < b.kind;
                  return a.curve_ids < b.curve_ids;
              });

    m.names_.assign(m.num_curves(), "");
    for (size_t ci = 0; ci < m.comps_.size(); ++ci)
        for (size_t k = 0; k < m.comps_[ci].curve_ids.size(); ++k) {
            std::ostringstream os;
            os << "E" << ci + 1;
            if (m.comps_[ci].curve_ids.size() > 1) os << "." << k + 1;
            m.names_[m.comps_[ci].curve_ids[k]] = os.str();
        }
    int ln = 0;
    for (int id = m.num_neg_two; id < m.num_curves(); ++id)
        m.names_[id] = "L" + std::to_string(++ln);

    // sanity: declared type matches the component decomposition
    AdeType got;
    for (const auto& c : m.comps_) got.comps.push_back(c.kind);
    std::sort(got.comps.begin(), got.comps.end());
    if (!(got == m.type)) throw std::logic_error("component classification mismatch: " + got.str());
}

SurfaceModel model_from_embedding(const Embedding& emb) {
    SurfaceModel m;
    m.type = emb.type;
    m.line_count = emb.line_count;
    m.sys.rank = 8;
    m.sys.origin = anticanonical_class(8);
    for (const auto& r : emb.simple_roots) {
        m.sys.curves.push_back(r);
        m.sys.self_int.push_back(-2);
    }
    m.num_neg_two = static_cast<int>(emb.simple_roots.size());
    for (const auto& l : enumerate_line_classes()) {
        bool ok = true;
        for (const auto& r : emb.simple_roots)
            if (intersect(l, r) < 0) { ok = false; break; }
        if (ok) {
            m.sys.curves.push_back(l);
            m.sys.self_int.push_back(-1);
        }
    }
    finalize_model(m);
    return m;
}

}  // namespace

std::string PointStratum::label(const SurfaceModel& m) const {
    if (generic()) return m.curve_name(carrier) + " generic";
    std::string s = m.curve_name(carrier);
    for (auto [id, mult] : incident) {
        s += "&" + m.curve_name(id);
        if (mult > 1) s += "(x" + std::to_string(mult) + ")";
    }
    return s;
}

SurfaceModel build_surface(const SingularitySpec& spec) {
    if (spec.type.empty()) {
        // smooth surface: no effective roots, all 56 lines
        Embedding emb;
        emb.type = spec.type;
        emb.line_count = 56;
        SurfaceModel m = model_from_embedding(emb);
        return m;
    }
    auto rows = rows_for_type(spec.type);
    if (rows.empty()) throw UnknownTypeError("not a degree-2 Du Val type: " + spec.type.str());
    const TableRow* row = nullptr;
    if (rows.size() == 1) {
        row = rows[0];
        if (spec.expected_lines && *spec.expected_lines != row->lines &&
            *spec.expected_lines != row->model_lines)
            throw UnknownTypeError(spec.type.str() + " has " + std::to_string(row->lines) +
                                   " lines, not " + std::to_string(*spec.expected_lines));
    } else {
        if (!spec.expected_lines)
            throw AmbiguousTypeError(spec.type.str() +
                                     " admits two embeddings; pass the line count (" +
                                     std::to_string(rows[0]->lines) + " or " +
                                     std::to_string(rows[1]->lines) + ")");
        for (auto* r : rows)
            if (r->lines == *spec.expected_lines || r->model_lines == *spec.expected_lines)
                row = r;
        if (!row)
            throw UnknownTypeError(spec.type.str() + " with " +
                                   std::to_string(*spec.expected_lines) + " lines is not in the table");
    }

    for (const auto& emb : enumerate_embeddings(spec.type)) {
        if (emb.line_count == row->model_lines) {
            SurfaceModel m = model_from_embedding(emb);
            m.table_delta = row->delta;
            return m;
        }
    }
    throw std::logic_error("no embedding realizes " + spec.type.str() + " with " +
                           std::to_string(row->model_lines) + " lines");
}

std::vector<PointStratum> point_strata(const SurfaceModel& m, int carrier) {
    std::vector<PointStratum> out;
    for (int id = 0; id < m.num_curves(); ++id) {
        if (id == carrier) continue;
        long long w = m.pair(carrier, id);
        for (long long k = 0; k < w; ++k) {
            PointStratum s;
            s.carrier = carrier;
            s.incident = {{id, 1}};
            out.push_back(std::move(s));
        }
    }
    PointStratum gen;
    gen.carrier = carrier;
    out.push_back(std::move(gen));
    return out;
}

DualGraph dual_graph(const SurfaceModel& m) {
    DualGraph g;
    g.n = m.num_curves();
    g.weight.assign(g.n, std::vector<long long>(g.n, 0));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) g.weight[i][j] = g.weight[j][i] = m.pair(i, j);
    return g;
}

std::string dual_graph_dot(const SurfaceModel& m) {
    std::ostringstream os;
    os << "graph dual_graph {\n";
    os << "  label=\"" << m.type.str() << ", " << m.line_count << " lines\";\n";
    for (int i = 0; i < m.num_curves(); ++i) {
        os << "  \"" << m.curve_name(i) << "\" [shape="
           << (m.is_neg_two(i) ? "box" : "ellipse") << ", kind=\""
           << (m.is_neg_two(i) ? "-2" : "-1") << "\"];\n";
    }
    for (int i = 0; i < m.num_curves(); ++i)
        for (int j = i + 1; j < m.num_curves(); ++j) {
            long long w = m.pair(i, j);
            if (w <= 0) continue;
            os << "  \"" << m.curve_name(i) << "\" -- \"" << m.curve_name(j) << "\" [weight="
               << w << (w > 1 ? ", style=bold" : "") << "];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace dp2

#include "flat2g/cech.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <queue>

#include <json.hpp>

namespace flat2g {

Nerve::Nerve(int num_vertices, std::vector<std::vector<int>> faces, bool good_cover,
             std::vector<std::string> vertex_names)
    : nv_(num_vertices), good_cover_(good_cover), names_(std::move(vertex_names)) {
    if (nv_ < 1) throw spec_error("nerve: need at least one vertex");
    if (names_.empty()) {
        names_.resize(nv_);
        for (int i = 0; i < nv_; ++i) names_[i] = "U" + std::to_string(i);
    }
    if (static_cast<int>(names_.size()) != nv_) throw spec_error("nerve: name count mismatch");
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty() || f.size() > 4) throw spec_error("nerve: face size out of range");
        for (int v : f)
            if (v < 0 || v >= nv_) throw spec_error("nerve: face vertex out of range");
        // downward closure
        int sz = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << sz); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < sz; ++i)
                if (mask & (1 << i)) sub.push_back(f[i]);
            faces_.insert(sub);
        }
    }
    for (int v = 0; v < nv_; ++v) faces_.insert({v});
}

bool Nerve::has_face(std::vector<int> s) const { return faces_.count(s) > 0; }

std::vector<std::vector<int>> Nerve::faces_of_size(int k) const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_)
        if (static_cast<int>(f.size()) == k) out.push_back(f);
    return out;
}

void Nerve::build_tuples() const {
    tuples_.assign(5, {});
    for (int k = 0; k <= 4; ++k) {
        std::vector<int> t(k + 1, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == k + 1) {
                std::vector<int> sup(t);
                std::sort(sup.begin(), sup.end());
                sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
                if (faces_.count(sup)) {
                    tuple_index_[t] = static_cast<int>(tuples_[k].size());
                    tuples_[k].push_back(t);
                }
                return;
            }
            for (int v = 0; v < nv_; ++v) {
                t[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
}

const std::vector<std::vector<int>>& Nerve::tuples(int k) const {
    if (tuples_.empty()) build_tuples();
    return tuples_[k];
}

int Nerve::tuple_index(const std::vector<int>& t) const {
    if (tuples_.empty()) build_tuples();
    auto it = tuple_index_.find(t);
    if (it == tuple_index_.end()) throw spec_error("nerve: tuple is not a simplex");
    return it->second;
}

std::vector<std::pair<int, int>> Nerve::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& f : faces_)
        if (f.size() == 2) out.emplace_back(f[0], f[1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> Nerve::spanning_tree() const {
    std::vector<std::vector<int>> adj(nv_);
    for (auto [i, j] : edges()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<std::pair<int, int>> tree;
    std::vector<bool> seen(nv_, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                tree.emplace_back(std::min(v, w), std::max(v, w));
                q.push(w);
            }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw spec_error("nerve: 1-skeleton is not connected");
    return tree;
}

bool Nerve::connected() const {
    try {
        spanning_tree();
        return true;
    } catch (const spec_error&) {
        return false;
    }
}

Nerve builtin_nerve(const std::string& name) {
    if (name == "circle3") {
        return Nerve(3, {{0, 1}, {1, 2}, {0, 2}}, true);
    }
    if (name == "sphere-tetra") {
        return Nerve(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, true);
    }
    if (name == "torus7") {
        // Moebius-Kantor 7-vertex torus triangulation: 21 edges, 14 triangles
        std::vector<std::vector<int>> faces;
        for (int i = 0; i < 7; ++i) {
            faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
            faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        return Nerve(7, faces, true);
    }
    throw spec_error("unknown builtin nerve: " + name);
}

Nerve load_nerve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open nerve file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw spec_error("bad nerve JSON: " + std::string(e.what()));
    }
    if (!j.contains("vertices")) throw spec_error("nerve file: missing 'vertices'");
    std::vector<std::string> names = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::vector<int>> faces;
    if (j.contains("simplices"))
        for (const auto& [k, list] : j["simplices"].items())
            for (const auto& s : list) faces.push_back(s.get<std::vector<int>>());
    bool good = j.value("good_cover", false);
    int nv = static_cast<int>(names.size());
    return Nerve(nv, std::move(faces), good, std::move(names));
}

Nerve barycentric_subdivision(const Nerve& n, std::vector<int>* vertex_image) {
    // vertices of the subdivision = faces of n (up to triangles); a simplex
    // per chain of faces. Supports nerves of dimension <= 2.
    std::vector<std::vector<int>> face_list;
    for (int k = 1; k <= 3; ++k)
        for (auto& f : n.faces_of_size(k)) face_list.push_back(f);
    std::map<std::vector<int>, int> face_id;
    std::vector<std::string> names;
    for (const auto& f : face_list) {
        face_id[f] = static_cast<int>(names.size());
        std::string nm = "b";
        for (int v : f) nm += "_" + std::to_string(v);
        names.push_back(nm);
    }
    std::vector<std::vector<int>> faces;
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (const auto& f : face_list)
        for (const auto& g : face_list) {
            if (f.size() >= g.size() || !subset(f, g)) continue;
            faces.push_back({face_id.at(f), face_id.at(g)});
            if (g.size() == 3)
                for (const auto& h : face_list)
                    if (f.size() < h.size() && h.size() < g.size() && subset(f, h) && subset(h, g))
                        faces.push_back({face_id.at(f), face_id.at(h), face_id.at(g)});
        }
    if (vertex_image) {
        vertex_image->clear();
        for (const auto& f : face_list) vertex_image->push_back(f.front());
    }
    int nv = static_cast<int>(names.size());
    return Nerve(nv, std::move(faces), n.good_cover(), std::move(names));
}

namespace {

Elt rho_at(const Nerve& n, const CechGData& d, int i, int j) {
    return d.rho[n.tuple_index({i, j})];
}

int64_t gamma_at(const Nerve& n, const CechGData& d, int i, int j, int k) {
    return d.gamma[n.tuple_index({i, j, k})];
}

}  // namespace

std::optional<Violation> validate_object(const Nerve& n, const TwoGroup& gg,
                                         const CechGData& data) {
    int64_t N = gg.modulus();
    if (data.rho.size() != n.tuples(1).size() || data.gamma.size() != n.tuples(2).size())
        return Violation{{}, "data tables do not cover all ordered simplices"};
    for (Elt r : data.rho)
        if (r < 0 || r >= gg.order()) return Violation{{}, "rho value out of range"};
    for (const auto& t : n.tuples(2)) {
        Elt lhs = gg.mul(rho_at(n, data, t[0], t[1]), rho_at(n, data, t[1], t[2]));
        if (lhs != rho_at(n, data, t[0], t[2])) return Violation{t, "d rho = 1"};
    }
    for (const auto& t : n.tuples(3)) {
        int64_t lhs = gamma_at(n, data, t[0], t[1], t[2]) + gamma_at(n, data, t[0], t[2], t[3]) -
                      gamma_at(n, data, t[0], t[1], t[3]) - gamma_at(n, data, t[1], t[2], t[3]);
        int64_t rhs = gg.aexp(rho_at(n, data, t[0], t[1]), rho_at(n, data, t[1], t[2]),
                              rho_at(n, data, t[2], t[3]));
        if (mod_floor(lhs - rhs, N) != 0) return Violation{t, "1/d gamma = rho^* alpha"};
    }
    return std::nullopt;
}

std::optional<Violation> validate_one_morphism(const Nerve& n, const TwoGroup& gg,
                                               const CechGData& src, const CechGData& dst,
                                               const CechOneMorphism& m) {
    int64_t N = gg.modulus();
    if (m.t.size() != static_cast<size_t>(n.num_vertices()) || m.eta.size() != n.tuples(1).size())
        return Violation{{}, "morphism tables do not cover all ordered simplices"};
    for (const auto& t : n.tuples(1)) {
        Elt lhs = gg.mul(m.t[t[0]], rho_at(n, src, t[0], t[1]));
        Elt rhs = gg.mul(rho_at(n, dst, t[0], t[1]), m.t[t[1]]);
        if (lhs != rhs) return Violation{t, "t rho_1 = rho_2 t"};
    }
    auto eta_at = [&](int i, int j) { return m.eta[n.tuple_index({i, j})]; };
    for (const auto& t : n.tuples(2)) {
        Elt r1a = rho_at(n, src, t[0], t[1]), r1b = rho_at(n, src, t[1], t[2]);
        Elt r2a = rho_at(n, dst, t[0], t[1]), r2b = rho_at(n, dst, t[1], t[2]);
        int64_t lhs = eta_at(t[0], t[1]) + eta_at(t[1], t[2]) - eta_at(t[0], t[2]) +
                      gamma_at(n, dst, t[0], t[1], t[2]) - gamma_at(n, src, t[0], t[1], t[2]);
        int64_t rhs = gg.aexp(m.t[t[0]], r1a, r1b) + gg.aexp(r2a, r2b, m.t[t[2]]) -
                      gg.aexp(r2a, m.t[t[1]], r1b);
        if (mod_floor(lhs - rhs, N) != 0) return Violation{t, "eta compatibility"};
    }
    return std::nullopt;
}

std::optional<Violation> validate_two_morphism(const Nerve& n, const TwoGroup& gg,
                                               const CechOneMorphism& m1,
                                               const CechOneMorphism& m2,
                                               const CechTwoMorphism& w) {
    int64_t N = gg.modulus();
    if (w.omega.size() != static_cast<size_t>(n.num_vertices()))
        return Violation{{}, "omega does not cover all vertices"};
    if (m1.t != m2.t) return Violation{{}, "t_1 = t_2"};
    for (const auto& t : n.tuples(1)) {
        int64_t lhs = m2.eta[n.tuple_index(t)] + w.omega[t[1]];
        int64_t rhs = w.omega[t[0]] + m1.eta[n.tuple_index(t)];
        if (mod_floor(lhs - rhs, N) != 0) return Violation{t, "eta_2 omega = omega eta_1"};
    }
    return std::nullopt;
}

TwoGerbe two_gerbe_of(const Nerve& n, const TwoGroup& gg, const std::vector<Elt>& rho) {
    CechGData tmp{rho, std::vector<int64_t>(n.tuples(2).size(), 0)};
    for (const auto& t : n.tuples(2)) {
        Elt lhs = gg.mul(rho_at(n, tmp, t[0], t[1]), rho_at(n, tmp, t[1], t[2]));
        if (lhs != rho_at(n, tmp, t[0], t[2])) throw spec_error("two_gerbe_of: d rho != 1");
    }
    TwoGerbe out;
    out.lambda.resize(n.tuples(3).size());
    for (size_t i = 0; i < n.tuples(3).size(); ++i) {
        const auto& t = n.tuples(3)[i];
        out.lambda[i] = gg.aexp(rho_at(n, tmp, t[0], t[1]), rho_at(n, tmp, t[1], t[2]),
                                rho_at(n, tmp, t[2], t[3]));
    }
    // closedness on 4-simplex tuples
    int64_t N = gg.modulus();
    auto lam = [&](int a, int b, int c, int d) { return out.lambda[n.tuple_index({a, b, c, d})]; };
    for (const auto& t : n.tuples(4)) {
        int64_t d = lam(t[1], t[2], t[3], t[4]) - lam(t[0], t[2], t[3], t[4]) +
                    lam(t[0], t[1], t[3], t[4]) - lam(t[0], t[1], t[2], t[4]) +
                    lam(t[0], t[1], t[2], t[3]);
        if (mod_floor(d, N) != 0) throw invariant_error("two_gerbe_of: lambda not closed");
    }
    return out;
}

std::vector<int64_t> cech_coboundary2(const Nerve& n, int64_t modulus,
                                      const std::vector<int64_t>& gamma) {
    if (gamma.size() != n.tuples(2).size()) throw spec_error("cech_coboundary2: size mismatch");
    auto g = [&](int a, int b, int c) { return gamma[n.tuple_index({a, b, c})]; };
    std::vector<int64_t> out(n.tuples(3).size());
    for (size_t i = 0; i < n.tuples(3).size(); ++i) {
        const auto& t = n.tuples(3)[i];
        out[i] = mod_floor(g(t[1], t[2], t[3]) - g(t[0], t[2], t[3]) + g(t[0], t[1], t[3]) -
                               g(t[0], t[1], t[2]),
                           modulus);
    }
    return out;
}

bool is_string_structure(const Nerve& n, const TwoGroup& gg, const CechGData& data) {
    if (data.rho.size() != n.tuples(1).size() || data.gamma.size() != n.tuples(2).size())
        return false;
    for (Elt r : data.rho)
        if (r < 0 || r >= gg.order()) return false;
    for (const auto& t : n.tuples(2)) {
        Elt lhs = gg.mul(rho_at(n, data, t[0], t[1]), rho_at(n, data, t[1], t[2]));
        if (lhs != rho_at(n, data, t[0], t[2])) return false;
    }
    TwoGerbe gerbe = two_gerbe_of(n, gg, data.rho);
    auto d = cech_coboundary2(n, gg.modulus(), data.gamma);
    for (size_t i = 0; i < d.size(); ++i)
        if (mod_floor(d[i] + gerbe.lambda[i], gg.modulus()) != 0) return false;
    return true;
}

CechGData gerbe_twist(const Nerve& n, const TwoGroup& gg, const CechGData& data,
                      const std::vector<int64_t>& beta) {
    if (beta.size() != n.tuples(2).size()) throw spec_error("gerbe_twist: beta size mismatch");
    auto d = cech_coboundary2(n, gg.modulus(), beta);
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) throw spec_error("gerbe_twist: beta is not closed");
    CechGData out = data;
    for (size_t i = 0; i < out.gamma.size(); ++i)
        out.gamma[i] = mod_floor(out.gamma[i] + beta[i], gg.modulus());
    return out;
}

namespace {

// tree-gauged flat G-cocycles in reduced form: value per unordered edge,
// identity on a spanning tree, enumerated with triangle propagation
struct RhoEnumerator {
    const Nerve& nerve;
    const FiniteGroup& g;
    std::vector<std::pair<int, int>> edge_list;
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::array<int, 3>> tri_edges;  // triangle -> edge ids
    std::vector<std::vector<int>> triangles;
    int64_t budget;

    RhoEnumerator(const Nerve& n, const FiniteGroup& gr, int64_t bud)
        : nerve(n), g(gr), budget(bud) {
        edge_list = n.edges();
        for (size_t i = 0; i < edge_list.size(); ++i)
            edge_index[edge_list[i]] = static_cast<int>(i);
        for (const auto& f : n.faces_of_size(3)) {
            triangles.push_back(f);
            tri_edges.push_back({edge_index.at({f[0], f[1]}), edge_index.at({f[1], f[2]}),
                                 edge_index.at({f[0], f[2]})});
        }
    }

    // rho on ordered pair from reduced values
    Elt rho_of(const std::vector<Elt>& vals, int i, int j) const {
        if (i == j) return 0;
        Elt v = vals[edge_index.at({std::min(i, j), std::max(i, j)})];
        return i < j ? v : g.inv(v);
    }

    bool triangles_ok(const std::vector<Elt>& vals) const {
        for (const auto& f : triangles) {
            // all orderings follow from one once inverses are consistent
            if (g.mul(rho_of(vals, f[0], f[1]), rho_of(vals, f[1], f[2])) !=
                rho_of(vals, f[0], f[2]))
                return false;
        }
        return true;
    }

    std::vector<std::vector<Elt>> enumerate() const {
        auto tree = nerve.spanning_tree();
        std::set<int> tree_ids;
        for (auto e : tree) tree_ids.insert(edge_index.at(e));
        std::vector<std::vector<Elt>> out;
        std::vector<Elt> vals(edge_list.size(), -1);
        for (int id : tree_ids) vals[id] = 0;
        int64_t visited = 0;
        std::function<void(std::vector<Elt>)> rec = [&](std::vector<Elt> cur) {
            // propagate: triangle with exactly one unknown edge determines it
            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t ti = 0; ti < triangles.size(); ++ti) {
                    const auto& f = triangles[ti];
                    const auto& es = tri_edges[ti];
                    int unknown = -1, count = 0;
                    for (int k = 0; k < 3; ++k)
                        if (cur[es[k]] < 0) {
                            unknown = k;
                            ++count;
                        }
                    if (count != 1) continue;
                    // rho(f0,f1) rho(f1,f2) = rho(f0,f2)
                    auto known = [&](int k) { return cur[es[k]] >= 0; };
                    auto get = [&](int a, int b) { return rho_of(cur, a, b); };
                    Elt v;
                    if (unknown == 0 && known(1) && known(2)) {
                        Elt x = g.mul(get(f[0], f[2]), g.inv(get(f[1], f[2])));
                        v = x;  // = rho(f0,f1), edge (f0,f1) ordered f0<f1
                    } else if (unknown == 1) {
                        Elt x = g.mul(g.inv(get(f[0], f[1])), get(f[0], f[2]));
                        v = x;
                    } else {
                        Elt x = g.mul(get(f[0], f[1]), get(f[1], f[2]));
                        v = x;
                    }
                    cur[es[unknown]] = v;
                    changed = true;
                }
            }
            int free_edge = -1;
            for (size_t i = 0; i < cur.size(); ++i)
                if (cur[i] < 0) {
                    free_edge = static_cast<int>(i);
                    break;
                }
            if (free_edge < 0) {
                if (triangles_ok(cur)) out.push_back(cur);
                return;
            }
            for (Elt v = 0; v < g.order(); ++v) {
                if (++visited > budget) throw budget_error("cech classify: rho search exceeds budget");
                auto next = cur;
                next[free_edge] = v;
                rec(std::move(next));
            }
        };
        rec(vals);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// expand reduced edge values to the full ordered-pair table
std::vector<Elt> expand_rho(const Nerve& n, const RhoEnumerator& re,
                            const std::vector<Elt>& vals) {
    std::vector<Elt> out(n.tuples(1).size());
    for (size_t i = 0; i < n.tuples(1).size(); ++i) {
        const auto& t = n.tuples(1)[i];
        out[i] = re.rho_of(vals, t[0], t[1]);
    }
    return out;
}

struct GammaSystem {
    std::vector<SparseRow> rows;     // d gamma rows over T3
    std::vector<int64_t> rhs;        // alpha pullback
    std::vector<SparseRow> eta_rows; // d eta rows over T2 (columns = T1)
};

GammaSystem build_gamma_system(const Nerve& n, const TwoGroup& gg, const std::vector<Elt>& rho) {
    GammaSystem sys;
    CechGData tmp{rho, {}};
    for (const auto& t : n.tuples(3)) {
        SparseRow row;
        row.entries = {{n.tuple_index({t[0], t[1], t[2]}), 1},
                       {n.tuple_index({t[0], t[2], t[3]}), 1},
                       {n.tuple_index({t[0], t[1], t[3]}), -1},
                       {n.tuple_index({t[1], t[2], t[3]}), -1}};
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(gg.aexp(rho_at(n, tmp, t[0], t[1]), rho_at(n, tmp, t[1], t[2]),
                                  rho_at(n, tmp, t[2], t[3])));
    }
    for (const auto& t : n.tuples(2)) {
        SparseRow row;
        row.entries = {{n.tuple_index({t[0], t[1]}), 1},
                       {n.tuple_index({t[1], t[2]}), 1},
                       {n.tuple_index({t[0], t[2]}), -1}};
        sys.eta_rows.push_back(std::move(row));
    }
    return sys;
}

// eta exists for the identity-t morphism iff d eta = delta has a solution;
// for constant t == c the right-hand side picks up alpha factors.
bool connects(const Nerve& n, const TwoGroup& gg, const std::vector<Elt>& rho_src,
              const std::vector<Elt>& rho_dst, Elt c, const std::vector<int64_t>& gamma_src,
              const std::vector<int64_t>& gamma_dst, const GammaSystem& sys) {
    CechGData s{rho_src, {}}, d{rho_dst, {}};
    std::vector<int64_t> rhs;
    rhs.reserve(n.tuples(2).size());
    size_t i = 0;
    for (const auto& t : n.tuples(2)) {
        Elt r1a = rho_at(n, s, t[0], t[1]), r1b = rho_at(n, s, t[1], t[2]);
        Elt r2a = rho_at(n, d, t[0], t[1]), r2b = rho_at(n, d, t[1], t[2]);
        int64_t v = gg.aexp(c, r1a, r1b) + gg.aexp(r2a, r2b, c) - gg.aexp(r2a, c, r1b) +
                    gamma_src[i] - gamma_dst[i];
        rhs.push_back(v);
        ++i;
    }
    return solvable_mod_n(sys.eta_rows, rhs, static_cast<int>(n.tuples(1).size()), gg.modulus());
}

}  // namespace

CechClassification classify(const Nerve& n, const TwoGroup& gg, int64_t budget, unsigned workers) {
    (void)workers;
    const FiniteGroup& g = gg.group();
    int64_t N = gg.modulus();
    RhoEnumerator re(n, g, budget);
    auto reduced = re.enumerate();

    // orbits under constant conjugation (the only residual gauge after the
    // spanning-tree normalization)
    std::vector<std::vector<Elt>> reps;
    std::set<std::vector<Elt>> seen;
    for (const auto& v : reduced) {
        if (seen.count(v)) continue;
        reps.push_back(v);
        for (Elt c = 0; c < g.order(); ++c) {
            std::vector<Elt> cv(v.size());
            for (size_t i = 0; i < v.size(); ++i) cv[i] = g.conj(c, v[i]);
            seen.insert(cv);
        }
    }

    CechClassification out;
    out.count = 0;
    out.g_orbit_count = static_cast<int64_t>(reps.size());
    for (const auto& vals : reps) {
        auto rho = expand_rho(n, re, vals);
        GammaSystem sys = build_gamma_system(n, gg, rho);
        auto sol = solve_mod_n(sys.rows, sys.rhs, static_cast<int>(n.tuples(2).size()), N);
        if (!sol) continue;  // no 2-group lift over this G-bundle

        // classes over rho under identity-t morphisms: BFS through kernel
        // generators with membership tests against d eta
        std::vector<std::vector<int64_t>> classes{sol->particular};
        std::vector<std::vector<int64_t>> frontier{sol->particular};
        auto same_class = [&](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
            return connects(n, gg, rho, rho, 0, a, b, sys);
        };
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            for (const auto& gen : sol->kernel) {
                std::vector<int64_t> cand(cur.size());
                for (size_t i = 0; i < cur.size(); ++i)
                    cand[i] = mod_floor(cur[i] + gen[i], N);
                bool found = false;
                for (const auto& have : classes)
                    if (same_class(cand, have)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    classes.push_back(cand);
                    frontier.push_back(cand);
                }
            }
        }

        // quotient by stabilizer morphisms with constant t = c
        std::vector<Elt> stab;
        for (Elt c = 0; c < g.order(); ++c) {
            bool fixes = true;
            for (size_t i = 0; i < vals.size() && fixes; ++i)
                fixes = g.conj(c, vals[i]) == vals[i];
            if (fixes) stab.push_back(c);
        }
        std::vector<int> parent(classes.size());
        for (size_t i = 0; i < classes.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (Elt c : stab)
            for (size_t i = 0; i < classes.size(); ++i)
                for (size_t j = 0; j < classes.size(); ++j)
                    if (find(static_cast<int>(i)) != find(static_cast<int>(j)) &&
                        connects(n, gg, rho, rho, c, classes[i], classes[j], sys))
                        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
        std::set<int> roots;
        for (size_t i = 0; i < classes.size(); ++i) roots.insert(find(static_cast<int>(i)));
        for (int r : roots) {
            CechGData rep;
            rep.rho = rho;
            rep.gamma = classes[r];
            out.classes.push_back(CechClass{std::move(rep)});
        }
        out.count += static_cast<int64_t>(roots.size());
    }
    return out;
}

bool equivalent(const Nerve& n, const TwoGroup& gg, const CechGData& a, const CechGData& b) {
    if (validate_object(n, gg, a) || validate_object(n, gg, b))
        throw spec_error("equivalent: invalid object");
    const FiniteGroup& g = gg.group();
    // t is determined along edges by t(j) = rho2(i,j)^-1 t(i) rho1(i,j);
    // propagate from t(0) over a spanning tree, then check all pairs
    auto tree = n.spanning_tree();
    std::vector<std::vector<int>> adj(n.num_vertices());
    for (auto [i, j] : tree) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    GammaSystem sys = build_gamma_system(n, gg, a.rho);
    for (Elt t0 = 0; t0 < g.order(); ++t0) {
        std::vector<Elt> t(n.num_vertices(), -1);
        t[0] = t0;
        std::queue<int> q;
        q.push(0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (t[w] < 0) {
                    Elt r1 = a.rho[n.tuple_index({v, w})];
                    Elt r2 = b.rho[n.tuple_index({v, w})];
                    t[w] = g.mul(g.mul(g.inv(r2), t[v]), r1);
                    q.push(w);
                }
        }
        bool ok = true;
        for (const auto& e : n.tuples(1)) {
            Elt lhs = g.mul(t[e[0]], a.rho[n.tuple_index(e)]);
            Elt rhs = g.mul(b.rho[n.tuple_index(e)], t[e[1]]);
            if (lhs != rhs) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // eta system with vertex-dependent t
        std::vector<int64_t> rhs;
        size_t i = 0;
        CechGData s{a.rho, {}}, d{b.rho, {}};
        for (const auto& tt : n.tuples(2)) {
            Elt r1a = rho_at(n, s, tt[0], tt[1]), r1b = rho_at(n, s, tt[1], tt[2]);
            Elt r2a = rho_at(n, d, tt[0], tt[1]), r2b = rho_at(n, d, tt[1], tt[2]);
            int64_t v = gg.aexp(t[tt[0]], r1a, r1b) + gg.aexp(r2a, r2b, t[tt[2]]) -
                        gg.aexp(r2a, t[tt[1]], r1b) + a.gamma[i] - b.gamma[i];
            rhs.push_back(v);
            ++i;
        }
        if (solvable_mod_n(sys.eta_rows, rhs, static_cast<int>(n.tuples(1).size()), gg.modulus()))
            return true;
    }
    return false;
}

Elt holonomy(const Nerve& n, const FiniteGroup& g, const CechGData& data,
             const std::vector<int>& loop) {
    if (loop.size() < 2 || loop.front() != loop.back())
        throw spec_error("holonomy: loop must be a closed vertex cycle");
    Elt acc = 0;
    for (size_t i = 0; i + 1 < loop.size(); ++i) {
        int idx;
        try {
            idx = n.tuple_index({loop[i], loop[i + 1]});
        } catch (const spec_error&) {
            throw spec_error("holonomy: consecutive loop vertices must span a 1-simplex");
        }
        acc = g.mul(acc, data.rho[idx]);
    }
    return acc;
}

std::optional<CechGData> complete_data(const Nerve& n, const TwoGroup& gg,
                                       const std::map<std::vector<int>, Elt>& rho_in,
                                       const std::map<std::vector<int>, int64_t>& gamma_in) {
    const FiniteGroup& g = gg.group();
    CechGData out;
    out.rho.assign(n.tuples(1).size(), -1);
    for (const auto& [t, v] : rho_in) out.rho[n.tuple_index(t)] = v;
    for (size_t i = 0; i < n.tuples(1).size(); ++i) {
        if (out.rho[i] >= 0) continue;
        const auto& t = n.tuples(1)[i];
        if (t[0] == t[1]) {
            out.rho[i] = 0;
            continue;
        }
        auto rev = rho_in.find({t[1], t[0]});
        if (rev == rho_in.end())
            throw spec_error("cech data: missing rho value on (" + std::to_string(t[0]) + "," +
                             std::to_string(t[1]) + ")");
        out.rho[i] = g.inv(rev->second);
    }
    // gamma: specified entries are constants; the rest are unknowns of the
    // linear system built from the quadruple equations
    std::vector<int> col_of(n.tuples(2).size(), -1);
    int cols = 0;
    out.gamma.assign(n.tuples(2).size(), 0);
    for (size_t i = 0; i < n.tuples(2).size(); ++i) {
        const auto& t = n.tuples(2)[i];
        auto it = gamma_in.find(t);
        if (it != gamma_in.end()) {
            out.gamma[i] = mod_floor(it->second, gg.modulus());
        } else {
            bool distinct = t[0] != t[1] && t[1] != t[2] && t[0] != t[2];
            if (distinct)
                throw spec_error("cech data: missing gamma value on (" + std::to_string(t[0]) +
                                 "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
            col_of[i] = cols++;
        }
    }
    if (cols == 0) return out;
    std::vector<SparseRow> rows;
    std::vector<int64_t> rhs;
    CechGData tmp{out.rho, {}};
    for (const auto& t : n.tuples(3)) {
        int ix[4] = {n.tuple_index({t[0], t[1], t[2]}), n.tuple_index({t[0], t[2], t[3]}),
                     n.tuple_index({t[0], t[1], t[3]}), n.tuple_index({t[1], t[2], t[3]})};
        int sign[4] = {1, 1, -1, -1};
        SparseRow row;
        int64_t c = gg.aexp(rho_at(n, tmp, t[0], t[1]), rho_at(n, tmp, t[1], t[2]),
                            rho_at(n, tmp, t[2], t[3]));
        for (int k = 0; k < 4; ++k) {
            if (col_of[ix[k]] >= 0) row.entries.emplace_back(col_of[ix[k]], sign[k]);
            else c -= sign[k] * out.gamma[ix[k]];
        }
        if (row.entries.empty()) continue;  // pure consistency rows are re-checked by validation
        rows.push_back(std::move(row));
        rhs.push_back(c);
    }
    auto sol = solve_mod_n(rows, rhs, cols, gg.modulus());
    if (!sol) return std::nullopt;
    for (size_t i = 0; i < n.tuples(2).size(); ++i)
        if (col_of[i] >= 0) out.gamma[i] = sol->particular[col_of[i]];
    return out;
}

CechGData pullback_data(const Nerve& refined, const std::vector<int>& vertex_image,
                        const Nerve& base, const TwoGroup& gg, const CechGData& data) {
    (void)gg;
    CechGData out;
    out.rho.resize(refined.tuples(1).size());
    out.gamma.resize(refined.tuples(2).size());
    for (size_t i = 0; i < refined.tuples(1).size(); ++i) {
        const auto& t = refined.tuples(1)[i];
        out.rho[i] = data.rho[base.tuple_index({vertex_image[t[0]], vertex_image[t[1]]})];
    }
    for (size_t i = 0; i < refined.tuples(2).size(); ++i) {
        const auto& t = refined.tuples(2)[i];
        out.gamma[i] = data.gamma[base.tuple_index(
            {vertex_image[t[0]], vertex_image[t[1]], vertex_image[t[2]]})];
    }
    return out;
}

}  // namespace flat2g

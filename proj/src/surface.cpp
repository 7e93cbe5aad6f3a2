#include "dw/surface.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace dw {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
        return c;
    }
};

int slot_of(int flag) { return flag % 3; }
int triangle_of(int flag) { return flag / 3; }
int corner(int triangle, int slot) { return 3 * triangle + slot % 3; }

// Glues the sides of a polygon (side j runs p_j -> p_{j+1}) according to
// `word`, triangulated by the fan from p_0.
GluedTriangulation polygon_fan(const std::vector<Letter>& word) {
    const int m = static_cast<int>(word.size());
    if (m < 4) throw SurfaceError("polygon fan needs at least four sides");
    const int t = m - 2;
    std::vector<int> pairing(3 * t, -1);
    std::vector<bool> reversal(3 * t, true);

    auto side_flag = [&](int j) {
        if (j == 0) return 0;
        if (j == m - 1) return 3 * (t - 1) + 2;
        return 3 * (j - 1) + 1;
    };
    auto glue = [&](int f, int g, bool rev) {
        pairing[f] = g;
        pairing[g] = f;
        reversal[f] = reversal[g] = rev;
    };
    for (int k = 2; k <= m - 2; ++k) glue(3 * (k - 2) + 2, 3 * (k - 1), true);

    std::map<int, std::vector<int>> occurrences;
    for (int j = 0; j < m; ++j) occurrences[word[j].generator].push_back(j);
    for (const auto& [gen, sides] : occurrences) {
        if (sides.size() != 2) throw SurfaceError("every generator must occur exactly twice in a polygon word");
        const Letter& a = word[sides[0]];
        const Letter& b = word[sides[1]];
        glue(side_flag(sides[0]), side_flag(sides[1]), a.inverse != b.inverse);
    }
    return GluedTriangulation(std::move(pairing), std::move(reversal));
}

std::vector<Letter> surface_word(const SurfaceSpec& spec) {
    std::vector<Letter> w;
    if (spec.orientable) {
        for (int i = 0; i < spec.genus; ++i) {
            w.push_back({2 * i, false});
            w.push_back({2 * i + 1, false});
            w.push_back({2 * i, true});
            w.push_back({2 * i + 1, true});
        }
    } else {
        for (int i = 0; i < spec.genus; ++i) {
            w.push_back({i, false});
            w.push_back({i, false});
        }
    }
    return w;
}

std::pair<int, int> sorted_edge(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// For each undirected edge, the triangles that contain it, with the direction
// (true when the triangle traverses it from the smaller to the larger vertex).
std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> edge_incidence(const SimplicialSurface& s) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> inc;
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t)
        for (int i = 0; i < 3; ++i) {
            const int u = s.triangles[t][i], v = s.triangles[t][(i + 1) % 3];
            inc[sorted_edge(u, v)].push_back({t, u < v});
        }
    return inc;
}

}  // namespace

SurfaceSpec SurfaceSpec::oriented(int g) {
    if (g < 0) throw SurfaceError("genus must be non-negative");
    return {true, g};
}

SurfaceSpec SurfaceSpec::crosscaps(int k) {
    if (k < 1) throw SurfaceError("non-orientable genus must be at least 1");
    return {false, k};
}

std::string SurfaceSpec::descriptor() const {
    return (orientable ? "orientable:" : "nonorientable:") + std::to_string(genus);
}

SurfaceSpec parse_surface(std::string_view d) {
    const auto colon = d.find(':');
    if (colon == std::string_view::npos) throw SurfaceError("surface descriptor needs a ':' (" + std::string(d) + ")");
    int g = -1;
    const std::string_view num = d.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), g);
    if (ec != std::errc() || ptr != num.data() + num.size()) throw SurfaceError("bad genus in " + std::string(d));
    const std::string_view kind = d.substr(0, colon);
    if (kind == "orientable") return SurfaceSpec::oriented(g);
    if (kind == "nonorientable") return SurfaceSpec::crosscaps(g);
    throw SurfaceError("unknown surface kind '" + std::string(kind) + "'");
}

GluedTriangulation::GluedTriangulation(std::vector<int> pairing, std::vector<bool> reversal)
    : pairing_(std::move(pairing)), reversal_(std::move(reversal)) {
    const int nf = static_cast<int>(pairing_.size());
    if (nf == 0 || nf % 3 != 0) throw SurfaceError("flag count must be a positive multiple of 3");
    if (static_cast<int>(reversal_.size()) != nf) throw SurfaceError("reversal table has wrong length");
    edge_of_flag_.assign(nf, -1);
    for (int f = 0; f < nf; ++f) {
        const int p = pairing_[f];
        if (p < 0 || p >= nf || p == f || pairing_[p] != f)
            throw SurfaceError("flag pairing is not a fixed-point-free involution at flag " + std::to_string(f));
        if (reversal_[p] != reversal_[f]) throw SurfaceError("reversal bit differs across a gluing");
        if (f < p) {
            edge_of_flag_[f] = edge_of_flag_[p] = static_cast<int>(edges_.size());
            edges_.push_back({f, p});
        }
    }

    UnionFind corners(nf);
    for (const auto& [f, p] : edges_) {
        const int fs = corner(triangle_of(f), slot_of(f)), fe = corner(triangle_of(f), slot_of(f) + 1);
        const int ps = corner(triangle_of(p), slot_of(p)), pe = corner(triangle_of(p), slot_of(p) + 1);
        if (reversal_[f]) {
            corners.unite(fs, pe);
            corners.unite(fe, ps);
        } else {
            corners.unite(fs, ps);
            corners.unite(fe, pe);
        }
    }
    vertex_count_ = corners.components();
}

bool GluedTriangulation::consistently_oriented() const {
    return std::all_of(reversal_.begin(), reversal_.end(), [](bool r) { return r; });
}

bool GluedTriangulation::connected() const {
    UnionFind tri(triangle_count());
    for (const auto& [f, p] : edges_) tri.unite(triangle_of(f), triangle_of(p));
    return tri.components() == 1;
}

GluedTriangulation flip_triangle(const GluedTriangulation& tri, int triangle) {
    if (triangle < 0 || triangle >= tri.triangle_count()) throw SurfaceError("triangle index out of range");
    static constexpr int remap[3] = {2, 1, 0};
    auto moved = [&](int f) { return triangle_of(f) == triangle ? 3 * triangle + remap[slot_of(f)] : f; };
    std::vector<int> pairing(tri.flag_count());
    std::vector<bool> reversal(tri.flag_count());
    for (int f = 0; f < tri.flag_count(); ++f) {
        const int p = tri.partner(f);
        pairing[moved(f)] = moved(p);
        reversal[moved(f)] = tri.reversal(f) != ((triangle_of(f) == triangle) != (triangle_of(p) == triangle));
    }
    return GluedTriangulation(std::move(pairing), std::move(reversal));
}

OrientationVerdict orientability_and_orientation(const GluedTriangulation& tri) {
    const int t = tri.triangle_count();
    std::vector<int> flip(t, -1);
    for (int start = 0; start < t; ++start) {
        if (flip[start] >= 0) continue;
        flip[start] = 0;
        std::queue<int> todo;
        todo.push(start);
        while (!todo.empty()) {
            const int cur = todo.front();
            todo.pop();
            for (int s = 0; s < 3; ++s) {
                const int f = 3 * cur + s;
                const int other = triangle_of(tri.partner(f));
                // need reversal ^ flip[cur] ^ flip[other] == 1
                const int wanted = (tri.reversal(f) ? 1 : 0) ^ 1 ^ flip[cur];
                if (flip[other] < 0) {
                    flip[other] = wanted;
                    todo.push(other);
                } else if (flip[other] != wanted) {
                    return {false, std::nullopt};
                }
            }
        }
    }
    GluedTriangulation out = tri;
    for (int k = 0; k < t; ++k)
        if (flip[k] == 1) out = flip_triangle(out, k);
    return {true, std::move(out)};
}

SurfaceSpec classify(const GluedTriangulation& tri) {
    if (!tri.connected()) throw SurfaceError("triangulation is not connected");
    const int chi = tri.euler_characteristic();
    if (orientability_and_orientation(tri).orientable) {
        if (chi > 2 || chi % 2 != 0) throw SurfaceError("impossible Euler characteristic for an orientable surface");
        return SurfaceSpec::oriented((2 - chi) / 2);
    }
    if (chi > 1) throw SurfaceError("impossible Euler characteristic for a non-orientable surface");
    return SurfaceSpec::crosscaps(2 - chi);
}

GluedTriangulation standard_triangulation(const SurfaceSpec& spec) {
    if (spec.orientable && spec.genus == 0)
        return GluedTriangulation({5, 4, 3, 2, 1, 0}, std::vector<bool>(6, true));
    if (!spec.orientable && spec.genus == 1)
        return polygon_fan({{0, false}, {1, false}, {0, false}, {1, false}});
    return polygon_fan(surface_word(spec));
}

GluedTriangulation pachner_22(const GluedTriangulation& input, int flag) {
    if (flag < 0 || flag >= input.flag_count()) throw SurfaceError("flag index out of range");
    const int t = triangle_of(flag);
    const int tp = triangle_of(input.partner(flag));
    if (t == tp) throw SurfaceError("2-2 move needs an edge between two distinct triangles (flag " + std::to_string(flag) + ")");

    // make the two triangles induce opposite directions on the edge
    const GluedTriangulation tri = input.reversal(flag) ? input : flip_triangle(input, tp);
    const int i = slot_of(flag);
    const int ip = slot_of(tri.partner(flag));

    // triangle t = (x,y,z) with side i = x->y; triangle tp = (y,x,w) with side ip = y->x
    std::vector<int> moved(tri.flag_count());
    std::iota(moved.begin(), moved.end(), 0);
    moved[corner(t, i + 2)] = 3 * t + 0;    // z->x
    moved[corner(tp, ip + 1)] = 3 * t + 1;  // x->w
    moved[corner(tp, ip + 2)] = 3 * tp + 0; // w->y
    moved[corner(t, i + 1)] = 3 * tp + 1;   // y->z

    std::vector<int> pairing(tri.flag_count(), -1);
    std::vector<bool> reversal(tri.flag_count(), true);
    const int diag_a = corner(t, i), diag_b = corner(tp, ip);
    for (int f = 0; f < tri.flag_count(); ++f) {
        if (f == diag_a || f == diag_b) continue;
        pairing[moved[f]] = moved[tri.partner(f)];
        reversal[moved[f]] = tri.reversal(f);
    }
    pairing[3 * t + 2] = 3 * tp + 2;  // w->z
    pairing[3 * tp + 2] = 3 * t + 2;  // z->w
    return GluedTriangulation(std::move(pairing), std::move(reversal));
}

GluedTriangulation pachner_13(const GluedTriangulation& tri, int triangle) {
    if (triangle < 0 || triangle >= tri.triangle_count()) throw SurfaceError("triangle index out of range");
    const int nt = tri.triangle_count();
    const int t1 = nt, t2 = nt + 1;
    std::vector<int> moved(tri.flag_count());
    std::iota(moved.begin(), moved.end(), 0);
    moved[corner(triangle, 1)] = 3 * t1;
    moved[corner(triangle, 2)] = 3 * t2;

    std::vector<int> pairing(3 * (nt + 2), -1);
    std::vector<bool> reversal(3 * (nt + 2), true);
    for (int f = 0; f < tri.flag_count(); ++f) {
        pairing[moved[f]] = moved[tri.partner(f)];
        reversal[moved[f]] = tri.reversal(f);
    }
    auto glue = [&](int f, int g) {
        pairing[f] = g;
        pairing[g] = f;
    };
    // (a,b,p), (b,c,p), (c,a,p) around the new vertex p
    glue(3 * triangle + 1, 3 * t1 + 2);
    glue(3 * t1 + 1, 3 * t2 + 2);
    glue(3 * t2 + 1, 3 * triangle + 2);
    return GluedTriangulation(std::move(pairing), std::move(reversal));
}

int SimplicialSurface::edge_count() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& t : triangles)
        for (int i = 0; i < 3; ++i) edges.insert(sorted_edge(t[i], t[(i + 1) % 3]));
    return static_cast<int>(edges.size());
}

void validate_simplicial(const SimplicialSurface& s) {
    std::set<std::array<int, 3>> seen;
    for (auto t : s.triangles) {
        for (int v : t)
            if (v < 0 || v >= s.vertex_count) throw SurfaceError("triangle vertex out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw SurfaceError("triangle with repeated vertex");
        std::sort(t.begin(), t.end());
        if (!seen.insert(t).second) throw SurfaceError("repeated triangle");
    }
    for (const auto& [edge, tris] : edge_incidence(s))
        if (tris.size() != 2)
            throw SurfaceError("edge {" + std::to_string(edge.first) + "," + std::to_string(edge.second) + "} lies in " +
                               std::to_string(tris.size()) + " triangles");
}

SimplicialSurface orient_coherently(SimplicialSurface s) {
    validate_simplicial(s);
    const auto inc = edge_incidence(s);
    const int t = static_cast<int>(s.triangles.size());
    std::vector<int> flip(t, -1);
    // per triangle, the incidences it participates in
    std::vector<std::vector<std::pair<int, bool>>> neighbors(t);  // (other triangle, same direction?)
    for (const auto& [edge, tris] : inc) {
        const bool same = tris[0].second == tris[1].second;
        neighbors[tris[0].first].push_back({tris[1].first, same});
        neighbors[tris[1].first].push_back({tris[0].first, same});
    }
    for (int start = 0; start < t; ++start) {
        if (flip[start] >= 0) continue;
        flip[start] = 0;
        std::queue<int> todo;
        todo.push(start);
        while (!todo.empty()) {
            const int cur = todo.front();
            todo.pop();
            for (const auto& [other, same] : neighbors[cur]) {
                const int wanted = flip[cur] ^ (same ? 1 : 0);
                if (flip[other] < 0) {
                    flip[other] = wanted;
                    todo.push(other);
                } else if (flip[other] != wanted) {
                    throw SurfaceError("simplicial surface is not orientable");
                }
            }
        }
    }
    for (int k = 0; k < t; ++k)
        if (flip[k] == 1) std::swap(s.triangles[k][1], s.triangles[k][2]);
    return s;
}

bool simplicial_orientable(const SimplicialSurface& s) {
    try {
        orient_coherently(s);
        return true;
    } catch (const SurfaceError&) {
        return false;
    }
}

SimplicialSurface tetrahedron_sphere() {
    SimplicialSurface s{4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}};
    validate_simplicial(s);
    return s;
}

SimplicialSurface seven_vertex_torus() {
    SimplicialSurface s;
    s.vertex_count = 7;
    for (int i = 0; i < 7; ++i) {
        s.triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
        s.triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return orient_coherently(std::move(s));
}

SimplicialSurface six_vertex_projective_plane() {
    SimplicialSurface s{6,
                        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                         {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}};
    validate_simplicial(s);
    return s;
}

GluedTriangulation to_glued(const SimplicialSurface& s) {
    validate_simplicial(s);
    const int nf = 3 * static_cast<int>(s.triangles.size());
    std::vector<int> pairing(nf, -1);
    std::vector<bool> reversal(nf, true);
    std::map<std::pair<int, int>, std::vector<int>> flags;
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t)
        for (int i = 0; i < 3; ++i) flags[sorted_edge(s.triangles[t][i], s.triangles[t][(i + 1) % 3])].push_back(3 * t + i);
    for (const auto& [edge, fl] : flags) {
        const int f = fl[0], g = fl[1];
        pairing[f] = g;
        pairing[g] = f;
        const auto& tf = s.triangles[triangle_of(f)];
        const auto& tg = s.triangles[triangle_of(g)];
        const bool opposite = tf[slot_of(f)] == tg[(slot_of(g) + 1) % 3];
        reversal[f] = reversal[g] = opposite;
    }
    return GluedTriangulation(std::move(pairing), std::move(reversal));
}

RelatorPresentation relator_presentation(const SurfaceSpec& spec) {
    RelatorPresentation p;
    p.orientable = spec.orientable;
    if (spec.orientable && spec.genus == 0) {
        p.trivial_group = true;
        return p;
    }
    p.generator_count = spec.orientable ? 2 * spec.genus : spec.genus;
    p.relator = surface_word(spec);
    return p;
}

RelatorPresentation rotated(const RelatorPresentation& p, int shift) {
    RelatorPresentation out = p;
    if (out.relator.empty()) return out;
    const int m = static_cast<int>(out.relator.size());
    std::rotate(out.relator.begin(), out.relator.begin() + ((shift % m) + m) % m, out.relator.end());
    return out;
}

}  // namespace dw

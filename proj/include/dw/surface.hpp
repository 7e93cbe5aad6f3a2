#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dw {

class SurfaceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Closed connected surface up to homeomorphism.
struct SurfaceSpec {
    bool orientable = true;
    int genus = 0;  // handles (orientable) or crosscaps (non-orientable, >= 1)

    static SurfaceSpec sphere() { return {true, 0}; }
    static SurfaceSpec oriented(int g);
    static SurfaceSpec crosscaps(int k);

    int euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }
    std::string descriptor() const;

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// `orientable:<g>` or `nonorientable:<k>`.
SurfaceSpec parse_surface(std::string_view descriptor);

/// Triangles glued along their sides. Flag 3*t+i is side i of triangle t,
/// running from corner i to corner i+1 in the triangle's chosen orientation.
/// reversal[f] is true when the two triangles meeting along f induce opposite
/// directions on the shared edge (the orientation-compatible gluing).
class GluedTriangulation {
  public:
    GluedTriangulation(std::vector<int> pairing, std::vector<bool> reversal);

    int triangle_count() const { return static_cast<int>(pairing_.size() / 3); }
    int flag_count() const { return static_cast<int>(pairing_.size()); }
    int edge_count() const { return flag_count() / 2; }
    int vertex_count() const { return vertex_count_; }
    int euler_characteristic() const { return vertex_count_ - edge_count() + triangle_count(); }

    int partner(int flag) const { return pairing_[flag]; }
    bool reversal(int flag) const { return reversal_[flag]; }
    const std::vector<int>& pairing() const { return pairing_; }
    const std::vector<bool>& reversals() const { return reversal_; }

    /// Edge id of a flag; edges are numbered by their smaller flag.
    int edge_of(int flag) const { return edge_of_flag_[flag]; }
    /// Smaller / larger flag of an edge.
    std::array<int, 2> edge_flags(int edge) const { return edges_[edge]; }

    /// Every gluing is orientation-compatible for the current triangle orientations.
    bool consistently_oriented() const;
    bool connected() const;

  private:
    std::vector<int> pairing_;
    std::vector<bool> reversal_;
    std::vector<int> edge_of_flag_;
    std::vector<std::array<int, 2>> edges_;
    int vertex_count_ = 0;
};

/// Reverses the orientation of one triangle: sides are relabeled (0<->2)
/// and each of its gluings toggles its reversal bit.
GluedTriangulation flip_triangle(const GluedTriangulation& tri, int triangle);

struct OrientationVerdict {
    bool orientable = false;
    std::optional<GluedTriangulation> oriented;  // consistently re-oriented copy when orientable
};

OrientationVerdict orientability_and_orientation(const GluedTriangulation& tri);

/// Classifies the surface from (orientability, Euler characteristic).
SurfaceSpec classify(const GluedTriangulation& tri);

/// Sphere and P^2 from two triangles; genus g via the fan of the 4g-gon
/// a1 b1 a1^-1 b1^-1 ...; k crosscaps via the fan of the 2k-gon a1 a1 a2 a2 ...
GluedTriangulation standard_triangulation(const SurfaceSpec& spec);

/// 2-2 move: replaces the two triangles on either side of the edge through
/// `flag` by the two triangles on the other diagonal of their quadrilateral.
/// Throws SurfaceError when both sides of the edge belong to one triangle.
GluedTriangulation pachner_22(const GluedTriangulation& tri, int flag);

/// 1-3 move: cones the triangle off to a new interior vertex.
GluedTriangulation pachner_13(const GluedTriangulation& tri, int triangle);

/// A simplicial surface with vertices 0..n-1 ordered by index; each triangle
/// is listed in its chosen cyclic orientation.
struct SimplicialSurface {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;

    int edge_count() const;
    int euler_characteristic() const { return vertex_count - edge_count() + static_cast<int>(triangles.size()); }
};

/// Checks 3 distinct vertices per triangle, no repeated triangle, every edge in exactly two triangles.
void validate_simplicial(const SimplicialSurface& s);
/// Re-orients the triangles coherently; throws SurfaceError if impossible.
SimplicialSurface orient_coherently(SimplicialSurface s);
bool simplicial_orientable(const SimplicialSurface& s);

SimplicialSurface tetrahedron_sphere();
SimplicialSurface seven_vertex_torus();
/// Six-vertex projective plane (hemi-icosahedron), for the non-orientable labeling sum.
SimplicialSurface six_vertex_projective_plane();

GluedTriangulation to_glued(const SimplicialSurface& s);

struct Letter {
    int generator;
    bool inverse;
};

struct RelatorPresentation {
    int generator_count = 0;
    std::vector<Letter> relator;
    bool orientable = true;
    bool trivial_group = false;  // the sphere: no generators, empty relator
};

/// Orientable genus g: prod [a_i, b_i]; k crosscaps: a1^2 ... ak^2.
RelatorPresentation relator_presentation(const SurfaceSpec& spec);
/// Same relator rotated left by `shift` letters.
RelatorPresentation rotated(const RelatorPresentation& p, int shift);

}  // namespace dw

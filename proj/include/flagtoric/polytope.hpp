#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "flagtoric/linalg.hpp"
#include "flagtoric/polynomial.hpp"
#include "flagtoric/poset.hpp"

namespace flagtoric {

// Lattice polytope given by its vertex set; the points are checked to be
// exactly the extreme points of their hull on construction. Derived data
// (facets, edges, face lattice) is memoized behind a lock so concurrent
// readers are safe.
class LatticePolytope {
 public:
  explicit LatticePolytope(std::vector<IntVec> vertices,
                           std::vector<std::string> labels = {});

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  std::size_t num_vertices() const { return verts_.size(); }
  const std::vector<IntVec>& vertices() const { return verts_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int vertex_index(const IntVec& p) const;

  struct Facet {
    IntVec normal;         // inward, primitive, in projected coordinates
    std::int64_t offset;   // normal . x >= offset, equality on the facet
    std::vector<int> verts;
  };
  struct Face {
    std::vector<int> verts;
    int dim;
  };

  const std::vector<Facet>& facets() const;
  // Sorted vertex-index pairs; derived from facet incidences and certified.
  const std::vector<std::pair<int, int>>& edges() const;
  // All nonempty faces (vertices up to the polytope itself), graded by dim.
  const std::vector<Face>& faces() const;

  IntPoly f_polynomial() const;
  IntPoly h_polynomial() const;

  std::vector<int> neighbors(int vertex) const;
  int edge_degree(int vertex) const;
  bool is_simple_at(int vertex) const;
  bool is_simple() const;
  bool is_cube() const;
  bool edge_directions_are_roots() const;

  struct AscentProfile {
    std::vector<int> ascents;    // per vertex
    bool face_condition = true;  // ascending edges span a face at each vertex
  };
  // Throws when the functional fails to separate some edge.
  AscentProfile ascent_profile(const IntVec& a) const;

  // Exact certificate for an edge: a functional equal on {u, v} and strictly
  // larger there than on all other vertices, found by rational simplex.
  std::optional<RatVec> edge_certificate(int u, int v) const;
  // Second oracle for non-edges: the midpoint lies in the hull of the rest.
  bool midpoint_in_rest(int u, int v) const;

  // Projected (still integral) coordinates in which the polytope is
  // full-dimensional; used by the face machinery.
  const std::vector<IntVec>& projected() const { return proj_; }
  const std::vector<int>& projection_columns() const { return proj_cols_; }

  GradedPoset face_poset() const;

 private:
  void ensure_facets() const;
  void ensure_edges() const;
  void ensure_faces() const;
  std::vector<int> minimal_face(const std::vector<int>& contains) const;

  int ambient_ = 0;
  int dim_ = 0;
  std::vector<IntVec> verts_;
  std::vector<std::string> labels_;
  std::vector<IntVec> proj_;
  std::vector<int> proj_cols_;

  // Derived data shared across copies; the vertex set is immutable.
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Facet>> facets;
    std::optional<std::vector<std::pair<int, int>>> edges;
    std::optional<std::vector<Face>> faces;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b);
bool combinatorially_equivalent(const LatticePolytope& a, const LatticePolytope& b);

// Cube with vertex coordinates in {0,1}^d; d = 0 gives a point.
LatticePolytope unit_cube(int d);

}  // namespace flagtoric

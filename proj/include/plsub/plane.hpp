#ifndef PLSUB_PLANE_HPP
#define PLSUB_PLANE_HPP

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "plsub/graph.hpp"

namespace plsub {

// Cyclic order of neighbors around each vertex. Faces are traced with the
// successor rule: the directed edge (x,y) continues to (y,z) where z follows
// x in order[y].
struct RotationSystem {
    std::vector<std::vector<int>> order;

    int n() const { return static_cast<int>(order.size()); }
    // every edge of g appears exactly once in each endpoint's rotation,
    // and rotations contain nothing else
    bool consistent_with(const Graph& g) const;
};

struct FaceSet {
    std::vector<std::vector<int>> faces;  // closed walks, one vertex sequence each
    int component_count = 0;
};

struct NonplanarWitness {
    // edges of a K_5 or K_{3,3} subdivision found in the host
    std::vector<std::pair<int, int>> edges;
    std::string kind;  // "K5", "K33", or "unknown"
};

struct PlaneGraph {
    Graph g;
    RotationSystem rs;
};

enum class FaceClass { Quadrangulation, Triangulation, Other };

// Planarity decision with embedding extraction (Boyer-Myrvold).
// Returns a rotation system if planar, otherwise a Kuratowski witness.
struct PlanarityOutcome {
    std::optional<RotationSystem> embedding;
    std::optional<NonplanarWitness> witness;
    bool planar() const { return embedding.has_value(); }
};

PlanarityOutcome planarity_embed(const Graph& g);

// Face walks by next-edge traversal. Throws EulerViolation when
// check_euler is set and some component fails n - e + f = 2.
FaceSet trace_faces(const Graph& g, const RotationSystem& rs, bool check_euler = true);

FaceClass classify(const Graph& g, const RotationSystem& rs);

// Rotation-system text format: one line per vertex, neighbors in cyclic order.
void write_rotation(std::ostream& os, const RotationSystem& rs);
RotationSystem read_rotation(std::istream& is, int n);

}  // namespace plsub

#endif

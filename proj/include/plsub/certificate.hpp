#ifndef PLSUB_CERTIFICATE_HPP
#define PLSUB_CERTIFICATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "plsub/quad.hpp"
#include "plsub/structure.hpp"

namespace plsub {

// One plane piece of the output: a quadrangulation (Case 2) or a
// triangulation (Case 1). All ids are input-graph vertices.
struct ComponentCert {
    std::string kind;  // "quad" or "tri"
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;  // aligned with `vertices`
    std::vector<Bag> bags;                   // quad components only
};

struct InsertionRecord {
    int vertex = -1;  // inserted leftover
    int m1 = -1, m2 = -1;  // the bag members it was joined to
    int component = -1;
};

struct Certificate {
    std::uint64_t input_hash = 0;
    int n = 0;
    double gamma = 0.0;
    int k = 0;
    int case_tag = 2;  // 1 when a Case-1 triangulation was peeled off
    std::vector<ComponentCert> components;
    std::vector<InsertionRecord> insertions;
    long total_edges = 0;
    long claimed_bound = 0;  // 2n - 4k
    std::vector<std::string> waived_hypotheses;
};

// Full pipeline: partition heuristically, build the regular decomposition,
// split on the reduced graph. Case 1 embeds a 3-partite triangulation into
// the small component's clusters and recurses on the rest (depth-capped);
// Case 2 builds a spanning quadrangulation per reduced component over the
// cleaned clusters and inserts every leftover vertex into a bag. Throws a
// stage-tagged error on failure; a returned Certificate always meets the
// 2n - 4k bound.
Certificate extract_planar(const Graph& g, double gamma, const PipelineConfig& cfg);

struct VerifyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Independent re-check through plane primitives only: containment in g,
// component disjointness, rotation consistency, Euler/face classification,
// per-kind edge counts, bag validity, totals, and the 2n - 4k bound.
VerifyReport verify_certificate(const Graph& g, const Certificate& cert);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
void write_certificate(std::ostream& os, const Certificate& cert);
Certificate read_certificate(std::istream& is);

}  // namespace plsub

#endif

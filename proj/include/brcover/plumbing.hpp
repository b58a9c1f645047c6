#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brcover/exact_linalg.hpp"

namespace brcover {

struct PlumbingVertex {
    long euler_number = 0;
    unsigned genus = 0;
    std::string label;
};

using PlumbingEdge = std::pair<std::size_t, std::size_t>;

/// Disk bundles over surfaces glued along a graph. Parallel edges are allowed
/// and counted with multiplicity; self-loops are not.
class PlumbingGraph {
public:
    PlumbingGraph() = default;
    PlumbingGraph(std::vector<PlumbingVertex> vertices, std::vector<PlumbingEdge> edges);

    const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
    const std::vector<PlumbingEdge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

private:
    std::vector<PlumbingVertex> vertices_;
    std::vector<PlumbingEdge> edges_;
};

/// Path on n genus-0 vertices of the given Euler number; labels are
/// "<prefix> 1" .. "<prefix> n".
PlumbingGraph linear_chain(long n, long euler_number, const std::string& label_prefix = "sphere");

/// The (d−1)-vertex chain of (−2)-spheres whose plumbing is the Milnor fiber
/// of z1² + z2² + z3^d. Throws DomainError for d < 1.
PlumbingGraph milnor_fiber_2_2_d(long d, const std::string& label_prefix = "sphere");

IntMatrix intersection_matrix(const PlumbingGraph& g);

PlumbingGraph disjoint_union(std::span<const PlumbingGraph> parts);

/// Connected components, each with vertices in their original relative order.
std::vector<PlumbingGraph> connected_components(const PlumbingGraph& g);

/// Rank of the intersection lattice, summed blockwise over connected components.
std::size_t lattice_rank(const PlumbingGraph& g);

}  // namespace brcover

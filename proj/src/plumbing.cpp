#include "brcover/plumbing.hpp"

#include <map>
#include <numeric>

namespace brcover {

PlumbingGraph::PlumbingGraph(std::vector<PlumbingVertex> vertices, std::vector<PlumbingEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
{
    for (const auto& [a, b] : edges_) {
        if (a >= vertices_.size() || b >= vertices_.size()) {
            throw DomainError("plumbing edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range for " + std::to_string(vertices_.size()) + " vertices");
        }
        if (a == b) throw DomainError("plumbing self-loop at vertex " + std::to_string(a));
    }
}

PlumbingGraph linear_chain(long n, long euler_number, const std::string& label_prefix)
{
    if (n < 0) throw DomainError("linear chain length must be nonnegative, got " + std::to_string(n));
    std::vector<PlumbingVertex> vertices;
    std::vector<PlumbingEdge> edges;
    for (long i = 0; i < n; ++i) {
        vertices.push_back({euler_number, 0, label_prefix + " " + std::to_string(i + 1)});
        if (i > 0) edges.emplace_back(i - 1, i);
    }
    return PlumbingGraph(std::move(vertices), std::move(edges));
}

PlumbingGraph milnor_fiber_2_2_d(long d, const std::string& label_prefix)
{
    if (d < 1) throw DomainError("Milnor fiber M(2,2,d) needs d >= 1, got " + std::to_string(d));
    return linear_chain(d - 1, -2, label_prefix);
}

IntMatrix intersection_matrix(const PlumbingGraph& g)
{
    const std::size_t n = g.size();
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = g.vertices()[i].euler_number;
    for (const auto& [a, b] : g.edges()) {
        q(a, b) += 1;
        q(b, a) += 1;
    }
    return q;
}

PlumbingGraph disjoint_union(std::span<const PlumbingGraph> parts)
{
    std::vector<PlumbingVertex> vertices;
    std::vector<PlumbingEdge> edges;
    for (const auto& p : parts) {
        const std::size_t offset = vertices.size();
        vertices.insert(vertices.end(), p.vertices().begin(), p.vertices().end());
        for (const auto& [a, b] : p.edges()) edges.emplace_back(a + offset, b + offset);
    }
    return PlumbingGraph(std::move(vertices), std::move(edges));
}

std::vector<PlumbingGraph> connected_components(const PlumbingGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : g.edges()) parent[find(a)] = find(b);

    // root -> (component index); vertices keep their relative order
    std::map<std::size_t, std::size_t> component_of_root;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t v = 0; v < n; ++v) {
        auto [it, inserted] = component_of_root.try_emplace(find(v), members.size());
        if (inserted) members.emplace_back();
        members[it->second].push_back(v);
    }
    std::vector<std::size_t> local(n);
    for (const auto& m : members)
        for (std::size_t i = 0; i < m.size(); ++i) local[m[i]] = i;

    std::vector<std::vector<PlumbingEdge>> edges(members.size());
    for (const auto& [a, b] : g.edges())
        edges[component_of_root.at(find(a))].emplace_back(local[a], local[b]);

    std::vector<PlumbingGraph> out;
    for (std::size_t c = 0; c < members.size(); ++c) {
        std::vector<PlumbingVertex> vertices;
        for (std::size_t v : members[c]) vertices.push_back(g.vertices()[v]);
        out.emplace_back(std::move(vertices), std::move(edges[c]));
    }
    return out;
}

std::size_t lattice_rank(const PlumbingGraph& g)
{
    std::size_t r = 0;
    for (const auto& c : connected_components(g)) r += rank(intersection_matrix(c));
    return r;
}

}  // namespace brcover

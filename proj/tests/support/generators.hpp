#ifndef TESTS_SUPPORT_GENERATORS_HPP
#define TESTS_SUPPORT_GENERATORS_HPP

#include "ababfree/geometry.hpp"
#include "ababfree/hypergraph.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

// Seeded random and exhaustive instance generators for tests.
namespace gen {

std::vector<std::string> index_labels(int n);  // "v0", "v1", ...

abab::OrderedHypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges);

// Random ABAB-free hypergraph: start random, then repeatedly delete one
// vertex of a violation witness from its edge until the check passes.
abab::OrderedHypergraph random_abab_free_hypergraph(std::mt19937_64& rng, int max_vertices,
                                                    int max_edges);

struct CurveScene {
    abab::PointSet points;
    abab::CurveFamily curves;
    int t = 0;  // max pairwise crossing count, >= 1
};

// Random polyline family (2..8 curves, pairwise crossings <= 4, no
// degeneracies) plus up to `max_points` sample points off the curves'
// meeting points.
CurveScene random_curve_scene(std::mt19937_64& rng, int max_points);

struct DiskScene {
    abab::PointSet points;
    abab::StabbedDiskFamily disks;
};

// Random disks all containing a random stab point (sometimes on the
// boundary), plus distinct points != stab.
DiskScene random_disk_scene(std::mt19937_64& rng, int max_points, int max_disks);

// Number of subsets of {0..n-1} with size >= min_edge_size, i.e. the
// candidate hyperedges enumerate_abab_free_hypergraphs draws from.
int candidate_edge_count(int n, int min_edge_size);

// Visit every hypergraph on exactly n vertices whose edge set is a
// combination of 1..max_edges candidate hyperedges and that is ABAB-free
// under the identity vertex order. Families are visited once, at the branch
// of their lexicographically least edge; supersets of violating prefixes are
// pruned (soundly: violations persist under adding edges). Only families
// whose least candidate index falls in [first_begin, first_end) are visited,
// so disjoint ranges partition the full enumeration for parallel runs.
void enumerate_abab_free_hypergraphs(
    int n, int max_edges, int min_edge_size, int first_begin, int first_end,
    const std::function<void(const abab::OrderedHypergraph&)>& visit);

} // namespace gen

#endif

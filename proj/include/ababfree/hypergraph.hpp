#ifndef ABABFREE_HYPERGRAPH_HPP
#define ABABFREE_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

namespace abab {

/**
 * A hypergraph whose vertices carry a fixed linear order (their index) and
 * whose hyperedges are sets of vertex indices.
 *
 * Normal form maintained by the constructors:
 *  - every edge is a strictly increasing, nonempty index list;
 *  - the edge list is sorted lexicographically and contains no duplicates
 *    (duplicate input edges are merged, set semantics).
 */
struct OrderedHypergraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> edges;

    int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges.size()); }
};

/**
 * Validate and normalize. `edges` entries must be nonempty, strictly
 * increasing, and reference existing vertices; duplicates are merged.
 * Throws Error{Invalid} otherwise, naming the offending edge.
 */
OrderedHypergraph make_hypergraph(std::vector<std::string> vertices,
                                  std::vector<std::vector<int>> edges);

/** Parse the wire format {"vertices":[...],"edges":[[...],...]}. */
OrderedHypergraph parse_hypergraph(const std::string& json_text);

/** Serialize to the wire format; parse(serialize(h)) == h, byte-stable. */
std::string serialize_hypergraph(const OrderedHypergraph& hg);

/** A vertex coloring; palette_size = number of distinct colors used. */
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;
};

/** Build a Coloring, computing palette_size. Colors must be >= 0. */
Coloring make_coloring(std::vector<int> colors);

/** Parse {"colors":[...]} (optional "palette" field is recomputed). */
Coloring parse_coloring(const std::string& json_text);

/** Serialize as {"colors":[...],"palette":k}. */
std::string serialize_coloring(const Coloring& coloring);

/**
 * True iff no hyperedge of size >= 2 is monochromatic. Size-1 edges are
 * vacuously proper. Throws Error{Invalid} if the color vector length does
 * not match the vertex count.
 */
bool is_proper_coloring(const OrderedHypergraph& hg, const Coloring& coloring);

/**
 * Exhaustive search for a proper coloring with colors {0..num_colors-1}.
 * Returns the lexicographically least proper coloring, or nullopt if none
 * exists. Guard: num_colors^vertex_count must be <= 10^8 (Error{Guard}).
 */
std::optional<Coloring> colorability_oracle(const OrderedHypergraph& hg, int num_colors);

/**
 * Witness that an ordered hypergraph contains a forbidden alternation:
 * witness lists vertices v_1 < v_2 < ... alternating between edge_a-only
 * and edge_b-only membership, starting in edge_a \ edge_b.
 */
struct PatternViolation {
    std::vector<int> edge_a;
    std::vector<int> edge_b;
    std::vector<int> witness;
};

/** Serialize as {"free":false,"edge_a":[...],"edge_b":[...],"witness":[...]}. */
std::string serialize_violation(const PatternViolation& violation);

} // namespace abab

#endif

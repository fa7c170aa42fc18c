#ifndef ABABFREE_PATTERN_HPP
#define ABABFREE_PATTERN_HPP

#include "ababfree/hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abab {

/**
 * A half-integer alternation parameter l >= 1, stored as twice_l = 2l to keep
 * arithmetic integral. A hypergraph is (AB)^l-free when no two edges A, B
 * admit an alternating vertex sequence a_1 < b_1 < a_2 < ... of length 2l
 * with a_i in A\B and b_i in B\A. Integer l forbids (AB)^l; half-integers
 * forbid the odd-length patterns (l = 2.5 forbids ABABA).
 */
struct HalfIntegerL {
    int twice_l = 4;
};

/** Parse "2", "2.5", "1.5", ...; requires l >= 1 (Error{Parse} otherwise). */
HalfIntegerL parse_half_integer_l(const std::string& text);

/** "2", "2.5", ... */
std::string format_half_integer_l(HalfIntegerL l);

/**
 * Length of the longest sequence a_1 < b_1 < a_2 < b_2 < ... with a_i in
 * A\B and b_i in B\A (counted in elements; starts on the A side).
 * A and B are strictly increasing index lists over the vertex order.
 * The greedy left-to-right scan is optimal; tests validate it against an
 * exhaustive subsequence search.
 */
int alternation_length(const std::vector<int>& edge_a, const std::vector<int>& edge_b);

/**
 * Scan all ordered edge pairs for an alternation of length >= 2l. Returns
 * the first violation in edge-list order (witness truncated to exactly
 * twice_l vertices), or nullopt when the hypergraph is (AB)^l-free under
 * its given vertex order.
 */
std::optional<PatternViolation> find_abl_violation(const OrderedHypergraph& hg, HalfIntegerL l);

/** Convenience wrapper: no violation exists. */
bool is_abl_free_ordered(const OrderedHypergraph& hg, HalfIntegerL l);

/**
 * Search all vertex permutations in lexicographic order for one under which
 * the hypergraph becomes (AB)^l-free. Returns the first such order (entry k
 * is the original index of the vertex placed at position k), or nullopt.
 * Guard: vertex_count <= 10 (Error{Guard}); this is an oracle, not a
 * production search.
 */
std::optional<std::vector<int>> find_abl_free_order(const OrderedHypergraph& hg, HalfIntegerL l);

/** Reorder a hypergraph by `order` (as returned by find_abl_free_order). */
OrderedHypergraph apply_vertex_order(const OrderedHypergraph& hg, const std::vector<int>& order);

} // namespace abab

#endif

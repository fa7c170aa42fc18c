#ifndef ABABFREE_GEOMETRY_INTERNAL_HPP
#define ABABFREE_GEOMETRY_INTERNAL_HPP

#include "ababfree/geometry.hpp"

#include <vector>

namespace abab {

/** Indices of s.pts in x-then-y order; Error{Invalid} on duplicate points. */
std::vector<int> sorted_point_order(const PointSet& s);

} // namespace abab

#endif

#pragma once

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "boxworld/exact_linalg.hpp"

namespace boxworld {

using IVector = std::vector<BigInt>;

struct DdOptions {
  std::size_t max_rays = 2'000'000;  ///< intermediate ray cap; exceeding it throws TooLarge
};

struct ConeRays {
  std::vector<IVector> rays;                       ///< primitive integer generators
  std::vector<boost::dynamic_bitset<>> zero_sets;  ///< rows of the system each ray makes tight
};

/// Extreme rays of the pointed cone {z : R z >= 0} by the double description
/// method. Rows are added in input order; adjacency is decided combinatorially
/// from zero sets, so all arithmetic stays in exact integers.
ConeRays extreme_rays(const std::vector<IVector>& rows, std::size_t dim, const DdOptions& options = {});

/// Vertices of the polytope {x >= 0, E x = g} in R^n. The set must be bounded;
/// an unbounded direction throws. An infeasible system yields no vertices.
std::vector<RVector> standard_form_vertices(const RMatrix& e, const RVector& g, std::size_t n,
                                            const DdOptions& options = {});

}  // namespace boxworld

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ripsrecon/complex.hpp"

namespace ripsrecon {

/// Boundary operator from k-chains to (k-1)-chains over the two-element
/// field. Column j lists the row indices of the (k-1)-faces of the j-th
/// k-simplex, sorted; every column has exactly k+1 entries, stored flat.
struct BoundaryMatrix {
  int dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries; // cols * (dim+1), sorted within columns

  std::span<const std::uint32_t> column(std::size_t j) const {
    return {entries.data() + j * (dim + 1), static_cast<std::size_t>(dim + 1)};
  }
};

/// Builds the boundary of dimension k (1 <= k <= max_dim). Faces are looked
/// up in the complex's lex-ordered (k-1)-list.
BoundaryMatrix boundary_matrix(const FlagComplex& complex, int k);

/// Rank over the two-element field by left-to-right column reduction with
/// pivot = lowest nonzero entry (largest row index) and sorted-column
/// symmetric difference. Deterministic.
std::size_t rank_z2(const BoundaryMatrix& m);

struct BettiProfile {
  std::vector<std::size_t> betti; // index = homology dimension
  long long euler = 0;            // alternating simplex count of the complex
  int certified_up_to = -1;

  std::string to_json() const;
};

/// Betti numbers over the two-element field for dimensions 0..up_to via
/// betti[k] = dim C_k - rank d_k - rank d_{k+1}. Requires up_to < max_dim
/// (the rank of d_{up_to+1} needs the (up_to+1)-simplices materialized) and
/// up_to >= 0.
BettiProfile betti_numbers(const FlagComplex& complex, int up_to);

/// Number of connected components of the 1-skeleton (union-find). Always
/// equals betti[0].
std::size_t connected_components(const FlagComplex& complex);

} // namespace ripsrecon

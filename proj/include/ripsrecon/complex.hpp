#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ripsrecon/geometry.hpp"

namespace ripsrecon {

/// Flag simplicial complex materialized up to a dimension cap. For each
/// dimension k, simplices are stored as strictly increasing (k+1)-tuples of
/// vertex indices, flat, in lexicographic order. The complex is closed under
/// faces and satisfies the flag property up to max_dim: a tuple is present
/// iff all its pairs are edges.
class FlagComplex {
public:
  FlagComplex(std::uint32_t n_vertices, int max_dim)
      : n_vertices_(n_vertices), cells_(static_cast<std::size_t>(max_dim) + 1) {
    for (std::uint32_t v = 0; v < n_vertices; ++v) cells_[0].push_back(v);
  }

  std::uint32_t n_vertices() const { return n_vertices_; }
  int max_dim() const { return static_cast<int>(cells_.size()) - 1; }

  /// Number of k-simplices (0 for k above the cap).
  std::size_t count(int k) const {
    if (k < 0 || k > max_dim()) return 0;
    return cells_[k].size() / (k + 1);
  }

  /// Vertex tuple of the idx-th k-simplex.
  std::span<const std::uint32_t> simplex(int k, std::size_t idx) const {
    return {cells_[k].data() + idx * (k + 1), static_cast<std::size_t>(k + 1)};
  }

  std::span<const std::uint32_t> cells(int k) const { return cells_[k]; }

  /// Raw append; tuples must arrive strictly increasing and in lex order.
  void push_simplex(int k, std::span<const std::uint32_t> vertices) {
    cells_[k].insert(cells_[k].end(), vertices.begin(), vertices.end());
  }

  /// Index of a k-simplex in the lex-ordered list, or npos if absent.
  std::size_t index_of(int k, std::span<const std::uint32_t> vertices) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::uint32_t n_vertices_;
  std::vector<std::vector<std::uint32_t>> cells_;
};

/// Vietoris-Rips flag complex at scale beta: vertices are all n points,
/// edges are pairs with d(i,j) < beta (strict), higher simplices are cliques
/// enumerated up to max_dim. beta > 0, max_dim >= 0.
FlagComplex rips_complex(const FiniteMetricSpace& metric, double beta,
                         int max_dim);

/// Barycentric subdivision: vertices are the simplices of the input in
/// canonical order (dimension-major, then lexicographic), simplices are the
/// chains of the face poset. The result is again a flag complex of the same
/// dimension. Requires the input materialized to its top dimension.
FlagComplex barycentric_subdivision(const FlagComplex& complex);

/// Alternating sum of simplex counts up to max_dim.
long long euler_characteristic(const FlagComplex& complex);

} // namespace ripsrecon

#include "ripsrecon/complex.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <stdexcept>

namespace ripsrecon {

namespace {

/// Fixed-width bitset over vertex ids, one per vertex, for clique extension.
class NeighborBits {
public:
  NeighborBits(std::size_t n_vertices)
      : words_((n_vertices + 63) / 64), bits_(n_vertices * words_, 0) {}

  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= 1ull << (j % 64);
  }

  const std::uint64_t* row(std::size_t i) const {
    return bits_.data() + i * words_;
  }

  std::size_t words() const { return words_; }

private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void extend_cliques(FlagComplex& out, const NeighborBits& nbr,
                    std::vector<std::uint32_t>& simplex,
                    std::vector<std::uint64_t>& cand, int max_dim,
                    std::vector<std::vector<std::uint64_t>>& scratch) {
  const int k = static_cast<int>(simplex.size()); // current simplex has k vertices
  if (k - 1 >= max_dim) return;
  const std::size_t words = nbr.words();
  // iterate candidates above the current maximum vertex
  const std::uint32_t last = simplex.back();
  for (std::size_t w = (last + 1) / 64; w < words; ++w) {
    std::uint64_t bits = cand[w];
    if (w == (last + 1) / 64 && (last + 1) % 64 != 0)
      bits &= ~0ull << ((last + 1) % 64);
    while (bits) {
      const std::uint32_t v =
          static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
      simplex.push_back(v);
      out.push_simplex(k, simplex);
      if (k < max_dim) {
        auto& next = scratch[k];
        const std::uint64_t* vrow = nbr.row(v);
        for (std::size_t u = 0; u < words; ++u) next[u] = cand[u] & vrow[u];
        extend_cliques(out, nbr, simplex, next, max_dim, scratch);
      }
      simplex.pop_back();
    }
  }
}

} // namespace

std::size_t FlagComplex::index_of(int k,
                                  std::span<const std::uint32_t> vertices) const {
  if (k < 0 || k > max_dim()) return npos;
  const auto& flat = cells_[k];
  const std::size_t width = k + 1;
  const std::size_t count = flat.size() / width;
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const std::uint32_t* tuple = flat.data() + mid * width;
    const auto cmp = std::lexicographical_compare_three_way(
        tuple, tuple + width, vertices.begin(), vertices.end());
    if (cmp == std::strong_ordering::equal) return mid;
    if (cmp == std::strong_ordering::less)
      lo = mid + 1;
    else
      hi = mid;
  }
  return npos;
}

FlagComplex rips_complex(const FiniteMetricSpace& metric, double beta,
                         int max_dim) {
  if (!(beta > 0.0)) throw std::invalid_argument("rips scale must be positive");
  if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
  const std::size_t n = metric.size();
  FlagComplex out(static_cast<std::uint32_t>(n), max_dim);
  if (max_dim == 0 || n < 2) return out;

  NeighborBits nbr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (metric(i, j) < beta) { // strict
        nbr.set(i, j);
        nbr.set(j, i);
      }

  std::vector<std::vector<std::uint64_t>> scratch(
      std::max(1, max_dim), std::vector<std::uint64_t>(nbr.words()));
  std::vector<std::uint32_t> simplex;
  std::vector<std::uint64_t> cand(nbr.words());
  for (std::uint32_t i = 0; i < n; ++i) {
    simplex.assign(1, i);
    const std::uint64_t* row = nbr.row(i);
    std::copy(row, row + nbr.words(), cand.begin());
    extend_cliques(out, nbr, simplex, cand, max_dim, scratch);
  }
  return out;
}

FlagComplex barycentric_subdivision(const FlagComplex& complex) {
  const int dim = complex.max_dim();
  // canonical vertex order of sd: dimension-major, then lex within dimension
  std::vector<std::size_t> dim_offset(dim + 2, 0);
  for (int k = 0; k <= dim; ++k)
    dim_offset[k + 1] = dim_offset[k] + complex.count(k);
  const std::size_t n_sd = dim_offset[dim + 1];

  FlagComplex out(static_cast<std::uint32_t>(n_sd), dim);

  // chains sigma_0 < sigma_1 < ... in the face poset, emitted in lex order of
  // the sd vertex indices by a DFS that extends each chain upward
  std::vector<std::uint32_t> chain;
  auto is_face = [&](int kl, std::size_t il, int kh, std::size_t ih) {
    auto small = complex.simplex(kl, il);
    auto big = complex.simplex(kh, ih);
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  // Walk chain starts in increasing sd-vertex index; every chain is a
  // strictly increasing index sequence, so lex emission order is automatic.
  auto emit_extensions = [&](auto&& self, int k, std::size_t idx) -> void {
    if (static_cast<int>(chain.size()) - 1 >= dim) return;
    for (int k2 = k + 1; k2 <= dim; ++k2) {
      const std::size_t cnt = complex.count(k2);
      for (std::size_t i2 = 0; i2 < cnt; ++i2) {
        if (!is_face(k, idx, k2, i2)) continue;
        chain.push_back(static_cast<std::uint32_t>(dim_offset[k2] + i2));
        out.push_simplex(static_cast<int>(chain.size()) - 1, chain);
        self(self, k2, i2);
        chain.pop_back();
      }
    }
  };

  for (int k = 0; k <= dim; ++k) {
    const std::size_t cnt = complex.count(k);
    for (std::size_t idx = 0; idx < cnt; ++idx) {
      chain.assign(1, static_cast<std::uint32_t>(dim_offset[k] + idx));
      emit_extensions(emit_extensions, k, idx);
    }
  }
  return out;
}

long long euler_characteristic(const FlagComplex& complex) {
  long long chi = 0;
  for (int k = 0; k <= complex.max_dim(); ++k) {
    const long long c = static_cast<long long>(complex.count(k));
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

} // namespace ripsrecon

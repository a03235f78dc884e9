#include "ripsrecon/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ripsrecon {

BoundaryMatrix boundary_matrix(const FlagComplex& complex, int k) {
  if (k < 1 || k > complex.max_dim())
    throw std::invalid_argument("boundary dimension out of range");
  BoundaryMatrix m;
  m.dim = k;
  m.rows = complex.count(k - 1);
  m.cols = complex.count(k);
  m.entries.reserve(m.cols * (k + 1));
  std::vector<std::uint32_t> face(k);
  for (std::size_t j = 0; j < m.cols; ++j) {
    auto simplex = complex.simplex(k, j);
    for (int drop = 0; drop <= k; ++drop) {
      int w = 0;
      for (int v = 0; v <= k; ++v)
        if (v != drop) face[w++] = simplex[v];
      const std::size_t row = complex.index_of(k - 1, face);
      if (row == FlagComplex::npos)
        throw std::invalid_argument("complex is not closed under faces");
      m.entries.push_back(static_cast<std::uint32_t>(row));
    }
    // faces obtained by dropping the largest vertex first are not sorted;
    // sort the column so reduction can use back() as the pivot
    std::sort(m.entries.end() - (k + 1), m.entries.end());
  }
  return m;
}

std::size_t rank_z2(const BoundaryMatrix& m) {
  constexpr std::uint32_t kFree = UINT32_MAX;
  std::vector<std::uint32_t> pivot_owner(m.rows, kFree);
  // reduced pivot columns, stored in one arena
  std::vector<std::uint32_t> arena;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stored; // offset, len
  std::size_t rank = 0;

  std::vector<std::uint32_t> cur, tmp;
  for (std::size_t j = 0; j < m.cols; ++j) {
    auto col = m.column(j);
    cur.assign(col.begin(), col.end());
    while (!cur.empty()) {
      const std::uint32_t pivot = cur.back();
      const std::uint32_t owner = pivot_owner[pivot];
      if (owner == kFree) {
        pivot_owner[pivot] = static_cast<std::uint32_t>(stored.size());
        stored.emplace_back(static_cast<std::uint32_t>(arena.size()),
                            static_cast<std::uint32_t>(cur.size()));
        arena.insert(arena.end(), cur.begin(), cur.end());
        ++rank;
        break;
      }
      // symmetric difference with the owning reduced column
      const auto [off, len] = stored[owner];
      const std::uint32_t* other = arena.data() + off;
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < cur.size() && b < len) {
        if (cur[a] < other[b]) tmp.push_back(cur[a++]);
        else if (cur[a] > other[b]) tmp.push_back(other[b++]);
        else { ++a; ++b; }
      }
      tmp.insert(tmp.end(), cur.begin() + a, cur.end());
      tmp.insert(tmp.end(), other + b, other + len);
      cur.swap(tmp);
    }
  }
  return rank;
}

BettiProfile betti_numbers(const FlagComplex& complex, int up_to) {
  if (up_to < 0) throw std::invalid_argument("up_to must be >= 0");
  if (up_to >= complex.max_dim())
    throw std::invalid_argument(
        "betti up to dimension " + std::to_string(up_to) +
        " needs simplices of dimension " + std::to_string(up_to + 1) +
        ", but the complex is materialized only up to " +
        std::to_string(complex.max_dim()));

  std::vector<std::size_t> ranks(up_to + 2, 0); // ranks[k] = rank of d_k
  for (int k = 1; k <= up_to + 1; ++k)
    ranks[k] = complex.count(k) == 0 ? 0 : rank_z2(boundary_matrix(complex, k));

  BettiProfile profile;
  profile.certified_up_to = up_to;
  profile.euler = euler_characteristic(complex);
  for (int k = 0; k <= up_to; ++k) {
    const std::size_t chains = complex.count(k);
    profile.betti.push_back(chains - ranks[k] - ranks[k + 1]);
  }
  return profile;
}

std::size_t connected_components(const FlagComplex& complex) {
  const std::size_t n = complex.n_vertices();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  if (complex.max_dim() >= 1) {
    auto edges = complex.cells(1);
    for (std::size_t e = 0; e + 1 < edges.size(); e += 2) {
      const std::uint32_t a = find(edges[e]), b = find(edges[e + 1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::size_t components = 0;
  for (std::uint32_t v = 0; v < n; ++v)
    if (find(v) == v) ++components;
  return components;
}

std::string BettiProfile::to_json() const {
  std::ostringstream out;
  out << "{\"betti\":[";
  for (std::size_t i = 0; i < betti.size(); ++i)
    out << (i ? "," : "") << betti[i];
  out << "],\"euler\":" << euler << ",\"certified_up_to\":" << certified_up_to
      << "}";
  return out.str();
}

} // namespace ripsrecon

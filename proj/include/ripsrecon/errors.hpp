#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ripsrecon {

/// Base class for library errors that are not plain argument mistakes.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A required hypothesis on the input data does not hold (e.g. a pairing
/// exceeds its Hausdorff budget, or a correspondence fails to cover a side).
class PreconditionError : public Error {
  using Error::Error;
};

/// The epsilon-neighborhood graph is not connected, so the path metric is
/// undefined at this epsilon. Carries one vertex from each of two distinct
/// components.
class DisconnectedGraph : public Error {
public:
  DisconnectedGraph(std::size_t a, std::size_t b, std::size_t n_components)
      : Error("epsilon-graph is disconnected: vertices " + std::to_string(a) +
              " and " + std::to_string(b) + " lie in different components (" +
              std::to_string(n_components) + " components total)"),
        vertex_a_(a), vertex_b_(b), n_components_(n_components) {}

  std::size_t vertex_a() const { return vertex_a_; }
  std::size_t vertex_b() const { return vertex_b_; }
  std::size_t n_components() const { return n_components_; }

private:
  std::size_t vertex_a_;
  std::size_t vertex_b_;
  std::size_t n_components_;
};

} // namespace ripsrecon

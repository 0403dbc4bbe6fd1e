#ifndef PATHCOV_SHORTEST_PATH_HPP
#define PATHCOV_SHORTEST_PATH_HPP

#include <optional>
#include <span>

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"

namespace pathcov {

/// Fewest-edges path from `from` to `to`, inclusive of both ends; (x) when
/// from == to; nullopt when `to` is unreachable. Breadth-first with
/// neighbours expanded in ascending index, so ties resolve deterministically.
std::optional<Path> shortest_path(const Digraph& g, Vertex from, Vertex to);

/// Multi-source variant: sources are seeded in the given order.
std::optional<Path> shortest_path_from_any(const Digraph& g, std::span<const Vertex> sources,
                                           Vertex to);

/// Shortest path from `from` to the nearest vertex flagged in `targets`.
std::optional<Path> shortest_path_to_any(const Digraph& g, Vertex from,
                                         std::span<const char> targets);

}  // namespace pathcov

#endif  // PATHCOV_SHORTEST_PATH_HPP

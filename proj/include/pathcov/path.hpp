#ifndef PATHCOV_PATH_HPP
#define PATHCOV_PATH_HPP

#include <functional>
#include <span>
#include <vector>

#include "pathcov/digraph.hpp"

namespace pathcov {

/// A non-empty vertex sequence, inclusive at both ends.
///
/// Enumerators build paths that are valid by construction and use the
/// unchecked constructor; `Path::checked` validates every step against a
/// graph and is the entry point for external input.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  Path(std::initializer_list<Vertex> vertices) : vertices_(vertices) {}

  /// Throws InvalidGraph if the sequence is empty or a step is not an edge of `g`.
  static Path checked(const Digraph& g, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Number of edges.
  std::size_t length() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }

  Vertex head() const { return vertices_.front(); }
  Vertex last() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  /// Drops the first vertex.
  Path tail() const { return Path({vertices_.begin() + 1, vertices_.end()}); }

  std::vector<Vertex>& mutable_vertices() { return vertices_; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// True when every consecutive pair is an edge of `g` and all vertices exist.
bool is_valid_path(const Digraph& g, std::span<const Vertex> vertices);

struct PathClass {
  bool is_simple = false;
  bool is_simple_cycle = false;
  bool is_e_acyclic = false;
};

bool is_simple(std::span<const Vertex> p);
/// (v1, ..., vn, v1) with (v1, ..., vn) simple; (v, v) counts.
bool is_simple_cycle(std::span<const Vertex> p);
/// No edge is traversed twice.
bool is_e_acyclic(std::span<const Vertex> p);

PathClass classify_path(const Digraph& g, const Path& p);

/// True iff `item` occurs as a contiguous run of `test`.
bool covers(const Path& test, const Path& item);

/// All cyclic shifts of a simple cycle. Throws InvalidGraph on a non-cycle.
std::vector<Path> rotations(const Path& cycle);

/// The i-th rotation, starting at cycle[i]; i < number of distinct vertices.
Path rotation(const Path& cycle, std::size_t i);

/// Concatenation that emits the shared junction vertex once.
/// Throws InvalidGraph if last(p) != head(q).
Path join(const Path& p, const Path& q);

/// Cycle traversed twice: c + tail(c).
Path doubled(const Path& cycle);

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

}  // namespace pathcov

#endif  // PATHCOV_PATH_HPP

#ifndef PATHCOV_STREAM_HPP
#define PATHCOV_STREAM_HPP

#include <cstdint>
#include <optional>

#include "pathcov/path.hpp"

namespace pathcov {

/// Pull-based producer. Single consumer: next() must not be called
/// concurrently, but a stream may be moved between threads.
template <class T>
class Stream {
 public:
  virtual ~Stream() = default;

  /// Next item, or nullopt once exhausted (and on every call after that).
  virtual std::optional<T> next() = 0;

  /// Largest number of paths (partial or buffered) the producer held at once.
  virtual std::size_t peak_retained_paths() const = 0;

  /// Current heap footprint of the producer's working state.
  virtual std::size_t memory_bytes() const = 0;

  /// Search steps taken so far (vertices pushed onto a search stack).
  virtual std::uint64_t steps() const = 0;
};

using PathStream = Stream<Path>;

}  // namespace pathcov

#endif  // PATHCOV_STREAM_HPP

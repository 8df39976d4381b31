#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace linkstream {

using Time = double;
using NodeId = std::uint32_t;
using Length = std::uint32_t;

inline constexpr Time kInfiniteTime = std::numeric_limits<Time>::infinity();
inline constexpr Length kInfiniteLength = std::numeric_limits<Length>::max();

// A time-stamped node. Metrics are queried between event nodes.
struct EventNode {
  Time t = 0;
  NodeId v = 0;

  friend bool operator==(const EventNode&, const EventNode&) = default;
};

// Link between two nodes over the closed interval [begin, end].
struct IntervalLink {
  NodeId u = 0;
  NodeId v = 0;
  Time begin = 0;
  Time end = 0;

  friend bool operator==(const IntervalLink&, const IntervalLink&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not follow the declared file grammar or link model.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A call whose preconditions do not hold (unknown node, bad source time, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace linkstream

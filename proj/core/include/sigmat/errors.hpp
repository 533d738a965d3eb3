#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigmat {

// Malformed graph6 input. offset() is the byte position of the first bad byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on a graph outside its stated hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested order exceeds what the internal enumerators handle.
class LimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigmat

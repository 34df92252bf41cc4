#pragma once

#include <stdexcept>
#include <string>

namespace relbraid {

// Malformed token in a word or a JSON document that does not follow the schema.
class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator index outside 1..strands-1, or a strand label outside 0..strands-1.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that parses but violates a structural requirement (closure, genericity, lengths).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A free strand is tangent to another strand at some anchor.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, int strand, int slice)
      : std::runtime_error(what), strand_(strand), slice_(slice) {}
  int strand() const { return strand_; }
  int slice() const { return slice_; }

 private:
  int strand_;
  int slice_;
};

// Two free strands share a gap of the skeleton at some slice.
class GapSeparationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The class can be deformed onto the boundary or onto a skeleton strand.
class ImproperClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A face received opposite exit verdicts, or a certificate did not hold.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An oracle or packed-code size limit was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace relbraid

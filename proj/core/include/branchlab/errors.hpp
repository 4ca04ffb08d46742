#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace branchlab {

// Bad arguments: malformed shapes, vertices outside a tree, invalid configs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The model violates a structural requirement (reducible or periodic mean matrix, ...).
class ModelPropertyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact population enumeration would produce more outcomes than allowed.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(double estimate, std::uint64_t cap)
      : std::runtime_error("population enumeration refused: ~" + std::to_string(estimate) +
                           " outcomes exceed cap " + std::to_string(cap)),
        estimate_(estimate),
        cap_(cap) {}
  double estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  double estimate_;
  std::uint64_t cap_;
};

// An exact (dynamic-programming) path was handed a functional that needs the marks of
// vertices other than leaves and branch points.
class InteriorMarksRequired : public std::invalid_argument {
 public:
  InteriorMarksRequired()
      : std::invalid_argument("functional depends on interior marks; only the brute-force path accepts it") {}
};

}  // namespace branchlab

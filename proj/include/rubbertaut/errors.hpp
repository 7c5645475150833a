#pragma once

#include <stdexcept>
#include <string>

namespace rubbertaut {

// Precondition violated by the caller.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficient requested beyond the truncation order of a series.
class TruncationExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Enumeration bound exceeded (Hurwitz oracle, series bounds).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verified identity failed.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear system with no unique solution where one was required.
class Inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A localization graph or stratum for which no factor/pushforward rule exists.
class UnsupportedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rubbertaut

#pragma once

#include <stdexcept>

namespace srr {

/// An exact search or enumeration would exceed its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srr

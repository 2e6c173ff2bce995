#pragma once

#include "pvf/scalar.hpp"

namespace pvf {

// The base space E ~ K^n with its scalar mode (K = Q or Q(i)).
struct SpaceDescriptor {
  int n = 1;
  ScalarMode mode = ScalarMode::rational;
  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

}  // namespace pvf

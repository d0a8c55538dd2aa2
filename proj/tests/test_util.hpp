#pragma once

#include "doctest.h"
#include "numrad/error.hpp"

// Error code thrown by f(), failing the current test if nothing is thrown.
template <class F>
numrad::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const numrad::Error& e) {
    return e.code();
  }
  FAIL("expected a numrad::Error");
  return numrad::ErrorCode::BadConfig;
}

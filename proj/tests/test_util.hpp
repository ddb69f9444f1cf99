#pragma once

#include <gtest/gtest.h>

#include <optional>

#include "psl2ogs/error.hpp"

// Runs fn and returns the library error code it threw, if any.
template <class F>
std::optional<psl2ogs::ErrorCode> error_code_of(F&& fn) {
  try {
    fn();
  } catch (const psl2ogs::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define EXPECT_ERROR(code, expr) \
  EXPECT_EQ(error_code_of([&] { (void)(expr); }), std::optional<psl2ogs::ErrorCode>(code))

#pragma once

#include <gtest/gtest.h>

#include <string>

#include "milnor/error.hpp"

// Runs fn and checks it throws MathError with the given code; returns the message.
template <class F>
std::string expect_error(milnor::Errc code, F&& fn) {
  try {
    fn();
  } catch (const milnor::MathError& err) {
    EXPECT_EQ(err.code(), code) << err.what();
    return err.what();
  }
  ADD_FAILURE() << "expected " << milnor::errc_name(code);
  return {};
}

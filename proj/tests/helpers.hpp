#pragma once

#include <string>
#include <vector>

#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"

namespace test {

inline vinberg::RatMatrix rat_rows(const std::vector<std::vector<long>>& rows) {
  vinberg::RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = vinberg::Rat(rows[i][j]);
  return m;
}

inline vinberg::IntMatrix int_rows(const std::vector<std::vector<long>>& rows) {
  vinberg::IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = vinberg::Int(rows[i][j]);
  return m;
}

// True when f() raises a vinberg::Error with exactly the given code.
template <typename F>
bool throws_code(F&& f, vinberg::ErrorCode c) {
  try {
    f();
  } catch (const vinberg::Error& e) {
    return e.code() == c;
  }
  return false;
}

}  // namespace test

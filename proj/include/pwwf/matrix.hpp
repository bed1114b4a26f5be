#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace pwwf {

struct Mat2 {
  std::array<std::array<std::int64_t, 2>, 2> v{};

  std::int64_t& operator()(int r, int c) { return v[r][c]; }
  std::int64_t operator()(int r, int c) const { return v[r][c]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Mat2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline Mat2 mat2_identity() { return mat2(1, 0, 0, 1); }

inline Mat2 operator*(const Mat2& l, const Mat2& r) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
  return out;
}

inline std::int64_t det(const Mat2& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline std::int64_t entry_sum(const Mat2& m) {
  return m(0, 0) + m(0, 1) + m(1, 0) + m(1, 1);
}

inline bool all_nonnegative(const Mat2& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m(i, j) < 0) return false;
  return true;
}

struct Mat3 {
  std::array<std::array<std::int64_t, 3>, 3> v{};

  std::int64_t& operator()(int r, int c) { return v[r][c]; }
  std::int64_t operator()(int r, int c) const { return v[r][c]; }
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

inline Mat3 mat3(std::int64_t a, std::int64_t b, std::int64_t c,
                 std::int64_t d, std::int64_t e, std::int64_t f,
                 std::int64_t g, std::int64_t h, std::int64_t i) {
  Mat3 m;
  m(0, 0) = a; m(0, 1) = b; m(0, 2) = c;
  m(1, 0) = d; m(1, 1) = e; m(1, 2) = f;
  m(2, 0) = g; m(2, 1) = h; m(2, 2) = i;
  return m;
}

inline Mat3 operator*(const Mat3& l, const Mat3& r) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j) + l(i, 2) * r(2, j);
  return out;
}

inline std::int64_t det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline std::string matrix_str(const Mat2& m) {
  return "[[" + std::to_string(m(0, 0)) + "," + std::to_string(m(0, 1)) + "],[" +
         std::to_string(m(1, 0)) + "," + std::to_string(m(1, 1)) + "]]";
}

inline std::string matrix_str(const Mat3& m) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) {
      if (j) out += ",";
      out += std::to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

using IncidenceMatrix2 = Mat2;
using IncidenceMatrix3 = Mat3;

}  // namespace pwwf

#pragma once

#include <stdexcept>
#include <vector>

#include "pwwf/matrix.hpp"
#include "pwwf/sturmian.hpp"

namespace pwwf {

// Incidence matrices of sliceable apotomic substitutions: nonnegative
// [[u, u+v],[w, w+2z]] with 2uz - vw = 1.
inline bool is_apotomic_matrix(const Mat2& m) {
  return det(m) == 1 && m(0, 0) >= 0 && m(1, 0) >= 0 && m(0, 1) >= m(0, 0) &&
         m(1, 1) >= m(1, 0) && (m(1, 1) - m(1, 0)) % 2 == 0;
}

// Incidence matrices on the apo-syntonic side: nonnegative
// [[2u+w, v+z],[w, z]] with 2uz - vw = 1.
inline bool is_apo_syntonic_matrix(const Mat2& m) {
  return det(m) == 1 && m(1, 0) >= 0 && m(1, 1) >= 0 && m(0, 0) >= m(1, 0) &&
         (m(0, 0) - m(1, 0)) % 2 == 0 && m(0, 1) >= m(1, 1);
}

// Lattice form of the conversion: defined whenever the second row has entries
// of equal parity.
inline Mat2 conversion_map(const Mat2& m) {
  if ((m(1, 1) - m(1, 0)) % 2 != 0)
    throw std::domain_error("conversion needs an even second-row difference");
  std::int64_t half = (m(1, 1) - m(1, 0)) / 2;
  return mat2(2 * m(0, 0) + m(1, 0), m(0, 1) - m(0, 0) + half, m(1, 0), half);
}

inline Mat2 conversion_map_inverse(const Mat2& m) {
  if ((m(0, 0) - m(1, 0)) % 2 != 0)
    throw std::domain_error("inverse conversion needs an even first-column difference");
  std::int64_t half = (m(0, 0) - m(1, 0)) / 2;
  return mat2(half, half + m(0, 1) - m(1, 1), m(1, 0), m(1, 0) + 2 * m(1, 1));
}

// The conversion restricted to the apotomic matrix family.
inline Mat2 apo_syntonic_conversion(const Mat2& m) {
  if (!is_apotomic_matrix(m))
    throw std::domain_error("matrix is outside the apotomic family");
  return conversion_map(m);
}

// Main-diagonal flip; swaps the two matrix families.
inline Mat2 diagonal_flip(const Mat2& m) {
  return mat2(m(1, 1), m(0, 1), m(1, 0), m(0, 0));
}

// Flip-conjugation identity on the apotomic family.
inline bool conversion_diagram_commutes(const Mat2& m) {
  if (!is_apotomic_matrix(m))
    throw std::domain_error("matrix is outside the apotomic family");
  return apo_syntonic_conversion(diagonal_flip(apo_syntonic_conversion(m))) == diagonal_flip(m);
}

namespace detail {

// Splits G^k D G^m; anything else is rejected.
struct GdgShape {
  long k;
  long m;
};

inline GdgShape parse_gdg(const NormalForm2& nf) {
  std::size_t i = 0;
  while (i < nf.size() && nf[i] == Generator2::G) ++i;
  if (i == nf.size() || nf[i] != Generator2::D)
    throw std::domain_error("expected a G-run, one D, then a G-run");
  std::size_t j = i + 1;
  while (j < nf.size() && nf[j] == Generator2::G) ++j;
  if (j != nf.size())
    throw std::domain_error("expected a G-run, one D, then a G-run");
  return {static_cast<long>(i), static_cast<long>(nf.size() - i - 1)};
}

inline NormalForm2 g_run(long count) {
  return NormalForm2(static_cast<std::size_t>(count), Generator2::G);
}

}  // namespace detail

// G^k D G^(2n)  ->  G^(2k+2) D G^(n-1).
inline NormalForm2 apo_syntonic_form(const NormalForm2& nf) {
  detail::GdgShape s = detail::parse_gdg(nf);
  if (s.m < 2 || s.m % 2 != 0)
    throw std::domain_error("trailing G-run must have positive even length");
  NormalForm2 out = detail::g_run(2 * s.k + 2);
  out.push_back(Generator2::D);
  NormalForm2 tail = detail::g_run(s.m / 2 - 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// G^k D G^(2n)  ->  G^k G~^(k+2) D G^(n-1).
inline NormalForm2 syntonic_form(const NormalForm2& nf) {
  detail::GdgShape s = detail::parse_gdg(nf);
  if (s.m < 2 || s.m % 2 != 0)
    throw std::domain_error("trailing G-run must have positive even length");
  NormalForm2 out = detail::g_run(s.k);
  out.insert(out.end(), static_cast<std::size_t>(s.k + 2), Generator2::GTilde);
  out.push_back(Generator2::D);
  NormalForm2 tail = detail::g_run(s.m / 2 - 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// The conversion, reversal and conversion again land on the plain reversal.
inline bool conversion_reversal_identity(long k, long n) {
  if (k < 0 || n < 1) throw std::domain_error("need k >= 0 and n >= 1");
  NormalForm2 nf = detail::g_run(k);
  nf.push_back(Generator2::D);
  NormalForm2 tail = detail::g_run(2 * n);
  nf.insert(nf.end(), tail.begin(), tail.end());
  return apo_syntonic_form(reverse_normal_form(apo_syntonic_form(nf))) ==
         reverse_normal_form(nf);
}

// The k+2 forms G^(k+l) G~^(k+2-l) D G^(n-1), l = 1..k+2, ordered by l.
// The last one is the plain apo-syntonic form.
inline std::vector<NormalForm2> zarlino_predecessors(long k, long n) {
  if (k < 0 || n < 1) throw std::domain_error("need k >= 0 and n >= 1");
  std::vector<NormalForm2> out;
  for (long l = 1; l <= k + 2; ++l) {
    NormalForm2 nf = detail::g_run(k + l);
    nf.insert(nf.end(), static_cast<std::size_t>(k + 2 - l), Generator2::GTilde);
    nf.push_back(Generator2::D);
    NormalForm2 tail = detail::g_run(n - 1);
    nf.insert(nf.end(), tail.begin(), tail.end());
    out.push_back(nf);
  }
  return out;
}

}  // namespace pwwf

#include <cstdio>

#include "pwwf/family.hpp"
#include "pwwf/pairwise.hpp"
#include "pwwf/sturmian.hpp"
#include "pwwf/triple.hpp"

// Walks one conjugation cycle of the three-letter family and prints what the
// library knows about each row: the divided mode, its two-letter projections,
// and a decomposition certificate when one exists.

using namespace pwwf;

int main() {
  FamilyParams params(1, 1);
  Substitution3 seed = family_substitution(params);
  std::printf("seed mode %s, length %ld\n\n", mode_of(seed).str().c_str(),
              seed.total_length());

  for (const FamilyTableRow& row : family_table(params)) {
    std::printf("%-18s %-10s", row.mode.str().c_str(), row.label.c_str());
    for (Projection p : {Projection::Apotomic, Projection::Syntonic,
                         Projection::ApoSyntonic}) {
      Substitution2 side = project_substitution(substitution_from_mode(row.mode), p);
      std::printf("  %s=%s|%s", projection_name(p), side.image_x().str().c_str(),
                  side.image_y().str().c_str());
    }
    if (row.decomposition)
      std::printf("  cert=%s", row.decomposition->str().c_str());
    std::printf("\n");
  }

  std::printf("\nbisection of cacacac: %s\n", bisect(Word("cacacac")).str().c_str());

  auto [mf, mg] = family_matrices(params);
  std::printf("incidence pair: %s -> %s, conversion agrees: %s\n",
              matrix_str(mf).c_str(), matrix_str(mg).c_str(),
              apo_syntonic_conversion(mf) == mg ? "yes" : "no");
  return 0;
}

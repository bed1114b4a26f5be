#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pwwf/automorphism.hpp"
#include "pwwf/conversion.hpp"
#include "pwwf/pairwise.hpp"
#include "pwwf/sturmian.hpp"
#include "pwwf/triple.hpp"

namespace pwwf {

struct FamilyParams {
  long k;
  long n;

  FamilyParams(long k_value, long n_value) : k(k_value), n(n_value) {
    if (k < 0 || n < 1) throw std::domain_error("family parameters need k >= 0 and n >= 1");
  }
};

// G^k D G^(2n).
inline NormalForm2 family_apotomic_form(const FamilyParams& p) {
  NormalForm2 nf(static_cast<std::size_t>(p.k), Generator2::G);
  nf.push_back(Generator2::D);
  nf.insert(nf.end(), static_cast<std::size_t>(2 * p.n), Generator2::G);
  return nf;
}

// G^(2k+2) D G^(n-1).
inline NormalForm2 family_apo_syntonic_form(const FamilyParams& p) {
  return apo_syntonic_form(family_apotomic_form(p));
}

// G^k G~^(k+2) D G^(n-1).
inline NormalForm2 family_syntonic_form(const FamilyParams& p) {
  return syntonic_form(family_apotomic_form(p));
}

// The bisecting substitution of the family cell, in closed form:
//   a -> a^k b a,  b -> a^k c a,  c -> (a^k b a a^k c a)^(n-1) a^k b a a^k c.
inline Substitution3 family_substitution(const FamilyParams& p) {
  std::string run(static_cast<std::size_t>(p.k), 'a');
  std::string ia = run + "ba";
  std::string ib = run + "ca";
  std::string ic;
  for (long i = 0; i < p.n - 1; ++i) ic += ia + ib;
  ic += ia + run + "c";
  return Substitution3(Word(ia), Word(ib), Word(ic));
}

// Closed-form incidence matrices of the apotomic and apo-syntonic sides.
inline std::pair<Mat2, Mat2> family_matrices(const FamilyParams& p) {
  Mat2 mf = mat2(p.k + 1, 2 * p.n * (p.k + 1) + p.k, 1, 2 * p.n + 1);
  Mat2 mg = mat2(2 * p.k + 3, p.n * (2 * p.k + 3) - 1, 1, p.n);
  return {mf, mg};
}

struct FamilyTableRow {
  DividedMode mode;
  ModeClassification classification;
  std::string label;
  std::optional<Decomposition> decomposition;
};

namespace detail {

inline std::string row_label(const std::vector<ModeKind>& kinds, std::size_t r,
                             const Substitution3& s) {
  std::size_t prev = (r + kinds.size() - 1) % kinds.size();
  switch (kinds[r]) {
    case ModeKind::Morphic: {
      bool standard_pair =
          recognize_special_standard(project_substitution(s, Projection::Apotomic)).has_value() &&
          recognize_special_standard(project_substitution(s, Projection::ApoSyntonic)).has_value();
      return standard_pair ? "morphic**" : "morphic";
    }
    case ModeKind::BadSyntonic: return "bad*";
    case ModeKind::BadApotomic: return "bad**";
    case ModeKind::GoodAmorphic:
      return kinds[prev] == ModeKind::BadSyntonic ? "good*" : "good";
    case ModeKind::Irregular: return "irregular";
  }
  throw std::logic_error("unreachable");
}

// One syntonic-defect row, one apotomic-defect row, good rows between them,
// morphic rows everywhere else.
inline void check_cycle_shape(const std::vector<ModeKind>& kinds) {
  std::size_t L = kinds.size();
  std::size_t bad_star = L, bad_double = L;
  for (std::size_t r = 0; r < L; ++r) {
    if (kinds[r] == ModeKind::Irregular)
      throw std::logic_error("irregular row inside an authentic cycle");
    if (kinds[r] == ModeKind::BadSyntonic) {
      if (bad_star != L) throw std::logic_error("second syntonic-defect row");
      bad_star = r;
    }
    if (kinds[r] == ModeKind::BadApotomic) {
      if (bad_double != L) throw std::logic_error("second apotomic-defect row");
      bad_double = r;
    }
  }
  if (bad_star == L || bad_double == L)
    throw std::logic_error("defect rows missing from the cycle");
  for (std::size_t r = (bad_star + 1) % L; r != bad_double; r = (r + 1) % L)
    if (kinds[r] != ModeKind::GoodAmorphic)
      throw std::logic_error("non-good row between the defect rows");
  for (std::size_t r = (bad_double + 1) % L; r != bad_star; r = (r + 1) % L)
    if (kinds[r] != ModeKind::Morphic)
      throw std::logic_error("non-morphic row outside the defect arc");
}

}  // namespace detail

// The full conjugation cycle of the family cell, with labels and
// decompositions for the morphic rows.
inline std::vector<FamilyTableRow> family_table(const FamilyParams& p) {
  std::vector<Substitution3> cycle = conjugation_cycle(family_substitution(p));
  std::vector<ModeKind> kinds;
  std::vector<ModeClassification> classifications;
  for (const Substitution3& s : cycle) {
    classifications.push_back(classify_mode(s));
    kinds.push_back(classifications.back().kind);
  }
  detail::check_cycle_shape(kinds);
  std::vector<FamilyTableRow> rows;
  for (std::size_t r = 0; r < cycle.size(); ++r) {
    std::optional<Decomposition> d;
    if (kinds[r] == ModeKind::Morphic) d = decide_morphic(cycle[r]);
    rows.push_back({mode_of(cycle[r]), classifications[r],
                    detail::row_label(kinds, r, cycle[r]), std::move(d)});
  }
  return rows;
}

// ac | ba || (caba)^(n-1) cab: the production-irreducible good root.
inline Substitution3 irreducible_good_root(long n) {
  if (n < 1) throw std::domain_error("family parameters need n >= 1");
  std::string ic;
  for (long i = 0; i < n - 1; ++i) ic += "caba";
  ic += "cab";
  return Substitution3(Word("ac"), Word("ba"), Word(ic));
}

// Production chain carrying the irreducible root for n onto a good row of
// the (k, n) cycle, innermost first.  Requires 0 < l <= k.
inline std::vector<ElemAut> good_mode_decomposition_witness(const FamilyParams& p, long l) {
  if (l <= 0 || l > p.k) throw std::domain_error("witness index must lie in (0, k]");
  std::vector<ElemAut> out;
  out.insert(out.end(), static_cast<std::size_t>(l), ElemAut(ElemAut::Kind::Append, 'b', 'a'));
  out.insert(out.end(), static_cast<std::size_t>(l), ElemAut(ElemAut::Kind::Append, 'c', 'a'));
  out.insert(out.end(), static_cast<std::size_t>(p.k - l),
             ElemAut(ElemAut::Kind::Prepend, 'b', 'a'));
  out.insert(out.end(), static_cast<std::size_t>(p.k - l),
             ElemAut(ElemAut::Kind::Prepend, 'c', 'a'));
  return out;
}

// Smallest divided-mode string over all letter renamings; the class key for
// comparing modes up to letter permutation.
inline std::string letterwise_class_key(const Substitution3& s) {
  std::string best;
  for (const LetterPerm& p : all_letter_perms()) {
    std::string cand = mode_of(apply_letterwise(p, s)).str();
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

namespace detail {

// Sliceable standard substitutions over (a, c) with odd word length within
// the budget, ordered by (length, c-count).
inline std::vector<Substitution2> sliceable_cells(long max_len) {
  std::vector<Substitution2> out;
  for (long len = 7; len <= max_len; len += 2)
    for (long q = 2; q < len; q += 2) {
      long p = len - q;
      if (std::gcd(p, q) != 1) continue;
      Substitution2 f =
          evaluate_normal_form(standard_normal_form(p, q), AlphabetPair('a', 'c'));
      if (2 * f.image_x().size() < static_cast<std::size_t>(len)) out.push_back(f);
    }
  return out;
}

}  // namespace detail

// Authentic substitutions with mode words of length <= max_len, one
// representative per letter-permutation class, ordered by length then mode.
inline std::vector<Substitution3> enumerate_authentic(long max_len) {
  if (max_len < 7)
    throw std::domain_error("no authentic substitution has fewer than seven letters");
  std::vector<Substitution3> out;
  std::set<std::string> seen;
  for (const Substitution2& f : detail::sliceable_cells(max_len))
    for (const Substitution3& s : conjugation_cycle(bisecting_substitution(f))) {
      if (!is_authentic_pwwf_substitution(s)) continue;
      if (seen.insert(letterwise_class_key(s)).second) out.push_back(s);
    }
  std::sort(out.begin(), out.end(), [](const Substitution3& l, const Substitution3& r) {
    auto lk = std::make_pair(l.total_length(), mode_of(l).str());
    auto rk = std::make_pair(r.total_length(), mode_of(r).str());
    return lk < rk;
  });
  return out;
}

struct ConjectureCounts {
  long morphic = 0;
  long good = 0;
  long bad_star = 0;
  long bad_double_star = 0;

  friend bool operator==(const ConjectureCounts&, const ConjectureCounts&) = default;
};

struct ConjectureCounterexample {
  std::string mode;
  bool family_instance;
  bool morphic;
  std::vector<std::string> detail;

  friend bool operator==(const ConjectureCounterexample&, const ConjectureCounterexample&) =
      default;
};

struct ConjectureReport {
  long max_length = 0;
  long classes_searched = 0;
  ConjectureCounts counts;
  std::vector<ConjectureCounterexample> counterexamples;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

// Checks every authentic mode within the budget against the family tables:
// morphic must coincide with being a letter-renamed instance of a morphic
// family row.  Mismatches are reported with a certificate or an
// irreducibility trace.
inline ConjectureReport search_conjecture(long max_len, int jobs = 1) {
  if (max_len < 7) throw std::domain_error("search budget must be at least seven");
  if (jobs < 1) throw std::domain_error("worker count must be positive");

  std::set<std::string> family_keys;
  for (long k = 0; 2 * (k + 2) + 2 * k + 3 <= max_len; ++k)
    for (long n = 1; 2 * n * (k + 2) + 2 * k + 3 <= max_len; ++n)
      for (const FamilyTableRow& row : family_table(FamilyParams(k, n)))
        if (row.classification.kind == ModeKind::Morphic)
          family_keys.insert(letterwise_class_key(substitution_from_mode(row.mode)));

  std::vector<Substitution3> rows;
  long classes = 0;
  for (const Substitution2& f : detail::sliceable_cells(max_len)) {
    ++classes;
    for (const Substitution3& s : conjugation_cycle(bisecting_substitution(f)))
      rows.push_back(s);
  }

  struct RowResult {
    ModeKind kind = ModeKind::Irregular;
    std::optional<Decomposition> decomposition;
  };
  std::vector<RowResult> results(rows.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ModeClassification cls = classify_mode(rows[i]);
      results[i].kind = cls.kind;
      if (cls.kind == ModeKind::Morphic) results[i].decomposition = decide_morphic(rows[i]);
    }
  };
  if (jobs == 1) {
    work(0, rows.size());
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (rows.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      std::size_t begin = std::min(rows.size(), t * chunk);
      std::size_t end = std::min(rows.size(), begin + chunk);
      if (begin < end) workers.emplace_back(work, begin, end);
    }
    for (std::thread& t : workers) t.join();
  }

  ConjectureReport report;
  report.max_length = max_len;
  report.classes_searched = classes;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    switch (results[i].kind) {
      case ModeKind::Morphic: ++report.counts.morphic; break;
      case ModeKind::GoodAmorphic: ++report.counts.good; break;
      case ModeKind::BadSyntonic: ++report.counts.bad_star; break;
      case ModeKind::BadApotomic: ++report.counts.bad_double_star; break;
      case ModeKind::Irregular:
        throw std::logic_error("irregular row inside an authentic cycle");
    }
    if (results[i].kind != ModeKind::Morphic && results[i].kind != ModeKind::GoodAmorphic)
      continue;
    bool morphic = results[i].kind == ModeKind::Morphic;
    bool instance = family_keys.count(letterwise_class_key(rows[i])) > 0;
    if (morphic == instance) continue;
    ConjectureCounterexample ce;
    ce.mode = mode_of(rows[i]).str();
    ce.family_instance = instance;
    ce.morphic = morphic;
    if (morphic)
      ce.detail = {results[i].decomposition->str()};
    else
      ce.detail = morphic_obstruction_trace(rows[i]);
    report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

}  // namespace pwwf

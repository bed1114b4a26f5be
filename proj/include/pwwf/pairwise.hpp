#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwwf/automorphism.hpp"
#include "pwwf/conversion.hpp"
#include "pwwf/sturmian.hpp"
#include "pwwf/triple.hpp"

namespace pwwf {

// Odd-length word over {a, c} with evenly many c; odd-numbered c occurrences
// become b.
inline Word bisect(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 'b') throw std::domain_error("bisection input must avoid the middle letter");
  if (w.size() % 2 == 0) throw std::domain_error("bisection needs an odd-length word");
  if (count_letter(w, 'c') % 2 != 0) throw std::domain_error("bisection needs evenly many c");
  std::string out;
  long seen = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'c')
      out += (++seen % 2 == 1) ? 'b' : 'c';
    else
      out += 'a';
  }
  return Word(out);
}

// Slices of bisect(f(ac)) at |f(a)| and 2|f(a)|.  f must be a special
// standard substitution over (a, c) whose slices are all nonempty.
inline Substitution3 bisecting_substitution(const Substitution2& f) {
  if (f.pair() != AlphabetPair('a', 'c'))
    throw std::domain_error("bisection is taken over the alphabet (a, c)");
  if (!recognize_special_standard(f).has_value())
    throw std::domain_error("bisection needs a special standard substitution");
  Word v = bisect(substitution_word(f));
  std::size_t m = f.image_x().size();
  if (2 * m >= v.size()) throw std::domain_error("mode slices must be nonempty");
  std::string text = v.str();
  return Substitution3(Word(text.substr(0, m)), Word(text.substr(m, m)),
                       Word(text.substr(2 * m)));
}

enum class Projection { Apotomic, Syntonic, ApoSyntonic };

inline const char* projection_name(Projection p) {
  switch (p) {
    case Projection::Apotomic: return "apotomic";
    case Projection::Syntonic: return "syntonic";
    case Projection::ApoSyntonic: return "apo-syntonic";
  }
  throw std::logic_error("unreachable");
}

// Two-letter shadows of a three-letter substitution.  The merged pair of
// image slots follows the merged letter.
inline Substitution2 project_substitution(const Substitution3& s, Projection which) {
  switch (which) {
    case Projection::Apotomic:
      return Substitution2(AlphabetPair('a', 'c'), project_word(s.image_a(), 'b', 'c'),
                           project_word(s.image_b() + s.image_c(), 'b', 'c'));
    case Projection::Syntonic:
      return Substitution2(AlphabetPair('a', 'b'),
                           project_word(s.image_a() + s.image_b(), 'c', 'a'),
                           project_word(s.image_c(), 'c', 'a'));
    case Projection::ApoSyntonic:
      return Substitution2(AlphabetPair('b', 'c'),
                           project_word(s.image_a() + s.image_b(), 'a', 'b'),
                           project_word(s.image_c(), 'a', 'b'));
  }
  throw std::logic_error("unreachable");
}

// All three letter identifications give well-formed words.
inline bool passes_pairwise_projections(const Word& w) {
  return is_well_formed_word(project_word(w, 'b', 'c')) &&
         is_well_formed_word(project_word(w, 'c', 'a')) &&
         is_well_formed_word(project_word(w, 'a', 'b'));
}

// Rotations of abacaba, up to renaming the three letters.
inline bool is_singular(const Word& w) {
  if (w.size() != 7) return false;
  static const std::set<std::string> canonicals = [] {
    std::set<std::string> out;
    for (const LetterPerm& p : all_letter_perms())
      out.insert(canonical_rotation(p.apply(Word("abacaba"))).str());
    return out;
  }();
  return canonicals.count(canonical_rotation(w).str()) > 0;
}

// The canonical predicate: all projections well formed, the two minor-step
// letters equally frequent, and not in the singular class.
inline bool is_pwwf_word(const Word& w) {
  return count_letter(w, 'b') == count_letter(w, 'c') && !is_singular(w) &&
         passes_pairwise_projections(w);
}

// All three projected substitutions lie in the special Sturmian monoid.
inline bool is_authentic_pwwf_substitution(const Substitution3& s) {
  return recognize_special_sturmian(project_substitution(s, Projection::Apotomic)).has_value() &&
         recognize_special_sturmian(project_substitution(s, Projection::Syntonic)).has_value() &&
         recognize_special_sturmian(project_substitution(s, Projection::ApoSyntonic)).has_value();
}

enum class ModeKind { Morphic, GoodAmorphic, BadSyntonic, BadApotomic, Irregular };

struct ModeClassification {
  ModeKind kind;
  bool apotomic_sturmian;
  bool syntonic_sturmian;
  bool apo_syntonic_sturmian;
};

inline ModeClassification classify_mode(const Substitution3& s) {
  bool apot = recognize_special_sturmian(project_substitution(s, Projection::Apotomic)).has_value();
  bool synt = recognize_special_sturmian(project_substitution(s, Projection::Syntonic)).has_value();
  bool apos =
      recognize_special_sturmian(project_substitution(s, Projection::ApoSyntonic)).has_value();
  ModeKind kind = ModeKind::Irregular;
  if (apot && synt && apos)
    kind = decide_morphic(s).has_value() ? ModeKind::Morphic : ModeKind::GoodAmorphic;
  else if (apot && apos && !synt)
    kind = ModeKind::BadSyntonic;
  else if (!apot && synt && !apos)
    kind = ModeKind::BadApotomic;
  return {kind, apot, synt, apos};
}

// All rotations of the mode word, dividers kept in place.  The underlying
// word must be primitive so the cycle has one row per letter position.
inline std::vector<Substitution3> conjugation_cycle(const Substitution3& s) {
  DividedMode m = mode_of(s);
  if (!is_primitive(m.word()))
    throw std::domain_error("conjugation cycle needs a primitive mode word");
  std::vector<Substitution3> out;
  for (std::size_t r = 0; r < m.word().size(); ++r)
    out.push_back(substitution_from_mode(rotate(m, r)));
  return out;
}

// Table label.  Stars: morphic rows whose apotomic and apo-syntonic
// projections are both special standard, and good rows straight after the
// syntonic-defect row.
inline std::string mode_label(const Substitution3& s) {
  ModeClassification cls = classify_mode(s);
  switch (cls.kind) {
    case ModeKind::Morphic: {
      bool standard_pair =
          recognize_special_standard(project_substitution(s, Projection::Apotomic)).has_value() &&
          recognize_special_standard(project_substitution(s, Projection::ApoSyntonic)).has_value();
      return standard_pair ? "morphic**" : "morphic";
    }
    case ModeKind::BadSyntonic: return "bad*";
    case ModeKind::BadApotomic: return "bad**";
    case ModeKind::GoodAmorphic: {
      DividedMode m = mode_of(s);
      DividedMode prev = rotate(m, m.word().size() - 1);
      ModeClassification before = classify_mode(substitution_from_mode(prev));
      return before.kind == ModeKind::BadSyntonic ? "good*" : "good";
    }
    case ModeKind::Irregular: return "irregular";
  }
  throw std::logic_error("unreachable");
}

// Incidence of the bisecting substitution, computed from the incidence of
// the apotomic side alone.  Columns follow the merged-pair convention, so
// they match incidence3 after swapping the first two columns.
inline IncidenceMatrix3 predicted_incidence_sigma(const Mat2& mf) {
  if (entry_sum(mf) % 2 == 0)
    throw std::domain_error("predicted incidence needs an odd total letter count");
  if ((mf(1, 1) - mf(1, 0)) % 2 != 0)
    throw std::domain_error("predicted incidence needs an even bottom-row difference");
  if (!is_apotomic_matrix(mf))
    throw std::domain_error("matrix is outside the apotomic family");
  std::int64_t fa_a = mf(0, 0), fc_a = mf(0, 1), fa_c = mf(1, 0), fc_c = mf(1, 1);
  std::int64_t half = (fc_c - fa_c) / 2;
  return mat3(fa_a, fa_a, fc_a - fa_a,
              fa_c / 2, fa_c - fa_c / 2, half,
              fa_c - fa_c / 2, fa_c / 2, half);
}

// Incidence of the apo-syntonic projection from the apotomic incidence.
inline IncidenceMatrix2 predicted_incidence_g(const Mat2& mf) {
  if (entry_sum(mf) % 2 == 0)
    throw std::domain_error("predicted incidence needs an odd total letter count");
  if ((mf(1, 1) - mf(1, 0)) % 2 != 0)
    throw std::domain_error("predicted incidence needs an even bottom-row difference");
  if (!is_apotomic_matrix(mf))
    throw std::domain_error("matrix is outside the apotomic family");
  return conversion_map(mf);
}

inline Mat3 swap_first_two_columns(const Mat3& m) {
  Mat3 out = m;
  for (int r = 0; r < 3; ++r) {
    out(r, 0) = m(r, 1);
    out(r, 1) = m(r, 0);
  }
  return out;
}

}  // namespace pwwf

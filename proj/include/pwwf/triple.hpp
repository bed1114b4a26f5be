#pragma once

#include <stdexcept>
#include <utility>

#include "pwwf/matrix.hpp"
#include "pwwf/word.hpp"

namespace pwwf {

// Monoid endomorphism of {a, b, c}* given by nonempty images of the letters.
class Substitution3 {
 public:
  Substitution3(Word image_a, Word image_b, Word image_c)
      : a_(std::move(image_a)), b_(std::move(image_b)), c_(std::move(image_c)) {
    if (a_.empty() || b_.empty() || c_.empty())
      throw std::domain_error("substitution image must be nonempty");
  }

  const Word& image(char letter) const {
    switch (letter) {
      case 'a': return a_;
      case 'b': return b_;
      case 'c': return c_;
    }
    throw std::domain_error("letter outside the alphabet");
  }

  const Word& image_a() const { return a_; }
  const Word& image_b() const { return b_; }
  const Word& image_c() const { return c_; }
  std::size_t total_length() const { return a_.size() + b_.size() + c_.size(); }

  friend bool operator==(const Substitution3&, const Substitution3&) = default;

 private:
  Word a_;
  Word b_;
  Word c_;
};

inline Substitution3 identity_substitution3() {
  return Substitution3(Word("a"), Word("b"), Word("c"));
}

inline Word apply_substitution(const Substitution3& s, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += s.image(w[i]).str();
  return Word(out);
}

// Divided presentation image_a | image_b || image_c.
inline DividedMode mode_of(const Substitution3& s) {
  return DividedMode(s.image_a() + s.image_b() + s.image_c(),
                     {s.image_a().size(), s.image_a().size() + s.image_b().size()});
}

inline Substitution3 substitution_from_mode(const DividedMode& m) {
  if (m.segment_count() != 3)
    throw std::domain_error("expected a triadic mode with two dividers");
  return Substitution3(m.segment(0), m.segment(1), m.segment(2));
}

// Rows count occurrences of a, b, c; columns are the images of a, b, c.
inline IncidenceMatrix3 incidence3(const Substitution3& s) {
  Mat3 m;
  const char letters[] = {'a', 'b', 'c'};
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col)
      m(row, col) = count_letter(s.image(letters[col]), letters[row]);
  return m;
}

}  // namespace pwwf

#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwwf/matrix.hpp"
#include "pwwf/word.hpp"

namespace pwwf {

// Ordered two-letter alphabet (x, y), both letters from {a, b, c}.
struct AlphabetPair {
  char x;
  char y;

  AlphabetPair(char first, char second) : x(first), y(second) {
    if (!is_letter(x) || !is_letter(y) || x == y)
      throw std::domain_error("alphabet pair needs two distinct letters");
  }
  friend bool operator==(const AlphabetPair&, const AlphabetPair&) = default;
};

// Monoid endomorphism of {x, y}* given by the images of x and y.
// Images are nonempty words over the pair's letters.
class Substitution2 {
 public:
  Substitution2(AlphabetPair pair, Word image_x, Word image_y)
      : pair_(pair), image_x_(std::move(image_x)), image_y_(std::move(image_y)) {
    check_image(image_x_);
    check_image(image_y_);
  }

  const AlphabetPair& pair() const { return pair_; }
  const Word& image_x() const { return image_x_; }
  const Word& image_y() const { return image_y_; }
  std::size_t total_length() const { return image_x_.size() + image_y_.size(); }

  friend bool operator==(const Substitution2&, const Substitution2&) = default;

 private:
  void check_image(const Word& w) const {
    if (w.empty()) throw std::domain_error("substitution image must be nonempty");
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != pair_.x && w[i] != pair_.y)
        throw std::domain_error("substitution image uses a letter outside its alphabet");
  }

  AlphabetPair pair_;
  Word image_x_;
  Word image_y_;
};

inline Substitution2 identity_substitution(AlphabetPair pair) {
  return Substitution2(pair, Word(std::string(1, pair.x)), Word(std::string(1, pair.y)));
}

inline bool is_identity(const Substitution2& s) {
  return s == identity_substitution(s.pair());
}

inline Word apply_substitution(const Substitution2& s, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == s.pair().x)
      out += s.image_x().str();
    else if (w[i] == s.pair().y)
      out += s.image_y().str();
    else
      throw std::domain_error("word uses a letter outside the substitution alphabet");
  }
  return Word(out);
}

// Image of xy, the word the substitution presents.
inline Word substitution_word(const Substitution2& s) {
  return s.image_x() + s.image_y();
}

inline DividedMode divided_pair(const Substitution2& s) {
  return DividedMode(substitution_word(s), {s.image_x().size()});
}

// The four generators.  G and G~ fix x; D and D~ fix y.
//   G: y -> xy    G~: y -> yx    D: x -> yx    D~: x -> xy
enum class Generator2 { G, GTilde, D, DTilde };

using NormalForm2 = std::vector<Generator2>;

inline std::string generator_name(Generator2 g) {
  switch (g) {
    case Generator2::G: return "G";
    case Generator2::GTilde: return "G~";
    case Generator2::D: return "D";
    case Generator2::DTilde: return "D~";
  }
  throw std::logic_error("unreachable");
}

inline std::string normal_form_str(const NormalForm2& nf) {
  std::string out;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    if (i) out += " ";
    out += generator_name(nf[i]);
  }
  return out;
}

// All four generators have determinant +1.
inline Mat2 generator_matrix(Generator2 g) {
  if (g == Generator2::G || g == Generator2::GTilde) return mat2(1, 1, 0, 1);
  return mat2(1, 0, 1, 1);
}

// g applied after s: every image of s is rewritten letterwise through g.
inline Substitution2 apply_generator(Generator2 g, const Substitution2& s) {
  char x = s.pair().x, y = s.pair().y;
  std::string gx, gy;
  switch (g) {
    case Generator2::G: gx = {x}; gy = {x, y}; break;
    case Generator2::GTilde: gx = {x}; gy = {y, x}; break;
    case Generator2::D: gx = {y, x}; gy = {y}; break;
    case Generator2::DTilde: gx = {x, y}; gy = {y}; break;
  }
  auto rewrite = [&](const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (w[i] == x) ? gx : gy;
    return Word(out);
  };
  return Substitution2(s.pair(), rewrite(s.image_x()), rewrite(s.image_y()));
}

// Composition f1 o f2 o ... o fn, rightmost factor applied to letters first.
inline Substitution2 evaluate_normal_form(const NormalForm2& nf, AlphabetPair pair) {
  Substitution2 s = identity_substitution(pair);
  for (auto it = nf.rbegin(); it != nf.rend(); ++it) s = apply_generator(*it, s);
  return s;
}

// Inverse of apply_generator when it exists.  Each image must factor over the
// generator's block set; the factorization is unique when it exists.
inline std::optional<Substitution2> peel_generator(Generator2 g, const Substitution2& s) {
  char x = s.pair().x, y = s.pair().y;
  auto tokenize = [&](const Word& w) -> std::optional<std::string> {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      char ch = w[i];
      char next = (i + 1 < w.size()) ? w[i + 1] : '\0';
      switch (g) {
        case Generator2::G:
          if (ch == y) return std::nullopt;
          if (next == y) { out += y; i += 2; } else { out += x; i += 1; }
          break;
        case Generator2::GTilde:
          if (ch == y) {
            if (next != x) return std::nullopt;
            out += y; i += 2;
          } else { out += x; i += 1; }
          break;
        case Generator2::D:
          if (ch == x) return std::nullopt;
          if (next == x) { out += x; i += 2; } else { out += y; i += 1; }
          break;
        case Generator2::DTilde:
          if (ch == x) {
            if (next != y) return std::nullopt;
            out += x; i += 2;
          } else { out += y; i += 1; }
          break;
      }
    }
    return out;
  };
  auto px = tokenize(s.image_x());
  auto py = tokenize(s.image_y());
  if (!px || !py) return std::nullopt;
  if (px->size() + py->size() >= s.total_length()) return std::nullopt;
  return Substitution2(s.pair(), Word(*px), Word(*py));
}

namespace detail {

inline std::optional<NormalForm2> recognize_over(const Substitution2& s,
                                                 const std::vector<Generator2>& allowed) {
  if (is_identity(s)) return NormalForm2{};
  for (Generator2 g : allowed) {
    auto peeled = peel_generator(g, s);
    if (!peeled) continue;
    auto rest = recognize_over(*peeled, allowed);
    if (rest) {
      rest->insert(rest->begin(), g);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Certificate as a normal form, or nullopt when s is not a composition of the
// four generators.  Trial order G, G~, D, D~ makes the certificate canonical.
inline std::optional<NormalForm2> recognize_special_sturmian(const Substitution2& s) {
  static const std::vector<Generator2> all = {Generator2::G, Generator2::GTilde,
                                              Generator2::D, Generator2::DTilde};
  return detail::recognize_over(s, all);
}

// Same over the submonoid generated by G and D alone.
inline std::optional<NormalForm2> recognize_special_standard(const Substitution2& s) {
  static const std::vector<Generator2> gd = {Generator2::G, Generator2::D};
  return detail::recognize_over(s, gd);
}

// Factor-sequence reversal.  Defined on G/D normal forms only.
inline NormalForm2 reverse_normal_form(const NormalForm2& nf) {
  for (Generator2 g : nf)
    if (g != Generator2::G && g != Generator2::D)
      throw std::domain_error("reversal is defined for G/D normal forms only");
  return NormalForm2(nf.rbegin(), nf.rend());
}

// Subtractive Euclid on coprime positive (p, q); base (1, 1) is the identity.
inline NormalForm2 standard_normal_form(long p, long q) {
  if (p < 1 || q < 1) throw std::domain_error("letter counts must be positive");
  if (std::gcd(p, q) != 1) throw std::domain_error("letter counts must be coprime");
  NormalForm2 nf;
  while (p != 1 || q != 1) {
    if (p > q) {
      nf.push_back(Generator2::G);
      p -= q;
    } else {
      nf.push_back(Generator2::D);
      q -= p;
    }
  }
  return nf;
}

enum class Orientation { Lower, Upper };

// Word with p letters x and q letters y; the lower word is the image of xy
// under the standard composition for (p, q), the upper word its reversal.
inline Word christoffel_word(long p, long q, AlphabetPair pair,
                             Orientation orientation = Orientation::Lower) {
  Substitution2 f = evaluate_normal_form(standard_normal_form(p, q), pair);
  Word lower = substitution_word(f);
  return orientation == Orientation::Lower ? lower : reverse(lower);
}

// True iff w is a rotation of a Christoffel word over its two letters.
// Words using fewer than two letters are never well formed.
inline bool is_well_formed_word(const Word& w) {
  std::vector<char> used = letters_used(w);
  if (used.size() > 2)
    throw std::domain_error("well-formedness is defined over two-letter words");
  if (used.size() < 2) return false;
  long p = count_letter(w, used[0]);
  long q = count_letter(w, used[1]);
  if (std::gcd(p, q) != 1) return false;
  Word base = christoffel_word(p, q, AlphabetPair(used[0], used[1]));
  for (std::size_t k = 0; k < base.size(); ++k)
    if (rotate_left(base, k) == w) return true;
  return false;
}

// Rows count occurrences of x and y; columns are the images of x and y.
inline IncidenceMatrix2 incidence2(const Substitution2& s) {
  return mat2(count_letter(s.image_x(), s.pair().x), count_letter(s.image_y(), s.pair().x),
              count_letter(s.image_x(), s.pair().y), count_letter(s.image_y(), s.pair().y));
}

}  // namespace pwwf

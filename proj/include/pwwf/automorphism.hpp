#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pwwf/triple.hpp"

namespace pwwf {

inline int letter_index(char ch) {
  if (!is_letter(ch)) throw std::domain_error("letter outside the alphabet");
  return ch - 'a';
}

// Bijection of {a, b, c}.
class LetterPerm {
 public:
  LetterPerm() : images_{'a', 'b', 'c'} {}
  LetterPerm(char ia, char ib, char ic) : images_{ia, ib, ic} {
    if (!is_letter(ia) || !is_letter(ib) || !is_letter(ic) ||
        ia == ib || ib == ic || ia == ic)
      throw std::domain_error("letter permutation must be a bijection");
  }

  char apply(char ch) const { return images_[letter_index(ch)]; }

  Word apply(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += apply(w[i]);
    return Word(out);
  }

  bool is_identity() const { return images_ == std::array<char, 3>{'a', 'b', 'c'}; }

  LetterPerm inverse() const {
    std::array<char, 3> inv{};
    for (char ch : {'a', 'b', 'c'}) inv[letter_index(apply(ch))] = ch;
    return LetterPerm(inv[0], inv[1], inv[2]);
  }

  friend bool operator==(const LetterPerm&, const LetterPerm&) = default;

 private:
  std::array<char, 3> images_;
};

inline std::vector<LetterPerm> all_letter_perms() {
  return {LetterPerm('a', 'b', 'c'), LetterPerm('a', 'c', 'b'), LetterPerm('b', 'a', 'c'),
          LetterPerm('b', 'c', 'a'), LetterPerm('c', 'a', 'b'), LetterPerm('c', 'b', 'a')};
}

// Every image slot rewritten letterwise; preserves the slot structure.
inline Substitution3 apply_letterwise(const LetterPerm& p, const Substitution3& s) {
  return Substitution3(p.apply(s.image_a()), p.apply(s.image_b()), p.apply(s.image_c()));
}

// Elementary positive automorphisms of the rank-three free monoid:
//   E(xy) swaps the letters x and y;
//   A(xy) sends x to xy;
//   P(xy) sends x to yx.
struct ElemAut {
  enum class Kind { Exchange, Append, Prepend };

  Kind kind;
  char x;
  char y;

  ElemAut(Kind k, char first, char second) : kind(k), x(first), y(second) {
    if (!is_letter(x) || !is_letter(y) || x == y)
      throw std::domain_error("elementary automorphism needs two distinct letters");
  }

  std::string name() const {
    std::string prefix = kind == Kind::Exchange ? "E" : kind == Kind::Append ? "A" : "P";
    return prefix + "(" + std::string(1, x) + std::string(1, y) + ")";
  }

  friend bool operator==(const ElemAut&, const ElemAut&) = default;
};

// The twelve non-exchange elementary automorphisms, in the trial order the
// decomposition search uses.
inline const std::vector<ElemAut>& all_productions() {
  static const std::vector<ElemAut> out = [] {
    std::vector<ElemAut> v;
    for (auto kind : {ElemAut::Kind::Append, ElemAut::Kind::Prepend})
      for (char x : {'a', 'b', 'c'})
        for (char y : {'a', 'b', 'c'})
          if (x != y) v.emplace_back(kind, x, y);
    return v;
  }();
  return out;
}

// e applied after s: every image of s is rewritten letterwise through e.
inline Substitution3 apply_elem(const ElemAut& e, const Substitution3& s) {
  auto rewrite = [&](const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      char ch = w[i];
      if (e.kind == ElemAut::Kind::Exchange) {
        out += ch == e.x ? e.y : ch == e.y ? e.x : ch;
      } else if (ch == e.x) {
        if (e.kind == ElemAut::Kind::Append)
          out += std::string{e.x, e.y};
        else
          out += std::string{e.y, e.x};
      } else {
        out += ch;
      }
    }
    return Word(out);
  };
  return Substitution3(rewrite(s.image_a()), rewrite(s.image_b()), rewrite(s.image_c()));
}

// Inverse of apply_elem for A/P when it exists.  A(xy) requires every x to be
// immediately followed by y, P(xy) immediately preceded; the paired y is
// dropped.  An s without any x is rejected so peeling always shortens.
inline std::optional<Substitution3> peel_elem(const ElemAut& e, const Substitution3& s) {
  if (e.kind == ElemAut::Kind::Exchange)
    throw std::domain_error("only A/P factors are peelable");
  bool saw_x = false;
  auto strip = [&](const Word& w) -> std::optional<std::string> {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      char ch = w[i];
      char next = (i + 1 < w.size()) ? w[i + 1] : '\0';
      if (e.kind == ElemAut::Kind::Append) {
        if (ch == e.x) {
          if (next != e.y) return std::nullopt;
          saw_x = true;
          out += ch;
          i += 2;
        } else {
          out += ch;
          i += 1;
        }
      } else {
        if (ch == e.x) return std::nullopt;
        if (ch == e.y && next == e.x) {
          saw_x = true;
          out += e.x;
          i += 2;
        } else {
          out += ch;
          i += 1;
        }
      }
    }
    return out;
  };
  auto pa = strip(s.image_a());
  auto pb = strip(s.image_b());
  auto pc = strip(s.image_c());
  if (!pa || !pb || !pc || !saw_x) return std::nullopt;
  return Substitution3(Word(*pa), Word(*pb), Word(*pc));
}

// Composition of exchanges realizing p, innermost first.  At most two factors.
inline std::vector<ElemAut> exchange_factors(const LetterPerm& p) {
  std::vector<ElemAut> out;
  if (p.is_identity()) return out;
  auto exchange = [](char x, char y) { return ElemAut(ElemAut::Kind::Exchange, x, y); };
  std::vector<char> moved;
  for (char ch : {'a', 'b', 'c'})
    if (p.apply(ch) != ch) moved.push_back(ch);
  if (moved.size() == 2) {
    out.push_back(exchange(moved[0], moved[1]));
    return out;
  }
  // Three-cycle: p = outer o inner with inner = E(a, p(a)).
  char first = 'a';
  char second = p.apply(first);
  out.push_back(exchange(std::min(first, second), std::max(first, second)));
  // Remaining transposition fixes p(a) and swaps the other two letters.
  std::vector<char> rest;
  for (char ch : {'a', 'b', 'c'})
    if (ch != second) rest.push_back(ch);
  out.push_back(exchange(rest[0], rest[1]));
  return out;
}

// Seed permutation followed by A/P factors, innermost first.
struct Decomposition {
  LetterPerm perm;
  std::vector<ElemAut> productions;

  std::string str() const {
    std::string out;
    for (const ElemAut& e : exchange_factors(perm)) {
      if (!out.empty()) out += " ";
      out += e.name();
    }
    for (const ElemAut& e : productions) {
      if (!out.empty()) out += " ";
      out += e.name();
    }
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Substitution3 replay_decomposition(const Decomposition& d) {
  Substitution3 s = apply_letterwise(d.perm, identity_substitution3());
  for (const ElemAut& e : d.productions) s = apply_elem(e, s);
  return s;
}

inline bool verify_decomposition(const Decomposition& d, const Substitution3& target) {
  return replay_decomposition(d) == target;
}

namespace detail {

inline std::optional<LetterPerm> as_letter_perm(const Substitution3& s) {
  if (s.image_a().size() != 1 || s.image_b().size() != 1 || s.image_c().size() != 1)
    return std::nullopt;
  char ia = s.image_a()[0], ib = s.image_b()[0], ic = s.image_c()[0];
  if (ia == ib || ib == ic || ia == ic) return std::nullopt;
  return LetterPerm(ia, ib, ic);
}

inline std::string triple_key(const Substitution3& s) {
  return s.image_a().str() + "|" + s.image_b().str() + "|" + s.image_c().str();
}

inline std::optional<Decomposition> decompose_impl(const Substitution3& s,
                                                   std::unordered_set<std::string>& failed) {
  if (auto p = detail::as_letter_perm(s)) return Decomposition{*p, {}};
  std::string key = triple_key(s);
  if (failed.count(key)) return std::nullopt;
  for (const ElemAut& e : all_productions()) {
    auto peeled = peel_elem(e, s);
    if (!peeled) continue;
    auto rest = decompose_impl(*peeled, failed);
    if (rest) {
      rest->productions.push_back(e);
      return rest;
    }
  }
  failed.insert(key);
  return std::nullopt;
}

}  // namespace detail

// Certificate when s is a composition of elementary positive automorphisms,
// nullopt otherwise.  The fixed trial order makes the certificate canonical.
// Every returned certificate is replayed against s before it is handed out.
inline std::optional<Decomposition> decide_morphic(const Substitution3& s) {
  std::int64_t d = det(incidence3(s));
  if (d != 1 && d != -1) return std::nullopt;
  std::unordered_set<std::string> failed;
  auto result = detail::decompose_impl(s, failed);
  if (result && !verify_decomposition(*result, s))
    throw std::logic_error("decomposition certificate failed to replay");
  return result;
}

// Production-by-production outcome at the top level, for reporting why no
// decomposition exists.
inline std::vector<std::string> morphic_obstruction_trace(const Substitution3& s) {
  std::vector<std::string> out;
  std::int64_t d = det(incidence3(s));
  if (d != 1 && d != -1) {
    out.push_back("incidence determinant " + std::to_string(d) + " is not a unit");
    return out;
  }
  if (detail::as_letter_perm(s)) return out;
  std::unordered_set<std::string> failed;
  for (const ElemAut& e : all_productions()) {
    auto peeled = peel_elem(e, s);
    if (!peeled) {
      out.push_back(e.name() + ": not peelable");
    } else if (detail::decompose_impl(*peeled, failed)) {
      out.push_back(e.name() + ": peels to a decomposable triple");
    } else {
      out.push_back(e.name() + ": peelable, preimage admits no decomposition");
    }
  }
  return out;
}

}  // namespace pwwf

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pwwf/family.hpp"

using namespace pwwf;

namespace {

Substitution3 sub3(const std::string& a, const std::string& b, const std::string& c) {
  return Substitution3(Word(a), Word(b), Word(c));
}

std::vector<std::string> mode_strings(const std::vector<Substitution3>& subs) {
  std::vector<std::string> out;
  for (const Substitution3& s : subs) out.push_back(mode_of(s).str());
  return out;
}

// Every authentic substitution over words of length <= max_len, up to letter
// permutation, found by exhaustive scan.  Even total length forces one merged
// projection to have both letter counts even, so odd lengths suffice.
std::set<std::string> brute_authentic_keys(long max_len) {
  std::set<std::string> keys;
  for (long len = 3; len <= max_len; len += 2) {
    std::string w(static_cast<std::size_t>(len), 'a');
    while (true) {
      if (passes_pairwise_projections(Word(w))) {
        for (std::size_t i = 1; i + 1 < w.size(); ++i)
          for (std::size_t j = i + 1; j + 1 <= w.size(); ++j) {
            Substitution3 s(Word(w.substr(0, i)), Word(w.substr(i, j - i)), Word(w.substr(j)));
            if (is_authentic_pwwf_substitution(s)) keys.insert(letterwise_class_key(s));
          }
      }
      std::size_t pos = w.size();
      while (pos > 0 && w[pos - 1] == 'c') w[--pos] = 'a';
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
  return keys;
}

}  // namespace

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(FamilyParams(-1, 1), std::domain_error);
  CHECK_THROWS_AS(FamilyParams(0, 0), std::domain_error);
  CHECK_THROWS_AS(FamilyParams(2, -3), std::domain_error);
  CHECK_NOTHROW(FamilyParams(0, 1));
}

TEST_CASE("family substitutions in closed form") {
  CHECK(family_substitution(FamilyParams(0, 1)) == sub3("ba", "ca", "bac"));
  CHECK(family_substitution(FamilyParams(1, 1)) == sub3("aba", "aca", "abaac"));
  CHECK(family_substitution(FamilyParams(0, 2)) == sub3("ba", "ca", "bacabac"));
  CHECK(family_substitution(FamilyParams(1, 2)) == sub3("aba", "aca", "abaacaabaac"));

  SECTION("word length follows the cell formula") {
    for (long k = 0; k <= 4; ++k)
      for (long n = 1; n <= 4; ++n) {
        Substitution3 v = family_substitution(FamilyParams(k, n));
        CHECK(v.total_length() == static_cast<std::size_t>(2 * n * (k + 2) + 2 * k + 3));
      }
  }
}

TEST_CASE("closed form agrees with bisection of the apotomic side") {
  for (long k = 0; k <= 3; ++k)
    for (long n = 1; n <= 3; ++n) {
      FamilyParams p(k, n);
      Substitution2 f = evaluate_normal_form(family_apotomic_form(p), AlphabetPair('a', 'c'));
      CHECK(bisecting_substitution(f) == family_substitution(p));
    }
}

TEST_CASE("family normal forms") {
  FamilyParams p(1, 2);
  NormalForm2 apotomic{Generator2::G, Generator2::D, Generator2::G, Generator2::G,
                       Generator2::G, Generator2::G};
  CHECK(family_apotomic_form(p) == apotomic);
  CHECK(normal_form_str(family_apo_syntonic_form(p)) == "G G G G D G");
  CHECK(normal_form_str(family_syntonic_form(p)) == "G G~ G~ G~ D G");

  SECTION("closed shapes of the transported forms") {
    for (long k = 0; k <= 3; ++k)
      for (long n = 1; n <= 3; ++n) {
        FamilyParams q(k, n);
        NormalForm2 g(static_cast<std::size_t>(2 * k + 2), Generator2::G);
        g.push_back(Generator2::D);
        g.insert(g.end(), static_cast<std::size_t>(n - 1), Generator2::G);
        CHECK(family_apo_syntonic_form(q) == g);
        NormalForm2 gt(static_cast<std::size_t>(k), Generator2::G);
        gt.insert(gt.end(), static_cast<std::size_t>(k + 2), Generator2::GTilde);
        gt.push_back(Generator2::D);
        gt.insert(gt.end(), static_cast<std::size_t>(n - 1), Generator2::G);
        CHECK(family_syntonic_form(q) == gt);
      }
  }
}

TEST_CASE("family forms evaluate to the projections of the root mode") {
  for (long k = 0; k <= 3; ++k)
    for (long n = 1; n <= 3; ++n) {
      FamilyParams p(k, n);
      Substitution3 v = family_substitution(p);
      CHECK(project_substitution(v, Projection::Apotomic) ==
            evaluate_normal_form(family_apotomic_form(p), AlphabetPair('a', 'c')));
      CHECK(project_substitution(v, Projection::Syntonic) ==
            evaluate_normal_form(family_syntonic_form(p), AlphabetPair('a', 'b')));
      CHECK(project_substitution(v, Projection::ApoSyntonic) ==
            evaluate_normal_form(family_apo_syntonic_form(p), AlphabetPair('b', 'c')));
    }
}

TEST_CASE("family incidence matrices") {
  auto [mf01, mg01] = family_matrices(FamilyParams(0, 1));
  CHECK(mf01 == mat2(1, 2, 1, 3));
  CHECK(mg01 == mat2(3, 2, 1, 1));
  auto [mf11, mg11] = family_matrices(FamilyParams(1, 1));
  CHECK(mf11 == mat2(2, 5, 1, 3));
  CHECK(mg11 == mat2(5, 4, 1, 1));
  auto [mf12, mg12] = family_matrices(FamilyParams(1, 2));
  CHECK(mf12 == mat2(2, 9, 1, 5));
  CHECK(mg12 == mat2(5, 9, 1, 2));

  SECTION("closed forms match the evaluated substitutions and the conversion") {
    for (long k = 0; k <= 4; ++k)
      for (long n = 1; n <= 4; ++n) {
        FamilyParams p(k, n);
        auto [mf, mg] = family_matrices(p);
        CHECK(incidence2(evaluate_normal_form(family_apotomic_form(p),
                                              AlphabetPair('a', 'c'))) == mf);
        CHECK(incidence2(evaluate_normal_form(family_apo_syntonic_form(p),
                                              AlphabetPair('b', 'c'))) == mg);
        CHECK(incidence2(evaluate_normal_form(family_syntonic_form(p),
                                              AlphabetPair('a', 'b'))) == mg);
        CHECK(is_apotomic_matrix(mf));
        CHECK(is_apo_syntonic_matrix(mg));
        CHECK(conversion_map(mf) == mg);
        CHECK(conversion_map_inverse(mg) == mf);
      }
  }
}

TEST_CASE("smallest family table matches the seven-row cycle") {
  std::vector<FamilyTableRow> rows = family_table(FamilyParams(0, 1));
  REQUIRE(rows.size() == 7);

  std::vector<std::string> modes{"ba|ca||bac", "ac|ab||acb", "ca|ba||cba", "ab|ac||bac",
                                 "ba|cb||aca", "ac|ba||cab", "cb|ac||aba"};
  std::vector<std::string> labels{"morphic**", "morphic", "morphic", "morphic",
                                  "bad*",      "good*",   "bad**"};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    CHECK(rows[r].mode.str() == modes[r]);
    CHECK(rows[r].label == labels[r]);
    CHECK(rows[r].decomposition.has_value() ==
          (rows[r].classification.kind == ModeKind::Morphic));
  }
  REQUIRE(rows[0].decomposition.has_value());
  CHECK(rows[0].decomposition->str() == "E(ab) P(cb) P(ac) A(ba)");

  SECTION("projection columns") {
    std::vector<std::string> apotomic{"ca|cacac", "ac|acacc", "ca|cacca", "ac|accac",
                                      "ca|ccaca", "ac|cacac", "cc|acaca"};
    std::vector<std::string> syntonic{"baaa|baa", "aaab|aab", "aaba|aba", "abaa|baa",
                                      "baab|aaa", "aaba|aab", "abaa|aba"};
    std::vector<std::string> apo_syntonic{"bbcb|bbc", "bcbb|bcb", "cbbb|cbb", "bbbc|bbc",
                                          "bbcb|bcb", "bcbb|cbb", "cbbc|bbb"};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Substitution3 s = substitution_from_mode(rows[r].mode);
      CHECK(divided_pair(project_substitution(s, Projection::Apotomic)).str() == apotomic[r]);
      CHECK(divided_pair(project_substitution(s, Projection::Syntonic)).str() == syntonic[r]);
      CHECK(divided_pair(project_substitution(s, Projection::ApoSyntonic)).str() ==
            apo_syntonic[r]);
    }
  }
}

TEST_CASE("eleven-row family table") {
  std::vector<FamilyTableRow> rows = family_table(FamilyParams(1, 1));
  REQUIRE(rows.size() == 11);
  CHECK(rows[7].mode.str() == "baa|cab||aacaa");
  CHECK(rows[7].label == "bad*");
  CHECK(rows[8].mode.str() == "aac|aba||acaab");
  CHECK(rows[8].label == "good*");
  CHECK(rows[9].mode.str() == "aca|baa||caaba");
  CHECK(rows[9].label == "good");
  CHECK(rows[10].mode.str() == "cab|aac||aabaa");
  CHECK(rows[10].label == "bad**");
  for (std::size_t r = 0; r < 7; ++r)
    CHECK(rows[r].classification.kind == ModeKind::Morphic);
}

TEST_CASE("family table structure") {
  for (long k = 0; k <= 4; ++k)
    for (long n = 1; n <= 4; ++n) {
      FamilyParams p(k, n);
      std::vector<FamilyTableRow> rows = family_table(p);
      std::size_t L = rows.size();
      REQUIRE(L == static_cast<std::size_t>(2 * n * (k + 2) + 2 * k + 3));

      std::size_t bad_star = L, bad_double = L, double_standard = 0;
      long good = 0, morphic = 0;
      for (std::size_t r = 0; r < L; ++r) {
        const FamilyTableRow& row = rows[r];
        if (row.label == "bad*") bad_star = r;
        if (row.label == "bad**") bad_double = r;
        if (row.label == "good" || row.label == "good*") ++good;
        if (row.label == "morphic" || row.label == "morphic**") ++morphic;
        if (row.label == "morphic**") ++double_standard;
        CHECK(row.label == mode_label(substitution_from_mode(row.mode)));
        CHECK(row.decomposition.has_value() ==
              (row.classification.kind == ModeKind::Morphic));
        if (row.decomposition)
          CHECK(replay_decomposition(*row.decomposition) ==
                substitution_from_mode(row.mode));
      }
      CHECK(bad_star == L - static_cast<std::size_t>(k) - 3);
      CHECK(bad_double == L - 1);
      CHECK(good == k + 1);
      CHECK(morphic == static_cast<long>(L) - k - 3);
      CHECK(double_standard == 1);
      CHECK(rows[0].label == "morphic**");
      CHECK(rows[bad_star + 1].label == "good*");
    }
}

TEST_CASE("irreducible good roots") {
  CHECK(irreducible_good_root(1) == sub3("ac", "ba", "cab"));
  CHECK(irreducible_good_root(2) == sub3("ac", "ba", "cabacab"));
  CHECK_THROWS_AS(irreducible_good_root(0), std::domain_error);

  SECTION("roots are the starred good rows of the slimmest cells") {
    for (long n = 1; n <= 4; ++n) {
      std::vector<FamilyTableRow> rows = family_table(FamilyParams(0, n));
      std::size_t L = rows.size();
      CHECK(rows[L - 2].mode == mode_of(irreducible_good_root(n)));
      CHECK(rows[L - 2].label == "good*");
    }
  }
}

TEST_CASE("good rows carry production witnesses") {
  FamilyParams p(1, 1);
  CHECK_THROWS_AS(good_mode_decomposition_witness(p, 0), std::domain_error);
  CHECK_THROWS_AS(good_mode_decomposition_witness(p, 2), std::domain_error);
  CHECK_THROWS_AS(good_mode_decomposition_witness(FamilyParams(0, 1), 1), std::domain_error);

  std::vector<ElemAut> w11 = good_mode_decomposition_witness(p, 1);
  REQUIRE(w11.size() == 2);
  CHECK(w11[0].name() == "A(ba)");
  CHECK(w11[1].name() == "A(ca)");
  Substitution3 carried = irreducible_good_root(1);
  for (const ElemAut& e : w11) carried = apply_elem(e, carried);
  CHECK(carried == sub3("aca", "baa", "caaba"));

  SECTION("witnesses land on the plain good rows") {
    for (long k = 1; k <= 3; ++k)
      for (long n = 1; n <= 3; ++n) {
        FamilyParams q(k, n);
        std::vector<FamilyTableRow> rows = family_table(q);
        std::size_t L = rows.size();
        for (long l = 1; l <= k; ++l) {
          Substitution3 t = irreducible_good_root(n);
          for (const ElemAut& e : good_mode_decomposition_witness(q, l)) t = apply_elem(e, t);
          std::size_t r = L - static_cast<std::size_t>(k) - 2 + static_cast<std::size_t>(l);
          CHECK(mode_of(t) == rows[r].mode);
          CHECK(rows[r].label == "good");
        }
      }
  }
}

TEST_CASE("hand-built decomposition of the root modes") {
  for (long k = 0; k <= 3; ++k)
    for (long n = 1; n <= 3; ++n) {
      Decomposition d;
      d.perm = LetterPerm('b', 'a', 'c');
      d.productions.push_back(ElemAut(ElemAut::Kind::Prepend, 'c', 'b'));
      for (long i = 0; i < n - 1; ++i) {
        d.productions.push_back(ElemAut(ElemAut::Kind::Prepend, 'c', 'a'));
        d.productions.push_back(ElemAut(ElemAut::Kind::Prepend, 'c', 'b'));
      }
      d.productions.push_back(ElemAut(ElemAut::Kind::Prepend, 'a', 'c'));
      d.productions.push_back(ElemAut(ElemAut::Kind::Append, 'b', 'a'));
      for (long i = 0; i < k; ++i)
        d.productions.push_back(ElemAut(ElemAut::Kind::Prepend, 'c', 'a'));
      for (long i = 0; i < k; ++i)
        d.productions.push_back(ElemAut(ElemAut::Kind::Prepend, 'b', 'a'));
      CHECK(replay_decomposition(d) == family_substitution(FamilyParams(k, n)));
    }
}

TEST_CASE("authentic enumeration at the smallest budget") {
  CHECK_THROWS_AS(enumerate_authentic(6), std::domain_error);
  std::vector<Substitution3> found = enumerate_authentic(7);
  CHECK(mode_strings(found) ==
        std::vector<std::string>{"ab|ac||bac", "ac|ab||acb", "ac|ba||cab", "ba|ca||bac",
                                 "ca|ba||cba"});
}

TEST_CASE("authentic enumeration cross-validated by exhaustive scan") {
  std::vector<Substitution3> found = enumerate_authentic(13);
  std::set<std::string> keys;
  for (const Substitution3& s : found) keys.insert(letterwise_class_key(s));
  REQUIRE(keys.size() == found.size());
  CHECK(keys == brute_authentic_keys(13));

  SECTION("thirteen-letter budget reaches beyond the family cells") {
    std::vector<std::string> modes = mode_strings(found);
    auto has = [&](const std::string& m) {
      return std::find(modes.begin(), modes.end(), m) != modes.end();
    };
    CHECK(has("bcba|cbca||bcbac"));
    CHECK(has("bacba|cabca||bac"));
    CHECK_FALSE(decide_morphic(sub3("bcba", "cbca", "bcbac")).has_value());
    CHECK_FALSE(decide_morphic(sub3("bacba", "cabca", "bac")).has_value());
  }
}

TEST_CASE("conjecture search within thirteen letters") {
  ConjectureReport r = search_conjecture(13, 1);
  CHECK(r.max_length == 13);
  CHECK(r.classes_searched == 5);
  CHECK(r.counts.morphic == 19);
  CHECK(r.counts.good == 26);
  CHECK(r.counts.bad_star == 5);
  CHECK(r.counts.bad_double_star == 5);
  CHECK(r.counterexamples.empty());

  SECTION("worker count does not change the report") {
    CHECK(search_conjecture(13, 4) == r);
  }

  SECTION("smallest budget") {
    ConjectureReport s = search_conjecture(7, 1);
    CHECK(s.classes_searched == 1);
    CHECK(s.counts.morphic == 4);
    CHECK(s.counts.good == 1);
    CHECK(s.counts.bad_star == 1);
    CHECK(s.counts.bad_double_star == 1);
    CHECK(s.counterexamples.empty());
  }

  SECTION("invalid arguments") {
    CHECK_THROWS_AS(search_conjecture(5, 1), std::domain_error);
    CHECK_THROWS_AS(search_conjecture(13, 0), std::domain_error);
  }
}

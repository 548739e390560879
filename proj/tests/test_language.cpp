#include <doctest.h>

#include "oracle.hpp"
#include "reesloop/error.hpp"
#include "reesloop/language.hpp"
#include "reesloop/loops.hpp"
#include "test_util.hpp"

using namespace reesloop;
using testutil::lang;
using testutil::w;
using testutil::words;
using WordSet = testutil::WordSet;

namespace {

const Alphabet X = testutil::hat_x();

WordSet set_of(std::initializer_list<const char*> ws) {
  WordSet out;
  for (const char* t : ws) out.insert(parse_word(X, t));
  return out;
}

}  // namespace

TEST_CASE("alphabets and words") {
  CHECK(X.size() == 2);
  CHECK(X.bar(X.bar(0)) == 0);
  CHECK(X.bar(0) == 1);
  CHECK(format_word(X, {}) == "-");
  CHECK(format_word(X, {0, 1, 0}) == "x.~x.x");
  CHECK(parse_word(X, "x.~x") == Word{0, 1});
  CHECK(parse_word(X, "-").empty());
  CHECK_THROWS_AS(parse_word(X, "y"), Error);
  CHECK(involution(X, w(X, "x.~x.x")) == w(X, "~x.x.~x"));
  const auto plain = Alphabet::plain({"a", "b"});
  CHECK(plain.size() == 2);
  CHECK_THROWS_AS(plain.bar(0), Error);
}

TEST_CASE("membership, equivalence and determinization") {
  CHECK(member(lang(X, {"x.~x"}), w(X, "x.~x")));
  const auto sx = star(lang(X, {"x"}));
  CHECK(equivalent(star(sx), sx));

  Nfa two(X, 3);
  two.set_initial(0);
  two.set_initial(1);
  two.add_transition(0, 0, 2);
  two.add_transition(1, 1, 2);
  two.set_final(2);
  const Dfa d = minimize(determinize(two));
  CHECK(d.states() == 2);  // start and accept; the dead state stays implicit
  CHECK(words(d, 3) == set_of({"x", "~x"}));

  CHECK_THROWS_AS(equivalent(lang(X, {"x"}), empty_language(Alphabet::hat({"y"}))), Error);
}

TEST_CASE("union, concatenation and star") {
  CHECK(words(union_of(lang(X, {"x"}), lang(X, {"~x"})), 4) == set_of({"x", "~x"}));
  CHECK(words(concat(lang(X, {"x"}), lang(X, {"x"})), 4) == set_of({"x.x"}));
  const auto s = star(lang(X, {"x.~x"}));
  CHECK(member(s, {}));
  CHECK(member(s, w(X, "x.~x.x.~x")));
  CHECK_FALSE(member(s, w(X, "x")));
  CHECK(member(star(empty_language(X)), {}));
  CHECK_FALSE(member(plus(lang(X, {"x"})), {}));
}

TEST_CASE("intersection") {
  const auto l = lang(X, {"x.~x", "x"});
  CHECK(equivalent(intersect(l, universal_language(X)), l));
  CHECK(words(intersect(l, empty_language(X)), 4).empty());
  const auto len2 = concat(words_over(X, std::vector<Letter>{}), lang(X, {"x.x", "x.~x", "~x.x", "~x.~x"}));
  CHECK(words(intersect(l, len2), 4) == set_of({"x.~x"}));
}

TEST_CASE("quotients") {
  CHECK(words(right_quotient(lang(X, {"x.~x"}), lang(X, {"~x"})), 4) == set_of({"x"}));
  CHECK(words(left_quotient(lang(X, {"x"}), lang(X, {"x.~x"})), 4) == set_of({"~x"}));
  const auto l = star(lang(X, {"x.~x", "x.x"}));
  CHECK(equivalent(right_quotient(l, epsilon_language(X)), l));
  CHECK(equivalent(left_quotient(epsilon_language(X), l), l));
}

TEST_CASE("involution image") {
  CHECK(words(involution_image(lang(X, {"x"})), 3) == set_of({"~x"}));
  CHECK(words(involution_image(lang(X, {"x.~x"})), 3) == set_of({"x.~x"}));
  CHECK(words(involution_image(lang(X, {"x.~x.x"})), 3) == set_of({"~x.x.~x"}));
  CHECK_THROWS_AS(involution_image(empty_language(Alphabet::plain({"a"}))), Error);
}

TEST_CASE("prefix, suffix and factor closures") {
  const auto l = lang(X, {"x.~x"});
  CHECK(words(prefix_closure(l), 3) == set_of({"-", "x", "x.~x"}));
  CHECK(words(suffix_closure(l), 3) == set_of({"-", "~x", "x.~x"}));
  CHECK(words(factor_closure(l), 3) == set_of({"-", "x", "~x", "x.~x"}));
}

TEST_CASE("enumerate_words") {
  const auto v = enumerate_words(star(lang(X, {"x"})), 2);
  CHECK(v == std::vector<Word>{{}, {0}, {0, 0}});
  CHECK(enumerate_words(empty_language(X), 3).empty());
  const GeneratorMap sigma({"x"}, cyclic_group(2), {1});
  const auto loops = enumerate_words(loop_problem(sigma), 2);
  CHECK(loops == std::vector<Word>{{}, {0, 1}});
}

TEST_CASE("language operations agree with their definitions on random automata") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Alphabet a = trial % 2 ? Alphabet::hat({"x", "y"}) : Alphabet::hat({"x"});
    const Nfa l = testutil::random_nfa(a, rng);
    const Nfa r = testutil::random_nfa(a, rng);
    const auto bad = oracle::check_language_ops(l, r, 5);
    CAPTURE(trial);
    CHECK(bad.empty());
    for (const auto& b : bad) MESSAGE(b);
  }
}

TEST_CASE("algebraic identities on random automata") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Alphabet a = Alphabet::hat({"x", "y"});
    const Nfa l = testutil::random_nfa(a, rng);
    const Nfa r = testutil::random_nfa(a, rng);
    CAPTURE(trial);
    CHECK(equivalent(involution_image(involution_image(l)), l));
    CHECK(equivalent(right_quotient(l, r),
                     involution_image(left_quotient(involution_image(r), involution_image(l)))));
    CHECK(equivalent(prefix_closure(prefix_closure(l)), prefix_closure(l)));
    CHECK(equivalent(suffix_closure(suffix_closure(l)), suffix_closure(l)));
    CHECK(equivalent(factor_closure(factor_closure(l)), factor_closure(l)));
    const Dfa m = minimize(determinize(l));
    CHECK(minimize(m) == m);
    CHECK(equivalent(to_nfa(m), l));
  }
}

TEST_CASE("relabel moves symbols between alphabets") {
  const auto src = lang(X, {"x.~x"});
  const auto target = Alphabet::hat({"y", "x"});
  const std::vector<std::size_t> map{1};
  const auto moved = relabel(src, target, map);
  CHECK(words(moved, 3) == WordSet{parse_word(target, "x.~x")});
}

#include <doctest.h>

#include <filesystem>

#include "reesloop/corpus.hpp"
#include "reesloop/error.hpp"
#include "reesloop/io.hpp"
#include "reesloop/loops.hpp"
#include "test_util.hpp"

using namespace reesloop;

namespace {

std::size_t parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no parse error");
  return 0;
}

}  // namespace

TEST_CASE("semigroup tables round-trip") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate_semigroups(n)) CHECK(parse_semigroup(format_semigroup(s)) == s);
  }
  for (const auto& s : {brandt_b2(), adjoin_zero(cyclic_group(3)), adjoin_identity(left_zero_semigroup(2))}) {
    CHECK(parse_semigroup(format_semigroup(s)) == s);
  }
}

TEST_CASE("semigroup parsing") {
  const auto s = parse_semigroup("# C2 with a zero\n\n3\ne g 0\ne g 0\ng e 0\n0 0 0\nzero 0\nidentity e\n");
  CHECK(s.order() == 3);
  CHECK(s.zero() == Elem{2});
  CHECK(s.identity() == Elem{0});
  CHECK(s.mul(1, 1) == 0);

  CHECK(parse_error_line([] { parse_semigroup("2\ne g\ne g\ng\n"); }) == 4);
  CHECK(parse_error_line([] { parse_semigroup("2\ne g\ne g\ng q\n"); }) == 4);
  CHECK(parse_error_line([] { parse_semigroup("x\n"); }) == 1);
  CHECK(parse_error_line([] { parse_semigroup("1\ne\ne\nzero q\n"); }) == 4);
  CHECK_THROWS_WITH(parse_semigroup("2\na b\nb a\na a\n"), doctest::Contains("NonAssociative"));
}

TEST_CASE("automata round-trip") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testutil::random_nfa(Alphabet::hat({"x", "y"}), rng);
    const auto back = parse_automaton(format_automaton(a));
    CHECK(back.alphabet() == a.alphabet());
    CHECK(back.transitions() == a.transitions());
    CHECK(back.initial_states() == a.initial_states());
    CHECK(back.final_states() == a.final_states());
    const auto d = minimize(determinize(a));
    CHECK(equivalent(parse_automaton(format_automaton(d)), a));
  }
  const auto plain = Nfa(Alphabet::plain({"a", "b"}), 1);
  CHECK(parse_automaton(format_automaton(plain)).alphabet() == plain.alphabet());
}

TEST_CASE("automaton parsing") {
  const auto a = parse_automaton("states 2\ninitial 0\nfinal 1\n0 x 1\n1 ~x 0\n1 - 0\n");
  CHECK(a.alphabet() == Alphabet::hat({"x"}));
  CHECK(a.has_epsilon());
  CHECK(member(a, {0}));
  CHECK(parse_error_line([] { parse_automaton("states 2\ninitial 0\nfinal 1\n0 x 7\n"); }) == 4);
  CHECK(parse_error_line([] { parse_automaton("states 1\ninitial 0\nfinal 0\n0 x\n"); }) == 4);
}

TEST_CASE("transducers round-trip") {
  SandwichMatrix p(2, 2);
  p.set(0, 0, 0);
  p.set(0, 1, 1);
  p.set(1, 0, 1);
  p.set(1, 1, 0);
  const auto c2 = cyclic_group(2);
  const auto m = rees_matrix(c2, 2, 2, p, false);
  const auto t = build_rees_transducer(GeneratorMap({"x"}, c2, {1}), m.structure, full_generators(m.semigroup));
  CHECK(parse_transducer(format_transducer(t)) == t);

  const auto u = parse_transducer("states 1\ninput x\noutput y\ninitial 0\nfinal 0\n0 x.~x / - 0\n0 - / y 0\n");
  CHECK(u.edges().size() == 2);
  CHECK(u.edges()[0].output.empty());
  CHECK(parse_error_line([] { parse_transducer("states 1\ninput x\noutput y\ninitial 0\nfinal 0\n0 x y 0\n"); }) ==
        6);
}

TEST_CASE("Rees specs round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "reesloop_io_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "c2.txt", format_semigroup(cyclic_group(2)));
  const auto spec = parse_rees_spec("base c2.txt\nI 2\nJ 1\nzero yes\nmatrix\ng 0\n", dir);
  CHECK(spec.base == cyclic_group(2));
  CHECK(spec.i_count == 2);
  CHECK(spec.j_count == 1);
  CHECK(spec.with_zero);
  CHECK(spec.sandwich.at(0, 0) == Elem{1});
  CHECK_FALSE(spec.sandwich.at(0, 1).has_value());

  const auto again = parse_rees_spec(format_rees_spec(spec), dir);
  CHECK(again.base == spec.base);
  CHECK(again.sandwich == spec.sandwich);
  CHECK(again.with_zero == spec.with_zero);

  CHECK(parse_error_line([&] { parse_rees_spec("base c2.txt\nI 1\nJ 1\nzero no\nmatrix\n0\n", dir); }) == 6);
  CHECK(parse_error_line([&] { parse_rees_spec("base c2.txt\nI 1\nJ 1\nzero no\nmatrix\nq\n", dir); }) == 6);
  CHECK_THROWS_AS(parse_rees_spec("base missing.txt\nI 1\nJ 1\nzero no\nmatrix\ne\n", dir), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("DOT for automata") {
  const auto dot = to_dot(loop_problem(GeneratorMap({"x"}, cyclic_group(2), {1})));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}

#include <doctest.h>

#include <functional>

#include "reesloop/corpus.hpp"
#include "reesloop/error.hpp"
#include "reesloop/loops.hpp"
#include "reesloop/theorems.hpp"
#include "test_util.hpp"

using namespace reesloop;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalError;
}

std::string sep(const VerificationReport& r) {
  const auto s = r.separator();
  return s ? format_word(r.lhs().alphabet(), *s) : "";
}

SandwichMatrix matrix(std::size_t rows, std::size_t cols, std::vector<std::optional<Elem>> entries) {
  SandwichMatrix p(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) p.set(k / cols, k % cols, entries[k]);
  return p;
}

constexpr std::optional<Elem> Z = std::nullopt;

FiniteSemigroup monoid_c2_zero() {
  const auto z = adjoin_zero(cyclic_group(2));
  return make_semigroup_flat(z.labels(), {z.table().begin(), z.table().end()}, z.zero(), Elem{0});
}

}  // namespace

TEST_CASE("reports") {
  const auto x = testutil::hat_x();
  const auto c = compare_languages("c", testutil::lang(x, {"x", "x.x"}), testutil::lang(x, {"x"}));
  CHECK_FALSE(c.holds());
  CHECK(c.separator == testutil::w(x, "x.x"));
  CHECK(c.lhs.minimal());

  VerificationReport r;
  r.tag = "t";
  r.instance = "i";
  r.checks.push_back(compare_languages("same", testutil::lang(x, {"x"}), testutil::lang(x, {"x"})));
  CHECK(r.holds());
  CHECK(r.result_line() == "RESULT t i PASS");
  VerificationReport part;
  part.checks.push_back(c);
  merge_report(r, part, "sub/");
  CHECK_FALSE(r.holds());
  CHECK(r.primary().name == "sub/c");
  CHECK(r.result_line() == "RESULT t i FAIL sub/c:x.x");
  CHECK(r.work_units() > 0);
  CHECK(r.summary().find("sub/c") != std::string::npos);
}

TEST_CASE("Rees quotient identity") {
  const GeneratorMap sigma({"x", "z"}, adjoin_zero(cyclic_group(2)), {1, 2});
  const auto r = verify_rees_quotient(sigma, {2});
  CHECK(r.holds());
  CHECK(r.checks.size() == 4);

  const auto whole = verify_rees_quotient(sigma, {0, 1, 2});
  CHECK(whole.holds());
  const auto trivial_zero = make_semigroup({"0"}, {{0}}, Elem{0});
  CHECK(equivalent(to_nfa(whole.lhs()), loop_problem(GeneratorMap({"x", "z"}, trivial_zero, {0, 0}))));

  CHECK(code_of([&] { verify_rees_quotient(sigma, {0}); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("the unstarred quotient formula misses repeated visits to the zero") {
  const auto rz = make_semigroup_flat({"a", "b"}, {0, 1, 0, 1});
  const auto sigma = full_generators(rz);
  CHECK(verify_rees_quotient(sigma, {0, 1}).holds());
  const auto literal = verify_rees_quotient_literal(sigma, {0, 1});
  CHECK_FALSE(literal.holds());
  CHECK(sep(literal) == "a.~b.a.~b.a.~b");
}

TEST_CASE("subsemigroup intersection") {
  const auto c2 = cyclic_group(2);
  CHECK(verify_subsemigroup_intersection(full_generators(c2), {0, 1}, {0, 1}).holds());

  for (const auto& s : enumerate_semigroups(2)) {
    const auto tau = extend_to_zero(full_generators(s));
    CHECK(tau.symbols().back() == "z");
    CHECK(verify_subsemigroup_intersection(tau, {0, 1}, {0, 1}).holds());
  }

  const auto s = make_semigroup_flat({"a", "b", "c", "d"}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0});
  const ElemSet t{0, 1, 2};
  const std::vector<std::size_t> xs{0, 1, 2};
  REQUIRE(is_subsemigroup(s, t));
  REQUIRE_FALSE(is_weakly_pru(s, t));
  CHECK(code_of([&] { verify_subsemigroup_intersection(full_generators(s), t, xs); }) ==
        ErrorCode::HypothesisFailed);
  const auto control = verify_subsemigroup_intersection(full_generators(s), t, xs, false);
  CHECK_FALSE(control.holds());
  CHECK(sep(control) == "a.~a.c.~b");

  const auto z = adjoin_zero(c2);
  CHECK(code_of([&] { verify_subsemigroup_intersection(full_generators(z), {}, {}); }) == ErrorCode::EmptySubset);
  CHECK(code_of([&] { verify_subsemigroup_intersection(full_generators(z), {1}, {1}); }) ==
        ErrorCode::NotASubsemigroup);
  CHECK(code_of([&] { verify_subsemigroup_intersection(full_generators(z), {0, 1}, {0}); }) ==
        ErrorCode::RestrictionNotOntoT);
}

TEST_CASE("negative controls below order four all hold") {
  std::size_t not_weak = 0, failing = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate_semigroups(n)) {
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        ElemSet t;
        for (Elem e = 0; e < n; ++e) {
          if (mask >> e & 1) t.push_back(e);
        }
        if (!is_subsemigroup(s, t) || is_weakly_pru(s, t)) continue;
        ++not_weak;
        const std::vector<std::size_t> xs(t.begin(), t.end());
        failing += verify_subsemigroup_intersection(full_generators(s), t, xs, false).holds() ? 0 : 1;
      }
    }
  }
  CHECK(not_weak == 51);
  CHECK(failing == 0);
}

TEST_CASE("adjoining and removing a zero") {
  const auto triv = full_generators(trivial_semigroup());
  CHECK(loop_automaton(extend_to_zero(triv)).nfa.states() == 3);
  CHECK(verify_adjoin_zero(triv).holds());
  CHECK(verify_adjoin_zero(GeneratorMap({"x"}, cyclic_group(2), {1})).holds());
  CHECK(verify_remove_zero(triv).holds());
  CHECK(verify_remove_zero(full_generators(cyclic_group(3))).holds());

  const auto literal = verify_adjoin_zero_literal(triv);
  CHECK_FALSE(literal.holds());
  CHECK(sep(literal) == "z.e.~z");
}

TEST_CASE("Rees matrix semigroups without zero") {
  const auto one = matrix(1, 1, {0});
  CHECK(verify_semitorees(full_generators(trivial_semigroup()), 1, 1, one).holds());
  const GeneratorMap c2({"x"}, cyclic_group(2), {1});
  CHECK(verify_semitorees(c2, 1, 1, one).holds());
  std::size_t count = 0;
  for (const auto& p : all_sandwich_matrices(2, 2, 2, false)) {
    const auto r = verify_semitorees(c2, 2, 2, p);
    CHECK(r.holds());
    CHECK(r.checks.size() >= 2);
    ++count;
  }
  CHECK(count == 16);
  SemitoreesOptions opt;
  opt.seed = 99;
  CHECK(verify_semitorees(c2, 2, 2, matrix(2, 2, {0, 1, 1, 0}), opt).holds());
  CHECK(code_of([&] { verify_semitorees(c2, 1, 1, matrix(1, 1, {Z})); }) == ErrorCode::ZeroEntry);
}

TEST_CASE("Rees matrix semigroups with zero") {
  const auto triv = full_generators(trivial_semigroup());
  CHECK(verify_semitoreeszero(triv, 2, 2, matrix(2, 2, {0, Z, Z, 0})).holds());
  CHECK(verify_semitoreeszero(triv, 2, 2, matrix(2, 2, {Z, Z, Z, Z})).holds());
  const GeneratorMap c2({"x"}, cyclic_group(2), {1});
  CHECK(verify_semitoreeszero(c2, 2, 2, matrix(2, 2, {1, Z, 0, Z})).holds());
}

TEST_CASE("admissible columns") {
  const auto c2 = cyclic_group(2);
  CHECK(find_admissible_column(c2, matrix(2, 2, {Z, Z, Z, 1})) == Column{1, 1});
  CHECK(find_admissible_column(c2, matrix(2, 2, {Z, Z, Z, Z})) == std::nullopt);
  CHECK(find_admissible_column(c2, matrix(1, 1, {0})) == Column{0, 0});
  const auto null2 = null_semigroup(2);
  CHECK(find_admissible_column(null2, matrix(1, 1, {1})) == Column{0, 0});
}

TEST_CASE("sandwich matrices containing a unit") {
  const auto c2m = make_semigroup_flat({"e", "g"}, {0, 1, 1, 0}, std::nullopt, Elem{0});
  const auto sigma = full_generators(c2m);
  CHECK(verify_unit_sandwich(sigma, 2, 2, matrix(2, 2, {1, Z, Z, Z})).holds());
  CHECK(verify_unit_sandwich(sigma, 1, 2, matrix(2, 1, {0, 1})).holds());

  const auto m = monoid_c2_zero();
  CHECK(verify_unit_sandwich(full_generators(m), 2, 1, matrix(1, 2, {2, 0})).holds());
  CHECK(code_of([&] { verify_unit_sandwich(full_generators(m), 1, 1, matrix(1, 1, {2})); }) ==
        ErrorCode::NoUnitInP);

  const auto triv = make_semigroup({"e"}, {{0}}, std::nullopt, Elem{0});
  CHECK(verify_unit_sandwich(full_generators(triv), 1, 1, matrix(1, 1, {0})).holds());
  const auto lz = full_generators(left_zero_semigroup(2));
  CHECK(code_of([&] { verify_unit_sandwich(lz, 1, 1, matrix(1, 1, {0})); }) == ErrorCode::NoIdentity);
}

TEST_CASE("Rees decomposition") {
  const auto c3z = adjoin_zero(cyclic_group(3));
  const auto d = rees_decompose(c3z);
  CHECK(d.i_count == 1);
  CHECK(d.j_count == 1);
  CHECK(d.group.group.order() == 3);
  CHECK(d.sandwich.at(0, 0) == d.group.group.identity());

  const auto b = rees_decompose(brandt_b2());
  CHECK(b.group.group.order() == 1);
  CHECK(b.i_count == 2);
  CHECK(b.j_count == 2);
  CHECK(b.sandwich.regular());
  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) nonzero += b.sandwich.at(j, i) ? 1 : 0;
  }
  CHECK(nonzero == 2);
  CHECK(is_homomorphism(b.rees.semigroup, brandt_b2(), b.isomorphism));

  for (const auto& p : regular_sandwich_matrices(2, 2, 2)) {
    const auto m = rees_matrix(cyclic_group(2), 2, 2, p, true).semigroup;
    const auto r = rees_decompose(m);
    CHECK(is_homomorphism(r.rees.semigroup, m, r.isomorphism));
    CHECK(find_isomorphism(r.rees.semigroup, m).has_value());
  }

  const auto null2 = make_semigroup_flat({"a", "0"}, {1, 1, 1, 1}, Elem{1});
  CHECK(code_of([&] { rees_decompose(null2); }) == ErrorCode::NotCompletelyZeroSimple);
}

TEST_CASE("completely zero-simple semigroups") {
  CHECK(verify_czeros(full_generators(brandt_b2())).holds());
  CHECK(verify_czeros(full_generators(adjoin_zero(cyclic_group(3)))).holds());
  CHECK(verify_decompose_roundtrip(brandt_b2()).holds());
}

TEST_CASE("corpus runs are reproducible and ordered") {
  CorpusBounds b;
  b.max_order = 2;
  b.max_group = 2;
  for (const auto& tag : {"semitorees", "czeros", "rees-quotient"}) {
    const auto inst = corpus_instances(tag, b);
    const auto one = run_instances(inst, 1);
    const auto many = run_instances(inst, 3);
    REQUIRE(one.size() == many.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
      CHECK(one[k].result_line() == many[k].result_line());
      CHECK(one[k].passed());
      if (k) CHECK(one[k - 1].id < one[k].id);
    }
  }
  CHECK_THROWS_AS(corpus_instances("nope", b), Error);
}

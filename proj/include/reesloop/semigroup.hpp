#pragma once

// Finite semigroups given by multiplication tables, and the constructions
// built on them: adjoined identities and zeros, Rees quotients, Rees matrix
// semigroups, Green's relations and the unitary-type subsemigroup predicates.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reesloop/error.hpp"

namespace reesloop {

/// Dense element index into a FiniteSemigroup.
using Elem = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using ElemSet = std::vector<Elem>;

class FiniteSemigroup {
 public:
  std::size_t order() const noexcept { return labels_.size(); }

  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order() + b]; }

  const std::string& label(Elem a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  std::optional<Elem> zero() const noexcept { return zero_; }
  std::optional<Elem> identity() const noexcept { return identity_; }

  /// Row-major table, `order() * order()` entries.
  std::span<const Elem> table() const noexcept { return table_; }

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  friend FiniteSemigroup make_semigroup_flat(std::vector<std::string>, std::vector<Elem>,
                                             std::optional<Elem>, std::optional<Elem>);

  std::vector<std::string> labels_;
  std::vector<Elem> table_;
  std::optional<Elem> zero_;
  std::optional<Elem> identity_;
};

/// Validates and builds a semigroup. Throws IndexOutOfRange, NonAssociative
/// (first failing triple in lexicographic order), BadZero or BadIdentity.
FiniteSemigroup make_semigroup(std::vector<std::string> labels,
                               const std::vector<std::vector<Elem>>& table,
                               std::optional<Elem> zero = std::nullopt,
                               std::optional<Elem> identity = std::nullopt);

/// As make_semigroup, with the table given row-major.
FiniteSemigroup make_semigroup_flat(std::vector<std::string> labels, std::vector<Elem> table,
                                    std::optional<Elem> zero = std::nullopt,
                                    std::optional<Elem> identity = std::nullopt);

/// Returns `base` unless it already occurs in `taken`, in which case primes are appended.
std::string fresh_label(std::string base, std::span<const std::string> taken);

// Small catalogue used throughout tests and the corpus harness.
FiniteSemigroup trivial_semigroup();
FiniteSemigroup cyclic_group(std::size_t n);
FiniteSemigroup left_zero_semigroup(std::size_t n);
FiniteSemigroup right_zero_semigroup(std::size_t n);
FiniteSemigroup null_semigroup(std::size_t n);

/// S^1: a fresh identity appended as the last element, even when S is a monoid.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

/// S^0: a fresh zero appended as the last element.
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s);

enum class Generation { semigroup, monoid };

/// A surjective map from a finite alphabet onto a semigroup (or, for
/// Generation::monoid, onto a monoid where the empty word maps to the identity).
class GeneratorMap {
 public:
  /// Throws NotGenerating if the images do not generate `target`.
  GeneratorMap(std::vector<std::string> symbols, FiniteSemigroup target, std::vector<Elem> image,
               Generation kind = Generation::semigroup);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const FiniteSemigroup& target() const noexcept { return target_; }
  Elem image(std::size_t symbol) const { return image_.at(symbol); }
  const std::vector<Elem>& images() const noexcept { return image_; }
  Generation kind() const noexcept { return kind_; }

  /// Value of a nonempty sequence of symbol indices (or the identity of a monoid map on empty input).
  Elem evaluate(std::span<const std::size_t> symbols) const;

  bool operator==(const GeneratorMap&) const = default;

 private:
  std::vector<std::string> symbols_;
  FiniteSemigroup target_;
  std::vector<Elem> image_;
  Generation kind_;
};

/// Every element as a generator, named by its label.
GeneratorMap full_generators(const FiniteSemigroup& s);

/// sigma^1 : X* -> S^1 for a semigroup choice sigma : X+ -> S.
GeneratorMap lift_to_monoid(const GeneratorMap& sigma);

/// The subsemigroup generated by `gens`.
ElemSet generated_subsemigroup(const FiniteSemigroup& s, std::span<const Elem> gens);

bool is_subsemigroup(const FiniteSemigroup& s, std::span<const Elem> subset);

struct Subsemigroup {
  FiniteSemigroup semigroup;
  std::vector<Elem> embedding;  // sub index -> index in the parent
};

/// The induced table on a subsemigroup; zero/identity carried over when they lie in it.
Subsemigroup restrict_to(const FiniteSemigroup& s, const ElemSet& subset);

/// True iff subset is nonempty-closed with ST and TS inside T. Throws EmptySubset.
bool is_ideal(const FiniteSemigroup& s, std::span<const Elem> subset);

/// All ideals of s, each as a sorted set. Exponential in |s|; intended for small orders.
std::vector<ElemSet> all_ideals(const FiniteSemigroup& s);

/// Two-sided principal ideal S^1 a S^1.
ElemSet principal_ideal(const FiniteSemigroup& s, Elem a);

struct ReesQuotient {
  FiniteSemigroup semigroup;          // elements of S \ T in order, then the zero
  std::vector<Elem> projection;       // S -> S/T
  std::optional<GeneratorMap> generators;  // sigma/T when a choice was supplied
};

/// S/T. Throws NotAnIdeal.
ReesQuotient rees_quotient(const FiniteSemigroup& s, const ElemSet& ideal);
ReesQuotient rees_quotient(const GeneratorMap& sigma, const ElemSet& ideal);

/// J x I matrix over S u {ZERO}; std::nullopt is ZERO.
class SandwichMatrix {
 public:
  SandwichMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::optional<Elem> at(std::size_t j, std::size_t i) const { return entries_.at(j * cols_ + i); }
  void set(std::size_t j, std::size_t i, std::optional<Elem> value) {
    entries_.at(j * cols_ + i) = value;
  }

  bool has_zero_entry() const;
  /// Every row and every column holds a non-ZERO entry.
  bool regular() const;

  bool operator==(const SandwichMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::optional<Elem>> entries_;
};

/// Every J x I matrix with entries from S (and ZERO when `with_zero`), in lexicographic order.
std::vector<SandwichMatrix> all_sandwich_matrices(std::size_t order, std::size_t i_count,
                                                  std::size_t j_count, bool with_zero);

struct ReesTriple {
  std::size_t i;
  Elem s;
  std::size_t j;
  bool operator==(const ReesTriple&) const = default;
};

/// Coordinate chart (i, s, j) of a constructed Rees matrix semigroup.
class ReesStructure {
 public:
  ReesStructure(FiniteSemigroup base, std::size_t i_count, std::size_t j_count,
                SandwichMatrix sandwich, bool with_zero);

  const FiniteSemigroup& base() const noexcept { return base_; }
  std::size_t i_count() const noexcept { return i_count_; }
  std::size_t j_count() const noexcept { return j_count_; }
  const SandwichMatrix& sandwich() const noexcept { return sandwich_; }
  bool with_zero() const noexcept { return with_zero_; }

  std::size_t order() const noexcept {
    return i_count_ * base_.order() * j_count_ + (with_zero_ ? 1 : 0);
  }
  Elem encode(std::size_t i, Elem s, std::size_t j) const;
  Elem encode(const ReesTriple& t) const { return encode(t.i, t.s, t.j); }
  std::optional<Elem> zero() const;
  /// std::nullopt for the zero.
  std::optional<ReesTriple> decode(Elem e) const;

 private:
  FiniteSemigroup base_;
  std::size_t i_count_;
  std::size_t j_count_;
  SandwichMatrix sandwich_;
  bool with_zero_;
};

struct ReesMatrix {
  FiniteSemigroup semigroup;
  ReesStructure structure;
};

/// M(S; I, J; P) or M^0(S; I, J; P). Throws ZeroEntryWithoutZero.
ReesMatrix rees_matrix(const FiniteSemigroup& s, std::size_t i_count, std::size_t j_count,
                       const SandwichMatrix& sandwich, bool with_zero);

ElemSet idempotents(const FiniteSemigroup& s);

struct GreenClasses {
  // Class id per element for each relation; ids are assigned in order of
  // the smallest element of each class.
  std::vector<std::size_t> r, l, h, d;
  std::size_t r_count = 0, l_count = 0, h_count = 0, d_count = 0;
};

GreenClasses green_classes(const FiniteSemigroup& s);

struct Subgroup {
  FiniteSemigroup group;         // identity designated
  std::vector<Elem> embedding;   // group index -> parent index
  std::vector<Elem> inverse;     // group index -> group index of the inverse
};

/// Throws NoIdentity.
Subgroup group_of_units(const FiniteSemigroup& m);

/// The group H_e of units of eSe. Throws NotIdempotent.
Subgroup maximal_subgroup(const FiniteSemigroup& s, Elem e);

/// Only ideals {0} and S, and S^2 != {0}. Throws NoZero.
bool is_completely_zero_simple(const FiniteSemigroup& s);

/// x, ax in T imply a in T. Throws NotASubsemigroup.
bool is_right_unitary(const FiniteSemigroup& s, const ElemSet& t);
/// For all a in S there is b in T with ax = bx whenever x, ax in T.
bool is_pseudo_right_unitary(const FiniteSemigroup& s, const ElemSet& t);
/// For all a in S and x, y in T with ax in T there is b in T with ax = bx and ay = by.
bool is_weakly_pru(const FiniteSemigroup& s, const ElemSet& t);

/// Calls `visit` once per associative table on n labelled elements (n <= 4).
/// Throws OrderTooLarge.
void enumerate_semigroups(std::size_t n, const std::function<void(const FiniteSemigroup&)>& visit);
std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n);

/// f : a -> b is a homomorphism (ignores zero/identity designations).
bool is_homomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b, std::span<const Elem> f);

/// Some isomorphism a -> b, by backtracking.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b);

}  // namespace reesloop

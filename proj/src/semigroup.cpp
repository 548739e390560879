#include "reesloop/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace reesloop {

namespace {

bool contains(std::span<const Elem> sorted, Elem x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<char> membership(std::size_t n, std::span<const Elem> subset) {
  std::vector<char> in(n, 0);
  for (Elem x : subset) {
    if (x >= n) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
    in[x] = 1;
  }
  return in;
}

ElemSet normalized(std::span<const Elem> subset) {
  ElemSet out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string elem_name(const std::vector<std::string>& labels, Elem a) {
  return labels[a];
}

}  // namespace

std::optional<Elem> FiniteSemigroup::find(std::string_view label) const {
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    if (labels_[a] == label) return static_cast<Elem>(a);
  }
  return std::nullopt;
}

FiniteSemigroup make_semigroup_flat(std::vector<std::string> labels, std::vector<Elem> table,
                                    std::optional<Elem> zero, std::optional<Elem> identity) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "semigroup must have at least one element");
  if (table.size() != n * n) {
    throw Error(ErrorCode::IndexOutOfRange, "table must be " + std::to_string(n) + "x" +
                                                std::to_string(n));
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw Error(ErrorCode::Usage, "empty element label");
      if (!seen.insert(l).second) throw Error(ErrorCode::Usage, "duplicate element label " + l);
    }
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "table entry (" + std::to_string(k / n) + "," + std::to_string(k % n) +
                      ") = " + std::to_string(table[k]));
    }
  }
  if (zero && *zero >= n) throw Error(ErrorCode::IndexOutOfRange, "zero index");
  if (identity && *identity >= n) throw Error(ErrorCode::IndexOutOfRange, "identity index");

  auto mul = [&](Elem a, Elem b) { return table[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw NonAssociativeError({a, b, c}, "(" + elem_name(labels, a) + elem_name(labels, b) +
                                                   ")" + elem_name(labels, c) + " != " +
                                                   elem_name(labels, a) + "(" +
                                                   elem_name(labels, b) + elem_name(labels, c) +
                                                   ")");
        }
      }
    }
  }
  if (zero) {
    for (Elem a = 0; a < n; ++a) {
      if (mul(*zero, a) != *zero || mul(a, *zero) != *zero) {
        throw Error(ErrorCode::BadZero, labels[*zero] + " does not absorb " + labels[a]);
      }
    }
  }
  if (identity) {
    for (Elem a = 0; a < n; ++a) {
      if (mul(*identity, a) != a || mul(a, *identity) != a) {
        throw Error(ErrorCode::BadIdentity, labels[*identity] + " does not fix " + labels[a]);
      }
    }
  }

  FiniteSemigroup s;
  s.labels_ = std::move(labels);
  s.table_ = std::move(table);
  s.zero_ = zero;
  s.identity_ = identity;
  return s;
}

FiniteSemigroup make_semigroup(std::vector<std::string> labels,
                               const std::vector<std::vector<Elem>>& table,
                               std::optional<Elem> zero, std::optional<Elem> identity) {
  const std::size_t n = labels.size();
  if (table.size() != n) throw Error(ErrorCode::IndexOutOfRange, "table is not square");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::IndexOutOfRange, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_semigroup_flat(std::move(labels), std::move(flat), zero, identity);
}

std::string fresh_label(std::string base, std::span<const std::string> taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '\'';
  return base;
}

FiniteSemigroup trivial_semigroup() { return make_semigroup({"e"}, {{0}}); }

FiniteSemigroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "cyclic group of order 0");
  // Element k is g^k; label e for the identity, g, g2, ...
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
  }
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return make_semigroup_flat(std::move(labels), std::move(table), std::nullopt, Elem{0});
}

namespace {
std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(k < 26 ? std::string(1, static_cast<char>('a' + k)) : "a" + std::to_string(k));
  }
  return labels;
}
}  // namespace

FiniteSemigroup left_zero_semigroup(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(a);
  }
  return make_semigroup_flat(letter_labels(n), std::move(table));
}

FiniteSemigroup right_zero_semigroup(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(b);
  }
  return make_semigroup_flat(letter_labels(n), std::move(table));
}

FiniteSemigroup null_semigroup(std::size_t n) {
  // Elements a, b, ... plus the zero, all products zero.
  auto labels = letter_labels(n - 1);
  labels.push_back(fresh_label("0", labels));
  const Elem z = static_cast<Elem>(n - 1);
  return make_semigroup_flat(std::move(labels), std::vector<Elem>(n * n, z), z);
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  const std::size_t n = s.order();
  const Elem one = static_cast<Elem>(n);
  auto labels = s.labels();
  labels.push_back(fresh_label("1", s.labels()));
  std::vector<Elem> table((n + 1) * (n + 1));
  for (Elem a = 0; a <= n; ++a) {
    for (Elem b = 0; b <= n; ++b) {
      table[a * (n + 1) + b] = a == one ? b : b == one ? a : s.mul(a, b);
    }
  }
  return make_semigroup_flat(std::move(labels), std::move(table), s.zero(), one);
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  const std::size_t n = s.order();
  const Elem zero = static_cast<Elem>(n);
  auto labels = s.labels();
  labels.push_back(fresh_label("0", s.labels()));
  std::vector<Elem> table((n + 1) * (n + 1));
  for (Elem a = 0; a <= n; ++a) {
    for (Elem b = 0; b <= n; ++b) {
      table[a * (n + 1) + b] = (a == zero || b == zero) ? zero : s.mul(a, b);
    }
  }
  return make_semigroup_flat(std::move(labels), std::move(table), zero, s.identity());
}

GeneratorMap::GeneratorMap(std::vector<std::string> symbols, FiniteSemigroup target,
                           std::vector<Elem> image, Generation kind)
    : symbols_(std::move(symbols)), target_(std::move(target)), image_(std::move(image)),
      kind_(kind) {
  if (symbols_.size() != image_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "one image per generator symbol required");
  }
  std::set<std::string> seen;
  for (const auto& sym : symbols_) {
    if (sym.empty() || sym == "-" || sym.front() == '~' ||
        sym.find_first_of(" \t\n./") != std::string::npos) {
      throw Error(ErrorCode::Usage, "invalid generator symbol '" + sym + "'");
    }
    if (!seen.insert(sym).second) throw Error(ErrorCode::Usage, "duplicate generator " + sym);
  }
  for (Elem e : image_) {
    if (e >= target_.order()) throw Error(ErrorCode::IndexOutOfRange, "generator image");
  }
  if (kind_ == Generation::monoid && !target_.identity()) {
    throw Error(ErrorCode::NoIdentity, "monoid generators need a designated identity");
  }
  ElemSet reached = generated_subsemigroup(target_, image_);
  if (kind_ == Generation::monoid) {
    reached.push_back(*target_.identity());
    reached = normalized(reached);
  }
  if (reached.size() != target_.order()) {
    throw Error(ErrorCode::NotGenerating, "generators reach " + std::to_string(reached.size()) +
                                              " of " + std::to_string(target_.order()) +
                                              " elements");
  }
}

Elem GeneratorMap::evaluate(std::span<const std::size_t> symbols) const {
  if (symbols.empty()) {
    if (kind_ == Generation::monoid) return *target_.identity();
    throw Error(ErrorCode::Usage, "empty word has no value in a semigroup");
  }
  Elem acc = image(symbols[0]);
  for (std::size_t k = 1; k < symbols.size(); ++k) acc = target_.mul(acc, image(symbols[k]));
  return acc;
}

GeneratorMap full_generators(const FiniteSemigroup& s) {
  std::vector<Elem> image(s.order());
  std::iota(image.begin(), image.end(), Elem{0});
  return GeneratorMap(s.labels(), s, std::move(image));
}

GeneratorMap lift_to_monoid(const GeneratorMap& sigma) {
  if (sigma.kind() == Generation::monoid) return sigma;
  return GeneratorMap(sigma.symbols(), adjoin_identity(sigma.target()), sigma.images(),
                      Generation::monoid);
}

ElemSet generated_subsemigroup(const FiniteSemigroup& s, std::span<const Elem> gens) {
  std::vector<char> in(s.order(), 0);
  std::vector<Elem> frontier;
  for (Elem g : gens) {
    if (g >= s.order()) throw Error(ErrorCode::IndexOutOfRange, "generator");
    if (!in[g]) {
      in[g] = 1;
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    const Elem a = frontier.back();
    frontier.pop_back();
    for (Elem g : gens) {
      const Elem ag = s.mul(a, g);
      if (!in[ag]) {
        in[ag] = 1;
        frontier.push_back(ag);
      }
    }
  }
  ElemSet out;
  for (Elem a = 0; a < s.order(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

bool is_subsemigroup(const FiniteSemigroup& s, std::span<const Elem> subset) {
  if (subset.empty()) return false;
  const auto in = membership(s.order(), subset);
  for (Elem a : subset) {
    for (Elem b : subset) {
      if (!in[s.mul(a, b)]) return false;
    }
  }
  return true;
}

Subsemigroup restrict_to(const FiniteSemigroup& s, const ElemSet& subset) {
  const ElemSet t = normalized(subset);
  if (!is_subsemigroup(s, t)) throw Error(ErrorCode::NotASubsemigroup, "subset is not closed");
  std::vector<Elem> index(s.order(), 0);
  for (std::size_t k = 0; k < t.size(); ++k) index[t[k]] = static_cast<Elem>(k);
  std::vector<std::string> labels;
  for (Elem a : t) labels.push_back(s.label(a));
  std::vector<Elem> table(t.size() * t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) table[a * t.size() + b] = index[s.mul(t[a], t[b])];
  }
  std::optional<Elem> zero, identity;
  if (s.zero() && contains(t, *s.zero())) zero = index[*s.zero()];
  if (s.identity() && contains(t, *s.identity())) identity = index[*s.identity()];
  return {make_semigroup_flat(std::move(labels), std::move(table), zero, identity), t};
}

bool is_ideal(const FiniteSemigroup& s, std::span<const Elem> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "ideal candidate is empty");
  const auto in = membership(s.order(), subset);
  for (Elem t : subset) {
    for (Elem a = 0; a < s.order(); ++a) {
      if (!in[s.mul(a, t)] || !in[s.mul(t, a)]) return false;
    }
  }
  return true;
}

ElemSet principal_ideal(const FiniteSemigroup& s, Elem a) {
  std::vector<char> in(s.order(), 0);
  in[a] = 1;
  for (Elem x = 0; x < s.order(); ++x) {
    in[s.mul(x, a)] = 1;
    in[s.mul(a, x)] = 1;
    for (Elem y = 0; y < s.order(); ++y) in[s.mul(s.mul(x, a), y)] = 1;
  }
  ElemSet out;
  for (Elem x = 0; x < s.order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

std::vector<ElemSet> all_ideals(const FiniteSemigroup& s) {
  // Every ideal is a union of principal ideals, and unions of ideals are ideals.
  std::set<ElemSet> ideals;
  for (Elem a = 0; a < s.order(); ++a) {
    const ElemSet p = principal_ideal(s, a);
    std::vector<ElemSet> grown{p};
    for (const auto& existing : ideals) {
      ElemSet u;
      std::set_union(existing.begin(), existing.end(), p.begin(), p.end(), std::back_inserter(u));
      grown.push_back(std::move(u));
    }
    ideals.insert(grown.begin(), grown.end());
  }
  return {ideals.begin(), ideals.end()};
}

ReesQuotient rees_quotient(const FiniteSemigroup& s, const ElemSet& ideal) {
  const ElemSet t = normalized(ideal);
  if (!is_ideal(s, t)) throw Error(ErrorCode::NotAnIdeal, "subset is not a two-sided ideal");
  const std::size_t n = s.order();
  std::vector<Elem> projection(n);
  std::vector<std::string> labels;
  std::vector<Elem> kept;
  for (Elem a = 0; a < n; ++a) {
    if (!contains(t, a)) {
      projection[a] = static_cast<Elem>(kept.size());
      kept.push_back(a);
      labels.push_back(s.label(a));
    }
  }
  const Elem zero = static_cast<Elem>(kept.size());
  for (Elem a : t) projection[a] = zero;
  labels.push_back(fresh_label("0", labels));

  const std::size_t m = kept.size() + 1;
  std::vector<Elem> table(m * m, zero);
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = 0; b < kept.size(); ++b) {
      table[a * m + b] = projection[s.mul(kept[a], kept[b])];
    }
  }
  std::optional<Elem> identity;
  if (s.identity()) identity = projection[*s.identity()];
  if (identity && *identity == zero && m > 1) identity.reset();
  auto quotient = make_semigroup_flat(std::move(labels), std::move(table), zero, identity);

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (quotient.mul(projection[a], projection[b]) != projection[s.mul(a, b)]) {
        throw Error(ErrorCode::InternalError, "Rees projection is not a morphism");
      }
    }
  }
  return {std::move(quotient), std::move(projection), std::nullopt};
}

ReesQuotient rees_quotient(const GeneratorMap& sigma, const ElemSet& ideal) {
  auto q = rees_quotient(sigma.target(), ideal);
  std::vector<Elem> image;
  for (Elem e : sigma.images()) image.push_back(q.projection[e]);
  q.generators.emplace(sigma.symbols(), q.semigroup, std::move(image), sigma.kind());
  return q;
}

SandwichMatrix::SandwichMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

bool SandwichMatrix::has_zero_entry() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return !e; });
}

bool SandwichMatrix::regular() const {
  for (std::size_t j = 0; j < rows_; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < cols_; ++i) any = any || at(j, i).has_value();
    if (!any) return false;
  }
  for (std::size_t i = 0; i < cols_; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < rows_; ++j) any = any || at(j, i).has_value();
    if (!any) return false;
  }
  return true;
}

std::vector<SandwichMatrix> all_sandwich_matrices(std::size_t order, std::size_t i_count,
                                                  std::size_t j_count, bool with_zero) {
  const std::size_t cells = i_count * j_count;
  const std::size_t choices = order + (with_zero ? 1 : 0);
  std::vector<std::size_t> digits(cells, 0);
  std::vector<SandwichMatrix> out;
  while (true) {
    SandwichMatrix p(j_count, i_count);
    for (std::size_t k = 0; k < cells; ++k) {
      std::optional<Elem> v;
      if (!with_zero) v = static_cast<Elem>(digits[k]);
      else if (digits[k] > 0) v = static_cast<Elem>(digits[k] - 1);
      p.set(k / i_count, k % i_count, v);
    }
    out.push_back(std::move(p));
    std::size_t k = cells;
    while (k > 0) {
      --k;
      if (++digits[k] < choices) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (cells == 0) return out;
  }
}

ReesStructure::ReesStructure(FiniteSemigroup base, std::size_t i_count, std::size_t j_count,
                             SandwichMatrix sandwich, bool with_zero)
    : base_(std::move(base)), i_count_(i_count), j_count_(j_count),
      sandwich_(std::move(sandwich)), with_zero_(with_zero) {}

Elem ReesStructure::encode(std::size_t i, Elem s, std::size_t j) const {
  if (i >= i_count_ || j >= j_count_ || s >= base_.order()) {
    throw Error(ErrorCode::IndexOutOfRange, "Rees coordinates out of range");
  }
  return static_cast<Elem>((i * base_.order() + s) * j_count_ + j);
}

std::optional<Elem> ReesStructure::zero() const {
  if (!with_zero_) return std::nullopt;
  return static_cast<Elem>(i_count_ * base_.order() * j_count_);
}

std::optional<ReesTriple> ReesStructure::decode(Elem e) const {
  if (e >= order()) throw Error(ErrorCode::IndexOutOfRange, "not an element of the Rees semigroup");
  if (with_zero_ && e == *zero()) return std::nullopt;
  const std::size_t j = e % j_count_;
  const std::size_t rest = e / j_count_;
  return ReesTriple{rest / base_.order(), static_cast<Elem>(rest % base_.order()), j};
}

ReesMatrix rees_matrix(const FiniteSemigroup& s, std::size_t i_count, std::size_t j_count,
                       const SandwichMatrix& sandwich, bool with_zero) {
  if (i_count == 0 || j_count == 0) throw Error(ErrorCode::IndexOutOfRange, "empty index set");
  if (sandwich.rows() != j_count || sandwich.cols() != i_count) {
    throw Error(ErrorCode::IndexOutOfRange, "sandwich matrix must be |J| x |I|");
  }
  for (std::size_t j = 0; j < j_count; ++j) {
    for (std::size_t i = 0; i < i_count; ++i) {
      const auto p = sandwich.at(j, i);
      if (p && *p >= s.order()) throw Error(ErrorCode::IndexOutOfRange, "sandwich entry");
      if (!p && !with_zero) {
        throw Error(ErrorCode::ZeroEntryWithoutZero,
                    "P(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") is 0");
      }
    }
  }
  ReesStructure rees(s, i_count, j_count, sandwich, with_zero);
  const std::size_t n = rees.order();
  std::vector<std::string> labels(n);
  for (Elem e = 0; e < n; ++e) {
    if (const auto t = rees.decode(e)) {
      labels[e] = "(" + std::to_string(t->i + 1) + "," + s.label(t->s) + "," +
                  std::to_string(t->j + 1) + ")";
    }
  }
  if (const auto z = rees.zero()) {
    labels[*z] = "";
    labels[*z] = fresh_label("0", labels);
  }
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const auto ta = rees.decode(a);
      const auto tb = rees.decode(b);
      Elem product;
      if (!ta || !tb) {
        product = *rees.zero();
      } else if (const auto p = sandwich.at(ta->j, tb->i)) {
        product = rees.encode(ta->i, s.mul(s.mul(ta->s, *p), tb->s), tb->j);
      } else {
        product = *rees.zero();
      }
      table[a * n + b] = product;
    }
  }
  auto semigroup = make_semigroup_flat(std::move(labels), std::move(table), rees.zero());
  return {std::move(semigroup), std::move(rees)};
}

ElemSet idempotents(const FiniteSemigroup& s) {
  ElemSet out;
  for (Elem a = 0; a < s.order(); ++a) {
    if (s.mul(a, a) == a) out.push_back(a);
  }
  return out;
}

namespace {

template <typename Key>
std::vector<std::size_t> classes_by_key(const std::vector<Key>& keys, std::size_t& count) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> id(keys.size());
  for (std::size_t a = 0; a < keys.size(); ++a) {
    id[a] = ids.try_emplace(keys[a], ids.size()).first->second;
  }
  count = ids.size();
  return id;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

GreenClasses green_classes(const FiniteSemigroup& s) {
  const std::size_t n = s.order();
  std::vector<std::vector<char>> right(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> left(n, std::vector<char>(n, 0));
  for (Elem a = 0; a < n; ++a) {
    right[a][a] = left[a][a] = 1;
    for (Elem x = 0; x < n; ++x) {
      right[a][s.mul(a, x)] = 1;
      left[a][s.mul(x, a)] = 1;
    }
  }
  GreenClasses g;
  g.r = classes_by_key(right, g.r_count);
  g.l = classes_by_key(left, g.l_count);

  std::vector<std::pair<std::size_t, std::size_t>> hkey(n);
  for (std::size_t a = 0; a < n; ++a) hkey[a] = {g.r[a], g.l[a]};
  g.h = classes_by_key(hkey, g.h_count);

  // D is the join of R and L.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.r[a] == g.r[b] || g.l[a] == g.l[b]) {
        parent[find_root(parent, a)] = find_root(parent, b);
      }
    }
  }
  std::vector<std::size_t> dkey(n);
  for (std::size_t a = 0; a < n; ++a) dkey[a] = find_root(parent, a);
  g.d = classes_by_key(dkey, g.d_count);
  return g;
}

namespace {

Subgroup units_with_identity(const FiniteSemigroup& s, std::span<const Elem> carrier, Elem e) {
  ElemSet units;
  for (Elem g : carrier) {
    for (Elem h : carrier) {
      if (s.mul(g, h) == e && s.mul(h, g) == e) {
        units.push_back(g);
        break;
      }
    }
  }
  units = normalized(units);
  auto sub = restrict_to(s, units);
  // The restriction drops a zero designation unless the group is trivial
  // and happens to contain it; a group never keeps a zero label meaningfully.
  std::vector<std::string> labels = sub.semigroup.labels();
  std::vector<Elem> table(sub.semigroup.table().begin(), sub.semigroup.table().end());
  const Elem local_identity =
      static_cast<Elem>(std::lower_bound(units.begin(), units.end(), e) - units.begin());
  auto group = make_semigroup_flat(std::move(labels), std::move(table), std::nullopt,
                                   local_identity);
  std::vector<Elem> inverse(units.size());
  for (Elem g = 0; g < group.order(); ++g) {
    for (Elem h = 0; h < group.order(); ++h) {
      if (group.mul(g, h) == local_identity) inverse[g] = h;
    }
  }
  return {std::move(group), std::move(sub.embedding), std::move(inverse)};
}

}  // namespace

Subgroup group_of_units(const FiniteSemigroup& m) {
  if (!m.identity()) throw Error(ErrorCode::NoIdentity, "group of units needs an identity");
  std::vector<Elem> all(m.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return units_with_identity(m, all, *m.identity());
}

Subgroup maximal_subgroup(const FiniteSemigroup& s, Elem e) {
  if (e >= s.order()) throw Error(ErrorCode::IndexOutOfRange, "element");
  if (s.mul(e, e) != e) throw Error(ErrorCode::NotIdempotent, s.label(e) + " is not idempotent");
  ElemSet local;
  for (Elem x = 0; x < s.order(); ++x) local.push_back(s.mul(s.mul(e, x), e));
  local.push_back(e);
  local = normalized(local);
  return units_with_identity(s, local, e);
}

bool is_completely_zero_simple(const FiniteSemigroup& s) {
  if (!s.zero()) throw Error(ErrorCode::NoZero, "completely zero-simple needs a zero");
  const Elem zero = *s.zero();
  bool square_nonzero = false;
  for (Elem a = 0; a < s.order() && !square_nonzero; ++a) {
    for (Elem b = 0; b < s.order(); ++b) {
      if (s.mul(a, b) != zero) {
        square_nonzero = true;
        break;
      }
    }
  }
  if (!square_nonzero) return false;
  for (Elem a = 0; a < s.order(); ++a) {
    if (a != zero && principal_ideal(s, a).size() != s.order()) return false;
  }
  return true;
}

namespace {
std::vector<char> checked_subsemigroup(const FiniteSemigroup& s, const ElemSet& t) {
  if (!is_subsemigroup(s, t)) throw Error(ErrorCode::NotASubsemigroup, "T is not a subsemigroup");
  return membership(s.order(), t);
}
}  // namespace

bool is_right_unitary(const FiniteSemigroup& s, const ElemSet& t) {
  const auto in = checked_subsemigroup(s, t);
  for (Elem a = 0; a < s.order(); ++a) {
    if (in[a]) continue;
    for (Elem x : t) {
      if (in[s.mul(a, x)]) return false;
    }
  }
  return true;
}

bool is_pseudo_right_unitary(const FiniteSemigroup& s, const ElemSet& t) {
  const auto in = checked_subsemigroup(s, t);
  for (Elem a = 0; a < s.order(); ++a) {
    const bool found = std::any_of(t.begin(), t.end(), [&](Elem b) {
      return std::all_of(t.begin(), t.end(), [&](Elem x) {
        const Elem ax = s.mul(a, x);
        return !in[ax] || ax == s.mul(b, x);
      });
    });
    if (!found) return false;
  }
  return true;
}

bool is_weakly_pru(const FiniteSemigroup& s, const ElemSet& t) {
  const auto in = checked_subsemigroup(s, t);
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem x : t) {
      const Elem ax = s.mul(a, x);
      if (!in[ax]) continue;
      for (Elem y : t) {
        const Elem ay = s.mul(a, y);
        const bool found = std::any_of(t.begin(), t.end(), [&](Elem b) {
          return s.mul(b, x) == ax && s.mul(b, y) == ay;
        });
        if (!found) return false;
      }
    }
  }
  return true;
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

bool consistent(const std::vector<Elem>& table, std::size_t n) {
  auto at = [&](Elem a, Elem b) { return table[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = at(a, b);
      if (ab == kUnset) continue;
      for (Elem c = 0; c < n; ++c) {
        const Elem bc = at(b, c);
        if (bc == kUnset) continue;
        const Elem left = at(ab, c);
        const Elem right = at(a, bc);
        if (left != kUnset && right != kUnset && left != right) return false;
      }
    }
  }
  return true;
}

void fill_tables(std::vector<Elem>& table, std::size_t n, std::size_t cell,
                 const std::vector<std::string>& labels,
                 const std::function<void(const FiniteSemigroup&)>& visit) {
  if (cell == n * n) {
    visit(make_semigroup_flat(labels, table));
    return;
  }
  for (Elem v = 0; v < n; ++v) {
    table[cell] = v;
    if (consistent(table, n)) fill_tables(table, n, cell + 1, labels, visit);
  }
  table[cell] = kUnset;
}

}  // namespace

void enumerate_semigroups(std::size_t n,
                          const std::function<void(const FiniteSemigroup&)>& visit) {
  if (n == 0 || n > 4) {
    throw Error(ErrorCode::OrderTooLarge, "enumeration supports orders 1..4, got " +
                                              std::to_string(n));
  }
  std::vector<Elem> table(n * n, kUnset);
  fill_tables(table, n, 0, letter_labels(n), visit);
}

std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n) {
  std::vector<FiniteSemigroup> out;
  enumerate_semigroups(n, [&](const FiniteSemigroup& s) { out.push_back(s); });
  return out;
}

bool is_homomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b, std::span<const Elem> f) {
  if (f.size() != a.order()) return false;
  for (Elem x : f) {
    if (x >= b.order()) return false;
  }
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

namespace {

using Signature = std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteSemigroup& s) {
  std::vector<Signature> out;
  for (Elem a = 0; a < s.order(); ++a) {
    std::size_t fix_right = 0, fix_left = 0;
    std::vector<char> right(s.order(), 0), left(s.order(), 0);
    for (Elem x = 0; x < s.order(); ++x) {
      fix_right += s.mul(a, x) == a;
      fix_left += s.mul(x, a) == a;
      right[s.mul(a, x)] = 1;
      left[s.mul(x, a)] = 1;
    }
    out.emplace_back(s.mul(a, a) == a, fix_right, fix_left,
                     static_cast<std::size_t>(std::count(right.begin(), right.end(), 1)),
                     static_cast<std::size_t>(std::count(left.begin(), left.end(), 1)));
  }
  return out;
}

bool extend_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b,
                        const std::vector<Signature>& sa, const std::vector<Signature>& sb,
                        std::vector<Elem>& f, std::vector<char>& used, Elem next) {
  const std::size_t n = a.order();
  if (next == n) return true;
  for (Elem cand = 0; cand < n; ++cand) {
    if (used[cand] || sa[next] != sb[cand]) continue;
    f[next] = cand;
    bool ok = true;
    for (Elem x = 0; x <= next && ok; ++x) {
      for (Elem y = 0; y <= next && ok; ++y) {
        if (x != next && y != next) continue;
        const Elem xy = a.mul(x, y);
        if (xy <= next) ok = f[xy] == b.mul(f[x], f[y]);
      }
    }
    if (ok) {
      used[cand] = 1;
      if (extend_isomorphism(a, b, sa, sb, f, used, next + 1)) return true;
      used[cand] = 0;
    }
  }
  f[next] = kUnset;
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemigroup& a,
                                                  const FiniteSemigroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  std::vector<Elem> f(a.order(), kUnset);
  std::vector<char> used(a.order(), 0);
  if (!extend_isomorphism(a, b, sa, sb, f, used, 0)) return std::nullopt;
  if (!is_homomorphism(a, b, f)) throw Error(ErrorCode::InternalError, "isomorphism search");
  return f;
}

}  // namespace reesloop

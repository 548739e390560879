#include "reesloop/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <thread>
#include <tuple>

namespace reesloop {

bool is_theorem_tag(const std::string& tag) {
  return std::find(kTheoremTags.begin(), kTheoremTags.end(), tag) != kTheoremTags.end();
}

std::string Outcome::result_line() const {
  if (report) return report->result_line();
  std::string msg = error;
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  return "RESULT " + tag + " " + id + " FAIL error:" + msg;
}

std::vector<SandwichMatrix> regular_sandwich_matrices(std::size_t order, std::size_t i_count,
                                                      std::size_t j_count) {
  auto all = all_sandwich_matrices(order, i_count, j_count, true);
  std::erase_if(all, [](const SandwichMatrix& p) { return !p.regular(); });
  return all;
}

FiniteSemigroup brandt_b2() {
  SandwichMatrix p(2, 2);
  p.set(0, 0, 0);
  p.set(1, 1, 0);
  return rees_matrix(trivial_semigroup(), 2, 2, p, true).semigroup;
}

namespace {

std::string pad(std::size_t k, int width = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, k);
  return buf;
}

struct Named {
  std::string name;
  FiniteSemigroup s;
};

// Enumerated semigroups of order <= bound, named o<n>-<index>.
std::vector<Named> small_semigroups(std::size_t bound) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    std::size_t k = 0;
    enumerate_semigroups(n, [&](const FiniteSemigroup& s) {
      out.push_back({"o" + std::to_string(n) + "-" + pad(k++), s});
    });
  }
  return out;
}

std::vector<Named> groups(std::size_t bound, std::size_t from = 1) {
  std::vector<Named> out;
  for (std::size_t n = from; n <= bound; ++n) out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  return out;
}

std::string dims(std::size_t i, std::size_t j) {
  return "I" + std::to_string(i) + "J" + std::to_string(j);
}

std::vector<Named> czeros_family(const CorpusBounds& b) {
  std::vector<Named> out;
  if (b.max_group >= 2 && b.max_dim >= 2) {
    const auto c2 = cyclic_group(2);
    for (const auto& p : regular_sandwich_matrices(2, 2, 2)) {
      out.push_back({"M0C2-" + matrix_tag(c2, p), rees_matrix(c2, 2, 2, p, true).semigroup});
    }
  }
  if (b.max_dim >= 2) out.push_back({"B2", brandt_b2()});
  for (std::size_t n = 1; n <= b.max_group; ++n) {
    out.push_back({"C" + std::to_string(n) + "0", adjoin_zero(cyclic_group(n))});
  }
  return out;
}

template <typename F>
void each_matrix(const FiniteSemigroup& s, std::size_t max_dim, bool with_zero, F&& f) {
  for (std::size_t i = 1; i <= max_dim; ++i) {
    for (std::size_t j = 1; j <= max_dim; ++j) {
      for (const auto& p : all_sandwich_matrices(s.order(), i, j, with_zero)) f(i, j, p);
    }
  }
}

}  // namespace

std::vector<Instance> corpus_instances(const std::string& tag, const CorpusBounds& b) {
  if (!is_theorem_tag(tag)) throw Error(ErrorCode::Usage, "unknown theorem tag '" + tag + "'");
  std::vector<Instance> out;
  auto add = [&](std::string id, std::function<VerificationReport()> run) {
    out.push_back({tag, id, [id, run = std::move(run)] {
                     auto r = run();
                     r.instance = id;
                     return r;
                   }});
  };

  if (tag == "rees-quotient") {
    for (const auto& [name, s] : small_semigroups(b.max_order)) {
      const auto ideals = all_ideals(s);
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        add(name + "-ideal" + pad(k, 2), [s = s, t = ideals[k]] { return verify_rees_quotient(full_generators(s), t); });
      }
    }
  } else if (tag == "subsemigroup") {
    for (const auto& [name, s] : small_semigroups(b.max_order)) {
      // The semigroup inside S^0, and every weakly pseudo-right-unitary subsemigroup.
      add(name + "-in-S0", [s = s] {
        const GeneratorMap tau = extend_to_zero(full_generators(s));
        ElemSet t(s.order());
        std::vector<std::size_t> xs(s.order());
        for (Elem e = 0; e < s.order(); ++e) t[e] = xs[e] = e;
        return verify_subsemigroup_intersection(tau, t, xs);
      });
      for (unsigned mask = 1; mask < (1u << s.order()); ++mask) {
        ElemSet t;
        for (Elem e = 0; e < s.order(); ++e) {
          if (mask >> e & 1) t.push_back(e);
        }
        if (!is_subsemigroup(s, t) || !is_weakly_pru(s, t)) continue;
        add(name + "-sub" + pad(mask, 2), [s = s, t] {
          return verify_subsemigroup_intersection(full_generators(s), t,
                                                  std::vector<std::size_t>(t.begin(), t.end()));
        });
      }
    }
    for (const auto& [name, g] : groups(std::min<std::size_t>(b.max_group, 2))) {
      std::size_t k = 0;
      each_matrix(g, b.max_dim, true, [&, g = g, name = name](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        const auto col = find_admissible_column(g, p);
        if (!col) return;
        add(name + "-col-" + dims(i, j) + "-" + pad(k++), [g, i, j, p, col] {
          const ReesMatrix m = rees_matrix(g, i, j, p, p.has_zero_entry());
          ElemSet t;
          for (Elem s = 0; s < g.order(); ++s) t.push_back(m.structure.encode(col->i, s, col->j));
          std::sort(t.begin(), t.end());
          auto r = verify_subsemigroup_intersection(full_generators(m.semigroup), t,
                                                    std::vector<std::size_t>(t.begin(), t.end()));
          r.notes.push_back("P=" + matrix_tag(g, p));
          return r;
        });
      });
    }
  } else if (tag == "remove-zero" || tag == "adjoin-zero") {
    const bool remove = tag == "remove-zero";
    for (const auto& [name, s] : small_semigroups(b.max_order)) {
      add(name, [s = s, remove] {
        return remove ? verify_remove_zero(full_generators(s)) : verify_adjoin_zero(full_generators(s));
      });
    }
  } else if (tag == "semitorees") {
    for (const auto& [name, g] : groups(b.max_group)) {
      std::size_t k = 0;
      each_matrix(g, b.max_dim, false, [&, g = g, name = name](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        add(name + "-" + dims(i, j) + "-" + pad(k++), [g, i, j, p] {
          auto r = verify_semitorees(full_generators(g), i, j, p);
          r.notes.push_back("P=" + matrix_tag(g, p));
          return r;
        });
      });
      // One rerun per base with randomized representatives.
      const std::size_t d = b.max_dim;
      SandwichMatrix p(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) p.set(j, i, static_cast<Elem>((i + j) % g.order()));
      }
      add(name + "-random", [g = g, d, p, seed = b.seed] {
        SemitoreesOptions opt;
        opt.seed = seed;
        return verify_semitorees(full_generators(g), d, d, p, opt);
      });
    }
  } else if (tag == "semitoreeszero") {
    for (const auto& [name, g] : groups(std::min<std::size_t>(b.max_group, 2))) {
      std::size_t k = 0;
      each_matrix(g, b.max_dim, true, [&, g = g, name = name](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        add(name + "-" + dims(i, j) + "-" + pad(k++), [g, i, j, p] {
          auto r = verify_semitoreeszero(full_generators(g), i, j, p);
          r.notes.push_back("P=" + matrix_tag(g, p));
          return r;
        });
      });
    }
  } else if (tag == "unit-sandwich") {
    for (const auto& [name, g] : groups(b.max_group, 2)) {
      std::size_t k = 0;
      each_matrix(g, b.max_dim, true, [&, g = g, name = name](std::size_t i, std::size_t j, const SandwichMatrix& p) {
        bool nonzero = false;
        for (std::size_t jj = 0; jj < j; ++jj) {
          for (std::size_t ii = 0; ii < i; ++ii) nonzero = nonzero || p.at(jj, ii).has_value();
        }
        if (!nonzero) return;
        add(name + "-" + dims(i, j) + "-" + pad(k++), [g, i, j, p] {
          auto r = verify_unit_sandwich(full_generators(g), i, j, p);
          r.notes.push_back("P=" + matrix_tag(g, p));
          return r;
        });
      });
    }
  } else {
    const bool roundtrip = tag == "decompose-roundtrip";
    for (const auto& [name, s] : czeros_family(b)) {
      add(name, [s = s, roundtrip] {
        return roundtrip ? verify_decompose_roundtrip(s) : verify_czeros(full_generators(s));
      });
    }
  }
  return out;
}

std::size_t default_workers() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("REES_LOOP_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
    else n = 1;
  }
  return n;
}

std::vector<Outcome> run_instances(const std::vector<Instance>& instances, std::size_t workers) {
  std::vector<Outcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < instances.size();) {
      Outcome& o = outcomes[k];
      o.tag = instances[k].tag;
      o.id = instances[k].id;
      try {
        o.report = instances[k].run();
      } catch (const std::exception& e) {
        o.error = e.what();
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, instances.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::stable_sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) {
    return std::tie(a.tag, a.id) < std::tie(b.tag, b.id);
  });
  return outcomes;
}

}  // namespace reesloop

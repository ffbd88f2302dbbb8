// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion has a wall-clock budget; overrunning it
// counts as a failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semiconv/semiconv.hpp"

using namespace semiconv;

namespace {

  using Failure = std::optional<std::string>;

  CorpusSpec spec(CorpusKind k, std::vector<long long> p, std::uint64_t seed = 0) {
    CorpusSpec c;
    c.kind   = k;
    c.params = std::move(p);
    c.seed   = seed;
    return c;
  }

  CorpusSpec rees_spec(long long g, long long m, long long k, std::uint64_t seed) {
    CorpusSpec c = spec(CorpusKind::rees_matrix, {m, k}, seed);
    c.factors.push_back(spec(CorpusKind::cyclic, {g}));
    return c;
  }

  // The 45 Rees matrix instances: |G| in {1,2,3,4,6}, m, k in {1,2,3}.
  std::vector<std::pair<std::string, Semigroup>> rees_instances() {
    std::vector<std::pair<std::string, Semigroup>> out;
    for (long long g : {1, 2, 3, 4, 6}) {
      for (long long m = 1; m <= 3; ++m) {
        for (long long k = 1; k <= 3; ++k) {
          CorpusSpec c = rees_spec(g, m, k, static_cast<std::uint64_t>(100 * g + 10 * m + k));
          out.emplace_back(c.describe(), build(c));
        }
      }
    }
    return out;
  }

  CorpusSpec product(CorpusSpec a, CorpusSpec b) {
    CorpusSpec c = spec(CorpusKind::direct_product, {});
    c.factors    = {std::move(a), std::move(b)};
    return c;
  }

  // Hosts for the measure criteria, up to order 256.
  std::vector<std::pair<std::string, Semigroup>> measure_hosts() {
    std::vector<CorpusSpec> specs{
        spec(CorpusKind::full_transformation, {3}),
        spec(CorpusKind::full_transformation, {4}),
        spec(CorpusKind::boolean_matrices, {2}),
        spec(CorpusKind::symmetric_group, {3}),
        spec(CorpusKind::symmetric_group, {4}),
        spec(CorpusKind::cyclic, {12}),
        spec(CorpusKind::cyclic, {3, 4}),
        spec(CorpusKind::rectangular_band, {3, 4}),
        spec(CorpusKind::left_zero, {3, 1}),
        rees_spec(2, 2, 2, 7),
        rees_spec(4, 3, 2, 8),
        rees_spec(6, 2, 3, 9),
        product(spec(CorpusKind::cyclic, {3}), spec(CorpusKind::left_zero, {2})),
        product(spec(CorpusKind::cyclic, {4}), spec(CorpusKind::full_transformation, {2})),
        spec(CorpusKind::random_transformation_subsemigroup, {4, 2}, 1),
        spec(CorpusKind::random_transformation_subsemigroup, {4, 3}, 2),
    };
    std::vector<std::pair<std::string, Semigroup>> out;
    for (auto const& c : specs) {
      out.emplace_back(c.describe(), build(c));
    }
    return out;
  }

  Failure fail(std::string const& where, std::string const& what) {
    return where + ": " + what;
  }

  // ---- criteria -----------------------------------------------------------

  Failure ideal_oracle() {
    auto corpus = oracle::small_corpus();
    if (corpus.size() < 20) {
      return "only " + std::to_string(corpus.size()) + " instances of order <= 5";
    }
    for (auto const& [name, s] : corpus) {
      if (oracle::masks(minimal_left_ideals(s))
          != oracle::sorted(oracle::minimal_left_ideals(s))) {
        return fail(name, "minimal left ideals");
      }
      if (oracle::masks(minimal_right_ideals(s))
          != oracle::sorted(oracle::minimal_right_ideals(s))) {
        return fail(name, "minimal right ideals");
      }
      auto K = oracle::minimal_ideals(s);
      if (K.size() != 1 || oracle::mask(kernel(s)) != K[0]) {
        return fail(name, "kernel");
      }
    }
    return std::nullopt;
  }

  Failure rees_bijection() {
    auto inst = rees_instances();
    if (inst.size() != 45) {
      return "expected 45 instances";
    }
    for (auto const& [name, s] : inst) {
      if (!is_simple(s)) {
        return fail(name, "not simple");
      }
      auto           d = rees_decompose(s);
      Element const  e = d.base();
      ElementSet const E = s.singleton(e);
      ElementSet const& L = d.left();
      ElementSet const& G = d.group().carrier();
      ElementSet const& R = d.right();
      if (!is_primitive_idempotent(s, e)) {
        return fail(name, "base is not primitive");
      }
      if (!(L == idempotents(product_sets(s.all(), E)))
          || !(G == product_sets(E, s.all(), E))
          || !(R == idempotents(product_sets(E, s.all())))) {
        return fail(name, "L, G, R differ from E(Se), eSe, E(eS)");
      }
      if (d.group().identity() != e) {
        return fail(name, "identity of G is not e");
      }
      ElementSet const LG = product_sets(L, G);
      ElementSet const GR = product_sets(G, R);
      if (!(LG == product_sets(s.all(), E)) || !is_left_simple(LG)) {
        return fail(name, "LG is not the left group Se");
      }
      if (!(GR == product_sets(E, s.all())) || !is_right_simple(GR)) {
        return fail(name, "GR is not the right group eS");
      }
      if (!(product_sets(L, G, R) == s.all())) {
        return fail(name, "S != LGR");
      }
      std::size_t n = 0;
      for (Element x : L.members()) {
        for (Element g : G.members()) {
          for (Element y : R.members()) {
            if (!(psi_inv(d, psi(d, x, g, y)) == ReesTriple{x, g, y})) {
              return fail(name, "psi_inv o psi is not the identity");
            }
            ++n;
          }
        }
      }
      if (n != s.order()) {
        return fail(name, "|L||G||R| != |S|");
      }
      for (Element z = 0; z < s.order(); ++z) {
        ReesTriple t = psi_inv(d, z);
        if (psi(d, t.x, t.g, t.y) != z) {
          return fail(name, "psi o psi_inv is not the identity");
        }
      }
    }
    return std::nullopt;
  }

  Failure rees_corollaries() {
    for (auto const& [name, s] : rees_instances()) {
      auto d = rees_decompose(s);
      ElementSet const& L = d.left();
      ElementSet const& G = d.group().carrier();
      ElementSet const& R = d.right();

      std::vector<ElementSet> LGy;
      R.for_each([&](Element y) { LGy.push_back(product_sets(L, G, s.singleton(y))); });
      std::sort(LGy.begin(), LGy.end());
      if (minimal_left_ideals(s) != LGy) {
        return fail(name, "minimal left ideals != {LGy}");
      }

      ElementSet built(s);
      L.for_each([&](Element x) {
        R.for_each([&](Element y) {
          Element const g = d.group().inverse(s.product(y, x));
          built.insert(s.product(s.product(x, g), y));
        });
      });
      if (!(built == idempotents(s))) {
        return fail(name, "E(S) != {x(yx)^{-1}y}");
      }

      for (Element b : idempotents(s).members()) {
        ReesTriple const t  = psi_inv(d, b);
        ElementSet const A  = s.singleton(t.x);
        ElementSet const B  = s.singleton(t.y);
        auto const       r  = rebase(d, b);
        ElementSet const G2 = r.group().carrier();
        if (!(product_sets(r.left(), G2) == product_sets(L, G, B))) {
          return fail(name, "L'G' != LGb at " + s.label(b));
        }
        if (!(G2 == product_sets(A, G, B))) {
          return fail(name, "G' != aGb at " + s.label(b));
        }
        if (!(product_sets(G2, r.right()) == product_sets(A, G, R))) {
          return fail(name, "G'R' != aGR at " + s.label(b));
        }
      }
    }
    return std::nullopt;
  }

  Failure idempotent_round_trip() {
    // Completely simple hosts: kernels of the measure hosts plus the Rees
    // matrix instances.
    std::vector<std::pair<std::string, ElementSet>> hosts;
    for (auto const& [name, s] : measure_hosts()) {
      hosts.emplace_back(name, kernel(s));
    }
    for (auto const& [name, s] : rees_instances()) {
      hosts.emplace_back(name, s.all());
    }
    std::size_t done = 0;
    for (std::uint64_t seed = 0; done < 100; ++seed) {
      auto const& [name, K] = hosts[seed % hosts.size()];
      auto             d    = rees_decompose(K);
      ElementSet const E    = K.parent().singleton(d.base());
      ElementSet const Se   = product_sets(K, E);
      ElementSet const eS   = product_sets(E, K);
      std::size_t const n1  = 1 + seed % std::min<std::size_t>(Se.size(), 6);
      std::size_t const n2  = 1 + (seed / 2) % std::min<std::size_t>(eS.size(), 6);
      Dist const mu1 = random_dist(random_subset(Se, seed, n1), seed, 12);
      Dist const mu2 = random_dist(random_subset(eS, seed + 1, n2), seed + 2, 12);
      std::string const where = name + " seed " + std::to_string(seed);
      Dist const        mu    = compose_idempotent(mu1, mu2, d.group());
      if (!(convolve(mu, mu) == mu)) {
        return fail(where, "mu * mu != mu");
      }
      auto f = factorize_idempotent(mu);
      if (!(convolve(f.left, f.haar, f.right) == mu)) {
        return fail(where, "mu != mu^L * omega_G * mu^R");
      }
      if (!(marginals(mu, f.rees).group == haar_uniform(f.rees.group()))) {
        return fail(where, "mu^G != omega_G");
      }
      ++done;
    }
    return std::nullopt;
  }

  Failure haar_uniqueness() {
    std::vector<CorpusSpec> specs;
    for (long long n = 1; n <= 8; ++n) {
      specs.push_back(spec(CorpusKind::cyclic, {n}));
    }
    specs.push_back(spec(CorpusKind::symmetric_group, {1}));
    specs.push_back(spec(CorpusKind::symmetric_group, {2}));
    specs.push_back(spec(CorpusKind::symmetric_group, {3}));
    specs.push_back(product(spec(CorpusKind::cyclic, {2}), spec(CorpusKind::cyclic, {2})));
    specs.push_back(product(spec(CorpusKind::cyclic, {2}), spec(CorpusKind::cyclic, {3})));
    specs.push_back(product(spec(CorpusKind::cyclic, {2}), spec(CorpusKind::cyclic, {4})));
    specs.push_back(product(spec(CorpusKind::cyclic, {4}), spec(CorpusKind::cyclic, {2})));
    specs.push_back(product(spec(CorpusKind::cyclic, {2}),
                            product(spec(CorpusKind::cyclic, {2}),
                                    spec(CorpusKind::cyclic, {2}))));
    for (long long g : {1, 2, 3, 4, 6}) {
      specs.push_back(rees_spec(g, 1, 1, static_cast<std::uint64_t>(g)));
    }
    std::size_t groups = 0;
    for (auto const& c : specs) {
      Semigroup s = build(c);
      if (s.order() > 8) {
        continue;
      }
      auto G   = group_structure(s);
      auto sol = bi_invariant_solutions(G);
      if (sol.dimension != 0 || !sol.unique || !(*sol.unique == uniform_on(s.all()))) {
        return fail(c.describe(), "bi-invariant solution is not unique uniform");
      }
      auto r = classify_translation_invariance(uniform_on(s.all()), s.all());
      if (!r.left_on_carrier || !r.right_on_carrier || !r.equals_haar || !r.consistent) {
        return fail(c.describe(), "uniform not classified as Haar");
      }
      ++groups;
    }
    return groups >= 15 ? std::nullopt : Failure("too few groups");
  }

  Failure convolution_invariance() {
    auto hosts = measure_hosts();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto const& [name, s] = hosts[seed % hosts.size()];
      Dist const  mu = random_dist(random_subset(s.all(), seed, 1 + seed % 3), seed, 10);
      Dist const  nu = cesaro_limit(mu);
      std::string where = name + " seed " + std::to_string(seed);
      if (!(convolve(mu, nu) == nu) || !(convolve(nu, mu) == nu)) {
        return fail(where, "nu = mu * nu = nu * mu fails");
      }
      if (!check_convolution_invariance(mu, nu).holds) {
        return fail(where, "library reports a counterexample");
      }
      for (Element x : support(mu).members()) {
        for (Element a : support(nu).members()) {
          if (!(convolve(nu, dirac(s, s.product(x, a))) == convolve(nu, dirac(s, a)))
              || !(convolve(dirac(s, s.product(a, x)), nu) == convolve(dirac(s, a), nu))) {
            return fail(where, "identity fails at x = " + s.label(x) + ", a = " + s.label(a));
          }
        }
      }
    }
    return std::nullopt;
  }

  Failure limit_theorem(std::string& note) {
    auto        hosts   = measure_hosts();
    std::size_t largest = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto const& [name, s] = hosts[seed % hosts.size()];
      std::size_t const size = 1 + (seed / hosts.size() + seed) % 4;
      Dist mu = random_dist(random_subset(s.all(), seed * 3 + 1, size), seed, 8);
      // Seed 0 walks on all of T4: a 4-cycle, a transposition and a rank 3 map.
      if (seed == 0) {
        Semigroup const& t4 = hosts[1].second;
        mu = random_dist(ElementSet(t4, {t4.element("2341"), t4.element("2134"),
                                         t4.element("1123")}),
                         seed, 8);
      }
      std::string where = name + " seed " + std::to_string(seed);
      LimitOptions o;
      o.throw_on_violation = false;
      LimitReport r        = analyze_limit(mu, o);
      for (auto const& [check, ok] : r.checks) {
        if (!ok) {
          return fail(where, check);
        }
      }
      // Recomputed here.
      if (!(convolve(r.nu, r.nu) == r.nu) || !(convolve(mu, r.nu) == r.nu)
          || !(convolve(r.nu, mu) == r.nu)) {
        return fail(where, "nu not idempotent or not mu-invariant");
      }
      if (!(support(r.nu) == kernel(generated_subsemigroup(support(mu))))) {
        return fail(where, "supp(nu) is not the kernel");
      }
      if (!is_normal_subgroup(r.rees.group(), r.H)) {
        return fail(where, "H not normal");
      }
      if (r.cluster.size() != r.p || r.p * r.H.order() != r.rees.group().order()) {
        return fail(where, "cluster order != |G/H|");
      }
      largest = std::max(largest, r.generated.size());
    }
    note = "largest generated subsemigroup " + std::to_string(largest);
    return std::nullopt;
  }

  Failure power_clusters() {
    for (long long n : {3, 4}) {
      Semigroup s = build(spec(CorpusKind::full_transformation, {n}));
      for (Element a = 0; a < s.order(); ++a) {
        auto        c     = element_power_cluster(s, a);
        std::string where = "T" + std::to_string(n) + " " + s.label(a);
        if (!(c.q <= c.r * c.p && c.r * c.p <= c.q + c.p - 1)) {
          return fail(where, "rp outside [q, q+p-1]");
        }
        Element x = a;
        for (std::size_t k = 1; k < c.r * c.p; ++k) {
          x = s.product(x, a);
        }
        if (x != c.identity || s.product(x, x) != x) {
          return fail(where, "identity is not the idempotent a^{rp}");
        }
        ElementSet orbit(s);
        Element    y = c.identity;
        for (std::size_t k = 0; k < c.p; ++k) {
          orbit.insert(y);
          y = s.product(a, y);
        }
        if (!(orbit == c.cluster) || c.cluster.size() != c.p) {
          return fail(where, "C != {e, ae, ..., a^{p-1}e}");
        }
        auto G = group_structure(c.cluster);
        if (G.identity() != c.identity) {
          return fail(where, "C has another identity");
        }
        // Cyclic: a e generates C.
        if (!(generated_subsemigroup(s.singleton(s.product(a, c.identity))) == c.cluster)) {
          return fail(where, "C is not cyclic");
        }
      }
    }
    return std::nullopt;
  }

  Failure cesaro_bound() {
    auto hosts = measure_hosts();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto const& [name, s] = hosts[seed % hosts.size()];
      Dist const mu = random_dist(random_subset(s.all(), seed + 500, 1 + seed % 3), seed, 6);
      auto       d  = cesaro_diagnostic(mu, 64, 3);
      if (d.rows.size() != 64 * 3) {
        return fail(name, "missing rows");
      }
      for (auto const& row : d.rows) {
        Rational bound(static_cast<long>(2 * row.j), static_cast<long>(row.n));
        bound.canonicalize();
        if (!(row.distance <= bound) || !row.within) {
          return fail(name + " seed " + std::to_string(seed),
                      "n = " + std::to_string(row.n) + ", j = " + std::to_string(row.j));
        }
      }
    }
    return std::nullopt;
  }

  Failure golden() {
    std::string const data   = SEMICONV_TEST_DATA "/data/";
    std::string const golden = SEMICONV_TEST_DATA "/golden/";
    auto table = [&](char const* f) { return semigroup_from_json(parse_json(read_file(data + f))); };
    auto dist  = [&](Semigroup const& s, char const* f) {
      return dist_from_json(s, parse_json(read_file(data + f)));
    };
    auto compare = [&](char const* f, Json const& got) -> Failure {
      if (parse_json(read_file(golden + f)) != got) {
        return std::string(f) + " differs";
      }
      return std::nullopt;
    };

    Semigroup z2 = table("z2.json");
    LimitReport r = analyze_limit(dist(z2, "z2_delta1.json"));
    if (!(r.nu == uniform_on(z2.all())) || r.p != 2 || !(r.eta == dirac(z2, 0))
        || r.cluster.size() != 2 || r.rees.group().order() != 2) {
      return "delta_1 on Z2 limit is wrong";
    }
    Semigroup lz = table("left_zero.json");
    Semigroup rb = table("rect_band.json");
    Semigroup t2 = table("t2.json");
    std::vector<std::pair<char const*, Json>> cases{
        {"z2_delta1_limit.json", to_json(r)},
        {"left_zero_rees.json", to_json(rees_decompose(lz))},
        {"left_zero_rees_at_b.json", to_json(rebase(rees_decompose(lz), lz.element("b")))},
        {"rect_band_rees.json", to_json(rees_decompose(rb))},
        {"rect_band_rees_at_11.json",
         to_json(rebase(rees_decompose(rb), rb.element("(1,1)")))},
        {"t2_analyze.json", structure_report(t2)},
        {"t2_limit.json", to_json(analyze_limit(dist(t2, "t2_mu.json")))},
    };
    for (auto const& [f, j] : cases) {
      if (auto bad = compare(f, j)) {
        return bad;
      }
    }
    return std::nullopt;
  }

  struct Criterion {
    char const*                        name;
    double                             budget;  // seconds
    std::function<Failure(std::string&)> run;
  };

  template <typename F>
  std::function<Failure(std::string&)> plain(F f) {
    return [f](std::string&) { return f(); };
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"ideal_oracle_equivalence", 10, plain(ideal_oracle)},
      {"rees_bijection", 30, plain(rees_bijection)},
      {"rees_corollaries", 30, plain(rees_corollaries)},
      {"idempotent_measure_round_trip", 60, plain(idempotent_round_trip)},
      {"haar_uniqueness_on_groups", 10, plain(haar_uniqueness)},
      {"convolution_invariance", 60, plain(convolution_invariance)},
      {"limit_theorem", 600, limit_theorem},
      {"power_clusters_T3_T4", 60, plain(power_clusters)},
      {"cesaro_bound", 60, plain(cesaro_bound)},
      {"golden_cases", 5, plain(golden)},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto        start = std::chrono::steady_clock::now();
    std::string note;
    Failure     f;
    try {
      f = c.run(note);
    } catch (std::exception const& e) {
      f = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!f && secs > c.budget) {
      f = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget) + " s";
    }
    if (f) {
      ++failed;
      std::printf("FAIL %s (%.2f s): %s\n", c.name, secs, f->c_str());
    } else {
      std::printf("PASS %s (%.2f s)%s%s\n", c.name, secs, note.empty() ? "" : ": ",
                  note.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

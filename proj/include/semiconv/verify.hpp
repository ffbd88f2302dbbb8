// Corpus-wide verification: one named check per structural or measure
// theorem, run on every corpus instance. Instances are processed in
// parallel; results are merged in corpus order so the JSON is identical
// for identical inputs.

#ifndef SEMICONV_VERIFY_HPP_
#define SEMICONV_VERIFY_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semiconv/dist.hpp"
#include "semiconv/dynamics.hpp"
#include "semiconv/error.hpp"
#include "semiconv/generators.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/io.hpp"
#include "semiconv/measure.hpp"
#include "semiconv/rees.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  struct CorpusInstance {
    std::string name;
    Semigroup   semigroup;
  };

  namespace detail {
    inline CorpusSpec spec(CorpusKind k, std::vector<long long> params,
                           std::uint64_t seed = 0) {
      CorpusSpec c;
      c.kind   = k;
      c.params = std::move(params);
      c.seed   = seed;
      return c;
    }

    inline CorpusSpec rees_spec(long long group_order, long long rows,
                                long long cols, std::uint64_t seed) {
      CorpusSpec c = spec(CorpusKind::rees_matrix, {rows, cols}, seed);
      c.factors.push_back(spec(CorpusKind::cyclic, {group_order}));
      return c;
    }

    inline CorpusSpec product_spec(CorpusSpec a, CorpusSpec b) {
      CorpusSpec c = spec(CorpusKind::direct_product, {});
      c.factors    = {std::move(a), std::move(b)};
      return c;
    }
  }  // namespace detail

  // "default" stays under a minute; "extended" adds T_4, 3x3 Boolean
  // matrices and more random instances.
  inline std::vector<CorpusSpec> corpus_specs(std::string const& name,
                                              std::uint64_t      seed) {
    using detail::spec;
    using K = CorpusKind;
    if (name != "default" && name != "extended") {
      throw ParameterOutOfRange("unknown corpus \"" + name + "\"");
    }
    bool const              ext = name == "extended";
    std::vector<CorpusSpec> out;
    for (long long n = 1; n <= 6; ++n) {
      out.push_back(spec(K::cyclic, {n}));
    }
    out.push_back(spec(K::cyclic, {2, 2}));
    out.push_back(spec(K::cyclic, {3, 2}));
    out.push_back(spec(K::cyclic, {1, 4}));
    out.push_back(spec(K::left_zero, {2}));
    out.push_back(spec(K::left_zero, {3, 1}));
    out.push_back(spec(K::right_zero, {2}));
    out.push_back(spec(K::right_zero, {3, 1}));
    out.push_back(spec(K::rectangular_band, {2, 2}));
    out.push_back(spec(K::rectangular_band, {2, 3}));
    out.push_back(spec(K::full_transformation, {2}));
    out.push_back(spec(K::full_transformation, {3}));
    out.push_back(spec(K::symmetric_group, {3}));
    out.push_back(spec(K::boolean_matrices, {2}));
    {
      CorpusSpec r = detail::rees_spec(2, 2, 2, 0);
      r.sandwich   = std::vector<std::vector<long long>>{{0, 0}, {0, 1}};
      out.push_back(r);
    }
    out.push_back(detail::rees_spec(3, 2, 3, seed));
    out.push_back(detail::product_spec(spec(K::cyclic, {2}), spec(K::left_zero, {2})));
    out.push_back(detail::product_spec(spec(K::cyclic, {3}), spec(K::cyclic, {2, 2})));
    std::size_t const randoms = ext ? 12 : 4;
    for (std::size_t i = 0; i < randoms; ++i) {
      out.push_back(spec(K::random_transformation_subsemigroup,
                         {3 + static_cast<long long>(i % 2), 2},
                         seed + i));
    }
    if (ext) {
      out.push_back(spec(K::full_transformation, {4}));
      out.push_back(spec(K::symmetric_group, {4}));
      out.push_back(spec(K::boolean_matrices, {3}));
      out.push_back(detail::rees_spec(6, 3, 3, seed));
      out.push_back(detail::rees_spec(4, 3, 2, seed + 1));
    }
    return out;
  }

  inline std::vector<CorpusInstance> build_corpus(std::string const& name,
                                                  std::uint64_t      seed) {
    std::vector<CorpusInstance> out;
    for (auto const& c : corpus_specs(name, seed)) {
      out.push_back({c.describe(), build(c)});
    }
    return out;
  }

  enum class CheckStatus { pass, fail, skip };

  struct CheckOutcome {
    CheckStatus status = CheckStatus::pass;
    std::string detail;
  };

  namespace detail {

    inline CheckOutcome pass() {
      return {};
    }
    inline CheckOutcome fail(std::string why) {
      return {CheckStatus::fail, std::move(why)};
    }
    inline CheckOutcome skip(std::string why) {
      return {CheckStatus::skip, std::move(why)};
    }

    // Lazily computed structure shared by the checks of one instance.
    class Context {
     public:
      Context(Semigroup s, std::uint64_t seed) : s_(std::move(s)), seed_(seed) {}

      Semigroup const& s() const {
        return s_;
      }

      ElementSet const& K() {
        if (!K_) {
          K_ = kernel(s_);
        }
        return *K_;
      }

      ReesDecomposition const& rees() {
        if (!rees_) {
          rees_ = rees_decompose(K());
        }
        return *rees_;
      }

      // Prng keyed on the suite seed, the instance and the check.
      Prng rng(std::uint64_t salt) const {
        return Prng(seed_ ^ (salt * 0x9E3779B97F4A7C15ULL));
      }

      // Subsemigroups on which the simplicity lemmas are exercised:
      // S, K, the group factor, each eSe, and for small S every principal
      // one-sided ideal.
      std::vector<ElementSet> const& family() {
        if (family_) {
          return *family_;
        }
        std::unordered_set<ElementSet, ElementSetHash> seen;
        std::vector<ElementSet>                        out;
        auto add = [&](ElementSet const& A) {
          if (!A.empty() && seen.insert(A).second) {
            out.push_back(A);
          }
        };
        ElementSet const all = s_.all();
        add(all);
        add(K());
        add(rees().group().carrier());
        idempotents(s_).for_each([&](Element e) {
          add(product_sets(s_.singleton(e), all, s_.singleton(e)));
        });
        if (s_.order() <= 64) {
          for (Element a = 0; a < s_.order(); ++a) {
            add(principal_left_ideal(all, a));
            add(principal_right_ideal(all, a));
          }
        }
        std::sort(out.begin(), out.end());
        family_ = std::move(out);
        return *family_;
      }

      // A random distribution on a random subset of `from`.
      Dist random_measure(ElementSet const& from, Prng& rng, std::size_t max_support) {
        std::size_t const k
            = 1 + rng.below(std::min<std::size_t>(max_support, from.size()));
        ElementSet const supp = random_subset(from, rng.next(), k);
        return random_dist(supp, rng.next(), 4 * k + rng.below(8));
      }

     private:
      Semigroup                              s_;
      std::uint64_t                          seed_;
      std::optional<ElementSet>              K_;
      std::optional<ReesDecomposition>       rees_;
      std::optional<std::vector<ElementSet>> family_;
    };

    inline ElementSet times(ElementSet const& A, Element a) {
      return product_sets(A, A.parent().singleton(a));
    }
    inline ElementSet times(Element a, ElementSet const& A) {
      return product_sets(A.parent().singleton(a), A);
    }

    // Left ideals of the carrier are unions of principal ones, so it is
    // enough to compare principal left ideals.
    inline CheckOutcome minimal_left_ideal_criterion(Context& c) {
      ElementSet const all = c.s().all();
      std::vector<ElementSet> principal;
      all.for_each([&](Element a) { principal.push_back(principal_left_ideal(all, a)); });
      for (auto const& I : principal) {
        bool minimal = true;
        for (auto const& J : principal) {
          minimal = minimal && !(J.is_subset_of(I) && !(J == I));
        }
        bool criterion = true;
        I.for_each([&](Element a) { criterion = criterion && times(all, a) == I; });
        if (minimal != criterion) {
          return fail("left ideal of " + c.s().label(I.first())
                      + ": minimal=" + std::to_string(minimal));
        }
      }
      return pass();
    }

    inline CheckOutcome minimal_ideal_criterion(Context& c) {
      ElementSet const        all = c.s().all();
      std::vector<ElementSet> principal;
      all.for_each([&](Element a) { principal.push_back(principal_ideal(all, a)); });
      for (auto const& I : principal) {
        bool minimal = true;
        for (auto const& J : principal) {
          minimal = minimal && !(J.is_subset_of(I) && !(J == I));
        }
        bool criterion = true;
        I.for_each([&](Element a) {
          criterion = criterion && product_sets(all, c.s().singleton(a), all) == I;
        });
        if (minimal != criterion) {
          return fail("ideal of " + c.s().label(I.first())
                      + ": minimal=" + std::to_string(minimal));
        }
      }
      return pass();
    }

    // No proper left ideal (A^1 a = A for all a) iff A a = A for all a.
    inline CheckOutcome left_simplicity(Context& c) {
      for (auto const& A : c.family()) {
        bool no_proper = true;
        A.for_each([&](Element a) {
          no_proper = no_proper && principal_left_ideal(A, a) == A;
        });
        if (no_proper != is_left_simple(A)) {
          return fail("subsemigroup at " + c.s().label(A.first()));
        }
      }
      return pass();
    }

    inline CheckOutcome simplicity(Context& c) {
      for (auto const& A : c.family()) {
        bool no_proper = true;
        A.for_each([&](Element a) { no_proper = no_proper && principal_ideal(A, a) == A; });
        if (no_proper != is_simple(A)) {
          return fail("subsemigroup at " + c.s().label(A.first()));
        }
      }
      return pass();
    }

    // Left and right simple iff a group.
    inline CheckOutcome left_right_simple_group(Context& c) {
      for (auto const& A : c.family()) {
        bool const both = is_left_simple(A) && is_right_simple(A);
        bool       grp  = true;
        try {
          (void) group_structure(A);
        } catch (NotAGroup const&) {
          grp = false;
        }
        if (both != grp) {
          return fail("subsemigroup at " + c.s().label(A.first()));
        }
      }
      return pass();
    }

    // In a left simple semigroup every idempotent is a right identity.
    inline CheckOutcome idempotent_right_identity(Context& c) {
      for (auto const& A : c.family()) {
        if (!is_left_simple(A)) {
          continue;
        }
        std::optional<std::string> bad;
        idempotents(A).for_each([&](Element e) {
          A.for_each([&](Element x) {
            if (!bad && c.s().product(x, e) != x) {
              bad = c.s().label(x) + c.s().label(e) + " != " + c.s().label(x);
            }
          });
        });
        if (bad) {
          return fail(*bad);
        }
      }
      return pass();
    }

    // A is a left group (left simple with an idempotent) iff it factors as
    // E(A) x G with trivial right factor.
    inline CheckOutcome left_group_equivalence(Context& c) {
      for (auto const& A : c.family()) {
        bool const left_group = is_left_simple(A) && !idempotents(A).empty();
        bool       factored   = false;
        try {
          ReesDecomposition d = rees_decompose(A);
          factored = d.right().size() == 1 && d.left() == idempotents(A)
                     && A.size() == d.left().size() * d.group().order();
        } catch (NotSimple const&) {
        } catch (NotPrimitive const&) {
        } catch (NotIdempotent const&) {
        }
        if (left_group != factored) {
          return fail("subsemigroup at " + c.s().label(A.first()));
        }
      }
      return pass();
    }

    inline CheckOutcome rees_decomposition(Context& c) {
      ReesDecomposition const& d = c.rees();
      std::size_t              n = 0;
      for (Element x : d.left().members()) {
        for (Element g : d.group().carrier().members()) {
          for (Element y : d.right().members()) {
            if (!(psi_inv(d, psi(d, x, g, y)) == ReesTriple{x, g, y})) {
              return fail("psi_inv(psi(x,g,y)) differs at " + c.s().label(x));
            }
            ++n;
          }
        }
      }
      if (n != c.K().size()) {
        return fail("|L||G||R| != |K|");
      }
      std::optional<Element> bad;
      c.K().for_each([&](Element z) {
        ReesTriple t = psi_inv(d, z);
        if (!bad && psi(d, t.x, t.g, t.y) != z) {
          bad = z;
        }
      });
      return bad ? fail("psi(psi_inv(z)) != z at " + c.s().label(*bad)) : pass();
    }

    inline CheckOutcome minimal_left_ideals_LGy(Context& c) {
      ReesDecomposition const& d  = c.rees();
      ElementSet const         LG = product_sets(d.left(), d.group().carrier());
      std::vector<ElementSet>  expected;
      d.right().for_each([&](Element y) { expected.push_back(times(LG, y)); });
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      if (expected.size() != d.right().size()) {
        return fail("LGy are not pairwise distinct");
      }
      return minimal_left_ideals(c.s()) == expected ? pass()
                                                     : fail("minimal left ideals != {LGy}");
    }

    inline CheckOutcome idempotent_criterion_check(Context& c) {
      ReesDecomposition const& d = c.rees();
      ElementSet               built(c.s());
      d.left().for_each([&](Element x) {
        d.right().for_each([&](Element y) { built.insert(idempotent_criterion(d, x, y)); });
      });
      if (built.size() != d.left().size() * d.right().size()) {
        return fail("x(yx)^{-1}y is not injective on L x R");
      }
      return built == idempotents(c.K()) ? pass() : fail("E(K) != {x(yx)^{-1}y}");
    }

    inline CheckOutcome rebasing(Context& c) {
      ReesDecomposition const& d = c.rees();
      std::optional<std::string> bad;
      idempotents(c.K()).for_each([&](Element b) {
        if (bad) {
          return;
        }
        try {
          ReesDecomposition r = rebase(d, b);
          if (r.base() != b) {
            bad = "rebase did not move the base to " + c.s().label(b);
          }
        } catch (Error const& e) {
          bad = c.s().label(b) + ": " + e.what();
        }
      });
      return bad ? fail(*bad) : pass();
    }

    // Every idempotent of the kernel is primitive, and each minimal left
    // ideal is a left group with trivial right factor.
    inline CheckOutcome completely_simple_corollaries(Context& c) {
      std::optional<std::string> bad;
      idempotents(c.K()).for_each([&](Element e) {
        if (!bad && !is_primitive_idempotent(c.K(), e)) {
          bad = "idempotent " + c.s().label(e) + " is not primitive";
        }
      });
      if (bad) {
        return fail(*bad);
      }
      for (auto const& L : minimal_left_ideals(c.s())) {
        if (rees_decompose(L).right().size() != 1) {
          return fail("left group at " + c.s().label(L.first()) + " has |R| > 1");
        }
      }
      return pass();
    }

    inline CheckOutcome product_BA_is_group(Context& c) {
      for (auto const& A : minimal_left_ideals(c.s())) {
        for (auto const& B : minimal_right_ideals(c.s())) {
          try {
            (void) group_structure(product_sets(B, A));
          } catch (NotAGroup const& e) {
            return fail(std::string("BA: ") + e.what());
          }
        }
      }
      return pass();
    }

    // Exactly one inclusion-minimal principal ideal; it is the kernel, it
    // is simple, equals SzS for each of its members and lies in every
    // ideal.
    inline CheckOutcome kernel_unique(Context& c) {
      ElementSet const        all = c.s().all();
      std::vector<ElementSet> principal;
      all.for_each([&](Element a) { principal.push_back(principal_ideal(all, a)); });
      std::vector<ElementSet> minimal;
      for (auto const& I : principal) {
        bool m = true;
        for (auto const& J : principal) {
          m = m && !(J.is_subset_of(I) && !(J == I));
        }
        if (m && std::find(minimal.begin(), minimal.end(), I) == minimal.end()) {
          minimal.push_back(I);
        }
      }
      if (minimal.size() != 1) {
        return fail(std::to_string(minimal.size()) + " minimal ideals");
      }
      ElementSet const& K = c.K();
      if (!(K == minimal.front())) {
        return fail("kernel() differs from the minimal ideal");
      }
      if (!is_simple(K)) {
        return fail("kernel is not simple");
      }
      for (auto const& I : principal) {
        if (!K.is_subset_of(I)) {
          return fail("kernel escapes an ideal");
        }
      }
      return pass();
    }

    inline CheckOutcome power_clusters(Context& c) {
      for (Element a = 0; a < c.s().order(); ++a) {
        (void) element_power_cluster(c.s(), a);
      }
      return pass();
    }

    inline CheckOutcome convolution_definition(Context& c) {
      Prng rng = c.rng(16);
      for (int t = 0; t < 3; ++t) {
        Dist const mu = c.random_measure(c.s().all(), rng, 4);
        Dist const nu = c.random_measure(c.s().all(), rng, 4);
        // Mass of each singleton {b}: the double sum of 1_b(xy).
        std::vector<Rational> direct(c.s().order(), Rational(0));
        for (Element x = 0; x < c.s().order(); ++x) {
          for (Element y = 0; y < c.s().order(); ++y) {
            direct[c.s().product(x, y)] += mu[x] * nu[y];
          }
        }
        if (!(Dist(c.s(), direct) == convolve(mu, nu))) {
          return fail("convolve disagrees with the double sum");
        }
        if (!(convolution_operator(nu).apply(mu) == convolve(mu, nu))) {
          return fail("operator row product disagrees with convolve");
        }
      }
      return pass();
    }

    inline CheckOutcome support_product(Context& c) {
      Prng rng = c.rng(17);
      for (int t = 0; t < 4; ++t) {
        Dist const mu = c.random_measure(c.s().all(), rng, 4);
        Dist const nu = c.random_measure(c.s().all(), rng, 4);
        if (!(support(convolve(mu, nu)) == product_sets(support(mu), support(nu)))) {
          return fail("S(mu * nu) != S(mu)S(nu)");
        }
      }
      return pass();
    }

    // (mu * nu)^L = mu^L and (mu * nu)^R = nu^R on the kernel.
    inline CheckOutcome marginal_projection(Context& c) {
      Prng rng = c.rng(18);
      for (int t = 0; t < 4; ++t) {
        Dist const mu = c.random_measure(c.K(), rng, 4);
        Dist const nu = c.random_measure(c.K(), rng, 4);
        Marginals  a  = marginals(mu, c.rees());
        Marginals  b  = marginals(nu, c.rees());
        Marginals  ab = marginals(convolve(mu, nu), c.rees());
        if (!(ab.left == a.left) || !(ab.right == b.right)) {
          return fail("marginal of a convolution differs");
        }
      }
      return pass();
    }

    // On groups of order <= 8 the uniform distribution is the only one
    // invariant under all translations.
    inline CheckOutcome haar_invariance(Context& c) {
      GroupStructure const& G = c.rees().group();
      if (G.order() > 8) {
        return skip("group factor larger than 8");
      }
      BiInvariantSolution sol = bi_invariant_solutions(G);
      if (sol.dimension != 0 || !sol.unique || !(*sol.unique == haar_uniform(G))) {
        return fail("bi-invariant solution is not the unique uniform distribution");
      }
      auto rep = classify_translation_invariance(haar_uniform(G), G.carrier());
      if (!rep.left_on_support || !rep.right_on_support || !rep.consistent) {
        return fail("uniform distribution fails translation invariance");
      }
      return pass();
    }

    inline CheckOutcome convolution_invariance(Context& c) {
      Prng rng = c.rng(19);
      for (int t = 0; t < 2; ++t) {
        Dist const mu = c.random_measure(c.s().all(), rng, 3);
        Dist const nu = cesaro_limit(mu);
        auto       rep = check_convolution_invariance(mu, nu);
        if (!rep.holds) {
          auto [x, a, side] = *rep.counterexample;
          return fail(std::string(side == Side::right ? "right" : "left")
                      + " identity fails at x=" + c.s().label(x)
                      + ", a=" + c.s().label(a));
        }
      }
      return pass();
    }

    inline CheckOutcome idempotent_factorization(Context& c) {
      Prng rng = c.rng(20);
      for (int t = 0; t < 2; ++t) {
        Dist const nu = cesaro_limit(c.random_measure(c.s().all(), rng, 3));
        (void) factorize_idempotent(nu);
      }
      return pass();
    }

    // mu1 on Ke, mu2 on eK, so supp(mu2 * mu1) lies in eKe = G.
    inline CheckOutcome idempotent_converse(Context& c) {
      Prng                     rng = c.rng(21);
      ReesDecomposition const& d   = c.rees();
      ElementSet const Ke = times(c.K(), d.base());
      ElementSet const eK = times(d.base(), c.K());
      for (int t = 0; t < 3; ++t) {
        Dist const mu1 = c.random_measure(Ke, rng, 4);
        Dist const mu2 = c.random_measure(eK, rng, 4);
        Dist const mu  = compose_idempotent(mu1, mu2, d.group());
        auto       f   = factorize_idempotent(mu);
        if (!(convolve(f.left, f.haar, f.right) == mu)) {
          return fail("round trip does not reconstruct mu");
        }
      }
      return pass();
    }

    inline CheckOutcome limit_theorem(Context& c) {
      Prng rng = c.rng(22);
      for (int t = 0; t < 3; ++t) {
        Dist const   mu = c.random_measure(c.s().all(), rng, 3);
        LimitOptions opts;
        opts.throw_on_violation = false;
        LimitReport r = analyze_limit(mu, opts);
        for (auto const& [name, ok] : r.checks) {
          if (!ok) {
            return fail(name);
          }
        }
      }
      return pass();
    }

    inline CheckOutcome cesaro_bound(Context& c) {
      Prng       rng = c.rng(23);
      Dist const mu  = c.random_measure(c.s().all(), rng, 3);
      auto       d   = cesaro_diagnostic(mu, 16, 3);
      for (auto const& row : d.rows) {
        if (!row.within) {
          return fail("n=" + std::to_string(row.n) + ", j=" + std::to_string(row.j));
        }
      }
      return pass();
    }

  }  // namespace detail

  struct NamedCheck {
    std::string                                    name;
    std::function<CheckOutcome(detail::Context&)> run;
  };

  // Canonical order of the suite.
  inline std::vector<NamedCheck> const& suite_checks() {
    static std::vector<NamedCheck> const checks = {
        {"minimal_left_ideal_criterion", detail::minimal_left_ideal_criterion},
        {"minimal_ideal_criterion", detail::minimal_ideal_criterion},
        {"left_simplicity_equivalence", detail::left_simplicity},
        {"simplicity_equivalence", detail::simplicity},
        {"left_and_right_simple_is_group", detail::left_right_simple_group},
        {"idempotent_is_right_identity", detail::idempotent_right_identity},
        {"left_group_equivalence", detail::left_group_equivalence},
        {"rees_decomposition", detail::rees_decomposition},
        {"minimal_left_ideals_are_LGy", detail::minimal_left_ideals_LGy},
        {"idempotent_criterion", detail::idempotent_criterion_check},
        {"rebasing", detail::rebasing},
        {"idempotents_primitive_left_groups", detail::completely_simple_corollaries},
        {"product_BA_is_group", detail::product_BA_is_group},
        {"kernel_unique", detail::kernel_unique},
        {"power_clusters", detail::power_clusters},
        {"convolution_definition", detail::convolution_definition},
        {"support_of_convolution", detail::support_product},
        {"marginals_of_convolution", detail::marginal_projection},
        {"haar_unique_invariant", detail::haar_invariance},
        {"convolution_invariance", detail::convolution_invariance},
        {"idempotent_factorization", detail::idempotent_factorization},
        {"idempotent_converse", detail::idempotent_converse},
        {"limit_theorem", detail::limit_theorem},
        {"cesaro_bound", detail::cesaro_bound},
    };
    return checks;
  }

  struct CheckWitness {
    std::string instance;
    std::string detail;
  };

  struct CheckSummary {
    std::string               name;
    std::size_t               passed  = 0;
    std::size_t               skipped = 0;
    std::vector<CheckWitness> failures;
    double                    seconds = 0;  // summed over instances

    bool ok() const {
      return failures.empty();
    }
  };

  struct SuiteResult {
    std::string               corpus;
    std::uint64_t             seed = 0;
    std::vector<std::string>  instances;
    std::vector<CheckSummary> checks;

    bool all_pass() const {
      return std::all_of(checks.begin(), checks.end(),
                         [](CheckSummary const& c) { return c.ok(); });
    }
  };

  struct SuiteOptions {
    std::string                 corpus  = "default";
    std::uint64_t               seed    = 1;
    unsigned                    threads = 0;  // 0: hardware concurrency
    std::vector<CorpusInstance> extra;        // appended after the corpus
  };

  inline SuiteResult run_suite(SuiteOptions const& opts) {
    std::vector<CorpusInstance> corpus = build_corpus(opts.corpus, opts.seed);
    for (auto const& e : opts.extra) {
      corpus.push_back(e);
    }
    auto const& checks = suite_checks();

    // outcomes[i][k]: instance i, check k.
    std::vector<std::vector<CheckOutcome>> outcomes(corpus.size());
    std::vector<std::vector<double>>       seconds(corpus.size());
    std::atomic<std::size_t>               next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) {
        detail::Context ctx(corpus[i].semigroup, opts.seed + 0x1000 * (i + 1));
        for (auto const& chk : checks) {
          auto const   t0 = std::chrono::steady_clock::now();
          CheckOutcome out;
          try {
            out = chk.run(ctx);
          } catch (OrderCapExceeded const& e) {
            out = detail::skip(e.what());
          } catch (std::exception const& e) {
            out = detail::fail(e.what());
          }
          std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
          outcomes[i].push_back(std::move(out));
          seconds[i].push_back(dt.count());
        }
      }
    };
    unsigned n = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
    n          = static_cast<unsigned>(std::min<std::size_t>(n, corpus.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    SuiteResult res;
    res.corpus = opts.corpus;
    res.seed   = opts.seed;
    for (auto const& inst : corpus) {
      res.instances.push_back(inst.name);
    }
    for (std::size_t k = 0; k < checks.size(); ++k) {
      CheckSummary sum;
      sum.name = checks[k].name;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        CheckOutcome const& o = outcomes[i][k];
        sum.seconds += seconds[i][k];
        switch (o.status) {
          case CheckStatus::pass: ++sum.passed; break;
          case CheckStatus::skip: ++sum.skipped; break;
          case CheckStatus::fail: sum.failures.push_back({corpus[i].name, o.detail}); break;
        }
      }
      res.checks.push_back(std::move(sum));
    }
    return res;
  }

  // Timings vary between runs, so they are only included on request.
  inline Json to_json(SuiteResult const& r, bool with_timings = false) {
    Json checks = Json::object();
    for (auto const& c : r.checks) {
      Json failures = Json::array();
      for (auto const& w : c.failures) {
        failures.push_back({{"instance", w.instance}, {"detail", w.detail}});
      }
      Json j = {{"pass", c.ok()},
                {"instances_passed", c.passed},
                {"instances_skipped", c.skipped},
                {"failures", failures}};
      if (with_timings) {
        j["seconds"] = c.seconds;
      }
      checks[c.name] = j;
    }
    return {{"corpus", {{"name", r.corpus}, {"seed", r.seed}, {"instances", r.instances}}},
            {"checks", checks},
            {"all_pass", r.all_pass()}};
  }

}  // namespace semiconv

#endif  // SEMICONV_VERIFY_HPP_

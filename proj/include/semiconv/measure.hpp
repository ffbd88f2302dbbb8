// Marginals along a Rees decomposition, convolution idempotents and their
// factorization mu = mu^L * omega_G * mu^R, and translation invariance.

#ifndef SEMICONV_MEASURE_HPP_
#define SEMICONV_MEASURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "semiconv/dist.hpp"
#include "semiconv/error.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/linalg.hpp"
#include "semiconv/rees.hpp"

namespace semiconv {

  struct Marginals {
    Dist left;
    Dist group;
    Dist right;
  };

  // Pushforwards of mu under the three coordinates of psi_inv.
  inline Marginals marginals(Dist const& mu, ReesDecomposition const& d) {
    if (!mu.parent().same_as(d.parent())) {
      throw MismatchedParent("distribution and decomposition differ");
    }
    ElementSet const supp = support(mu);
    if (!supp.is_subset_of(d.carrier())) {
      throw SupportOutsideDecomposition(
          "support is not contained in the decomposed semigroup");
    }
    std::size_t const     n = mu.size();
    std::vector<Rational> l(n, Rational(0)), g(n, Rational(0)),
        r(n, Rational(0));
    supp.for_each([&](Element z) {
      ReesTriple t = psi_inv(d, z);
      l[t.x] += mu[z];
      g[t.g] += mu[z];
      r[t.y] += mu[z];
    });
    return {Dist(mu.parent(), std::move(l)),
            Dist(mu.parent(), std::move(g)),
            Dist(mu.parent(), std::move(r))};
  }

  inline bool is_idempotent_measure(Dist const& mu) {
    return convolve(mu, mu) == mu;
  }

  struct IdempotentFactorization {
    ReesDecomposition rees;  // of support(mu)
    Dist              left;
    Dist              haar;
    Dist              right;
  };

  // For mu * mu = mu: support(mu) is completely simple and
  // mu = mu^L * omega_G * mu^R. Every part of that statement is checked
  // exactly, including the product form of the joint pushforward on
  // L x G x R.
  inline IdempotentFactorization factorize_idempotent(Dist const& mu) {
    if (!is_idempotent_measure(mu)) {
      throw NotIdempotent("mu * mu != mu");
    }
    ElementSet const supp = support(mu);
    if (!is_subsemigroup(supp)) {
      throw TheoremViolation("support of an idempotent is not closed");
    }
    std::optional<ReesDecomposition> d;
    try {
      d.emplace(rees_decompose(supp));
    } catch (Error const& err) {
      throw TheoremViolation(
          std::string("support of an idempotent is not completely simple: ")
          + err.what());
    }
    Marginals  m    = marginals(mu, *d);
    Dist const haar = haar_uniform(d->group());
    if (!(m.group == haar)) {
      throw TheoremViolation("group marginal is not the Haar measure");
    }
    if (!(convolve(m.left, haar, m.right) == mu)) {
      throw TheoremViolation("mu != mu^L * omega_G * mu^R");
    }
    Semigroup const& s = mu.parent();
    d->left().for_each([&](Element x) {
      d->group().carrier().for_each([&](Element g) {
        d->right().for_each([&](Element y) {
          if (mu[psi(*d, x, g, y)] != m.left[x] * haar[g] * m.right[y]) {
            throw TheoremViolation("coordinates are not independent at "
                                   + s.label(psi(*d, x, g, y)));
          }
        });
      });
    });
    return {std::move(*d), std::move(m.left), haar, std::move(m.right)};
  }

  // mu1 * omega_G * mu2, which is idempotent whenever the support of
  // mu2 * mu1 lies in G.
  inline Dist compose_idempotent(Dist const&           mu1,
                                 Dist const&           mu2,
                                 GroupStructure const& G) {
    mu1.check_parent(mu2);
    if (!mu1.parent().same_as(G.parent())) {
      throw MismatchedParent("group lives on a different semigroup");
    }
    ElementSet const outside = support(convolve(mu2, mu1)) - G.carrier();
    if (!outside.empty()) {
      throw PreconditionViolated("support of mu2 * mu1 contains "
                                 + mu1.parent().label(outside.first())
                                 + " outside G");
    }
    Dist mu = convolve(mu1, haar_uniform(G), mu2);
    if (!is_idempotent_measure(mu)) {
      throw TheoremViolation("mu1 * omega_G * mu2 is not idempotent");
    }
    return mu;
  }

  struct TranslationInvarianceReport {
    // delta_x * mu = mu (left) and mu * delta_x = mu (right), quantified
    // over the support of mu ...
    bool left_on_support  = false;
    bool right_on_support = false;
    // ... and over the whole carrier.
    bool left_on_carrier  = false;
    bool right_on_carrier = false;
    std::optional<Element> left_witness;   // first failing x in the carrier
    std::optional<Element> right_witness;
    bool support_is_group = false;
    bool equals_haar      = false;
    // Invariance on the support forces a group support carrying Haar
    // measure; false here would be a counterexample.
    bool consistent = true;
  };

  inline TranslationInvarianceReport
  classify_translation_invariance(Dist const&                      mu,
                                  std::optional<ElementSet> const& carrier
                                  = std::nullopt) {
    Semigroup const&  s    = mu.parent();
    ElementSet const  supp = support(mu);
    ElementSet const  all  = carrier ? *carrier : s.all();
    TranslationInvarianceReport rep;
    rep.left_on_support = rep.right_on_support = true;
    rep.left_on_carrier = rep.right_on_carrier = true;
    all.for_each([&](Element x) {
      bool const l = convolve(dirac(s, x), mu) == mu;
      bool const r = convolve(mu, dirac(s, x)) == mu;
      if (!l) {
        rep.left_on_carrier = false;
        if (!rep.left_witness) {
          rep.left_witness = x;
        }
        if (supp.contains(x)) {
          rep.left_on_support = false;
        }
      }
      if (!r) {
        rep.right_on_carrier = false;
        if (!rep.right_witness) {
          rep.right_witness = x;
        }
        if (supp.contains(x)) {
          rep.right_on_support = false;
        }
      }
    });
    if (!supp.is_subset_of(all)) {
      // Support points outside the carrier were not visited above.
      supp.for_each([&](Element x) {
        if (all.contains(x)) {
          return;
        }
        rep.left_on_support
            = rep.left_on_support && convolve(dirac(s, x), mu) == mu;
        rep.right_on_support
            = rep.right_on_support && convolve(mu, dirac(s, x)) == mu;
      });
    }
    try {
      GroupStructure G     = group_structure(supp);
      rep.support_is_group = true;
      rep.equals_haar      = haar_uniform(G) == mu;
    } catch (Error const&) {
      rep.support_is_group = false;
    }
    if (rep.left_on_support && rep.right_on_support) {
      rep.consistent = rep.support_is_group && rep.equals_haar;
    }
    return rep;
  }

  // Distributions supported in G that are invariant under translation by
  // every element of G on both sides, solved exactly.
  struct BiInvariantSolution {
    std::size_t         dimension;  // of the affine solution space
    std::optional<Dist> unique;     // set iff dimension == 0
  };

  inline BiInvariantSolution bi_invariant_solutions(GroupStructure const& G) {
    Semigroup const&           s = G.parent();
    std::vector<Element> const g = G.carrier().members();
    std::size_t const          k = g.size();
    std::vector<std::size_t>   pos(s.order(), k);
    for (std::size_t i = 0; i < k; ++i) {
      pos[g[i]] = i;
    }
    // Rows: for each x and target b, the coefficient of v_y in
    // (delta_x * v)(b) - v(b), then the same for v * delta_x, then sum = 1.
    Matrix                A(2 * k * k + 1, k);
    std::vector<Rational> rhs(2 * k * k + 1, Rational(0));
    std::size_t           row = 0;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t xi = 0; xi < k; ++xi) {
        for (std::size_t bi = 0; bi < k; ++bi, ++row) {
          for (std::size_t yi = 0; yi < k; ++yi) {
            Element const p = side == 0 ? s.product(g[xi], g[yi])
                                        : s.product(g[yi], g[xi]);
            if (p == g[bi]) {
              A(row, yi) += 1;
            }
          }
          A(row, bi) -= 1;
        }
      }
    }
    for (std::size_t yi = 0; yi < k; ++yi) {
      A(row, yi) = 1;
    }
    rhs[row] = 1;
    auto sol = solve_affine(A, rhs);
    if (!sol) {
      return {0, std::nullopt};
    }
    BiInvariantSolution out{sol->homogeneous.cols(), std::nullopt};
    if (out.dimension == 0) {
      std::vector<Rational> p(s.order(), Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        p[g[i]] = sol->particular[i];
      }
      out.unique.emplace(s, std::move(p));
    }
    return out;
  }

  struct ConvolutionInvarianceReport {
    bool holds = true;
    // First failure: x in supp(mu), a in supp(nu), and which identity.
    std::optional<std::tuple<Element, Element, Side>> counterexample;
  };

  // Given nu = mu * nu = nu * mu, checks nu * delta_{xa} = nu * delta_a and
  // delta_{ax} * nu = delta_a * nu for x in supp(mu), a in supp(nu).
  inline ConvolutionInvarianceReport
  check_convolution_invariance(Dist const& mu, Dist const& nu) {
    mu.check_parent(nu);
    if (!(convolve(mu, nu) == nu) || !(convolve(nu, mu) == nu)) {
      throw HypothesisViolated("nu = mu * nu = nu * mu does not hold");
    }
    Semigroup const&            s = mu.parent();
    ConvolutionInvarianceReport rep;
    std::vector<Element> const  sm = support(mu).members();
    support(nu).for_each([&](Element a) {
      Dist const right_a = translate(nu, a, Side::right);
      Dist const left_a  = translate(nu, a, Side::left);
      for (Element x : sm) {
        if (!rep.holds) {
          return;
        }
        if (!(translate(nu, s.product(x, a), Side::right) == right_a)) {
          rep.holds          = false;
          rep.counterexample = std::make_tuple(x, a, Side::right);
        } else if (!(translate(nu, s.product(a, x), Side::left) == left_a)) {
          rep.holds          = false;
          rep.counterexample = std::make_tuple(x, a, Side::left);
        }
      }
    });
    return rep;
  }

}  // namespace semiconv

#endif  // SEMICONV_MEASURE_HPP_

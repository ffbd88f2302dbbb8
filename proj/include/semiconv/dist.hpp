// Exact-rational probability distributions on a finite semigroup and their
// convolution.

#ifndef SEMICONV_DIST_HPP_
#define SEMICONV_DIST_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "semiconv/error.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/rational.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  class Dist {
   public:
    // Entries must be non-negative and sum to exactly one.
    Dist(Semigroup parent, std::vector<Rational> probs)
        : parent_(std::move(parent)), probs_(std::move(probs)) {
      if (probs_.size() != parent_.order()) {
        throw InvalidDist("expected " + std::to_string(parent_.order())
                          + " entries, found " + std::to_string(probs_.size()));
      }
      Rational total = 0;
      for (auto& p : probs_) {
        p.canonicalize();
        if (p < 0) {
          throw InvalidDist("negative probability " + to_string(p));
        }
        total += p;
      }
      if (total != 1) {
        throw InvalidDist("total mass is " + to_string(total) + ", not 1");
      }
    }

    Semigroup const& parent() const noexcept {
      return parent_;
    }
    std::size_t size() const noexcept {
      return probs_.size();
    }
    Rational const& operator[](Element a) const {
      return probs_.at(a);
    }
    std::vector<Rational> const& probs() const noexcept {
      return probs_;
    }

    void check_parent(Dist const& other) const {
      if (!parent_.same_as(other.parent_)) {
        throw MismatchedParent("distributions live on different semigroups");
      }
    }

    friend bool operator==(Dist const& a, Dist const& b) {
      return a.parent_.same_as(b.parent_) && a.probs_ == b.probs_;
    }

   private:
    Semigroup             parent_;
    std::vector<Rational> probs_;
  };

  inline Dist dirac(Semigroup const& s, Element a) {
    if (a >= s.order()) {
      throw UnknownLabel("element index " + std::to_string(a)
                         + " out of range");
    }
    std::vector<Rational> p(s.order(), Rational(0));
    p[a] = 1;
    return Dist(s, std::move(p));
  }

  // Mass 1/|A| on each member of A.
  inline Dist uniform_on(ElementSet const& A) {
    if (A.empty()) {
      throw EmptySupport("uniform distribution on the empty set");
    }
    std::vector<Rational> p(A.parent().order(), Rational(0));
    Rational const        w(1, A.size());
    A.for_each([&](Element a) { p[a] = w; });
    return Dist(A.parent(), std::move(p));
  }

  // Normalized Haar measure of a finite group.
  inline Dist haar_uniform(GroupStructure const& G) {
    return uniform_on(G.carrier());
  }

  inline ElementSet support(Dist const& mu) {
    ElementSet out(mu.parent());
    for (Element a = 0; a < mu.size(); ++a) {
      if (mu[a] > 0) {
        out.insert(a);
      }
    }
    return out;
  }

  // (mu * nu)(z) = sum over xy = z of mu(x) nu(y).
  inline Dist convolve(Dist const& mu, Dist const& nu) {
    mu.check_parent(nu);
    Semigroup const&      s = mu.parent();
    std::vector<Rational> out(s.order(), Rational(0));
    std::vector<Element>  sm = support(mu).members();
    std::vector<Element>  sn = support(nu).members();
    Rational              t;
    for (Element x : sm) {
      for (Element y : sn) {
        mpq_mul(t.get_mpq_t(), mu[x].get_mpq_t(), nu[y].get_mpq_t());
        out[s.product(x, y)] += t;
      }
    }
    return Dist(s, std::move(out));
  }

  inline Dist convolve(Dist const& a, Dist const& b, Dist const& c) {
    return convolve(convolve(a, b), c);
  }

  enum class Side { left, right };

  // right: mu * delta_x, i.e. B -> mu(B x^{-1});
  // left:  delta_x * mu, i.e. B -> mu(x^{-1} B).
  // Each y carries its mass to the unique b whose preimage contains it.
  inline Dist translate(Dist const& mu, Element x, Side side) {
    Semigroup const&      s = mu.parent();
    std::vector<Rational> out(s.order(), Rational(0));
    for (Element y = 0; y < s.order(); ++y) {
      if (sgn(mu[y]) != 0) {
        out[side == Side::right ? s.product(y, x) : s.product(x, y)] += mu[y];
      }
    }
    return Dist(s, std::move(out));
  }

  // Half the l1 distance.
  inline Rational tv_distance(Dist const& mu, Dist const& nu) {
    mu.check_parent(nu);
    Rational total = 0;
    for (Element a = 0; a < mu.size(); ++a) {
      total += abs(mu[a] - nu[a]);
    }
    return total / 2;
  }

  // Convex combination sum w_i mu_i; weights must sum to one.
  inline Dist mixture(std::vector<std::pair<Rational, Dist>> const& parts) {
    if (parts.empty()) {
      throw InvalidDist("empty mixture");
    }
    Semigroup const&      s = parts.front().second.parent();
    std::vector<Rational> out(s.order(), Rational(0));
    for (auto const& [w, d] : parts) {
      parts.front().second.check_parent(d);
      for (Element a = 0; a < s.order(); ++a) {
        out[a] += w * d[a];
      }
    }
    return Dist(s, std::move(out));
  }

}  // namespace semiconv

#endif  // SEMICONV_DIST_HPP_

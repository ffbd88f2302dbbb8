// Recognising subsets that form groups.

#ifndef SEMICONV_GROUP_HPP_
#define SEMICONV_GROUP_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "semiconv/error.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

  // A subset of a semigroup that is a group under the parent product.
  class GroupStructure {
   public:
    GroupStructure(ElementSet carrier, Element identity, std::vector<Element> inverse)
        : carrier_(std::move(carrier)),
          identity_(identity),
          inverse_(std::move(inverse)) {}

    ElementSet const& carrier() const noexcept {
      return carrier_;
    }
    Semigroup const& parent() const noexcept {
      return carrier_.parent();
    }
    Element identity() const noexcept {
      return identity_;
    }
    std::size_t order() const {
      return carrier_.size();
    }
    bool contains(Element g) const noexcept {
      return carrier_.contains(g);
    }
    Element inverse(Element g) const {
      if (!carrier_.contains(g)) {
        throw NotInFactor("element " + parent().label(g)
                          + " is not in the group");
      }
      return inverse_[g];
    }
    Element multiply(Element a, Element b) const noexcept {
      return parent().product(a, b);
    }
    Element power(Element g, std::size_t k) const {
      Element r = identity_;
      for (std::size_t i = 0; i < k; ++i) {
        r = multiply(r, g);
      }
      return r;
    }

   private:
    ElementSet           carrier_;
    Element              identity_;
    std::vector<Element> inverse_;
  };

  // Recognises A as a group when it is both left and right simple: solve
  // ea = a for the identity, then xy = e for inverses. Throws NotAGroup with
  // the first a for which Aa != A or aA != A.
  inline GroupStructure group_structure(ElementSet const& A) {
    if (!is_subsemigroup(A)) {
      throw NotASubsemigroup("group carrier is empty or not closed");
    }
    Semigroup const&  s = A.parent();
    std::size_t const n = A.size();
    A.for_each([&](Element a) {
      if (product_sets(A, s.singleton(a)).size() != n) {
        throw NotAGroup(a, "A" + s.label(a) + " != A");
      }
      if (product_sets(s.singleton(a), A).size() != n) {
        throw NotAGroup(a, s.label(a) + "A != A");
      }
    });
    std::vector<Element> const members = A.members();
    Element const              a       = members.front();
    Element                    e       = kNoElement;
    for (Element x : members) {
      if (s.product(x, a) == a) {
        e = x;
        break;
      }
    }
    if (e == kNoElement) {
      throw VerificationFailed("no solution of ea = a");
    }
    for (Element x : members) {
      if (s.product(e, x) != x || s.product(x, e) != x) {
        throw VerificationFailed("solution of ea = a is not an identity");
      }
    }
    std::vector<Element> inverse(s.order(), kNoElement);
    for (Element x : members) {
      for (Element y : members) {
        if (s.product(x, y) == e) {
          if (s.product(y, x) != e) {
            throw VerificationFailed("right inverse of " + s.label(x)
                                     + " is not a left inverse");
          }
          inverse[x] = y;
          break;
        }
      }
      if (inverse[x] == kNoElement) {
        throw VerificationFailed("no inverse for " + s.label(x));
      }
    }
    return GroupStructure(A, e, std::move(inverse));
  }

  inline GroupStructure group_structure(Semigroup const& s) {
    return group_structure(s.all());
  }

  // gH as a set.
  inline ElementSet left_coset(GroupStructure const& H, Element g) {
    return product_sets(H.parent().singleton(g), H.carrier());
  }

  // gHg^{-1} = H for all g in G.
  inline bool is_normal_subgroup(GroupStructure const& G,
                                 GroupStructure const& H) {
    if (!H.carrier().is_subset_of(G.carrier())
        || H.identity() != G.identity()) {
      return false;
    }
    Semigroup const& s  = G.parent();
    bool             ok = true;
    G.carrier().for_each([&](Element g) {
      ElementSet conj = product_sets(
          product_sets(s.singleton(g), H.carrier()), s.singleton(G.inverse(g)));
      ok = ok && conj == H.carrier();
    });
    return ok;
  }

}  // namespace semiconv

#endif  // SEMICONV_GROUP_HPP_

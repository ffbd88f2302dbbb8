// Subset products, idempotents, ideals, simplicity and the kernel.
//
// Operations that depend on an ambient semigroup take it as a `carrier`
// ElementSet, so the same code serves a whole Cayley table and any of its
// subsemigroups (kernels, supports of measures, ...). Products are always
// computed in the parent table.

#ifndef SEMICONV_IDEALS_HPP_
#define SEMICONV_IDEALS_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "semiconv/error.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  // AB = { ab : a in A, b in B }.
  inline ElementSet product_sets(ElementSet const& A, ElementSet const& B) {
    A.check_parent(B);
    Semigroup const& s = A.parent();
    ElementSet       out(s);
    A.for_each([&](Element a) {
      B.for_each([&](Element b) { out.insert(s.product(a, b)); });
    });
    return out;
  }

  inline ElementSet product_sets(ElementSet const& A,
                                 ElementSet const& B,
                                 ElementSet const& C) {
    return product_sets(product_sets(A, B), C);
  }

  // E(A) = { e in A : ee = e }.
  inline ElementSet idempotents(ElementSet const& A) {
    Semigroup const& s = A.parent();
    ElementSet       out(s);
    A.for_each([&](Element e) {
      if (s.product(e, e) == e) {
        out.insert(e);
      }
    });
    return out;
  }

  inline ElementSet idempotents(Semigroup const& s) {
    return idempotents(s.all());
  }

  inline bool is_subsemigroup(ElementSet const& A) {
    return !A.empty() && product_sets(A, A).is_subset_of(A);
  }

  // Least superset of `gens` closed under the product.
  inline ElementSet generated_subsemigroup(ElementSet const& gens) {
    if (gens.empty()) {
      throw EmptyGenerators("cannot generate from the empty set");
    }
    Semigroup const&     s      = gens.parent();
    ElementSet           result = gens;
    std::vector<Element> members = gens.members();
    // Every product of members is reached by multiplying on the right by a
    // generator, so closing under right multiplication by gens suffices.
    std::vector<Element> const g = gens.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      Element x = members[i];
      for (Element y : g) {
        Element z = s.product(x, y);
        if (!result.contains(z)) {
          result.insert(z);
          members.push_back(z);
        }
      }
    }
    return result;
  }

  // a^{-1} A = { x : ax in A }.
  inline ElementSet left_quotient(Element a, ElementSet const& A) {
    Semigroup const& s = A.parent();
    ElementSet       out(s);
    for (Element x = 0; x < s.order(); ++x) {
      if (A.contains(s.product(a, x))) {
        out.insert(x);
      }
    }
    return out;
  }

  // A a^{-1} = { x : xa in A }.
  inline ElementSet right_quotient(ElementSet const& A, Element a) {
    Semigroup const& s = A.parent();
    ElementSet       out(s);
    for (Element x = 0; x < s.order(); ++x) {
      if (A.contains(s.product(x, a))) {
        out.insert(x);
      }
    }
    return out;
  }

  namespace detail {
    inline void require_nonempty_within(ElementSet const& carrier,
                                        ElementSet const& I) {
      if (I.empty()) {
        throw EmptySet("ideals are non-empty by definition");
      }
      if (!I.is_subset_of(carrier)) {
        throw PreconditionViolated("set is not contained in the carrier");
      }
    }

    inline void require_subsemigroup(ElementSet const& A) {
      if (!is_subsemigroup(A)) {
        throw NotASubsemigroup("set is empty or not closed under product");
      }
    }
  }  // namespace detail

  // C I subset of I, where C is the ambient carrier.
  inline bool is_left_ideal(ElementSet const& carrier, ElementSet const& I) {
    detail::require_nonempty_within(carrier, I);
    return product_sets(carrier, I).is_subset_of(I);
  }

  inline bool is_right_ideal(ElementSet const& carrier, ElementSet const& I) {
    detail::require_nonempty_within(carrier, I);
    return product_sets(I, carrier).is_subset_of(I);
  }

  inline bool is_ideal(ElementSet const& carrier, ElementSet const& I) {
    return is_left_ideal(carrier, I) && is_right_ideal(carrier, I);
  }

  inline bool is_left_ideal(ElementSet const& I) {
    return is_left_ideal(I.parent().all(), I);
  }

  inline bool is_right_ideal(ElementSet const& I) {
    return is_right_ideal(I.parent().all(), I);
  }

  inline bool is_ideal(ElementSet const& I) {
    return is_ideal(I.parent().all(), I);
  }

  // A = Aa for every a in A.
  inline bool is_left_simple(ElementSet const& A) {
    detail::require_subsemigroup(A);
    std::size_t const n    = A.size();
    bool              good = true;
    A.for_each([&](Element a) {
      if (good && product_sets(A, A.parent().singleton(a)).size() != n) {
        good = false;
      }
    });
    return good;
  }

  // A = aA for every a in A.
  inline bool is_right_simple(ElementSet const& A) {
    detail::require_subsemigroup(A);
    std::size_t const n    = A.size();
    bool              good = true;
    A.for_each([&](Element a) {
      if (good && product_sets(A.parent().singleton(a), A).size() != n) {
        good = false;
      }
    });
    return good;
  }

  // A = AaA for every a in A.
  inline bool is_simple(ElementSet const& A) {
    detail::require_subsemigroup(A);
    std::size_t const n    = A.size();
    bool              good = true;
    A.for_each([&](Element a) {
      if (good
          && product_sets(product_sets(A, A.parent().singleton(a)), A).size()
                 != n) {
        good = false;
      }
    });
    return good;
  }

  inline bool is_left_simple(Semigroup const& s) {
    return is_left_simple(s.all());
  }
  inline bool is_right_simple(Semigroup const& s) {
    return is_right_simple(s.all());
  }
  inline bool is_simple(Semigroup const& s) {
    return is_simple(s.all());
  }

  // C a together with a itself (the identity is adjoined by hand).
  inline ElementSet principal_left_ideal(ElementSet const& carrier,
                                         Element           a) {
    ElementSet out = product_sets(carrier, carrier.parent().singleton(a));
    out.insert(a);
    return out;
  }

  inline ElementSet principal_right_ideal(ElementSet const& carrier,
                                          Element           a) {
    ElementSet out = product_sets(carrier.parent().singleton(a), carrier);
    out.insert(a);
    return out;
  }

  // C^1 a C^1.
  inline ElementSet principal_ideal(ElementSet const& carrier, Element a) {
    ElementSet right = principal_right_ideal(carrier, a);
    ElementSet out   = product_sets(carrier, right);
    out |= right;
    return out;
  }

  namespace detail {
    template <typename Principal>
    std::vector<ElementSet> minimal_principal(ElementSet const& carrier,
                                              Principal&&       principal) {
      std::vector<ElementSet> candidates;
      carrier.for_each(
          [&](Element a) { candidates.push_back(principal(carrier, a)); });
      std::vector<ElementSet> out;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
          if (candidates[j].is_subset_of(candidates[i])
              && !(candidates[j] == candidates[i])) {
            minimal = false;
          }
        }
        if (minimal
            && std::find(out.begin(), out.end(), candidates[i]) == out.end()) {
          out.push_back(candidates[i]);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  // Inclusion-minimal principal left ideals of the carrier, sorted by least
  // member. Each is checked against the criterion I = Ca for all a in I.
  inline std::vector<ElementSet> minimal_left_ideals(ElementSet const& carrier) {
    detail::require_subsemigroup(carrier);
    auto out = detail::minimal_principal(
        carrier, [](ElementSet const& c, Element a) {
          return principal_left_ideal(c, a);
        });
    for (auto const& I : out) {
      I.for_each([&](Element a) {
        if (!(product_sets(carrier, carrier.parent().singleton(a)) == I)) {
          throw VerificationFailed("minimal left ideal is not Ca for "
                                   + carrier.parent().label(a));
        }
      });
    }
    return out;
  }

  inline std::vector<ElementSet>
  minimal_right_ideals(ElementSet const& carrier) {
    detail::require_subsemigroup(carrier);
    auto out = detail::minimal_principal(
        carrier, [](ElementSet const& c, Element a) {
          return principal_right_ideal(c, a);
        });
    for (auto const& I : out) {
      I.for_each([&](Element a) {
        if (!(product_sets(carrier.parent().singleton(a), carrier) == I)) {
          throw VerificationFailed("minimal right ideal is not aC for "
                                   + carrier.parent().label(a));
        }
      });
    }
    return out;
  }

  inline std::vector<ElementSet> minimal_left_ideals(Semigroup const& s) {
    return minimal_left_ideals(s.all());
  }

  inline std::vector<ElementSet> minimal_right_ideals(Semigroup const& s) {
    return minimal_right_ideals(s.all());
  }

  // The unique minimal two-sided ideal, built as the union of the minimal
  // left ideals. Checked to be an ideal, to satisfy CzC = K for z in K, and
  // to lie inside every principal ideal.
  inline ElementSet kernel(ElementSet const& carrier) {
    ElementSet k(carrier.parent());
    for (auto const& I : minimal_left_ideals(carrier)) {
      k |= I;
    }
    Semigroup const& s = carrier.parent();
    if (!is_ideal(carrier, k)) {
      throw VerificationFailed("union of minimal left ideals is not an ideal");
    }
    k.for_each([&](Element z) {
      if (!(product_sets(product_sets(carrier, s.singleton(z)), carrier)
            == k)) {
        throw VerificationFailed("CzC != K for z = " + s.label(z));
      }
    });
    carrier.for_each([&](Element a) {
      if (!k.is_subset_of(principal_ideal(carrier, a))) {
        throw VerificationFailed("kernel not contained in the ideal of "
                                 + s.label(a));
      }
    });
    return k;
  }

  inline ElementSet kernel(Semigroup const& s) {
    return kernel(s.all());
  }

}  // namespace semiconv

#endif  // SEMICONV_IDEALS_HPP_

// Rees decomposition S = LGR of a completely simple semigroup at a
// primitive idempotent, the product bijection L x G x R -> S and its
// inverse, and the Rees matrix construction.

#ifndef SEMICONV_REES_HPP_
#define SEMICONV_REES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semiconv/error.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  // Coordinates of an element under the product bijection.
  struct ReesTriple {
    Element x;
    Element g;
    Element y;

    friend bool operator==(ReesTriple const&, ReesTriple const&) = default;
  };

  class ReesDecomposition {
   public:
    ReesDecomposition(ElementSet     carrier,
                      Element        base,
                      ElementSet     left,
                      GroupStructure group,
                      ElementSet     right)
        : carrier_(std::move(carrier)),
          base_(base),
          left_(std::move(left)),
          group_(std::move(group)),
          right_(std::move(right)) {}

    Semigroup const& parent() const noexcept {
      return carrier_.parent();
    }
    // The completely simple semigroup being decomposed.
    ElementSet const& carrier() const noexcept {
      return carrier_;
    }
    Element base() const noexcept {
      return base_;
    }
    // L = E(Se)
    ElementSet const& left() const noexcept {
      return left_;
    }
    // G = eSe
    GroupStructure const& group() const noexcept {
      return group_;
    }
    // R = E(eS)
    ElementSet const& right() const noexcept {
      return right_;
    }

   private:
    ElementSet     carrier_;
    Element        base_;
    ElementSet     left_;
    GroupStructure group_;
    ElementSet     right_;
  };

  // True iff no idempotent x != e of the carrier has ex = xe = x.
  inline bool is_primitive_idempotent(ElementSet const& carrier, Element e) {
    Semigroup const& s = carrier.parent();
    if (!carrier.contains(e) || s.product(e, e) != e) {
      throw NotIdempotent(s.label(e) + " is not an idempotent of the carrier");
    }
    bool primitive = true;
    idempotents(carrier).for_each([&](Element x) {
      if (x != e && s.product(e, x) == x && s.product(x, e) == x) {
        primitive = false;
      }
    });
    return primitive;
  }

  inline bool is_primitive_idempotent(Semigroup const& s, Element e) {
    return is_primitive_idempotent(s.all(), e);
  }

  inline Element psi(ReesDecomposition const& d,
                     Element                  x,
                     Element                  g,
                     Element                  y) {
    if (!d.left().contains(x)) {
      throw NotInFactor("L does not contain " + d.parent().label(x));
    }
    if (!d.group().contains(g)) {
      throw NotInFactor("G does not contain " + d.parent().label(g));
    }
    if (!d.right().contains(y)) {
      throw NotInFactor("R does not contain " + d.parent().label(y));
    }
    Semigroup const& s = d.parent();
    return s.product(s.product(x, g), y);
  }

  // z -> (ze(eze)^{-1}, eze, (eze)^{-1}ez)
  inline ReesTriple psi_inv(ReesDecomposition const& d, Element z) {
    if (!d.carrier().contains(z)) {
      throw NotInFactor("the decomposed semigroup does not contain "
                        + d.parent().label(z));
    }
    Semigroup const& s   = d.parent();
    Element const    e   = d.base();
    Element const    ze  = s.product(z, e);
    Element const    eze = s.product(e, ze);
    Element const    inv = d.group().inverse(eze);
    return {s.product(ze, inv), eze, s.product(s.product(inv, e), z)};
  }

  namespace detail {
    inline void clause(bool ok, char const* what) {
      if (!ok) {
        throw VerificationFailed(what);
      }
    }

    // All structural identities of the decomposition, checked exhaustively.
    inline void verify_rees(ReesDecomposition const& d) {
      Semigroup const&  s  = d.parent();
      ElementSet const& C  = d.carrier();
      Element const     e  = d.base();
      ElementSet const  E  = s.singleton(e);
      ElementSet const& L  = d.left();
      ElementSet const& G  = d.group().carrier();
      ElementSet const& R  = d.right();
      ElementSet const  Se = product_sets(C, E);
      ElementSet const  eS = product_sets(E, C);

      clause(product_sets(L, G) == Se, "LG != Se");
      clause(is_left_simple(Se) && !idempotents(Se).empty(),
             "Se is not a left group");
      clause(product_sets(G, R) == eS, "GR != eS");
      clause(is_right_simple(eS) && !idempotents(eS).empty(),
             "eS is not a right group");
      clause(product_sets(R, L).is_subset_of(G), "RL is not inside G");
      clause(product_sets(E, L) == E, "eL != {e}");
      clause(product_sets(R, E) == E, "Re != {e}");
      clause((Se & eS) == G, "G != Se intersect eS");
      clause(d.group().identity() == e, "identity of G is not e");
      clause(product_sets(L, G, R) == C, "LGR != S");
      clause(L.size() * G.size() * R.size() == C.size(),
             "|L||G||R| != |S|");
      L.for_each([&](Element x) {
        G.for_each([&](Element g) {
          R.for_each([&](Element y) {
            clause(psi_inv(d, psi(d, x, g, y)) == ReesTriple{x, g, y},
                   "psi_inv(psi(x, g, y)) != (x, g, y)");
          });
        });
      });
      C.for_each([&](Element z) {
        auto t = psi_inv(d, z);
        clause(psi(d, t.x, t.g, t.y) == z, "psi(psi_inv(z)) != z");
      });
    }
  }  // namespace detail

  // Decomposes a completely simple carrier at `base` (default: the least
  // idempotent) and verifies every structural clause eagerly.
  inline ReesDecomposition
  rees_decompose(ElementSet const&      carrier,
                 std::optional<Element> base = std::nullopt) {
    if (!is_simple(carrier)) {
      throw NotSimple("carrier is not simple");
    }
    Semigroup const& s = carrier.parent();
    Element          e;
    if (base) {
      e = *base;
      if (!carrier.contains(e) || s.product(e, e) != e) {
        throw NotIdempotent(s.label(e) + " is not an idempotent of S");
      }
    } else {
      ElementSet E = idempotents(kernel(carrier));
      if (E.empty()) {
        throw VerificationFailed("finite semigroup without idempotents");
      }
      e = E.first();
    }
    if (!is_primitive_idempotent(carrier, e)) {
      throw NotPrimitive(s.label(e) + " is not primitive");
    }
    ElementSet const E  = s.singleton(e);
    ElementSet const Se = product_sets(carrier, E);
    ElementSet const eS = product_sets(E, carrier);
    ElementSet const eSe = product_sets(E, Se);
    std::optional<GroupStructure> G;
    try {
      G.emplace(group_structure(eSe));
    } catch (NotAGroup const& err) {
      throw VerificationFailed(std::string("eSe is not a group: ")
                               + err.what());
    }
    ReesDecomposition d(carrier, e, idempotents(Se), *G, idempotents(eS));
    detail::verify_rees(d);
    return d;
  }

  inline ReesDecomposition
  rees_decompose(Semigroup const&       s,
                 std::optional<Element> base = std::nullopt) {
    return rees_decompose(s.all(), base);
  }

  // x (yx)^{-1} y, the unique idempotent in the L-class of x and the
  // R-class of y.
  inline Element idempotent_criterion(ReesDecomposition const& d,
                                      Element                  x,
                                      Element                  y) {
    Semigroup const& s = d.parent();
    if (!d.left().contains(x)) {
      throw NotInFactor("L does not contain " + s.label(x));
    }
    if (!d.right().contains(y)) {
      throw NotInFactor("R does not contain " + s.label(y));
    }
    Element const g = d.group().inverse(s.product(y, x));
    Element const z = s.product(s.product(x, g), y);
    detail::clause(s.product(z, z) == z, "x(yx)^{-1}y is not idempotent");
    return z;
  }

  // Decomposition at another idempotent e' = a(ba)^{-1}b, checked against
  // L'G' = LGb, G' = aGb and G'R' = aGR.
  inline ReesDecomposition rebase(ReesDecomposition const& d, Element base) {
    Semigroup const& s = d.parent();
    if (!d.carrier().contains(base) || s.product(base, base) != base) {
      throw NotIdempotent(s.label(base) + " is not an idempotent of S");
    }
    ReesTriple const t = psi_inv(d, base);
    Element const    a = t.x, b = t.y;
    detail::clause(t.g == d.group().inverse(s.product(b, a)),
                   "idempotent is not of the form a(ba)^{-1}b");
    ReesDecomposition out = rees_decompose(d.carrier(), base);
    ElementSet const  A   = s.singleton(a);
    ElementSet const  B   = s.singleton(b);
    ElementSet const& L   = d.left();
    ElementSet const& G   = d.group().carrier();
    ElementSet const& R   = d.right();
    detail::clause(product_sets(out.left(), out.group().carrier())
                       == product_sets(L, G, B),
                   "L'G' != LGb");
    detail::clause(out.group().carrier() == product_sets(A, G, B),
                   "G' != aGb");
    detail::clause(product_sets(out.group().carrier(), out.right())
                       == product_sets(A, G, R),
                   "G'R' != aGR");
    return out;
  }

  // Index of (i, g, lambda) in a Rees matrix semigroup built below, where
  // g is given by its position in the group's member list.
  inline Element rees_matrix_index(std::size_t group_order,
                                   std::size_t cols,
                                   std::size_t row,
                                   std::size_t group_pos,
                                   std::size_t col) {
    return static_cast<Element>((row * group_order + group_pos) * cols + col);
  }

  // M(G; rows, cols; P) with (i, g, l)(j, h, r) = (i, g P[l][j] h, r). The
  // sandwich matrix is cols x rows with entries in G. Labels are
  // "(i,g,l)" using the group's labels.
  inline Semigroup
  rees_matrix_semigroup(GroupStructure const&                    group,
                        std::size_t                              rows,
                        std::size_t                              cols,
                        std::vector<std::vector<Element>> const& sandwich) {
    if (rows == 0 || cols == 0) {
      throw InvalidSandwichEntry("rows and cols must be positive");
    }
    if (sandwich.size() != cols) {
      throw InvalidSandwichEntry("sandwich matrix must have one row per column index");
    }
    Semigroup const&           gs      = group.parent();
    std::vector<Element> const members = group.carrier().members();
    std::vector<std::size_t>   pos(gs.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      pos[members[i]] = i;
    }
    for (std::size_t l = 0; l < cols; ++l) {
      if (sandwich[l].size() != rows) {
        throw InvalidSandwichEntry("sandwich row " + std::to_string(l)
                                   + " has the wrong length");
      }
      for (Element p : sandwich[l]) {
        if (p >= gs.order() || !group.contains(p)) {
          throw InvalidSandwichEntry("entry " + std::to_string(p)
                                     + " is not in the group");
        }
      }
    }
    std::size_t const        m = members.size();
    std::size_t const        n = rows * m * cols;
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t l = 0; l < cols; ++l) {
          labels[rees_matrix_index(m, cols, i, g, l)]
              = "(" + std::to_string(i) + "," + gs.label(members[g]) + ","
                + std::to_string(l) + ")";
        }
      }
    }
    Semigroup::Table table(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t l = 0; l < cols; ++l) {
          auto const a = rees_matrix_index(m, cols, i, g, l);
          for (std::size_t j = 0; j < rows; ++j) {
            Element const gp = gs.product(members[g], sandwich[l][j]);
            for (std::size_t h = 0; h < m; ++h) {
              Element const prod = gs.product(gp, members[h]);
              for (std::size_t r = 0; r < cols; ++r) {
                table[a][rees_matrix_index(m, cols, j, h, r)]
                    = rees_matrix_index(m, cols, i, pos[prod], r);
              }
            }
          }
        }
      }
    }
    return validate_cayley(std::move(labels), table, std::max(n, kDefaultOrderCap));
  }

}  // namespace semiconv

#endif  // SEMICONV_REES_HPP_

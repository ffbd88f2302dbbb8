// Deterministic constructors for test semigroups and distributions.
//
// Transformations compose as (f g)(x) = f(g(x)): the right factor acts
// first. Under this convention constant maps are left zeros (c f = c), so
// the kernel of a full transformation monoid is a left-zero semigroup.
//
// Randomized kinds use xorshift64* seeded through splitmix64; see Prng.

#ifndef SEMICONV_GENERATORS_HPP_
#define SEMICONV_GENERATORS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semiconv/dist.hpp"
#include "semiconv/error.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/rees.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  // xorshift64*. The state is initialised with one round of
  // splitmix64 applied to the seed, so seed 0 is valid:
  //
  //   z = seed + 0x9E3779B97F4A7C15
  //   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
  //   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
  //   state = z ^ (z >> 31)            (replaced by 1 if zero)
  //
  //   next: x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
  //         return x * 0x2545F4914F6CDD1D
  //
  // below(n) is next() % n.
  class Prng {
   public:
    explicit Prng(std::uint64_t seed) noexcept {
      std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
      z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      state_          = z ^ (z >> 31);
      if (state_ == 0) {
        state_ = 1;
      }
    }

    std::uint64_t next() noexcept {
      state_ ^= state_ >> 12;
      state_ ^= state_ << 25;
      state_ ^= state_ >> 27;
      return state_ * 0x2545F4914F6CDD1DULL;
    }

    std::uint64_t below(std::uint64_t n) noexcept {
      return next() % n;
    }

   private:
    std::uint64_t state_;
  };

  enum class CorpusKind {
    cyclic,
    left_zero,
    right_zero,
    rectangular_band,
    full_transformation,
    boolean_matrices,
    rees_matrix,
    direct_product,
    random_transformation_subsemigroup,
    symmetric_group
  };

  inline std::string kind_name(CorpusKind k) {
    switch (k) {
      case CorpusKind::cyclic: return "cyclic";
      case CorpusKind::left_zero: return "left_zero";
      case CorpusKind::right_zero: return "right_zero";
      case CorpusKind::rectangular_band: return "rectangular_band";
      case CorpusKind::full_transformation: return "full_transformation";
      case CorpusKind::boolean_matrices: return "boolean_matrices";
      case CorpusKind::rees_matrix: return "rees_matrix";
      case CorpusKind::direct_product: return "direct_product";
      case CorpusKind::random_transformation_subsemigroup:
        return "random_transformation_subsemigroup";
      case CorpusKind::symmetric_group: return "symmetric_group";
    }
    return "?";
  }

  inline CorpusKind parse_kind(std::string const& name) {
    for (auto k : {CorpusKind::cyclic,
                   CorpusKind::left_zero,
                   CorpusKind::right_zero,
                   CorpusKind::rectangular_band,
                   CorpusKind::full_transformation,
                   CorpusKind::boolean_matrices,
                   CorpusKind::rees_matrix,
                   CorpusKind::direct_product,
                   CorpusKind::random_transformation_subsemigroup,
                   CorpusKind::symmetric_group}) {
      if (kind_name(k) == name) {
        return k;
      }
    }
    throw ParseError("unknown corpus kind \"" + name + "\"");
  }

  // Parameters by kind:
  //   cyclic                 [n] -> Z_n; [n, i] -> <a | a^{i+n} = a^i>
  //   left_zero, right_zero  [n] or [n, 1] (second form adjoins identity "1")
  //   rectangular_band       [m, k]
  //   full_transformation    [n], n <= 4
  //   symmetric_group        [n], n <= 4
  //   boolean_matrices       [n], n <= 3
  //   rees_matrix            [rows, cols], factors = {group}, optional
  //                          sandwich (cols x rows, positions in the group's
  //                          member list), else drawn from seed
  //   direct_product         factors = {A, B}
  //   random_transformation_subsemigroup  [degree, generators], seed
  struct CorpusSpec {
    CorpusKind                                    kind = CorpusKind::cyclic;
    std::vector<long long>                        params;
    std::uint64_t                                 seed = 0;
    std::vector<CorpusSpec>                       factors;
    std::optional<std::vector<std::vector<long long>>> sandwich;

    std::string describe() const {
      std::string out = kind_name(kind) + "(";
      for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i ? "," : "") + std::to_string(params[i]);
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i || !params.empty() ? ";" : "") + factors[i].describe();
      }
      out += ")";
      if (kind == CorpusKind::random_transformation_subsemigroup
          || (kind == CorpusKind::rees_matrix && !sandwich)) {
        out += "#" + std::to_string(seed);
      }
      return out;
    }
  };

  namespace detail {

    inline void need_params(CorpusSpec const& spec, std::size_t lo, std::size_t hi) {
      if (spec.params.size() < lo || spec.params.size() > hi) {
        throw ParameterOutOfRange(kind_name(spec.kind) + " takes "
                                  + std::to_string(lo) + ".."
                                  + std::to_string(hi) + " parameters");
      }
    }

    inline void need_range(long long v, long long lo, long long hi, char const* what) {
      if (v < lo || v > hi) {
        throw ParameterOutOfRange(std::string(what) + " = " + std::to_string(v)
                                  + " outside [" + std::to_string(lo) + ", "
                                  + std::to_string(hi) + "]");
      }
    }

    inline std::string letter_label(std::size_t i, std::size_t n) {
      if (n <= 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "x" + std::to_string(i);
    }

    using Map = std::vector<int>;

    inline std::string map_label(Map const& f) {
      std::string s;
      for (int v : f) {
        s += std::to_string(v + 1);
      }
      return s;
    }

    // (f g)(x) = f(g(x)).
    inline Map compose(Map const& f, Map const& g) {
      Map h(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) {
        h[x] = f[static_cast<std::size_t>(g[x])];
      }
      return h;
    }

    inline Semigroup from_maps(std::vector<Map> maps) {
      std::sort(maps.begin(), maps.end());
      std::map<Map, long long> index;
      for (std::size_t i = 0; i < maps.size(); ++i) {
        index[maps[i]] = static_cast<long long>(i);
      }
      std::vector<std::string> labels;
      Semigroup::Table         t(maps.size(), std::vector<long long>(maps.size()));
      for (std::size_t a = 0; a < maps.size(); ++a) {
        labels.push_back(map_label(maps[a]));
        for (std::size_t b = 0; b < maps.size(); ++b) {
          t[a][b] = index.at(compose(maps[a], maps[b]));
        }
      }
      return validate_cayley(std::move(labels), t);
    }

    inline std::vector<Map> all_maps(int n, bool bijective) {
      std::vector<Map> out;
      Map              f(static_cast<std::size_t>(n), 0);
      while (true) {
        bool ok = true;
        if (bijective) {
          std::vector<bool> hit(static_cast<std::size_t>(n), false);
          for (int v : f) {
            ok = ok && !hit[static_cast<std::size_t>(v)];
            hit[static_cast<std::size_t>(v)] = true;
          }
        }
        if (ok) {
          out.push_back(f);
        }
        int i = n - 1;
        while (i >= 0 && f[static_cast<std::size_t>(i)] == n - 1) {
          f[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) {
          break;
        }
        ++f[static_cast<std::size_t>(i)];
      }
      return out;
    }

    inline Semigroup zero_semigroup(std::size_t n, bool adjoin, bool left) {
      std::size_t const        off = adjoin ? 1 : 0;
      std::size_t const        m   = n + off;
      std::vector<std::string> labels;
      if (adjoin) {
        labels.push_back("1");
      }
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(letter_label(i, n));
      }
      Semigroup::Table t(m, std::vector<long long>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          if (adjoin && a == 0) {
            t[a][b] = static_cast<long long>(b);
          } else if (adjoin && b == 0) {
            t[a][b] = static_cast<long long>(a);
          } else {
            t[a][b] = static_cast<long long>(left ? a : b);
          }
        }
      }
      return validate_cayley(std::move(labels), t);
    }

  }  // namespace detail

  Semigroup build(CorpusSpec const& spec);

  namespace detail {

    inline Semigroup build_rees(CorpusSpec const& spec) {
      need_params(spec, 2, 2);
      if (spec.factors.size() != 1) {
        throw ParameterOutOfRange("rees_matrix needs exactly one group factor");
      }
      need_range(spec.params[0], 1, 64, "rows");
      need_range(spec.params[1], 1, 64, "cols");
      auto const           rows = static_cast<std::size_t>(spec.params[0]);
      auto const           cols = static_cast<std::size_t>(spec.params[1]);
      Semigroup const      gs   = build(spec.factors[0]);
      GroupStructure const G    = [&] {
        try {
          return group_structure(gs);
        } catch (NotAGroup const& e) {
          throw ParameterOutOfRange(std::string("rees_matrix factor: ") + e.what());
        }
      }();
      std::vector<Element> const members = G.carrier().members();
      std::vector<std::vector<Element>> P(cols, std::vector<Element>(rows));
      if (spec.sandwich) {
        if (spec.sandwich->size() != cols) {
          throw InvalidSandwichEntry("sandwich must have cols rows");
        }
        for (std::size_t l = 0; l < cols; ++l) {
          if ((*spec.sandwich)[l].size() != rows) {
            throw InvalidSandwichEntry("sandwich row has the wrong length");
          }
          for (std::size_t j = 0; j < rows; ++j) {
            long long v = (*spec.sandwich)[l][j];
            if (v < 0 || static_cast<std::size_t>(v) >= members.size()) {
              throw InvalidSandwichEntry("entry " + std::to_string(v)
                                         + " is not a group position");
            }
            P[l][j] = members[static_cast<std::size_t>(v)];
          }
        }
      } else {
        Prng rng(spec.seed);
        for (auto& row : P) {
          for (auto& v : row) {
            v = members[rng.below(members.size())];
          }
        }
      }
      return rees_matrix_semigroup(G, rows, cols, P);
    }

    inline Semigroup build_direct_product(CorpusSpec const& spec) {
      if (spec.factors.size() != 2) {
        throw ParameterOutOfRange("direct_product needs two factors");
      }
      Semigroup const   A = build(spec.factors[0]);
      Semigroup const   B = build(spec.factors[1]);
      std::size_t const n = A.order() * B.order();
      if (n > kDefaultOrderCap) {
        throw ParameterOutOfRange("direct product too large");
      }
      std::vector<std::string> labels;
      Semigroup::Table         t(n, std::vector<long long>(n));
      for (Element a = 0; a < A.order(); ++a) {
        for (Element b = 0; b < B.order(); ++b) {
          labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
        }
      }
      for (Element a1 = 0; a1 < A.order(); ++a1) {
        for (Element b1 = 0; b1 < B.order(); ++b1) {
          for (Element a2 = 0; a2 < A.order(); ++a2) {
            for (Element b2 = 0; b2 < B.order(); ++b2) {
              t[a1 * B.order() + b1][a2 * B.order() + b2]
                  = static_cast<long long>(A.product(a1, a2) * B.order()
                                           + B.product(b1, b2));
            }
          }
        }
      }
      return validate_cayley(std::move(labels), t);
    }

    inline Semigroup build_boolean(int n) {
      std::size_t const        bits = static_cast<std::size_t>(n * n);
      std::size_t const        m    = std::size_t(1) << bits;
      std::vector<std::string> labels(m);
      auto bit = [&](std::size_t mask, int i, int j) {
        return (mask >> static_cast<std::size_t>(i * n + j)) & 1U;
      };
      for (std::size_t a = 0; a < m; ++a) {
        for (int i = 0; i < n; ++i) {
          if (i) {
            labels[a] += "/";
          }
          for (int j = 0; j < n; ++j) {
            labels[a] += bit(a, i, j) ? '1' : '0';
          }
        }
      }
      Semigroup::Table t(m, std::vector<long long>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          std::size_t c = 0;
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
              for (int k = 0; k < n; ++k) {
                if (bit(a, i, k) && bit(b, k, j)) {
                  c |= std::size_t(1) << static_cast<std::size_t>(i * n + j);
                }
              }
            }
          }
          t[a][b] = static_cast<long long>(c);
        }
      }
      return validate_cayley(std::move(labels), t);
    }

    inline Semigroup build_random_transformations(CorpusSpec const& spec) {
      need_params(spec, 2, 2);
      need_range(spec.params[0], 1, 4, "degree");
      need_range(spec.params[1], 1, 16, "generators");
      int const        n = static_cast<int>(spec.params[0]);
      Prng             rng(spec.seed);
      std::vector<Map> gens;
      for (long long k = 0; k < spec.params[1]; ++k) {
        Map f(static_cast<std::size_t>(n));
        for (auto& v : f) {
          v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        }
        gens.push_back(f);
      }
      std::map<Map, bool> seen;
      std::vector<Map>    all;
      for (auto const& g : gens) {
        if (seen.emplace(g, true).second) {
          all.push_back(g);
        }
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (auto const& g : gens) {
          Map h = compose(all[i], g);
          if (seen.emplace(h, true).second) {
            all.push_back(h);
          }
        }
      }
      return from_maps(std::move(all));
    }

  }  // namespace detail

  // Deterministic for a fixed spec, seed included.
  inline Semigroup build(CorpusSpec const& spec) {
    using detail::need_params;
    using detail::need_range;
    switch (spec.kind) {
      case CorpusKind::cyclic: {
        need_params(spec, 1, 2);
        need_range(spec.params[0], 1, 1024, "n");
        auto const n = static_cast<std::size_t>(spec.params[0]);
        if (spec.params.size() == 1) {
          std::vector<std::string> labels;
          Semigroup::Table         t(n, std::vector<long long>(n));
          for (std::size_t a = 0; a < n; ++a) {
            labels.push_back(std::to_string(a));
            for (std::size_t b = 0; b < n; ++b) {
              t[a][b] = static_cast<long long>((a + b) % n);
            }
          }
          return validate_cayley(std::move(labels), t);
        }
        need_range(spec.params[1], 1, 1024, "index");
        auto const idx = static_cast<std::size_t>(spec.params[1]);
        std::size_t const m = idx + n - 1;  // a^1 .. a^m
        need_range(static_cast<long long>(m), 1, 1024, "order");
        auto reduce = [&](std::size_t k) {
          return k < idx ? k : idx + (k - idx) % n;
        };
        std::vector<std::string> labels;
        Semigroup::Table         t(m, std::vector<long long>(m));
        for (std::size_t a = 1; a <= m; ++a) {
          labels.push_back("a^" + std::to_string(a));
          for (std::size_t b = 1; b <= m; ++b) {
            t[a - 1][b - 1] = static_cast<long long>(reduce(a + b) - 1);
          }
        }
        return validate_cayley(std::move(labels), t);
      }
      case CorpusKind::left_zero:
      case CorpusKind::right_zero: {
        need_params(spec, 1, 2);
        need_range(spec.params[0], 1, 1023, "n");
        bool adjoin = spec.params.size() == 2 && spec.params[1] != 0;
        return detail::zero_semigroup(static_cast<std::size_t>(spec.params[0]),
                                      adjoin,
                                      spec.kind == CorpusKind::left_zero);
      }
      case CorpusKind::rectangular_band: {
        need_params(spec, 2, 2);
        need_range(spec.params[0], 1, 1024, "m");
        need_range(spec.params[1], 1, 1024, "k");
        auto const m = static_cast<std::size_t>(spec.params[0]);
        auto const k = static_cast<std::size_t>(spec.params[1]);
        need_range(static_cast<long long>(m * k), 1, 1024, "order");
        std::vector<std::string> labels;
        Semigroup::Table         t(m * k, std::vector<long long>(m * k));
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
        for (std::size_t a = 0; a < m * k; ++a) {
          for (std::size_t b = 0; b < m * k; ++b) {
            t[a][b] = static_cast<long long>((a / k) * k + b % k);
          }
        }
        return validate_cayley(std::move(labels), t);
      }
      case CorpusKind::full_transformation:
      case CorpusKind::symmetric_group: {
        need_params(spec, 1, 1);
        need_range(spec.params[0], 1, 4, "degree");
        return detail::from_maps(
            detail::all_maps(static_cast<int>(spec.params[0]),
                             spec.kind == CorpusKind::symmetric_group));
      }
      case CorpusKind::boolean_matrices: {
        need_params(spec, 1, 1);
        need_range(spec.params[0], 1, 3, "dimension");
        return detail::build_boolean(static_cast<int>(spec.params[0]));
      }
      case CorpusKind::rees_matrix: return detail::build_rees(spec);
      case CorpusKind::direct_product: return detail::build_direct_product(spec);
      case CorpusKind::random_transformation_subsemigroup:
        return detail::build_random_transformations(spec);
    }
    throw ParameterOutOfRange("unknown kind");
  }

  // Strictly positive exactly on `supp`, with every denominator dividing
  // `denominator_bound`: start from weight 1 everywhere and hand out the
  // remaining units one at a time.
  inline Dist random_dist(ElementSet const& supp,
                          std::uint64_t     seed,
                          std::size_t       denominator_bound) {
    if (supp.empty()) {
      throw EmptySupport("random_dist needs a non-empty support");
    }
    std::vector<Element> const members = supp.members();
    if (denominator_bound < members.size()) {
      throw ParameterOutOfRange("denominator bound below support size");
    }
    Prng                     rng(seed);
    std::vector<std::size_t> w(members.size(), 1);
    for (std::size_t u = members.size(); u < denominator_bound; ++u) {
      ++w[rng.below(members.size())];
    }
    std::vector<Rational> p(supp.parent().order(), Rational(0));
    for (std::size_t i = 0; i < members.size(); ++i) {
      p[members[i]] = Rational(static_cast<unsigned long>(w[i]),
                               static_cast<unsigned long>(denominator_bound));
      p[members[i]].canonicalize();
    }
    return Dist(supp.parent(), std::move(p));
  }

  // `count` distinct members of `from`, chosen by the seed.
  inline ElementSet random_subset(ElementSet const& from,
                                  std::uint64_t     seed,
                                  std::size_t       count) {
    std::vector<Element> pool = from.members();
    if (count == 0 || count > pool.size()) {
      throw ParameterOutOfRange("subset size out of range");
    }
    Prng       rng(seed);
    ElementSet out(from.parent());
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      out.insert(pool[i]);
    }
    return out;
  }

}  // namespace semiconv

#endif  // SEMICONV_GENERATORS_HPP_

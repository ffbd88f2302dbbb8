// Brute-force reference implementations used by the tests. Everything here
// works on plain bitmasks and enumerates subsets directly, so it shares no
// code with the library beyond Semigroup::product.

#ifndef SEMICONV_TESTS_ORACLES_HPP_
#define SEMICONV_TESTS_ORACLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semiconv/semiconv.hpp"

namespace oracle {

  using semiconv::Element;
  using semiconv::ElementSet;
  using semiconv::Semigroup;
  using Mask = std::uint32_t;

  inline bool has(Mask m, Element a) {
    return (m >> a) & 1U;
  }

  inline bool is_left_ideal(Semigroup const& s, Mask I) {
    for (Element x = 0; x < s.order(); ++x) {
      for (Element i = 0; i < s.order(); ++i) {
        if (has(I, i) && !has(I, s.product(x, i))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_right_ideal(Semigroup const& s, Mask I) {
    for (Element x = 0; x < s.order(); ++x) {
      for (Element i = 0; i < s.order(); ++i) {
        if (has(I, i) && !has(I, s.product(i, x))) {
          return false;
        }
      }
    }
    return true;
  }

  template <typename Pred>
  std::vector<Mask> minimal_subsets(Semigroup const& s, Pred&& pred) {
    Mask const        full = (Mask(1) << s.order()) - 1;
    std::vector<Mask> hits;
    for (Mask m = 1; m <= full; ++m) {
      if (pred(m)) {
        hits.push_back(m);
      }
    }
    std::vector<Mask> out;
    for (Mask m : hits) {
      bool minimal = true;
      for (Mask k : hits) {
        if (k != m && (k & m) == k) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(m);
      }
    }
    return out;
  }

  inline std::vector<Mask> minimal_left_ideals(Semigroup const& s) {
    return minimal_subsets(s, [&](Mask m) { return is_left_ideal(s, m); });
  }

  inline std::vector<Mask> minimal_right_ideals(Semigroup const& s) {
    return minimal_subsets(s, [&](Mask m) { return is_right_ideal(s, m); });
  }

  inline std::vector<Mask> minimal_ideals(Semigroup const& s) {
    return minimal_subsets(
        s, [&](Mask m) { return is_left_ideal(s, m) && is_right_ideal(s, m); });
  }

  inline Mask mask(ElementSet const& A) {
    Mask m = 0;
    A.for_each([&](Element a) { m |= Mask(1) << a; });
    return m;
  }

  inline std::vector<Mask> masks(std::vector<ElementSet> const& sets) {
    std::vector<Mask> out;
    for (auto const& A : sets) {
      out.push_back(mask(A));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  // Every associative n x n table, n <= 3, in lexicographic order of the
  // flattened table.
  inline std::vector<Semigroup> all_semigroups(std::size_t n) {
    std::vector<Semigroup> out;
    std::size_t            cells = n * n, total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    for (std::size_t code = 0; code < total; ++code) {
      Semigroup::Table t(n, std::vector<long long>(n));
      std::size_t      c = code;
      for (std::size_t i = cells; i-- > 0;) {
        t[i / n][i % n] = static_cast<long long>(c % n);
        c /= n;
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          for (std::size_t d = 0; d < n && ok; ++d) {
            ok = t[static_cast<std::size_t>(t[a][b])][d]
                 == t[a][static_cast<std::size_t>(t[b][d])];
          }
        }
      }
      if (ok) {
        out.push_back(semiconv::validate_cayley(labels, t));
      }
    }
    return out;
  }

  // Corpus semigroups of order at most five.
  inline std::vector<std::pair<std::string, Semigroup>> small_corpus() {
    using semiconv::CorpusKind;
    using semiconv::CorpusSpec;
    std::vector<CorpusSpec> specs;
    auto add = [&](CorpusKind k, std::vector<long long> p, std::uint64_t seed = 0) {
      CorpusSpec c;
      c.kind   = k;
      c.params = std::move(p);
      c.seed   = seed;
      specs.push_back(c);
    };
    for (long long n = 1; n <= 5; ++n) {
      add(CorpusKind::cyclic, {n});
      add(CorpusKind::left_zero, {n});
      add(CorpusKind::right_zero, {n});
    }
    for (long long n = 1; n <= 4; ++n) {
      add(CorpusKind::left_zero, {n, 1});
      add(CorpusKind::right_zero, {n, 1});
    }
    add(CorpusKind::cyclic, {1, 2});
    add(CorpusKind::cyclic, {2, 2});
    add(CorpusKind::cyclic, {1, 4});
    add(CorpusKind::cyclic, {3, 2});
    add(CorpusKind::cyclic, {2, 3});
    add(CorpusKind::rectangular_band, {1, 2});
    add(CorpusKind::rectangular_band, {2, 2});
    add(CorpusKind::rectangular_band, {2, 1});
    add(CorpusKind::full_transformation, {2});
    add(CorpusKind::boolean_matrices, {1});
    add(CorpusKind::symmetric_group, {2});
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      add(CorpusKind::random_transformation_subsemigroup, {3, 1}, seed);
    }
    {
      CorpusSpec c;
      c.kind = CorpusKind::direct_product;
      c.factors.resize(2);
      c.factors[0].kind   = CorpusKind::cyclic;
      c.factors[0].params = {2};
      c.factors[1].kind   = CorpusKind::left_zero;
      c.factors[1].params = {2};
      specs.push_back(c);
    }
    std::vector<std::pair<std::string, Semigroup>> out;
    for (auto const& c : specs) {
      Semigroup s = semiconv::build(c);
      if (s.order() <= 5) {
        out.emplace_back(c.describe(), s);
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // SEMICONV_TESTS_ORACLES_HPP_

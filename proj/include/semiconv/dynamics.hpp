// Convolution powers mu^n and their limits: the Cesaro limit nu, the
// support period, the cluster group {eta, mu * eta, ...} and its
// identification with a cyclic quotient G/H.
//
// The Cesaro limit is the eigenvalue-1 spectral projection of the
// convolution operator M[z][w] = sum_{s : zs = w} mu(s). Two exact routes
// are provided:
//
//   * cesaro_limit: block elimination over the strongly connected
//     components of the operator graph (transient blocks are solved for
//     expected visits, closed blocks for their stationary vector);
//   * cesaro_limit_dense: the direct-sum projection onto ker(M - I) along
//     im(M - I), assembled from dense bases.
//
// Both restrict M to the subsemigroup generated by supp(mu), which is closed
// under the walk.

#ifndef SEMICONV_DYNAMICS_HPP_
#define SEMICONV_DYNAMICS_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiconv/dist.hpp"
#include "semiconv/error.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/linalg.hpp"
#include "semiconv/measure.hpp"
#include "semiconv/rees.hpp"

namespace semiconv {

  inline constexpr std::size_t kDefaultExactOrderCap = 300;

  // SEMICONV_ORDER_CAP overrides the default.
  inline std::size_t exact_order_cap() {
    if (char const* env = std::getenv("SEMICONV_ORDER_CAP")) {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return kDefaultExactOrderCap;
  }

  // Cooperative cancellation; copies share the flag.
  class CancellationToken {
   public:
    CancellationToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
    void cancel() noexcept {
      flag_->store(true);
    }
    bool cancelled() const noexcept {
      return flag_->load();
    }
    void check() const {
      if (cancelled()) {
        throw Cancelled("analysis cancelled");
      }
    }

   private:
    std::shared_ptr<std::atomic<bool>> flag_;
  };

  // Sparse row-stochastic matrix of nu -> nu * mu.
  class ConvolutionOperator {
   public:
    using Row = std::vector<std::pair<Element, Rational>>;

    explicit ConvolutionOperator(Dist const& mu) : parent_(mu.parent()) {
      Semigroup const&           s    = mu.parent();
      std::vector<Element> const supp = support(mu).members();
      rows_.resize(s.order());
      std::vector<Rational> acc(s.order(), Rational(0));
      for (Element z = 0; z < s.order(); ++z) {
        std::vector<Element> touched;
        for (Element x : supp) {
          Element w = s.product(z, x);
          if (sgn(acc[w]) == 0) {
            touched.push_back(w);
          }
          acc[w] += mu[x];
        }
        std::sort(touched.begin(), touched.end());
        for (Element w : touched) {
          rows_[z].emplace_back(w, acc[w]);
          acc[w] = 0;
        }
      }
    }

    Semigroup const& parent() const noexcept {
      return parent_;
    }
    std::size_t size() const noexcept {
      return rows_.size();
    }
    Row const& row(Element z) const {
      return rows_.at(z);
    }

    Rational at(Element z, Element w) const {
      for (auto const& [c, v] : rows_.at(z)) {
        if (c == w) {
          return v;
        }
      }
      return 0;
    }

    Matrix dense() const {
      Matrix m(size(), size());
      for (Element z = 0; z < size(); ++z) {
        for (auto const& [w, v] : rows_[z]) {
          m(z, w) = v;
        }
      }
      return m;
    }

    // nu M, which equals nu * mu.
    Dist apply(Dist const& nu) const {
      std::vector<Rational> out(size(), Rational(0));
      for (Element z = 0; z < size(); ++z) {
        if (sgn(nu[z]) == 0) {
          continue;
        }
        for (auto const& [w, v] : rows_[z]) {
          out[w] += nu[z] * v;
        }
      }
      return Dist(parent_, std::move(out));
    }

   private:
    Semigroup        parent_;
    std::vector<Row> rows_;
  };

  inline ConvolutionOperator convolution_operator(Dist const& mu) {
    return ConvolutionOperator(mu);
  }

  // mu^n by repeated squaring in the convolution semigroup.
  inline Dist power(Dist const& mu, std::size_t n) {
    if (n == 0) {
      throw ParameterOutOfRange("power requires n >= 1");
    }
    std::optional<Dist> result;
    Dist                base = mu;
    while (true) {
      if (n & 1U) {
        result = result ? convolve(*result, base) : base;
      }
      n >>= 1U;
      if (n == 0) {
        break;
      }
      base = convolve(base, base);
    }
    return *result;
  }

  namespace detail {

    // The operator restricted to the walk's state space.
    struct LocalOperator {
      std::vector<Element>                                       states;
      std::vector<std::size_t>                                   local;
      std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    };

    inline LocalOperator local_operator(Dist const& mu) {
      ElementSet const T = generated_subsemigroup(support(mu));
      if (T.size() > exact_order_cap()) {
        throw OrderCapExceeded(
            "generated subsemigroup has " + std::to_string(T.size())
            + " elements; exact cap is " + std::to_string(exact_order_cap())
            + " (set SEMICONV_ORDER_CAP to raise it)");
      }
      ConvolutionOperator const op(mu);
      LocalOperator             out;
      out.states = T.members();
      out.local.assign(mu.size(), static_cast<std::size_t>(-1));
      for (std::size_t i = 0; i < out.states.size(); ++i) {
        out.local[out.states[i]] = i;
      }
      out.rows.resize(out.states.size());
      for (std::size_t i = 0; i < out.states.size(); ++i) {
        for (auto const& [w, v] : op.row(out.states[i])) {
          out.rows[i].emplace_back(out.local[w], v);
        }
      }
      return out;
    }

    // Tarjan's algorithm, iterative. Components come out sinks first.
    inline std::vector<std::vector<std::size_t>>
    strongly_connected_components(LocalOperator const& op) {
      std::size_t const        n = op.states.size();
      std::size_t const        unvisited = static_cast<std::size_t>(-1);
      std::vector<std::size_t> index(n, unvisited), low(n, 0);
      std::vector<bool>        on_stack(n, false);
      std::vector<std::size_t> stack;
      std::vector<std::vector<std::size_t>> out;
      std::size_t                           counter = 0;
      std::vector<std::pair<std::size_t, std::size_t>> call;
      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
          continue;
        }
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& [v, edge] = call.back();
          if (edge < op.rows[v].size()) {
            std::size_t w = op.rows[v][edge++].first;
            if (index[w] == unvisited) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              call.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          std::size_t const done = v;
          if (low[done] == index[done]) {
            std::vector<std::size_t> comp;
            std::size_t              w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp.push_back(w);
            } while (w != done);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
          }
          call.pop_back();
          if (!call.empty()) {
            std::size_t parent = call.back().first;
            low[parent]        = std::min(low[parent], low[done]);
          }
        }
      }
      return out;
    }

    inline void verify_cesaro(Dist const& mu, Dist const& nu) {
      if (!(convolve(nu, nu) == nu)) {
        throw TheoremViolation("Cesaro limit is not idempotent");
      }
      if (!(convolve(mu, nu) == nu) || !(convolve(nu, mu) == nu)) {
        throw TheoremViolation("Cesaro limit is not mu-invariant");
      }
    }

  }  // namespace detail

  // Exact Cesaro limit nu = lim (1/n) sum_{k <= n} mu^k, verified to satisfy
  // nu * nu = nu and mu * nu = nu * mu = nu.
  inline Dist cesaro_limit(Dist const&              mu,
                           CancellationToken const& token = {}) {
    detail::LocalOperator const op    = detail::local_operator(mu);
    auto const                  comps = detail::strongly_connected_components(op);
    std::size_t const           n     = op.states.size();
    std::vector<std::size_t>    comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (auto v : comps[c]) {
        comp_of[v] = c;
      }
    }
    std::vector<Rational> inflow(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      inflow[i] = mu[op.states[i]];
    }
    std::vector<Rational> limit(mu.size(), Rational(0));
    // Sources first.
    for (std::size_t c = comps.size(); c-- > 0;) {
      token.check();
      auto const&              comp = comps[c];
      std::size_t const        k    = comp.size();
      std::vector<std::size_t> pos(n, k);
      for (std::size_t i = 0; i < k; ++i) {
        pos[comp[i]] = i;
      }
      bool closed = true;
      for (auto v : comp) {
        for (auto const& [w, p] : op.rows[v]) {
          closed = closed && comp_of[w] == c;
        }
      }
      if (closed) {
        Rational mass = 0;
        for (auto v : comp) {
          mass += inflow[v];
        }
        if (sgn(mass) == 0) {
          continue;
        }
        // pi (M_CC - I) = 0 with sum pi = 1, as a column system.
        Matrix                A(k + 1, k);
        std::vector<Rational> rhs(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
          A(i, i) -= 1;
          for (auto const& [w, p] : op.rows[comp[i]]) {
            A(pos[w], i) += p;
          }
          A(k, i) = 1;
        }
        rhs[k] = 1;
        auto sol = solve_affine(A, rhs);
        if (!sol || sol->homogeneous.cols() != 0) {
          throw SingularDecomposition(
              "closed class without a unique stationary vector");
        }
        for (std::size_t i = 0; i < k; ++i) {
          limit[op.states[comp[i]]] = mass * sol->particular[i];
        }
      } else {
        // Expected visits x = f (I - Q)^{-1}, i.e. (I - Q)^T x^T = f^T.
        Matrix A = Matrix::identity(k);
        Matrix f(k, 1);
        for (std::size_t i = 0; i < k; ++i) {
          for (auto const& [w, p] : op.rows[comp[i]]) {
            if (comp_of[w] == c) {
              A(pos[w], i) -= p;
            }
          }
          f(i, 0) = inflow[comp[i]];
        }
        Matrix const x = solve(A, f);
        for (std::size_t i = 0; i < k; ++i) {
          if (sgn(x(i, 0)) == 0) {
            continue;
          }
          for (auto const& [w, p] : op.rows[comp[i]]) {
            if (comp_of[w] != c) {
              inflow[w] += x(i, 0) * p;
            }
          }
        }
      }
    }
    Dist nu(mu.parent(), std::move(limit));
    detail::verify_cesaro(mu, nu);
    return nu;
  }

  // The projection onto ker(M - I) along im(M - I) for a square M.
  inline Matrix spectral_projection(Matrix const& M) {
    std::size_t const n = M.rows();
    Matrix const      A = M - Matrix::identity(n);
    Matrix const      K = nullspace(A);
    Matrix const      W = column_space(A);
    std::size_t const d = K.cols();
    if (d + W.cols() != n) {
      throw SingularDecomposition("ker(M - I) + im(M - I) does not span");
    }
    Matrix B(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        B(i, j) = K(i, j);
      }
      for (std::size_t j = 0; j < W.cols(); ++j) {
        B(i, d + j) = W(i, j);
      }
    }
    // Coordinates along the kernel basis: first d rows of B^{-1}.
    Matrix const inv = solve(B, Matrix::identity(n));
    Matrix       top(d, n);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        top(i, j) = inv(i, j);
      }
    }
    return K * top;
  }

  // Same limit through the dense projection; cubic in |<supp mu>|.
  inline Dist cesaro_limit_dense(Dist const& mu) {
    detail::LocalOperator const op = detail::local_operator(mu);
    std::size_t const           n  = op.states.size();
    Matrix                      M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto const& [w, p] : op.rows[i]) {
        M(i, w) = p;
      }
    }
    Matrix const          P = spectral_projection(M);
    std::vector<Rational> start(n);
    for (std::size_t i = 0; i < n; ++i) {
      start[i] = mu[op.states[i]];
    }
    std::vector<Rational> const local = row_times(start, P);
    std::vector<Rational>       out(mu.size(), Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      out[op.states[i]] = local[i];
    }
    Dist nu(mu.parent(), std::move(out));
    detail::verify_cesaro(mu, nu);
    return nu;
  }

  // The eventually periodic sequence A_1 = supp(mu), A_{n+1} = A_n A_1.
  struct SupportCycle {
    std::vector<ElementSet> sets;  // A_1, ..., A_{q+p-1}
    std::size_t             q;     // least index entering the cycle
    std::size_t             p;     // least period

    // A_n for any n >= 1.
    ElementSet const& at(std::size_t n) const {
      if (n >= q) {
        n = q + (n - q) % p;
      }
      return sets.at(n - 1);
    }
  };

  inline SupportCycle support_cycle(Dist const&              mu,
                                    std::size_t              max_steps = 1U << 20,
                                    CancellationToken const& token = {}) {
    ElementSet const first = support(mu);
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    SupportCycle                                                out{{}, 0, 0};
    ElementSet                                                  cur = first;
    for (std::size_t n = 1; n <= max_steps; ++n) {
      token.check();
      auto [it, fresh] = seen.emplace(cur, n);
      if (!fresh) {
        out.q = it->second;
        out.p = n - it->second;
        return out;
      }
      out.sets.push_back(cur);
      cur = product_sets(cur, first);
    }
    throw ParameterOutOfRange("support sequence did not cycle within "
                              + std::to_string(max_steps) + " steps");
  }

  // Least q, p >= 1 with supp(mu^{q+p}) = supp(mu^q).
  inline std::pair<std::size_t, std::size_t> support_period(Dist const& mu) {
    SupportCycle c = support_cycle(mu);
    return {c.q, c.p};
  }

  // Least q, p for the sequence A_n intersected with `kernel`, taken where
  // that intersection is eventually periodic. This is the order of the
  // cyclic quotient G/H; the raw support period can be a proper multiple
  // when transient elements cycle on their own.
  inline std::pair<std::size_t, std::size_t>
  kernel_support_period(SupportCycle const& c, ElementSet const& kernel) {
    auto B = [&](std::size_t n) { return c.at(n) & kernel; };
    std::size_t p = c.p;
    for (std::size_t d = 1; d <= c.p; ++d) {
      if (c.p % d != 0) {
        continue;
      }
      bool ok = true;
      for (std::size_t n = c.q; n < c.q + c.p && ok; ++n) {
        ok = B(n) == B(n + d);
      }
      if (ok) {
        p = d;
        break;
      }
    }
    std::size_t q = c.q;
    while (q > 1 && B(q - 1) == B(q - 1 + p)) {
      --q;
    }
    return {q, p};
  }

  struct PowerCluster {
    std::size_t q;  // least with a^{q+p} = a^q
    std::size_t p;
    std::size_t r;  // the unique r with q <= rp <= q + p - 1
    ElementSet  cluster;
    Element     identity;  // a^{rp}
  };

  // Cluster points {a^q, ..., a^{q+p-1}} of the powers of a, which form a
  // cyclic group with identity a^{rp}; every claim is verified.
  inline PowerCluster element_power_cluster(Semigroup const& s, Element a) {
    std::vector<Element>     pw{a};  // pw[k - 1] = a^k
    std::vector<std::size_t> first(s.order(), 0);
    first[a] = 1;
    std::size_t q = 0, p = 0;
    while (true) {
      Element next = s.product(pw.back(), a);
      if (first[next] != 0) {
        q = first[next];
        p = pw.size() + 1 - q;
        break;
      }
      pw.push_back(next);
      first[next] = pw.size();
    }
    std::size_t const r = (q + p - 1) / p;
    Element const     e = pw.at(r * p - 1);
    ElementSet        C(s);
    for (std::size_t k = q; k < q + p; ++k) {
      C.insert(pw[k - 1]);
    }
    auto fail = [](char const* what) { throw TheoremViolation(what); };
    if (!(q <= r * p && r * p <= q + p - 1)) {
      fail("rp is outside [q, q + p - 1]");
    }
    if (s.product(e, e) != e) {
      fail("a^{rp} is not idempotent");
    }
    if (!is_subsemigroup(C)) {
      fail("cluster set is not closed");
    }
    C.for_each([&](Element x) {
      C.for_each([&](Element y) {
        if (s.product(x, y) != s.product(y, x)) {
          fail("cluster set is not commutative");
        }
      });
    });
    GroupStructure G = group_structure(C);
    if (G.identity() != e) {
      fail("identity of the cluster group is not a^{rp}");
    }
    ElementSet orbit(s);
    Element    x = e;
    for (std::size_t k = 0; k < p; ++k) {
      orbit.insert(x);
      x = s.product(a, x);
    }
    if (!(orbit == C) || orbit.size() != p) {
      fail("cluster set is not {e, ae, ..., a^{p-1}e}");
    }
    return {q, p, r, std::move(C), e};
  }

  struct CesaroRow {
    std::size_t n;
    std::size_t j;
    Rational    distance;  // || mu_n - mu^j * mu_n ||
    Rational    bound;     // 2j / n
    bool        within;
  };

  struct CesaroDiagnostic {
    std::vector<CesaroRow> rows;
    std::vector<Rational>  to_limit;  // || mu_n - nu ||, n = 1..n_max
    bool                   all_within = true;
  };

  // Checks || mu_n - mu^j * mu_n || <= 2j/n exactly for n <= n_max and
  // 1 <= j <= j_max, where mu_n is the n-th Cesaro average.
  inline CesaroDiagnostic cesaro_diagnostic(Dist const&         mu,
                                            std::size_t         n_max,
                                            std::size_t         j_max = 1,
                                            std::optional<Dist> nu = std::nullopt) {
    if (n_max == 0 || j_max == 0) {
      throw ParameterOutOfRange("n_max and j_max must be at least 1");
    }
    if (!nu) {
      nu = cesaro_limit(mu);
    }
    std::vector<Dist> powers{mu};  // powers[k - 1] = mu^k
    for (std::size_t k = 2; k <= j_max; ++k) {
      powers.push_back(convolve(powers.back(), mu));
    }
    CesaroDiagnostic      out;
    std::vector<Rational> sum(mu.size(), Rational(0));
    Dist                  current = mu;
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (n > 1) {
        current = convolve(current, mu);
      }
      for (Element a = 0; a < mu.size(); ++a) {
        sum[a] += current[a];
      }
      std::vector<Rational> avg(sum);
      for (auto& v : avg) {
        v /= n;
      }
      Dist const average(mu.parent(), std::move(avg));
      for (std::size_t j = 1; j <= j_max; ++j) {
        Rational d = tv_distance(average, convolve(powers[j - 1], average));
        Rational b(2 * j, n);
        b.canonicalize();
        bool ok = d <= b;
        out.all_within = out.all_within && ok;
        out.rows.push_back({n, j, std::move(d), std::move(b), ok});
      }
      out.to_limit.push_back(tv_distance(average, *nu));
    }
    return out;
  }

  struct ShadowDecay {
    std::vector<double> distances;  // || mu^{np} - eta ||, n = 1, 2, ...
    bool                monotone = true;
    bool                reached  = false;
  };

  // Floating-point shadow of mu^{np} -> eta. Diagnostic only.
  inline ShadowDecay shadow_power_decay(Dist const& mu,
                                        std::size_t p,
                                        Dist const& eta,
                                        double      tol       = 1e-9,
                                        std::size_t max_iters = 100000) {
    Semigroup const&    s  = mu.parent();
    Dist const          mp = power(mu, p);
    std::vector<double> step(s.order()), x(s.order()), target(s.order());
    for (Element a = 0; a < s.order(); ++a) {
      step[a]   = mp[a].get_d();
      target[a] = eta[a].get_d();
    }
    x = step;
    std::vector<Element> supp;
    for (Element a = 0; a < s.order(); ++a) {
      if (step[a] > 0) {
        supp.push_back(a);
      }
    }
    ShadowDecay out;
    for (std::size_t it = 0; it < max_iters; ++it) {
      double d = 0;
      for (Element a = 0; a < s.order(); ++a) {
        d += std::abs(x[a] - target[a]);
      }
      d /= 2;
      if (!out.distances.empty() && d > out.distances.back() + 1e-12) {
        out.monotone = false;
      }
      out.distances.push_back(d);
      if (d < tol) {
        out.reached = true;
        break;
      }
      std::vector<double> next(s.order(), 0.0);
      for (Element z = 0; z < s.order(); ++z) {
        if (x[z] == 0) {
          continue;
        }
        for (Element y : supp) {
          next[s.product(z, y)] += x[z] * step[y];
        }
      }
      x.swap(next);
    }
    return out;
  }

  // Everything known about the limit behaviour of mu^n.
  struct LimitReport {
    Dist                        nu;       // Cesaro limit
    std::size_t                 q;        // preperiod of the kernel part of supp(mu^n)
    std::size_t                 p;        // its period = |G/H|
    std::size_t                 support_q;  // raw support sequence
    std::size_t                 support_p;
    Dist                        eta;      // identity of the cluster group
    std::vector<Dist>           cluster;  // eta, mu * eta, ..., mu^{p-1} * eta
    ReesDecomposition           rees;     // of supp(nu) at e
    ReesDecomposition           eta_rees;  // of supp(eta) at e
    GroupStructure              H;
    Element                     gamma;
    ElementSet                  generated;  // semigroup generated by supp(mu)
    ElementSet                  kernel;     // its kernel
    std::map<std::string, bool> checks;

    bool all_checks_pass() const {
      for (auto const& [name, ok] : checks) {
        if (!ok) {
          return false;
        }
      }
      return true;
    }
  };

  struct LimitOptions {
    std::size_t       max_support_steps  = 1U << 20;
    bool              throw_on_violation = true;
    CancellationToken token;
  };

  inline LimitReport analyze_limit(Dist const& mu, LimitOptions const& opts = {}) {
    Semigroup const& s = mu.parent();
    auto const&      token = opts.token;

    ElementSet const T = generated_subsemigroup(support(mu));
    Dist const       nu = cesaro_limit(mu, token);
    token.check();
    ElementSet const K     = kernel(T);
    SupportCycle const cyc = support_cycle(mu, opts.max_support_steps, token);
    auto const [q, p]      = kernel_support_period(cyc, K);

    Dist const mu_p = power(mu, p);
    Dist const eta  = cesaro_limit(mu_p, token);
    token.check();

    ElementSet const supp_nu  = support(nu);
    ElementSet const supp_eta = support(eta);
    Element const    e        = idempotents(supp_eta).first();
    ReesDecomposition eta_rees = [&] {
      try {
        return rees_decompose(supp_eta, e);
      } catch (Error const& err) {
        throw TheoremViolation(std::string("supp(eta) not completely simple: ")
                               + err.what());
      }
    }();
    ReesDecomposition rees = [&] {
      try {
        return rees_decompose(supp_nu, e);
      } catch (Error const& err) {
        throw TheoremViolation(std::string("supp(nu) not completely simple: ")
                               + err.what());
      }
    }();
    GroupStructure const& G  = rees.group();
    ElementSet const      E  = s.singleton(e);
    GroupStructure const  H  = group_structure(product_sets(E, supp_eta, E));
    ElementSet const&     Lf = rees.left();
    ElementSet const&     Rf = rees.right();

    std::map<std::string, bool> checks;
    checks["nu_idempotent"]       = convolve(nu, nu) == nu;
    checks["nu_mu_invariant"]     = convolve(mu, nu) == nu && convolve(nu, mu) == nu;
    checks["nu_support_is_kernel"] = supp_nu == K;
    checks["eta_idempotent"]      = convolve(eta, eta) == eta;
    checks["eta_fixed_by_mu_p"]   = convolve(mu_p, eta) == eta && convolve(eta, mu_p) == eta;
    checks["H_is_group_factor_of_eta"] = H.carrier() == eta_rees.group().carrier();
    checks["eta_factors_match_nu"] = eta_rees.left() == Lf && eta_rees.right() == Rf;
    checks["H_normal_in_G"]       = is_normal_subgroup(G, H);
    checks["eta_support_is_LHR"]  = supp_eta == product_sets(Lf, H.carrier(), Rf);
    checks["nu_support_is_LGR"]   = supp_nu == product_sets(Lf, G.carrier(), Rf);

    Marginals const em      = marginals(eta, rees);
    Marginals const em_eta  = marginals(eta, eta_rees);
    checks["marginals_agree"] = em.left == em_eta.left && em.right == em_eta.right;
    Dist const omega_H = haar_uniform(H);
    Dist const omega_G = haar_uniform(G);
    checks["eta_factorization"] = convolve(em.left, omega_H, em.right) == eta;
    checks["nu_factorization"]  = convolve(em.left, omega_G, em.right) == nu;

    // lambda_k = mu^k * eta for k = 0..2p.
    std::vector<Dist> lambda{eta};
    for (std::size_t k = 1; k <= 2 * p; ++k) {
      lambda.push_back(convolve(mu, lambda.back()));
    }
    std::vector<Dist> cluster(lambda.begin(), lambda.begin() + static_cast<std::ptrdiff_t>(p));

    bool periodic = true;
    for (std::size_t k = 0; k + p <= 2 * p; ++k) {
      periodic = periodic && lambda[k + p] == lambda[k];
    }
    checks["cluster_periodic"] = periodic;
    bool distinct = true;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        distinct = distinct && !(cluster[i] == cluster[j]);
      }
    }
    checks["cluster_distinct"] = distinct;
    bool group_law = true;
    for (std::size_t i = 0; i < p && group_law; ++i) {
      for (std::size_t j = 0; j < p && group_law; ++j) {
        Dist const prod = convolve(cluster[i], cluster[j]);
        group_law = prod == cluster[(i + j) % p]
                    && prod == convolve(cluster[j], cluster[i]);
      }
    }
    checks["cluster_cyclic_group"] = group_law;

    ElementSet const gamma_reps
        = product_sets(E, support(convolve(mu, eta)), E);
    Element const gamma = gamma_reps.first();
    checks["gamma_in_G"] = G.contains(gamma);
    ElementSet const gammaH = left_coset(H, gamma);
    bool rep_indep = true;
    gamma_reps.for_each(
        [&](Element g) { rep_indep = rep_indep && left_coset(H, g) == gammaH; });
    checks["gamma_representative_independence"] = rep_indep;

    bool factorized = true, supports = true, image = true;
    std::vector<ElementSet> cosets;
    for (std::size_t k = 0; k <= 2 * p; ++k) {
      Element const    gk    = G.power(gamma, k);
      ElementSet const coset = left_coset(H, gk);
      Dist const       omega_coset = convolve(dirac(s, gk), omega_H);
      factorized = factorized
                   && convolve(em.left, omega_coset, em.right) == lambda[k];
      supports = supports
                 && support(lambda[k]) == product_sets(Lf, coset, Rf);
      // F(lambda_k) read off the support: e supp(lambda_k) e = gamma^k H.
      image = image && product_sets(E, support(lambda[k]), E) == coset;
      if (k < p) {
        cosets.push_back(coset);
      }
    }
    checks["cluster_factorization"] = factorized;
    checks["cluster_supports_are_LgHR"] = supports;
    checks["cluster_image_is_coset"]    = image;
    checks["gamma_power_in_H"]          = H.contains(G.power(gamma, p));
    ElementSet covered(s);
    bool cosets_distinct = true;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      covered |= cosets[i];
      for (std::size_t j = i + 1; j < cosets.size(); ++j) {
        cosets_distinct = cosets_distinct && !(cosets[i] == cosets[j]);
      }
    }
    checks["cosets_partition_G"] = cosets_distinct && covered == G.carrier();
    checks["period_is_quotient_order"] = p * H.order() == G.order();
    checks["support_period_multiple"]  = cyc.p % p == 0;

    std::vector<Rational> avg(s.order(), Rational(0));
    for (auto const& c : cluster) {
      for (Element a = 0; a < s.order(); ++a) {
        avg[a] += c[a] / p;
      }
    }
    checks["nu_is_cluster_average"] = Dist(s, std::move(avg)) == nu;

    LimitReport rep{nu,
                    q,
                    p,
                    cyc.q,
                    cyc.p,
                    eta,
                    std::move(cluster),
                    std::move(rees),
                    std::move(eta_rees),
                    H,
                    gamma,
                    T,
                    K,
                    std::move(checks)};
    if (opts.throw_on_violation) {
      for (auto const& [name, ok] : rep.checks) {
        if (!ok) {
          throw TheoremViolation("limit check failed: " + name);
        }
      }
    }
    return rep;
  }

}  // namespace semiconv

#endif  // SEMICONV_DYNAMICS_HPP_

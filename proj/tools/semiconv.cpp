// semiconv command-line tool.
//
// JSON goes to stdout (or --out); short human-readable summaries go to
// stderr. Exit codes: 0 success, 1 I/O, parse or argument error, 2 invalid
// semigroup table, 3 a theorem check failed.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semiconv/semiconv.hpp"

namespace {

  using namespace semiconv;

  constexpr int kOk             = 0;
  constexpr int kInputError     = 1;
  constexpr int kInvalidTable   = 2;
  constexpr int kTheoremFailure = 3;

  Semigroup load_table(std::string const& path) {
    return semigroup_from_json(parse_json(read_file(path)));
  }

  Dist load_dist(Semigroup const& s, std::string const& path) {
    return dist_from_json(s, parse_json(read_file(path)));
  }

  void emit(Json const& j, std::string const& out) {
    if (out.empty()) {
      std::cout << dump(j);
    } else {
      write_file(out, dump(j));
    }
  }

  std::string join(std::vector<std::string> const& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += (i ? ", " : "") + xs[i];
    }
    return s + "}";
  }

  // Maps library errors onto the exit-code contract.
  int guarded(std::function<int()> const& body) {
    try {
      return body();
    } catch (NonAssociative const& e) {
      std::cerr << "invalid semigroup: " << e.what() << "\n";
      return kInvalidTable;
    } catch (IndexOutOfRange const& e) {
      std::cerr << "invalid semigroup: " << e.what() << "\n";
      return kInvalidTable;
    } catch (MalformedTable const& e) {
      std::cerr << "invalid semigroup: " << e.what() << "\n";
      return kInvalidTable;
    } catch (DuplicateLabel const& e) {
      std::cerr << "invalid semigroup: " << e.what() << "\n";
      return kInvalidTable;
    } catch (TheoremViolation const& e) {
      std::cerr << "theorem check failed: " << e.what() << "\n";
      return kTheoremFailure;
    } catch (VerificationFailed const& e) {
      std::cerr << "theorem check failed: " << e.what() << "\n";
      return kTheoremFailure;
    } catch (Error const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    } catch (std::exception const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups and convolution powers of measures on them"};
  app.require_subcommand(1);

  std::string table, mu_path, nu_path, label, out, at, corpus = "default", spec;
  std::size_t n = 1, max_power = 64, threads = 0;
  std::uint64_t seed = 1;
  bool diagnostic = false, timings = false;
  std::vector<std::string> inject;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check that a Cayley table is a semigroup");
  validate->add_option("table", table, "Cayley table JSON")->required();
  validate->callback([&] {
    action = [&] {
      Semigroup s = load_table(table);
      std::cerr << "valid semigroup of order " << s.order() << "\n";
      emit({{"valid", true}, {"order", s.order()}}, out);
      return kOk;
    };
  });

  auto* analyze = app.add_subcommand("analyze", "Idempotents, minimal ideals, kernel and its Rees decomposition");
  analyze->add_option("table", table, "Cayley table JSON")->required();
  analyze->add_option("--out", out, "Write JSON here instead of stdout");
  analyze->callback([&] {
    action = [&] {
      Semigroup s = load_table(table);
      Json      r = structure_report(s);
      std::cerr << "order " << s.order() << "\n"
                << "idempotents " << join(r["idempotents"].get<std::vector<std::string>>()) << "\n"
                << "kernel " << join(r["kernel"].get<std::vector<std::string>>()) << "\n"
                << "simple " << (r["is_simple"].get<bool>() ? "yes" : "no") << "\n"
                << "kernel factors |L|,|G|,|R| = " << r["kernel_rees"]["sizes"].dump()
                << "\n";
      emit(r, out);
      return kOk;
    };
  });

  auto* rees = app.add_subcommand("rees", "Rees decomposition of the kernel");
  rees->add_option("table", table, "Cayley table JSON")->required();
  rees->add_option("--at", at, "Base idempotent (label); default is the least one");
  rees->add_option("--out", out, "Write JSON here instead of stdout");
  rees->callback([&] {
    action = [&] {
      Semigroup         s = load_table(table);
      ElementSet const  K = kernel(s);
      ReesDecomposition d = rees_decompose(K);
      if (!at.empty()) {
        d = rebase(d, s.element(at));
      }
      std::cerr << "base " << s.label(d.base()) << ", |L|,|G|,|R| = "
                << d.left().size() << "," << d.group().order() << ","
                << d.right().size() << "\n";
      emit(to_json(d), out);
      return kOk;
    };
  });

  auto* conv = app.add_subcommand("conv", "Convolution mu * nu");
  conv->add_option("table", table, "Cayley table JSON")->required();
  conv->add_option("mu", mu_path, "Distribution JSON")->required();
  conv->add_option("nu", nu_path, "Distribution JSON")->required();
  conv->add_option("--out", out, "Write JSON here instead of stdout");
  conv->callback([&] {
    action = [&] {
      Semigroup s = load_table(table);
      emit(to_json(convolve(load_dist(s, mu_path), load_dist(s, nu_path))), out);
      return kOk;
    };
  });

  auto* power_cmd = app.add_subcommand("power", "Convolution power mu^n");
  power_cmd->add_option("table", table, "Cayley table JSON")->required();
  power_cmd->add_option("mu", mu_path, "Distribution JSON")->required();
  power_cmd->add_option("n", n, "Exponent, at least 1")->required();
  power_cmd->add_option("--out", out, "Write JSON here instead of stdout");
  power_cmd->callback([&] {
    action = [&] {
      Semigroup s = load_table(table);
      emit(to_json(power(load_dist(s, mu_path), n)), out);
      return kOk;
    };
  });

  auto* limit = app.add_subcommand("limit", "Cesaro limit, cluster group and factorization of mu^n");
  limit->add_option("table", table, "Cayley table JSON")->required();
  limit->add_option("mu", mu_path, "Distribution JSON")->required();
  limit->add_option("--max-power", max_power, "Largest n in the diagnostic series");
  limit->add_flag("--emit-diagnostic", diagnostic, "Add the Cesaro and decay series");
  limit->add_option("--out", out, "Write JSON here instead of stdout");
  limit->callback([&] {
    action = [&] {
      Semigroup    s  = load_table(table);
      Dist const   mu = load_dist(s, mu_path);
      LimitOptions opts;
      opts.throw_on_violation = false;
      LimitReport r = analyze_limit(mu, opts);
      Json        j = to_json(r);
      if (diagnostic) {
        ShadowDecay sh = shadow_power_decay(mu, r.p, r.eta);
        j["diagnostic"] = {{"cesaro", to_json(cesaro_diagnostic(mu, max_power, 1, r.nu))},
                           {"shadow_decay", sh.distances},
                           {"shadow_monotone", sh.monotone},
                           {"shadow_reached", sh.reached}};
      }
      std::cerr << "p = " << r.p << ", q = " << r.q << ", gamma = " << s.label(r.gamma)
                << ", checks " << (r.all_checks_pass() ? "pass" : "FAIL") << "\n";
      emit(j, out);
      return r.all_checks_pass() ? kOk : kTheoremFailure;
    };
  });

  auto* cluster = app.add_subcommand("cluster-element", "Cluster group of the powers of one element");
  cluster->add_option("table", table, "Cayley table JSON")->required();
  cluster->add_option("label", label, "Element label")->required();
  cluster->add_option("--out", out, "Write JSON here instead of stdout");
  cluster->callback([&] {
    action = [&] {
      Semigroup    s = load_table(table);
      PowerCluster c = element_power_cluster(s, s.element(label));
      std::cerr << "q = " << c.q << ", p = " << c.p << ", e = " << s.label(c.identity) << "\n";
      emit(to_json(c), out);
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run every theorem check over a corpus");
  verify->add_option("--corpus", corpus, "default or extended");
  verify->add_option("--seed", seed, "Seed for randomized instances and measures");
  verify->add_option("--out", out, "Write JSON here instead of stdout");
  verify->add_option("--inject", inject, "Extra Cayley tables, taken without the associativity check");
  verify->add_option("--threads", threads, "Worker threads (0: one per core)");
  verify->add_flag("--timings", timings, "Include wall-clock seconds per check in the JSON");
  verify->callback([&] {
    action = [&] {
      SuiteOptions opts;
      opts.corpus  = corpus;
      opts.seed    = seed;
      opts.threads = static_cast<unsigned>(threads);
      for (auto const& path : inject) {
        opts.extra.push_back(
            {"injected:" + path, semigroup_from_json_unchecked(parse_json(read_file(path)))});
      }
      SuiteResult r = run_suite(opts);
      for (auto const& c : r.checks) {
        std::cerr << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.passed << " passed, "
                  << c.skipped << " skipped)";
        if (timings) {
          std::cerr << " " << c.seconds << "s";
        }
        std::cerr << "\n";
        for (auto const& w : c.failures) {
          std::cerr << "  " << w.instance << ": " << w.detail << "\n";
        }
      }
      emit(to_json(r, timings), out);
      return r.all_pass() ? kOk : kTheoremFailure;
    };
  });

  auto* gen = app.add_subcommand("gen", "Build a corpus semigroup and print its Cayley table");
  gen->add_option("spec", spec, "CorpusSpec JSON file, or inline JSON")->required();
  gen->add_option("--out", out, "Write JSON here instead of stdout");
  gen->callback([&] {
    action = [&] {
      std::string text = !spec.empty() && spec.front() == '{' ? spec : read_file(spec);
      emit(to_json(build(corpus_spec_from_json(parse_json(text)))), out);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  return guarded(action);
}

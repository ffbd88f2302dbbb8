// JSON encodings. Rationals always travel as "p/q" strings; element sets
// are label arrays in element-index order.

#ifndef SEMICONV_IO_HPP_
#define SEMICONV_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semiconv/dist.hpp"
#include "semiconv/dynamics.hpp"
#include "semiconv/error.hpp"
#include "semiconv/generators.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/rational.hpp"
#include "semiconv/rees.hpp"
#include "semiconv/semigroup.hpp"

namespace semiconv {

  using Json = nlohmann::json;

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
      throw IoError("cannot read " + path);
    }
    return buf.str();
  }

  inline void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw IoError("cannot write " + path);
    }
  }

  inline Json parse_json(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw ParseError(e.what());
    }
  }

  // Two-space indent and a trailing newline.
  inline std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

  // ---- semigroups ---------------------------------------------------------

  inline Json to_json(Semigroup const& s) {
    return {{"labels", s.labels()}, {"table", s.table()}};
  }

  // Labels may be strings or integers; integers are converted to their
  // decimal text.
  inline std::pair<std::vector<std::string>, Semigroup::Table>
  cayley_fields(Json const& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("table")) {
      throw ParseError("a Cayley table needs \"labels\" and \"table\"");
    }
    Json const& jl = j.at("labels");
    Json const& jt = j.at("table");
    if (!jl.is_array() || !jt.is_array()) {
      throw ParseError("\"labels\" and \"table\" must be arrays");
    }
    std::vector<std::string> labels;
    for (auto const& l : jl) {
      if (l.is_string()) {
        labels.push_back(l.get<std::string>());
      } else if (l.is_number_integer()) {
        labels.push_back(std::to_string(l.get<long long>()));
      } else {
        throw ParseError("labels must be strings or integers");
      }
    }
    Semigroup::Table table;
    for (auto const& row : jt) {
      if (!row.is_array()) {
        throw ParseError("table rows must be arrays");
      }
      std::vector<long long> r;
      for (auto const& v : row) {
        if (!v.is_number_integer()) {
          throw ParseError("table entries must be integers");
        }
        r.push_back(v.get<long long>());
      }
      table.push_back(std::move(r));
    }
    return {std::move(labels), std::move(table)};
  }

  inline Semigroup semigroup_from_json(Json const& j,
                                       std::size_t max_order = kDefaultOrderCap) {
    auto [labels, table] = cayley_fields(j);
    return validate_cayley(std::move(labels), table, max_order);
  }

  // Range-checked but associativity is taken on trust.
  inline Semigroup semigroup_from_json_unchecked(Json const& j) {
    auto [labels, table] = cayley_fields(j);
    return Semigroup::unchecked(std::move(labels), table, kDefaultOrderCap);
  }

  inline Json to_json(ElementSet const& A) {
    return A.labels();
  }

  // ---- distributions ------------------------------------------------------

  inline Json to_json(Dist const& mu) {
    Json probs = Json::object();
    for (Element a = 0; a < mu.size(); ++a) {
      if (sgn(mu[a]) != 0) {
        probs[mu.parent().label(a)] = to_string(mu[a]);
      }
    }
    return {{"probs", probs}};
  }

  // Values are "p/q" strings or integers. A positive total other than one
  // is normalized; negative entries and a zero total are rejected.
  inline Dist dist_from_json(Semigroup const& s, Json const& j) {
    if (!j.is_object() || !j.contains("probs") || !j.at("probs").is_object()) {
      throw ParseError("a distribution needs a \"probs\" object");
    }
    std::vector<Rational> p(s.order(), Rational(0));
    Rational              total = 0;
    for (auto const& [label, v] : j.at("probs").items()) {
      Element const a = s.element(label);
      Rational      r;
      if (v.is_string()) {
        r = parse_rational(v.get<std::string>());
      } else if (v.is_number_integer()) {
        r = Rational(v.get<long>());
      } else {
        throw ParseError("probability of " + label + " must be a \"p/q\" string");
      }
      if (r < 0) {
        throw InvalidDist("negative probability for " + label);
      }
      p[a] += r;
      total += r;
    }
    if (sgn(total) == 0) {
      throw InvalidDist("total mass is zero");
    }
    for (auto& v : p) {
      v /= total;
    }
    return Dist(s, std::move(p));
  }

  // ---- groups and decompositions ------------------------------------------

  inline Json to_json(GroupStructure const& G) {
    Semigroup const& s   = G.parent();
    Json             inv = Json::array();
    G.carrier().for_each([&](Element g) {
      inv.push_back({s.label(g), s.label(G.inverse(g))});
    });
    return {{"carrier", to_json(G.carrier())},
            {"identity", s.label(G.identity())},
            {"inverse", inv}};
  }

  inline Json to_json(ReesDecomposition const& d) {
    Semigroup const& s = d.parent();
    return {{"base", s.label(d.base())},
            {"L", to_json(d.left())},
            {"G", to_json(d.group())},
            {"R", to_json(d.right())},
            {"sizes", {d.left().size(), d.group().order(), d.right().size()}}};
  }

  inline Json to_json(PowerCluster const& c) {
    Semigroup const& s = c.cluster.parent();
    return {{"q", c.q},
            {"p", c.p},
            {"r", c.r},
            {"cluster", to_json(c.cluster)},
            {"identity", s.label(c.identity)}};
  }

  inline Json to_json(LimitReport const& r) {
    Json cluster = Json::array();
    for (auto const& c : r.cluster) {
      cluster.push_back(to_json(c));
    }
    return {{"nu", to_json(r.nu)},
            {"q", r.q},
            {"p", r.p},
            {"support_q", r.support_q},
            {"support_p", r.support_p},
            {"eta", to_json(r.eta)},
            {"cluster", cluster},
            {"rees", to_json(r.rees)},
            {"H", to_json(r.H)},
            {"gamma", r.nu.parent().label(r.gamma)},
            {"generated", to_json(r.generated)},
            {"kernel", to_json(r.kernel)},
            {"checks", r.checks}};
  }

  inline Json to_json(CesaroDiagnostic const& d) {
    Json rows = Json::array();
    for (auto const& row : d.rows) {
      rows.push_back({{"n", row.n},
                      {"j", row.j},
                      {"distance", to_string(row.distance)},
                      {"bound", to_string(row.bound)},
                      {"within", row.within}});
    }
    Json to_limit = Json::array();
    for (auto const& v : d.to_limit) {
      to_limit.push_back(to_string(v));
    }
    return {{"rows", rows}, {"to_limit", to_limit}, {"all_within", d.all_within}};
  }

  // Order, idempotents, minimal one-sided ideals, kernel and its Rees
  // decomposition at the default base.
  inline Json structure_report(Semigroup const& s) {
    Json left = Json::array(), right = Json::array();
    for (auto const& I : minimal_left_ideals(s)) {
      left.push_back(to_json(I));
    }
    for (auto const& I : minimal_right_ideals(s)) {
      right.push_back(to_json(I));
    }
    ElementSet const K = kernel(s);
    return {{"order", s.order()},
            {"idempotents", to_json(idempotents(s))},
            {"minimal_left_ideals", left},
            {"minimal_right_ideals", right},
            {"kernel", to_json(K)},
            {"is_simple", is_simple(s)},
            {"kernel_rees", to_json(rees_decompose(K))}};
  }

  // ---- corpus specs -------------------------------------------------------

  inline Json to_json(CorpusSpec const& c) {
    Json j = {{"kind", kind_name(c.kind)}, {"params", c.params}, {"seed", c.seed}};
    if (!c.factors.empty()) {
      Json f = Json::array();
      for (auto const& x : c.factors) {
        f.push_back(to_json(x));
      }
      j["factors"] = f;
    }
    if (c.sandwich) {
      j["sandwich"] = *c.sandwich;
    }
    return j;
  }

  inline CorpusSpec corpus_spec_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
      throw ParseError("a corpus spec needs a \"kind\" string");
    }
    CorpusSpec c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    try {
      if (j.contains("params")) {
        c.params = j.at("params").get<std::vector<long long>>();
      }
      if (j.contains("seed")) {
        c.seed = j.at("seed").get<std::uint64_t>();
      }
      if (j.contains("factors")) {
        for (auto const& f : j.at("factors")) {
          c.factors.push_back(corpus_spec_from_json(f));
        }
      }
      if (j.contains("sandwich")) {
        c.sandwich = j.at("sandwich").get<std::vector<std::vector<long long>>>();
      }
    } catch (Json::exception const& e) {
      throw ParseError(std::string("corpus spec: ") + e.what());
    }
    return c;
  }

}  // namespace semiconv

#endif  // SEMICONV_IO_HPP_

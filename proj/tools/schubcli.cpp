// Command-line front end: Bruhat graphs, tangent weights, Peterson
// translates, B2-pairs and the smooth/singular locus of Schubert varieties.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "schub/format.hpp"
#include "schub/oracles.hpp"
#include "schub/smoothness.hpp"

using namespace schub;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string format = "text";
  bool allow_g2 = false;
  unsigned seed = 0;
  int jobs = 1;
  std::string cache_dir;
};

RootSystem make_system(const std::string& spec, const Options& opt) {
  auto [family, rank] = parse_system(spec);
  if (family == Family::G2 && !opt.allow_g2)
    throw std::invalid_argument("G2 requires --allow-g2 (main theorems exclude G2 factors)");
  return RootSystem::build(family, rank);
}

void require_not_g2(const RootSystem& rs, const std::string& cmd) {
  if (rs.is_g2())
    throw std::invalid_argument("'" + cmd + "' is not available in G2");
}

WeylElement parse_element(const RootSystem& rs, const std::string& word) {
  return from_word(rs, parse_word(word, rs.rank()));
}

// Interval cache, keyed by system + w hash; stores canonical words as JSON.
BruhatGraph make_graph(const RootSystem& rs, const WeylElement& w, const Options& opt) {
  if (opt.cache_dir.empty()) return BruhatGraph(rs, w);
  std::ostringstream keysrc;
  keysrc << family_name(rs.family()) << rs.rank() << ':'
         << render_word(canonical_word(rs, w));
  std::string key = std::to_string(std::hash<std::string>{}(keysrc.str()));
  fs::path file = fs::path(opt.cache_dir) / ("interval-" + key + ".json");

  if (fs::exists(file)) {
    std::ifstream in(file);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("key", "") == keysrc.str()) {
      std::vector<WeylElement> interval;
      for (const auto& word : j.at("words"))
        interval.push_back(parse_element(rs, word.get<std::string>()));
      return BruhatGraph(rs, w, interval);
    }
  }
  BruhatGraph g(rs, w);
  fs::create_directories(opt.cache_dir);
  nlohmann::json j;
  j["schema"] = "schub-interval-cache/1";
  j["key"] = keysrc.str();
  auto words = nlohmann::json::array();
  for (const WeylElement& x : g.vertices())
    words.push_back(render_word(canonical_word(rs, x)));
  j["words"] = words;
  std::ofstream(file) << j.dump() << '\n';
  return g;
}

std::string weights_json(const RootSystem& rs, const std::string& kind,
                         const WeylElement& x, const std::set<Root>& ws) {
  nlohmann::json j;
  j["schema"] = "schub-weights/1";
  j["kind"] = kind;
  j["x"] = render_word(canonical_word(rs, x));
  auto arr = nlohmann::json::array();
  for (const Root& r : ws) arr.push_back(render_root(r));
  j["weights"] = arr;
  return j.dump(2);
}

void print_weights(const RootSystem& rs, const Options& opt, const std::string& kind,
                   const WeylElement& x, const std::set<Root>& ws) {
  if (opt.format == "json") {
    std::cout << weights_json(rs, kind, x, ws) << '\n';
    return;
  }
  std::cout << kind << " at " << render_word(canonical_word(rs, x)) << " ("
            << ws.size() << " weights):";
  for (const Root& r : ws) std::cout << ' ' << render_root(r);
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Schubert variety smoothness via Bruhat graphs and Peterson translates"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--allow-g2", opt.allow_g2,
               "Permit G2 (roots/graph/peterson/theta upper bound only)");
  app.add_option("--seed", opt.seed, "Seed for randomized witness-curve choice");
  app.add_option("--jobs", opt.jobs, "Worker count for verify scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", opt.cache_dir, "Cache directory for memoized intervals");

  std::string sys_spec, w_word, x_word, mu_text;
  bool dot = false, exhaustive = false;

  auto* roots = app.add_subcommand("roots", "List the roots of a system");
  roots->add_option("system", sys_spec)->required();

  auto* interval = app.add_subcommand("interval", "Enumerate the Bruhat interval [e, w]");
  interval->add_option("system", sys_spec)->required();
  interval->add_option("w", w_word)->required();

  auto* graph = app.add_subcommand("graph", "Bruhat graph of X(w)");
  graph->add_option("system", sys_spec)->required();
  graph->add_option("w", w_word)->required();
  graph->add_flag("--dot", dot, "Emit DOT instead of JSON");

  auto* curves = app.add_subcommand("curves", "T-curves at a fixed point");
  curves->add_option("system", sys_spec)->required();
  curves->add_option("w", w_word)->required();
  curves->add_option("x", x_word)->required();

  auto* te = app.add_subcommand("te", "Weights of TE(X, x)");
  te->add_option("system", sys_spec)->required();
  te->add_option("w", w_word)->required();
  te->add_option("x", x_word)->required();

  auto* isotropy = app.add_subcommand("isotropy", "Isotropy submodule of TE(X, x)");
  isotropy->add_option("system", sys_spec)->required();
  isotropy->add_option("w", w_word)->required();
  isotropy->add_option("x", x_word)->required();

  auto* peterson = app.add_subcommand("peterson", "Peterson translate along U_{-mu} x");
  peterson->add_option("system", sys_spec)->required();
  peterson->add_option("w", w_word)->required();
  peterson->add_option("x", x_word)->required();
  peterson->add_option("mu", mu_text)->required();

  auto* theta = app.add_subcommand("theta", "Span of the tangent cone at x");
  theta->add_option("system", sys_spec)->required();
  theta->add_option("w", w_word)->required();
  theta->add_option("x", x_word)->required();

  auto* b2 = app.add_subcommand("b2pairs", "Orthogonal B2-pairs at x");
  b2->add_option("system", sys_spec)->required();
  b2->add_option("w", w_word)->required();
  b2->add_option("x", x_word)->required();

  auto* smooth = app.add_subcommand("smooth", "Smooth/singular locus of X(w)");
  smooth->add_option("system", sys_spec)->required();
  smooth->add_option("w", w_word)->required();
  smooth->add_option("x", x_word, "Optional single fixed point");

  auto* mult = app.add_subcommand("mult", "Multiplicity at a maximal singularity");
  mult->add_option("system", sys_spec)->required();
  mult->add_option("w", w_word)->required();
  mult->add_option("x", x_word)->required();
  mult->add_option("mu", mu_text)->required();

  auto* verify = app.add_subcommand("verify", "Oracle scans");
  verify->add_option("system", sys_spec)->required();
  verify->add_flag("--exhaustive", exhaustive, "Full singular-locus scan over W");

  CLI11_PARSE(app, argc, argv);

  RootSystem rs = make_system(sys_spec, opt);

  if (roots->parsed()) {
    if (opt.format == "json") {
      std::cout << rs.to_json() << '\n';
    } else {
      std::cout << family_name(rs.family()) << rs.rank() << ": "
                << rs.all_roots().size() << " roots\n";
      for (const Root& r : rs.all_roots())
        std::cout << "  " << render_root(r) << (rs.is_long(r) ? "  (long)" : "  (short)")
                  << '\n';
    }
    return 0;
  }

  if (verify->parsed()) {
    require_not_g2(rs, "verify");
    // Bruhat-order oracle over all pairs, always.
    BruhatOrderTable table(rs);
    long long mismatches = 0;
    for (const WeylElement& x : table.elements())
      for (const WeylElement& w : table.elements())
        if (bruhat_leq(rs, x, w) != table.leq(x, w)) ++mismatches;
    // In JSON mode keep stdout a single parseable document.
    (opt.format == "json" ? std::cerr : std::cout)
        << "bruhat order: " << table.elements().size() << " elements, "
        << mismatches << " mismatches vs cover-digraph oracle\n";
    int rc = mismatches == 0 ? 0 : 1;
    if (exhaustive) {
      ScanResult scan = exhaustive_verify(rs.family(), rs.rank(), opt.jobs);
      if (opt.format == "json")
        std::cout << scan.to_json() << '\n';
      else
        std::cout << scan.summary() << '\n';
      if (!scan.discrepancies.empty()) rc = 1;
    }
    return rc;
  }

  WeylElement w = parse_element(rs, w_word);

  if (interval->parsed()) {
    require_not_g2(rs, "interval");
    auto members = enumerate_interval(rs, w);
    if (opt.format == "json") {
      nlohmann::json j;
      j["schema"] = "schub-interval/1";
      j["w"] = render_word(canonical_word(rs, w));
      auto arr = nlohmann::json::array();
      for (const WeylElement& x : members)
        arr.push_back(render_word(canonical_word(rs, x)));
      j["members"] = arr;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "[e, " << render_word(canonical_word(rs, w)) << "]: "
                << members.size() << " elements\n";
      for (const WeylElement& x : members)
        std::cout << "  " << render_word(canonical_word(rs, x)) << '\n';
    }
    return 0;
  }

  BruhatGraph g = make_graph(rs, w, opt);

  if (graph->parsed()) {
    if (dot || opt.format == "dot")
      std::cout << g.export_dot();
    else
      std::cout << g.export_json() << '\n';
    return 0;
  }

  // Singular-locus report, shared by the commands that need certification.
  auto report = [&]() -> SmoothnessReport { return singular_locus(g, opt.seed); };

  WeylElement x = x_word.empty() ? w : parse_element(rs, x_word);

  if (curves->parsed()) {
    require_not_g2(rs, "curves");
    auto recs = g.curves_at(x);
    if (opt.format == "json") {
      nlohmann::json j;
      j["schema"] = "schub-curves/1";
      j["x"] = render_word(canonical_word(rs, x));
      auto arr = nlohmann::json::array();
      for (const CurveRecord& c : recs)
        arr.push_back({{"gamma", render_root(c.gamma_pos)},
                       {"tangent_weight", render_root(c.tangent_weight)},
                       {"direction", c.up ? "UP" : "DOWN"},
                       {"length_class", c.long_curve ? "long" : "short"},
                       {"other", render_word(canonical_word(rs, c.other))}});
      j["curves"] = arr;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << recs.size() << " curves at " << render_word(canonical_word(rs, x))
                << '\n';
      for (const CurveRecord& c : recs)
        std::cout << "  gamma=" << render_root(c.gamma_pos)
                  << " weight=" << render_root(c.tangent_weight)
                  << (c.up ? " UP to " : " DOWN to ")
                  << render_word(canonical_word(rs, c.other))
                  << (c.long_curve ? " (long)" : " (short)") << '\n';
    }
    return 0;
  }

  if (te->parsed()) {
    require_not_g2(rs, "te");
    print_weights(rs, opt, "TE", x, te_module(g, x).weights);
    return 0;
  }

  if (isotropy->parsed()) {
    require_not_g2(rs, "isotropy");
    WeightModule m = isotropy_closure(rs, x, te_module(g, x));
    print_weights(rs, opt, "isotropy", x, m.weights);
    return 0;
  }

  if (peterson->parsed()) {
    Root mu = parse_root(mu_text, rs.rank());
    bool far_smooth;
    if (rs.is_g2()) {
      // No smoothness driver in G2; peterson_translate still checks that the
      // far endpoint has the smooth-point curve count.
      far_smooth = true;
    } else {
      SmoothnessReport rep = report();
      WeylElement y = compose(reflection(rs, mu), x);
      far_smooth = g.contains(y) &&
                   rep.verdicts.at(y).verdict == Verdict::SMOOTH;
    }
    WeightModule tau = peterson_translate(g, x, mu, far_smooth);
    std::string kind = "tau[" + render_root(mu) + "]";
    if (rs.is_short(mu)) kind += " (short curve)";
    print_weights(rs, opt, kind, x, tau.weights);
    return 0;
  }

  if (theta->parsed()) {
    bool certified = false;
    if (!rs.is_g2()) {
      SmoothnessReport rep = report();
      certified = rep.verdicts.at(x).verdict == Verdict::SMOOTH ||
                  rep.maximal_singularities.count(x) > 0;
    }
    ThetaResult res = theta_span(g, x, certified);
    print_weights(rs, opt, certified ? "theta" : "theta-upper-bound", x,
                  res.weights.weights);
    return 0;
  }

  if (b2->parsed()) {
    require_not_g2(rs, "b2pairs");
    auto pairs = b2_pairs(g, x);
    if (opt.format == "json") {
      nlohmann::json j;
      j["schema"] = "schub-b2pairs/1";
      j["x"] = render_word(canonical_word(rs, x));
      auto arr = nlohmann::json::array();
      for (const B2Pair& p : pairs)
        arr.push_back({{"mu", render_root(p.mu)},
                       {"phi", render_root(p.phi)},
                       {"gamma", render_root(p.gamma)},
                       {"alpha", render_root(p.basis.short_simple)},
                       {"beta", render_root(p.basis.long_simple)}});
      j["pairs"] = arr;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << pairs.size() << " B2-pairs at " << render_word(canonical_word(rs, x))
                << '\n';
      for (const B2Pair& p : pairs)
        std::cout << "  {" << render_root(p.mu) << ", " << render_root(p.phi)
                  << "}  gamma=" << render_root(p.gamma) << '\n';
    }
    return 0;
  }

  if (smooth->parsed()) {
    require_not_g2(rs, "smooth");
    SmoothnessReport rep = report();
    if (opt.format == "json") {
      std::cout << report_to_json(g, rep) << '\n';
    } else if (!x_word.empty()) {
      const PointReport& pr = rep.verdicts.at(x);
      std::cout << render_word(canonical_word(rs, x)) << ": "
                << (pr.verdict == Verdict::SMOOTH ? "SMOOTH" : "SINGULAR");
      if (pr.verdict == Verdict::SINGULAR)
        std::cout << " (failed: " << failed_condition_name(pr.failed) << ")";
      if (pr.offending_pair)
        std::cout << " pair {" << render_root(pr.offending_pair->mu) << ", "
                  << render_root(pr.offending_pair->phi) << "} gamma="
                  << render_root(pr.offending_pair->gamma);
      if (pr.witness)
        std::cout << " witness gamma=" << render_root(pr.witness->gamma_pos);
      std::cout << '\n';
    } else {
      std::cout << "X(" << render_word(canonical_word(rs, w)) << ") is "
                << (rep.globally_smooth() ? "smooth" : "singular") << '\n';
      for (const WeylElement& ms : rep.maximal_singularities) {
        std::cout << "  maximal singularity: " << render_word(canonical_word(rs, ms));
        auto it = rep.multiplicities.find(ms);
        if (it != rep.multiplicities.end())
          std::cout << "  multiplicity " << it->second;
        std::cout << '\n';
      }
    }
    if (!x_word.empty())
      return rep.verdicts.at(x).verdict == Verdict::SMOOTH ? 0 : 1;
    return rep.globally_smooth() ? 0 : 1;
  }

  if (mult->parsed()) {
    require_not_g2(rs, "mult");
    Root mu = parse_root(mu_text, rs.rank());
    SmoothnessReport rep = report();
    bool x_smooth = rep.verdicts.at(x).verdict == Verdict::SMOOTH;
    bool far_smooth = true;
    if (!x_smooth) {
      WeylElement y = compose(reflection(rs, mu), x);
      far_smooth = g.contains(y) && rep.verdicts.at(y).verdict == Verdict::SMOOTH;
    }
    long long m = multiplicity_at(g, x, mu, x_smooth, far_smooth);
    if (opt.format == "json")
      std::cout << nlohmann::json{{"schema", "schub-mult/1"},
                                  {"x", render_word(canonical_word(rs, x))},
                                  {"mu", render_root(mu)},
                                  {"multiplicity", m}}
                       .dump(2)
                << '\n';
    else
      std::cout << "multiplicity at " << render_word(canonical_word(rs, x)) << ": "
                << m << '\n';
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

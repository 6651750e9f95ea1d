#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "qmap/anquiver.hpp"
#include "qmap/macdonald.hpp"
#include "qmap/verify.hpp"
#include "qmap/vertex.hpp"

using namespace qmap;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2 };

struct Global {
  std::string hbar, q;
  std::uint64_t seed = 1;
  int random_points = 0;
  bool json = false;
  bool timing = false;
  std::string output;
};

int max_hook(const Partition& la) { return la.empty() ? 0 : la.part(1) + la.length() - 1; }

// --hbar/--q if given (both or neither), otherwise `fallback`; then any seeded
// random points. Every point passes the pole guard for `max_power`.
std::vector<std::pair<Rational, Rational>> resolve_points(const Global& g, int max_power,
                                                          std::vector<std::pair<Rational, Rational>> fallback) {
  if (g.hbar.empty() != g.q.empty()) throw ConfigError("--hbar and --q must be given together");
  std::vector<std::pair<Rational, Rational>> pts;
  if (!g.hbar.empty()) {
    pts.emplace_back(Rational::parse(g.hbar), Rational::parse(g.q));
  } else if (g.random_points == 0) {
    pts = std::move(fallback);
  }
  for (auto& p : random_points(g.seed, g.random_points, max_power)) pts.push_back(std::move(p));
  for (const auto& [h, q] : pts) check_point(h, q, max_power);
  return pts;
}

void emit(const Global& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.output);
  if (!f) throw ConfigError("cannot open output file '" + g.output + "'");
  f << text;
}

FixedPoint load_fixed_point(const std::string& path, const std::string& lambda) {
  if (!path.empty() && !lambda.empty()) throw ConfigError("give either --fixed-point or --lambda");
  if (path.empty()) return single_unit_point(Partition::parse(lambda));
  nlohmann::json j;
  try {
    if (path == "-") {
      j = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream f(path);
      if (!f) throw ConfigError("cannot read fixed point file '" + path + "'");
      j = nlohmann::json::parse(f);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("fixed point JSON: ") + e.what());
  }
  auto p = FixedPoint::from_json(j);
  require_valid(p);
  return p;
}

std::vector<int> parse_order(const std::string& text, std::size_t units) {
  std::vector<int> order;
  if (text.empty()) {
    for (std::size_t k = 0; k < units; ++k) order.push_back(static_cast<int>(k));
    return order;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      order.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ConfigError("bad chamber entry '" + tok + "'");
    }
  }
  return order;
}

template <ExactField F>
TruncatedSeries<F> run_route(const Scalars<F>& s, const std::string& route, const VertexRequest& req) {
  if (route == "product") return zfun_product(s, req);
  if (route == "sum") return zfun_sum(s, req);
  if (route == "raw") return zfun_raw_sum(s, req);
  return matrix_element(s, req.lambda, req.cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact vertex functions of zero-dimensional A-type quiver varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--hbar", g.hbar, "hbar as a rational string, e.g. 2/3");
  app.add_option("--q", g.q, "q as a rational string");
  app.add_option("--seed", g.seed, "seed for random (hbar, q) points");
  app.add_option("--random-points", g.random_points, "number of seeded random points to add")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "machine-readable output (verify)");
  app.add_flag("--timing", g.timing, "include wall-clock seconds in verify reports");
  app.add_option("-o,--output", g.output, "write to this file instead of stdout");

  std::string lambda, route = "product", mode = "specialized";
  int degree = -1;
  auto* zfun = app.add_subcommand("zfun", "print the truncated vertex function of a partition");
  zfun->add_option("--lambda", lambda, "comma-separated parts; empty for the empty partition")->required();
  zfun->add_option("--degree", degree, "total z-degree cap")->required()->check(CLI::NonNegativeNumber);
  zfun->add_option("--route", route)->check(CLI::IsMember({"product", "sum", "raw", "macdonald"}));
  zfun->add_option("--mode", mode)->check(CLI::IsMember({"specialized", "symbolic"}));

  std::string suite;
  std::optional<int> v_degree, v_max_size;
  int max_entry = 3, order = 5, max_boxes = 4, spot_degree = 3, raw_degree = 3;
  std::vector<std::string> spots;
  auto* verify = app.add_subcommand("verify", "run a cross-route verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--degree", v_degree, "degree cap (hook: 4, anquiver: 2)");
  verify->add_option("--max-size", v_max_size, "largest |lambda| (dimension: 8, macdonald: 4, otherwise 5)");
  verify->add_option("--max-entry", max_entry, "largest part in interlacing tuples (lemma)");
  verify->add_option("--order", order, "order in w/z (commutation)");
  verify->add_option("--max-boxes", max_boxes, "box bound for two-unit fixed points (anquiver, mirror)");
  verify->add_option("--raw-degree", raw_degree, "highest cap for the unreduced lattice sum (hook)");
  verify->add_option("--spot", spots, "extra partitions for the hook suite");
  verify->add_option("--spot-degree", spot_degree, "degree cap for --spot partitions");

  std::string fp_path, fp_lambda, chamber;
  bool oracle = false;
  int an_degree = 2;
  auto* anvertex = app.add_subcommand("anvertex", "chamber-limit vertex function at a fixed point");
  anvertex->add_option("--fixed-point", fp_path, "fixed point JSON file, or - for stdin");
  anvertex->add_option("--lambda", fp_lambda, "single framing unit instead of a file");
  anvertex->add_option("--chamber", chamber, "unit indices from smallest to largest, e.g. 1,0");
  anvertex->add_option("--degree", an_degree)->check(CLI::NonNegativeNumber);
  anvertex->add_flag("--oracle", oracle, "also run the lattice-sum oracle and compare");

  auto* mirror = app.add_subcommand("mirror", "sorted tangent character at hbar = q");
  mirror->add_option("--fixed-point", fp_path, "fixed point JSON file, or - for stdin");
  mirror->add_option("--lambda", fp_lambda, "single framing unit instead of a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*zfun) {
      const auto la = Partition::parse(lambda);
      const VertexRequest req{la, degree};
      Json out{{"lambda", la.parts()}, {"degree", degree}, {"route", route}, {"mode", mode}};
      if (mode == "symbolic") {
        out["series"] = to_json(run_route(symbolic_scalars(), route, req));
      } else {
        const auto pts = resolve_points(g, guard_power(degree, max_hook(la)), {default_points().front()});
        if (pts.size() != 1) throw ConfigError("zfun takes exactly one (hbar, q) point");
        const Scalars<Rational> s(pts[0].first, pts[0].second);
        out["hbar"] = pts[0].first.to_string();
        out["q"] = pts[0].second.to_string();
        out["series"] = to_json(run_route(s, route, req));
      }
      emit(g, out.dump(2) + "\n");
      return kPass;
    }

    if (*verify) {
      VerifyOptions opt;
      opt.degree = v_degree.value_or(suite == "anquiver" ? 2 : 4);
      opt.max_size = v_max_size.value_or(suite == "dimension" ? 8 : suite == "macdonald" ? 4 : 5);
      opt.max_entry = max_entry;
      opt.order = order;
      opt.max_boxes = max_boxes;
      opt.raw_degree = raw_degree;
      opt.extra_degree = spot_degree;
      int hook = opt.max_size;
      for (const auto& sp : spots) {
        opt.extra.push_back(Partition::parse(sp));
        hook = std::max(hook, max_hook(opt.extra.back()));
      }
      if (suite == "anquiver") hook = std::max(hook, 2 * max_boxes);
      opt.points = resolve_points(g, guard_power(std::max(opt.degree, opt.order), hook), default_points());

      const auto reports = run_suite(suite, opt);
      bool pass = true;
      std::size_t checks = 0;
      for (const auto& r : reports) {
        pass = pass && r.pass;
        checks += r.checks;
      }
      std::string text;
      if (g.json) {
        Json out{{"suite", suite}, {"pass", pass}, {"checks", checks}, {"reports", Json::array()}};
        for (const auto& r : reports) out["reports"].push_back(r.to_json(g.timing));
        text = out.dump(2) + "\n";
      } else {
        for (const auto& r : reports) {
          text += (r.pass ? "PASS " : "FAIL ") + r.check + " " + r.params.dump() + " checks=" +
                  std::to_string(r.checks);
          if (r.witness) text += " witness=" + r.witness->dump();
          if (g.timing) text += " seconds=" + std::to_string(r.seconds);
          text += "\n";
        }
        text += std::string(pass ? "PASS" : "FAIL") + " " + suite + ": " + std::to_string(reports.size()) +
                " reports, " + std::to_string(checks) + " checks\n";
      }
      emit(g, text);
      return pass ? kPass : kMismatch;
    }

    if (*anvertex) {
      const auto p = load_fixed_point(fp_path, fp_lambda);
      const auto ord = parse_order(chamber, p.units.size());
      const auto ch = Chamber::from_order(ord, p.units.size());
      const auto pts = resolve_points(g, guard_power(an_degree, 2 * p.total_boxes()), {default_points().front()});
      if (pts.size() != 1) throw ConfigError("anvertex takes exactly one (hbar, q) point");
      const Scalars<Rational> s(pts[0].first, pts[0].second);
      Json out{{"fixed_point", p.to_json()}, {"chamber", ord},          {"degree", an_degree},
               {"hbar", pts[0].first.to_string()}, {"q", pts[0].second.to_string()}};
      const auto fact = vertex_limit_factorized(s, p, ch, an_degree);
      out["factorized"] = to_json(fact);
      bool equal = true;
      if (oracle) {
        const auto orc = chamber_limit_oracle(s, p, ch, an_degree);
        out["oracle"] = to_json(orc);
        equal = orc == fact;
        out["equal"] = equal;
      }
      emit(g, out.dump(2) + "\n");
      return equal ? kPass : kMismatch;
    }

    if (*mirror) {
      const auto p = load_fixed_point(fp_path, fp_lambda);
      emit(g, Json(character_strings(mirror_tangent_character(p))).dump() + "\n");
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

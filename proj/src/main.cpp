#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "korbit/records.hpp"
#include "korbit/verify.hpp"

namespace {

using korbit::ClosurePoset;
using korbit::OrbitRecord;
using korbit::ParabolicType;
using korbit::SymmetricPair;

ParabolicType parse_parabolic(const SymmetricPair& pair, const std::string& text) {
  ParabolicType P;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad root index: " + item);
    P.levi.insert(v);
  }
  korbit::validate_parabolic(pair, P);
  return P;
}

std::string dot_text(const ClosurePoset& poset) {
  std::ostringstream os;
  os << "digraph closure {\n";
  for (std::size_t i = 0; i < poset.ids.size(); ++i) {
    os << "  \"" << poset.ids[i] << "\" [label=\"" << poset.ids[i] << ":" << poset.dims[i]
       << "\"];\n";
  }
  auto edges = poset.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    os << "  \"" << poset.ids[e.from] << "\" -> \"" << poset.ids[e.to] << "\" [style="
       << (e.dashed ? "dashed" : "solid");
    if (!e.dashed) os << ",label=\"" << e.alpha << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

int run_orbits(const std::string& pair_text, const std::string& levi_text, bool json,
               const korbit::PhiOptions& opt) {
  SymmetricPair pair = korbit::parse_pair(pair_text);
  ParabolicType P = parse_parabolic(pair, levi_text);
  korbit::Session session(opt);
  auto records = korbit::orbit_records(session.kgb(pair), P, session.phi(pair));
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : records) {
      out.push_back({{"id", r.id},
                     {"dimension", r.dimension},
                     {"phi", r.phi},
                     {"isClosed", r.is_closed},
                     {"isRegular", r.is_regular},
                     {"predictedFiber", r.predicted_fiber.str()},
                     {"geometricFiber", r.geometric_fiber.str()}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t wid = 2, wphi = 3;
    for (const auto& r : records) {
      wid = std::max(wid, r.id.size());
      wphi = std::max(wphi, r.phi.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    std::cout << pad("id", wid) << "  dim  " << pad("phi", wphi)
              << "  closed  regular  predicted  geometric\n";
    for (const auto& r : records) {
      std::cout << pad(r.id, wid) << "  " << pad(std::to_string(r.dimension), 3) << "  "
                << pad(r.phi, wphi) << "  " << pad(r.is_closed ? "yes" : "no", 6) << "  "
                << pad(r.is_regular ? "yes" : "no", 7) << "  "
                << pad(r.predicted_fiber.str(), 9) << "  " << r.geometric_fiber.str() << "\n";
    }
  }
  return 0;
}

int run_poset(const std::string& pair_text, const std::string& levi_text,
              const std::string& order, bool json) {
  SymmetricPair pair = korbit::parse_pair(pair_text);
  ParabolicType P = parse_parabolic(pair, levi_text);
  const korbit::KGB& kgb = korbit::cached_kgb(pair);
  ClosurePoset poset;
  if (P.levi.empty()) {
    poset = (order == "weak") ? korbit::weak_poset(kgb) : korbit::full_poset(kgb);
  } else {
    auto classes = korbit::project_to_P(kgb, P);
    poset = (order == "weak") ? korbit::weak_poset_P(kgb, P, classes)
                              : korbit::full_poset_P(kgb, P, classes);
  }
  if (json) {
    nlohmann::json out;
    out["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < poset.ids.size(); ++i) {
      out["vertices"].push_back({{"id", poset.ids[i]}, {"dimension", poset.dims[i]}});
    }
    auto edges = poset.edges;
    std::sort(edges.begin(), edges.end());
    out["edges"] = nlohmann::json::array();
    for (const auto& e : edges) {
      out["edges"].push_back({{"from", poset.ids[e.from]},
                              {"to", poset.ids[e.to]},
                              {"alpha", e.alpha},
                              {"dashed", e.dashed}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << dot_text(poset);
  }
  return 0;
}

int run_verify(bool json, const korbit::PhiOptions& opt) {
  auto results = korbit::verify_all(opt);
  bool all = true;
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
      if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"korbit: K-orbits on flag varieties of classical symmetric pairs"};
  app.require_subcommand(1);

  std::string pair_text, levi_text, order = "full";
  bool json = false, dot = false;
  korbit::PhiOptions opt;

  auto add_common = [&](CLI::App* cmd, bool needs_pair) {
    if (needs_pair) {
      cmd->add_option("--pair", pair_text, "pair spec, e.g. upq:2,1 spr:2 sppq:1,1 cgl:3")
          ->required();
      cmd->add_option("--parabolic", levi_text,
                      "comma list of Levi simple roots, 1-based Bourbaki order "
                      "(GL ambient: node i separates coordinates i|i+1; Sp ambient: "
                      "node n is the long root); empty = full flag");
    }
    cmd->add_flag("--json", json, "machine-readable output");
  };

  auto* orbits = app.add_subcommand("orbits", "list classes of K\\P with moment-map data");
  add_common(orbits, true);
  orbits->add_option("--seed", opt.seed, "sampling seed");
  orbits->add_option("--trials", opt.trials, "sampling trials per space");

  auto* poset = app.add_subcommand("poset", "closure order on K\\P as DOT");
  add_common(poset, true);
  poset->add_option("--order", order, "weak|full")
      ->check(CLI::IsMember({"weak", "full"}));
  poset->add_flag("--dot", dot, "emit DOT (default unless --json)");

  auto* verify = app.add_subcommand("verify", "run the full verification battery");
  add_common(verify, false);
  verify->add_option("--seed", opt.seed, "sampling seed");
  verify->add_option("--trials", opt.trials, "sampling trials per space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(orbits)) return run_orbits(pair_text, levi_text, json, opt);
    if (app.got_subcommand(poset)) return run_poset(pair_text, levi_text, order, json);
    return run_verify(json, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

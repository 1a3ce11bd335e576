#include "superrep/chars.hpp"
#include "superrep/cliffmat.hpp"
#include "superrep/gkrs.hpp"
#include "superrep/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

using namespace superrep;

namespace {

long long weyl_bound() {
  if (const char* s = std::getenv("GKRS_WEYL_BOUND")) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used == std::string(s).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("GKRS_WEYL_BOUND must be a positive integer");
  }
  return static_cast<long long>(kWeylBoundDefault);
}

std::string trim(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

struct SubalgebraChoice {
  std::string g;
  std::vector<Weight> roots;
};

const std::map<std::string, SubalgebraChoice>& catalog() {
  static const std::map<std::string, SubalgebraChoice> k = {
      {"A2>A1u1", {"A2", {{2, -1}}}},
      {"B2>A1A1", {"B2", {{2, -2}, {0, 2}}}},
      {"G2>A2", {"G2", {{-3, 2}, {3, -1}}}},
      {"G2>A1A1", {"G2", {{2, -1}, {0, 1}}}},
  };
  return k;
}

// --h accepts "" (maximal torus), a catalog name, a flat JSON root vector,
// or a JSON array of root vectors. Explicit vectors take precedence over
// catalog lookup.
SubalgebraChoice resolve_h(const std::string& g_label, const std::string& h_text) {
  SubalgebraChoice choice{g_label, {}};
  const std::string text = trim(h_text);
  if (text.empty()) {
    if (choice.g.empty()) throw std::invalid_argument("--g is required");
    return choice;
  }
  if (text.front() == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw std::invalid_argument("--h must be a JSON array of integers or of integer vectors");
    auto read_vector = [](const Json& row) {
      Weight beta;
      for (const Json& c : row) {
        if (!c.is_number_integer())
          throw std::invalid_argument("--h root coordinates must be integers");
        beta.push_back(c.get<long long>());
      }
      return beta;
    };
    if (!j.empty() && j.front().is_array())
      for (const Json& row : j) choice.roots.push_back(read_vector(row));
    else if (!j.empty())
      choice.roots.push_back(read_vector(j));
    if (choice.g.empty()) throw std::invalid_argument("--g is required");
    return choice;
  }
  auto it = catalog().find(text);
  if (it == catalog().end())
    throw std::invalid_argument("unknown embedding name \"" + text + "\"");
  if (!choice.g.empty() && choice.g != it->second.g)
    throw std::invalid_argument("--g " + choice.g + " conflicts with the ambient type of " + text);
  return it->second;
}

Embedding make_embedding(const std::string& g_label, const std::string& h_text) {
  SubalgebraChoice choice = resolve_h(g_label, h_text);
  return build_embedding(build_root_system(choice.g), choice.roots);
}

Weight parse_integral_weight(const std::string& text, const RootSystem& g,
                             const char* flag) {
  Weight w2 = parse_weight_x2(text, static_cast<std::size_t>(g.rank));
  if (!weight_all_even(w2))
    throw std::invalid_argument(std::string(flag) + " must be an integral weight");
  return weight_halve(w2);
}

void for_each_dominant(int rank, long long max_coord,
                       const std::function<void(const Weight&)>& fn) {
  Weight w(static_cast<std::size_t>(rank), 0);
  while (true) {
    fn(w);
    int i = 0;
    while (i < rank && w[i] == max_coord) w[i++] = 0;
    if (i == rank) return;
    ++w[i];
  }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- commands

int run_rootdata(const std::string& g_label, bool json) {
  RootSystem g = build_root_system(g_label);
  const auto elems = weyl_elements(g, static_cast<std::uint64_t>(weyl_bound()));
  if (json) {
    Json doc;
    doc["label"] = g.label;
    doc["rank"] = g.rank;
    Json cartan = Json::array();
    for (const auto& row : g.cartan) {
      Json r = Json::array();
      for (long long v : row) r.push_back(v);
      cartan.push_back(std::move(r));
    }
    doc["cartan"] = std::move(cartan);
    Json pos = Json::array();
    for (const auto& beta : g.positive_roots) {
      Json r = Json::array();
      for (Coord v : beta) r.push_back(v);
      pos.push_back(std::move(r));
    }
    doc["positive_roots"] = std::move(pos);
    doc["weyl_order"] = elems.size();
    emit(doc);
  } else {
    std::cout << g.label << ": rank " << g.rank << ", " << g.positive_roots.size()
              << " positive roots, |W| = " << elems.size() << "\n";
    std::cout << "simple roots:";
    for (const auto& a : g.simple_roots) std::cout << " " << weight_str(a);
    std::cout << "\npositive roots:";
    for (const auto& b : g.positive_roots) std::cout << " " << weight_str(b);
    std::cout << "\n";
  }
  return 0;
}

int run_branch(const std::string& g_label, const std::string& h_text,
               const std::string& lambda_text, bool json) {
  Embedding e = make_embedding(g_label, h_text);
  Weight lambda = parse_integral_weight(lambda_text, e.g, "--lambda");
  const auto& dec = restrict_decomposed_x2(e, lambda);
  if (json) {
    Json doc;
    doc["embedding"] = embedding_to_json(e);
    Json lam = Json::array();
    for (Coord c : lambda) lam.push_back(c);
    doc["lambda"] = std::move(lam);
    doc["decomposition"] = decomposition_to_json(dec);
    emit(doc);
  } else {
    std::cout << "restriction of " << weight_str(lambda) << ":\n";
    for (const auto& [w2, mult] : dec) {
      if (mult == 0) continue;
      std::cout << "  " << mult << " x " << weight_str_x2(w2) << "\n";
    }
  }
  return 0;
}

int run_gkrs(const std::string& g_label, const std::string& h_text,
             const std::string& lambda_text, bool json) {
  Embedding e = make_embedding(g_label, h_text);
  Weight lambda = parse_integral_weight(lambda_text, e.g, "--lambda");
  Multiplet m = gkrs_multiplet(e, lambda, weyl_bound());
  const bool ok = multiplet_as_decomposition(m) == euler_restriction(e, lambda);
  if (json) {
    Json doc;
    doc["embedding"] = embedding_to_json(e);
    Json lam = Json::array();
    for (Coord c : lambda) lam.push_back(c);
    doc["lambda"] = std::move(lam);
    doc["multiplet"] = multiplet_to_json(m);
    doc["cross_check"] = ok ? "pass" : "fail";
    emit(doc);
  } else {
    std::cout << "multiplet for lambda = " << weight_str(lambda) << " ("
              << m.members.size() << " members):\n";
    for (const auto& t : m.members)
      std::cout << "  " << (t.sign > 0 ? "+1" : "-1") << "  "
                << weight_str_x2(t.weight) << "\n";
    std::cout << "cross-check against direct Euler restriction: "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_dirac(const std::string& g_label, const std::string& h_text,
              const std::string& mu_text, bool json) {
  Embedding e = make_embedding(g_label, h_text);
  Weight mu2 = parse_weight_x2(mu_text, static_cast<std::size_t>(e.g.rank));
  auto r = dirac_induce_x2(e, mu2);
  if (json) {
    Json doc;
    if (r) {
      Json res;
      res["sign"] = r->sign;
      put_weight_x2(res, "weight", weight_scale(r->weight, 2));
      doc["result"] = std::move(res);
    } else {
      doc["result"] = nullptr;
    }
    emit(doc);
  } else {
    if (r)
      std::cout << "(" << (r->sign > 0 ? "+1" : "-1") << ", "
                << weight_str(r->weight) << ")\n";
    else
      std::cout << "0\n";
  }
  return 0;
}

int run_induce(const std::string& g_label, const std::string& h_text,
               const std::string& mu_text, long long bound, bool json) {
  Embedding e = make_embedding(g_label, h_text);
  Weight mu2 = parse_weight_x2(mu_text, static_cast<std::size_t>(e.g.rank));
  SRElement cls = induction_class_x2(e, mu2);
  SRElement pf = pushforward_truncated(e, cls, bound);
  auto d = dirac_induce_x2(e, mu2);

  std::map<Weight, long long> expected;
  if (d) {
    long long height = std::accumulate(d->weight.begin(), d->weight.end(), 0LL);
    if (height <= bound) expected[weight_scale(d->weight, 2)] = d->sign;
  }
  std::map<Weight, long long> got;
  for (const auto& [w2, c] : pf.terms_x2)
    if (c != 0) got[w2] = c;
  const bool ok = got == expected;

  if (json) {
    Json doc;
    doc["embedding"] = embedding_to_json(e);
    doc["class"] = sr_to_json(cls);
    doc["pushforward"] = sr_to_json(pf);
    doc["bound"] = bound;
    doc["agreement_with_dirac"] = ok ? "pass" : "fail";
    emit(doc);
  } else {
    std::cout << "pushforward of the index class of " << weight_str_x2(mu2)
              << " up to height " << bound << ":\n";
    if (got.empty()) std::cout << "  0\n";
    for (const auto& [w2, c] : got)
      std::cout << "  " << c << " x " << weight_str_x2(w2) << "\n";
    std::cout << "agreement with the closed-form index: "
              << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ verify

struct SuiteResult {
  Report rep;

  void record(bool ok, std::string identity, std::string witness = "") {
    if (ok)
      witness.clear();
    else if (witness.empty())
      witness = "the two sides differ";
    rep.checks.push_back({std::move(identity), ok, std::move(witness)});
  }
  long long total() const { return static_cast<long long>(rep.checks.size()); }
  long long passed() const {
    long long n = 0;
    for (const auto& c : rep.checks) n += c.passed ? 1 : 0;
    return n;
  }
};

SuiteResult suite_weyl(const std::string& g_label, long long max_coord) {
  RootSystem g = build_root_system(g_label);
  ReflectionFrame frame = full_frame(g);
  const auto elems = weyl_elements(g, static_cast<std::uint64_t>(weyl_bound()));
  WeightMultiset denom;
  for (const auto& w : elems)
    multiset_add(denom, weight_scale(apply_matrix(w.matrix, g.rho), 2), w.sign);
  SuiteResult res;
  for_each_dominant(g.rank, max_coord, [&](const Weight& lam) {
    WeightMultiset numer;
    Weight xi = weight_add(lam, g.rho);
    for (const auto& w : elems)
      multiset_add(numer, weight_scale(apply_matrix(w.matrix, xi), 2), w.sign);
    auto rhs = multiset_convolve(cached_character_x2(frame, weight_scale(lam, 2)), denom);
    res.record(numer == rhs, "character identity at lambda = " + weight_str(lam),
               "numerator and character times denominator differ");
  });
  return res;
}

SuiteResult suite_gkrs(const std::string& g_label, const std::string& h_text,
                       long long max_coord) {
  Embedding e = make_embedding(g_label, h_text);
  SuiteResult res;
  for_each_dominant(e.g.rank, max_coord, [&](const Weight& lam) {
    Multiplet m = gkrs_multiplet(e, lam, weyl_bound());
    bool ok = multiplet_as_decomposition(m) == euler_restriction(e, lam);
    res.record(ok, "multiplet at lambda = " + weight_str(lam),
               "closed form disagrees with the Euler-form restriction");
  });
  return res;
}

SuiteResult suite_frobenius(const std::string& g_label, const std::string& h_text,
                            long long max_coord) {
  Embedding e = make_embedding(g_label, h_text);
  const int rank = e.g.rank;
  SuiteResult res;
  // All h-dominant mu on both weight-lattice cosets within the box, against
  // every ambient dominant lambda in the box.
  Weight mu2(static_cast<std::size_t>(rank), -2 * max_coord);
  while (true) {
    bool dominant = true;
    for (const auto& beta : e.h_simple) {
      long long p = coroot_pairing(e.g, mu2, beta);
      if (p < 0 || p % 2 != 0) {  // doubled pairing must stay even-integral
        dominant = false;
        break;
      }
    }
    if (dominant) {
      for_each_dominant(rank, max_coord, [&](const Weight& lam) {
        auto [lhs, rhs] = verify_adjointness(e, mu2, lam);
        res.record(lhs == rhs,
                   "adjointness at mu = " + weight_str_x2(mu2) +
                       ", lambda = " + weight_str(lam),
                   std::to_string(lhs) + " != " + std::to_string(rhs));
      });
    }
    int i = 0;
    while (i < rank && mu2[i] == 2 * max_coord) mu2[i++] = -2 * max_coord;
    if (i == rank) break;
    ++mu2[i];
  }
  return res;
}

SuiteResult suite_clifford() {
  SuiteResult res;
  for (int n = 1; n <= 6; ++n) {
    auto alg = build_clifford(n);
    auto com = clifford_commutant(alg);
    bool ok = com.even_dim == 1 && com.odd_dim == n % 2 &&
              (com.odd_dim > 0) == (classify_clifford(n).kind == CliffordKind::Q);
    if (com.odd_dim > 0 && ok) {
      const auto& w = com.odd_involution;
      ok = mat_mul(w, w) == identity_matrix<GMatrix>(w.size());
      for (const auto& gen : alg.generators)
        ok = ok && mat_is_zero(mat_commutator(w, gen));
    }
    res.record(ok, "commutant against the classification at n = " +
                       std::to_string(n));
  }
  for (int n = 0; n <= 10; ++n)
    res.record(classify_clifford(n).rank_of_sr == classify_clifford(n + 2).rank_of_sr,
               "twofold periodicity at n = " + std::to_string(n));
  return res;
}

SuiteResult suite_thom() {
  SuiteResult res;
  auto alg = build_clifford(3);
  auto gens = so3_generators();
  for (const auto& c : thom_map_check(alg, gens).checks)
    res.record(c.passed, c.identity, c.witness);
  std::vector<QMatrix> trivial(3, make_matrix<QMatrix>(1, 1));
  for (const auto& c : twisted_action_check(alg, gens, trivial).checks)
    res.record(c.passed, "trivial module: " + c.identity, c.witness);
  for (const auto& c : twisted_action_check(alg, gens, gens).checks)
    res.record(c.passed, "vector module: " + c.identity, c.witness);
  res.record(!thom_map_check(alg, gens, true).all_passed(),
             "negative control: the perturbed quantization is detected");
  res.record(!twisted_action_check(alg, gens, trivial, true).all_passed(),
             "negative control: the ungraded right action is detected");
  return res;
}

int run_verify(const std::string& suite, const std::string& g_label,
               const std::string& h_text, long long max_coord, bool json) {
  SuiteResult res;
  if (suite == "weyl") {
    if (g_label.empty()) throw std::invalid_argument("--g is required for the weyl suite");
    res = suite_weyl(g_label, max_coord);
  } else if (suite == "gkrs") {
    res = suite_gkrs(g_label, h_text, max_coord);
  } else if (suite == "frobenius") {
    res = suite_frobenius(g_label, h_text, max_coord);
  } else if (suite == "clifford") {
    res = suite_clifford();
  } else if (suite == "thom") {
    res = suite_thom();
  } else {
    throw std::invalid_argument("unknown suite \"" + suite +
                                "\" (expected gkrs|thom|clifford|frobenius|weyl)");
  }
  if (json) {
    Json doc;
    doc["suite"] = suite;
    doc["total"] = res.total();
    doc["passed"] = res.passed();
    doc["checks"] = report_to_json(res.rep);
    emit(doc);
  } else {
    std::cout << "suite " << suite << ": " << res.passed() << "/" << res.total()
              << " checks passed\n";
    for (const auto& c : res.rep.checks)
      if (!c.passed)
        std::cout << "  [FAIL] " << c.identity
                  << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
  }
  return res.passed() == res.total() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplet, branching, and index calculator for equal-rank embeddings"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // keep -h free for --h

  std::string g_label, h_text, lambda_text, mu_text, output = "text", suite;
  long long bound = 8, max_coord = 2;

  auto add_output = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--output", output, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* rootdata = app.add_subcommand("rootdata", "describe a root system");
  rootdata->add_option("--g", g_label, "root system label, e.g. A2 or A1xA1")->required();
  add_output(rootdata);

  CLI::App* branch = app.add_subcommand("branch", "decompose a restriction");
  branch->add_option("--g", g_label, "ambient root system")->required();
  branch->add_option("--h", h_text, "subalgebra simple roots (JSON, name, or \"\" for the torus)")->required();
  branch->add_option("--lambda", lambda_text, "ambient highest weight")->required();
  add_output(branch);

  CLI::App* gkrs = app.add_subcommand("gkrs", "signed multiplet of an ambient irreducible");
  gkrs->add_option("--g", g_label, "ambient root system")->required();
  gkrs->add_option("--h", h_text, "subalgebra simple roots")->required();
  gkrs->add_option("--lambda", lambda_text, "ambient highest weight")->required();
  add_output(gkrs);

  CLI::App* dirac = app.add_subcommand("dirac", "closed-form index of the induced class");
  dirac->add_option("--g", g_label, "ambient root system")->required();
  dirac->add_option("--h", h_text, "subalgebra simple roots")->required();
  dirac->add_option("--mu", mu_text, "subalgebra highest weight (halves allowed, e.g. 3/2)")->required();
  add_output(dirac);

  CLI::App* induce = app.add_subcommand("induce", "truncated pushforward of the index class");
  induce->add_option("--g", g_label, "ambient root system")->required();
  induce->add_option("--h", h_text, "subalgebra simple roots")->required();
  induce->add_option("--mu", mu_text, "subalgebra highest weight")->required();
  induce->add_option("--bound", bound, "height bound for the truncation");
  add_output(induce);

  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite, "gkrs|thom|clifford|frobenius|weyl")->required();
  verify->add_option("--g", g_label, "ambient root system");
  verify->add_option("--h", h_text, "subalgebra simple roots");
  verify->add_option("--max-coord", max_coord, "weight-coordinate bound for grids");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool json = output == "json";
  try {
    if (rootdata->parsed()) return run_rootdata(g_label, json);
    if (branch->parsed()) return run_branch(g_label, h_text, lambda_text, json);
    if (gkrs->parsed()) return run_gkrs(g_label, h_text, lambda_text, json);
    if (dirac->parsed()) return run_dirac(g_label, h_text, mu_text, json);
    if (induce->parsed()) return run_induce(g_label, h_text, mu_text, bound, json);
    if (verify->parsed()) return run_verify(suite, g_label, h_text, max_coord, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

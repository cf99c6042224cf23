#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "pfres/builders.hpp"
#include "pfres/errors.hpp"
#include "pfres/groebner.hpp"
#include "pfres/hilbert.hpp"
#include "pfres/verify.hpp"

namespace pfres::cli {

namespace {

std::string window_text(unsigned delta) {
  return "ceil((delta-1)/2)..ceil(delta/2) = " + std::to_string(epsilon_min(delta)) + ".." +
         std::to_string(epsilon_max(delta)) + " for delta = " + std::to_string(delta);
}

void check_eps(unsigned delta, int eps) {
  if (eps < epsilon_min(delta) || eps > epsilon_max(delta))
    throw UsageError("--eps " + std::to_string(eps) + " is outside the admissible window " + window_text(delta));
}

Json params_json(const SeedData& s) {
  Json p;
  p["f"] = s.f();
  p["g"] = s.g();
  p["delta"] = s.delta();
  p["epsilon"] = s.epsilon();
  p["prime"] = s.prime();
  p["rng_seed"] = s.rng_seed();
  return p;
}

Json twist_json(const Bidegree& t) { return Json::array({t[0], t[1]}); }

Json complex_table(const FreeComplex& c) {
  Json positions = Json::array();
  for (auto it = c.modules().rbegin(); it != c.modules().rend(); ++it) {
    const auto& [n, m] = *it;
    if (m.empty()) continue;
    Json pos;
    pos["N"] = n;
    pos["rank"] = m.rank();
    Json twists = Json::array();
    for (const auto& [t, r] : twist_table(m)) twists.push_back({{"twist", twist_json(t)}, {"rank", r}});
    pos["twists"] = twists;
    Json summands = Json::array();
    for (const auto& s : m.summands())
      summands.push_back({{"label", s.label().to_string()}, {"twist", twist_json(s.twist())}, {"rank", s.rank()}});
    pos["summands"] = summands;
    positions.push_back(pos);
  }
  return {{"name", c.name()}, {"positions", positions}};
}

Json report_json(const CheckReport& r) {
  return {{"check", r.check}, {"pass", r.pass}, {"detail", r.detail}, {"notes", r.notes}};
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

long as_long(const Integer& x) {
  if (!x.fits_slong_p()) throw ResourceError("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

// One seed's objects, built on first use.
class Workspace {
 public:
  explicit Workspace(SeedData seed) : seed_(std::move(seed)) {}

  const SeedData& seed() const { return seed_; }
  FreeComplex& M() { return get(m_, [&] { return build_M(seed_); }); }
  FreeComplex& L() { return get(l_, [&] { return build_L(seed_); }); }
  FreeComplex& tot(TotKind k) {
    auto& slot = tot_[static_cast<int>(k)];
    return get(slot, [&] { return build_tot(seed_, k); });
  }
  ChainMap& xi() { return get(xi_, [&] { return build_xi(seed_, tot(TotKind::T), tot(TotKind::B)); }); }
  const MatrixComplex& minimal() {
    return get(min_, [&] { return minimize(M(), seed_.rng_seed()); });
  }

 private:
  template <class T, class F>
  T& get(std::unique_ptr<T>& slot, F make) {
    if (!slot) slot = std::make_unique<T>(make());
    return *slot;
  }

  SeedData seed_;
  std::unique_ptr<FreeComplex> m_, l_, tot_[4];
  std::unique_ptr<ChainMap> xi_;
  std::unique_ptr<MatrixComplex> min_;
};

CheckReport run_d2(Workspace& w) {
  CheckReport out{"d2", true, "", {}};
  std::vector<std::pair<std::string, std::function<FreeComplex&()>>> all{
      {"Tot(V)", [&]() -> FreeComplex& { return w.tot(TotKind::V); }},
      {"Tot(U)", [&]() -> FreeComplex& { return w.tot(TotKind::U); }},
      {"Tot(T)", [&]() -> FreeComplex& { return w.tot(TotKind::T); }},
      {"Tot(B)", [&]() -> FreeComplex& { return w.tot(TotKind::B); }},
      {"M", [&]() -> FreeComplex& { return w.M(); }},
      {"L", [&]() -> FreeComplex& { return w.L(); }},
  };
  for (auto& [name, get] : all) {
    auto r = check_complex(get());
    out.notes.push_back(name + ": " + (r.pass ? "ok" : "fail"));
    if (!r.pass && out.pass) {
      out.pass = false;
      out.detail = r.detail;
    }
  }
  return out;
}

CheckReport run_lastmap(Workspace& w) {
  const auto& s = w.seed();
  auto predicted = classify_last_map(s.f(), s.g(), s.epsilon());
  auto observed = observe_last_map(w.M());
  CheckReport r{"lastmap", predicted.shape == observed, "", {}};
  r.notes.push_back("case " + to_string(predicted.which));
  r.notes.push_back("predicted " + describe(predicted.shape));
  if (!r.pass) r.detail = "observed " + describe(observed);
  return r;
}

CheckReport run_betti(Workspace& w) {
  const auto& s = w.seed();
  auto minimal = betti_of(w.minimal());
  auto cross = betti_from_constant_ranks(w.M());
  CheckReport r{"betti", minimal == cross, "", {}};
  r.notes.push_back("minimal ranks " + join_sizes(totals(minimal)));
  if (!r.pass) r.detail = "constant-part ranks give " + join_sizes(totals(cross));
  if (r.pass && s.epsilon() == epsilon_max(s.delta()) && s.constant_alpha()) {
    auto want = predicted_minimal_ranks(s.f(), s.g());
    std::vector<std::size_t> w2(want.begin(), want.end());
    if (w2 != totals(minimal)) {
      r.pass = false;
      r.detail = "layout prediction " + join_sizes(w2);
    } else {
      r.notes.push_back("matches bottom(N) - top(N+1)");
    }
  }
  return r;
}

CheckReport run_linear(Workspace& w) {
  const auto& s = w.seed();
  bool linear = check_linearity(betti_of(w.minimal()), s.g());
  bool expected = s.epsilon() == epsilon_max(s.delta());
  CheckReport r{"linear", true, "", {}};
  r.notes.push_back(std::string("resolution is ") + (linear ? "linear" : "not linear"));
  if (expected && !linear) {
    r.pass = false;
    r.detail = "a generator of M_N sits outside degree g+N-1";
  }
  if (!expected) r.notes.push_back("linearity not predicted below ceil(delta/2)");
  return r;
}

CheckReport run_pd(Workspace& w) {
  const auto& s = w.seed();
  const auto& mc = w.minimal();
  int length = 0;
  for (const auto& [n, degs] : mc.degrees)
    if (!degs.empty()) length = std::max(length, n);
  CheckReport r{"pd", true, "", {"length " + std::to_string(length)}};
  bool low = 2 * s.epsilon() == static_cast<int>(s.delta()) - 1;
  if (s.g() == 1 && low && s.delta() > 1) {
    r.notes.push_back("g = 1 below ceil(delta/2): generic grade exceeds delta, no prediction");
    return r;
  }
  int want = n_max(s.f(), s.g(), s.epsilon());
  if (length != want) {
    r.pass = false;
    r.detail = "predicted length " + std::to_string(want) + ", minimal complex has " + std::to_string(length);
  }
  return r;
}

CheckReport run_hilbert(Workspace& w) {
  const auto& s = w.seed();
  auto hn = hn_from_complex(w.M(), s.g(), s.f());
  CheckReport r{"hilbert", true, "", {"hn = " + hn.to_string()}};
  if (hn_excluded(s.g(), s.f())) {
    bool high = s.epsilon() == epsilon_max(s.delta());
    auto want = high ? LaurentPoly::from_coeffs(0, {1, -1}) : LaurentPoly();
    r.pass = hn == want;
    r.notes.push_back("g = 1, f even: quotient is not a Hilbert numerator");
    if (!r.pass) r.detail = "expected " + want.to_string();
    return r;
  }
  auto one = hn_closed_1(s.g(), s.f(), s.epsilon());
  auto two = hn_closed_2(s.g(), s.f(), s.epsilon());
  if (hn != one || one != two) {
    r.pass = false;
    r.detail = "closed forms give " + one.to_string() + " and " + two.to_string();
  }
  return r;
}

CheckReport run_acyclic(Workspace& w) {
  AcyclicityOptions opts;
  opts.rng_seed = w.seed().rng_seed() + 1;
  auto rep = acyclicity_probabilistic(w.minimal(), opts);
  CheckReport r{"acyclic", rep.pass, "", {}};
  for (const auto& rc : rep.ranks)
    r.notes.push_back("rank d_" + std::to_string(rc.k) + ": expected " + std::to_string(rc.expected) + ", observed " +
                      std::to_string(rc.observed));
  for (const auto& g : rep.grades)
    r.notes.push_back("grade I_" + std::to_string(g.rank) + "(d_" + std::to_string(g.k) + ") >= " +
                      std::to_string(g.k) + ": " + to_string(g.status));
  std::ostringstream bound;
  bound.precision(3);
  bound << std::scientific << rep.failure_bound;
  r.notes.push_back("failure bound " + bound.str());
  if (!rep.pass) {
    for (const auto& rc : rep.ranks)
      if (rc.expected != rc.observed) {
        r.detail = "rank deficiency at d_" + std::to_string(rc.k);
        break;
      }
    if (r.detail.empty())
      for (const auto& g : rep.grades)
        if (g.status == GradeStatus::Failed || g.status == GradeStatus::ResourceLimited) {
          r.detail = "grade of I_" + std::to_string(g.rank) + "(d_" + std::to_string(g.k) + ") " + to_string(g.status);
          break;
        }
  }
  return r;
}

}  // namespace

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"d2",     "chainmap", "bidegree", "split", "transfer", "lastmap",
                                              "betti",  "linear",   "pd",       "hilbert", "acyclic"};
  return names;
}

SeedData resolve_seed(const SeedArgs& a) {
  if (!a.seed_file.empty()) {
    auto s = load_seed(a.seed_file);
    if (a.eps) {
      check_eps(s.delta(), *a.eps);
      s = s.with_epsilon(*a.eps);
    }
    return s;
  }
  if (!a.f || !a.g) throw UsageError("give -f and -g, or --seed FILE");
  if (*a.g < 1 || *a.g >= *a.f) throw UsageError("need 1 <= g < f");
  unsigned delta = *a.f - *a.g;
  int eps = a.eps.value_or(epsilon_max(delta));
  check_eps(delta, eps);
  return SeedData::generic({*a.f, *a.g, eps, a.prime, a.rng_seed, 1});
}

Range parse_range(const std::string& text) {
  auto to_u = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad range '" + text + "'");
    return static_cast<unsigned>(v);
  };
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    unsigned v = to_u(text);
    return {v, v};
  }
  Range r{to_u(text.substr(0, colon)), to_u(text.substr(colon + 1))};
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

Result cmd_build(const SeedArgs& args, const std::vector<std::string>& complexes, const std::string& out_dir) {
  Workspace w(resolve_seed(args));
  std::vector<std::pair<std::string, FreeComplex*>> picked;
  for (const auto& name : complexes) {
    if (name == "M") picked.emplace_back("M", &w.M());
    else if (name == "L") picked.emplace_back("L", &w.L());
    else if (name == "T") picked.emplace_back("TotT", &w.tot(TotKind::T));
    else if (name == "B") picked.emplace_back("TotB", &w.tot(TotKind::B));
    else throw UsageError("unknown complex '" + name + "' (choose from M, L, T, B)");
  }
  Json doc;
  doc["kind"] = "build";
  doc["params"] = params_json(w.seed());
  Json tables = Json::array();
  for (auto& [file, c] : picked) tables.push_back(complex_table(*c));
  doc["complexes"] = tables;
  Json files = Json::array();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    auto seed_path = (std::filesystem::path(out_dir) / "seed.json").string();
    save_seed(w.seed(), seed_path);
    files.push_back(seed_path);
    for (auto& [file, c] : picked) {
      auto path = (std::filesystem::path(out_dir) / (file + ".json")).string();
      std::ofstream(path) << export_complex_json(*c) << "\n";
      files.push_back(path);
    }
  }
  doc["files"] = files;
  return {doc, kPass};
}

Result cmd_verify(const SeedArgs& args, std::vector<std::string> checks, const std::string& mutate,
                  const std::string& report_path) {
  if (checks.empty()) checks = all_checks();
  for (const auto& c : checks)
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw UsageError("unknown check '" + c + "'");
  if (!mutate.empty() && mutate != "flip-d" && mutate != "drop-xi0")
    throw UsageError("unknown mutation '" + mutate + "' (choose flip-d or drop-xi0)");

  Workspace w(resolve_seed(args));
  if (mutate == "flip-d") {
    // Negate one entry of the lowest nonzero differential of M.
    auto& m = w.M();
    for (int n = m.min_degree() + 1; n <= m.max_degree(); ++n) {
      auto hit = m.differential(n).first_nonzero();
      if (!hit) continue;
      auto& d = m.mutable_differential(n);
      d.set(hit->first, hit->second, -d.at(hit->first, hit->second));
      break;
    }
  } else if (mutate == "drop-xi0") {
    auto& xi = w.xi();
    if (auto* x0 = xi.at(0)) xi.maps.at(0) = SparsePolyMatrix(w.seed().ring(), x0->rows(), x0->cols());
  }

  Json doc;
  doc["kind"] = "verify";
  doc["params"] = params_json(w.seed());
  doc["mutation"] = mutate.empty() ? "none" : mutate;
  Json reports = Json::array();
  bool all_pass = true;
  for (const auto& name : checks) {
    CheckReport r;
    if (name == "d2") r = run_d2(w);
    else if (name == "chainmap") {
      r = check_chain_map(w.tot(TotKind::T), w.tot(TotKind::B), w.xi());
      r.check = "chainmap";
    } else if (name == "bidegree") {
      r = check_bihomogeneity(w.seed(), [](const SeedData& s) { return build_M(s); }, w.seed().rng_seed());
      r.check = "bidegree";
    } else if (name == "split") {
      r = check_unit_triangular_quotient(w.seed());
      r.check = "split";
    } else if (name == "transfer") {
      r = check_transfer(w.seed());
      r.check = "transfer";
    } else if (name == "lastmap") r = run_lastmap(w);
    else if (name == "betti") r = run_betti(w);
    else if (name == "linear") r = run_linear(w);
    else if (name == "pd") r = run_pd(w);
    else if (name == "hilbert") r = run_hilbert(w);
    else if (name == "acyclic") r = run_acyclic(w);
    all_pass = all_pass && r.pass;
    reports.push_back(report_json(r));
  }
  doc["checks"] = reports;
  doc["pass"] = all_pass;
  doc["report"] = nullptr;
  if (!all_pass) {
    doc["report"] = report_path;
    std::ofstream(report_path) << doc.dump(2) << "\n";
  }
  return {doc, all_pass ? kPass : kFailure};
}

Result cmd_hilbert(Range f, std::optional<Range> g, std::optional<int> eps, unsigned linear_max,
                   const SeedArgs& seed_args) {
  if (f.lo < 2) f.lo = 2;
  Json rows = Json::array();
  for (unsigned ff = f.lo; ff <= f.hi; ++ff) {
    unsigned glo = g ? std::max(1u, g->lo) : 1, ghi = g ? std::min(g->hi, ff - 1) : ff - 1;
    for (unsigned gg = glo; gg <= ghi; ++gg) {
      unsigned delta = ff - gg;
      if (hn_excluded(gg, ff)) {
        rows.push_back({{"g", gg}, {"f", ff}, {"epsilon", nullptr}, {"status", "excluded (hn not defined)"}});
        continue;
      }
      std::vector<int> epsilons;
      if (eps) {
        if (*eps < epsilon_min(delta) || *eps > epsilon_max(delta)) continue;
        epsilons.push_back(*eps);
      } else {
        for (int e = epsilon_min(delta); e <= epsilon_max(delta); ++e) epsilons.push_back(e);
      }
      for (int e : epsilons) {
        Json row{{"g", gg}, {"f", ff}, {"epsilon", e}, {"status", "ok"}};
        row["hn"] = hn_closed_1(gg, ff, e).to_string();
        Json h = Json::array();
        for (const auto& x : h_vector(gg, ff, e).entries) h.push_back(as_long(x));
        row["h_vector"] = h;
        row["multiplicity"] = as_long(multiplicity(gg, ff).value);
        if (ff <= linear_max) {
          auto s = SeedData::generic({ff, gg, e, seed_args.prime, seed_args.rng_seed, 1});
          row["linear"] = check_linearity(minimal_betti(build_M(s), seed_args.rng_seed), gg);
        } else {
          row["linear"] = nullptr;
        }
        rows.push_back(row);
      }
    }
  }
  Json doc;
  doc["kind"] = "hilbert";
  doc["rows"] = rows;
  return {doc, kPass};
}

Result cmd_unmixed(const SeedArgs& args, bool content_path) {
  auto seed = resolve_seed(args);
  const unsigned f = seed.f(), g = seed.g(), delta = seed.delta();
  IdealGuard guard;
  auto minors = maximal_minors(build_psi(seed));
  enforce_guard(minors, guard);

  Json doc;
  doc["kind"] = "unmixed";
  doc["params"] = params_json(seed);
  auto gens_json = [](const IdealGens& ideal) {
    Json out = Json::array();
    for (const auto& p : ideal.gens) out.push_back(p.to_string());
    return out;
  };
  Json reports = Json::array();
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    reports.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
  };

  auto ig = groebner_basis(minors);
  auto tau = tau_ideal(seed);
  auto dg = dimension_and_grade(ig);
  std::string grade = dg.grade ? std::to_string(*dg.grade) : "infinite";
  report("grade I_g(Psi) >= delta", dg.grade && *dg.grade >= delta, "grade " + grade + ", delta " + std::to_string(delta));

  auto c = unmixed_gens(seed);
  doc["c"] = gens_json(c);
  auto col = colon(ig, tau);
  if (delta % 2 == 0) {
    doc["message"] = "c = 0; ideal grade-unmixed";
    report("I : I_1(tau) = I", ideal_equal(col, ig), "");
  } else {
    doc["message"] = nullptr;
    auto plus = groebner_basis(IdealGens(seed.ring(), ig.basis()) + c);
    auto sat = saturate(ig, tau);
    report("c + I = I : I_1(tau)", ideal_equal(plus, col), "");
    report("I : I_1(tau) = I : I_1(tau)^inf", ideal_equal(col, sat.ideal),
           "saturation exponent " + std::to_string(sat.exponent));
    bool inside = true;
    for (const auto& t : seed.tau_images())
      for (const auto& p : c.gens) inside = inside && member(t * p, ig);
    report("I_1(tau) * c in I", inside, "");
  }

  if (content_path) {
    auto content = pfaffian_content(std::span<const Alt>(seed.alt_matrices()), f);
    Json block;
    block["d"] = g;
    block["n"] = f;
    block["generators"] = gens_json(content);
    auto cd = unmixed_gens(seed.with_distinguished(g));
    bool equal = ideal_equal(groebner_basis(content), groebner_basis(cd));
    report("C(phi) = c", equal, content.empty() ? "both ideals are zero" : "");
    if (!hn_excluded(g, f)) {
      auto e = multiplicity(g, f);
      auto at_one = hn_closed_1(g, f, epsilon_max(delta)).at_one();
      block["multiplicity_sum"] = as_long(e.value);
      block["hn_at_one"] = as_long(at_one);
      report("multiplicity sum = hn(1)", e.value == at_one, "");
    }
    doc["content"] = block;
  }
  doc["reports"] = reports;
  doc["pass"] = all_pass;
  return {doc, all_pass ? kPass : kFailure};
}

Result cmd_sweep(std::vector<std::string> identities, std::optional<int> bound) {
  if (identities.empty())
    for (auto id : {Identity::GammaLemma, Identity::K95_12g, Identity::L23_8_1, Identity::L23_9, Identity::L25_1})
      identities.push_back(to_string(id));
  Json rows = Json::array();
  bool all_pass = true;
  for (const auto& name : identities) {
    auto id = identity_from_name(name);
    if (!id) throw UsageError("unknown identity '" + name + "'");
    auto rep = identity_sweep(*id, bound.value_or(default_bound(*id)));
    all_pass = all_pass && rep.pass();
    rows.push_back({{"identity", name},
                    {"bound", rep.bound},
                    {"instances", rep.instances},
                    {"violations", rep.violations},
                    {"first_violation", rep.first_violation}});
  }
  Json doc;
  doc["kind"] = "sweep";
  doc["rows"] = rows;
  doc["pass"] = all_pass;
  return {doc, all_pass ? kPass : kFailure};
}

}  // namespace pfres::cli

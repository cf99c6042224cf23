#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pfres/errors.hpp"

using namespace pfres::cli;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint32_t default_prime() {
  if (const char* env = std::getenv("PFRES_PRIME")) {
    try {
      return static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("PFRES_PRIME is not a number: ") + env);
    }
  }
  return pfres::PrimeField::kDefaultPrime;
}

void emit(const Result& r, const std::string& format, const std::string& json_out = {}) {
  if (format == "json") std::cout << r.doc.dump(2) << "\n";
  else std::cout << render_text(r.doc);
  if (!json_out.empty()) std::ofstream(json_out) << r.doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free complexes over generic alternating seeds: build, verify, measure"};
  app.require_subcommand(1);

  SeedArgs seed;
  std::optional<unsigned> f, g;
  std::optional<int> eps;
  std::optional<std::uint32_t> prime;
  std::string format = "text", out, checks, mutate, complexes = "M", f_range = "2:10", g_range, identities;
  std::optional<int> bound;
  unsigned linear_max = 7;
  bool content_path = false;
  std::string render_path;

  auto seed_opts = [&](CLI::App* sub) {
    sub->add_option("-f", f, "Rank of F");
    sub->add_option("-g", g, "Rank of G");
    sub->add_option("--eps", eps, "Epsilon, within ceil((delta-1)/2)..ceil(delta/2)");
    sub->add_option("--prime", prime, "Field characteristic (default $PFRES_PRIME or 32003)");
    sub->add_option("--rng-seed", seed.rng_seed, "Seed for the generic alternating matrices");
    sub->add_option("--seed", seed.seed_file, "Seed file instead of -f/-g");
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* build = app.add_subcommand("build", "Build M (and L, Tot T, Tot B) and print the module tables");
  seed_opts(build);
  format_opt(build);
  build->add_option("--out", out, "Directory for the seed and complex exports");
  build->add_option("--complexes", complexes, "Comma list from M,L,T,B");

  auto* verify = app.add_subcommand("verify", "Run structural checks; exit 0 iff all pass");
  seed_opts(verify);
  format_opt(verify);
  verify->add_option("--checks", checks, "Comma list of checks (default: all)");
  verify->add_option("--mutate", mutate, "Corrupt the complex first: flip-d or drop-xi0");
  verify->add_option("--out", out, "Report path written on failure (default pfres-verify-report.json)");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert numerators, h-vectors and multiplicities over a grid");
  format_opt(hilbert);
  hilbert->add_option("-f", f_range, "f or lo:hi");
  hilbert->add_option("-g", g_range, "g or lo:hi (default 1:f-1)");
  hilbert->add_option("--eps", eps, "Only this epsilon");
  hilbert->add_option("--prime", prime, "Field for the linearity column");
  hilbert->add_option("--rng-seed", seed.rng_seed, "Seed for the linearity column");
  hilbert->add_option("--linear-max", linear_max, "Compute linear? only for f up to this");
  hilbert->add_option("--out", out, "Also write the JSON table here");

  auto* unmixed = app.add_subcommand("unmixed", "Generators of c and the Groebner equality reports");
  seed_opts(unmixed);
  format_opt(unmixed);
  unmixed->add_flag("--content", content_path, "Also compare the Pfaffian content with (d,n) = (g,f)");
  unmixed->add_option("--out", out, "Also write the JSON report here");

  auto* sweep = app.add_subcommand("sweep", "Exhaustive binomial identity sweeps");
  format_opt(sweep);
  sweep->add_option("--identity", identities, "Comma list (default: all)");
  sweep->add_option("--bound", bound, "Box size (default per identity)");
  sweep->add_option("--out", out, "Also write the JSON table here");

  auto* render = app.add_subcommand("render", "Print the text form of a JSON document (- for stdin)");
  render->add_option("file", render_path, "JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    seed.f = f;
    seed.g = g;
    seed.eps = eps;
    seed.prime = prime.value_or(default_prime());
    if (*build) {
      emit(cmd_build(seed, split_list(complexes), out), format);
      return kPass;
    }
    if (*verify) {
      auto r = cmd_verify(seed, split_list(checks), mutate, out.empty() ? "pfres-verify-report.json" : out);
      emit(r, format);
      return r.exit;
    }
    if (*hilbert) {
      std::optional<Range> gr;
      if (!g_range.empty()) gr = parse_range(g_range);
      auto r = cmd_hilbert(parse_range(f_range), gr, eps, linear_max, seed);
      emit(r, format, out);
      return r.exit;
    }
    if (*unmixed) {
      auto r = cmd_unmixed(seed, content_path);
      emit(r, format, out);
      return r.exit;
    }
    if (*sweep) {
      auto r = cmd_sweep(split_list(identities), bound);
      emit(r, format, out);
      return r.exit;
    }
    if (*render) {
      std::string text;
      if (render_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(render_path);
        if (!in) throw UsageError("cannot read " + render_path);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      std::cout << render_text(Json::parse(text));
      return kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const pfres::ResourceError& e) {
    std::cerr << "resource guardrail: " << e.what() << "\n";
    return kResource;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const pfres::StructuralError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const pfres::UnsupportedCase& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const pfres::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kPass;
}

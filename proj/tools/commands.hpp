#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfres/seed.hpp"

namespace pfres::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2, kResource = 3 };

// Bad flag combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedArgs {
  std::optional<unsigned> f, g;
  std::optional<int> eps;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t rng_seed = 1;
  std::string seed_file;
};
// Loads the seed file or draws a generic seed; epsilon defaults to ceil(delta/2).
SeedData resolve_seed(const SeedArgs& a);

struct Range {
  unsigned lo = 0, hi = 0;
};
// "n" or "lo:hi".
Range parse_range(const std::string& text);

struct Result {
  Json doc;
  int exit = kPass;
};

Result cmd_build(const SeedArgs& args, const std::vector<std::string>& complexes, const std::string& out_dir);
Result cmd_verify(const SeedArgs& args, std::vector<std::string> checks, const std::string& mutate,
                  const std::string& report_path);
Result cmd_hilbert(Range f, std::optional<Range> g, std::optional<int> eps, unsigned linear_max,
                   const SeedArgs& seed_args);
Result cmd_unmixed(const SeedArgs& args, bool content_path);
Result cmd_sweep(std::vector<std::string> identities, std::optional<int> bound);

const std::vector<std::string>& all_checks();

// Text form of any document above; the JSON is the source of truth.
std::string render_text(const Json& doc);

}  // namespace pfres::cli

#include "pfres/alternating.hpp"
#include "pfres/divided.hpp"
#include "pfres/exterior.hpp"

namespace pfres {

std::vector<std::string> indexed_names(std::string_view stem, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(stem) + std::to_string(first + i));
  return names;
}

namespace {

void collect_subsets(unsigned next, unsigned f, unsigned left, ExtMask acc, std::vector<ExtMask>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (unsigned b = next; b + left <= f; ++b) collect_subsets(b + 1, f, left - 1, acc | (ExtMask{1} << b), out);
}

void collect_monomials(unsigned k, unsigned left, std::vector<unsigned>& exps, std::vector<DivMono>& out) {
  if (k + 1 == exps.size()) {
    exps[k] = left;
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    exps[k] = e;
    collect_monomials(k + 1, left - e, exps, out);
  }
}

}  // namespace

std::vector<ExtMask> subsets_of_size(unsigned f, unsigned k) {
  std::vector<ExtMask> out;
  if (k <= f) collect_subsets(0, f, k, 0, out);
  return out;
}

std::vector<unsigned> mask_to_tuple(ExtMask s) {
  std::vector<unsigned> t;
  for (; s; s &= s - 1) t.push_back(static_cast<unsigned>(std::countr_zero(s)) + 1);
  return t;
}

ExtMask tuple_to_mask(std::span<const unsigned> tuple, unsigned f) {
  ExtMask s = 0;
  unsigned prev = 0;
  for (unsigned i : tuple) {
    if (i < 1 || i > f) throw StructuralError("exterior index " + std::to_string(i) + " outside [1, f]");
    if (i <= prev) throw StructuralError("exterior index tuple must be strictly increasing");
    s |= ExtMask{1} << (i - 1);
    prev = i;
  }
  return s;
}

std::vector<DivMono> monomials_Y(unsigned g, unsigned i) {
  std::vector<DivMono> out;
  if (g == 0) {
    if (i == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> exps(g, 0);
  collect_monomials(0, i, exps, out);
  return out;
}

Integer divided_product_coeff(const DivMono& a, const DivMono& b) {
  Integer c = 1;
  for (unsigned k = 0; k < a.size(); ++k) c *= gen_binomial(a[k] + b[k], a[k]);
  return c;
}

std::string DivMono::to_string(char stem) const {
  std::string out;
  for (unsigned k = 0; k < exps_.size(); ++k) {
    if (!exps_[k]) continue;
    if (!out.empty()) out += '*';
    out += stem + std::to_string(k + 1);
    if (stem == 'X')
      out += "^(" + std::to_string(exps_[k]) + ")";
    else if (exps_[k] > 1)
      out += "^" + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace pfres

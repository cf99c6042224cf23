#include "pfres/builders.hpp"

#include <bit>

#include <algorithm>
#include <functional>
#include <sstream>

#include "pfres/errors.hpp"
#include "pfres/laurent.hpp"

namespace pfres {

namespace {

using Columns = std::vector<std::map<std::uint32_t, Poly>>;

void accumulate(Columns& cols, std::size_t col, std::size_t row, const Poly& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = cols[col].try_emplace(static_cast<std::uint32_t>(row), v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) cols[col].erase(it);
  }
}

SparsePolyMatrix to_matrix(const PolyRingPtr& ring, std::size_t rows, Columns cols) {
  SparsePolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, std::move(cols[c]));
  return m;
}

// Block images shared by every builder. Each writer adds
// sign * (image of every basis element of `src`) into the columns.
class Assembler {
 public:
  explicit Assembler(const SeedData& seed) : seed_(seed), ring_(seed.ring()), field_(seed.field()) {
    for (unsigned k = 0; k < seed.g(); ++k) psi_.push_back(psi_column(seed, k));
    wedge_all_ = Ext::scalar(ring_, seed.f(), Poly::constant(ring_, std::int64_t{1}));
    for (const auto& col : psi_) wedge_all_ = wedge(wedge_all_, col);
  }

  struct Slot {
    const GradedFreeModule& module;
    std::size_t summand;
    const Summand& s() const { return module.summands()[summand]; }
    std::size_t offset() const { return module.offset(summand); }
  };

  // sum_l Psi(X_l) ^ f (x) Y_l(gamma)
  void psi(Columns& cols, Slot src, Slot tgt, int sign) const {
    const Summand& s = src.s();
    const Summand& t = tgt.s();
    for (std::size_t local = 0; local < s.rank(); ++local) {
      auto [mask, mono] = s.element(local);
      for (unsigned l = 0; l < seed_.g(); ++l) {
        if (mono[l] == 0) continue;
        DivMono lowered = DivMono::unit(seed_.g(), l).cofactor_in(mono);
        for (const auto& [bit, c] : psi_[l].terms()) {
          int w = wedge_sign(bit, mask);
          if (w == 0) continue;
          accumulate(cols, src.offset() + local, tgt.offset() + t.index(bit | mask, lowered), w * sign > 0 ? c : -c);
        }
      }
    }
  }

  // tau(f) (x) gamma
  void tau(Columns& cols, Slot src, Slot tgt, int sign) const {
    const Summand& s = src.s();
    const Summand& t = tgt.s();
    const auto& ts = seed_.tau_images();
    for (std::size_t local = 0; local < s.rank(); ++local) {
      auto [mask, mono] = s.element(local);
      for (ExtMask rest = mask; rest; rest &= rest - 1) {
        unsigned b = static_cast<unsigned>(std::countr_zero(rest));
        int w = (count_below(mask, b) % 2 ? -1 : 1) * sign;
        ExtMask smaller = mask & ~(ExtMask{1} << b);
        accumulate(cols, src.offset() + local, tgt.offset() + t.index(smaller, mono), w > 0 ? ts[b] : -ts[b]);
      }
    }
  }

  // f ^ Psi(X_1) ^ ... ^ Psi(X_g) (x) omega_G
  void corner_wedge(Columns& cols, Slot src, Slot tgt, int sign) const {
    const Summand& s = src.s();
    const Summand& t = tgt.s();
    DivMono omega = DivMono::zero(seed_.g());
    for (std::size_t local = 0; local < s.rank(); ++local) {
      ExtMask mask = s.element(local).first;
      for (const auto& [u, c] : wedge_all_.terms()) {
        int w = wedge_sign(mask, u) * sign;
        if (w == 0) continue;
        accumulate(cols, src.offset() + local, tgt.offset() + t.index(mask | u, omega), w > 0 ? c : -c);
      }
    }
  }

  void cmap(Columns& cols, Slot src, Slot tgt, int sign) const {
    const Summand& s = src.s();
    for (std::size_t local = 0; local < s.rank(); ++local) {
      Poly v = c_map(seed_, Div::basis(ring_, s.element(local).second));
      accumulate(cols, src.offset() + local, tgt.offset(), sign > 0 ? v : -v);
    }
  }

  // coeff * sum_{m of degree J-j} D(mu)(m*) ^ f (x) m(gamma)
  void xi(Columns& cols, Slot src, Slot tgt, const Integer& coeff) const {
    const Summand& s = src.s();
    const Summand& t = tgt.s();
    unsigned drop = s.div_degree() - t.div_degree();
    auto scale = field_.from_integer(coeff);
    if (field_.is_zero(scale)) return;
    const auto& forms = dmu_of_degree(drop);
    auto ms = monomials_Y(seed_.g(), drop);
    for (std::size_t local = 0; local < s.rank(); ++local) {
      auto [mask, mono] = s.element(local);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        if (!ms[k].divides(mono)) continue;
        DivMono rest = ms[k].cofactor_in(mono);
        for (const auto& [u, c] : forms[k].terms()) {
          int w = wedge_sign(u, mask);
          if (w == 0) continue;
          Poly v = c.scaled(scale);
          accumulate(cols, src.offset() + local, tgt.offset() + t.index(u | mask, rest), w > 0 ? v : -v);
        }
      }
    }
  }

  const SeedData& seed() const { return seed_; }

 private:
  // D(mu)(m*) for m in monomials_Y(g, degree), same order.
  const std::vector<Ext>& dmu_of_degree(unsigned degree) const {
    auto it = dmu_.find(degree);
    if (it != dmu_.end()) return it->second;
    std::vector<Ext> forms;
    for (const auto& m : monomials_Y(seed_.g(), degree)) {
      if (2 * degree > seed_.f())
        forms.emplace_back(ring_, seed_.f(), 0);
      else
        forms.push_back(d_mu(seed_, m));
    }
    return dmu_.emplace(degree, std::move(forms)).first->second;
  }

  const SeedData& seed_;
  PolyRingPtr ring_;
  const PrimeField& field_;
  std::vector<Ext> psi_;
  Ext wedge_all_{nullptr, 0, 0};
  mutable std::map<unsigned, std::vector<Ext>> dmu_;
};

int delta_of(const SeedData& s) { return static_cast<int>(s.delta()); }

// (i, j) with i + 2j = sum, 0 <= i <= f.
std::vector<std::pair<unsigned, unsigned>> splits(int sum, unsigned f) {
  std::vector<std::pair<unsigned, unsigned>> out;
  if (sum < 0) return out;
  for (int j = 0; 2 * j <= sum; ++j) {
    int i = sum - 2 * j;
    if (i <= static_cast<int>(f)) out.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(j));
  }
  return out;
}

struct Layout {
  std::map<int, std::vector<Summand>> parts;
  void add(int n, Summand s) { parts[n].push_back(std::move(s)); }
};

// Summands of the cone or of M, by degree; `cut` selects M.
Layout cone_layout(unsigned f, unsigned g, int eps, int top, bool cut) {
  Layout lay;
  int delta = static_cast<int>(f - g);
  for (int n = 0; n <= top; ++n) {
    for (auto [i, j] : splits(n + delta - 2, f)) {
      int jj = static_cast<int>(j);
      if (jj < eps) continue;
      if (cut && static_cast<int>(i + j) > delta - 1) continue;
      if (n < 1) continue;
      lay.add(n, Summand(SummandLabel::top(i, j), f, g, v_twist(f, g, i, j)));
    }
    if (n >= 1)
      for (auto [i, j] : splits(n + delta - 1, f)) {
        if (static_cast<int>(i + j) < delta) continue;
        if (cut && static_cast<int>(j) > eps - 1) continue;
        lay.add(n, Summand(SummandLabel::bottom(i, j), f, g, v_twist(f, g, i, j)));
      }
    if (n == 0) lay.add(0, Summand(SummandLabel::corner(f), f, g, corner_twist(f, f)));
  }
  return lay;
}

FreeComplex assemble_cone(const SeedData& seed, const std::string& name, int top, bool cut) {
  unsigned f = seed.f(), g = seed.g();
  int eps = seed.epsilon();
  int delta = delta_of(seed);
  Layout lay = cone_layout(f, g, eps, top, cut);
  FreeComplex cx(name, seed.ring());
  for (int n = 0; n <= top; ++n) cx.set_module(n, GradedFreeModule(std::move(lay.parts[n])));

  Assembler as(seed);
  for (int n = 1; n <= top; ++n) {
    const auto& src = cx.module(n);
    const auto& tgt = cx.module(n - 1);
    Columns cols(src.rank());
    std::vector<Block> blocks;
    auto link = [&](std::size_t s, const SummandLabel& label, BlockKind kind,
                    const std::function<void(Assembler::Slot, Assembler::Slot)>& write) {
      auto t = tgt.find(label);
      if (!t) return;
      write({src, s}, {tgt, *t});
      blocks.push_back({*t, s, kind});
    };
    for (std::size_t s = 0; s < src.summands().size(); ++s) {
      const SummandLabel lab = src.summands()[s].label();
      unsigned I = lab.I, J = lab.J;
      if (lab.kind == SummandKind::Top) {
        if (n == 1) {
          link(s, SummandLabel::corner(f), BlockKind::CMap,
               [&](auto a, auto b) { as.cmap(cols, a, b, 1); });
          continue;
        }
        if (J >= 1 && static_cast<int>(J) - 1 >= eps)
          link(s, SummandLabel::top(I + 1, J - 1), BlockKind::Psi, [&](auto a, auto b) { as.psi(cols, a, b, 1); });
        if (I >= 1)
          link(s, SummandLabel::top(I - 1, J), BlockKind::Tau, [&](auto a, auto b) { as.tau(cols, a, b, 1); });
        for (auto [i, j] : splits(static_cast<int>(I + 2 * J), f)) {
          if (static_cast<int>(i + j) < delta || j > J) continue;
          Integer coeff = ((I + j) % 2 ? -1 : 1) *
                          gen_binomial(static_cast<long>(J) - 1 - static_cast<long>(j), static_cast<long>(J) - eps);
          if (coeff == 0) continue;
          link(s, SummandLabel::bottom(i, j), BlockKind::Xi, [&](auto a, auto b) { as.xi(cols, a, b, coeff); });
        }
      } else if (lab.kind == SummandKind::Bottom) {
        if (J >= 1)
          link(s, SummandLabel::bottom(I + 1, J - 1), BlockKind::Psi, [&](auto a, auto b) { as.psi(cols, a, b, 1); });
        if (static_cast<int>(I + J) - 1 >= delta)
          link(s, SummandLabel::bottom(I - 1, J), BlockKind::Tau, [&](auto a, auto b) { as.tau(cols, a, b, 1); });
        if (n == 1)
          link(s, SummandLabel::corner(f), BlockKind::CornerWedge,
               [&](auto a, auto b) { as.corner_wedge(cols, a, b, 1); });
      }
    }
    cx.set_differential(n, to_matrix(seed.ring(), tgt.rank(), std::move(cols)), std::move(blocks));
  }
  return cx;
}

bool in_tot(TotKind which, int delta, int eps, unsigned i, unsigned j) {
  int sum = static_cast<int>(i + j);
  switch (which) {
    case TotKind::V: return true;
    case TotKind::U: return sum <= delta - 1;
    case TotKind::T: return static_cast<int>(j) >= eps;
    case TotKind::B: return sum >= delta;
  }
  return false;
}

int tot_bottom(TotKind which, int delta) {
  return which == TotKind::V || which == TotKind::U ? -delta : 0;
}

}  // namespace

std::string to_string(TotKind k) {
  switch (k) {
    case TotKind::V: return "V";
    case TotKind::U: return "U";
    case TotKind::T: return "T";
    case TotKind::B: return "B";
  }
  return "?";
}

int n_max(unsigned f, unsigned g, int epsilon) {
  int delta = static_cast<int>(f - g);
  int fi = static_cast<int>(f);
  if (2 * epsilon == delta - 1) {
    if (delta == 1) return 1;
    if (g == 1) return fi - 1;
    return fi - 2;
  }
  if (2 * epsilon == delta) return fi - 1;
  return fi;
}

FreeComplex build_tot(const SeedData& seed, TotKind which, std::optional<int> top) {
  unsigned f = seed.f(), g = seed.g();
  int delta = delta_of(seed), eps = seed.epsilon();
  int hi = top.value_or(n_max(f, g, eps) + 2);
  int lo = tot_bottom(which, delta);
  bool has_corners = which != TotKind::T;
  FreeComplex cx("Tot(" + to_string(which) + ")", seed.ring());
  for (int n = lo; n <= hi; ++n) {
    std::vector<Summand> parts;
    for (auto [i, j] : splits(n + delta - 1, f))
      if (in_tot(which, delta, eps, i, j)) parts.emplace_back(SummandLabel::plain(i, j), f, g, v_twist(f, g, i, j));
    if (has_corners) {
      int k = static_cast<int>(f) + n;
      bool corner = which == TotKind::V ? (n <= 0) : which == TotKind::U ? (n <= -1) : (n == 0);
      if (corner && k >= static_cast<int>(g) && k <= static_cast<int>(f))
        parts.emplace_back(SummandLabel::corner(static_cast<unsigned>(k)), f, g, corner_twist(f, k));
    }
    cx.set_module(n, GradedFreeModule(std::move(parts)));
  }

  Assembler as(seed);
  for (int n = lo + 1; n <= hi; ++n) {
    const auto& src = cx.module(n);
    const auto& tgt = cx.module(n - 1);
    Columns cols(src.rank());
    std::vector<Block> blocks;
    for (std::size_t s = 0; s < src.summands().size(); ++s) {
      const SummandLabel lab = src.summands()[s].label();
      auto link = [&](const SummandLabel& label, BlockKind kind, auto write) {
        auto t = tgt.find(label);
        if (!t) return;
        write(Assembler::Slot{src, s}, Assembler::Slot{tgt, *t});
        blocks.push_back({*t, s, kind});
      };
      if (lab.kind == SummandKind::Corner) {
        // Commuting squares in the corner column become anticommuting after a sign.
        link(SummandLabel::corner(lab.I - 1), BlockKind::NegTau, [&](auto a, auto b) { as.tau(cols, a, b, -1); });
        continue;
      }
      unsigned i = lab.I, j = lab.J;
      if (j >= 1 && in_tot(which, delta, eps, i + 1, j - 1))
        link(SummandLabel::plain(i + 1, j - 1), BlockKind::Psi, [&](auto a, auto b) { as.psi(cols, a, b, 1); });
      if (i >= 1 && in_tot(which, delta, eps, i - 1, j))
        link(SummandLabel::plain(i - 1, j), BlockKind::Tau, [&](auto a, auto b) { as.tau(cols, a, b, 1); });
      if (j == 0 && has_corners)
        link(SummandLabel::corner(i + g), BlockKind::CornerWedge,
             [&](auto a, auto b) { as.corner_wedge(cols, a, b, 1); });
    }
    cx.set_differential(n, to_matrix(seed.ring(), tgt.rank(), std::move(cols)), std::move(blocks));
  }
  return cx;
}

FreeComplex build_M(const SeedData& seed) {
  return assemble_cone(seed, "M", static_cast<int>(seed.f()) + 1, true);
}

FreeComplex build_L(const SeedData& seed, std::optional<int> top) {
  int hi = top.value_or(n_max(seed.f(), seed.g(), seed.epsilon()) + 2);
  return assemble_cone(seed, "L", hi, false);
}

ChainMap build_xi(const SeedData& seed, const FreeComplex& tot_t, const FreeComplex& tot_b) {
  unsigned f = seed.f();
  int eps = seed.epsilon(), delta = delta_of(seed);
  Assembler as(seed);
  ChainMap xi;
  for (const auto& [n, src] : tot_t.modules()) {
    const auto& tgt = tot_b.module(n);
    Columns cols(src.rank());
    std::vector<Block> blocks;
    for (std::size_t s = 0; s < src.summands().size(); ++s) {
      const SummandLabel lab = src.summands()[s].label();
      unsigned I = lab.I, J = lab.J;
      if (n == 0) {
        if (auto t = tgt.find(SummandLabel::corner(f))) {
          as.cmap(cols, {src, s}, {tgt, *t}, 1);
          blocks.push_back({*t, s, BlockKind::CMap});
        }
        continue;
      }
      for (auto [i, j] : splits(static_cast<int>(I + 2 * J), f)) {
        if (static_cast<int>(i + j) < delta || j > J) continue;
        Integer coeff = ((n + I + j) % 2 ? -1 : 1) *
                        gen_binomial(static_cast<long>(J) - 1 - static_cast<long>(j), static_cast<long>(J) - eps);
        if (coeff == 0) continue;
        auto t = tgt.find(SummandLabel::plain(i, j));
        if (!t) continue;
        as.xi(cols, {src, s}, {tgt, *t}, coeff);
        blocks.push_back({*t, s, BlockKind::Xi});
      }
    }
    xi.maps.emplace(n, to_matrix(seed.ring(), tgt.rank(), std::move(cols)));
    xi.blocks.emplace(n, std::move(blocks));
  }
  return xi;
}

std::vector<LayoutEntry> layout_M(unsigned f, unsigned g, int epsilon) {
  std::vector<LayoutEntry> out;
  Layout lay = cone_layout(f, g, epsilon, static_cast<int>(f) + 1, true);
  for (auto& [n, parts] : lay.parts) {
    GradedFreeModule m(std::move(parts));
    for (const auto& s : m.summands()) out.push_back({n, s.label(), s.twist(), s.rank()});
  }
  return out;
}

CycleTriple cycles(const SeedData& seed, int n, const Div& gamma, const FreeComplex& tot_v, const FreeComplex& tot_t,
                   const FreeComplex& tot_b) {
  int delta = delta_of(seed);
  if (n < 1 || (delta + n - 1) % 2 != 0)
    throw UnsupportedCase("cycles need N >= 1 with delta + N - 1 even");
  unsigned h = static_cast<unsigned>((delta + n - 1) / 2);
  if (gamma.degree() != h) throw StructuralError("gamma must have degree (delta + N - 1) / 2");
  CycleTriple out;
  const auto& mv = tot_v.module(n);
  const auto& mt = tot_t.module(n);
  const auto& mb = tot_b.module(n);
  for (unsigned j = 0; j <= h; ++j) {
    unsigned ext = 2 * (h - j);
    if (ext > seed.f()) continue;
    SummandLabel lab = SummandLabel::plain(ext, j);
    auto sv = mv.find(lab);
    if (!sv) continue;
    auto st = mt.find(lab);
    auto sb = mb.find(lab);
    for (const auto& m : monomials_Y(seed.g(), j)) {
      Div rest = act_Y(m, gamma);
      Ext form(seed.ring(), seed.f(), ext);
      for (const auto& [a, c] : rest.terms()) form += d_mu(seed, a).scaled(c);
      for (const auto& [mask, c] : form.terms()) {
        Poly v = j % 2 ? -c : c;
        auto put = [&](FreeElement& e, const GradedFreeModule& mod, std::size_t s) {
          std::size_t row = mod.offset(s) + mod.summands()[s].index(mask, m);
          auto [it, fresh] = e.try_emplace(row, v);
          if (!fresh) it->second += v;
        };
        put(out.in_v, mv, *sv);
        if (st) put(out.in_top, mt, *st);
        if (sb) put(out.in_bot, mb, *sb);
      }
    }
  }
  for (auto* e : {&out.in_v, &out.in_top, &out.in_bot})
    std::erase_if(*e, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string to_string(LastMapCase c) {
  switch (c) {
    case LastMapCase::CornerByC: return "top-to-corner by c";
    case LastMapCase::KoszulTau: return "Koszul tau";
    case LastMapCase::TopPsiXi: return "top column [Psi; xi]";
    case LastMapCase::TopAndBottom: return "two-by-two [Psi 0; xi tau]";
    case LastMapCase::BottomTauBesideTop: return "bottom [0; tau]";
    case LastMapCase::BottomTau: return "bottom tau";
  }
  return "?";
}

LastMapPrediction classify_last_map(unsigned f, unsigned g, int epsilon) {
  int delta = static_cast<int>(f - g);
  int gi = static_cast<int>(g);
  LastMapPrediction p{LastMapCase::BottomTau, {}};
  LastMapShape& s = p.shape;
  s.degree = n_max(f, g, epsilon);
  auto T = [](int i, int j) { return SummandLabel::top(static_cast<unsigned>(i), static_cast<unsigned>(j)); };
  auto B = [](int i, int j) { return SummandLabel::bottom(static_cast<unsigned>(i), static_cast<unsigned>(j)); };
  int fi = static_cast<int>(f);
  bool low = 2 * epsilon == delta - 1, mid = 2 * epsilon == delta, high = 2 * epsilon == delta + 1;

  if (delta == 1 && low) {
    p.which = LastMapCase::CornerByC;
    s.sources = {T(0, 0)};
    s.targets = {SummandLabel::corner(f)};
    s.nonzero_blocks = {{T(0, 0), SummandLabel::corner(f), BlockKind::CMap}};
  } else if (delta == 1) {
    p.which = LastMapCase::KoszulTau;
    s.sources = {B(fi, 0)};
    s.targets = {B(fi - 1, 0)};
    s.nonzero_blocks = {{B(fi, 0), B(fi - 1, 0), BlockKind::Tau}};
  } else if (low && gi == 1) {
    p.which = LastMapCase::TopPsiXi;
    s.sources = {T(0, delta - 1)};
    s.targets = {T(1, delta - 2), B(fi, epsilon - 1)};
    s.nonzero_blocks = {{T(0, delta - 1), T(1, delta - 2), BlockKind::Psi},
                        {T(0, delta - 1), B(fi, epsilon - 1), BlockKind::Xi}};
  } else if ((low && gi == 2) || (mid && gi == 1)) {
    p.which = LastMapCase::TopAndBottom;
    s.sources = {T(0, delta - 1), B(fi, epsilon - 1)};
    if (delta >= 3) s.targets.push_back(T(1, delta - 2));
    s.targets.push_back(B(fi - 1, epsilon - 1));
    if (delta >= 3) s.nonzero_blocks.push_back({T(0, delta - 1), T(1, delta - 2), BlockKind::Psi});
    s.nonzero_blocks.push_back({T(0, delta - 1), B(fi - 1, epsilon - 1), BlockKind::Xi});
    s.nonzero_blocks.push_back({B(fi, epsilon - 1), B(fi - 1, epsilon - 1), BlockKind::Tau});
  } else if ((low && gi == 3) || (mid && gi == 2) || (high && gi == 1)) {
    p.which = LastMapCase::BottomTauBesideTop;
    s.sources = {B(fi, epsilon - 1)};
    s.targets = {T(0, delta - 1), B(fi - 1, epsilon - 1)};
    s.nonzero_blocks = {{B(fi, epsilon - 1), B(fi - 1, epsilon - 1), BlockKind::Tau}};
  } else {
    p.which = LastMapCase::BottomTau;
    s.sources = {B(fi, epsilon - 1)};
    s.targets = {B(fi - 1, epsilon - 1)};
    s.nonzero_blocks = {{B(fi, epsilon - 1), B(fi - 1, epsilon - 1), BlockKind::Tau}};
  }
  std::sort(s.sources.begin(), s.sources.end());
  std::sort(s.targets.begin(), s.targets.end());
  std::sort(s.nonzero_blocks.begin(), s.nonzero_blocks.end());
  return p;
}

LastMapShape observe_last_map(const FreeComplex& m) {
  LastMapShape s;
  s.degree = m.top_degree();
  const auto& src = m.module(s.degree);
  const auto& tgt = m.module(s.degree - 1);
  for (const auto& x : src.summands()) s.sources.push_back(x.label());
  for (const auto& x : tgt.summands()) s.targets.push_back(x.label());
  const auto& d = m.differential(s.degree);
  for (const auto& b : m.blocks(s.degree)) {
    const auto& ss = src.summands()[b.source];
    const auto& ts = tgt.summands()[b.target];
    if (!d.block_is_zero(tgt.offset(b.target), ts.rank(), src.offset(b.source), ss.rank()))
      s.nonzero_blocks.emplace_back(ss.label(), ts.label(), b.kind);
  }
  std::sort(s.nonzero_blocks.begin(), s.nonzero_blocks.end());
  return s;
}

std::string describe(const LastMapShape& s) {
  std::ostringstream out;
  out << "d_" << s.degree << ": ";
  for (std::size_t k = 0; k < s.sources.size(); ++k) out << (k ? " + " : "") << s.sources[k].to_string();
  out << " -> ";
  for (std::size_t k = 0; k < s.targets.size(); ++k) out << (k ? " + " : "") << s.targets[k].to_string();
  out << " via";
  for (const auto& [a, b, kind] : s.nonzero_blocks)
    out << " " << a.to_string() << "->" << b.to_string() << ":" << to_string(kind);
  return out.str();
}

}  // namespace pfres

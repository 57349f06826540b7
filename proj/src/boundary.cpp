// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/boundary.hpp>

#include <algorithm>
#include <cmath>

namespace afock {

std::int64_t z1(const ZSymbol& z, const LengthPair& lengths) {
  std::int64_t acc = 0;
  for (Element x : z) acc += lengths.of_site(x);
  return acc;
}

WeightVector omega(const ZSymbol& z, const LengthPair& lengths) {
  WeightVector w;
  if (z.empty()) {
    w.emplace(0, Rational(1));
    return w;
  }
  const auto n = static_cast<std::int64_t>(z0(z));
  for (Element x : z) w.emplace(x, Rational(n + lengths.of_site(x)));
  return w;
}

WeightVector mu(const ZSymbol& z, const LengthPair& lengths) {
  WeightVector w = omega(z, lengths);
  const Rational total = l1_norm(w);
  for (auto& [x, v] : w) v /= total;
  return w;
}

Rational l1_norm(const WeightVector& w) {
  Rational acc = 0;
  for (const auto& [x, v] : w) acc += abs(v);
  return acc;
}

Rational l1_distance(const WeightVector& a, const WeightVector& b) {
  Rational acc = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      acc += abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      acc += abs(ib->second);
      ++ib;
    } else {
      acc += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return acc;
}

WeightVector pushforward(const GroupAction& action, std::size_t g, const WeightVector& w) {
  WeightVector out;
  for (const auto& [x, v] : w) out[action.act(g, x)] += v;
  return out;
}

ZSymbol act(const GroupAction& action, std::size_t g, const ZSymbol& z) {
  std::vector<Element> img;
  img.reserve(z.size());
  for (Element x : z) img.push_back(action.act(g, x));
  return ZSymbol::from_unsorted(std::move(img));
}

DefectReport equivariance_defect(const GroupAction& action, const LengthPair& lengths, std::size_t g,
                                 const ZSymbol& z) {
  if (z.empty()) throw InputError("equivariance defect: z must not be the empty symbol");
  const ZSymbol gz = act(action, g, z);
  DefectReport r;
  r.omega_defect = l1_distance(pushforward(action, g, omega(z, lengths)), omega(gz, lengths));
  r.defect = l1_distance(pushforward(action, g, mu(z, lengths)), mu(gz, lengths));
  const auto n = static_cast<std::int64_t>(z0(z));
  const std::int64_t lg = lengths.of_group(g);
  r.omega_bound = Rational(n * lg);
  r.bound = Rational(2 * lg * n, n * n + z1(z, lengths));
  return r;
}

DefectReport extension_defect(const LengthPair& lengths, Element x, const ZSymbol& z) {
  if (z.contains(x)) throw InputError("extension defect: x already belongs to z");
  const ZSymbol xz = z.with(x);
  DefectReport r;
  r.omega_defect = l1_distance(omega(z, lengths), omega(xz, lengths));
  r.defect = l1_distance(mu(z, lengths), mu(xz, lengths));
  const auto n = static_cast<std::int64_t>(z0(z));
  const std::int64_t num = 2 * n + 1 + lengths.of_site(x);
  r.omega_bound = Rational(num);
  if (z.empty()) {
    r.excluded = true;
    r.bound = 0;
  } else {
    r.bound = Rational(2 * num, n * n + z1(z, lengths));
  }
  return r;
}

double mu_star(const std::vector<double>& phi, const ZSymbol& z, const LengthPair& lengths) {
  double acc = 0.0;
  for (const auto& [x, v] : mu(z, lengths)) acc += phi.at(x) * to_double(v);
  return acc;
}

SymbolFunction mu_star_symbol(std::vector<double> phi, const LengthPair& lengths) {
  return [phi = std::move(phi), lengths](const SlaterIndex& z) -> cplx { return mu_star(phi, z, lengths); };
}

std::uint64_t sublevel_count(const LengthPair& lengths, std::int64_t radius) {
  if (radius < 0) return 0;
  std::vector<std::uint64_t> count(static_cast<std::size_t>(radius) + 1, 0);
  count[0] = 1;
  for (std::int64_t len : lengths.site) {
    const std::int64_t w = 1 + len;
    for (std::int64_t r = radius; r >= w; --r) count[static_cast<std::size_t>(r)] += count[static_cast<std::size_t>(r - w)];
  }
  std::uint64_t total = 0;
  for (auto c : count) total += c;
  return total;
}

// ---------------------------------------------------------------------------

double CommutationReport::worst() const { return std::max({left_shift, left_avoid, right_shift, right_avoid}); }

SymbolFunction shifted_symbol(const SymbolFunction& f, Element x) {
  return [f, x](const SlaterIndex& z) -> cplx { return z.contains(x) ? cplx{} : f(z.with(x)); };
}

SymbolFunction avoid_indicator(Element x) {
  return [x](const SlaterIndex& z) -> cplx { return z.contains(x) ? 0.0 : 1.0; };
}

CommutationReport commutation_identities(const SymbolFunction& f, Element x, const std::vector<ZSymbol>& samples,
                                         std::size_t sites) {
  if (x >= sites) throw InputError("commutation identities: label out of range");
  const SymbolFunction fx = shifted_symbol(f, x);
  const SymbolFunction ind = avoid_indicator(x);
  CommutationReport r;
  for (const auto& z : samples) {
    const FockVector b = FockVector::basis(z);
    auto diff = [&](const OpWord& a, const OpWord& c) {
      return (apply(a, b, sites) - apply(c, b, sites)).norm();
    };
    OpWord lhs1{{letter::Diagonal{f}, letter::CreateLeft{x}}};
    OpWord rhs1{{letter::CreateLeft{x}, letter::Diagonal{fx}}};
    OpWord lhs2{{letter::CreateLeft{x}, letter::Diagonal{f}}};
    OpWord rhs2{{letter::CreateLeft{x}, letter::Diagonal{f}, letter::Diagonal{ind}}};
    r.left_shift = std::max(r.left_shift, diff(lhs1, rhs1));
    r.left_avoid = std::max(r.left_avoid, diff(lhs2, rhs2));
    OpWord lhs3{{letter::Diagonal{f}, letter::CreateRight{x}}};
    OpWord rhs3{{letter::CreateRight{x}, letter::Diagonal{fx}}};
    OpWord lhs4{{letter::CreateRight{x}, letter::Diagonal{f}}};
    OpWord rhs4{{letter::CreateRight{x}, letter::Diagonal{f}, letter::Diagonal{ind}}};
    r.right_shift = std::max(r.right_shift, diff(lhs3, rhs3));
    r.right_avoid = std::max(r.right_avoid, diff(lhs4, rhs4));
  }
  return r;
}

DecayTable commutator_decay(const std::vector<double>& phi, Element x, const std::vector<ZSymbol>& sequence,
                            const LengthPair& lengths) {
  const std::size_t sites = lengths.site.size();
  if (phi.size() != sites) throw InputError("commutator decay: φ must be tabulated on all of X");
  if (x >= sites) throw InputError("commutator decay: label out of range");
  double sup = 0.0;
  for (double v : phi) sup = std::max(sup, std::abs(v));
  const SymbolFunction d = mu_star_symbol(phi, lengths);

  DecayTable t;
  for (const auto& z : sequence) {
    if (z.empty()) throw InputError("commutator decay: z must not be the empty symbol");
    const FockVector b = FockVector::basis(z);
    DecayRow row;
    row.n = z0(z);
    row.weighted = z1(z, lengths);
    const FockVector cl = apply(OpWord{{letter::Diagonal{d}, letter::CreateLeft{x}}}, b, sites) -
                          apply(OpWord{{letter::CreateLeft{x}, letter::Diagonal{d}}}, b, sites);
    const FockVector cr = apply(OpWord{{letter::Diagonal{d}, letter::CreateRight{x}}}, b, sites) -
                          apply(OpWord{{letter::CreateRight{x}, letter::Diagonal{d}}}, b, sites);
    row.measured = std::max(cl.norm(), cr.norm());
    const auto n = static_cast<double>(row.n);
    row.bound = 2.0 / (n * n + static_cast<double>(row.weighted)) *
                (2.0 * n + 1.0 + static_cast<double>(lengths.of_site(x))) * sup;
    if (!t.rows.empty() && !(row.bound < t.rows.back().bound)) t.decreasing = false;
    t.dominated = t.dominated && row.dominated();
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace afock

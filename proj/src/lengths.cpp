// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/lengths.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace afock {

LengthPair build_lengths(const GroupAction& action) { return build_lengths(action, action.generators()); }

LengthPair build_lengths(const GroupAction& action, const std::vector<std::size_t>& generators) {
  const std::size_t n = action.order();
  std::vector<std::size_t> gens;
  for (std::size_t s : generators) {
    if (s >= n) throw InputError("lengths: generator index out of range");
    for (std::size_t t : {s, action.inverse(s)}) {
      if (t != action.identity() && std::find(gens.begin(), gens.end(), t) == gens.end()) gens.push_back(t);
    }
  }

  LengthPair out;
  constexpr auto kUnset = std::numeric_limits<std::int64_t>::max();
  out.word.assign(n, kUnset);
  out.word[action.identity()] = 0;
  std::deque<std::size_t> queue{action.identity()};
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    for (std::size_t s : gens) {
      const std::size_t gs = action.multiply(g, s);
      if (out.word[gs] == kUnset) {
        out.word[gs] = out.word[g] + 1;
        queue.push_back(gs);
      }
    }
  }
  if (std::find(out.word.begin(), out.word.end(), kUnset) != out.word.end()) {
    throw InputError("lengths: generators do not generate the group");
  }

  // Permutation groups act faithfully on X0, so the kernel is {e}; computed anyway.
  const std::size_t k = action.index().base_size();
  for (std::size_t g = 0; g < n; ++g) {
    bool trivial = true;
    for (Element x = 0; x < k; ++x) trivial = trivial && action.act(g, x) == x;
    if (trivial) out.kernel.push_back(g);
  }
  out.group.assign(n, kUnset);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t l : out.kernel) out.group[g] = std::min(out.group[g], out.word[action.multiply(g, l)]);
  }

  out.orbit_rep.assign(k, 0);
  std::vector<std::int64_t> base_len(k, kUnset);
  for (Element x = 0; x < k; ++x) {
    Element rep = x;
    for (std::size_t g = 0; g < n; ++g) rep = std::min(rep, action.act(g, x));
    out.orbit_rep[x] = rep;
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (Element x = 0; x < k; ++x) {
      if (out.orbit_rep[x] != x) continue;
      const Element y = action.act(h, x);
      base_len[y] = std::min(base_len[y], out.word[h]);
    }
  }
  out.site.resize(2 * k);
  for (Element x = 0; x < k; ++x) {
    out.site[x] = base_len[x];
    out.site[x + k] = base_len[x];
  }
  return out;
}

LengthAxiomReport check_length_axioms(const GroupAction& action, const LengthPair& lengths) {
  LengthAxiomReport r;
  const std::size_t n = action.order();
  for (std::size_t g = 0; g < n; ++g) {
    const bool in_kernel = std::find(lengths.kernel.begin(), lengths.kernel.end(), g) != lengths.kernel.end();
    r.kernel = r.kernel && ((lengths.group[g] == 0) == in_kernel);
    r.symmetric = r.symmetric && lengths.group[g] == lengths.group[action.inverse(g)];
    for (std::size_t h = 0; h < n; ++h) {
      r.subadditive = r.subadditive && lengths.group[action.multiply(g, h)] <= lengths.group[g] + lengths.group[h];
    }
    for (Element x = 0; x < lengths.site.size(); ++x) {
      r.action = r.action && lengths.site[action.act(g, x)] <= lengths.group[g] + lengths.site[x];
    }
  }
  // Sublevel sets of X: counts are finite by construction; check monotone in R.
  const std::int64_t top = lengths.site.empty() ? 0 : *std::max_element(lengths.site.begin(), lengths.site.end());
  std::size_t prev = 0;
  for (std::int64_t radius = 0; radius <= top; ++radius) {
    const auto c = static_cast<std::size_t>(
        std::count_if(lengths.site.begin(), lengths.site.end(), [radius](std::int64_t l) { return l <= radius; }));
    r.proper = r.proper && c >= prev;
    prev = c;
  }
  r.proper = r.proper && prev == lengths.site.size();
  return r;
}

std::vector<std::int64_t> stabilizer_max_lengths(const GroupAction& action, const LengthPair& lengths) {
  const std::size_t n = action.order();
  std::vector<Element> reps(lengths.orbit_rep.begin(), lengths.orbit_rep.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (Element r : reps) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (std::size_t l = 0; l < n; ++l) {
        if (action.act(l, r) == r) best = std::min(best, lengths.word[action.multiply(g, l)]);
      }
      out[g] = std::max(out[g], best);
    }
  }
  return out;
}

}  // namespace afock

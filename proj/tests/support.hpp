#pragma once

// Shared test helpers and a naive reference model. The model stores a soft
// set as one std::set of element indices per parameter and implements every
// operator straight from its definition, with no bitsets and no kernels.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "softtop/mapping.hpp"
#include "softtop/oracle.hpp"
#include "softtop/problem.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SOFTTOP_FIXTURE_DIR) / name;
}

inline ProblemFile load_fixture(const std::string& name, bool validate = true) {
  return load_problem(fixture(name), ParseOptions{validate});
}

inline SoftSet random_soft_set(const SoftContext& ctx, std::mt19937_64& rng) {
  CellSet cells(ctx.cell_count());
  for (std::size_t c = 0; c < ctx.cell_count(); ++c)
    if (rng() & 1U) cells.set(c);
  return {ctx, cells};
}

inline SoftContext random_context(std::mt19937_64& rng, std::size_t max_x, std::size_t max_e, char prefix = 'x') {
  const std::size_t n = 1 + rng() % max_x;
  const std::size_t e = 1 + rng() % max_e;
  return synthetic_context(prefix, n, e);
}

namespace naive {

using Sets = std::vector<std::set<std::size_t>>;

struct Soft {
  Sets f;
  friend bool operator==(const Soft&, const Soft&) = default;
  friend auto operator<=>(const Soft&, const Soft&) = default;
};

inline Soft from(const SoftSet& a) {
  Soft s{Sets(a.context().parameter_count())};
  for (std::size_t p = 0; p < s.f.size(); ++p)
    for (std::size_t x = 0; x < a.context().universe_size(); ++x)
      if (a.contains(p, x)) s.f[p].insert(x);
  return s;
}

inline SoftSet to(const SoftContext& ctx, const Soft& s) {
  CellSet cells(ctx.cell_count());
  for (std::size_t p = 0; p < s.f.size(); ++p)
    for (std::size_t x : s.f[p]) cells.set(ctx.cell(p, x));
  return {ctx, cells};
}

inline Soft absolute(std::size_t n, std::size_t e) {
  Soft s{Sets(e)};
  for (auto& row : s.f)
    for (std::size_t x = 0; x < n; ++x) row.insert(x);
  return s;
}

inline Soft unite(const Soft& a, const Soft& b) {
  Soft s = a;
  for (std::size_t p = 0; p < s.f.size(); ++p) s.f[p].insert(b.f[p].begin(), b.f[p].end());
  return s;
}

inline Soft intersect(const Soft& a, const Soft& b) {
  Soft s{Sets(a.f.size())};
  for (std::size_t p = 0; p < s.f.size(); ++p)
    for (std::size_t x : a.f[p])
      if (b.f[p].count(x)) s.f[p].insert(x);
  return s;
}

inline Soft complement(const Soft& a, std::size_t n) {
  Soft s{Sets(a.f.size())};
  for (std::size_t p = 0; p < s.f.size(); ++p)
    for (std::size_t x = 0; x < n; ++x)
      if (!a.f[p].count(x)) s.f[p].insert(x);
  return s;
}

inline bool subset(const Soft& a, const Soft& b) {
  for (std::size_t p = 0; p < a.f.size(); ++p)
    for (std::size_t x : a.f[p])
      if (!b.f[p].count(x)) return false;
  return true;
}

struct Space {
  std::size_t n = 0;
  std::size_t e = 0;
  std::set<Soft> opens;

  explicit Space(const SoftTopology& t) : n(t.context().universe_size()), e(t.context().parameter_count()) {
    for (const auto& s : t.open_sets()) opens.insert(from(s));
  }

  bool is_open(const Soft& a) const { return opens.count(a) > 0; }
  bool is_closed(const Soft& a) const { return is_open(complement(a, n)); }

  Soft closure(const Soft& a) const {
    Soft out = absolute(n, e);
    for (const Soft& o : opens) {
      const Soft c = complement(o, n);
      if (subset(a, c)) out = intersect(out, c);
    }
    return out;
  }

  Soft interior(const Soft& a) const {
    Soft out{Sets(e)};
    for (const Soft& o : opens)
      if (subset(o, a)) out = unite(out, o);
    return out;
  }

  // Ordinary closure of `subset` in the topology induced at parameter p.
  std::set<std::size_t> induced_closure(std::size_t p, const std::set<std::size_t>& subset_) const {
    std::set<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x) out.insert(x);
    for (const Soft& o : opens) {
      std::set<std::size_t> closed;
      for (std::size_t x = 0; x < n; ++x)
        if (!o.f[p].count(x)) closed.insert(x);
      bool contains = true;
      for (std::size_t x : subset_) contains = contains && closed.count(x);
      if (!contains) continue;
      std::set<std::size_t> meet;
      for (std::size_t x : out)
        if (closed.count(x)) meet.insert(x);
      out = meet;
    }
    return out;
  }

  Soft parameterwise_closure(const Soft& a) const {
    Soft out{Sets(e)};
    for (std::size_t p = 0; p < e; ++p) out.f[p] = induced_closure(p, a.f[p]);
    return out;
  }
};

inline Soft image(const std::vector<std::size_t>& f, const Soft& a) {
  Soft s{Sets(a.f.size())};
  for (std::size_t p = 0; p < a.f.size(); ++p)
    for (std::size_t x : a.f[p]) s.f[p].insert(f[x]);
  return s;
}

inline Soft preimage(const std::vector<std::size_t>& f, const Soft& b) {
  Soft s{Sets(b.f.size())};
  for (std::size_t p = 0; p < b.f.size(); ++p)
    for (std::size_t x = 0; x < f.size(); ++x)
      if (b.f[p].count(f[x])) s.f[p].insert(x);
  return s;
}

inline std::vector<std::size_t> points_of(const SoftMapping& f) {
  return {f.point_map().begin(), f.point_map().end()};
}

inline bool continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  const Space s(tau);
  for (const SoftSet& g : sigma.open_sets())
    if (!s.is_open(preimage(points_of(f), from(g)))) return false;
  return true;
}

inline bool open_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  const Space t(sigma);
  for (const SoftSet& o : tau.open_sets())
    if (!t.is_open(image(points_of(f), from(o)))) return false;
  return true;
}

inline bool closed_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  const Space s(tau);
  const Space t(sigma);
  for (const SoftSet& o : tau.open_sets())
    if (!t.is_closed(image(points_of(f), complement(from(o), s.n)))) return false;
  return true;
}

// Every collection of soft sets over an n*e <= 4 context that is closed under
// pairwise union and intersection and contains the null and absolute sets.
inline std::size_t count_topologies(std::size_t n, std::size_t e) {
  const std::size_t cells = n * e;
  const std::size_t sets = std::size_t{1} << cells;
  const std::uint64_t full = sets - 1;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
    if (!(mask & 1U) || !((mask >> full) & 1U)) continue;
    bool ok = true;
    for (std::uint64_t a = 0; a < sets && ok; ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (std::uint64_t b = 0; b < sets && ok; ++b)
        if ((mask >> b) & 1U) ok = ((mask >> (a | b)) & 1U) && ((mask >> (a & b)) & 1U);
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace naive

}  // namespace softtop::test

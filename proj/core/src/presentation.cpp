#include "zeta3/presentation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>

#include "zeta3/error.hpp"

namespace zeta3 {

std::optional<int> TrianglePresentation::completion(int x, int y) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), Triple{x, y, -1});
  if (it != triples.end() && (*it)[0] == x && (*it)[1] == y) return (*it)[2];
  return std::nullopt;
}

std::optional<std::size_t> TrianglePresentation::index_of(const Triple& t) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  if (it != triples.end() && *it == t) return static_cast<std::size_t>(it - triples.begin());
  return std::nullopt;
}

std::vector<std::string> presentation_violations(const TrianglePresentation& t) {
  std::vector<std::string> out = plane_axiom_violations(t.plane);
  if (!out.empty()) return out;
  const int n = static_cast<int>(t.plane.size());
  const int q = t.plane.q;

  if (static_cast<int>(t.lambda.size()) != n) {
    out.push_back("lambda has " + std::to_string(t.lambda.size()) + " entries, expected " + std::to_string(n));
    return out;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x = 0; x < n; ++x) {
    const int l = t.lambda[static_cast<std::size_t>(x)];
    if (l < 0 || l >= n) {
      out.push_back("lambda(" + std::to_string(x) + ") = " + std::to_string(l) + " is not a line");
      return out;
    }
    if (seen[static_cast<std::size_t>(l)]) out.push_back("lambda is not injective at line " + std::to_string(l));
    seen[static_cast<std::size_t>(l)] = true;
  }

  for (const auto& tr : t.triples) {
    for (int v : tr) {
      if (v < 0 || v >= n) {
        out.push_back("triple mentions point " + std::to_string(v) + " outside the plane");
        return out;
      }
    }
  }
  if (!std::is_sorted(t.triples.begin(), t.triples.end())) out.push_back("triples are not sorted");
  if (std::adjacent_find(t.triples.begin(), t.triples.end()) != t.triples.end()) {
    out.push_back("duplicate triple");
  }

  auto name = [](const Triple& tr) {
    return "(" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," + std::to_string(tr[2]) + ")";
  };
  for (const auto& tr : t.triples) {
    if (!t.index_of({tr[1], tr[2], tr[0]})) out.push_back("rotation of " + name(tr) + " missing");
    if (!t.plane.incident(static_cast<std::size_t>(tr[1]), static_cast<std::size_t>(t.lambda[static_cast<std::size_t>(tr[0])]))) {
      out.push_back("triple " + name(tr) + " has y off lambda(x)");
    }
  }
  for (std::size_t i = 1; i < t.triples.size(); ++i) {
    if (t.triples[i][0] == t.triples[i - 1][0] && t.triples[i][1] == t.triples[i - 1][1]) {
      out.push_back("completion of (" + std::to_string(t.triples[i][0]) + "," +
                    std::to_string(t.triples[i][1]) + ") is not unique");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y : t.plane.points_on(static_cast<std::size_t>(t.lambda[static_cast<std::size_t>(x)]))) {
      if (!t.completion(x, y)) {
        out.push_back("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has no completion");
      }
    }
  }
  const std::size_t expected = static_cast<std::size_t>(n * (q + 1));
  if (t.triples.size() != expected) {
    out.push_back("|T| = " + std::to_string(t.triples.size()) + ", expected " + std::to_string(expected));
  }
  return out;
}

bool is_torsion_free(const TrianglePresentation& t) {
  return std::none_of(t.triples.begin(), t.triples.end(),
                      [](const Triple& tr) { return tr[0] == tr[1] && tr[1] == tr[2]; });
}

namespace {

// Plain backtracking in presentation order. Slow for q = 3, where ~10^7
// partial bijections survive the local checks.
class Enumerator {
 public:
  using Visitor = std::function<bool(const TrianglePresentation&)>;

  Enumerator(const IncidenceStructure& plane, bool allow_torsion, const Visitor& visit)
      : plane_(plane),
        n_(static_cast<int>(plane.size())),
        allow_torsion_(allow_torsion),
        lambda_(static_cast<std::size_t>(n_), -1),
        line_used_(static_cast<std::size_t>(n_), false),
        completion_(static_cast<std::size_t>(n_ * n_), -1),
        visit_(visit) {
    for (int l = 0; l < n_; ++l) on_line_.push_back(plane.points_on(static_cast<std::size_t>(l)));
  }

  bool run() { return assign_lambda(0); }

 private:
  bool incident(int p, int l) const {
    return plane_.incident(static_cast<std::size_t>(p), static_cast<std::size_t>(l));
  }
  int lam(int x) const { return lambda_[static_cast<std::size_t>(x)]; }
  int& done(int x, int y) { return completion_[static_cast<std::size_t>(x * n_ + y)]; }
  bool torsion(int x, int y, int z) const { return !allow_torsion_ && x == y && y == z; }

  // Every admissible pair between assigned points still has a candidate z.
  bool lambda_feasible() const {
    for (int x = 0; x < n_; ++x) {
      if (lam(x) < 0) continue;
      for (int y : on_line_[static_cast<std::size_t>(lam(x))]) {
        if (lam(y) < 0) continue;
        bool ok = false;
        for (int z : on_line_[static_cast<std::size_t>(lam(y))]) {
          if (torsion(x, y, z)) continue;
          if (lam(z) < 0 || incident(x, lam(z))) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  bool assign_lambda(int x) {
    if (x == n_) {
      pairs_.clear();
      for (int a = 0; a < n_; ++a) {
        for (int b : on_line_[static_cast<std::size_t>(lam(a))]) pairs_.emplace_back(a, b);
      }
      return complete(0);
    }
    for (int l = 0; l < n_; ++l) {
      if (line_used_[static_cast<std::size_t>(l)]) continue;
      lambda_[static_cast<std::size_t>(x)] = l;
      line_used_[static_cast<std::size_t>(l)] = true;
      const bool stop = lambda_feasible() && assign_lambda(x + 1);
      line_used_[static_cast<std::size_t>(l)] = false;
      if (stop) return true;
    }
    lambda_[static_cast<std::size_t>(x)] = -1;
    return false;
  }

  bool placeable(int x, int y, int z) {
    if (torsion(x, y, z) || !incident(x, lam(z))) return false;
    if (x == y && y == z) return done(x, x) < 0;
    return done(y, z) < 0 && done(z, x) < 0;
  }

  void set(int x, int y, int z, int value) {
    done(x, y) = value < 0 ? -1 : z;
    done(y, z) = value < 0 ? -1 : x;
    done(z, x) = value < 0 ? -1 : y;
  }

  // Forward check: every uncovered pair keeps at least one completion.
  bool pairs_feasible() {
    for (const auto& [x, y] : pairs_) {
      if (done(x, y) >= 0) continue;
      bool ok = false;
      for (int z : on_line_[static_cast<std::size_t>(lam(y))]) {
        if (placeable(x, y, z)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool complete(std::size_t from) {
    std::size_t k = from;
    while (k < pairs_.size() && done(pairs_[k].first, pairs_[k].second) >= 0) ++k;
    if (k == pairs_.size()) return emit();
    const auto [x, y] = pairs_[k];
    for (int z : on_line_[static_cast<std::size_t>(lam(y))]) {
      if (!placeable(x, y, z)) continue;
      set(x, y, z, 1);
      const bool stop = pairs_feasible() && complete(k + 1);
      set(x, y, z, -1);
      if (stop) return true;
    }
    return false;
  }

  bool emit() {
    TrianglePresentation t;
    t.plane = plane_;
    t.lambda = lambda_;
    for (const auto& [x, y] : pairs_) t.triples.push_back({x, y, done(x, y)});
    std::sort(t.triples.begin(), t.triples.end());
    return visit_(t);
  }

  const IncidenceStructure& plane_;
  int n_;
  bool allow_torsion_;
  std::vector<std::vector<int>> on_line_;
  std::vector<int> lambda_;
  std::vector<bool> line_used_;
  std::vector<int> completion_;
  std::vector<std::pair<int, int>> pairs_;
  const Visitor& visit_;
};

constexpr int kMaxPoints = 31;
using Mask = std::uint32_t;

// Exact existence check for a presentation extending a partial one. Points
// may still lack a line; req[a] collects the heads of covered arcs out of a,
// which the eventual lambda(a) must contain.
class Oracle {
 public:
  struct State {
    std::array<std::int8_t, kMaxPoints> lam;
    std::array<std::array<std::int8_t, kMaxPoints>, kMaxPoints> done;
    std::array<Mask, kMaxPoints> req;
    Mask used = 0;
  };

  Oracle(const IncidenceStructure& plane, bool allow_torsion)
      : n_(static_cast<int>(plane.size())), allow_torsion_(allow_torsion) {
    for (int l = 0; l < n_; ++l) {
      Mask m = 0;
      for (int x : plane.points_on(static_cast<std::size_t>(l))) m |= Mask{1} << x;
      line_mask_.push_back(m);
    }
  }

  int size() const { return n_; }
  Mask line(int l) const { return line_mask_[static_cast<std::size_t>(l)]; }

  State empty() const {
    State s;
    s.lam.fill(-1);
    for (auto& row : s.done) row.fill(-1);
    s.req.fill(0);
    return s;
  }

  bool assign(State& s, int x, int l) const {
    if (s.lam[idx(x)] >= 0 || (s.used >> l & 1U) || (line(l) & s.req[idx(x)]) != s.req[idx(x)]) return false;
    s.lam[idx(x)] = static_cast<std::int8_t>(l);
    s.used |= Mask{1} << l;
    return propagate(s);
  }

  bool place(State& s, int x, int y, int z) const {
    if (!can_place(s, x, y, z)) return false;
    s.done[idx(x)][idx(y)] = static_cast<std::int8_t>(z);
    s.done[idx(y)][idx(z)] = static_cast<std::int8_t>(x);
    s.done[idx(z)][idx(x)] = static_cast<std::int8_t>(y);
    s.req[idx(x)] |= Mask{1} << y;
    s.req[idx(y)] |= Mask{1} << z;
    s.req[idx(z)] |= Mask{1} << x;
    return propagate(s);
  }

  bool solvable(const State& s) const {
    int best = n_ + 1, bx = -1, by = -1;  // by < 0: branch on lambda(bx)
    for (int x = 0; x < n_; ++x) {
      if (s.lam[idx(x)] < 0) {
        const int c = lines_containing(s, s.req[idx(x)], nullptr);
        if (c < best) {
          best = c;
          bx = x;
          by = -1;
        }
        continue;
      }
      for (Mask m = line(s.lam[idx(x)]); m != 0; m &= m - 1) {
        const int y = std::countr_zero(m);
        if (s.done[idx(x)][idx(y)] >= 0) continue;
        int c = 0;
        for (int z = 0; z < n_; ++z) c += can_place(s, x, y, z) ? 1 : 0;
        if (c < best) {
          best = c;
          bx = x;
          by = y;
        }
      }
    }
    if (bx < 0) return true;
    if (best == 0) return false;
    for (int v = 0; v < n_; ++v) {
      State t = s;
      const bool ok = by < 0 ? assign(t, bx, v) : place(t, bx, by, v);
      if (ok && solvable(t)) return true;
    }
    return false;
  }

 private:
  static std::size_t idx(int x) { return static_cast<std::size_t>(x); }

  int lines_containing(const State& s, Mask need, int* last) const {
    int c = 0;
    for (int l = 0; l < n_; ++l) {
      if (!(s.used >> l & 1U) && (line(l) & need) == need) {
        ++c;
        if (last != nullptr) *last = l;
      }
    }
    return c;
  }

  bool heads_fit(const State& s, int a, Mask heads) const {
    const Mask need = s.req[idx(a)] | heads;
    if (s.lam[idx(a)] >= 0) return (line(s.lam[idx(a)]) & need) == need;
    return lines_containing(s, need, nullptr) > 0;
  }

  bool can_place(const State& s, int x, int y, int z) const {
    if (x == y && y == z) return allow_torsion_ && s.done[idx(x)][idx(x)] < 0 && heads_fit(s, x, Mask{1} << x);
    if (s.done[idx(x)][idx(y)] >= 0 || s.done[idx(y)][idx(z)] >= 0 || s.done[idx(z)][idx(x)] >= 0) return false;
    std::array<Mask, 3> heads{};
    const std::array<int, 3> tails{x, y, z};
    const std::array<int, 3> to{y, z, x};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (tails[j] == tails[i]) heads[i] |= Mask{1} << to[j];
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (!heads_fit(s, tails[i], heads[i])) return false;
    }
    return true;
  }

  // A point whose required heads fit a single free line gets that line.
  bool propagate(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < n_; ++a) {
        if (s.lam[idx(a)] >= 0) continue;
        int last = -1;
        const int c = lines_containing(s, s.req[idx(a)], &last);
        if (c == 0) return false;
        if (c == 1 && s.req[idx(a)] != 0) {
          s.lam[idx(a)] = static_cast<std::int8_t>(last);
          s.used |= Mask{1} << last;
          changed = true;
        }
      }
    }
    return true;
  }

  int n_;
  bool allow_torsion_;
  std::vector<Mask> line_mask_;
};

TrianglePresentation greedy_first(const IncidenceStructure& plane, bool allow_torsion) {
  const Oracle oracle(plane, allow_torsion);
  const int n = oracle.size();
  auto exhausted = [&] {
    return ConstructionError("find_triangle_presentation: no presentation exists over the plane of order " +
                             std::to_string(plane.q) + (allow_torsion ? "" : " without torsion triples"));
  };
  Oracle::State s = oracle.empty();
  for (int x = 0; x < n; ++x) {
    bool fixed = false;
    for (int l = 0; l < n && !fixed; ++l) {
      Oracle::State t = s;
      if (oracle.assign(t, x, l) && oracle.solvable(t)) {
        s = t;
        fixed = true;
      }
    }
    if (!fixed) throw exhausted();
  }
  TrianglePresentation out;
  out.plane = plane;
  for (int x = 0; x < n; ++x) {
    const int l = s.lam[static_cast<std::size_t>(x)];
    out.lambda.push_back(l);
    for (Mask m = oracle.line(l); m != 0; m &= m - 1) {
      const int y = std::countr_zero(m);
      auto& z = s.done[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      for (int v = 0; v < n && z < 0; ++v) {
        Oracle::State t = s;
        if (oracle.place(t, x, y, v) && oracle.solvable(t)) s = t;
      }
      if (z < 0) throw InternalError("find_triangle_presentation: greedy completion lost feasibility");
      out.triples.push_back({x, y, z});
    }
  }
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

}  // namespace

bool for_each_triangle_presentation(const IncidenceStructure& plane, bool allow_torsion,
                                    const std::function<bool(const TrianglePresentation&)>& visit) {
  if (auto bad = plane_axiom_violations(plane); !bad.empty()) {
    throw ConstructionError("invalid plane: " + bad.front());
  }
  Enumerator search(plane, allow_torsion, visit);
  return search.run();
}

TrianglePresentation find_triangle_presentation(const IncidenceStructure& plane,
                                                const PresentationSearchOptions& options) {
  if (auto bad = plane_axiom_violations(plane); !bad.empty()) {
    throw ConstructionError("find_triangle_presentation: invalid plane: " + bad.front());
  }
  if (plane.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw ConstructionError("find_triangle_presentation: plane too large");
  }
  const std::size_t n = plane.size();
  const std::size_t triple_count = n * static_cast<std::size_t>(plane.q + 1);
  if (!options.allow_torsion && triple_count % 3 != 0) {
    throw ConstructionError("find_triangle_presentation: |T| = " + std::to_string(triple_count) +
                            " is not divisible by 3, so every presentation over the plane of order " +
                            std::to_string(plane.q) + " has a torsion triple (x,x,x); allow torsion to proceed");
  }
  if (!options.cover_requirement) return greedy_first(plane, options.allow_torsion);

  const auto& req = *options.cover_requirement;
  std::optional<TrianglePresentation> found;
  for_each_triangle_presentation(plane, options.allow_torsion, [&](const TrianglePresentation& t) {
    if (connected_voltages(t, req.modulus).size() < req.min_connected) return false;
    found = t;
    return true;
  });
  if (!found) {
    throw ConstructionError("find_triangle_presentation: no presentation over the plane of order " +
                            std::to_string(plane.q) + " has " + std::to_string(req.min_connected) +
                            " connected covers of modulus " + std::to_string(req.modulus));
  }
  return std::move(*found);
}

}  // namespace zeta3

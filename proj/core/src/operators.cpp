#include "zeta3/operators.hpp"

#include <map>

#include "zeta3/error.hpp"

namespace zeta3 {

namespace {

bool use_presented(const ComplexDescription& cx, OperatorRule rule) {
  if (rule == OperatorRule::Geometric) return false;
  if (rule == OperatorRule::Presented && !cx.presented()) {
    throw InvalidComplex("the presented rule needs a presentation-backed complex");
  }
  return cx.presented();
}

// Group-level bookkeeping for presentation-backed complexes.
struct PresentedLayout {
  const TrianglePresentation& t;
  const VoltageAssignment& v;
  Id m;
  Id n;

  explicit PresentedLayout(const ComplexDescription& cx)
      : t(cx.origin->presentation),
        v(cx.origin->voltage),
        m(v.modulus),
        n(static_cast<Id>(t.generator_count())) {}

  Id label(int x) const { return v.labels[static_cast<std::size_t>(x)]; }
  Id vertex(Id type, Id s) const { return (((type % 3) + 3) % 3) * m + ((s % m) + m) % m; }
  Id shift(Id g, Id dt, Id ds) const { return vertex(g / m + dt, g % m + ds); }
  Id edge(Id g, int x) const { return g * n + x; }
};

}  // namespace

std::string to_string(OperatorKind op) {
  switch (op) {
    case OperatorKind::A1: return "A1";
    case OperatorKind::A2: return "A2";
    case OperatorKind::LE: return "LE";
    case OperatorKind::LB: return "LB";
  }
  return "?";
}

std::optional<OperatorKind> parse_operator(const std::string& name) {
  for (auto op : {OperatorKind::A1, OperatorKind::A2, OperatorKind::LE, OperatorKind::LB}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

SparseIntegerMatrix build_A1(const ComplexDescription& cx) {
  require_valid(cx);
  const ComplexIndex index(cx);
  SparseIntegerMatrix a(cx.vertices.size());
  for (std::size_t e = 0; e < cx.edges.size(); ++e) a.add(index.tail(e), index.head(e), 1);
  return a;
}

SparseIntegerMatrix build_A2(const ComplexDescription& cx) { return build_A1(cx).transpose(); }

SparseIntegerMatrix build_LE(const ComplexDescription& cx, OperatorRule rule) {
  require_valid(cx);
  const ComplexIndex index(cx);
  SparseIntegerMatrix le(cx.edges.size());

  if (use_presented(cx, rule)) {
    const PresentedLayout p(cx);
    const auto& plane = p.t.plane;
    for (const auto& rec : cx.edges) {
      const Id g = rec.id / p.n;
      const int x = static_cast<int>(rec.id % p.n);
      const Id h = p.shift(g, 1, p.label(x));
      const auto line = static_cast<std::size_t>(p.t.lambda[static_cast<std::size_t>(x)]);
      for (int y = 0; y < p.n; ++y) {
        if (!plane.incident(static_cast<std::size_t>(y), line)) le.add(index.edge(rec.id), index.edge(p.edge(h, y)), 1);
      }
    }
    return le;
  }

  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    for (std::size_t f : index.out_edges(index.head(e))) le.add(e, f, 1);
  }
  for (std::size_t c = 0; c < cx.chambers.size(); ++c) {
    const auto& ch = index.chamber(c);
    for (std::size_t r = 0; r < 3; ++r) le.add(ch[r], ch[(r + 1) % 3], -1);
  }
  return le;
}

SparseIntegerMatrix build_LB(const ComplexDescription& cx, OperatorRule rule) {
  require_valid(cx);
  const ComplexIndex index(cx);
  const std::size_t n2 = cx.chambers.size();
  SparseIntegerMatrix lb(3 * n2);

  if (use_presented(cx, rule)) {
    const PresentedLayout p(cx);
    std::map<ChamberRecord, std::size_t> position;
    for (std::size_t c = 0; c < n2; ++c) position.emplace(cx.chambers[c], c);

    // Directed chamber starting at edge (g, x) with triple (x, y, z).
    auto directed = [&](Id g, const Triple& tr) -> std::size_t {
      const auto [x, y, z] = tr;
      const Id type = g / p.m;
      Id g0 = g;
      Triple stored = tr;
      std::size_t rotation = 0;
      if (type == 1) {
        g0 = p.shift(g, -1, -p.label(z));
        stored = {z, x, y};
        rotation = 1;
      } else if (type == 2) {
        g0 = p.shift(g, 1, p.label(x));
        stored = {y, z, x};
        rotation = 2;
      }
      const Id g1 = p.shift(g0, 1, p.label(stored[0]));
      const Id g2 = p.shift(g1, 1, p.label(stored[1]));
      const ChamberRecord key{{p.edge(g0, stored[0]), p.edge(g1, stored[1]), p.edge(g2, stored[2])}};
      auto it = position.find(key);
      if (it == position.end()) throw InternalError("presented chamber missing from the complex");
      return 3 * it->second + rotation;
    };

    const auto& triples = p.t.triples;
    for (const auto& vert : cx.vertices) {
      const Id g = vert.id;
      for (const auto& tr : triples) {
        const std::size_t from = directed(g, tr);
        const Id h = p.shift(g, 1, p.label(tr[0]));
        for (auto it = std::lower_bound(triples.begin(), triples.end(), Triple{tr[1], -1, -1});
             it != triples.end() && (*it)[0] == tr[1]; ++it) {
          if ((*it)[1] != tr[2]) lb.add(from, directed(h, *it), 1);
        }
      }
    }
    return lb;
  }

  std::vector<std::vector<std::size_t>> starts(cx.edges.size());
  for (std::size_t c = 0; c < n2; ++c) {
    for (std::size_t r = 0; r < 3; ++r) starts[index.chamber(c)[r]].push_back(3 * c + r);
  }
  for (std::size_t c = 0; c < n2; ++c) {
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t next = (r + 1) % 3;
      for (std::size_t d : starts[index.chamber(c)[next]]) lb.add(3 * c + r, d, 1);
      lb.add(3 * c + r, 3 * c + next, -1);
    }
  }
  return lb;
}

SparseIntegerMatrix build_operator(const ComplexDescription& cx, OperatorKind op, OperatorRule rule) {
  switch (op) {
    case OperatorKind::A1: return build_A1(cx);
    case OperatorKind::A2: return build_A2(cx);
    case OperatorKind::LE: return build_LE(cx, rule);
    case OperatorKind::LB: return build_LB(cx, rule);
  }
  throw InternalError("unknown operator");
}

}  // namespace zeta3

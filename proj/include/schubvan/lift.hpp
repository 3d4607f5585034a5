#pragma once

// Lifted formulations: auxiliary-variable systems whose solutions project
// onto the solutions of a source system. Includes the repeated-squaring
// chain for z = x^(2^r) and the path-counting lift of det X = z built on a
// layered clow-sequence DAG.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "schubvan/errors.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/polynomial.hpp"
#include "schubvan/polysys.hpp"

namespace schubvan {

struct LiftedFormulation {
  std::vector<std::string> inputs;   // source variables supplied by the caller (x)
  std::vector<std::string> outputs;  // source variables determined by the lift (z)
  std::vector<std::string> aux;      // lifting variables (y)
  PolySystem system;

  std::vector<std::string> base_vars() const {
    std::vector<std::string> b = inputs;
    b.insert(b.end(), outputs.begin(), outputs.end());
    return b;
  }
};

/// y_1 = x^2, y_k = y_{k-1}^2, y_r = z.
inline LiftedFormulation power_chain(int r) {
  if (r < 1) throw MalformedInput("power chain length must be >= 1");
  LiftedFormulation lift;
  lift.inputs = {"x"};
  lift.outputs = {"z"};
  for (int k = 1; k <= r; ++k) lift.aux.push_back("y_" + std::to_string(k));
  PolySystem& sys = lift.system;
  sys.add_variable("x");
  sys.add_variable("z");
  for (const auto& y : lift.aux) sys.add_variable(y);
  sys.add_equation(sys.var("y_1") - sys.var("x") * sys.var("x"));
  for (int k = 2; k <= r; ++k) {
    const SparsePoly prev = sys.var("y_" + std::to_string(k - 1));
    sys.add_equation(sys.var("y_" + std::to_string(k)) - prev * prev);
  }
  sys.add_equation(sys.var("y_" + std::to_string(r)) - sys.var("z"));
  return lift;
}

struct DagNode {
  enum class Kind { Source, Interior, SinkPlus, SinkMinus };
  Kind kind = Kind::Interior;
  // Interior key: `step` matrix entries consumed, current closed walk head
  // `head`, current vertex `current` >= head, parity of completed walks.
  int step = 0;
  int head = 0;
  int current = 0;
  int parity = 0;

  /// Graph layer: source 0, interior step+1, sinks n+1.
  int layer(int n) const {
    switch (kind) {
      case Kind::Source: return 0;
      case Kind::Interior: return step + 1;
      default: return n + 1;
    }
  }

  std::string name() const {
    switch (kind) {
      case Kind::Source: return "y_s";
      case Kind::SinkPlus: return "y_tp";
      case Kind::SinkMinus: return "y_tm";
      default:
        return "y_" + std::to_string(step) + "_" + std::to_string(head) + "_" + std::to_string(current) +
               "_" + std::to_string(parity);
    }
  }

  auto key() const { return std::tuple(static_cast<int>(kind), step, head, current, parity); }
};

struct DagEdge {
  int from = 0;
  int to = 0;
  int row = 0;  // weight x_{row,col}; row == 0 means the constant 1
  int col = 0;
};

/// Layered DAG with one source and two signed sinks. Nodes are stored in
/// topological order: source, interior nodes by (step, head, current,
/// parity), then t+ and t-.
struct LayeredDAG {
  int n = 0;
  std::vector<DagNode> nodes;
  std::vector<DagEdge> edges;
  int source = 0;
  int sink_plus = 0;
  int sink_minus = 0;

  std::size_t interior_count() const { return nodes.size() - 3; }
};

struct MvOptions {
  /// Mutation hook for harness self-checks: routes every completed clow
  /// sequence to the wrong sink.
  bool invert_sink_sign = false;
};

/// Clow-sequence DAG for det of an n×n matrix.
///
/// Edges: s -> (0,h,h,0) with weight 1; (l,h,u,e) -> (l+1,h,v,e) with
/// x_{uv}, v > h; (l,h,u,e) -> (l+1,h',h',1-e) with x_{uh}, h' > h;
/// (n-1,h,u,e) -> t± with x_{uh}, sign (-1)^(n+c), c = e+1 closed walks.
/// Only nodes on some source-to-sink path are kept.
inline LayeredDAG mv_graph(int n, MvOptions opts = {}) {
  if (n < 1) throw MalformedInput("matrix dimension must be >= 1");
  using Key = std::tuple<int, int, int, int>;  // step, head, current, parity
  struct Arc {
    Key from;
    Key to;  // step == -1 marks a sink; parity then holds 0 for t+, 1 for t-
    int row, col;
  };

  std::vector<std::set<Key>> layer(n);
  std::vector<Arc> arcs;
  for (int h = 1; h <= n; ++h) layer[0].insert({0, h, h, 0});
  for (int l = 0; l < n; ++l) {
    for (const Key& k : layer[l]) {
      const auto [step, h, u, e] = k;
      if (l + 1 < n) {
        for (int v = h + 1; v <= n; ++v) {
          const Key next{l + 1, h, v, e};
          layer[l + 1].insert(next);
          arcs.push_back({k, next, u, v});
        }
        for (int h2 = h + 1; h2 <= n; ++h2) {
          const Key next{l + 1, h2, h2, 1 - e};
          layer[l + 1].insert(next);
          arcs.push_back({k, next, u, h});
        }
      } else {
        const int walks = e + 1;
        bool plus = (n + walks) % 2 == 0;
        if (opts.invert_sink_sign) plus = !plus;
        arcs.push_back({k, Key{-1, 0, 0, plus ? 0 : 1}, u, h});
      }
    }
  }

  // Keep nodes that reach a sink.
  std::set<Key> alive;
  for (auto it = arcs.rbegin(); it != arcs.rend(); ++it)
    if (std::get<0>(it->to) == -1 || alive.contains(it->to)) alive.insert(it->from);

  LayeredDAG g;
  g.n = n;
  std::map<Key, int> index;
  g.nodes.push_back({DagNode::Kind::Source});
  g.source = 0;
  for (int l = 0; l < n; ++l)
    for (const Key& k : layer[l]) {
      if (!alive.contains(k)) continue;
      const auto [step, h, u, e] = k;
      index[k] = static_cast<int>(g.nodes.size());
      g.nodes.push_back({DagNode::Kind::Interior, step, h, u, e});
    }
  g.sink_plus = static_cast<int>(g.nodes.size());
  g.nodes.push_back({DagNode::Kind::SinkPlus});
  g.sink_minus = static_cast<int>(g.nodes.size());
  g.nodes.push_back({DagNode::Kind::SinkMinus});

  for (int h = 1; h <= n; ++h)
    if (auto it = index.find({0, h, h, 0}); it != index.end()) g.edges.push_back({g.source, it->second, 0, 0});
  for (const Arc& a : arcs) {
    if (!alive.contains(a.from)) continue;
    int to;
    if (std::get<0>(a.to) == -1) {
      to = std::get<3>(a.to) == 0 ? g.sink_plus : g.sink_minus;
    } else {
      auto it = index.find(a.to);
      if (it == index.end()) continue;
      to = it->second;
    }
    g.edges.push_back({index.at(a.from), to, a.row, a.col});
  }
  return g;
}

/// Interior node count of mv_graph(n).
inline std::uint64_t mv_interior_nodes_closed_form(std::uint64_t n) {
  if (n == 1) return 1;
  if (n == 2) return 3;
  return (2 * n * n * n - 3 * n * n - 5 * n + 14) / 2;
}

/// Edge count of mv_graph(n), source and sink edges included.
inline std::uint64_t mv_edges_closed_form(std::uint64_t n) {
  if (n == 1) return 2;
  if (n == 2) return 5;
  if (n == 3) return 25;
  return (8 * n * n * n * n + 49 * n * n + 95 * n - 38 * n * n * n - 192) / 6;
}

/// Symbol name of matrix entry x_{ij}.
inline std::string entry_name(const std::string& prefix, int i, int j) {
  return prefix + "_" + std::to_string(i) + "_" + std::to_string(j);
}

/// Declares one variable per DAG node, in node order.
inline std::vector<int> declare_dag_variables(PolySystem& sys, const LayeredDAG& g) {
  std::vector<int> idx;
  idx.reserve(g.nodes.size());
  for (const DagNode& v : g.nodes) idx.push_back(sys.add_variable(v.name()));
  return idx;
}

/// y_s = 1 and y_v = Σ_{(w,v)} weight(w,v)·y_w for every other node.
/// `entry(i, j)` gives the symbol index of matrix entry (i, j).
template <class EntryFn>
void append_dag_equations(PolySystem& sys, const LayeredDAG& g, const std::vector<int>& node_var,
                          EntryFn&& entry) {
  std::vector<std::vector<const DagEdge*>> incoming(g.nodes.size());
  for (const DagEdge& e : g.edges) incoming[e.to].push_back(&e);
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    SparsePoly eq = SparsePoly::variable(node_var[v]);
    if (static_cast<int>(v) == g.source) {
      eq -= SparsePoly::constant(1);
    } else {
      for (const DagEdge* e : incoming[v]) {
        SparsePoly term = SparsePoly::variable(node_var[e->from]);
        if (e->row != 0) term = term * SparsePoly::variable(entry(e->row, e->col));
        eq -= term;
      }
    }
    sys.add_equation(std::move(eq));
  }
}

/// Lift of det X = z: variables x_i_j (row-major), z, then one y per DAG node.
inline LiftedFormulation det_lifted(int n, MvOptions opts = {}) {
  const LayeredDAG g = mv_graph(n, opts);
  LiftedFormulation lift;
  PolySystem& sys = lift.system;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      lift.inputs.push_back(entry_name("x", i, j));
      sys.add_variable(lift.inputs.back());
    }
  lift.outputs = {"z"};
  const int z = sys.add_variable("z");
  const std::vector<int> node_var = declare_dag_variables(sys, g);
  for (const DagNode& v : g.nodes) lift.aux.push_back(v.name());
  append_dag_equations(sys, g, node_var, [n](int i, int j) { return (i - 1) * n + (j - 1); });
  sys.add_equation(SparsePoly::variable(z) - SparsePoly::variable(node_var[g.sink_plus]) +
                   SparsePoly::variable(node_var[g.sink_minus]));
  return lift;
}

template <class T>
struct LiftedEvaluation {
  std::vector<T> outputs;  // in lift.outputs order
  Assignment<T> values;    // every symbol of lift.system
};

/// Forward-solves the lift at the given input values (lift.inputs order).
template <class T, class CoeffFn>
LiftedEvaluation<T> evaluate_lifted(const LiftedFormulation& lift, const std::vector<T>& inputs,
                                    CoeffFn&& from_int) {
  if (inputs.size() != lift.inputs.size()) throw DimensionMismatch("wrong number of lift inputs");
  Assignment<T> known(lift.system.symbol_count());
  for (std::size_t k = 0; k < inputs.size(); ++k) known[lift.system.index_of(lift.inputs[k])] = inputs[k];
  ForwardSolution<T> sol = forward_solve<T>(lift.system, std::move(known), from_int);
  LiftedEvaluation<T> out;
  for (const auto& o : lift.outputs) {
    const auto& v = sol.values[lift.system.index_of(o)];
    if (!v) throw NotForwardSolvable("output " + o + " left undetermined");
    out.outputs.push_back(*v);
  }
  out.values = std::move(sol.values);
  return out;
}

inline LiftedEvaluation<BigInt> evaluate_lifted(const LiftedFormulation& lift, const std::vector<BigInt>& inputs) {
  return evaluate_lifted<BigInt>(lift, inputs, [](const BigInt& c) { return c; });
}

/// Σ over source-to-sink paths of the path weight, signed by sink, as a
/// polynomial in x_{ij} (variable (i-1)n + (j-1)).
inline SparsePoly signed_path_sum(const LayeredDAG& g) {
  std::vector<SparsePoly> acc(g.nodes.size());
  acc[g.source] = SparsePoly::constant(1);
  // Edges are grouped by source layer, so one pass in node order suffices.
  std::vector<std::vector<const DagEdge*>> outgoing(g.nodes.size());
  for (const DagEdge& e : g.edges) outgoing[e.from].push_back(&e);
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    for (const DagEdge* e : outgoing[v]) {
      SparsePoly w = acc[v];
      if (e->row != 0) w = w * SparsePoly::variable((e->row - 1) * g.n + (e->col - 1));
      acc[e->to] += w;
    }
  return acc[g.sink_plus] - acc[g.sink_minus];
}

/// Σ_σ sign(σ) Π x_{i,σ(i)}; n <= 6.
inline SparsePoly leibniz_det(int n) {
  if (n < 1) throw MalformedInput("matrix dimension must be >= 1");
  if (n > 6) throw TooLarge("Leibniz expansion limited to n <= 6");
  SparsePoly det;
  for (const Permutation& s : all_permutations(n)) {
    std::vector<int> e(n * n, 0);
    for (int i = 1; i <= n; ++i) e[(i - 1) * n + (s(i) - 1)] = 1;
    det.add_term(MonomialKey::from_exponents(std::span<const int>(e)), s.inversions() % 2 ? -1 : 1);
  }
  return det;
}

}  // namespace schubvan

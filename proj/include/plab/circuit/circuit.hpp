#pragma once

#include <string>
#include <vector>

#include "plab/mpoly/sparse_poly.hpp"

namespace plab::circuit {

enum class NodeKind { Input, One, Add, Mul };

struct Edge {
  std::size_t src;
  Integer c;
};

struct Node {
  NodeKind kind;
  std::string id;
  std::size_t var = 0;  // input index (0-based) for Input nodes
  std::vector<Edge> in;
};

// Nodes are kept in topological order: every edge points to an earlier node.
class CircuitDag {
 public:
  CircuitDag() = default;

  static CircuitDag parse(const std::string& text);
  std::string to_text() const;

  std::size_t add_input(std::size_t var, std::string id = "");
  std::size_t add_one(std::string id = "");
  std::size_t add_gate(NodeKind kind, std::vector<Edge> in, std::string id = "");
  void add_output(std::size_t node);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::size_t>& outputs() const { return outputs_; }
  std::size_t nvars() const { return nvars_; }
  void set_nvars(std::size_t n);

  // sum of the logarithmic heights of all edge constants
  unsigned long size() const;
  std::size_t edge_count() const;
  // largest fan-in among multiplication gates
  std::size_t max_mul_fanin() const;

 private:
  std::string fresh_id();
  std::vector<Node> nodes_;
  std::vector<std::size_t> outputs_;
  std::size_t nvars_ = 0;
};

struct CircuitProfile {
  unsigned long s;
  std::size_t m;
  Integer degree_bound;  // 2^s
  Integer height_bound;  // 2^(2s)
};

CircuitProfile profile(const CircuitDag& c);

// values of all outputs at a point of F_p^n
std::vector<u64> eval_mod_p(const CircuitDag& c, u64 p, const std::vector<u64>& point);

// Outputs f_1..f_m followed by d f_j / d x_i for j = 1..m, i = 1..n (j major).
// Reverse-mode accumulation; size <= s + 4sm <= 5sm whenever every
// multiplication gate has fan-in at most 3.
CircuitDag derivative_transform(const CircuitDag& c);

// symbolic expansion of the outputs; throws ResourceError past term_limit terms
std::vector<ZPolyN> expand(const CircuitDag& c, std::size_t term_limit = 1000000);

// circuit that evaluates the given polynomials term by term
CircuitDag from_polynomials(const std::vector<ZPolyN>& fs);

// random circuit with bounded degree, used by tests and benchmarks
CircuitDag random_circuit(Rng& rng, std::size_t nvars, std::size_t gates, std::size_t outputs, long max_degree = 16,
                          long max_const = 3);

}  // namespace plab::circuit

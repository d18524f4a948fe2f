#include "plab/circuit/circuit.hpp"

#include <map>
#include <set>
#include <sstream>

namespace plab::circuit {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw UsageError("circuit line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string CircuitDag::fresh_id() { return "n" + std::to_string(nodes_.size()); }

void CircuitDag::set_nvars(std::size_t n) {
  if (n < nvars_) throw UsageError("circuit already uses more variables");
  nvars_ = n;
}

std::size_t CircuitDag::add_input(std::size_t var, std::string id) {
  nodes_.push_back(Node{NodeKind::Input, id.empty() ? fresh_id() : id, var, {}});
  nvars_ = std::max(nvars_, var + 1);
  return nodes_.size() - 1;
}

std::size_t CircuitDag::add_one(std::string id) {
  nodes_.push_back(Node{NodeKind::One, id.empty() ? fresh_id() : id, 0, {}});
  return nodes_.size() - 1;
}

std::size_t CircuitDag::add_gate(NodeKind kind, std::vector<Edge> in, std::string id) {
  if (kind != NodeKind::Add && kind != NodeKind::Mul) throw UsageError("gate must be add or mul");
  for (auto& e : in) {
    if (e.src >= nodes_.size()) throw UsageError("edge from an undefined node");
    if (e.c == 0) throw UsageError("edge constants must be nonzero");
  }
  nodes_.push_back(Node{kind, id.empty() ? fresh_id() : id, 0, std::move(in)});
  return nodes_.size() - 1;
}

void CircuitDag::add_output(std::size_t node) {
  if (node >= nodes_.size()) throw UsageError("output refers to an undefined node");
  outputs_.push_back(node);
}

unsigned long CircuitDag::size() const {
  unsigned long s = 0;
  for (auto& n : nodes_)
    for (auto& e : n.in) s += lh(e.c);
  return s;
}

std::size_t CircuitDag::edge_count() const {
  std::size_t s = 0;
  for (auto& n : nodes_) s += n.in.size();
  return s;
}

std::size_t CircuitDag::max_mul_fanin() const {
  std::size_t k = 0;
  for (auto& n : nodes_)
    if (n.kind == NodeKind::Mul) k = std::max(k, n.in.size());
  return k;
}

CircuitDag CircuitDag::parse(const std::string& text) {
  struct Raw {
    std::size_t line;
    std::string id, kind;
    std::size_t var = 0;
    std::vector<std::pair<std::string, Integer>> in;
  };
  std::vector<Raw> raws;
  std::vector<std::pair<std::size_t, std::string>> outs;
  std::map<std::string, std::size_t> index;
  std::istringstream is(text);
  std::string line;
  std::size_t ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "output") {
      std::string id;
      bool any = false;
      while (ls >> id) {
        outs.emplace_back(ln, id);
        any = true;
      }
      if (!any) fail(ln, "output needs at least one node id");
      continue;
    }
    if (kw != "node") fail(ln, "expected 'node' or 'output'");
    Raw r;
    r.line = ln;
    if (!(ls >> r.id >> r.kind)) fail(ln, "expected 'node <id> <kind>'");
    if (index.count(r.id)) fail(ln, "duplicate node id '" + r.id + "'");
    if (r.kind == "input") {
      std::string v;
      if (!(ls >> v) || v.size() < 2 || v[0] != 'x') fail(ln, "expected x<k> after input");
      try {
        std::size_t pos = 0;
        unsigned long k = std::stoul(v.substr(1), &pos);
        if (pos != v.size() - 1 || k < 1) throw std::invalid_argument("");
        r.var = k - 1;
      } catch (const std::exception&) {
        fail(ln, "bad variable name '" + v + "'");
      }
    } else if (r.kind == "add" || r.kind == "mul") {
      std::string tok;
      while (ls >> tok) {
        auto colon = tok.rfind(':');
        std::string src = colon == std::string::npos ? tok : tok.substr(0, colon);
        Integer c = 1;
        if (colon != std::string::npos) {
          std::string cs = tok.substr(colon + 1);
          if (c.set_str(cs, 10) != 0 || cs.empty()) fail(ln, "bad edge constant '" + cs + "'");
          if (c == 0) fail(ln, "edge constants must be nonzero");
        }
        r.in.emplace_back(src, c);
      }
    } else if (r.kind != "one") {
      fail(ln, "unknown node kind '" + r.kind + "'");
    }
    std::string extra;
    if ((r.kind == "input" || r.kind == "one") && (ls >> extra)) fail(ln, "trailing tokens");
    index[r.id] = raws.size();
    raws.push_back(std::move(r));
  }
  // topological order by DFS; detects cycles and unknown sources
  std::vector<int> state(raws.size(), 0);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < raws.size(); ++s) {
    if (state[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k < raws[v].in.size()) {
        auto& src = raws[v].in[k++].first;
        auto it = index.find(src);
        if (it == index.end()) fail(raws[v].line, "unknown source node '" + src + "'");
        std::size_t u = it->second;
        if (state[u] == 1) fail(raws[v].line, "cycle through node '" + src + "'");
        if (state[u] == 0) {
          state[u] = 1;
          stack.emplace_back(u, 0);
        }
      } else {
        state[v] = 2;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  CircuitDag c;
  std::vector<std::size_t> pos(raws.size());
  for (std::size_t v : order) {
    auto& r = raws[v];
    if (r.kind == "input") {
      pos[v] = c.add_input(r.var, r.id);
    } else if (r.kind == "one") {
      pos[v] = c.add_one(r.id);
    } else {
      std::vector<Edge> in;
      for (auto& [src, k] : r.in) in.push_back(Edge{pos[index[src]], k});
      pos[v] = c.add_gate(r.kind == "add" ? NodeKind::Add : NodeKind::Mul, std::move(in), r.id);
    }
  }
  for (auto& [l, id] : outs) {
    auto it = index.find(id);
    if (it == index.end()) fail(l, "unknown output node '" + id + "'");
    c.add_output(pos[it->second]);
  }
  if (c.outputs_.empty()) throw UsageError("circuit has no outputs");
  return c;
}

std::string CircuitDag::to_text() const {
  std::ostringstream os;
  for (auto& n : nodes_) {
    os << "node " << n.id << " ";
    switch (n.kind) {
      case NodeKind::Input: os << "input x" << n.var + 1; break;
      case NodeKind::One: os << "one"; break;
      case NodeKind::Add:
      case NodeKind::Mul:
        os << (n.kind == NodeKind::Add ? "add" : "mul");
        for (auto& e : n.in) os << " " << nodes_[e.src].id << ":" << e.c.get_str();
        break;
    }
    os << "\n";
  }
  os << "output";
  for (auto o : outputs_) os << " " << nodes_[o].id;
  os << "\n";
  return os.str();
}

CircuitProfile profile(const CircuitDag& c) {
  unsigned long s = c.size();
  return {s, c.outputs().size(), pow_int(2, s), pow_int(2, 2 * s)};
}

std::vector<u64> eval_mod_p(const CircuitDag& c, u64 p, const std::vector<u64>& point) {
  if (point.size() < c.nvars()) throw UsageError("evaluation point too short");
  PrimeField f(p);
  std::vector<u64> val(c.nodes().size());
  for (std::size_t v = 0; v < c.nodes().size(); ++v) {
    auto& n = c.nodes()[v];
    switch (n.kind) {
      case NodeKind::Input: val[v] = point[n.var] % p; break;
      case NodeKind::One: val[v] = f.one(); break;
      case NodeKind::Add: {
        u64 acc = 0;
        for (auto& e : n.in) acc = f.add(acc, f.mul(f.from_integer(e.c), val[e.src]));
        val[v] = acc;
        break;
      }
      case NodeKind::Mul: {
        u64 acc = f.one();
        for (auto& e : n.in) acc = f.mul(acc, f.mul(f.from_integer(e.c), val[e.src]));
        val[v] = acc;
        break;
      }
    }
  }
  std::vector<u64> out;
  for (auto o : c.outputs()) out.push_back(val[o]);
  return out;
}

CircuitDag derivative_transform(const CircuitDag& c) {
  CircuitDag d;
  const auto& nodes = c.nodes();
  // copy of the original
  for (auto& n : nodes) {
    if (n.kind == NodeKind::Input) {
      d.add_input(n.var, n.id);
    } else if (n.kind == NodeKind::One) {
      d.add_one(n.id);
    } else {
      d.add_gate(n.kind, n.in, n.id);
    }
  }
  d.set_nvars(c.nvars());
  std::size_t one = nodes.size();
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v].kind == NodeKind::One) one = v;
  if (one == nodes.size()) one = d.add_one("d_one");
  std::size_t zero = SIZE_MAX;  // created lazily
  auto get_zero = [&]() {
    if (zero == SIZE_MAX) zero = d.add_gate(NodeKind::Add, {}, "d_zero");
    return zero;
  };
  std::vector<std::size_t> input_node(c.nvars(), nodes.size());
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v].kind == NodeKind::Input && input_node[nodes[v].var] == nodes.size()) input_node[nodes[v].var] = v;

  for (auto o : c.outputs()) d.add_output(o);
  std::vector<std::size_t> deriv_outputs;
  for (std::size_t j = 0; j < c.outputs().size(); ++j) {
    std::size_t out = c.outputs()[j];
    std::vector<char> anc(nodes.size(), 0);
    anc[out] = 1;
    for (std::size_t v = out + 1; v-- > 0;) {
      if (!anc[v]) continue;
      for (auto& e : nodes[v].in) anc[e.src] = 1;
    }
    // contributions: adjoint(v) = sum c * node
    std::vector<std::vector<Edge>> contrib(nodes.size());
    std::vector<std::size_t> adj(nodes.size(), SIZE_MAX);
    std::string tag = "d" + std::to_string(j) + "_";
    for (std::size_t v = out + 1; v-- > 0;) {
      if (!anc[v]) continue;
      std::size_t a;
      if (v == out) {
        a = one;
      } else if (contrib[v].empty()) {
        continue;
      } else if (contrib[v].size() == 1 && contrib[v][0].c == 1) {
        a = contrib[v][0].src;
      } else {
        a = d.add_gate(NodeKind::Add, contrib[v], tag + nodes[v].id);
      }
      adj[v] = a;
      auto& n = nodes[v];
      if (n.kind == NodeKind::Add) {
        for (auto& e : n.in) contrib[e.src].push_back(Edge{a, e.c});
      } else if (n.kind == NodeKind::Mul) {
        if (n.in.size() == 1) {
          contrib[n.in[0].src].push_back(Edge{a, n.in[0].c});
        } else {
          for (std::size_t i = 0; i < n.in.size(); ++i) {
            std::vector<Edge> es{Edge{a, n.in[i].c}};
            for (std::size_t w = 0; w < n.in.size(); ++w)
              if (w != i) es.push_back(n.in[w]);
            std::size_t t = d.add_gate(NodeKind::Mul, es, tag + n.id + "_" + std::to_string(i));
            contrib[n.in[i].src].push_back(Edge{t, 1});
          }
        }
      }
    }
    for (std::size_t i = 0; i < c.nvars(); ++i) {
      std::size_t x = input_node[i];
      if (x == nodes.size() || adj[x] == SIZE_MAX) {
        deriv_outputs.push_back(get_zero());
      } else {
        deriv_outputs.push_back(adj[x]);
      }
    }
  }
  for (auto o : deriv_outputs) d.add_output(o);
  return d;
}

std::vector<ZPolyN> expand(const CircuitDag& c, std::size_t term_limit) {
  const std::size_t n = c.nvars();
  std::vector<ZPolyN> val;
  val.reserve(c.nodes().size());
  for (auto& node : c.nodes()) {
    switch (node.kind) {
      case NodeKind::Input: val.push_back(ZPolyN::variable(IntegerRing{}, n, node.var)); break;
      case NodeKind::One: val.push_back(ZPolyN::constant(IntegerRing{}, n, 1)); break;
      case NodeKind::Add: {
        ZPolyN acc(IntegerRing{}, n);
        for (auto& e : node.in) acc += val[e.src].scale(e.c);
        val.push_back(std::move(acc));
        break;
      }
      case NodeKind::Mul: {
        ZPolyN acc = ZPolyN::constant(IntegerRing{}, n, 1);
        for (auto& e : node.in) {
          if (acc.size() * val[e.src].size() > 4 * term_limit) throw ResourceError("circuit expansion exceeds the term limit");
          acc = acc * val[e.src].scale(e.c);
        }
        val.push_back(std::move(acc));
        break;
      }
    }
    if (val.back().size() > term_limit) throw ResourceError("circuit expansion exceeds the term limit");
  }
  std::vector<ZPolyN> out;
  for (auto o : c.outputs()) out.push_back(val[o]);
  return out;
}

CircuitDag from_polynomials(const std::vector<ZPolyN>& fs) {
  CircuitDag c;
  std::size_t n = 0;
  for (auto& f : fs) n = std::max(n, f.nvars());
  std::vector<std::size_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = c.add_input(i, "x" + std::to_string(i + 1));
  std::size_t one = c.add_one("one");
  c.set_nvars(n);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    std::vector<Edge> terms;
    for (auto& [m, coef] : fs[k].terms()) {
      std::vector<Edge> factors;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::uint32_t e = 0; e < m[i]; ++e) factors.push_back(Edge{x[i], 1});
      std::size_t t;
      if (factors.empty()) {
        t = one;
      } else if (factors.size() == 1) {
        t = factors[0].src;
      } else {
        // binary chain keeps every multiplication gate at fan-in 2
        t = c.add_gate(NodeKind::Mul, {factors[0], factors[1]});
        for (std::size_t i = 2; i < factors.size(); ++i) t = c.add_gate(NodeKind::Mul, {Edge{t, 1}, factors[i]});
      }
      terms.push_back(Edge{t, coef});
    }
    std::size_t g = c.add_gate(NodeKind::Add, terms, "f" + std::to_string(k + 1));
    c.add_output(g);
  }
  return c;
}

CircuitDag random_circuit(Rng& rng, std::size_t nvars, std::size_t gates, std::size_t outputs, long max_degree, long max_const) {
  CircuitDag c;
  std::vector<long> degree;
  for (std::size_t i = 0; i < nvars; ++i) {
    c.add_input(i, "x" + std::to_string(i + 1));
    degree.push_back(1);
  }
  c.add_one("one");
  degree.push_back(0);
  auto rand_const = [&]() {
    if (rng.below(3) != 0) return Integer(1);
    long v = rng.range(1, max_const);
    return Integer(rng.coin() ? v : -v);
  };
  for (std::size_t g = 0; g < gates; ++g) {
    std::size_t avail = c.nodes().size();
    bool mul = rng.coin();
    std::size_t fan = 1 + rng.below(3);
    std::vector<Edge> in;
    long deg = mul ? 0 : 0;
    for (std::size_t k = 0; k < fan; ++k) {
      // prefer recent nodes so the circuit has depth
      std::size_t src = avail - 1 - std::min<std::size_t>(avail - 1, rng.below(std::min<std::size_t>(avail, 5)));
      if (rng.below(3) == 0) src = rng.below(avail);
      long dd = degree[src];
      if (mul) {
        if (deg + dd > max_degree) continue;
        deg += dd;
      } else {
        deg = std::max(deg, dd);
      }
      in.push_back(Edge{src, rand_const()});
    }
    if (in.empty()) in.push_back(Edge{rng.below(avail), rand_const()});
    if (mul && in.size() == 1 && rng.coin()) {
      mul = false;
    }
    c.add_gate(mul ? NodeKind::Mul : NodeKind::Add, in);
    long nd = 0;
    for (auto& e : in) nd = mul ? nd + degree[e.src] : std::max(nd, degree[e.src]);
    degree.push_back(nd);
  }
  std::size_t total = c.nodes().size();
  for (std::size_t k = 0; k < outputs; ++k) c.add_output(total - 1 - (k % std::max<std::size_t>(1, gates)));
  return c;
}

}  // namespace plab::circuit

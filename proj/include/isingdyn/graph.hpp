#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "isingdyn/errors.hpp"
#include "isingdyn/format.hpp"
#include "isingdyn/rng.hpp"

namespace isingdyn {

struct Edge {
  int u = 0;  // endpoints, 0-indexed, u < v
  int v = 0;
  double w = 1.0;
};

/// Undirected weighted graph. Edges are unique, self-loop free, and kept
/// sorted by (u, v).
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::string name;

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Total edge weight xi; equals the edge count for unit weights.
  double total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.w;
    return s;
  }
};

/// Spin configuration with entries in {+1, -1}.
struct SpinConfig {
  std::vector<int> spins;

  SpinConfig() = default;
  explicit SpinConfig(std::vector<int> s) : spins(std::move(s)) {}

  int size() const { return static_cast<int>(spins.size()); }
  int operator[](int i) const { return spins[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return spins[static_cast<std::size_t>(i)]; }
  bool operator==(const SpinConfig&) const = default;

  SpinConfig flipped() const {
    SpinConfig f = *this;
    for (int& s : f.spins) s = -s;
    return f;
  }
};

// Stable content hash of a configuration, used in trial reports.
inline std::uint64_t spin_hash(const SpinConfig& s) {
  std::string bytes;
  bytes.reserve(static_cast<std::size_t>(s.size()));
  for (int v : s.spins) bytes.push_back(v > 0 ? '+' : '-');
  return fnv1a64(bytes);
}

enum class CouplingMode { Antiferromagnetic, Ferromagnetic };

/// Symmetric Ising couplings with zero diagonal. Dense storage backs the
/// eigenanalysis; the adjacency view keeps integration O(edges) per step.
struct CouplingMatrix {
  int n = 0;
  Eigen::MatrixXd J;
  std::vector<std::vector<std::pair<int, double>>> adj;  // adj[i] = {(j, J_ij)}

  double entry(int i, int j) const { return J(i, j); }
};

inline CouplingMatrix couplings(const Graph& g,
                                CouplingMode mode = CouplingMode::Antiferromagnetic) {
  CouplingMatrix c;
  c.n = g.n;
  c.J = Eigen::MatrixXd::Zero(g.n, g.n);
  c.adj.assign(static_cast<std::size_t>(g.n), {});
  const double sign = (mode == CouplingMode::Antiferromagnetic) ? -1.0 : 1.0;
  for (const Edge& e : g.edges) {
    const double j = sign * e.w;
    c.J(e.u, e.v) = j;
    c.J(e.v, e.u) = j;
    c.adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, j);
    c.adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, j);
  }
  return c;
}

/// H = -sum_{i<j} J_ij s_i s_j, each undirected pair counted once.
inline double ising_energy(const CouplingMatrix& J, const SpinConfig& s) {
  if (s.size() != J.n)
    throw input_error("ising_energy: spin vector has " + std::to_string(s.size()) +
                      " entries, couplings expect " + std::to_string(J.n));
  double h = 0.0;
  for (int i = 0; i < J.n; ++i)
    for (const auto& [j, jij] : J.adj[static_cast<std::size_t>(i)])
      if (j > i) h -= jij * s[i] * s[j];
  return h;
}

/// Total weight of edges whose endpoints carry opposite spins.
inline double cut_of_spins(const Graph& g, const SpinConfig& s) {
  if (s.size() != g.n)
    throw input_error("cut_of_spins: spin vector has " + std::to_string(s.size()) +
                      " entries, graph has " + std::to_string(g.n) + " nodes");
  double cut = 0.0;
  for (const Edge& e : g.edges)
    if (s[e.u] != s[e.v]) cut += e.w;
  return cut;
}

// Cut from an antiferromagnetic Ising energy: S_cut = (xi - H) / 2.
inline double cut_from_energy(const Graph& g, double h) {
  return (g.total_weight() - h) / 2.0;
}

namespace detail {

inline bool parse_ll(const std::string& tok, long long& out) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  errno = 0;
  out = std::strtoll(begin, &end, 10);
  return errno == 0 && end != begin && *end == '\0';
}

inline bool parse_real(const std::string& tok, double& out) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  errno = 0;
  out = std::strtod(begin, &end);
  return end != begin && *end == '\0' && std::isfinite(out);
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

/// Parse the rudy edge-list format: a "N M" header followed by M lines
/// "i j w" with 1-indexed endpoints. Nodes come out 0-indexed with
/// endpoints normalized to u < v. Blank lines are ignored.
inline Graph parse_graph(const std::string& text, std::string name = "") {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto fail = [&](const std::string& what) -> void {
    throw input_error("graph parse error, line " + std::to_string(lineno) + ": " + what);
  };

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      toks = detail::split_ws(line);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  if (!next_tokens(toks)) {
    lineno = 1;
    fail("empty input, expected header \"N M\"");
  }
  long long n = 0, m = 0;
  if (toks.size() != 2 || !detail::parse_ll(toks[0], n) || !detail::parse_ll(toks[1], m))
    fail("malformed header, expected \"N M\"");
  if (n < 1) fail("node count must be positive");
  if (m < 0) fail("edge count must be nonnegative");
  const long long max_edges = n * (n - 1) / 2;
  if (m > max_edges) fail("edge count exceeds n(n-1)/2");

  Graph g;
  g.n = static_cast<int>(n);
  g.name = std::move(name);
  g.edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);

  for (long long k = 0; k < m; ++k) {
    if (!next_tokens(toks)) {
      ++lineno;
      fail("unexpected end of input, expected " + std::to_string(m) + " edges, got " +
           std::to_string(k));
    }
    long long i = 0, j = 0;
    double w = 0.0;
    if (toks.size() != 3 || !detail::parse_ll(toks[0], i) || !detail::parse_ll(toks[1], j) ||
        !detail::parse_real(toks[2], w))
      fail("malformed edge, expected \"i j w\"");
    if (i < 1 || i > n || j < 1 || j > n) fail("node index out of range [1, " + std::to_string(n) + "]");
    if (i == j) fail("self-loop on node " + std::to_string(i));
    int u = static_cast<int>(std::min(i, j)) - 1;
    int v = static_cast<int>(std::max(i, j)) - 1;
    const std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
                              static_cast<std::uint64_t>(v);
    if (!seen.insert(key).second)
      fail("duplicate edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
    g.edges.push_back({u, v, w});
  }
  if (next_tokens(toks)) fail("unexpected content after the declared edge list");

  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return g;
}

/// Emit the same rudy format, edges sorted by (i, j), 1-indexed.
inline std::string render_graph(const Graph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges)
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + format_number(e.w) + "\n";
  return out;
}

inline std::uint64_t graph_hash(const Graph& g) { return fnv1a64(render_graph(g)); }

/// Exactly m distinct edges sampled uniformly without replacement;
/// deterministic for a fixed seed.
inline Graph generate_random_graph(int n, long long m, double w, std::uint64_t seed) {
  if (n < 1) throw input_error("generate_random_graph: node count must be positive");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges)
    throw input_error("generate_random_graph: edge count " + std::to_string(m) +
                      " outside [0, " + std::to_string(max_edges) + "]");

  // Rank pairs (u, v), u < v, lexicographically; row u starts at offset[u].
  std::vector<long long> offset(static_cast<std::size_t>(n), 0);
  for (int u = 1; u < n; ++u)
    offset[static_cast<std::size_t>(u)] =
        offset[static_cast<std::size_t>(u - 1)] + (n - u);

  std::vector<long long> ranks(static_cast<std::size_t>(max_edges));
  std::iota(ranks.begin(), ranks.end(), 0LL);
  std::mt19937_64 eng(seed);
  for (long long k = 0; k < m; ++k) {
    const long long pick =
        k + static_cast<long long>(uniform_below(eng, static_cast<std::uint64_t>(max_edges - k)));
    std::swap(ranks[static_cast<std::size_t>(k)], ranks[static_cast<std::size_t>(pick)]);
  }

  Graph g;
  g.n = n;
  g.name = "g_n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" + std::to_string(seed);
  g.edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    const long long r = ranks[static_cast<std::size_t>(k)];
    const auto it = std::upper_bound(offset.begin(), offset.end(), r);
    const int u = static_cast<int>(it - offset.begin()) - 1;
    const int v = u + 1 + static_cast<int>(r - offset[static_cast<std::size_t>(u)]);
    g.edges.push_back({u, v, w});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return g;
}

}  // namespace isingdyn

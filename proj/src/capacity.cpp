#include "tandem/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <unordered_map>

namespace tandem {

bool rll_member(const Word& z, int k) {
  if (k < 1) throw std::invalid_argument("rll_member requires k >= 1");
  int run = 0;
  for (int i = 0; i < z.size(); ++i) {
    run = z[i] == 0 ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

unsigned long long count_rll(int m, int q, int k) {
  if (m < 0) throw std::invalid_argument("count_rll requires m >= 0");
  if (q < 1 || k < 1) throw std::invalid_argument("count_rll requires q, k >= 1");
  // A nonempty RLL word is 0^j s w' with j < k and s nonzero, or a short
  // all-zero word 0^m with m < k.
  std::vector<unsigned long long> memo(static_cast<std::size_t>(m) + 1, 0);
  memo[0] = 1;
  for (int mm = 1; mm <= m; ++mm) {
    unsigned long long total = mm <= k - 1 ? 1 : 0;
    for (int j = 0; j < k && j <= mm - 1; ++j) {
      total += static_cast<unsigned long long>(q - 1) * memo[static_cast<std::size_t>(mm - 1 - j)];
    }
    memo[static_cast<std::size_t>(mm)] = total;
  }
  return memo[static_cast<std::size_t>(m)];
}

unsigned long long count_irr_fixed(int n, int q, int k) {
  if (n < k) throw std::invalid_argument("count_irr_fixed requires n >= k");
  unsigned long long prefixes = 1;
  for (int i = 0; i < k; ++i) prefixes *= static_cast<unsigned long long>(q);
  return prefixes * count_rll(n - k, q, k);
}

namespace {

bool square_free(const Word& w, int max_square) {
  for (int i = 0; i < w.size(); ++i) {
    for (int len = 1; len <= max_square; ++len) {
      if (is_square_at(w, i, len)) return false;
    }
  }
  return true;
}

void enumerate_words(int q, int length, const std::function<void(const Word&)>& visit) {
  std::vector<Symbol> cur(static_cast<std::size_t>(length), 0);
  for (;;) {
    visit(Word(cur, q));
    int pos = length - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == q - 1) {
      cur[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

std::size_t ConstrainedGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& e : edges) total += e.size();
  return total;
}

Eigen::MatrixXd ConstrainedGraph::adjacency() const {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t s = 0; s < edges.size(); ++s) {
    for (const auto& [label, target] : edges[s]) {
      a(static_cast<Eigen::Index>(s), target) += 1.0;
    }
  }
  return a;
}

ConstrainedGraph build_irr_graph(int q, int k_bound) {
  if (q < 2) throw std::invalid_argument("build_irr_graph requires q >= 2");
  if (k_bound != 2 && k_bound != 3) throw std::invalid_argument("k_bound must be 2 or 3");
  ConstrainedGraph g;
  g.q = q;
  g.max_square = k_bound;
  g.memory = k_bound == 3 ? 5 : 3;

  enumerate_words(q, g.memory, [&](const Word& w) {
    if (square_free(w, g.max_square)) g.states.push_back(w);
  });
  std::unordered_map<Word, int, WordHash> index;
  for (std::size_t i = 0; i < g.states.size(); ++i) index.emplace(g.states[i], static_cast<int>(i));

  g.edges.resize(g.states.size());
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    for (Symbol a = 0; a < q; ++a) {
      Word window = g.states[s].appended(a);
      if (!square_free(window, g.max_square)) continue;
      auto it = index.find(window.suffix(g.memory));
      if (it != index.end()) g.edges[s].push_back({a, it->second});
    }
  }
  return g;
}

std::vector<Word> graph_language(const ConstrainedGraph& g, int max_len) {
  std::vector<Word> out;
  std::unordered_map<Word, char, WordHash> seen;
  auto add = [&](const Word& w) {
    if (!w.is_empty() && seen.emplace(w, 1).second) out.push_back(w);
  };
  // Lengths below the memory order come from factors of states.
  for (const Word& s : g.states) {
    for (int pos = 0; pos < s.size(); ++pos) {
      for (int len = 1; pos + len <= s.size() && len <= max_len; ++len) {
        add(s.substr(pos, len));
      }
    }
  }
  // Longer words are path spellings.
  struct Item {
    Word spelled;
    int state;
  };
  std::vector<Item> stack;
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    if (g.states[s].size() <= max_len) stack.push_back({g.states[s], static_cast<int>(s)});
  }
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    add(item.spelled);
    if (item.spelled.size() >= max_len) continue;
    for (const auto& [label, target] : g.edges[static_cast<std::size_t>(item.state)]) {
      stack.push_back({item.spelled.appended(label), target});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void dump_graph(const ConstrainedGraph& g, std::ostream& os) {
  for (std::size_t s = 0; s < g.edges.size(); ++s) {
    for (const auto& [label, target] : g.edges[s]) {
      os << g.states[s].str() << '\t' << Word({label}, g.q).str() << '\t'
         << g.states[static_cast<std::size_t>(target)].str() << '\n';
    }
  }
}

double lambert_w0(double z, double tol) {
  const double branch_point = -std::exp(-1.0);
  if (z < branch_point - 1e-12) {
    throw std::invalid_argument("lambert_w0 requires z >= -1/e");
  }
  z = std::max(z, branch_point);
  if (z == 0.0) return 0.0;
  double w;
  if (z < -0.25) {
    w = -1.0 + std::sqrt(2.0 * (1.0 + std::exp(1.0) * z));  // expansion at the branch point
  } else if (z < 1.0) {
    w = z * (1.0 - z);
  } else {
    w = std::log(z);
    if (w > 1.0) w -= std::log(w);
  }
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    if (std::abs(f) <= tol) return w;
    const double wp1 = w + 1.0;
    double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) denom = ew * wp1;
    w -= f / denom;
    if (w < -1.0) w = -1.0;  // stay on the principal branch
  }
  return w;
}

PowerIterationResult dominant_eigenvalue(const Eigen::MatrixXd& a, double tol,
                                         int max_iterations) {
  const Eigen::Index n = a.rows();
  if (n == 0) return {0.0, 0};
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  // The +I shift keeps the Perron root dominant even for periodic
  // adjacency matrices; it is removed again at the end.
  const Eigen::MatrixXd b = a + Eigen::MatrixXd::Identity(n, n);
  int total_iterations = 0;
  for (int restart = 0; restart < 4; ++restart) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    v(restart % n) += 1.0;  // deflation-free restart from a shifted start vector
    v.normalize();
    for (int i = 0; i < max_iterations; ++i) {
      ++total_iterations;
      Eigen::VectorXd w = b * v;
      w.normalize();  // b has a positive diagonal, so b*v never vanishes
      const double lambda = w.dot(b * w);
      const double residual = (b * w - lambda * w).norm();
      v = w;
      if (residual <= tol * std::max(1.0, std::abs(lambda))) {
        return {lambda - 1.0, total_iterations};
      }
    }
  }
  throw std::runtime_error("power iteration failed to converge");
}

Eigen::MatrixXd rll_transfer_matrix(int q, int max_zero_run) {
  if (q < 2 || max_zero_run < 0) {
    throw std::invalid_argument("rll_transfer_matrix requires q >= 2 and d >= 0");
  }
  const Eigen::Index n = max_zero_run + 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    a(r, 0) = q - 1;
    if (r + 1 < n) a(r, r + 1) = 1.0;
  }
  return a;
}

CapacityResult rll_capacity(int q, int max_zero_run, double tol) {
  const Eigen::MatrixXd a = rll_transfer_matrix(q, max_zero_run);
  const PowerIterationResult pi = dominant_eigenvalue(a, tol);
  CapacityResult result;
  result.eigenvalue = pi.eigenvalue;
  result.iterations = pi.iterations;
  result.value = std::log(pi.eigenvalue) / std::log(static_cast<double>(q));
  const int d = max_zero_run;
  const double scale = (q - 1) / std::pow(static_cast<double>(q), d + 2);
  const double w_argument = -scale * (d + 2);
  // The W argument drops below -1/e only for (q, d) = (2, 1) on the grids
  // of interest; bounds are omitted there, the eigenvalue still returned.
  if (w_argument >= -std::exp(-1.0)) {
    const double alpha = std::exp(-lambert_w0(w_argument));
    result.lower_bound = q * std::exp(-scale * alpha);
    result.upper_bound = q * std::exp(-scale);
  }
  return result;
}

double rll_capacity_asymptotic_log2(int q, int max_zero_run) {
  if (q < 2 || max_zero_run < 0) throw std::invalid_argument("requires q >= 2 and d >= 0");
  return std::log2(static_cast<double>(q)) -
         (q - 1) * std::log2(std::exp(1.0)) / std::pow(static_cast<double>(q), max_zero_run + 2);
}

namespace {

// Iterative Tarjan strongly-connected components.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<std::pair<Symbol, int>>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<int> index(n, -1), lowlink(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < edges[static_cast<std::size_t>(f.node)].size()) {
        const int child = edges[static_cast<std::size_t>(f.node)][f.edge++].second;
        if (index[child] == -1) {
          index[child] = lowlink[child] = next_index++;
          stack.push_back(child);
          on_stack[child] = 1;
          call.push_back({child, 0});
        } else if (on_stack[child]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[child]);
        }
      } else {
        if (lowlink[f.node] == index[f.node]) {
          std::vector<int> component;
          for (;;) {
            const int v = stack.back();
            stack.pop_back();
            on_stack[v] = 0;
            component.push_back(v);
            if (v == f.node) break;
          }
          components.push_back(std::move(component));
        }
        const int node = f.node;
        call.pop_back();
        if (!call.empty()) {
          lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[node]);
        }
      }
    }
  }
  return components;
}

}  // namespace

CapacityResult irr_graph_capacity(const ConstrainedGraph& g, double tol) {
  CapacityResult result;
  double best = 0.0;
  int iterations = 0;
  for (const std::vector<int>& component : strongly_connected_components(g.edges)) {
    bool has_internal_edge = false;
    std::unordered_map<int, int> local;
    for (std::size_t i = 0; i < component.size(); ++i) local.emplace(component[i], static_cast<int>(i));
    Eigen::MatrixXd a =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(component.size()),
                              static_cast<Eigen::Index>(component.size()));
    for (int node : component) {
      for (const auto& [label, target] : g.edges[static_cast<std::size_t>(node)]) {
        auto it = local.find(target);
        if (it != local.end()) {
          a(local.at(node), it->second) += 1.0;
          has_internal_edge = true;
        }
      }
    }
    if (!has_internal_edge) continue;  // trivial component
    const PowerIterationResult pi = dominant_eigenvalue(a, tol);
    iterations += pi.iterations;
    best = std::max(best, pi.eigenvalue);
  }
  result.eigenvalue = best;
  result.iterations = iterations;
  result.value = best > 0.0 ? std::log(best) / std::log(static_cast<double>(g.q)) : 0.0;
  return result;
}

}  // namespace tandem

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tandem/word.hpp"

namespace tandem {

// True iff every zero-run of z is shorter than k, i.e. z belongs to the
// (0, k-1)-RLL system (equivalently, sigma(z, k) is all-zero).
bool rll_member(const Word& z, int k);

// Number of length-m strings over Z_q whose zero-runs are all shorter
// than k.  m = 0 counts the empty word.
unsigned long long count_rll(int m, int q, int k);

// |Irr_k(n)| = q^k * count_rll(n - k, q, k); requires n >= k.
unsigned long long count_irr_fixed(int n, int q, int k);

// Sliding-window presentation of the words with no square uu,
// |u| <= max_square: states are the valid windows of length `memory`,
// and an edge appends one symbol whenever the extended window stays
// square-free.  Paths spell exactly the irreducible words of length
// >= memory; shorter irreducible words appear as factors of states.
struct ConstrainedGraph {
  int q = 0;
  int memory = 0;
  int max_square = 0;
  std::vector<Word> states;                             // sorted
  std::vector<std::vector<std::pair<Symbol, int>>> edges;  // edges[s] = {(label, target)}

  std::size_t num_edges() const;
  Eigen::MatrixXd adjacency() const;
};

// De Bruijn-style graph for Irr_{<=k_bound} over Z_q; k_bound is 2 or 3.
// Memory order 5 for k_bound 3 (forbidden factors up to length 6) and
// order 3 for k_bound 2.
ConstrainedGraph build_irr_graph(int q, int k_bound);

// Every word of length <= max_len generated by the graph: path spellings
// plus factors of states for the lengths below the memory order.  Sorted.
std::vector<Word> graph_language(const ConstrainedGraph& g, int max_len);

// Plain-text edge list: one `state<TAB>label<TAB>next_state` line per edge.
void dump_graph(const ConstrainedGraph& g, std::ostream& os);

struct CapacityResult {
  double value = 0.0;       // log base q of the growth rate
  double eigenvalue = 0.0;  // dominant eigenvalue lambda
  std::optional<double> lower_bound;  // analytic bounds on lambda, when defined
  std::optional<double> upper_bound;
  int iterations = 0;
};

// Principal branch of the Lambert W function, w e^w = z, for z >= -1/e.
// Halley iteration to |w e^w - z| <= tol.
double lambert_w0(double z, double tol = 1e-14);

// Dominant eigenvalue of a small dense non-negative matrix by power
// iteration (shifted by I to defeat periodicity), with the iteration count.
struct PowerIterationResult {
  double eigenvalue = 0.0;
  int iterations = 0;
};
PowerIterationResult dominant_eigenvalue(const Eigen::MatrixXd& a, double tol,
                                         int max_iterations = 200000);

// Transfer matrix of the (0, d)-RLL system over Z_q: (d+1) x (d+1), first
// column all q-1, ones on the superdiagonal.  `max_zero_run` is d, the
// longest permitted zero-run.  The channel with duplication length k has
// capacity rll_capacity(q, k - 1, tol).
Eigen::MatrixXd rll_transfer_matrix(int q, int max_zero_run);

// Capacity of the (0, d)-RLL system: value = log_q lambda.  Includes the
// Lambert-W eigenvalue bounds q e^{-(q-1) a / q^{d+2}} <= lambda <=
// q e^{-(q-1) / q^{d+2}} except for (q, d) = (2, 1), where the W argument
// falls below -1/e and the bounds are omitted.
CapacityResult rll_capacity(int q, int max_zero_run, double tol = 1e-12);

// Leading-order capacity of the (0, d)-RLL system in log base 2:
// log2 q - (q-1) log2 e / q^{d+2}.
double rll_capacity_asymptotic_log2(int q, int max_zero_run);

// log_q of the largest adjacency eigenvalue over the graph's strongly
// connected components; 0 for a degenerate graph generating a finite
// language.
CapacityResult irr_graph_capacity(const ConstrainedGraph& g, double tol = 1e-12);

}  // namespace tandem

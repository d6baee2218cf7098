// Command-line front end for the tandem-duplication code toolkit.
//
// Exit codes: 0 success, 2 parse error, 3 resource budget exceeded,
// 4 decode failure, 5 incompatible parameters.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tandem/capacity.hpp"
#include "tandem/channel.hpp"
#include "tandem/classify.hpp"
#include "tandem/codes.hpp"
#include "tandem/roots.hpp"
#include "tandem/word.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDecode = 4;
constexpr int kExitIncompatible = 5;

struct RootArgs {
  int q = 2;
  std::string lengths;
  std::string word;
};

struct GencodeArgs {
  int q = 2;
  int n = 1;
  std::string mode;
  int k = 0;
  long long t = -1;
  std::string output;
};

struct DecodeArgs {
  std::string code_file;
  std::string word;
};

struct CapacityArgs {
  int q = 2;
  std::string mode;
  int k = 0;   // channel duplication length (mode fixed)
  int d = -1;  // max zero-run (mode rll)
  double tol = 1e-12;
  bool bounds = false;
  std::string dump_graph;
};

struct ClassifyArgs {
  int sigma = 2;
  std::string lengths;
};

struct SimulateArgs {
  std::string code_file;
  int t = 1;
  long long trials = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string lengths;  // optional channel override
};

tandem::Codebook load_codebook(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tandem::ParseError("cannot open codebook file: " + path);
  return tandem::read_codebook(in);
}

int run_root(const RootArgs& args) {
  const tandem::LengthSet lengths = tandem::LengthSet::parse(args.lengths);
  const tandem::Word word = tandem::Word::parse(args.word, args.q);
  std::vector<tandem::Word> roots;
  if (lengths.kind() == tandem::LengthSet::Kind::kFixed) {
    roots.push_back(tandem::root_fixed(word, lengths.min_length()));
  } else if (lengths.kind() == tandem::LengthSet::Kind::kUpTo && lengths.max_length() <= 3) {
    roots.push_back(tandem::root_bounded(word, lengths.max_length()));
  } else {
    roots = tandem::roots_general(word, lengths).roots;
  }
  for (const tandem::Word& r : roots) std::cout << r.str() << '\n';
  return 0;
}

int run_gencode(const GencodeArgs& args) {
  const tandem::CodeMode mode = tandem::parse_code_mode(args.mode);
  tandem::Codebook code;
  switch (mode) {
    case tandem::CodeMode::kFixedAll:
      if (args.k < 1) throw std::invalid_argument("mode fixed-all requires --k");
      if (args.t >= 0) throw std::invalid_argument("mode fixed-all corrects all errors; drop --t");
      code = tandem::build_fixed_all(args.q, args.n, args.k);
      break;
    case tandem::CodeMode::kFixedT:
      if (args.k < 1) throw std::invalid_argument("mode fixed-t requires --k");
      if (args.t < 0) throw std::invalid_argument("mode fixed-t requires --t");
      code = tandem::build_fixed_t(args.q, args.n, args.k, args.t);
      break;
    case tandem::CodeMode::kLe2:
    case tandem::CodeMode::kLe3:
      if (args.k > 0 || args.t >= 0) {
        throw std::invalid_argument("bounded modes take neither --k nor --t");
      }
      code = mode == tandem::CodeMode::kLe2 ? tandem::build_le2(args.q, args.n)
                                            : tandem::build_le3(args.q, args.n);
      break;
  }
  if (!args.output.empty()) {
    std::ofstream out(args.output);
    if (!out) throw std::invalid_argument("cannot open output file: " + args.output);
    tandem::write_codebook(code, out);
  }
  std::cout << "M=" << code.codewords.size() << '\n';
  return 0;
}

int run_decode(const DecodeArgs& args) {
  const tandem::Codebook code = load_codebook(args.code_file);
  const tandem::Word received = tandem::Word::parse(args.word, code.q);
  std::cout << tandem::decode(code, received).str() << '\n';
  return 0;
}

void print_capacity(const tandem::CapacityResult& result, bool bounds) {
  std::printf("value=%.9f\n", result.value);
  std::printf("eigenvalue=%.12f\n", result.eigenvalue);
  std::printf("iterations=%d\n", result.iterations);
  if (bounds) {
    if (result.lower_bound && result.upper_bound) {
      std::printf("lower_bound=%.12f\n", *result.lower_bound);
      std::printf("upper_bound=%.12f\n", *result.upper_bound);
    } else {
      std::printf("bounds=excluded\n");
    }
  }
}

int run_capacity(const CapacityArgs& args) {
  if (args.mode == "fixed" || args.mode == "rll") {
    int max_zero_run;
    if (args.mode == "fixed") {
      if (args.k < 1) throw std::invalid_argument("mode fixed requires --k (duplication length)");
      max_zero_run = args.k - 1;  // k-duplication channel <-> (0, k-1)-RLL system
    } else {
      if (args.d < 0) throw std::invalid_argument("mode rll requires --d (max zero-run)");
      max_zero_run = args.d;
    }
    print_capacity(tandem::rll_capacity(args.q, max_zero_run, args.tol), args.bounds);
    return 0;
  }
  if (args.mode == "le2" || args.mode == "le3") {
    const tandem::ConstrainedGraph graph =
        tandem::build_irr_graph(args.q, args.mode == "le2" ? 2 : 3);
    if (!args.dump_graph.empty()) {
      std::ofstream out(args.dump_graph);
      if (!out) throw std::invalid_argument("cannot open graph file: " + args.dump_graph);
      tandem::dump_graph(graph, out);
    }
    std::printf("states=%zu\n", graph.states.size());
    std::printf("edges=%zu\n", graph.num_edges());
    print_capacity(tandem::irr_graph_capacity(graph, args.tol), args.bounds);
    return 0;
  }
  throw tandem::ParseError("unknown capacity mode: " + args.mode);
}

int run_classify(const ClassifyArgs& args) {
  const tandem::LengthSet lengths = tandem::LengthSet::parse(args.lengths);
  const tandem::ClassificationVerdict verdict = tandem::classify(args.sigma, lengths);
  std::cout << "verdict=" << (verdict.unique ? "unique" : "non-unique") << '\n';
  std::cout << "rule=" << verdict.rule << '\n';
  if (verdict.witness) std::cout << "witness=" << verdict.witness->str() << '\n';
  return 0;
}

int run_simulate(const SimulateArgs& args) {
  const tandem::Codebook code = load_codebook(args.code_file);
  tandem::ChannelConfig cfg;
  cfg.lengths = args.lengths.empty() ? code.channel_lengths() : tandem::LengthSet::parse(args.lengths);
  cfg.duplications = args.t;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.threads = args.threads;
  std::cout << tandem::run_experiment(code, cfg).to_text();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error-correcting codes for tandem-duplication channels"};
  app.require_subcommand(1);

  RootArgs root_args;
  CLI::App* root = app.add_subcommand("root", "Compute the root set of a word");
  root->add_option("--q", root_args.q, "alphabet size")->required();
  root->add_option("--lengths", root_args.lengths, "duplication lengths: K, <=K, or a,b,c")->required();
  root->add_option("word", root_args.word, "word over 0-9a-z")->required();

  GencodeArgs gen_args;
  CLI::App* gencode = app.add_subcommand("gencode", "Construct a codebook");
  gencode->add_option("--q", gen_args.q, "alphabet size")->required();
  gencode->add_option("--n", gen_args.n, "code length")->required();
  gencode->add_option("--mode", gen_args.mode, "fixed-all | fixed-t | le2 | le3")->required();
  gencode->add_option("--k", gen_args.k, "duplication length (fixed modes)");
  gencode->add_option("--t", gen_args.t, "corrected duplication count (fixed-t)");
  gencode->add_option("-o,--output", gen_args.output, "codebook file to write");

  DecodeArgs dec_args;
  CLI::App* dec = app.add_subcommand("decode", "Decode a received word");
  dec->add_option("--code", dec_args.code_file, "codebook file")->required();
  dec->add_option("word", dec_args.word, "received word")->required();

  CapacityArgs cap_args;
  CLI::App* cap = app.add_subcommand("capacity", "Channel / constrained-system capacity");
  cap->add_option("--q", cap_args.q, "alphabet size")->required();
  cap->add_option("--mode", cap_args.mode, "fixed | rll | le2 | le3")->required();
  cap->add_option("--k", cap_args.k, "duplication length (mode fixed)");
  cap->add_option("--d", cap_args.d, "max zero-run length (mode rll)");
  cap->add_option("--tol", cap_args.tol, "eigenvalue tolerance");
  cap->add_flag("--bounds", cap_args.bounds, "print the analytic eigenvalue bounds");
  cap->add_option("--dump-graph", cap_args.dump_graph, "write the constraint graph edge list");

  ClassifyArgs cls_args;
  CLI::App* cls = app.add_subcommand("classify", "Unique-root classification of (alphabet, lengths)");
  cls->add_option("--sigma", cls_args.sigma, "alphabet size")->required();
  cls->add_option("--lengths", cls_args.lengths, "duplication lengths")->required();

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo channel experiment");
  sim->add_option("--code", sim_args.code_file, "codebook file")->required();
  sim->add_option("--t", sim_args.t, "duplications per transmission")->required();
  sim->add_option("--trials", sim_args.trials, "trial count")->required();
  sim->add_option("--seed", sim_args.seed, "RNG seed")->required();
  sim->add_option("--threads", sim_args.threads, "worker threads");
  sim->add_option("--lengths", sim_args.lengths, "channel length override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (root->parsed()) return run_root(root_args);
    if (gencode->parsed()) return run_gencode(gen_args);
    if (dec->parsed()) return run_decode(dec_args);
    if (cap->parsed()) return run_capacity(cap_args);
    if (cls->parsed()) return run_classify(cls_args);
    if (sim->parsed()) return run_simulate(sim_args);
  } catch (const tandem::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const tandem::ResourceLimitError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const tandem::DecodeError& e) {
    std::cerr << "decode failure: " << e.what() << '\n';
    return kExitDecode;
  } catch (const std::invalid_argument& e) {
    std::cerr << "incompatible parameters: " << e.what() << '\n';
    return kExitIncompatible;
  }
  return 0;
}

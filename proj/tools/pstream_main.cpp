#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pstream/cnf.hpp"
#include "pstream/generators.hpp"
#include "pstream/graph.hpp"
#include "pstream/multipass_vc.hpp"
#include "pstream/oracles.hpp"
#include "pstream/report.hpp"
#include "pstream/threshold.hpp"

namespace {

using namespace pstream;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDeskBound = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

ReplayableStream load_stream(const std::string& path, const std::string& model_flag) {
  ReplayableStream s = read_stream_file(path);
  if (model_flag.empty()) return s;
  StreamModel want;
  if (model_flag == "insert-only")
    want = StreamModel::InsertOnly;
  else if (model_flag == "insert-delete")
    want = StreamModel::InsertDelete;
  else
    throw std::invalid_argument("unknown model \"" + model_flag + "\"");
  if (want == s.model()) return s;
  // Re-validate the same updates under the requested model.
  return ReplayableStream::open(s.vertex_count(), want, s.updates());
}

int cmd_run(const std::string& problem, int k, const std::string& input,
            const std::string& model_flag, std::int64_t tau) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.problem = problem;

  if (problem == "sat-naive") {
    CnfInstance cnf = read_dimacs_file(input);
    SpaceLedger ledger;
    PassCounter pc{1};  // the clause stream is consumed once, storing everything
    std::int64_t words = 1;
    for (const Clause& c : cnf.clauses) words += static_cast<std::int64_t>(c.literals.size());
    ledger.charge(words);
    SatResult result =
        cnf.max_clause_size() <= 2 ? sat2_solve(cnf) : satd_brute(cnf);
    report.decision = to_string(result);
    report.passes = pc.passes;
    report.peak_words = ledger.peak_words();
    report.wall_ms = elapsed_ms(start);
    std::cout << format_report(report);
    return kExitOk;
  }

  ReplayableStream stream = load_stream(input, model_flag);
  report.model = to_string(stream.model());
  report.k = k;

  RunStats stats;
  Decision decision;
  if (problem == "vc-branching" || problem == "vc-ic") {
    VcResult vc = problem == "vc-branching" ? vc_branching(stream, k)
                                            : vc_iterative_compression(stream, k);
    decision = Decision{vc.yes, std::move(vc.cover)};
    stats = vc.stats;
  } else if (problem == "path") {
    decision = k_path_decide(stream, k, &stats);
  } else if (problem == "treewidth") {
    decision = k_treewidth_decide(stream, k, &stats);
  } else if (problem == "fvs") {
    decision = k_fvs_decide(stream, k, &stats);
  } else if (problem.rfind("bidim:", 0) == 0) {
    const std::string name = problem.substr(6);
    const BidimensionalProblemSpec* spec = find_bidimensional_spec(name);
    if (!spec) throw std::invalid_argument("unknown bidimensional spec \"" + name + "\"");
    decision = bidimensional_decide(stream, k, *spec, tau, &stats);
  } else {
    throw std::invalid_argument("unknown problem \"" + problem + "\"");
  }

  report.decision = decision.yes ? "YES" : "NO";
  if (!decision.witness.empty()) report.witness = decision.witness;
  report.passes = stats.passes;
  report.peak_words = stats.peak_words;
  if (stats.threshold > 0) report.threshold = stats.threshold;
  report.wall_ms = elapsed_ms(start);
  std::cout << format_report(report);
  return kExitOk;
}

int cmd_oracle(const std::string& problem, const std::string& input) {
  if (problem == "sat2" || problem == "satd") {
    CnfInstance cnf = read_dimacs_file(input);
    SatResult r = problem == "sat2" ? sat2_solve(cnf) : satd_brute(cnf);
    std::cout << "problem=" << problem << "\nvalue=" << to_string(r) << '\n';
    return kExitOk;
  }
  StoredGraph g = graph_from_stream(read_stream_file(input));
  std::cout << "problem=" << problem << '\n';
  auto print_witness = [](const std::vector<Vertex>& w) {
    std::cout << "witness=";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << w[i];
    }
    std::cout << '\n';
  };
  if (problem == "vc") {
    WitnessResult r = vc_min(g);
    std::cout << "value=" << r.size << '\n';
    print_witness(r.witness);
  } else if (problem == "path") {
    std::cout << "value=" << longest_path_length(g) << '\n';
  } else if (problem == "fvs") {
    WitnessResult r = fvs_min(g);
    std::cout << "value=" << r.size << '\n';
    print_witness(r.witness);
  } else if (problem == "treewidth") {
    std::cout << "value=" << treewidth_exact(g) << '\n';
  } else if (problem == "girth") {
    auto r = girth(g);
    std::cout << "value=" << (r ? std::to_string(*r) : std::string("inf")) << '\n';
  } else if (problem == "domset") {
    WitnessResult r = domset_min(g);
    std::cout << "value=" << r.size << '\n';
    print_witness(r.witness);
  } else {
    throw std::invalid_argument("unknown oracle \"" + problem + "\"");
  }
  return kExitOk;
}

std::string domset_est_opt_class(const StoredGraph& g) {
  return has_dominating_set_of_size(g, 2) ? "2" : "gt2";
}

int cmd_gen(const std::string& reduction, int N, int r, int vars, int n, int beta, int index,
            std::uint64_t seed, const std::string& out_path) {
  auto tag = reduction_tag_from_name(reduction);
  if (!tag) throw std::invalid_argument("unknown reduction \"" + reduction + "\"");

  std::ofstream truth(out_path + ".truth");
  if (!truth) throw std::invalid_argument("cannot open " + out_path + ".truth for writing");
  std::ostringstream meta;
  meta << "meta reduction=" << reduction << " seed=" << seed;

  switch (*tag) {
    case ReductionTag::Perm5Path:
    case ReductionTag::PermTreewidth1:
    case ReductionTag::PermFvs0: {
      PermInstance p = PermInstance::random(N, index, seed);
      GeneratedStream g = *tag == ReductionTag::Perm5Path ? gen_perm_5path(p)
                          : *tag == ReductionTag::PermTreewidth1
                              ? gen_perm_treewidth1(p)
                              : gen_perm_fvs0(p);
      write_stream_file(out_path, g.stream);
      truth << "truth bit=" << g.truth_bit << '\n';
      meta << " N=" << N << " index=" << index;
      break;
    }
    case ReductionTag::IndexDomset3:
    case ReductionTag::IndexGirth3: {
      IndexInstance x = IndexInstance::random(r, index, seed);
      GeneratedStream g = *tag == ReductionTag::IndexDomset3 ? gen_index_domset3(x)
                                                             : gen_index_girth3(x);
      write_stream_file(out_path, g.stream);
      truth << "truth bit=" << g.truth_bit << '\n';
      meta << " r=" << r << " index=" << index;
      break;
    }
    case ReductionTag::Index2Sat: {
      const int half = vars / 2;
      std::mt19937_64 rng(seed);
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(half) * half);
      for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
      Generated2Sat g = gen_index_2sat(vars, bits, index);
      write_dimacs_file(out_path, g.cnf);
      truth << "truth bit=" << g.truth_bit << '\n';
      meta << " vars=" << vars << " index=" << index;
      break;
    }
    case ReductionTag::DomsetEst: {
      DomSetEstSample sample = sample_domset_est(n, beta, seed);
      write_stream_file(out_path, sample.stream);
      truth << "truth opt=" << domset_est_opt_class(sample.graph) << '\n';
      meta << " n=" << n << " beta=" << beta << " theta=" << sample.theta
           << " i_star=" << sample.i_star;
      break;
    }
  }
  truth << meta.str() << '\n';
  std::cout << "wrote=" << out_path << '\n' << "truth_file=" << out_path << ".truth\n";
  return kExitOk;
}

int cmd_verify(const std::string& reduction, const std::string& input) {
  auto tag = reduction_tag_from_name(reduction);
  if (!tag) throw std::invalid_argument("unknown reduction \"" + reduction + "\"");

  std::ifstream truth_in(input + ".truth");
  if (!truth_in) throw std::invalid_argument("cannot open " + input + ".truth");
  std::string line;
  if (!std::getline(truth_in, line))
    throw std::invalid_argument("empty truth sidecar");
  std::istringstream truth_line(line);
  std::string word, key_value;
  truth_line >> word >> key_value;
  if (word != "truth" || key_value.find('=') == std::string::npos)
    throw std::invalid_argument("malformed truth sidecar line \"" + line + "\"");
  const std::string key = key_value.substr(0, key_value.find('='));
  const std::string expected = key_value.substr(key_value.find('=') + 1);

  std::string got;
  if (*tag == ReductionTag::Index2Sat) {
    got = std::to_string(extract_bit(read_dimacs_file(input)));
  } else {
    StoredGraph g = graph_from_stream(read_stream_file(input));
    if (*tag == ReductionTag::DomsetEst)
      got = domset_est_opt_class(g);
    else
      got = std::to_string(extract_bit(g, *tag));
  }

  const bool pass = got == expected;
  std::cout << "reduction=" << reduction << '\n'
            << "expected_" << key << '=' << expected << '\n'
            << "recovered_" << key << '=' << got << '\n'
            << "verify=" << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized streaming graph toolkit"};
  app.require_subcommand(1);

  std::string problem, input, model_flag, out_path, reduction;
  int k = 0, N = 4, r = 2, vars = 4, n = 64, beta = 32, index = 1;
  std::uint64_t seed = 1;
  std::int64_t tau = 1;

  CLI::App* run = app.add_subcommand("run", "Run a streaming algorithm on an update stream");
  run->add_option("problem", problem,
                  "vc-branching|vc-ic|path|treewidth|fvs|bidim:<spec>|sat-naive")
      ->required();
  run->add_option("--k", k, "parameter k");
  run->add_option("--input", input, "update stream (or DIMACS CNF for sat-naive)")->required();
  run->add_option("--model", model_flag, "insert-only|insert-delete override");
  run->add_option("--tau", tau, "threshold constant for bidim:<spec>");

  CLI::App* oracle = app.add_subcommand("oracle", "Exact offline solve of a stored instance");
  oracle->add_option("problem", problem, "vc|path|fvs|treewidth|girth|domset|sat2|satd")
      ->required();
  oracle->add_option("--input", input, "update stream (or DIMACS CNF)")->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate a hard-instance reduction");
  gen->add_option("reduction", reduction,
                  "perm-5path|perm-treewidth1|perm-fvs0|index-domset3|index-girth3|"
                  "index-2sat|domset-est")
      ->required();
  gen->add_option("--N", N, "Perm size (power of two)");
  gen->add_option("--r", r, "Index side length");
  gen->add_option("--vars", vars, "2-SAT variable count (even)");
  gen->add_option("--n", n, "domset-est ground set size");
  gen->add_option("--beta", beta, "domset-est set size (multiple of 8)");
  gen->add_option("--index", index, "Bob's 1-based query index");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out_path, "output path")->required();

  CLI::App* verify = app.add_subcommand("verify", "Re-derive a generated instance's truth");
  verify->add_option("reduction", reduction, "reduction tag used by gen")->required();
  verify->add_option("--input", input, "instance path (expects <path>.truth)")->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(problem, k, input, model_flag, tau);
    if (oracle->parsed()) return cmd_oracle(problem, input);
    if (gen->parsed()) return cmd_gen(reduction, N, r, vars, n, beta, index, seed, out_path);
    if (verify->parsed()) return cmd_verify(reduction, input);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const DeskBoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDeskBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

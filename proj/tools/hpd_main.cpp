// Command line front end: construct, verify, and inspect hypercube path
// decompositions.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hpd/decompose.hpp"
#include "hpd/ham.hpp"
#include "hpd/io.hpp"
#include "hpd/verify.hpp"

namespace {

int run_check(std::uint64_t m, std::uint64_t q) {
  if (hpd::check_divisibility(m, q)) {
    std::cout << "yes: " << m << " divides " << q << "*2^" << (q - 1) << "\n";
    return 0;
  }
  if (m > q)
    std::cout << "no: m=" << m << " exceeds q=" << q << "\n";
  else
    std::cout << "no: " << m << " does not divide " << q << "*2^" << (q - 1) << "\n";
  return 1;
}

int run_decompose(std::int64_t m, std::int64_t q, const std::string& out_file,
                  bool verify, std::uint64_t max_edges) {
  const hpd::Decomposition dec = hpd::decompose(m, q, max_edges);

  std::ofstream file;
  const bool to_stdout = out_file.empty();
  if (!to_stdout) {
    file.open(out_file, std::ios::binary);
    if (!file) throw hpd::InvalidParameter("cannot open " + out_file);
  }
  std::ostream& os = to_stdout ? std::cout : file;
  std::ostream& log = to_stdout ? std::cerr : std::cout;

  if (!verify) {
    hpd::write_decomposition(os, dec);
    log << "wrote " << dec.path_count() << " paths of length " << dec.path_len()
        << " covering Q_" << dec.dim() << "\n";
    return 0;
  }

  // Check while writing, in one pass over the stream.
  hpd::PartitionChecker checker(dec.dim(), max_edges);
  hpd::write_header(os, hpd::DecompositionHeader{dec.dim(), dec.path_len(),
                                                 dec.path_count()});
  dec.for_each([&](const hpd::PathEmbedding& p) {
    hpd::write_path_line(os, p);
    checker.add_path(p, dec.path_len());
  });
  const hpd::Report rep = checker.finish();
  log << "wrote " << dec.path_count() << " paths; verify " << rep.summary() << "\n";
  return rep.ok ? 0 : 1;
}

int run_verify(const std::string& file, std::uint64_t max_edges) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw hpd::InvalidParameter("cannot open " + file);
  const hpd::Report rep = hpd::verify_decomposition_file(is, max_edges);
  std::cout << rep.summary() << "\n";
  return rep.ok ? 0 : 1;
}

int run_ham(int r, int delta, bool have_delta) {
  const auto print_cycle = [r](std::uint32_t d) {
    const hpd::CycleEmbedding c = hpd::ham_cycle(r, d);
    std::string line = std::to_string(d) + ":";
    line.reserve(c.verts.size() * 5);
    for (hpd::Vertex v : c.verts) {
      line.push_back(' ');
      char buf[17];
      std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
      line += buf;
    }
    std::cout << line << "\n";
  };
  std::cout << "cycles on Q_" << (1 << r) << ", length " << hpd::ham_cycle_length(r)
            << "\n";
  if (have_delta) {
    print_cycle(static_cast<std::uint32_t>(delta));
    return 0;
  }
  for (std::uint32_t d = 0; d < (std::uint32_t{1} << (r - 1)); ++d) print_cycle(d);
  return 0;
}

int run_dvop(int r, int k, std::uint64_t samples, std::uint64_t max_edges) {
  const hpd::Dvop d = hpd::dvop_for(r, k);
  hpd::DvopCheckOptions opts;
  opts.max_edges = max_edges;
  opts.samples = samples;
  const hpd::Report rep = hpd::verify_dvop(d, opts);
  std::cout << "DVOP[" << k << "] on Q_" << d.dim << ", complement "
            << d.complement.size() << " cycle(s): " << rep.summary() << "\n";
  return rep.ok ? 0 : 1;
}

int run_oracle(int q, int m) {
  const auto witness = hpd::brute_force_decompose(q, m);
  if (!witness) {
    std::cout << "none\n";
    return 1;
  }
  hpd::write_header(std::cout, hpd::DecompositionHeader{
                                   q, m, static_cast<std::uint64_t>(witness->size())});
  for (const hpd::PathEmbedding& p : *witness) hpd::write_path_line(std::cout, p);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge decompositions of hypercubes into fixed-length paths"};
  app.require_subcommand(1);
  std::uint64_t max_edges = hpd::kDefaultMaxEdges;
  app.add_option("--max-edges", max_edges,
                 "guard for operations that materialize an edge set");

  std::uint64_t check_m = 0, check_q = 0;
  auto* check = app.add_subcommand("check", "test whether P_m can tile E(Q_q)");
  check->add_option("--m", check_m, "path length")->required();
  check->add_option("--q", check_q, "hypercube dimension (odd)")->required();

  std::int64_t dec_m = 0, dec_q = 0;
  std::string out_file;
  bool do_verify = false;
  auto* dec = app.add_subcommand("decompose", "emit a decomposition file");
  dec->add_option("--m", dec_m, "path length")->required();
  dec->add_option("--q", dec_q, "hypercube dimension (odd)")->required();
  dec->add_option("--out", out_file, "output file (default: stdout)");
  dec->add_flag("--verify", do_verify, "check the stream while writing");

  std::string verify_file;
  auto* ver = app.add_subcommand("verify", "check a decomposition file");
  ver->add_option("file", verify_file, "decomposition file")->required();

  int ham_r = 0, ham_delta = 0;
  auto* ham = app.add_subcommand("ham", "print Hamiltonian cycles of Q_{2^r}");
  ham->add_option("--r", ham_r, "cube level (dimension 2^r)")->required();
  auto* delta_opt = ham->add_option("--delta", ham_delta, "single cycle index");

  int dvop_r = 0, dvop_k = 0;
  std::uint64_t dvop_samples = 10000;
  auto* dv = app.add_subcommand("dvop", "build and check a per-vertex path system");
  dv->add_option("--r", dvop_r, "cube level (dimension 2^r)")->required();
  dv->add_option("--k", dvop_k, "path length")->required();
  dv->add_option("--sample", dvop_samples, "vertices to sample when too big to sweep");

  int oracle_q = 0, oracle_m = 0;
  auto* orc = app.add_subcommand("oracle", "exhaustive search on a tiny cube");
  orc->add_option("--q", oracle_q, "hypercube dimension")->required();
  orc->add_option("--m", oracle_m, "path length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_m, check_q);
    if (*dec) return run_decompose(dec_m, dec_q, out_file, do_verify, max_edges);
    if (*ver) return run_verify(verify_file, max_edges);
    if (*ham) return run_ham(ham_r, ham_delta, delta_opt->count() > 0);
    if (*dv) return run_dvop(dvop_r, dvop_k, dvop_samples, max_edges);
    if (*orc) return run_oracle(oracle_q, oracle_m);
  } catch (const hpd::NotDivisible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hpd::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hpd::Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hpd::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return *ver ? 1 : 2;
  } catch (const hpd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

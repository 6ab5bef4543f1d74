// Command-line front end: width bounds, embedding certificates and
// verification reports for coadjoint-orbit Gelfand-Tsetlin polytopes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gtwidth/cli.hpp"

namespace {

using gtwidth::JobSpec;

void split_lambda(const std::string& csv, JobSpec& job) {
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) job.lambda.push_back(item);
}

void add_weight_args(CLI::App* cmd, JobSpec& job, std::string& lambda_csv) {
  cmd->add_option("group", job.group, "group family: u | so-odd | so-even")->required();
  cmd->add_option("n", job.n, "rank: U(n), SO(2n+1), SO(2n)")->required();
  cmd->add_option("lambda", lambda_csv,
                  "comma-separated weight entries, integers or p/q rationals")
      ->required();
}

int emit(const gtwidth::JobResult& res) {
  std::cout << res.report.dump(2) << std::endl;
  return res.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov-width lower bounds for classical coadjoint orbits via "
               "Gelfand-Tsetlin polytopes"};
  app.require_subcommand(1);

  JobSpec job;
  job.options.seed = gtwidth::default_seed();
  std::string lambda_csv;

  auto* bound = app.add_subcommand("bound", "width bound, dimensions, exactness criteria");
  add_weight_args(bound, job, lambda_csv);

  auto* cert = app.add_subcommand("certificate",
                                  "vertex V, unimodular W and the embedded simplex");
  add_weight_args(cert, job, lambda_csv);
  cert->add_option("--emit-hrep", job.options.emit_hrep,
                   "also write the polytope H-representation to this JSON file");

  auto* verify = app.add_subcommand("verify", "run the exact and sampled checks");
  add_weight_args(verify, job, lambda_csv);
  verify->add_option("--samples", job.options.samples, "Monte-Carlo sample count");
  verify->add_option("--tol", job.options.tolerance, "membership tolerance");
  verify->add_option("--seed", job.options.seed, "PRNG seed (default: GTWIDTH_SEED)");
  int psi_n = 0;
  auto* psi_opt = verify->add_option("--psi", psi_n,
                                     "also check symplecticity of the disc map in dimension N");

  std::string batch_in, batch_out;
  int batch_jobs = 1;
  auto* batch = app.add_subcommand("batch", "one JobSpec JSON per line in, one report per line out");
  batch->add_option("--input", batch_in, "input file, - for stdin")->required();
  batch->add_option("--output", batch_out, "output file, - for stdout")->required();
  batch->add_option("--jobs", batch_jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gtwidth::kExitBadInput;
  }

  if (batch->parsed()) {
    std::ifstream fin;
    std::ofstream fout;
    std::istream* in = &std::cin;
    std::ostream* out = &std::cout;
    if (batch_in != "-") {
      fin.open(batch_in);
      if (!fin) {
        std::cerr << "cannot open input '" << batch_in << "'\n";
        return gtwidth::kExitBadInput;
      }
      in = &fin;
    }
    if (batch_out != "-") {
      fout.open(batch_out);
      if (!fout) {
        std::cerr << "cannot open output '" << batch_out << "'\n";
        return gtwidth::kExitBadInput;
      }
      out = &fout;
    }
    return gtwidth::run_batch(*in, *out, batch_jobs);
  }

  split_lambda(lambda_csv, job);
  if (psi_opt->count() > 0) job.options.psi = psi_n;
  job.command = app.get_subcommands().front()->get_name();
  return emit(gtwidth::dispatch_job(job));
}

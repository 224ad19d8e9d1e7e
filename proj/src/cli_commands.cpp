#include "qg/cli.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qg/eig.hpp"
#include "qg/loggas.hpp"
#include "qg/matrix_model.hpp"
#include "qg/potential_theory.hpp"
#include "qg/spectral_stats.hpp"
#include "qg/verify.hpp"

namespace qg {

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Potential parse_potential(const std::string& spec) {
  if (spec == "canonical" || spec.empty()) return Potential::canonical();
  double a, b, c;
  if (std::sscanf(spec.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3)
    throw CLI::ValidationError("--potential",
                               "expected 'canonical' or three reals a,b,c");
  return Potential::quadratic(a, b, c);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  return os;
}

// Run fn(0..count-1) on `jobs` threads; results land in index order, so
// output bytes do not depend on the schedule.
void parallel_for_indexed(int count, int jobs,
                          const std::function<void(int)>& fn) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (std::thread& th : pool) th.join();
}

struct CommonOpts {
  int n = 50;
  int replicas = 1;
  std::uint64_t seed = 7;
  std::string potential = "canonical";
  std::string out = "qg_out";
  int jobs = 1;
};

int cmd_spectrum(const CommonOpts& o) {
  const Potential v = parse_potential(o.potential);
  RandomStream root(o.seed);

  struct ReplicaOut {
    bool ok = false;
    std::string error;
    std::vector<Complex> eigs;
    double energy = 0.0;
  };
  std::vector<ReplicaOut> results(o.replicas);
  parallel_for_indexed(o.replicas, o.jobs, [&](int r) {
    try {
      RandomStream rng = root.child(100 + r);
      const QuaternionMatrix x = sample_ginibre_quaternion(o.n, rng);
      const SpectrumSample s = pair_spectrum(eigenvalues(complex_adjoint(x)));
      results[r].eigs = s.all_eigs;
      results[r].energy = empirical_energy(s, v);
      results[r].ok = true;
    } catch (const std::exception& e) {
      results[r].error = e.what();
    }
  });

  std::ofstream csv = open_out(o.out + ".csv");
  csv << "replica,re,im\n";
  int failures = 0;
  double energy_sum = 0.0;
  json per_replica = json::array();
  for (int r = 0; r < o.replicas; ++r) {
    const ReplicaOut& ro = results[r];
    if (!ro.ok) {
      ++failures;
      std::cerr << "spectrum: replica " << r << " failed: " << ro.error << "\n";
      per_replica.push_back(nullptr);
      continue;
    }
    for (const Complex& z : ro.eigs)
      csv << r << ',' << g17(z.real()) << ',' << g17(z.imag()) << '\n';
    energy_sum += ro.energy;
    per_replica.push_back(ro.energy);
  }

  json summary = {{"n", o.n},
                  {"replicas", o.replicas},
                  {"seed", o.seed},
                  {"potential", v.describe()},
                  {"failed_replicas", failures},
                  {"mean_energy", failures == o.replicas
                                      ? 0.0
                                      : energy_sum / (o.replicas - failures)},
                  {"per_replica_energy", per_replica}};
  open_out(o.out + ".json") << summary.dump(2) << "\n";
  return failures == o.replicas ? 1 : 0;
}

struct McmcOpts : CommonOpts {
  long steps = 200000;
  long burnin = kDefaultBurnin;
  double proposal_scale = 0.0;  // 0 = default 1/sqrt(n)
};

int cmd_mcmc(const McmcOpts& o) {
  const Potential v = parse_potential(o.potential);
  const double scale =
      o.proposal_scale > 0.0 ? o.proposal_scale : default_proposal_scale(o.n);
  RandomStream rng = RandomStream(o.seed).child(1);

  GasState state = [&] {
    if (o.burnin > 0) {
      McmcRun burn = mcmc_run(o.n, v, o.burnin, scale, rng, 0);
      return std::move(burn.final_state);
    }
    McmcRun warm = mcmc_run(o.n, v, 1, scale, rng, 0);
    return std::move(warm.final_state);
  }();

  std::ofstream csv = open_out(o.out + ".csv");
  csv << "step,point_index,re,im,accepted\n";
  const McmcTrace trace = [&](const McmcStep& s) {
    csv << s.step << ',' << s.point_index << ',' << g17(s.proposal.real())
        << ',' << g17(s.proposal.imag()) << ',' << (s.accepted ? 1 : 0)
        << '\n';
  };
  const McmcRun run = mcmc_run(std::move(state), v, o.steps, scale, rng, 0, trace);

  json summary = {{"n", o.n},
                  {"V", v.describe()},
                  {"steps", o.steps},
                  {"burnin", o.burnin},
                  {"seed", o.seed},
                  {"proposal_scale", scale},
                  {"acceptance_rate", run.acceptance_rate},
                  {"mean_energy", run.mean_energy}};
  open_out(o.out + ".json") << summary.dump(2) << "\n";
  return 0;
}

struct TableOpts {
  std::string measure = "nu";
  int grid = 64;
  double range = 2.0;
  double tol = 1e-7;
  std::string out = "qg_table";
};

int cmd_potential_table(const TableOpts& o) {
  std::function<double(Complex)> closed;
  std::function<double(Complex)> quad;
  const CircleMeasureDensity sin2 = CircleMeasureDensity::sin2();
  const CircleMeasureDensity haar = CircleMeasureDensity::haar();
  if (o.measure == "nu") {
    closed = potential_nu;
    quad = [&, sin2](Complex x) { return quad_potential(sin2, x, o.tol); };
  } else if (o.measure == "disk") {
    closed = potential_uniform_disk;
    quad = [&](Complex x) { return quad_potential_disk(x, o.tol); };
  } else if (o.measure == "circle") {
    closed = [](Complex x) {
      const double ax = std::abs(x);
      return ax <= 1.0 ? 0.0 : -std::log(ax);
    };
    quad = [&, haar](Complex x) { return quad_potential(haar, x, o.tol); };
  } else {
    throw CLI::ValidationError("--measure", "expected nu, disk or circle");
  }

  std::ofstream csv = open_out(o.out + ".csv");
  csv << "re,im,U_closed,U_quad,abs_err\n";
  double max_err = 0.0;
  for (int i = 0; i < o.grid; ++i) {
    for (int j = 0; j < o.grid; ++j) {
      const double re = o.grid == 1 ? 0.0
                                    : -o.range + 2.0 * o.range * i / (o.grid - 1);
      const double im = o.grid == 1 ? 0.0
                                    : -o.range + 2.0 * o.range * j / (o.grid - 1);
      const Complex x(re, im);
      const double uc = closed(x);
      const double uq = quad(x);
      const double err = std::abs(uc - uq);
      max_err = std::max(max_err, err);
      csv << g17(re) << ',' << g17(im) << ',' << g17(uc) << ',' << g17(uq)
          << ',' << g17(err) << '\n';
    }
  }
  std::cout << "potential-table: " << o.grid * o.grid
            << " points, max abs_err = " << max_err << "\n";
  return 0;
}

int cmd_classes(const CommonOpts& o) {
  RandomStream root(o.seed);

  struct ReplicaOut {
    ClassSample cs;
    EmpiricalMeasure m;
    double vn = 0.0;
  };
  std::vector<ReplicaOut> results(o.replicas);
  parallel_for_indexed(o.replicas, o.jobs, [&](int r) {
    RandomStream mrng = root.child(100 + r);
    const QuaternionMatrix xm = sample_ginibre_quaternion(o.n, mrng);
    const SpectrumSample spec = pair_spectrum(eigenvalues(complex_adjoint(xm)));
    RandomStream crng = root.child(200 + r);
    results[r].cs = sample_classes(spec, crng);
    results[r].m = class_weighted_measure(results[r].cs);
    for (double rad : results[r].cs.radii)
      results[r].vn += 4.0 * M_PI * rad * rad;
  });

  std::ofstream csv = open_out(o.out + ".csv");
  csv << "re,im,w,x,y,z,weight,canon_re,canon_im\n";
  double total_mass = 0.0;
  for (const ReplicaOut& ro : results) {
    total_mass += ro.vn;
    std::size_t wi = 0;
    for (std::size_t i = 0; i < ro.cs.classes.size(); ++i) {
      if (ro.cs.radii[i] < 1e-12) continue;
      const Quaternion& c = ro.cs.classes[i];
      const Complex canon = canonical_form(c);
      csv << g17(ro.cs.reps[i].real()) << ',' << g17(ro.cs.reps[i].imag())
          << ',' << g17(c.w) << ',' << g17(c.x) << ',' << g17(c.y) << ','
          << g17(c.z) << ',' << g17(ro.m.weights[wi]) << ','
          << g17(canon.real()) << ',' << g17(canon.imag()) << '\n';
      ++wi;
    }
  }
  json summary = {{"n", o.n},
                  {"replicas", o.replicas},
                  {"seed", o.seed},
                  {"total_mass", total_mass}};
  open_out(o.out + ".json") << summary.dump(2) << "\n";
  return 0;
}

struct VerifyCliOpts {
  std::uint64_t seed = 7;
  std::string only;
  std::string out;
};

int cmd_verify(const VerifyCliOpts& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.only = o.only;
  const std::vector<CriterionResult> results = run_acceptance(vo, &std::cout);

  bool all = true;
  json arr = json::array();
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    json e = {{"test_name", r.name},     {"pass", r.pass},
              {"measured", r.measured},  {"tolerance", r.tolerance},
              {"detail", r.detail},      {"seconds", r.seconds}};
    if (r.replicas > 0) {
      e["n"] = r.n;
      e["replicas"] = r.replicas;
    }
    if (r.ks >= 0.0) e["ks"] = r.ks;
    arr.push_back(e);
  }
  json report = {{"seed", o.seed},
                 {"only", o.only},
                 {"all_pass", all},
                 {"criteria", arr}};
  if (o.out.empty())
    std::cout << report.dump(2) << "\n";
  else
    open_out(o.out) << report.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Quaternionic Gaussian ensembles: spectra, log-gas sampling, "
               "potential tables and statistical verification"};
  app.require_subcommand(1);

  CommonOpts spec_o;
  CLI::App* spec = app.add_subcommand(
      "spectrum", "Sample ensembles and write pooled eigenvalues");
  spec->add_option("--n", spec_o.n, "matrix size")->check(CLI::PositiveNumber);
  spec->add_option("--replicas", spec_o.replicas)->check(CLI::PositiveNumber);
  spec->add_option("--seed", spec_o.seed)->envname("QG_SEED");
  spec->add_option("--potential", spec_o.potential,
                   "'canonical' or quadratic a,b,c");
  spec->add_option("--out", spec_o.out, "output prefix (.csv/.json)");
  spec->add_option("--jobs", spec_o.jobs)->check(CLI::PositiveNumber);

  McmcOpts mcmc_o;
  CLI::App* mcmc = app.add_subcommand(
      "mcmc", "Metropolis chain for the generalized eigenvalue density");
  mcmc->add_option("--n", mcmc_o.n)->check(CLI::PositiveNumber);
  mcmc->add_option("--seed", mcmc_o.seed)->envname("QG_SEED");
  mcmc->add_option("--potential", mcmc_o.potential);
  mcmc->add_option("--steps", mcmc_o.steps)->check(CLI::PositiveNumber);
  mcmc->add_option("--burnin", mcmc_o.burnin)->check(CLI::NonNegativeNumber);
  mcmc->add_option("--proposal-scale", mcmc_o.proposal_scale,
                   "0 = default 1/sqrt(n)");
  mcmc->add_option("--out", mcmc_o.out, "output prefix (.csv/.json)");

  TableOpts table_o;
  CLI::App* table = app.add_subcommand(
      "potential-table", "Closed-form vs quadrature potential table");
  table->add_option("--measure", table_o.measure, "nu | disk | circle");
  table->add_option("--grid", table_o.grid, "grid points per axis")
      ->check(CLI::PositiveNumber);
  table->add_option("--range", table_o.range, "half-width of the grid square");
  table->add_option("--tol", table_o.tol, "quadrature tolerance");
  table->add_option("--out", table_o.out, "output prefix (.csv)");

  CommonOpts classes_o;
  CLI::App* classes = app.add_subcommand(
      "classes", "Uniform similarity-class representatives of the spectrum");
  classes->add_option("--n", classes_o.n)->check(CLI::PositiveNumber);
  classes->add_option("--replicas", classes_o.replicas)
      ->check(CLI::PositiveNumber);
  classes->add_option("--seed", classes_o.seed)->envname("QG_SEED");
  classes->add_option("--out", classes_o.out, "output prefix (.csv/.json)");
  classes->add_option("--jobs", classes_o.jobs)->check(CLI::PositiveNumber);

  VerifyCliOpts verify_o;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the statistical acceptance checks");
  verify->add_option("--seed", verify_o.seed)->envname("QG_SEED");
  verify->add_option("--only", verify_o.only,
                     "substring filter over criterion names");
  verify->add_option("--out", verify_o.out, "report JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (spec->parsed()) return cmd_spectrum(spec_o);
    if (mcmc->parsed()) return cmd_mcmc(mcmc_o);
    if (table->parsed()) return cmd_potential_table(table_o);
    if (classes->parsed()) return cmd_classes(classes_o);
    if (verify->parsed()) return cmd_verify(verify_o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qg

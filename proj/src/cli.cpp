#include "gtwidth/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

namespace gtwidth {

std::uint64_t default_seed() {
  const char* env = std::getenv("GTWIDTH_SEED");
  if (!env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return 0;
  }
}

Weight weight_from_job(const JobSpec& job) {
  const GroupSpec g = group_from_token(job.group, job.n);
  if (static_cast<int>(job.lambda.size()) != job.n)
    throw InvalidWeightError("expected " + std::to_string(job.n) + " lambda entries, got " +
                             std::to_string(job.lambda.size()));
  RatVec entries(job.n);
  for (int i = 0; i < job.n; ++i) entries(i) = parse_rational(job.lambda[i]);
  return Weight::checked(g, std::move(entries));
}

namespace {

Json base_report(const JobSpec& job, const Weight& w) {
  Json rep;
  rep["command"] = job.command;
  rep.update(weight_json(w));
  return rep;
}

}  // namespace

Json run_bound(const JobSpec& job) {
  const Weight w = weight_from_job(job);
  Json rep = base_report(job, w);
  const Rational r = r_of(w);
  const LowerBound lb = lower_bound(w);
  const OrbitDims dims = orbit_dims(w);
  rep["r"] = rational_str(r);
  rep["r_prime"] = rational_str(lb.r_prime);
  rep["condition_star"] = lb.star;
  rep["real_dim"] = dims.real_dim;
  rep["N"] = dims.complex_dim;
  if (w.group.is_orthogonal()) {
    rep["exact_width"] = nullptr;
  } else if (auto width = exact_width(w)) {
    rep["exact_width"] = rational_str(*width);
  } else {
    rep["exact_width"] = nullptr;
  }
  try {
    const Indecomposability ind = is_indecomposable(w);
    rep["indecomposable_upper_bound"] =
        ind.indecomposable ? Json(rational_str(*ind.upper_bound)) : Json(nullptr);
  } catch (const NotRegularError&) {
    rep["indecomposable_upper_bound"] = nullptr;
  }
  return rep;
}

Json run_certificate(const JobSpec& job) {
  const Weight w = weight_from_job(job);
  const Certificate cert = certificate(w);
  Json rep;
  rep["command"] = job.command;
  rep.update(certificate_json(cert));
  if (!job.options.emit_hrep.empty()) {
    const Polytope p = hrep(w);
    std::ofstream out(job.options.emit_hrep);
    if (!out) throw InvalidWeightError("cannot open '" + job.options.emit_hrep + "'");
    out << polytope_json(p).dump(2) << "\n";
    rep["hrep_written"] = job.options.emit_hrep;
  }
  return rep;
}

namespace {

/// When the star condition fails, the polytope is pinched between the
/// hyperplanes x = 0 and x = |ln| in a distinguished coordinate: box
/// (n-1, 0) for SO(2n+1), (n-2, 0) for SO(2n). The pinch needs that box to
/// sit in the diagonal block carrying the value |ln|; for the even family
/// with a final tie of size exactly 2 no coordinate is pinched and the
/// edge construction in fact reaches length r everywhere.
Json pinch_check(const Diagram& d, const Polytope& p) {
  Json out;
  const Weight& w = d.weight();
  const int n = w.n();
  const bool odd = w.group.family == GroupFamily::OddOrthogonal;
  const Box distinguished{odd ? n - 1 : n - 2, 0};
  // The star condition failed, so l(n-1) = |ln| and the block of column
  // n-1 is the one whose interior edges are short.
  const int pinch_block = d.blocks().block_of(n - 1);
  const bool applicable = distinguished.j >= 1 && d.is_box(distinguished) &&
                          d.blocks().block_of(distinguished.j) == pinch_block;
  out["applicable"] = applicable;
  if (applicable) {
    out["box"] = Json::array({distinguished.j, distinguished.k});
    RatVec obj = RatVec::Zero(d.size());
    obj(d.basis_index(distinguished)) = 1;
    const Rational hi = lp_optimize(p, obj, true).value;
    const Rational lo = lp_optimize(p, obj, false).value;
    out["lp_max"] = rational_str(hi);
    out["lp_min"] = rational_str(lo);
    Rational ln = w.at(n);
    if (ln < 0) ln = -ln;
    out["pass"] = (hi == ln && lo == 0);
  } else {
    Rational min_len;
    bool first = true;
    for (const auto& e : edges(d)) {
      if (first || e.length < min_len) min_len = e.length;
      first = false;
    }
    const Rational r = r_of(w);
    out["note"] = "no pinched coordinate exists; every edge already has length >= r";
    out["min_edge_length"] = rational_str(min_len);
    out["r"] = rational_str(r);
    out["pass"] = (min_len >= r);
  }
  return out;
}

}  // namespace

Json run_verify(const JobSpec& job) {
  const Weight w = weight_from_job(job);
  Json rep = base_report(job, w);
  const Polytope p = hrep(w);
  const Diagram& d = p.diagram();
  const RatVec V = vertex_V(d);
  const LowerBound lb = lower_bound(w);
  rep["r"] = rational_str(r_of(w));
  rep["r_prime"] = rational_str(lb.r_prime);
  rep["condition_star"] = lb.star;

  bool all_pass = true;
  Json checks;

  {
    Json edges_out;
    const auto es = edges(d);
    bool all_ok = true;
    Json lengths = Json::array();
    Json failures = Json::array();
    for (const auto& e : es) {
      const EdgeCheck chk = verify_edge(p, e, V);
      lengths.push_back(rational_str(e.length));
      if (!chk.ok) {
        all_ok = false;
        failures.push_back(Json{{"box", Json::array({e.box.j, e.box.k})},
                                {"detail", chk.detail}});
      }
    }
    edges_out["count"] = static_cast<int>(es.size());
    edges_out["lengths"] = std::move(lengths);
    edges_out["all_verified"] = all_ok;
    if (!failures.empty()) edges_out["failures"] = std::move(failures);
    checks["edges"] = std::move(edges_out);
    all_pass = all_pass && all_ok;
  }

  {
    const bool ok = verify_vertex(p, V);
    checks["vertex"] = Json{{"active_rank_full", ok}, {"pass", ok}};
    all_pass = all_pass && ok;
  }

  {
    const SampleReport mc = montecarlo_membership(p, job.options.samples,
                                                  job.options.tolerance, job.options.seed);
    checks["montecarlo"] = sample_report_json(mc);
    all_pass = all_pass && mc.pass;
  }

  if (w.group.is_orthogonal() && !lb.star) {
    Json pinch = pinch_check(d, p);
    all_pass = all_pass && pinch["pass"].get<bool>();
    checks["hyperplane_pinch"] = std::move(pinch);
  }

  if (job.options.psi) {
    const int N = *job.options.psi;
    const double dev = psi_symplectic_max_deviation(N, job.options.samples, job.options.seed);
    const bool ok = dev < tol::kJacobian;
    checks["psi"] = Json{{"N", N},
                         {"points", job.options.samples},
                         {"max_deviation", dev},
                         {"tolerance", tol::kJacobian},
                         {"pass", ok}};
    all_pass = all_pass && ok;
  }

  rep["checks"] = std::move(checks);
  rep["pass"] = all_pass;
  return rep;
}

JobResult dispatch_job(const JobSpec& job) {
  JobResult res;
  try {
    if (job.command == "bound") {
      res.report = run_bound(job);
    } else if (job.command == "certificate") {
      res.report = run_certificate(job);
    } else if (job.command == "verify") {
      res.report = run_verify(job);
      if (!res.report["pass"].get<bool>()) res.status = kExitVerifyFailed;
    } else {
      throw InvalidWeightError("unknown command '" + job.command + "'");
    }
  } catch (const PointOrbitError& e) {
    res.report = Json{{"command", job.command}, {"error", e.what()}};
    res.status = kExitPointOrbit;
  } catch (const ConstructionError& e) {
    res.report = Json{{"command", job.command}, {"error", e.what()}};
    res.status = kExitInternal;
  } catch (const std::invalid_argument& e) {  // InvalidWeight, WrongFamily, parse
    res.report = Json{{"command", job.command}, {"error", e.what()}};
    res.status = kExitBadInput;
  } catch (const std::exception& e) {
    res.report = Json{{"command", job.command}, {"error", e.what()}};
    res.status = kExitInternal;
  }
  res.report["exit_status"] = res.status;
  return res;
}

JobSpec job_from_json_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const std::exception& e) {
    throw InvalidWeightError(std::string("bad job JSON: ") + e.what());
  }
  JobSpec job;
  try {
    job.group = j.at("group").get<std::string>();
    job.n = j.at("n").get<int>();
    for (const auto& item : j.at("lambda")) {
      if (item.is_string())
        job.lambda.push_back(item.get<std::string>());
      else
        job.lambda.push_back(std::to_string(item.get<std::int64_t>()));
    }
    job.command = j.at("command").get<std::string>();
    job.options.seed = default_seed();
    if (j.contains("options")) {
      const Json& o = j["options"];
      if (o.contains("samples")) job.options.samples = o["samples"].get<int>();
      if (o.contains("tol")) job.options.tolerance = o["tol"].get<double>();
      if (o.contains("seed")) job.options.seed = o["seed"].get<std::uint64_t>();
      if (o.contains("psi")) job.options.psi = o["psi"].get<int>();
      if (o.contains("emit_hrep")) job.options.emit_hrep = o["emit_hrep"].get<std::string>();
    }
  } catch (const Json::exception& e) {
    throw InvalidWeightError(std::string("bad job JSON: ") + e.what());
  }
  return job;
}

int run_batch(std::istream& in, std::ostream& out, int jobs) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  std::vector<JobResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      try {
        results[i] = dispatch_job(job_from_json_line(lines[i]));
      } catch (const std::exception& e) {
        results[i].report = Json{{"error", e.what()}, {"exit_status", kExitBadInput}};
        results[i].status = kExitBadInput;
      }
    }
  };
  const int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all_ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << results[i].report.dump() << "\n";
    if (results[i].status != kExitOk) all_ok = false;
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace gtwidth

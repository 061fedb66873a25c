// Command-line front end: constructions, robustness/spark verdicts, P0 and
// basis-pursuit recovery, sparsity bounds, DCT sparsification, and the
// consolidated claim verification run.
//
// Exit codes: 0 success, 1 usage error, 2 numerical hard error,
// 3 enumeration budget refusal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "csense/harness.hpp"

namespace fs = std::filesystem;
using namespace csense;

namespace {

struct GlobalOpts {
  std::string precision = "double";
  std::uint64_t seed = 20240817;
  std::string out_dir;
  bool force_budget = false;
};

void emit(const GlobalOpts& g, const std::string& name, const json& payload) {
  std::cout << payload.dump(2) << "\n";
  if (!g.out_dir.empty()) {
    fs::create_directories(g.out_dir);
    std::ofstream out(fs::path(g.out_dir) / (name + ".json"));
    out << payload.dump(2) << "\n";
  }
}

json report_to_json(const RobustnessReport& r) {
  json j;
  j["matrix_id"] = r.matrix_id;
  j["n_rows"] = r.n_rows;
  j["n_cols"] = r.n_cols;
  j["verdict"] = r.robust ? "robust" : "not_robust";
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["subsets_checked"] = r.subsets_checked;
  j["min_singular_value_seen"] = r.min_singular_value_seen;
  j["arithmetic"] = to_string(r.arithmetic);
  return j;
}

json spark_to_json(const SparkResult& s) {
  json j;
  j["spark"] = s.spark;
  j["full"] = s.full;
  if (s.witness) {
    j["witness"] = *s.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["subsets_checked"] = s.subsets_checked;
  j["arithmetic"] = to_string(s.arithmetic);
  return j;
}

ArithMode mode_from_string(const std::string& s) {
  if (s == "floating") return ArithMode::floating;
  if (s == "exact") return ArithMode::exact;
  if (s == "both") return ArithMode::both;
  throw usage_error("mode must be floating, exact or both");
}

/// Builds the requested frame plus (when N <= 13) its exact companion.
struct FrameBundle {
  FrequencySet omega;
  ComplexMatrix<double> matrix;   // phi promoted to complex storage
  CycloMatrix exact;
  bool exact_available = false;
};

FrameBundle make_frame(int n_modulus, const std::string& frame) {
  FrameBundle b;
  b.omega = make_symmetric_omega(n_modulus);
  const auto psi = partial_fourier<double>(n_modulus, b.omega);
  if (frame == "psi") {
    b.matrix = psi;
    if (n_modulus <= kMaxExactModulus) {
      b.exact = exact_partial_fourier(n_modulus, b.omega);
      b.exact_available = true;
    }
  } else if (frame == "phi") {
    const RealMatrix<double> phi = realify(psi, realifier_q<double>(n_modulus));
    b.matrix = phi.cast<std::complex<double>>();
    if (n_modulus <= kMaxExactModulus) {
      b.exact = exact_realified(n_modulus, b.omega);
      b.exact_available = true;
    }
  } else {
    throw usage_error("frame must be psi or phi");
  }
  return b;
}

SparseSignal load_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open signal file " + path);
  return read_signal_csv(in);
}

int run(int argc, char** argv) {
  CLI::App app{"verification toolkit for partial Fourier frames and sparse recovery"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--precision", g.precision, "arithmetic precision")
      ->check(CLI::IsMember({"double", "extended"}));
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_flag("--force-budget", g.force_budget, "override the enumeration budget guard");

  // omega
  auto* omega_cmd = app.add_subcommand("omega", "build a frequency index set");
  int omega_n = 5;
  int omega_m = 0;
  bool omega_random = false;
  omega_cmd->add_option("--N", omega_n, "modulus (prime)")->required();
  omega_cmd->add_flag("--random", omega_random, "uniform random subset instead of symmetric");
  omega_cmd->add_option("-m", omega_m, "subset size for --random");

  // frame
  auto* frame_cmd = app.add_subcommand("frame", "build Psi or Phi and report its structure");
  int frame_n = 5;
  std::string frame_kind = "psi";
  frame_cmd->add_option("--N", frame_n, "modulus (prime)")->required();
  frame_cmd->add_option("--frame", frame_kind, "psi or phi")
      ->check(CLI::IsMember({"psi", "phi"}));

  // robustness / spark
  auto* robust_cmd = app.add_subcommand("robustness", "maximal robustness verdict");
  auto* spark_cmd = app.add_subcommand("spark", "smallest dependent column subset");
  int rob_n = 5;
  std::string rob_frame = "phi";
  std::string rob_mode = "both";
  for (auto* cmd : {robust_cmd, spark_cmd}) {
    cmd->add_option("--N", rob_n, "modulus (prime)")->required();
    cmd->add_option("--frame", rob_frame, "psi or phi")
        ->check(CLI::IsMember({"psi", "phi"}));
    cmd->add_option("--mode", rob_mode, "floating, exact or both")
        ->check(CLI::IsMember({"floating", "exact", "both"}));
  }

  // p0 / bp
  auto* p0_cmd = app.add_subcommand("p0", "brute-force sparsest recovery");
  auto* bp_cmd = app.add_subcommand("bp", "l1 basis pursuit recovery");
  int rec_n = 5;
  std::string rec_frame = "psi";
  std::string rec_signal;
  int rec_smax = -1;
  for (auto* cmd : {p0_cmd, bp_cmd}) {
    cmd->add_option("--N", rec_n, "modulus (prime)")->required();
    cmd->add_option("--frame", rec_frame, "psi or phi")
        ->check(CLI::IsMember({"psi", "phi"}));
    cmd->add_option("--signal", rec_signal, "sparse signal CSV (index,real,imag)")
        ->required();
  }
  p0_cmd->add_option("--s-max", rec_smax, "largest support size to enumerate");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "sparsity budget of the m >= C mu^2 S ln n bound");
  BoundQuery bound_q;
  bound_cmd->add_option("--n", bound_q.n, "signal length")->required();
  bound_cmd->add_option("--m", bound_q.m, "measurement count")->required();
  bound_cmd->add_option("--mu", bound_q.mu, "coherence");
  bound_cmd->add_option("--c", bound_q.c_const, "constant C");

  // sparsify
  auto* sparsify_cmd = app.add_subcommand("sparsify", "DCT coefficient thresholding demo");
  double keep_fraction = 0.002;
  int sp_length = 4096;
  std::string sp_input;
  sparsify_cmd->add_option("--keep", keep_fraction, "fraction of coefficients kept");
  sparsify_cmd->add_option("--length", sp_length, "synthetic signal length");
  sparsify_cmd->add_option("--input", sp_input, "dense signal file, one value per line");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the claim verification suite");
  std::string spec_path;
  verify_cmd->add_option("--spec", spec_path, "run a single experiment from a TOML spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (omega_cmd->parsed()) {
    const FrequencySet omega = omega_random ? make_random_omega(omega_n, omega_m, g.seed)
                                            : make_symmetric_omega(omega_n);
    json j;
    j["N"] = omega.modulus;
    j["indices"] = omega.indices;
    j["size"] = omega.size();
    j["symmetric"] = omega.is_symmetric();
    emit(g, "omega", j);
  } else if (frame_cmd->parsed()) {
    const auto b = make_frame(frame_n, frame_kind);
    json j;
    j["N"] = frame_n;
    j["frame"] = frame_kind;
    j["n_rows"] = static_cast<int>(b.matrix.rows());
    j["n_cols"] = static_cast<int>(b.matrix.cols());
    j["rank"] = numeric_rank(b.matrix);
    emit(g, "frame", j);
    if (!g.out_dir.empty()) {
      fs::create_directories(g.out_dir);
      std::ofstream csv(fs::path(g.out_dir) / (frame_kind + ".csv"));
      csv.precision(17);
      for (Eigen::Index r = 0; r < b.matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < b.matrix.cols(); ++c) {
          if (c) csv << ",";
          csv << b.matrix(r, c).real();
          if (frame_kind == "psi") csv << "+" << b.matrix(r, c).imag() << "j";
        }
        csv << "\n";
      }
    }
  } else if (robust_cmd->parsed() || spark_cmd->parsed()) {
    const auto mode = mode_from_string(rob_mode);
    const auto b = make_frame(rob_n, rob_frame);
    if (mode != ArithMode::floating && !b.exact_available) {
      throw usage_error("exact oracle unavailable for N > 13; use --mode floating");
    }
    const CycloMatrix* exact = b.exact_available ? &b.exact : nullptr;
    if (robust_cmd->parsed()) {
      const auto rep = maximal_robustness(b.matrix, mode, exact, g.force_budget,
                                          rob_frame + "_" + std::to_string(rob_n));
      emit(g, "robustness", report_to_json(rep));
    } else {
      emit(g, "spark", spark_to_json(spark(b.matrix, mode, exact, g.force_budget)));
    }
  } else if (p0_cmd->parsed()) {
    const auto b = make_frame(rec_n, rec_frame);
    const SparseSignal f = load_signal(rec_signal);
    const ComplexVector<double> y = b.matrix * f.to_dense();
    const int s_max = rec_smax >= 0 ? rec_smax : f.l0_norm();
    const auto r = p0_solve(b.matrix, y, s_max);
    json j;
    j["feasible"] = r.feasible;
    j["sparsity_found"] = r.sparsity_found;
    j["supports_enumerated"] = r.supports_enumerated;
    j["residual_l2"] = r.residual_l2;
    j["solution_overflow"] = r.solution_overflow;
    j["solutions"] = json::array();
    for (const auto& sol : r.solutions) {
      json s;
      s["support"] = sol.support;
      json vals = json::array();
      for (const auto& v : sol.values) vals.push_back({v.real(), v.imag()});
      s["values"] = vals;
      j["solutions"].push_back(std::move(s));
    }
    const auto uniq = uniqueness_check(b.matrix, f);
    j["uniqueness"] = to_string(uniq.verdict);
    emit(g, "p0", j);
  } else if (bp_cmd->parsed()) {
    const auto b = make_frame(rec_n, rec_frame);
    const SparseSignal f = load_signal(rec_signal);
    const ComplexVector<double> y = b.matrix * f.to_dense();
    const auto r = basis_pursuit(b.matrix, y);
    json j;
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["residual_l2"] = r.residual_l2;
    j["error_vs_input_l2"] = (r.solution - f.to_dense()).norm();
    j["l1_norm"] = r.solution.lpNorm<1>();
    j["input_l1_norm"] = f.l1_norm();
    emit(g, "bp", j);
  } else if (bound_cmd->parsed()) {
    const auto budget = max_sparsity(bound_q);
    json j;
    j["n"] = bound_q.n;
    j["m"] = bound_q.m;
    j["mu"] = bound_q.mu;
    j["C"] = bound_q.c_const;
    j["S"] = budget.s_real;
    j["S_floor"] = budget.s_floor;
    emit(g, "bound", j);
  } else if (sparsify_cmd->parsed()) {
    std::vector<double> x;
    if (sp_input.empty()) {
      x = synthetic_signal(sp_length);
    } else {
      std::ifstream in(sp_input);
      if (!in) throw usage_error("cannot open input file " + sp_input);
      double v;
      while (in >> v) x.push_back(v);
      if (x.empty()) throw usage_error("input signal is empty");
    }
    const auto r = sparsify(x, keep_fraction);
    json j;
    j["length"] = static_cast<int>(x.size());
    j["keep_fraction"] = keep_fraction;
    j["kept"] = r.kept;
    if (std::isinf(r.psnr_db)) {
      j["psnr_db"] = "inf";
    } else {
      j["psnr_db"] = r.psnr_db;
    }
    emit(g, "sparsify", j);
    if (!g.out_dir.empty()) {
      std::ofstream csv(fs::path(g.out_dir) / "sparsify.csv");
      csv.precision(17);
      csv << "original,reconstruction\n";
      for (std::size_t i = 0; i < x.size(); ++i) {
        csv << x[i] << "," << r.reconstruction[i] << "\n";
      }
    }
  } else if (verify_cmd->parsed()) {
    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      if (!in) throw usage_error("cannot open spec file " + spec_path);
      std::stringstream buf;
      buf << in.rdbuf();
      auto spec = ExperimentSpec::from_toml(toml::parse(buf.str()));
      if (g.force_budget) spec.force_budget = true;
      const auto report = run_experiment(spec);
      std::cout << report.full().dump(2) << "\n";
    } else {
      VerifyOptions opts;
      opts.seed = g.seed;
      opts.precision = g.precision;
      opts.output_dir = g.out_dir;
      opts.force_budget = g.force_budget;
      const auto report = verify_all(opts);
      for (const auto& claim : report.body["claims"]) {
        std::cout << claim["claim_id"].get<std::string>() << ": "
                  << claim["verdict"].get<std::string>() << "\n";
      }
      if (g.out_dir.empty()) {
        std::cout << report.full().dump(2) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 3;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
}

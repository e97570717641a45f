// Batch front end: synthesizes generator Hamiltonians for finite
// photon-number superpositions and reports their physical-realization
// requirements, with deterministic CSV/JSON output.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "qse/fock.hpp"
#include "qse/generator.hpp"
#include "qse/interpolation.hpp"
#include "qse/io.hpp"
#include "qse/physical_map.hpp"
#include "qse/state_families.hpp"

namespace {

// Writes to --out when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::string target_path;
  std::string out_path;
  int M = 1;
  int dim = -1;
  int steps = 64;
  int k = 1;
  double p = 0.5;
  double pump = 1.0;
  double t_max = 1.0;
  double eta = 0.1;
};

int default_dim(const qse::TargetState& t) { return 2 * t.M + 8; }

void run_coeffs(const Options& opt) {
  OutputSink sink(opt.out_path);
  qse::write_coeffs_csv(qse::solve_vandermonde(opt.M), sink.stream());
}

void run_synthesize(const Options& opt) {
  const qse::TargetState target = qse::read_target_file(opt.target_path);
  const int dim = opt.dim > 0 ? opt.dim : default_dim(target);
  const qse::FockOperator h = qse::build_generator(target, dim);
  OutputSink sink(opt.out_path);
  qse::write_matrix_csv(h.entries, sink.stream());
}

void run_evolve(const Options& opt) {
  const qse::TargetState target = qse::read_target_file(opt.target_path);
  const int dim = opt.dim > 0 ? opt.dim : default_dim(target);
  const qse::FidelityTrace trace =
      qse::fidelity_trace(target, dim, opt.t_max, opt.steps);
  OutputSink sink(opt.out_path);
  qse::write_fidelity_csv(trace, sink.stream());
}

void run_binomial(const Options& opt) {
  const qse::TargetState target = qse::binomial_target({opt.p, opt.M});
  OutputSink sink(opt.out_path);
  qse::write_target_json(target, sink.stream());
}

void run_normal_form(const Options& opt) {
  const qse::TargetState target = qse::read_target_file(opt.target_path);
  const qse::NormalForm nf = qse::normal_form_of_generator(target);
  OutputSink sink(opt.out_path);
  qse::write_normal_form_csv(nf, sink.stream());
}

void run_susceptibility(const Options& opt) {
  const qse::SusceptibilityReport r =
      qse::susceptibility_requirements(opt.p, opt.pump);
  OutputSink sink(opt.out_path);
  auto& out = sink.stream();
  out << "quantity,value\n";
  out << "p," << qse::format_real(r.p) << '\n';
  out << "pump_amplitude," << qse::format_real(r.pump_amplitude) << '\n';
  out << "chi3_xxyy_required," << qse::format_real(r.chi3_xxyy_required) << '\n';
  out << "chi3_xxxy_required," << qse::format_real(r.chi3_xxxy_required) << '\n';
  out << "chi3_xxxx_required," << qse::format_real(r.chi3_xxxx_required) << '\n';
  out << "linear_combo_xy_required," << qse::format_real(r.linear_combo_xy_required)
      << '\n';
  out << "linear_combo_xx_required," << qse::format_real(r.linear_combo_xx_required)
      << '\n';
}

void run_ion_compare(const Options& opt) {
  qse::IonSpec spec;
  spec.eta = opt.eta;
  spec.k = opt.k;
  spec.dim = opt.dim > 0 ? opt.dim : 12;
  const qse::IonGeneratorComparison cmp = qse::compare_ion_generator(spec);
  OutputSink sink(opt.out_path);
  auto& out = sink.stream();
  out << "quantity,value\n";
  out << "frobenius_distance," << qse::format_real(cmp.frobenius_distance) << '\n';
  out << "eta_match_required," << qse::format_real(cmp.eta_match_required) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generator-Hamiltonian synthesis for photon-number superpositions"};
  app.require_subcommand(1);

  Options opt;

  auto* coeffs = app.add_subcommand(
      "coeffs", "interpolation coefficients A_l as exact fractions");
  coeffs->add_option("--M", opt.M, "polynomial degree")->required();
  coeffs->add_option("--out", opt.out_path, "output file (default stdout)");
  coeffs->callback([&] { run_coeffs(opt); });

  auto* synthesize = app.add_subcommand(
      "synthesize", "build the generator Hamiltonian for a target file");
  synthesize->add_option("--target", opt.target_path, "target JSON file")->required();
  synthesize->add_option("--dim", opt.dim, "truncation dimension (default 2M+8)");
  synthesize->add_option("--out", opt.out_path, "output file (default stdout)");
  synthesize->callback([&] { run_synthesize(opt); });

  auto* evolve = app.add_subcommand(
      "evolve", "fidelity |<Psi|e^{-iHt}|0>|^2 on a uniform time grid");
  evolve->add_option("--target", opt.target_path, "target JSON file")->required();
  evolve->add_option("--t-max", opt.t_max, "end of the time grid")->required();
  evolve->add_option("--steps", opt.steps, "number of grid points")->required();
  evolve->add_option("--dim", opt.dim, "truncation dimension (default 2M+8)");
  evolve->add_option("--out", opt.out_path, "output file (default stdout)");
  evolve->callback([&] { run_evolve(opt); });

  auto* binomial = app.add_subcommand(
      "binomial", "write a binomial target state document");
  binomial->add_option("--p", opt.p, "single-photon emission probability")->required();
  binomial->add_option("--M", opt.M, "maximum photon number")->required();
  binomial->add_option("--out", opt.out_path, "output file (default stdout)");
  binomial->callback([&] { run_binomial(opt); });

  auto* normal_form = app.add_subcommand(
      "normal-form", "normal-ordered monomial expansion of the generator");
  normal_form->add_option("--target", opt.target_path, "target JSON file")->required();
  normal_form->add_option("--out", opt.out_path, "output file (default stdout)");
  normal_form->callback([&] { run_normal_form(opt); });

  auto* susceptibility = app.add_subcommand(
      "susceptibility", "medium requirements for the vacuum/one-photon target");
  susceptibility->add_option("--p", opt.p, "one-photon probability")->required();
  susceptibility->add_option("--pump", opt.pump, "classical pump amplitude")->required();
  susceptibility->add_option("--out", opt.out_path, "output file (default stdout)");
  susceptibility->callback([&] { run_susceptibility(opt); });

  auto* ion_compare = app.add_subcommand(
      "ion-compare", "distance between the trapped-ion Hamiltonian and the "
                     "pure one-photon generator");
  ion_compare->add_option("--eta", opt.eta, "Lamb-Dicke parameter")->required();
  ion_compare->add_option("--k", opt.k, "detuning index (must be 1)");
  ion_compare->add_option("--dim", opt.dim, "truncation dimension")->required();
  ion_compare->add_option("--out", opt.out_path, "output file (default stdout)");
  ion_compare->callback([&] { run_ion_compare(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const qse::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "qherglotz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "qherglotz/io.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/moments.hpp"
#include "qherglotz/random.hpp"
#include "qherglotz/realize.hpp"
#include "qherglotz/slicefn.hpp"

namespace qherglotz::cli {

using nlohmann::json;

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_value(const json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number() || v.is_boolean()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number() || e.is_boolean(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + format_value(e);
    return s;
  }
  return v.dump();
}

}  // namespace

json RunReport::to_json() const {
  return {{"subcommand", subcommand},
          {"inputs_digest", inputs_digest},
          {"results", results},
          {"violations", violations},
          {"exit_status", exit_status}};
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "subcommand: " << subcommand << "\n";
  out << "inputs_digest: " << inputs_digest << "\n";
  for (const auto& [key, value] : results.items()) out << key << ": " << format_value(value) << "\n";
  for (const auto& v : violations) out << "violation: " << v << "\n";
  out << "exit_status: " << exit_status << "\n";
  return out.str();
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  bool json = false;
  std::string out;
};

// Accumulates every input that determines a run.
class Digest {
 public:
  explicit Digest(std::string_view subcommand) { add(subcommand); }
  void add(std::string_view bytes) {
    h_ = fnv1a(bytes, h_);
    h_ = fnv1a(std::string_view("\x1f", 1), h_);
  }
  std::string hex() const { return hex_digest(h_); }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string load_input(Digest& digest, const std::string& path) {
  std::string text = io::read_file(path);
  digest.add(text);
  return text;
}

json sequence_values(const HermitianSequence& seq) { return io::to_json(seq); }

void maybe_write(const Globals& g, const json& doc, RunReport& report) {
  if (g.out.empty()) return;
  io::write_file(g.out, doc.dump(2) + "\n");
  report.results["written"] = g.out;
}

Quaternion random_point(Rng& rng, double radius) {
  Quaternion g = random_quaternion(rng);
  while (g.abs() < 1e-12) g = random_quaternion(rng);
  return (radius * std::pow(rng.uniform(), 0.25) / g.abs()) * g;
}

struct Command {
  std::string file;
  long n = 0;
  long samples = 100;
  long m = 60;
  double radius = 0.5;
  std::optional<double> bound;
};

std::size_t nonnegative(long v, const char* name) {
  if (v < 0) throw io::InputError(std::string(name) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

void cmd_check_pd(const Command& c, const Globals& g, RunReport& report, Digest& digest) {
  const auto seq = io::sequence_from_json(io::parse_document(load_input(digest, c.file), c.file));
  const std::size_t n = nonnegative(c.n, "N");
  const PdVerdict v = is_positive_definite(seq, n, g.tol.value_or(kPdTol));
  report.results["N"] = n;
  report.results["min_eig"] = v.min_eig;
  report.results["positive_definite"] = v.ok;
  if (!v.ok) {
    report.violations.push_back("T_" + std::to_string(n) + " has eigenvalue " + format_number(v.min_eig));
    report.exit_status = kNegativeVerdict;
  }
}

void cmd_neg_squares(const Command& c, const Globals&, RunReport& report, Digest& digest) {
  const auto seq = io::sequence_from_json(io::parse_document(load_input(digest, c.file), c.file));
  const NegativeSquares ns = negative_squares(seq, nonnegative(c.n, "N_max"));
  report.results["kappa"] = ns.kappa;
  report.results["profile"] = ns.profile;
  report.results["stabilized"] = ns.stabilized;
}

void cmd_extend(const Command& c, const Globals& g, RunReport& report, Digest& digest) {
  const auto seq = io::sequence_from_json(io::parse_document(load_input(digest, c.file), c.file));
  const HermitianSequence ext = caratheodory_extend(seq, nonnegative(c.n, "M"));
  const PdVerdict v = is_positive_definite(ext, ext.support(), kExtensionTol);
  report.results["N"] = ext.support();
  report.results["min_eig"] = v.min_eig;
  if (!v.ok) {
    report.violations.push_back("extended Toeplitz matrix has eigenvalue " + format_number(v.min_eig));
    report.exit_status = kNegativeVerdict;
    return;
  }
  report.results["sequence"] = sequence_values(ext);
  maybe_write(g, io::to_json(ext), report);
}

void list_violations(const std::vector<MeasureViolation>& vs, const std::string& prefix, RunReport& report) {
  for (const auto& v : vs)
    report.violations.push_back(prefix + to_string(v.kind) + " at t=" + format_number(v.t) + ": " + v.detail);
}

void cmd_synth(const Command& c, const Globals& g, RunReport& report, Digest& digest) {
  const auto nu = io::measure_from_json(io::parse_document(load_input(digest, c.file), c.file));
  const auto vs = validate_q_positive(nu);
  if (!vs.empty()) {
    list_violations(vs, "", report);
    report.exit_status = kNegativeVerdict;
    return;
  }
  const HermitianSequence seq = synthesize_sequence(nu, nonnegative(c.n, "n_max"));
  report.results["card_supp"] = card_supp(nu);
  report.results["total_mass_bound"] = total_mass_bound(nu);
  report.results["sequence"] = sequence_values(seq);
  maybe_write(g, io::to_json(seq), report);
}

void cmd_synth_indef(const Command& c, const Globals& g, RunReport& report, Digest& digest) {
  const auto pair = io::pair_from_json(io::parse_document(load_input(digest, c.file), c.file));
  const auto vp = validate_q_positive(pair.plus);
  const auto vm = validate_q_positive(pair.minus);
  if (!vp.empty() || !vm.empty()) {
    list_violations(vp, "plus: ", report);
    list_violations(vm, "minus: ", report);
    report.exit_status = kNegativeVerdict;
    return;
  }
  const HermitianSequence seq = synthesize_indefinite_sequence(pair, nonnegative(c.n, "n_max"));
  report.results["card_supp_minus"] = card_supp(pair.minus);
  report.results["sequence"] = sequence_values(seq);
  maybe_write(g, io::to_json(seq), report);
}

void cmd_realize_check(const Command& c, const Globals&, RunReport& report, Digest& digest) {
  const auto r = io::realization_from_json(io::parse_document(load_input(digest, c.file), c.file));
  const NegativeSquaresBound b = verify_negative_squares_bound(r, nonnegative(c.n, "N_max"));
  report.results["J_kappa"] = r.J.kappa();
  report.results["kappa_seq"] = b.kappa_seq;
  report.results["profile"] = b.profile.profile;
  report.results["bound_holds"] = b.ok;
  report.results["sequence"] = sequence_values(moment_sequence(r, nonnegative(c.n, "N_max")));
  if (!b.ok) {
    report.violations.push_back("kappa_seq exceeds the number of negative signature entries");
    report.exit_status = kNegativeVerdict;
  }
}

void cmd_kernel_check(const Command& c, const Globals& g, RunReport& report, Digest& digest) {
  const auto seq = io::sequence_from_json(io::parse_document(load_input(digest, c.file), c.file));
  if (!(c.radius >= 0.0 && c.radius < 1.0)) throw OutOfDomain("sample radius must lie in [0, 1)");
  const CaratheodoryFunction phi(seq, c.bound);
  const std::size_t m = nonnegative(c.m, "M");
  const std::size_t samples = nonnegative(c.samples, "samples");
  const double threshold = g.tol.value_or(1e-8);
  Rng rng(g.seed);
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Quaternion p = random_point(rng, c.radius);
    const Quaternion q = random_point(rng, c.radius);
    worst = std::max(worst, kernel_identity_residual(phi, p, q, m));
  }
  report.results["samples"] = samples;
  report.results["M"] = m;
  report.results["coeff_bound"] = phi.coeff_bound();
  report.results["max_residual"] = worst;
  report.results["threshold"] = threshold;
  if (!(worst <= threshold)) {
    report.violations.push_back("kernel identity residual " + format_number(worst) + " exceeds " +
                                format_number(threshold));
    report.exit_status = kNegativeVerdict;
  }
}

int exit_for(const std::exception& e) {
  if (dynamic_cast<const NotPD*>(&e) || dynamic_cast<const CompletionFailure*>(&e) ||
      dynamic_cast<const NotQPositive*>(&e) || dynamic_cast<const NotJUnitary*>(&e))
    return kNegativeVerdict;
  return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic Toeplitz, measure and realization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized checks");
  double tol = 0.0;
  auto* tol_opt = app.add_option("--tol", tol, "override the command's tolerance");
  app.add_flag("--json", g.json, "print the report as JSON");
  app.add_option("--out", g.out, "write the produced sequence to this file");

  Command c;
  using Handler = std::function<void(const Command&, const Globals&, RunReport&, Digest&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto add = [&](const char* name, const char* help, const char* count_name, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", c.file, "input file")->required();
    sub->add_option(count_name, c.n)->required();
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };
  add("check-pd", "test T_N >= 0", "N", cmd_check_pd);
  add("neg-squares", "negative eigenvalue profile of T_0..T_Nmax", "N_max", cmd_neg_squares);
  add("extend", "Caratheodory extension by M moments", "M", cmd_extend);
  add("synth", "moments of a q-positive measure", "n_max", cmd_synth);
  add("synth-indef", "moments of nu_+ - nu_-", "n_max", cmd_synth_indef);
  add("realize-check", "moments and negative squares of a realization", "N_max", cmd_realize_check);

  CLI::App* kernel = app.add_subcommand("kernel-check", "sampled Caratheodory kernel identity");
  kernel->add_option("file", c.file, "sequence file")->required();
  kernel->add_option("samples", c.samples)->required();
  kernel->add_option("M", c.m)->required();
  kernel->add_option("--radius", c.radius, "sample |p|, |q| up to this radius");
  kernel->add_option("--bound", c.bound, "bound on ||r(n)|| beyond the file");
  handlers.emplace_back(kernel, cmd_kernel_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (*tol_opt) g.tol = tol;

  RunReport report;
  Digest digest("");
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    report.subcommand = sub->get_name();
    digest = Digest(report.subcommand);
    std::ostringstream params;
    params << c.n << ' ' << c.samples << ' ' << c.m << ' ' << format_number(c.radius) << ' '
           << (c.bound ? format_number(*c.bound) : "-") << ' ' << g.seed << ' '
           << (g.tol ? format_number(*g.tol) : "-");
    digest.add(params.str());
    try {
      handler(c, g, report, digest);
    } catch (const std::exception& e) {
      report.violations.push_back(e.what());
      report.exit_status = exit_for(e);
      if (report.exit_status == kInputError) err << "error: " << e.what() << "\n";
    }
    break;
  }
  report.inputs_digest = digest.hex();
  if (g.json)
    out << report.to_json().dump(2) << "\n";
  else
    out << report.to_text();
  return report.exit_status;
}

}  // namespace qherglotz::cli

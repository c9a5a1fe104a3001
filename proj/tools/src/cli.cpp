#include "qpoisson/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qpoisson/catalog.hpp"
#include "qpoisson/double_algebra.hpp"
#include "qpoisson/homogeneous.hpp"
#include "qpoisson/sampling.hpp"
#include "qpoisson/serialization.hpp"
#include "qpoisson/twisting.hpp"

namespace qpoisson::cli {

namespace {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 16;
  std::string json_out;
  bool quiet = false;
};

struct Input {
  std::string path;
  std::string text;
};

constexpr std::string_view kCatalogPrefix = "catalog:";

Input read_input(const std::string& path) {
  if (path.starts_with(kCatalogPrefix)) {
    try {
      return {path, dump(catalog_entry_to_json(builtin(path.substr(kCatalogPrefix.size()))))};
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {path, buf.str()};
}

Json input_record(const Input& in) { return {{"path", in.path}, {"sha256", sha256_hex(in.text)}}; }

Vec random_member(Sampler& s, const Subspace& l) {
  Vec v = zero_vector(l.ambient());
  for (const auto& b : l.basis()) v = add(v, scale(s.rational(), b));
  return v;
}

QuasiBialgebra load_algebra(const Input& in) { return quasi_bialgebra_from_json(parse_json(in.text)); }

// Randomized spot checks of the double on random elements (the basis checks are exhaustive;
// these exercise the bilinear extension).
Json sample_double(const DoubleAlgebra& d, const Options& opt, bool& ok) {
  Sampler s(opt.seed);
  std::size_t jacobi = 0, invariance = 0;
  for (std::size_t t = 0; t < opt.samples; ++t) {
    const Vec x = s.vector(d.dim()), y = s.vector(d.dim()), z = s.vector(d.dim());
    const Vec cyc = add(add(d.bracket(d.bracket(x, y), z), d.bracket(d.bracket(y, z), x)), d.bracket(d.bracket(z, x), y));
    if (!is_zero(cyc)) ++jacobi;
    if (!(q_form(d, d.bracket(x, y), z) + q_form(d, y, d.bracket(x, z))).is_zero()) ++invariance;
  }
  ok = jacobi == 0 && invariance == 0;
  return {{"samples", opt.samples}, {"jacobi_failures", jacobi}, {"invariance_failures", invariance}};
}

int cmd_validate(const std::string& file, const Options&, Json& report) {
  const Input in = read_input(file);
  report["inputs"] = Json::array({input_record(in)});
  const AxiomReport ax = check_axioms(load_algebra(in));
  report["axioms"] = axiom_report_to_json(ax);
  report["pass"] = ax.pass();
  return ax.pass() ? kPass : kFail;
}

int cmd_double(const std::string& file, const Options& opt, Json& report) {
  const Input in = read_input(file);
  report["inputs"] = Json::array({input_record(in)});
  const QuasiBialgebra qb = load_algebra(in);
  const DoubleAlgebra d = build_double(qb);
  const DoubleAxiomReport ax = check_double_axioms(d);
  bool sampled_ok = true;
  report["double"] = double_to_json(d);
  report["double_axioms"] = double_axiom_report_to_json(ax);
  report["source_axioms"] = axiom_report_to_json(check_axioms(qb));
  report["randomized"] = sample_double(d, opt, sampled_ok);
  const bool pass = ax.pass() && sampled_ok;
  report["pass"] = pass;
  return pass ? kPass : kFail;
}

int cmd_classify(const std::string& algebra_file, const std::string& datum_file, const Options& opt, Json& report) {
  const Input alg = read_input(algebra_file);
  const Input dat = read_input(datum_file);
  report["inputs"] = Json::array({input_record(alg), input_record(dat)});
  const QuasiBialgebra qb = load_algebra(alg);
  const HomDatum datum = hom_datum_from_json(parse_json(dat.text), qb);
  const DoubleAlgebra dbl = build_double(qb);
  const ClassificationReport rep = is_quasi_poisson_datum(dbl, datum);
  report["datum"] = hom_datum_to_json(datum, datum.label.empty() ? Json(nullptr) : Json(datum.label));
  report["classification"] = classification_report_to_json(rep);

  // Random pairs from L_x; a bracket leaving L_x is only possible when it is not a subalgebra.
  Sampler s(opt.seed);
  std::size_t outside = 0;
  for (std::size_t t = 0; t < opt.samples; ++t) {
    const Vec u = random_member(s, rep.dirac), v = random_member(s, rep.dirac);
    if (!rep.dirac.contains(dbl.bracket(u, v))) ++outside;
  }
  report["randomized"] = {{"samples", opt.samples}, {"brackets_outside", outside}};
  const bool pass = rep.verdict && outside == 0;
  report["pass"] = pass;
  return pass ? kPass : kFail;
}

int cmd_twist(const std::string& algebra_file, const std::string& r_file, const Options& opt, Json& report) {
  const Input alg = read_input(algebra_file);
  const Input rin = read_input(r_file);
  report["inputs"] = Json::array({input_record(alg), input_record(rin)});
  const QuasiBialgebra qb = load_algebra(alg);
  const Json rj = parse_json(rin.text);
  const Tensor r = bivector_from_json(rj.is_object() ? rj.at("r") : rj, qb.dim());
  const TwistReport tr = check_twist_iso(qb, r);
  const AxiomReport ax = check_axioms(tr.target);

  const DoubleAlgebra src = build_double(qb), dst = build_double(tr.target);
  Sampler s(opt.seed);
  std::size_t bracket_failures = 0, form_failures = 0;
  for (std::size_t t = 0; t < opt.samples; ++t) {
    const Vec u = s.vector(src.dim()), v = s.vector(src.dim());
    const Vec fu = tr.f.apply(u), fv = tr.f.apply(v);
    if (tr.f.apply(src.bracket(u, v)) != dst.bracket(fu, fv)) ++bracket_failures;
    if (q_form(src, u, v) != q_form(dst, fu, fv)) ++form_failures;
  }
  report["twisted"] = quasi_bialgebra_to_json(tr.target);
  report["twist"] = twist_report_to_json(tr);
  report["twisted_axioms"] = axiom_report_to_json(ax);
  report["randomized"] = {
      {"samples", opt.samples}, {"bracket_failures", bracket_failures}, {"form_failures", form_failures}};
  const bool pass = tr.pass() && ax.pass() && bracket_failures == 0 && form_failures == 0;
  report["pass"] = pass;
  return pass ? kPass : kFail;
}

int cmd_twist_equations(const std::string& file, const Options&, Json& report) {
  const Input in = read_input(file);
  report["inputs"] = Json::array({input_record(in)});
  report["system"] = polynomial_system_to_json(twist_equations(load_algebra(in)));
  report["pass"] = true;
  return kPass;
}

int write_output(const Json& j, const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = dump(j);
  if (!opt.json_out.empty()) {
    std::ofstream f(opt.json_out, std::ios::binary);
    if (!(f << text)) {
      err << "error: cannot write " << opt.json_out << "\n";
      return kInputError;
    }
  }
  if (!opt.quiet) out << text;
  return kPass;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Lie quasi-bialgebras, their doubles and homogeneous quasi-Poisson data", "qpoisson"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--samples", opt.samples, "Number of randomized samples")->check(CLI::Range(0, 100000));
  app.add_option("--json-out", opt.json_out, "Also write the report to this path");
  app.add_flag("--quiet", opt.quiet, "Suppress the report on standard output");

  std::string file, second, name;
  auto* validate = app.add_subcommand("validate", "Check the quasi-bialgebra axioms");
  validate->add_option("file", file, "Quasi-bialgebra JSON")->required();
  auto* dbl = app.add_subcommand("double", "Build and check the double");
  dbl->add_option("file", file, "Quasi-bialgebra JSON")->required();
  auto* classify = app.add_subcommand("classify", "Classify a homogeneous datum (h, r)");
  classify->add_option("algebra", file, "Quasi-bialgebra JSON")->required();
  classify->add_option("datum", second, "Datum JSON")->required();
  auto* twist_cmd = app.add_subcommand("twist", "Twist by a bivector and certify f_r");
  twist_cmd->add_option("algebra", file, "Quasi-bialgebra JSON")->required();
  twist_cmd->add_option("r", second, "Bivector JSON")->required();
  auto* equations = app.add_subcommand("twist-equations", "Emit the twist equation as polynomials");
  equations->add_option("algebra", file, "Quasi-bialgebra JSON")->required();
  auto* catalog = app.add_subcommand("catalog", "Print a catalog fixture");
  catalog->add_option("name", name, "Catalog name; omit to list names");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (catalog->parsed()) {
      if (name.empty()) {
        Json names = builtin_names();
        return write_output(names, opt, out, err);
      }
      return write_output(catalog_entry_to_json(builtin(name)), opt, out, err);
    }
    Json report;
    report["command"] = args;
    report["seed"] = opt.seed;
    report["samples"] = opt.samples;
    const auto start = std::chrono::steady_clock::now();
    int code = kPass;
    if (validate->parsed()) code = cmd_validate(file, opt, report);
    else if (dbl->parsed()) code = cmd_double(file, opt, report);
    else if (classify->parsed()) code = cmd_classify(file, second, opt, report);
    else if (twist_cmd->parsed()) code = cmd_twist(file, second, opt, report);
    else if (equations->parsed()) code = cmd_twist_equations(file, opt, report);
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const int wrote = write_output(report, opt, out, err);
    return wrote != kPass ? wrote : code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace qpoisson::cli

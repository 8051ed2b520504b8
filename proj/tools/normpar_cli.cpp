// normpar: decide whether a linear map preserves lp-norm parallel or
// triangle-equality-attaining pairs, check individual pairs, fuzz for
// counterexamples, and generate seeded test matrices.
//
// Exit codes carry the verdict: 0 preserver / pair holds / no
// counterexample, 1 the negative outcome, 2 input or validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "normpar/json_io.hpp"
#include "normpar/normpar.hpp"

namespace {

using normpar::Cx;
using normpar::Field;
using normpar::Matrix;
using normpar::NormSpec;
using normpar::OrderedJson;
using normpar::PairKind;
using normpar::Tolerance;
using normpar::Vector;

struct CommonOpts {
  std::string norm = "l1";
  std::string mode = "tea";
  double tol_eps = 1e-9;
};

NormSpec parse_norm(const std::string& s) {
  if (s == "l1") return NormSpec::l1();
  if (s == "linf") return NormSpec::linf();
  if (s.rfind("lp:", 0) == 0) {
    std::size_t used = 0;
    const double p = std::stod(s.substr(3), &used);
    if (used != s.size() - 3) throw std::invalid_argument("malformed --norm lp:<p>");
    return NormSpec::lp(p);  // rejects p <= 1 and p = infinity
  }
  throw std::invalid_argument("--norm must be l1, linf, or lp:<p>");
}

PairKind parse_mode(const std::string& s) {
  if (s == "tea") return PairKind::TEA;
  if (s == "parallel") return PairKind::Parallel;
  throw std::invalid_argument("--mode must be tea or parallel");
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json doc;
  in >> doc;
  return doc;
}

std::uint64_t env_fallback_seed() {
  if (const char* s = std::getenv("NORMPAR_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

void emit(const OrderedJson& doc) { std::cout << doc.dump(2) << "\n"; }

const char* norm_label(const NormSpec& spec, std::string& storage) {
  switch (spec.kind()) {
    case NormSpec::Kind::L1: return "l1";
    case NormSpec::Kind::Linf: return "linf";
    case NormSpec::Kind::Lp:
      storage = "lp:" + nlohmann::json(spec.p()).dump();
      return storage.c_str();
  }
  return "l1";
}

int run_check(const std::string& matrix_file, const CommonOpts& opts, std::uint64_t seed) {
  const Matrix t = normpar::parse_matrix_document(load_json(matrix_file));
  const NormSpec spec = parse_norm(opts.norm);
  const PairKind kind = parse_mode(opts.mode);
  const Tolerance tol(opts.tol_eps);

  const auto verdict = normpar::decide(t, spec, kind, tol, seed);

  OrderedJson out;
  out["verdict"] = verdict.preserver ? "preserver" : "not_preserver";
  std::string norm_storage;
  out["norm"] = norm_label(spec, norm_storage);
  out["mode"] = opts.mode;
  out["n"] = t.dim();
  out["field"] = normpar::field_name(t.field());
  out["tolerances"] = normpar::tolerance_document(tol);
  if (verdict.preserver) {
    out["class"] = normpar::structure_class_document(verdict.cls);
  } else {
    const auto& [x, y] = *verdict.witness;
    OrderedJson w;
    w["x"] = normpar::vector_entries(x);
    w["y"] = normpar::vector_entries(y);
    if (const auto pre = normpar::is_pair(x, y, kind, spec, tol); pre.mu)
      w["mu"] = normpar::scalar_pair(pre.mu->value());
    OrderedJson validation;
    validation["criterion"] = verdict.validated;
    validation["definitional"] = verdict.validated;
    w["validation"] = std::move(validation);
    out["witness"] = std::move(w);
  }
  emit(out);
  return verdict.preserver ? 0 : 1;
}

int run_pair(const std::string& x_file, const std::string& y_file, const CommonOpts& opts) {
  const Vector x = normpar::parse_vector_document(load_json(x_file));
  const Vector y = normpar::parse_vector_document(load_json(y_file));
  const NormSpec spec = parse_norm(opts.norm);
  const PairKind kind = parse_mode(opts.mode);
  const Tolerance tol(opts.tol_eps);

  const auto v = normpar::is_pair(x, y, kind, spec, tol);

  OrderedJson out;
  out["holds"] = v.holds;
  std::string norm_storage;
  out["norm"] = norm_label(spec, norm_storage);
  out["mode"] = opts.mode;
  out["n"] = x.dim();
  out["field"] = normpar::field_name(x.field());
  out["tolerances"] = normpar::tolerance_document(tol);
  if (v.holds) {
    OrderedJson w;
    if (v.mu) w["mu"] = normpar::scalar_pair(v.mu->value());
    if (v.peak_index) w["k"] = *v.peak_index + 1;  // 1-based coordinate
    out["witness"] = std::move(w);
  }
  emit(out);
  return v.holds ? 0 : 1;
}

int run_fuzz(const std::string& matrix_file, const CommonOpts& opts, int count,
             std::uint64_t seed) {
  const Matrix t = normpar::parse_matrix_document(load_json(matrix_file));
  const NormSpec spec = parse_norm(opts.norm);
  const PairKind kind = parse_mode(opts.mode);
  const Tolerance tol(opts.tol_eps);

  normpar::SampleConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  cfg.dim = t.dim();
  cfg.field = t.field();
  cfg.spec = spec;
  cfg.kind = kind;
  const auto result = normpar::empirical_check(t, cfg, tol);

  OrderedJson out;
  out["checked"] = result.checked;
  if (result.counterexample) {
    const auto& [x, y] = *result.counterexample;
    OrderedJson ce;
    ce["x"] = normpar::vector_entries(x);
    ce["y"] = normpar::vector_entries(y);
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  std::string norm_storage;
  out["norm"] = norm_label(spec, norm_storage);
  out["mode"] = opts.mode;
  out["n"] = t.dim();
  out["field"] = normpar::field_name(t.field());
  out["seed"] = seed;
  out["tolerances"] = normpar::tolerance_document(tol);
  emit(out);
  return result.counterexample ? 1 : 0;
}

int run_gen(const std::string& family, std::size_t n, const std::string& field,
            std::uint64_t seed) {
  const auto fam = normpar::matrix_family_from_string(family);
  if (!fam) throw std::invalid_argument("unknown family " + family);
  Field f;
  if (field == "real")
    f = Field::Real;
  else if (field == "complex")
    f = Field::Complex;
  else
    throw std::invalid_argument("--field must be real or complex");
  const Matrix m = normpar::gen_matrix(*fam, n, f, seed);
  emit(normpar::matrix_document(m));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lp-norm parallel / TEA pair preserver decision tool"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string matrix_file, x_file, y_file;
  std::string family = "dense", field = "real";
  std::size_t gen_n = 3;
  int fuzz_count = 10000;
  std::uint64_t seed = env_fallback_seed();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--norm", opts.norm, "l1, linf, or lp:<p> with 1 < p < inf");
    cmd->add_option("--mode", opts.mode, "tea or parallel");
    cmd->add_option("--tol", opts.tol_eps, "relative tolerance (default 1e-9)");
  };

  CLI::App* check = app.add_subcommand("check", "classify a matrix as preserver / not");
  check->add_option("matrix-file", matrix_file)->required();
  add_common(check);
  check->add_option("--seed", seed, "seed for the witness fallback search");

  CLI::App* witness = app.add_subcommand(
      "witness", "alias for check; reports the counterexample pair when one exists");
  witness->add_option("matrix-file", matrix_file)->required();
  add_common(witness);
  witness->add_option("--seed", seed, "seed for the witness fallback search");

  CLI::App* pair = app.add_subcommand("pair", "test one pair of vectors");
  pair->add_option("x-file", x_file)->required();
  pair->add_option("y-file", y_file)->required();
  add_common(pair);

  CLI::App* fuzz = app.add_subcommand("fuzz", "sample valid pairs and hunt counterexamples");
  fuzz->add_option("matrix-file", matrix_file)->required();
  add_common(fuzz);
  fuzz->add_option("--count", fuzz_count, "number of sampled pairs");
  fuzz->add_option("--seed", seed, "campaign seed (falls back to NORMPAR_SEED)");

  CLI::App* gen = app.add_subcommand("gen", "emit a seeded matrix from a named family");
  gen->add_option("--family", family, "identity|monomial|genperm|rankone|c2|dense");
  gen->add_option("--n", gen_n, "dimension");
  gen->add_option("--field", field, "real or complex");
  gen->add_option("--seed", seed, "generator seed (falls back to NORMPAR_SEED)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed() || witness->parsed()) return run_check(matrix_file, opts, seed);
    if (pair->parsed()) return run_pair(x_file, y_file, opts);
    if (fuzz->parsed()) return run_fuzz(matrix_file, opts, fuzz_count, seed);
    if (gen->parsed()) return run_gen(family, gen_n, field, seed);
  } catch (const std::exception& e) {
    OrderedJson err;
    err["error"] = e.what();
    emit(err);
    return 2;
  }
  return 2;
}

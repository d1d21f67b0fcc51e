#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cspoly/eigen.hpp"
#include "cspoly/errors.hpp"
#include "cspoly/genfunc.hpp"
#include "cspoly/operators.hpp"
#include "document.hpp"

namespace cspoly::cli {

namespace {

using nlohmann::json;

const char* kDefaultConvention = "-1:given:consistent";

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Rat::parse(item));
  if (out.empty() || text.back() == ',') throw InputError("malformed list '" + text + "'");
  return out;
}

std::optional<Rat> optional_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rat::parse(text);
}

void require_length(const IntVec& v, std::size_t N, const char* what) {
  if (v.size() != N) {
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) +
                     " parts but N = " + std::to_string(N));
  }
}

void require_positive_N(long N) {
  if (N < 1) throw InputError("N must be at least 1");
}

struct ModelOptions {
  std::string preset = "calogero";
  std::string alpha, beta, a, b;

  void add_to(CLI::App* app) {
    app->add_option("--preset", preset,
                    "calogero (= hermite), hermite, laguerre, jacobi, bessel or sutherland");
    app->add_option("--alpha", alpha, "custom alpha coefficients a2,a1,a0");
    app->add_option("--beta", beta, "custom beta coefficients b1,b0");
    app->add_option("--a", a, "preset parameter a");
    app->add_option("--b", b, "preset parameter b");
  }

  ModelSpec build(std::size_t N, const Rat& kappa) const {
    if (!alpha.empty() || !beta.empty()) {
      if (alpha.empty() || beta.empty()) throw InputError("--alpha and --beta go together");
      return make_custom(N, kappa, parse_rat_list(alpha), parse_rat_list(beta));
    }
    const Preset p = parse_preset(preset);
    if (p == Preset::custom) throw InputError("custom models need --alpha and --beta");
    return make_preset(p, N, kappa, optional_rat(a), optional_rat(b));
  }
};

std::string render(const OutputDocument& doc, const std::string& format) {
  if (format == "json") return emit_json(doc);
  if (format == "csv") return emit_csv(doc);
  if (format == "latex") return emit_latex(doc);
  throw InputError("unknown format '" + format + "'");
}

json terms_json(const SymPoly& p) {
  json arr = json::array();
  for (const auto& t : terms_of(p)) arr.push_back({{"exponent", t.exponent}, {"coeff", t.coeff}});
  return arr;
}

// --- f -------------------------------------------------------------------

struct FCommand {
  long N = 0;
  std::string kappa, n, format = "json";
  bool oracle = false;

  int run(std::ostream& out) const {
    require_positive_N(N);
    const Rat k = Rat::parse(kappa);
    const IntVec idx = IntVec::parse(n);
    require_length(idx, static_cast<std::size_t>(N), "--n");
    const SymPoly f = f_vector(idx, k);
    OutputDocument doc;
    doc.command = "f";
    doc.model = describe_free(static_cast<std::size_t>(N), k);
    doc.index = idx.parts();
    doc.basis = "m";
    doc.terms = terms_of(f);
    bool ok = true;
    if (oracle) {
      const SymPoly series = f_truncated_series(idx, k);
      ok = series == f;
      doc.verification = {{"oracle", "truncated-series"},
                          {"truncation_order", truncation_order(idx)},
                          {"agrees", ok}};
      if (!ok) doc.verification["oracle_terms"] = terms_json(series);
    }
    out << render(doc, format);
    return ok ? kOk : kVerificationFailed;
  }
};

// --- eig -----------------------------------------------------------------

struct EigCommand {
  long N = 0;
  std::string kappa, lambda, basis = "m", convention = kDefaultConvention, format = "json";
  ModelOptions model_opts;
  bool verify = false;
  bool raw = false;

  int run(std::ostream& out) const {
    require_positive_N(N);
    const Rat k = Rat::parse(kappa);
    const ModelSpec model = model_opts.build(static_cast<std::size_t>(N), k);
    const Partition lam = Partition::parse(lambda);
    require_length(lam.vec(), model.N, "--lambda");
    if (basis != "m" && basis != "f" && basis != "g") throw InputError("basis must be m, f or g");
    const ConventionCandidate conv = parse_convention(convention);

    EigenResult r;
    if (convention == kDefaultConvention || conv == parse_convention(kDefaultConvention)) {
      r = eigenfunction(model, lam.vec());
    } else {
      r = assemble_P(lam.vec(), u_coeffs_general(model, lam.vec(), conv.form), k,
                     eigenvalue_general(model, conv.reversed ? lam.vec().reversed() : lam.vec(),
                                        conv.form));
    }

    OutputDocument doc;
    doc.command = "eig";
    doc.model = describe(model);
    doc.index = lam.vec().parts();
    doc.eigenvalue = r.eigenvalue.str();
    doc.basis = basis;
    if (basis == "m") {
      SymPoly p = r.poly;
      if (!raw && !p.is_zero()) {
        Rat lead = p.coeff(lam);
        if (lead.is_zero()) lead = p.sorted_terms().front().second;
        p *= Rat(1) / lead;
      }
      doc.terms = terms_of(p);
    } else if (basis == "f") {
      doc.terms = terms_of(r.f_expansion);
    } else {
      GExpansion g;
      for (const auto& [m, c] : r.f_expansion) {
        for (const auto& [mu, d] : f_in_g_basis(m, k)) g[mu] += c * d;
      }
      std::erase_if(g, [](const auto& kv) { return kv.second.is_zero(); });
      doc.terms = terms_of(g);
    }

    bool ok = true;
    if (verify) {
      const EigenCheck check = oracle_eigen_check(model, r, conv.sign);
      ok = check.is_eigenvector && check.matches_formula;
      doc.verification = {{"convention", conv.str()},
                          {"is_eigenvector", check.is_eigenvector},
                          {"matches_formula", check.matches_formula},
                          {"verified", ok}};
      if (check.recovered_eigenvalue) {
        doc.verification["recovered_eigenvalue"] = check.recovered_eigenvalue->str();
      }
    }
    out << render(doc, format);
    return ok ? kOk : kVerificationFailed;
  }
};

// --- deformed-f ------------------------------------------------------------

struct DeformedCommand {
  long N = 0, Ntilde = 0;
  std::string kappa, n, ntilde, format = "json";

  int run(std::ostream& out) const {
    require_positive_N(N);
    require_positive_N(Ntilde);
    const Rat k = Rat::parse(kappa);
    if (k.is_zero()) throw InputError("kappa must be nonzero for the deformed family");
    DeformedIndex idx{IntVec::parse(n), IntVec::parse(ntilde)};
    require_length(idx.n, static_cast<std::size_t>(N), "--n");
    require_length(idx.ntilde, static_cast<std::size_t>(Ntilde), "--ntilde");
    const Polynomial p =
        deformed_f(idx, static_cast<std::size_t>(N), static_cast<std::size_t>(Ntilde), k);
    OutputDocument doc;
    doc.command = "deformed-f";
    doc.model = describe_free(static_cast<std::size_t>(N), k);
    doc.model.params["Ntilde"] = std::to_string(Ntilde);
    doc.index = idx.n.parts();
    doc.ntilde = idx.ntilde.parts();
    doc.basis = "x";
    doc.x_block = static_cast<std::size_t>(N);
    doc.terms = terms_of(p);
    out << render(doc, format);
    return kOk;
  }
};

// --- verify ----------------------------------------------------------------

struct VerifyCommand {
  std::string scope;
  long N = 0;
  std::string kappa, n, masses, Ns = "1,2";
  long maxweight = -1;
  long min_part = -2, max_part = 3;
  ModelOptions model_opts;

  int run(std::ostream& out) const {
    OutputDocument doc;
    doc.command = "verify";
    doc.basis = "m";
    json v;
    v["scope"] = scope;
    bool ok = false;
    if (scope == "masses") {
      MassSpec spec{parse_rat_list(masses), Rat::parse(kappa)};
      const MassReport rep = mass_identity_check(spec);
      doc.model = describe_free(spec.masses.size(), spec.kappa);
      v["E0"] = rep.E0.str();
      v["holds"] = ok = rep.holds;
      if (!ok) v["residual_terms"] = rep.residual.size();
    } else if (scope == "corollary") {
      require_positive_N(N);
      const Rat k = Rat::parse(kappa);
      const CorollaryReport rep = corollary_check(static_cast<std::size_t>(N), k);
      doc.model = describe_free(static_cast<std::size_t>(N), k);
      v["C_N"] = rep.C.str();
      v["E0_split_masses"] = rep.split.E0.str();
      v["mass_identity_holds"] = rep.split.holds;
      v["holds"] = ok = rep.holds;
    } else if (scope == "lemma") {
      ok = run_lemma(doc, v);
    } else if (scope == "completeness") {
      require_positive_N(N);
      if (maxweight < 0) throw InputError("--maxweight is required");
      const ModelSpec model = model_opts.build(static_cast<std::size_t>(N), Rat::parse(kappa));
      doc.model = describe(model);
      const CompletenessReport rep = completeness_check(model, static_cast<int>(maxweight));
      v["size"] = rep.labels.size();
      v["rank"] = rep.rank;
      v["determinant"] = rep.determinant.str();
      v["g_unitriangular"] = rep.g_unitriangular;
      v["invertible"] = ok = rep.invertible;
    } else if (scope == "conventions") {
      ok = run_conventions(doc, v);
    } else {
      throw InputError("unknown scope '" + scope + "'");
    }
    doc.verification = v;
    out << emit_json(doc);
    return ok ? kOk : kVerificationFailed;
  }

  bool run_lemma(OutputDocument& doc, json& v) const {
    require_positive_N(N);
    const Rat k = Rat::parse(kappa);
    const auto size = static_cast<std::size_t>(N);
    doc.model = describe_free(size, k);
    std::vector<IntVec> grid;
    if (!n.empty()) {
      grid.push_back(IntVec::parse(n));
      require_length(grid.back(), size, "--n");
    } else {
      if (min_part > max_part) throw InputError("--min-part exceeds --max-part");
      IntVec cur(std::vector<int>(size, static_cast<int>(min_part)));
      while (true) {
        grid.push_back(cur);
        std::size_t i = 0;
        while (i < size && cur[i] == max_part) cur[i++] = static_cast<int>(min_part);
        if (i == size) break;
        ++cur[i];
      }
    }
    json failures = json::array();
    for (const auto& idx : grid) {
      const LemmaReport rep = lemma_action_check(idx, size, k);
      if (!rep.holds) failures.push_back({{"n", idx.parts()}, {"residual", terms_json(rep.residual)}});
    }
    v["checked"] = grid.size();
    v["failures"] = failures;
    v["holds"] = failures.empty();
    return failures.empty();
  }

  bool run_conventions(OutputDocument& doc, json& v) const {
    const Rat k = Rat::parse(kappa.empty() ? "1/2" : kappa);
    const Rat a = Rat::parse(model_opts.a.empty() ? "1/3" : model_opts.a);
    const Rat b = Rat::parse(model_opts.b.empty() ? "2/5" : model_opts.b);
    const int w = maxweight < 0 ? 4 : static_cast<int>(maxweight);
    std::vector<ModelSpec> models;
    for (const auto& size : IntVec::parse(Ns)) {
      require_positive_N(size);
      auto block = preset_models(static_cast<std::size_t>(size), k, a, b);
      models.insert(models.end(), block.begin(), block.end());
    }
    doc.model = describe_free(models.front().N, k);
    doc.model.params = {{"a", a.str()}, {"b", b.str()}, {"N", Ns}};
    const ConventionReport rep = convention_harness(models, w);
    json rows = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"preset", r.preset},
                      {"convention", r.candidate.str()},
                      {"matched", r.matched},
                      {"total", r.total}});
    }
    json universal = json::array();
    for (const auto& c : rep.universal) universal.push_back(c.str());
    v["rows"] = rows;
    v["universal"] = universal;
    v["eigenvectors_ok"] = rep.eigenvectors_ok;
    return rep.eigenvectors_ok && !rep.universal.empty();
  }
};

// --- bench -----------------------------------------------------------------

struct BenchCommand {
  std::string suite = "all", kappa = "1/2";
  long N = 2;
  long maxweight = 6;

  template <class F>
  static double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  int run(std::ostream& out) const {
    if (suite != "f" && suite != "u" && suite != "all" && suite != "none") {
      throw InputError("suite must be f, u, all or none");
    }
    require_positive_N(N);
    const Rat k = Rat::parse(kappa);
    out << "suite,N,weight,method,items,terms,seconds\n";
    const auto size = static_cast<std::size_t>(N);
    for (long w = 0; w <= maxweight; ++w) {
      const auto parts = partitions_of(w, size);
      if (suite == "f" || suite == "all") {
        std::size_t terms_a = 0, terms_b = 0;
        clear_g_cache();
        const double ta = seconds([&] {
          for (const auto& lam : parts) terms_a += f_vector(lam.vec(), k).size();
        });
        const double tb = seconds([&] {
          for (const auto& lam : parts) terms_b += f_truncated_series(lam.vec(), k).size();
        });
        out << "f," << N << ',' << w << ",expansion," << parts.size() << ',' << terms_a << ','
            << ta << '\n';
        out << "f," << N << ',' << w << ",series," << parts.size() << ',' << terms_b << ','
            << tb << '\n';
      }
      if (suite == "u" || suite == "all") {
        std::size_t terms_a = 0, terms_b = 0;
        const double ta = seconds([&] {
          for (const auto& lam : parts) terms_a += u_coeffs_calogero(lam.vec(), size, k).entries.size();
        });
        const double tb = seconds([&] {
          for (const auto& lam : parts) {
            terms_b += u_coeffs_calogero_closed(lam.vec(), size, k).entries.size();
          }
        });
        out << "u," << N << ',' << w << ",recursion," << parts.size() << ',' << terms_a << ','
            << ta << '\n';
        out << "u," << N << ',' << w << ",closed," << parts.size() << ',' << terms_b << ','
            << tb << '\n';
      }
    }
    return kOk;
  }
};

}  // namespace

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ResonanceError& e) {
    err << "error: " << e.what() << '\n';
    return kResonance;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduced eigenfunctions of Calogero-Sutherland type models"};
  app.require_subcommand(1);

  FCommand fc;
  auto* f = app.add_subcommand("f", "expand f_n in the monomial basis");
  f->add_option("--N", fc.N, "number of variables")->required();
  f->add_option("--kappa", fc.kappa, "coupling, rational p/q")->required();
  f->add_option("--n", fc.n, "index vector, comma separated")->required();
  f->add_flag("--oracle", fc.oracle, "cross-check against the truncated generating series");
  f->add_option("--format", fc.format, "json, csv or latex");

  EigCommand ec;
  auto* eig = app.add_subcommand("eig", "reduced eigenfunction P_lambda");
  eig->add_option("--N", ec.N, "number of variables")->required();
  eig->add_option("--kappa", ec.kappa, "coupling, rational p/q")->required();
  eig->add_option("--lambda", ec.lambda, "partition, comma separated")->required();
  eig->add_option("--basis", ec.basis, "m, f or g");
  eig->add_flag("--verify", ec.verify, "apply the operator and check the eigen-relation");
  eig->add_flag("--raw", ec.raw, "do not normalize the m-basis leading coefficient");
  eig->add_option("--convention", ec.convention, "sign:order:form, e.g. -1:given:consistent");
  eig->add_option("--format", ec.format, "json, csv or latex");
  ec.model_opts.add_to(eig);

  DeformedCommand dc;
  auto* def = app.add_subcommand("deformed-f", "two-species f_{n,ntilde}");
  def->add_option("--N", dc.N, "number of x variables")->required();
  def->add_option("--Ntilde", dc.Ntilde, "number of x-tilde variables")->required();
  def->add_option("--kappa", dc.kappa, "coupling, nonzero rational")->required();
  def->add_option("--n", dc.n, "x-block index")->required();
  def->add_option("--ntilde", dc.ntilde, "x-tilde-block index")->required();
  def->add_option("--format", dc.format, "json, csv or latex");

  VerifyCommand vc;
  auto* ver = app.add_subcommand("verify", "run an identity check");
  ver->add_option("--scope", vc.scope, "lemma, masses, corollary, completeness or conventions")
      ->required();
  ver->add_option("--N", vc.N, "number of variables");
  ver->add_option("--kappa", vc.kappa, "coupling");
  ver->add_option("--n", vc.n, "single index for the lemma scope");
  ver->add_option("--min-part", vc.min_part, "lemma grid lower bound");
  ver->add_option("--max-part", vc.max_part, "lemma grid upper bound");
  ver->add_option("--masses", vc.masses, "masses, comma separated rationals");
  ver->add_option("--maxweight", vc.maxweight, "weight cap");
  ver->add_option("--Ns", vc.Ns, "variable counts for the conventions scope");
  vc.model_opts.add_to(ver);

  BenchCommand bc;
  auto* bench = app.add_subcommand("bench", "timing report as CSV");
  bench->add_option("--suite", bc.suite, "f, u, all or none");
  bench->add_option("--N", bc.N, "number of variables");
  bench->add_option("--max-weight", bc.maxweight, "largest weight");
  bench->add_option("--kappa", bc.kappa, "coupling");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  return guarded(
      [&] {
        if (f->parsed()) return fc.run(out);
        if (eig->parsed()) return ec.run(out);
        if (def->parsed()) return dc.run(out);
        if (ver->parsed()) return vc.run(out);
        if (bench->parsed()) return bc.run(out);
        return static_cast<int>(kInvalidInput);
      },
      err);
}

}  // namespace cspoly::cli

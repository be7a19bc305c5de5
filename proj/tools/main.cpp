#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defcoh/chevalley_eilenberg.hpp"
#include "defcoh/complex.hpp"
#include "defcoh/deformation.hpp"
#include "defcoh/errors.hpp"
#include "defcoh/gauge.hpp"
#include "defcoh/io.hpp"
#include "defcoh/random_instances.hpp"
#include "defcoh/report.hpp"
#include "defcoh/two_vector.hpp"
#include "defcoh/van_est.hpp"
#include "defcoh/vb_algebra.hpp"

namespace {

using namespace defcoh;

struct IncompatibleComplex : Error {
  using Error::Error;
};

struct DegreeRange {
  int lo = -1;
  int hi = 1;
};

DegreeRange parse_degrees(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw ParseError("degrees: expected 'a..b', got '" + text + "'");
  try {
    DegreeRange r;
    r.lo = std::stoi(text.substr(0, pos));
    r.hi = std::stoi(text.substr(pos + 2));
    if (r.lo > r.hi) throw ParseError("degrees: empty range '" + text + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("degrees: malformed range '" + text + "'");
  }
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += " ";
    s += argv[i];
  }
  return s;
}

void emit(const Report& report, const std::string& format) {
  if (format == "structured")
    std::cout << report.to_structured();
  else
    std::cout << report.to_table();
}

int run_cohomology(const Instance& inst, const std::string& complex_name, const DegreeRange& degrees, Report& report) {
  FiniteComplex cx(-1, {0}, {});
  if (complex_name == "ce") {
    if (inst.kind != InstanceKind::Representation) throw IncompatibleComplex("ce needs a representation instance");
    cx = ce_complex(*inst.rep);
  } else if (complex_name == "def") {
    if (inst.kind != InstanceKind::LieAlgebra) throw IncompatibleComplex("def needs a lie_algebra instance");
    cx = DeformationComplex(*inst.lie).complex();
  } else if (complex_name == "linear") {
    if (inst.kind != InstanceKind::VBAlgebra) throw IncompatibleComplex("linear needs a vb_algebra instance");
    cx = linear_subcomplex(*inst.vb).cx;
  } else if (complex_name == "cone") {
    if (inst.kind != InstanceKind::VBAlgebra) throw IncompatibleComplex("cone needs a vb_algebra instance");
    cx = cone_complex(*inst.vb);
  } else if (complex_name == "three-term") {
    if (inst.kind != InstanceKind::LAVectorSpace) throw IncompatibleComplex("three-term needs a la_vector_space instance");
    cx = three_term_complex(*inst.la);
  } else if (complex_name == "groupoid-full") {
    if (inst.kind != InstanceKind::LAVectorSpace) throw IncompatibleComplex("groupoid-full needs a la_vector_space instance");
    cx = full_complex(*inst.la, std::max(degrees.hi + 1, 1));
  } else if (complex_name == "groupoid-normalized") {
    if (inst.kind != InstanceKind::LAVectorSpace) throw IncompatibleComplex("groupoid-normalized needs a la_vector_space instance");
    cx = normalized_subcomplex(*inst.la, std::max(degrees.hi + 1, 1)).cx;
  } else {
    throw ParseError("unknown complex '" + complex_name + "'");
  }

  report.set("complex", complex_name);
  report.table_header = {"degree", "dim", "cohomology", "representatives"};
  for (int k = degrees.lo; k <= degrees.hi; ++k) {
    if (!cx.has_degree(k)) throw DegreeOutOfRange("degree " + std::to_string(k) + " outside the assembled range");
    const auto h = cohomology(cx, k);
    report.table_rows.push_back(
        {std::to_string(k), std::to_string(cx.dim(k)), std::to_string(h.dim), std::to_string(h.representatives.cols())});
  }
  return 0;
}

bool run_check(const Instance& inst, const std::string& suite, std::uint64_t seed, int count, Report& report) {
  report.set("suite", suite);
  if (suite == "mc") {
    if (inst.kind != InstanceKind::LieAlgebra) throw IncompatibleComplex("mc needs a lie_algebra instance");
    const int n = inst.lie->dim();
    const DeformationComplex zero_handle(Multiderivation(n, 2));
    const bool ok = zero_handle.is_maurer_cartan(Multiderivation::from_structure(inst.lie->structure()));
    long mc_count = ok ? 1 : 0;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
      const Multiderivation c = random_multiderivation(rng, n, 2, 2);
      // is_maurer_cartan runs both the DGLA route and the Jacobi route and
      // throws if they ever disagree.
      if (zero_handle.is_maurer_cartan(c)) ++mc_count;
    }
    report.set("bracket_is_mc", ok ? "true" : "false");
    report.set("samples", static_cast<long>(count));
    report.set("mc_hits", mc_count);
    return ok;
  }
  if (suite == "les") {
    if (inst.kind != InstanceKind::VBAlgebra) throw IncompatibleComplex("les needs a vb_algebra instance");
    const auto les = les_check(*inst.vb, -1, 1);
    report.table_header = {"degree", "space", "dim", "im_in", "ker_out", "exact"};
    for (const auto& node : les.nodes)
      report.table_rows.push_back({std::to_string(node.degree), node.space, std::to_string(node.dim), std::to_string(node.dim_im_in),
                                   std::to_string(node.dim_ker_out), node.exact ? "yes" : "no"});
    return les.all_exact;
  }
  if (suite == "split") {
    if (inst.kind != InstanceKind::VBAlgebra) throw IncompatibleComplex("split needs a vb_algebra instance");
    const auto split = splitting_transport_check(*inst.vb);
    report.table_header = {"degree", "sign"};
    for (std::size_t i = 0; i < split.degrees.size(); ++i)
      report.table_rows.push_back({std::to_string(split.degrees[i]), std::to_string(split.signs[i])});
    bool roundtrip = true;
    Rng rng(seed);
    const auto sub = linear_subcomplex(*inst.vb);
    for (int k = -1; k <= inst.vb->dim_g() && roundtrip; ++k) {
      for (int rep = 0; rep < std::max(count / 8, 2); ++rep) {
        std::vector<Rational> coords(sub.cx.dim(k));
        for (auto& e : coords) e = Rational(rng.next_int(-3, 3));
        const Multiderivation c = sub.cochain(*inst.vb, k, coords);
        if (!(splitting_inverse(*inst.vb, splitting_iso(*inst.vb, c)) == c)) roundtrip = false;
      }
    }
    report.set("roundtrip", roundtrip ? "ok" : "broken");
    return split.consistent && roundtrip;
  }
  if (suite == "quasi-iso") {
    if (inst.kind != InstanceKind::LAVectorSpace) throw IncompatibleComplex("quasi-iso needs a la_vector_space instance");
    const auto q = quasi_iso_check(*inst.la);
    report.table_header = {"degree", "dim_full", "dim_normalized", "injective", "ok"};
    for (const auto& node : q.nodes)
      report.table_rows.push_back({std::to_string(node.degree), std::to_string(node.dim_full), std::to_string(node.dim_normalized),
                                   node.induced_injective ? "yes" : "no", node.ok ? "yes" : "no"});
    return q.all_ok;
  }
  if (suite == "vanest") {
    if (inst.kind != InstanceKind::LAVectorSpace) throw IncompatibleComplex("vanest needs a la_vector_space instance");
    const auto ve = van_est_suite(*inst.la);
    report.table_header = {"degree", "sign"};
    for (int d = -1; d <= 1; ++d)
      report.table_rows.push_back({std::to_string(d), std::to_string(ve.signs[static_cast<std::size_t>(d + 1)])});
    report.set("identity", ve.identity_ok ? "ok" : "broken");
    report.set("chain_map", ve.chain_map_ok ? "ok" : "broken");
    return ve.identity_ok && ve.chain_map_ok;
  }
  if (suite == "weights") {
    if (inst.kind != InstanceKind::VBAlgebra) throw IncompatibleComplex("weights needs a vb_algebra instance");
    const VBAlgebra& vba = *inst.vb;
    const DeformationComplex handle(vba.total());
    Rng rng(seed);
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
      const int arity = static_cast<int>(rng.next_int(0, std::min(vba.total_dim(), 3)));
      const Multiderivation c = random_multiderivation(rng, vba.total_dim(), arity, 2);
      const auto dec = weight_decompose(vba, c);
      Multiderivation sum(vba.total_dim(), arity);
      for (const auto& [q, comp] : dec.components) {
        if (q < -1 || q > arity) ok = false;
        sum += comp;
        // Scaling eigenvector check at lambda = 2.
        const Multiderivation scaled = pullback(vba.scaling(Rational(2)), comp);
        Rational factor(1);
        for (int t = 0; t < q; ++t) factor *= Rational(2);
        for (int t = 0; t > q; --t) factor *= Rational(1, 2);
        if (!(scaled == factor * comp)) ok = false;
      }
      if (!(sum == c)) ok = false;
      if (arity + 1 <= vba.total_dim()) {
        if (!(linearize(vba, handle.differential(c)) == handle.differential(linearize(vba, c)))) ok = false;
      }
    }
    report.set("samples", static_cast<long>(count));
    return ok;
  }
  throw ParseError("unknown suite '" + suite + "'");
}

int protected_main(int argc, char** argv) {
  CLI::App app{"Exact deformation cohomology of Lie algebras, VB-algebras, LA-vector spaces and 2-vector spaces"};
  app.require_subcommand(1);

  std::string path, degrees_text = "-1..1", format = "table", complex_name = "def", suite, family = "catalog-lie", out_path,
              xi_text = "0";
  std::uint64_t seed = 1;
  int count = 50, dim_cap = 0, steps = 1000;
  double eps = 1.0;

  auto* coh = app.add_subcommand("cohomology", "Per-degree cohomology dimensions of a chosen complex");
  coh->add_option("path", path, "instance file")->required();
  coh->add_option("--complex", complex_name, "ce|def|linear|cone|three-term|groupoid-full|groupoid-normalized");
  coh->add_option("--degrees", degrees_text, "inclusive range a..b, negatives allowed");
  coh->add_option("--format", format, "table|structured");

  auto* chk = app.add_subcommand("check", "Structural theorem check suites");
  chk->add_option("path", path, "instance file")->required();
  chk->add_option("--suite", suite, "mc|les|split|quasi-iso|vanest|weights")->required();
  chk->add_option("--seed", seed, "randomized-suite seed");
  chk->add_option("--count", count, "randomized-suite sample count");
  chk->add_option("--format", format, "table|structured");

  auto* les_cmd = app.add_subcommand("les", "Alias of check --suite les");
  les_cmd->add_option("path", path, "instance file")->required();
  les_cmd->add_option("--format", format, "table|structured");

  auto* ve_cmd = app.add_subcommand("vanest", "Alias of check --suite vanest");
  ve_cmd->add_option("path", path, "instance file")->required();
  ve_cmd->add_option("--format", format, "table|structured");

  auto* gauge_cmd = app.add_subcommand("gauge", "RK4 gauge flow against the conjugation-pullback oracle");
  gauge_cmd->add_option("path", path, "lie_algebra instance file")->required();
  gauge_cmd->add_option("--xi", xi_text, "generator index or comma-separated coordinates of xi (Delta = ad_xi)");
  std::string delta_text;
  gauge_cmd->add_option("--delta", delta_text,
                        "explicit generator matrix, rows separated by ';', entries by ','; "
                        "overrides --xi (ad_xi generators leave the bracket stationary)");
  gauge_cmd->add_option("--eps", eps, "flow endpoint");
  gauge_cmd->add_option("--steps", steps, "RK4 step count");
  gauge_cmd->add_option("--format", format, "table|structured");

  auto* rnd = app.add_subcommand("random", "Write a seeded random instance file");
  rnd->add_option("--family", family, "catalog-lie|vb|la|twovect")->required();
  rnd->add_option("--seed", seed, "generator seed")->required();
  rnd->add_option("--dim-caps", dim_cap, "ambient dimension cap (defaults to DEFCOH_MAX_DIM)");
  rnd->add_option("--out", out_path, "output path (default <family>-seed<S>.json)");
  rnd->add_option("--format", format, "table|structured");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = join_args(argc, argv);
  int exit_code = 0;

  if (rnd->parsed()) {
    const int cap = dim_cap > 0 ? dim_cap : ambient_dim_cap();
    if (cap > ambient_dim_cap()) throw ValidationError("requested cap exceeds DEFCOH_MAX_DIM");
    const Instance inst = random_instance(family, seed, cap);
    const std::string target = out_path.empty() ? family + "-seed" + std::to_string(seed) + ".json" : out_path;
    std::ofstream out(target);
    if (!out) throw Error("cannot write '" + target + "'");
    out << serialize(inst);
    report.instance = inst.name;
    report.set("written", target);
    report.set("kind", kind_name(inst.kind));
  } else {
    const Instance inst = parse_instance(path);
    report.instance = inst.name;
    if (coh->parsed()) {
      run_cohomology(inst, complex_name, parse_degrees(degrees_text), report);
    } else if (chk->parsed() || les_cmd->parsed() || ve_cmd->parsed()) {
      if (les_cmd->parsed()) suite = "les";
      if (ve_cmd->parsed()) suite = "vanest";
      report.has_verdict = true;
      report.pass = run_check(inst, suite, seed, count, report);
      if (!report.pass) exit_code = 1;
    } else if (gauge_cmd->parsed()) {
      if (inst.kind != InstanceKind::LieAlgebra) throw IncompatibleComplex("gauge needs a lie_algebra instance");
      const int n = inst.lie->dim();
      RationalMatrix generator(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      if (!delta_text.empty()) {
        std::stringstream rows(delta_text);
        std::string row;
        std::size_t i = 0;
        while (std::getline(rows, row, ';')) {
          if (i >= static_cast<std::size_t>(n)) throw ValidationError("gauge: too many delta rows");
          std::stringstream cols(row);
          std::string tok;
          std::size_t j = 0;
          while (std::getline(cols, tok, ',')) {
            if (j >= static_cast<std::size_t>(n)) throw ValidationError("gauge: too many delta entries in a row");
            generator.at(i, j++) = Rational::parse(tok);
          }
          if (j != static_cast<std::size_t>(n)) throw ValidationError("gauge: delta row has too few entries");
          ++i;
        }
        if (i != static_cast<std::size_t>(n)) throw ValidationError("gauge: delta needs one row per generator");
      } else {
        std::vector<Rational> xi(static_cast<std::size_t>(n));
        if (xi_text.find(',') == std::string::npos) {
          const int idx = std::stoi(xi_text);
          if (idx < 0 || idx >= n) throw ValidationError("gauge: xi index out of range");
          xi[static_cast<std::size_t>(idx)] = Rational(1);
        } else {
          std::stringstream ss(xi_text);
          std::string tok;
          std::size_t i = 0;
          while (std::getline(ss, tok, ',')) {
            if (i >= xi.size()) throw ValidationError("gauge: too many xi coordinates");
            xi[i++] = Rational::parse(tok);
          }
        }
        for (int j = 0; j < n; ++j) {
          std::vector<Rational> e(static_cast<std::size_t>(n));
          e[static_cast<std::size_t>(j)] = Rational(1);
          const auto v = inst.lie->bracket(xi, e);
          for (int i = 0; i < n; ++i) generator.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(i)];
        }
      }
      const Multiderivation bracket = Multiderivation::from_structure(inst.lie->structure());
      const Multiderivation delta = Multiderivation::from_endomorphism(generator);
      const auto flow = gauge_flow(bracket, delta, eps, steps);
      const auto oracle = gauge_conjugation_oracle(bracket, delta, eps);
      const double err = max_abs_difference(flow.endpoint, oracle);
      std::ostringstream err_s, res_s;
      err_s.precision(3);
      res_s.precision(3);
      err_s << std::scientific << err;
      res_s << std::scientific << flow.max_mc_residual;
      report.set("max_abs_error", err_s.str());
      report.set("mc_residual", res_s.str());
      report.set("eps", std::to_string(eps));
      report.set("steps", static_cast<long>(steps));
      report.has_verdict = true;
      report.pass = err < 1e-8 && flow.max_mc_residual < 1e-7;
      if (!report.pass) exit_code = 1;
    }
  }

  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(report, format);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return protected_main(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <CLI11.hpp>

#include "report.hpp"

#include "gammalift/char_table.hpp"
#include "gammalift/crystal.hpp"
#include "gammalift/dl_lift.hpp"
#include "gammalift/lattice.hpp"
#include "gammalift/normalization.hpp"
#include "gammalift/oscillatory.hpp"
#include "gammalift/padic_chars.hpp"
#include "gammalift/satake.hpp"
#include "gammalift/volumes.hpp"

#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace gammalift;

namespace {

#ifndef GAMMALIFT_VERSION
#define GAMMALIFT_VERSION "0.0.0"
#endif

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

std::vector<long> parse_long_list(const std::string& s, char sep = ',') {
  std::vector<long> out;
  for (const auto& tok : split(s, sep)) out.push_back(parse_long(tok));
  return out;
}

std::vector<std::vector<long>> parse_weight_lists(const std::string& s) {
  std::vector<std::vector<long>> out;
  for (const auto& tok : split(s, ';')) out.push_back(parse_long_list(tok));
  return out;
}

std::complex<double> parse_complex(const std::string& s) {
  auto parts = split(s, ',');
  try {
    if (parts.size() == 1) return {std::stod(parts[0]), 0.0};
    if (parts.size() == 2) return {std::stod(parts[0]), std::stod(parts[1])};
  } catch (const std::exception&) {
  }
  throw UsageError("not a complex number: '" + s + "' (want re or re,im)");
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string s = fmt_double(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += fmt_double(std::abs(z.imag()));
  s += "i";
  return s;
}

std::string weight_str(const std::vector<long>& lam) {
  std::string s = "(";
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(lam[i]);
  }
  return s + ")";
}

// Builds the weight list, insisting on an admissibility certificate; the
// first prefix that loses solvability names its last weight.
WeightList admissible_weights(const std::vector<std::vector<long>>& raw) {
  if (raw.empty()) throw UsageError("--weights must list at least one weight");
  int rank = static_cast<int>(raw[0].size());
  for (const auto& w : raw)
    if (static_cast<int>(w.size()) != rank)
      throw UsageError("weight tuples must share one rank");
  WeightList rho = make_weight_list(rank, raw);
  if (!rho.sigma.has_value()) {
    for (size_t k = 1; k <= raw.size(); ++k) {
      std::vector<std::vector<long>> prefix(raw.begin(), raw.begin() + k);
      if (!solve_sigma(rank, prefix).has_value())
        throw UsageError("inadmissible weights: no sigma certificate once lambda_" +
                         std::to_string(k) + " = " + weight_str(raw[k - 1]) +
                         " is included");
    }
    throw UsageError("inadmissible weights: no sigma certificate");
  }
  return rho;
}

std::vector<PAdicCharacter> build_characters(long p, int rank, const std::string& unram,
                                             const std::string& cond, const std::string& exp) {
  std::vector<std::complex<double>> z(rank, {1.0, 0.0});
  std::vector<long> conds(rank, 0), exps(rank, 0);
  if (!unram.empty()) {
    auto toks = split(unram, ';');
    if (static_cast<int>(toks.size()) != rank)
      throw UsageError("--theta-unram needs one value per torus coordinate");
    for (int i = 0; i < rank; ++i) z[i] = parse_complex(toks[i]);
  }
  if (!cond.empty()) {
    conds = parse_long_list(cond, ';');
    if (static_cast<int>(conds.size()) != rank)
      throw UsageError("--theta-cond needs one value per torus coordinate");
  }
  if (!exp.empty()) {
    exps = parse_long_list(exp, ';');
    if (static_cast<int>(exps.size()) != rank)
      throw UsageError("--theta-exp needs one value per torus coordinate");
  }
  std::vector<PAdicCharacter> theta;
  for (int i = 0; i < rank; ++i) {
    if (conds[i] == 0) {
      theta.push_back(unramified_character(p, z[i]));
      if (exps[i] != 0)
        throw UsageError("--theta-exp requires conductor 1 at coordinate " +
                         std::to_string(i + 1));
    } else if (conds[i] == 1) {
      theta.push_back(ramified_character(p, z[i], exps[i]));
    } else {
      throw UsageError("conductors are limited to 0 or 1");
    }
  }
  return theta;
}

ordered_json character_json(const PAdicCharacter& chi) {
  return ordered_json{{"z", complex_json(chi.z)},
                      {"conductor", chi.conductor},
                      {"ram_exponent", chi.ram_exponent}};
}

ordered_json weights_json(const std::vector<std::vector<long>>& w) {
  ordered_json out = ordered_json::array();
  for (const auto& lam : w) out.push_back(lam);
  return out;
}

struct FixtureState {
  bool loaded = false;
  std::string path;
  long tate = 0, fourier = 0;
  std::optional<int> radius, unit_level;
};

FixtureState load_fixtures(const std::string& path) {
  FixtureState fx;
  if (path.empty()) return fx;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixture file '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("fixture file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.contains("tate_eps_normalization") || !j.contains("fourier_shift_exponent"))
    throw UsageError("fixture file must record tate_eps_normalization and fourier_shift_exponent");
  fx.loaded = true;
  fx.path = path;
  fx.tate = j["tate_eps_normalization"].get<long>();
  fx.fourier = j["fourier_shift_exponent"].get<long>();
  if (fx.tate != kTateEpsNormalization)
    throw UsageError("fixture tate_eps_normalization disagrees with the built-in calibration");
  if (fx.fourier != kFourierShiftExponent)
    throw UsageError("fixture fourier_shift_exponent disagrees with the built-in calibration");
  if (j.contains("oracle")) {
    const auto& o = j["oracle"];
    if (o.contains("radius")) fx.radius = o["radius"].get<int>();
    if (o.contains("unit_level")) fx.unit_level = o["unit_level"].get<int>();
  }
  return fx;
}

void attach_fixtures(RunReport& report, const FixtureState& fx) {
  if (!fx.loaded) return;
  report.doc["fixtures"] = ordered_json{{"path", fx.path},
                                        {"tate_eps_normalization", fx.tate},
                                        {"fourier_shift_exponent", fx.fourier},
                                        {"verified", true}};
}

const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Central: return "central";
    case ClassKind::Unipotent: return "unipotent";
    case ClassKind::Split: return "split";
    case ClassKind::Elliptic: return "elliptic";
    default: return "generic";
  }
}

const char* irrep_kind_name(IrrepKind k) {
  switch (k) {
    case IrrepKind::Linear: return "linear";
    case IrrepKind::SteinbergTwist: return "steinberg";
    case IrrepKind::PrincipalSeries: return "principal";
    case IrrepKind::Cuspidal: return "cuspidal";
    default: return "generic";
  }
}

void require_q(long q) {
  if (q != 3 && q != 5 && q != 7 && q != 9)
    throw UsageError("unsupported q (use 3, 5, 7 or 9)");
}

std::string cycle_str(const std::vector<int>& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(c[i]);
  }
  return s;
}

std::string exps_str(const std::vector<long>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s;
}

// ---- finite -------------------------------------------------------------

int run_finite_gamma(long q, int rank, const std::string& cycle_opt,
                     const std::string& theta_opt, long psi_shift,
                     const std::string& format, RunReport& report) {
  AdditiveCharacter psi(q, psi_shift);
  report.identity("torus gamma: signed q^{-n/2} character sum over the twisted torus");

  if (!cycle_opt.empty()) {
    std::vector<int> cyc;
    for (long v : parse_long_list(cycle_opt)) cyc.push_back(static_cast<int>(v));
    FiniteTorus torus(q, cyc);
    std::vector<long> exps(torus.components(), 0);
    if (!theta_opt.empty()) exps = parse_long_list(theta_opt);
    if (static_cast<int>(exps.size()) != torus.components())
      throw UsageError("--theta needs one exponent per cycle");
    FiniteTorusCharacter theta(torus, exps);
    GammaValue g = torus_gamma(torus, theta, psi);
    report.results()["q"] = q;
    report.results()["cycle_type"] = cyc;
    report.results()["theta_exponents"] = exps;
    report.results()["gamma"] = gamma_json(g);
    report.results()["embedding"] = complex_json(g.embed());
    std::cout << report.render();
    return 0;
  }

  // No cycle type: sweep all (w, theta) orbits at the given rank.
  struct Row {
    std::vector<int> cyc;
    std::vector<long> exps;
    GammaValue g;
  };
  std::vector<Row> rows;
  if (rank == 1) {
    FiniteTorus torus(q, {1});
    for (long e = 0; e < q - 1; ++e) {
      FiniteTorusCharacter theta(torus, {e});
      rows.push_back({{1}, {e}, torus_gamma(torus, theta, psi)});
    }
  } else if (rank == 2) {
    FiniteTorus split(q, {1, 1});
    for (long e1 = 0; e1 < q - 1; ++e1)
      for (long e2 = e1; e2 < q - 1; ++e2) {
        FiniteTorusCharacter theta(split, {e1, e2});
        rows.push_back({{1, 1}, {e1, e2}, torus_gamma(split, theta, psi)});
      }
    FiniteTorus coxeter(q, {2});
    long M = q * q - 1;
    for (long e = 0; e < M; ++e) {
      if ((e * q) % M < e) continue; // one representative per Frobenius orbit
      FiniteTorusCharacter theta(coxeter, {e});
      rows.push_back({{2}, {e}, torus_gamma(coxeter, theta, psi)});
    }
  } else {
    throw UsageError("--rank must be 1 or 2");
  }

  if (format == "tsv") {
    std::ostringstream os;
    os << "cycle_type\ttheta\tcyc\tq_half_power\tembed_re\tembed_im\n";
    for (const auto& r : rows) {
      auto z = r.g.embed();
      os << cycle_str(r.cyc) << '\t' << exps_str(r.exps) << '\t' << r.g.cyc.str() << '\t'
         << r.g.q_half_power << '\t' << fmt_double(z.real()) << '\t' << fmt_double(z.imag())
         << '\n';
    }
    std::cout << os.str();
    return 0;
  }
  report.results()["q"] = q;
  report.results()["rank"] = rank;
  ordered_json jrows = ordered_json::array();
  for (const auto& r : rows)
    jrows.push_back(ordered_json{{"cycle_type", r.cyc},
                                 {"theta_exponents", r.exps},
                                 {"gamma", gamma_json(r.g)},
                                 {"embedding", complex_json(r.g.embed())}});
  report.results()["rows"] = jrows;
  std::cout << report.render();
  return 0;
}

int run_finite_verify(long q, long psi_shift, RunReport& report) {
  report.identity("every constituent's group gamma equals the torus gamma exactly");
  FiniteMainReport r = verify_finite_main(q, psi_shift);
  ordered_json checks = ordered_json::array(), failures = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json rec{{"q", q},
                     {"w_cycle_type", c.w_cycle_type},
                     {"theta_exponents", c.theta_exponents},
                     {"constituent", c.constituent},
                     {"gamma_group", gamma_json(c.gamma_group)},
                     {"gamma_torus", gamma_json(c.gamma_torus)},
                     {"pass", c.pass}};
    checks.push_back(rec);
    if (!c.pass) failures.push_back(rec);
  }
  report.results()["q"] = q;
  report.results()["total"] = static_cast<long>(r.checks.size());
  report.results()["checks"] = checks;
  report.results()["failures"] = failures;
  report.pass = r.all_pass();
  std::cout << report.render();
  return report.pass ? 0 : 1;
}

int run_finite_table(long q, int rank, const std::string& format, RunReport& report) {
  report.identity("exact row and column orthogonality of the character table");
  CharacterTable t = rank == 1 ? gl1_character_table(q) : gl2_character_table(q);
  OrthogonalityReport orth = verify_orthogonality(t);

  if (format == "tsv") {
    std::ostringstream os;
    os << "irrep";
    for (const auto& c : t.classes) os << '\t' << c.label;
    os << '\n';
    for (size_t i = 0; i < t.irreps.size(); ++i) {
      os << t.irreps[i].label;
      for (size_t c = 0; c < t.classes.size(); ++c) os << '\t' << t.values[i][c].str();
      os << '\n';
    }
    std::cout << os.str();
    return orth.ok() ? 0 : 1;
  }

  report.results()["group"] = t.group_label;
  report.results()["q"] = t.q;
  report.results()["group_order"] = t.group_order;
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes)
    classes.push_back(ordered_json{{"label", c.label},
                                   {"kind", class_kind_name(c.kind)},
                                   {"params", c.params},
                                   {"size", c.size}});
  report.results()["classes"] = classes;
  ordered_json irreps = ordered_json::array();
  for (const auto& r : t.irreps)
    irreps.push_back(ordered_json{{"label", r.label},
                                  {"kind", irrep_kind_name(r.kind)},
                                  {"params", r.params},
                                  {"dim", r.dim}});
  report.results()["irreps"] = irreps;
  ordered_json values = ordered_json::array();
  for (const auto& row : t.values) {
    ordered_json jr = ordered_json::array();
    for (const auto& v : row) jr.push_back(cyclotomic_json(v));
    values.push_back(jr);
  }
  report.results()["values"] = values;
  report.results()["orthogonality"] = ordered_json{{"row_checks", orth.row_checks},
                                                   {"column_checks", orth.column_checks},
                                                   {"failures", orth.failures}};
  report.pass = orth.ok();
  std::cout << report.render();
  return report.pass ? 0 : 1;
}

// ---- padic --------------------------------------------------------------

int run_padic_gamma(long p, const WeightList& rho, const std::vector<PAdicCharacter>& theta,
                    std::complex<double> s, OscillatoryParams params, RunReport& report) {
  report.identity("closed-form gamma product equals the truncated kernel transform");
  report.results()["p"] = p;
  report.results()["s"] = complex_json(s);
  try {
    std::complex<double> closed = gamma_rho_torus(rho, theta, s);
    std::complex<double> oracle = oscillatory_oracle(rho, theta, s, params);
    double diff = std::abs(closed - oracle);
    report.results()["closed_form"] = complex_json(closed);
    report.results()["oracle"] = complex_json(oracle);
    report.results()["difference"] = diff;
    report.results()["tolerance"] = 1e-6;
    report.pass = diff < 1e-6;
  } catch (const pole_error& e) {
    report.results()["pole"] = e.what();
    report.pass = false;
  }
  std::cout << report.render();
  return report.pass ? 0 : 1;
}

int run_padic_L(long p, const WeightList& rho, const std::vector<PAdicCharacter>& theta,
                RunReport& report) {
  report.identity("the L factor is the product of the composed one-dimensional factors");
  report.results()["p"] = p;
  ordered_json factors = ordered_json::array();
  std::string text = "1/(";
  for (int i = 0; i < rho.n(); ++i) {
    PAdicCharacter chi = compose_weight(theta, rho.weights[i]);
    LocalLFactor f = tate_L(chi);
    ordered_json den = ordered_json::array();
    for (const auto& c : f.den) den.push_back(complex_json(c));
    factors.push_back(ordered_json{{"weight", rho.weights[i]}, {"den", den}});
    if (f.den.size() == 2)
      text += "(1 - (" + fmt_complex(-f.den[1]) + ")X)";
    else
      text += "(1)";
  }
  text += ")";
  LocalLFactor L = L_rho(rho, theta);
  ordered_json den = ordered_json::array();
  for (const auto& c : L.den) den.push_back(complex_json(c));
  report.results()["factors"] = factors;
  report.results()["den_coefficients"] = den;
  report.results()["text"] = text;
  std::cout << report.render();
  return 0;
}

int run_padic_lift(long p, const WeightList& rho, const std::vector<PAdicCharacter>& theta,
                   RunReport& report) {
  report.identity("satake parameters of the composed characters, canonically ordered");
  report.results()["p"] = p;
  try {
    auto lift = unramified_satake_lift(rho, theta);
    ordered_json jl = ordered_json::array();
    for (auto z : lift) jl.push_back(complex_json(z));
    report.results()["satake"] = jl;
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  ordered_json ordered = ordered_json::array();
  for (const auto& chi : torus_lifting_data(rho, theta)) ordered.push_back(character_json(chi));
  report.results()["ordered_characters"] = ordered;
  std::cout << report.render();
  return 0;
}

int run_padic_mellin(const WeightList& rho, const std::string& points_opt, bool plain,
                     RunReport& report) {
  report.identity("membership: the numerator cancels every geometric denominator factor");
  std::vector<std::pair<std::vector<long>, QSqrt>> pts;
  if (points_opt.empty()) {
    pts.push_back({std::vector<long>(rho.rank, 0), QSqrt(BigRational(1))});
  } else {
    for (const auto& tok : split(points_opt, ';')) {
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw UsageError("--points entries look like e1,e2:coeff");
      auto e = parse_long_list(tok.substr(0, colon));
      if (static_cast<int>(e.size()) != rho.rank)
        throw UsageError("point exponents must match the weight rank");
      BigRational c;
      try {
        c = BigRational::parse(tok.substr(colon + 1));
      } catch (const std::exception& ex) {
        throw UsageError(ex.what());
      }
      pts.push_back({e, QSqrt(c)});
    }
  }
  LatticeFunction phi = plain ? make_plain_function(rho.rank, pts)
                              : make_tail_function(rho, pts);
  MellinImage M = mellin(phi);
  bool member = schwartz_membership(M, rho);
  ordered_json num = ordered_json::array();
  for (const auto& [e, c] : M.numerator)
    num.push_back(ordered_json{{"exponent", e}, {"coeff", qsqrt_json(c)}});
  ordered_json den = ordered_json::array();
  for (const auto& [e, k] : M.denominator)
    den.push_back(ordered_json{{"exponent", e}, {"multiplicity", k}});
  report.results()["mode"] = plain ? "plain" : "tail";
  report.results()["numerator"] = num;
  report.results()["denominator"] = den;
  report.results()["member"] = member;
  std::cout << report.render();
  return 0;
}

int run_padic_basic(const WeightList& rho, int degree, int rank_opt,
                    const std::string& format, RunReport& report) {
  if (rank_opt != 0 && rank_opt != rho.rank)
    throw UsageError("--rank disagrees with the weight tuples");
  report.identity("spherical expansion of the basic function in exact q^{-1/2} arithmetic");
  SatakeExpansion E = satake_basic_function(rho, degree);
  if (format == "tsv") {
    std::ostringstream os;
    os << "degree\tlambda\tvalue\n";
    for (const auto& t : E.terms)
      os << t.degree << '\t' << exps_str(t.lambda) << '\t' << t.value.str({"u"}) << '\n';
    std::cout << os.str();
    return 0;
  }
  report.results()["rank"] = E.rank;
  report.results()["degree"] = E.max_degree;
  report.results()["symmetrized_differs"] = E.symmetrized_differs;
  ordered_json terms = ordered_json::array();
  for (const auto& t : E.terms)
    terms.push_back(ordered_json{{"degree", t.degree},
                                 {"lambda", t.lambda},
                                 {"value", t.value.str({"u"})}});
  report.results()["terms"] = terms;
  std::cout << report.render();
  return 0;
}

int run_padic_volume(long p, const std::vector<long>& n, const std::vector<long>& m,
                     long v, long unit, int level, RunReport& report) {
  report.identity("fiber volume: unit-class count times the valuation splitting sum");
  BigRational V;
  try {
    V = monomial_fiber_volume(n, m, p, v, unit, level);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  report.results()["p"] = p;
  report.results()["exponents"] = n;
  report.results()["twists"] = m;
  report.results()["valuation"] = v;
  report.results()["unit"] = unit;
  report.results()["level"] = level;
  report.results()["volume"] = V.str();
  std::cout << report.render();
  return 0;
}

// ---- crystal ------------------------------------------------------------

int run_crystal(int m, int n, int trials, std::uint64_t seed, bool symbolic,
                RunReport& report) {
  if (symbolic) {
    if (m != 2 || n != 2) throw UsageError("--symbolic is only defined for the 2x2 shape");
    report.identity("closed form of the two-row involution on the 2x2 shape");
    auto s = CrystalPoint::symbolic(2, 2);
    RationalFunction t11 = s.fn(0, 0), t12 = s.fn(0, 1), t21 = s.fn(1, 0), t22 = s.fn(1, 1);
    auto im = tau_tworow(s);
    RationalFunction d1 = t11 + t22, d2 = t12 + t21;
    bool ok = im.fn(0, 0) == t21 * d1 / d2 && im.fn(0, 1) == t22 * d2 / d1 &&
              im.fn(1, 0) == t11 * d2 / d1 && im.fn(1, 1) == t12 * d1 / d2;
    report.results()["two_by_two_identity"] = ok;
    report.pass = ok;
    std::cout << report.render();
    return ok ? 0 : 1;
  }
  if (m < 2 || m > 4 || n < 2 || n > 4)
    throw UsageError("randomized mode supports 2 <= m, n <= 4");
  if (trials < 1 || trials > 1000) throw UsageError("--trials must be in [1, 1000]");
  report.identity("involutivity, braid and commutation relations, invariants, jacobian sign");
  WeylActionReport r = verify_weyl_action(m, n, trials, seed);
  report.results()["m"] = m;
  report.results()["n"] = n;
  report.results()["trials"] = trials;
  report.results()["seed"] = seed;
  report.results()["counts"] = ordered_json{{"involution", r.involution},
                                            {"braid", r.braid},
                                            {"cross", r.cross},
                                            {"sum_invariance", r.sum_invariance},
                                            {"column_products", r.column_products},
                                            {"jacobian", r.jacobian}};
  report.results()["failures"] = r.failures;
  report.pass = r.all_passed();
  std::cout << report.render();
  return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact gamma factors, character tables, p-adic torus transforms"};
  app.require_subcommand(1);

  std::string fixtures_path, format = "json";
  app.add_option("--fixtures", fixtures_path, "fixture file with calibrated constants");
  app.add_option("--format", format, "json (default) or tsv for table output")
      ->check(CLI::IsMember({"json", "tsv"}));

  // finite
  auto* finite = app.add_subcommand("finite", "finite-field torus and group gamma");
  finite->fallthrough();
  long fq = 0, psi_shift = 1;
  int frank = 2;
  std::string fmode, fcycle, ftheta;
  finite->add_option("--q", fq, "field size")->required();
  finite->add_option("--mode", fmode)->required()->check(CLI::IsMember({"gamma", "verify", "table"}));
  finite->add_option("--cycle-type", fcycle, "torus cycle type, e.g. 2 or 1,1");
  finite->add_option("--theta", ftheta, "character exponents, one per cycle");
  finite->add_option("--psi-shift", psi_shift, "prime-subfield shift of the additive character");
  finite->add_option("--rank", frank, "torus rank for sweeps and tables (1 or 2)");

  // padic
  auto* padic = app.add_subcommand("padic", "p-adic torus factors and transforms");
  padic->fallthrough();
  padic->require_subcommand(1);
  long pp = 3;
  std::string pweights, punram, pcond, pexp;
  padic->add_option("--p", pp, "residue characteristic");
  padic->add_option("--weights", pweights, "weight tuples, e.g. 1,0;0,1");
  padic->add_option("--theta-unram", punram, "unramified values z, one per coordinate");
  padic->add_option("--theta-cond", pcond, "conductors (0 or 1), one per coordinate");
  padic->add_option("--theta-exp", pexp, "ramified exponents, one per coordinate");

  auto* pgamma = padic->add_subcommand("gamma", "closed form against the kernel oracle");
  pgamma->fallthrough();
  std::string ps = "0.8";
  int pradius = 0, plevel_oracle = 0;
  pgamma->add_option("--s", ps, "complex parameter, re or re,im");
  pgamma->add_option("--radius", pradius, "oracle valuation radius");
  pgamma->add_option("--level", plevel_oracle, "oracle unit level");

  auto* pL = padic->add_subcommand("L", "local L factor of the weight list");
  pL->fallthrough();
  auto* plift = padic->add_subcommand("lift", "satake parameters of the composed characters");
  plift->fallthrough();

  auto* pmellin = padic->add_subcommand("mellin", "mellin image and membership verdict");
  pmellin->fallthrough();
  std::string ppoints;
  bool pplain = false;
  pmellin->add_option("--points", ppoints, "base points e1,e2:coeff;...");
  pmellin->add_flag("--plain", pplain, "finitely supported mode");

  auto* pbasic = padic->add_subcommand("basic", "basic-function expansion");
  pbasic->fallthrough();
  int pdegree = 6, prank = 0;
  pbasic->add_option("--degree", pdegree, "maximum symmetric degree");
  pbasic->add_option("--rank", prank, "expected rank (checked against the weights)");

  auto* pvolume = padic->add_subcommand("volume", "monomial fiber volume");
  pvolume->fallthrough();
  std::string pvn, pvm;
  long pval = 1, punit = 1;
  int pvlevel = 2;
  pvolume->add_option("--weights", pvn, "fibration exponents n_1;...;n_k")->required();
  pvolume->add_option("--twists", pvm, "density twists m_2;...;m_k");
  pvolume->add_option("--val", pval, "valuation of the target");
  pvolume->add_option("--unit", punit, "unit part of the target");
  pvolume->add_option("--level", pvlevel, "unit group level");

  // crystal
  auto* crystal = app.add_subcommand("crystal", "weyl involutions on parametrization matrices");
  crystal->fallthrough();
  int cm = 2, cn = 2, ctrials = 25;
  std::uint64_t cseed = 0;
  bool csymbolic = false;
  crystal->add_option("--m", cm, "rows")->required();
  crystal->add_option("--n", cn, "columns")->required();
  crystal->add_option("--trials", ctrials, "random exact points per relation");
  crystal->add_option("--seed", cseed, "random seed");
  crystal->add_flag("--symbolic", csymbolic, "prove the 2x2 closed form symbolically");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    FixtureState fx = load_fixtures(fixtures_path);

    if (*finite) {
      require_q(fq);
      bool table_like = fmode == "table" || (fmode == "gamma" && fcycle.empty());
      if (format == "tsv" && !table_like)
        throw UsageError("tsv output is only available for tables");
      RunReport report("finite", GAMMALIFT_VERSION);
      report.parameters()["q"] = fq;
      report.parameters()["mode"] = fmode;
      if (!fcycle.empty()) report.parameters()["cycle_type"] = fcycle;
      if (!ftheta.empty()) report.parameters()["theta"] = ftheta;
      report.parameters()["psi_shift"] = psi_shift;
      if (fmode != "verify") report.parameters()["rank"] = frank;
      attach_fixtures(report, fx);
      if (fmode == "gamma")
        return run_finite_gamma(fq, frank, fcycle, ftheta, psi_shift, format, report);
      if (fmode == "verify") return run_finite_verify(fq, psi_shift, report);
      if (frank != 1 && frank != 2) throw UsageError("--rank must be 1 or 2");
      return run_finite_table(fq, frank, format, report);
    }

    if (*padic) {
      bool is_basic = padic->got_subcommand(pbasic);
      if (format == "tsv" && !is_basic)
        throw UsageError("tsv output is only available for tables");
      if (*pvolume) {
        RunReport report("padic volume", GAMMALIFT_VERSION);
        std::vector<long> n = parse_long_list(pvn, pvn.find(';') != std::string::npos ? ';' : ',');
        std::vector<long> m;
        if (!pvm.empty())
          m = parse_long_list(pvm, pvm.find(';') != std::string::npos ? ';' : ',');
        report.parameters()["p"] = pp;
        report.parameters()["weights"] = pvn;
        report.parameters()["twists"] = pvm;
        report.parameters()["val"] = pval;
        report.parameters()["unit"] = punit;
        report.parameters()["level"] = pvlevel;
        attach_fixtures(report, fx);
        return run_padic_volume(pp, n, m, pval, punit, pvlevel, report);
      }

      if (pweights.empty()) throw UsageError("--weights is required");
      WeightList rho = admissible_weights(parse_weight_lists(pweights));
      std::vector<PAdicCharacter> theta;
      if (!padic->got_subcommand(pmellin) && !is_basic) {
        if (pp < 2) throw UsageError("--p must be a prime");
        theta = build_characters(pp, rho.rank, punram, pcond, pexp);
      }

      if (*pgamma) {
        RunReport report("padic gamma", GAMMALIFT_VERSION);
        OscillatoryParams params;
        if (pradius > 0) params.radius = pradius;
        else if (fx.radius) params.radius = *fx.radius;
        if (plevel_oracle > 0) params.unit_level = plevel_oracle;
        else if (fx.unit_level) params.unit_level = *fx.unit_level;
        report.parameters()["p"] = pp;
        report.parameters()["weights"] = weights_json(rho.weights);
        report.parameters()["s"] = ps;
        report.parameters()["radius"] = params.radius;
        report.parameters()["level"] = params.unit_level;
        ordered_json chars = ordered_json::array();
        for (const auto& chi : theta) chars.push_back(character_json(chi));
        report.parameters()["theta"] = chars;
        attach_fixtures(report, fx);
        std::complex<double> s = parse_complex(ps);
        try {
          return run_padic_gamma(pp, rho, theta, s, params, report);
        } catch (const std::domain_error& e) {
          throw UsageError(e.what());
        }
      }
      if (*pL) {
        RunReport report("padic L", GAMMALIFT_VERSION);
        report.parameters()["p"] = pp;
        report.parameters()["weights"] = weights_json(rho.weights);
        attach_fixtures(report, fx);
        return run_padic_L(pp, rho, theta, report);
      }
      if (*plift) {
        RunReport report("padic lift", GAMMALIFT_VERSION);
        report.parameters()["p"] = pp;
        report.parameters()["weights"] = weights_json(rho.weights);
        attach_fixtures(report, fx);
        return run_padic_lift(pp, rho, theta, report);
      }
      if (*pmellin) {
        RunReport report("padic mellin", GAMMALIFT_VERSION);
        report.parameters()["weights"] = weights_json(rho.weights);
        if (!ppoints.empty()) report.parameters()["points"] = ppoints;
        report.parameters()["plain"] = pplain;
        attach_fixtures(report, fx);
        return run_padic_mellin(rho, ppoints, pplain, report);
      }
      if (*pbasic) {
        RunReport report("padic basic", GAMMALIFT_VERSION);
        report.parameters()["weights"] = weights_json(rho.weights);
        report.parameters()["degree"] = pdegree;
        attach_fixtures(report, fx);
        try {
          return run_padic_basic(rho, pdegree, prank, format, report);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      throw UsageError("unknown padic subcommand");
    }

    if (*crystal) {
      if (format == "tsv") throw UsageError("tsv output is only available for tables");
      RunReport report("crystal", GAMMALIFT_VERSION);
      report.parameters()["m"] = cm;
      report.parameters()["n"] = cn;
      if (!csymbolic) {
        report.parameters()["trials"] = ctrials;
        report.parameters()["seed"] = cseed;
      }
      report.parameters()["symbolic"] = csymbolic;
      attach_fixtures(report, fx);
      return run_crystal(cm, cn, ctrials, cseed, csymbolic, report);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "gammalift/char_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gammalift {

namespace {

std::string format_label(const char* head, const std::vector<long>& params) {
  std::ostringstream os;
  os << head << "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ",";
    os << params[i];
  }
  os << ")";
  return os.str();
}

// canonical parameter form: split/principal pairs sorted, elliptic/cuspidal
// exponents replaced by the least element of their Frobenius orbit {e, qe}
std::vector<long> canonical_params(ClassKind kind, std::vector<long> params, long q) {
  long M = q * q - 1;
  switch (kind) {
    case ClassKind::Central:
    case ClassKind::Unipotent:
      params[0] = ((params[0] % (q - 1)) + (q - 1)) % (q - 1);
      break;
    case ClassKind::Split:
      for (auto& a : params) a = ((a % (q - 1)) + (q - 1)) % (q - 1);
      std::sort(params.begin(), params.end());
      break;
    case ClassKind::Elliptic:
      params[0] = ((params[0] % M) + M) % M;
      params[0] = std::min(params[0], params[0] * q % M);
      break;
    case ClassKind::Generic:
      break;
  }
  return params;
}

ClassKind class_kind_for(IrrepKind kind) {
  switch (kind) {
    case IrrepKind::Linear: return ClassKind::Central;
    case IrrepKind::SteinbergTwist: return ClassKind::Unipotent;
    case IrrepKind::PrincipalSeries: return ClassKind::Split;
    case IrrepKind::Cuspidal: return ClassKind::Elliptic;
    case IrrepKind::Generic: return ClassKind::Generic;
  }
  throw std::logic_error("unreachable");
}

} // namespace

int CharacterTable::class_index(ClassKind kind, std::vector<long> params) const {
  params = canonical_params(kind, std::move(params), q);
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].kind == kind && classes[i].params == params) return static_cast<int>(i);
  return -1;
}

int CharacterTable::irrep_index(IrrepKind kind, std::vector<long> params) const {
  params = canonical_params(class_kind_for(kind), std::move(params), q);
  for (size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].kind == kind && irreps[i].params == params) return static_cast<int>(i);
  return -1;
}

long CharacterTable::sum_dim_squares() const {
  long s = 0;
  for (const auto& r : irreps) s += r.dim * r.dim;
  return s;
}

CharacterTable gl1_character_table(long q) {
  AdditiveCharacter probe(q); // validates that q is a prime power
  CharacterTable T;
  T.group_label = "GL(1," + std::to_string(q) + ")";
  T.q = q;
  T.n = 1;
  T.group_order = q - 1;
  T.ambient = &FiniteField::get(probe.p, probe.f);
  FiniteFieldElement h = T.ambient->generator();
  for (long a = 0; a < q - 1; ++a) {
    ConjClass c;
    c.kind = ClassKind::Central;
    c.params = {a};
    c.size = 1;
    c.trace = h.pow(a);
    c.det = c.trace;
    c.label = format_label("z", c.params);
    T.classes.push_back(c);
  }
  for (long alpha = 0; alpha < q - 1; ++alpha) {
    Irrep r;
    r.kind = IrrepKind::Linear;
    r.params = {alpha};
    r.dim = 1;
    r.label = format_label("U", r.params);
    T.irreps.push_back(r);
    std::vector<CyclotomicNumber> row;
    for (long a = 0; a < q - 1; ++a)
      row.push_back(CyclotomicNumber::root_of_unity(q - 1, alpha * a));
    T.values.push_back(std::move(row));
  }
  return T;
}

CharacterTable gl2_character_table(long q) {
  AdditiveCharacter probe(q);
  if (probe.p == 2 || q < 3 || q > 9)
    throw std::domain_error("gl2 table: q must be an odd prime power with 3 <= q <= 9");
  long Qm = q - 1, M = q * q - 1;

  CharacterTable T;
  T.group_label = "GL(2," + std::to_string(q) + ")";
  T.q = q;
  T.n = 2;
  T.group_order = (q * q - 1) * (q * q - q);
  T.ambient = &FiniteField::get(probe.p, 2 * probe.f);
  FiniteFieldElement G = T.ambient->generator();
  FiniteFieldElement h = G.pow(q + 1); // generator of the F_q^* subgroup

  // classes
  for (long a = 0; a < Qm; ++a) {
    ConjClass c;
    c.kind = ClassKind::Central;
    c.params = {a};
    c.size = 1;
    c.trace = h.pow(a) + h.pow(a);
    c.det = h.pow(2 * a);
    c.label = format_label("z", c.params);
    T.classes.push_back(c);
  }
  for (long a = 0; a < Qm; ++a) {
    ConjClass c;
    c.kind = ClassKind::Unipotent;
    c.params = {a};
    c.size = q * q - 1;
    c.trace = h.pow(a) + h.pow(a);
    c.det = h.pow(2 * a);
    c.label = format_label("u", c.params);
    T.classes.push_back(c);
  }
  for (long a = 0; a < Qm; ++a)
    for (long b = a + 1; b < Qm; ++b) {
      ConjClass c;
      c.kind = ClassKind::Split;
      c.params = {a, b};
      c.size = q * (q + 1);
      c.trace = h.pow(a) + h.pow(b);
      c.det = h.pow(a + b);
      c.label = format_label("s", c.params);
      T.classes.push_back(c);
    }
  for (long m = 0; m < M; ++m) {
    if (m % (q + 1) == 0) continue;  // eigenvalue would lie in F_q
    if (m * q % M < m) continue;     // one class per Frobenius orbit {m, qm}
    ConjClass c;
    c.kind = ClassKind::Elliptic;
    c.params = {m};
    c.size = q * q - q;
    FiniteFieldElement x = G.pow(m);
    c.trace = x + x.frobenius(probe.f);
    c.det = x.pow(1 + q);
    c.label = format_label("ell", c.params);
    T.classes.push_back(c);
  }

  auto zq = [&](long k) { return CyclotomicNumber::root_of_unity(Qm, k); };
  auto zM = [&](long k) { return CyclotomicNumber::root_of_unity(M, k); };

  // irreducibles; the value on each class follows the classical table
  auto push = [&](Irrep r, std::vector<CyclotomicNumber> row) {
    T.irreps.push_back(std::move(r));
    T.values.push_back(std::move(row));
  };
  for (long alpha = 0; alpha < Qm; ++alpha) {
    std::vector<CyclotomicNumber> lin, st;
    for (const auto& c : T.classes) {
      switch (c.kind) {
        case ClassKind::Central: {
          auto v = zq(2 * alpha * c.params[0]);
          lin.push_back(v);
          st.push_back(v.scaled(BigRational(q)));
          break;
        }
        case ClassKind::Unipotent:
          lin.push_back(zq(2 * alpha * c.params[0]));
          st.push_back(CyclotomicNumber(0));
          break;
        case ClassKind::Split: {
          auto v = zq(alpha * (c.params[0] + c.params[1]));
          lin.push_back(v);
          st.push_back(v);
          break;
        }
        case ClassKind::Elliptic: {
          // det of the representative is the norm G^{m(q+1)} = h^m
          auto v = zq(alpha * c.params[0]);
          lin.push_back(v);
          st.push_back(-v);
          break;
        }
      }
    }
    push({IrrepKind::Linear, {alpha}, 1, format_label("U", {alpha})}, std::move(lin));
    push({IrrepKind::SteinbergTwist, {alpha}, q, format_label("V", {alpha})}, std::move(st));
  }
  for (long alpha = 0; alpha < Qm; ++alpha)
    for (long beta = alpha + 1; beta < Qm; ++beta) {
      std::vector<CyclotomicNumber> row;
      for (const auto& c : T.classes) {
        switch (c.kind) {
          case ClassKind::Central:
            row.push_back(zq((alpha + beta) * c.params[0]).scaled(BigRational(q + 1)));
            break;
          case ClassKind::Unipotent:
            row.push_back(zq((alpha + beta) * c.params[0]));
            break;
          case ClassKind::Split: {
            long a = c.params[0], b = c.params[1];
            row.push_back(zq(alpha * a + beta * b) + zq(alpha * b + beta * a));
            break;
          }
          case ClassKind::Elliptic:
            row.push_back(CyclotomicNumber(0));
            break;
        }
      }
      push({IrrepKind::PrincipalSeries, {alpha, beta}, q + 1, format_label("W", {alpha, beta})},
           std::move(row));
    }
  for (long e = 0; e < M; ++e) {
    if (e % (q + 1) == 0) continue; // factors through the norm, not cuspidal
    if (e * q % M < e) continue;
    std::vector<CyclotomicNumber> row;
    for (const auto& c : T.classes) {
      switch (c.kind) {
        case ClassKind::Central:
          // the central element h^a is G^{(q+1)a}
          row.push_back(zM(e * (q + 1) % M * c.params[0]).scaled(BigRational(q - 1)));
          break;
        case ClassKind::Unipotent:
          row.push_back(-zM(e * (q + 1) % M * c.params[0]));
          break;
        case ClassKind::Split:
          row.push_back(CyclotomicNumber(0));
          break;
        case ClassKind::Elliptic: {
          long m = c.params[0];
          row.push_back(-(zM(e * m % M) + zM(e * (m * q % M) % M)));
          break;
        }
      }
    }
    push({IrrepKind::Cuspidal, {e}, q - 1, format_label("X", {e})}, std::move(row));
  }
  return T;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& T) {
  OrthogonalityReport rep;
  size_t nc = T.classes.size(), ni = T.irreps.size();
  std::vector<std::vector<CyclotomicNumber>> conj(ni, std::vector<CyclotomicNumber>(nc));
  for (size_t i = 0; i < ni; ++i)
    for (size_t c = 0; c < nc; ++c) conj[i][c] = T.values[i][c].conjugate();

  for (size_t i = 0; i < ni; ++i)
    for (size_t j = i; j < ni; ++j) {
      CyclotomicNumber s(0);
      for (size_t c = 0; c < nc; ++c)
        s += (T.values[i][c] * conj[j][c]).scaled(BigRational(T.classes[c].size));
      CyclotomicNumber want(i == j ? BigRational(T.group_order) : BigRational(0));
      ++rep.row_checks;
      if (!(s == want))
        rep.failures.push_back("row " + T.irreps[i].label + " x " + T.irreps[j].label + " = " +
                               s.str());
    }
  for (size_t c = 0; c < nc; ++c)
    for (size_t d = c; d < nc; ++d) {
      CyclotomicNumber s(0);
      for (size_t i = 0; i < ni; ++i) s += T.values[i][c] * conj[i][d];
      CyclotomicNumber want(c == d ? BigRational(T.group_order) / BigRational(T.classes[c].size)
                                   : BigRational(0));
      ++rep.column_checks;
      if (!(s == want))
        rep.failures.push_back("column " + T.classes[c].label + " x " + T.classes[d].label +
                               " = " + s.str());
    }
  return rep;
}

GammaValue group_gamma(const CharacterTable& T, int irrep, const AdditiveCharacter& psi) {
  if (irrep < 0 || irrep >= static_cast<int>(T.irreps.size()))
    throw std::invalid_argument("group gamma: irreducible index out of range");
  if (psi.q != T.q)
    throw std::invalid_argument("group gamma: additive character over a different field");
  long dim = T.irreps[irrep].dim;
  if (dim == 0) throw std::domain_error("group gamma: zero-dimensional row");
  CyclotomicNumber s(0);
  for (size_t c = 0; c < T.classes.size(); ++c) {
    long e = psi.exponent_at(T.classes[c].trace);
    s += (T.values[irrep][c] * CyclotomicNumber::root_of_unity(psi.p, e))
             .scaled(BigRational(T.classes[c].size));
  }
  s = s.scaled(BigRational(1) / BigRational(dim));
  if (T.n % 2 != 0) s = -s;
  GammaValue g;
  g.q = T.q;
  g.cyc = std::move(s);
  g.q_half_power = -static_cast<long>(T.n) * T.n;
  return g;
}

CentralFunction central_function_from_gamma(const CharacterTable& T,
                                            const std::vector<GammaValue>& gamma) {
  if (gamma.size() != T.irreps.size())
    throw std::invalid_argument("central function: one gamma per irreducible");
  long kmin = 0;
  bool first = true;
  for (const auto& g : gamma) {
    if (g.q != T.q) throw std::invalid_argument("central function: gamma over a different q");
    if (first) {
      kmin = g.q_half_power;
      first = false;
    } else {
      if ((g.q_half_power - kmin) % 2 != 0)
        throw std::invalid_argument("central function: half-power parity mismatch");
      kmin = std::min(kmin, g.q_half_power);
    }
  }
  CentralFunction phi;
  phi.q = T.q;
  phi.q_half_power = kmin;
  for (size_t c = 0; c < T.classes.size(); ++c) {
    CyclotomicNumber s(0);
    for (size_t i = 0; i < T.irreps.size(); ++i) {
      // chi(C^{-1}) is the complex conjugate of chi(C)
      CyclotomicNumber cyc = gamma[i].cyc.scaled(
          BigRational(T.q).pow((gamma[i].q_half_power - kmin) / 2));
      s += (cyc * T.values[i][c].conjugate()).scaled(BigRational(T.irreps[i].dim));
    }
    phi.values.push_back(s.scaled(BigRational(1) / BigRational(T.group_order)));
  }
  return phi;
}

GammaValue gamma_from_central_function(const CharacterTable& T, const CentralFunction& phi,
                                       int irrep) {
  if (phi.q != T.q) throw std::invalid_argument("central function: q mismatch");
  if (phi.values.size() != T.classes.size())
    throw std::invalid_argument("central function: one value per class");
  if (irrep < 0 || irrep >= static_cast<int>(T.irreps.size()))
    throw std::invalid_argument("central function: irreducible index out of range");
  CyclotomicNumber s(0);
  for (size_t c = 0; c < T.classes.size(); ++c)
    s += (phi.values[c] * T.values[irrep][c]).scaled(BigRational(T.classes[c].size));
  GammaValue g;
  g.q = T.q;
  g.cyc = s.scaled(BigRational(1) / BigRational(T.irreps[irrep].dim));
  g.q_half_power = phi.q_half_power;
  return g;
}

} // namespace gammalift

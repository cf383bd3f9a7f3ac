#include "gammalift/dixon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gammalift {

namespace {

long mod_pow(long b, long e, long m) {
  long r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long m) { return mod_pow(((a % m) + m) % m, m - 2, m); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// reduce rows to echelon form mod ell in place; returns pivot columns
std::vector<int> echelon(std::vector<std::vector<long>>& rows, long ell) {
  std::vector<int> pivots;
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    long inv = mod_inv(rows[r][c], ell);
    for (size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * inv % ell;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      long f = rows[i][c];
      for (size_t j = c; j < cols; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[r][j]) % ell + ell) % ell;
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// basis of the nullspace of m (given by rows) mod ell
std::vector<std::vector<long>> nullspace(std::vector<std::vector<long>> m, long ell, size_t cols) {
  auto pivots = echelon(m, ell);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<long>> basis;
  for (size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<long> v(cols, 0);
    v[freec] = 1;
    for (size_t r = 0; r < m.size(); ++r) {
      int pc = pivots[r];
      v[pc] = ((-m[r][freec]) % ell + ell) % ell;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

struct GroupData {
  long n = 0;
  std::vector<int> inverse;
  std::vector<int> class_of;              // element -> class id
  std::vector<std::vector<int>> classes;  // class id -> sorted element list
  std::vector<int> rep;                   // class id -> least element
  std::vector<long> elt_order;
};

GroupData analyze(const FiniteGroup& G) {
  long n = G.order();
  if (n == 0 || n > 500) throw std::domain_error("class-sum method: order must be in [1, 500]");
  for (const auto& row : G.mult) {
    if (static_cast<long>(row.size()) != n)
      throw std::domain_error("class-sum method: multiplication table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::domain_error("class-sum method: product out of range");
  }
  for (long i = 0; i < n; ++i)
    if (G.mult[0][i] != i || G.mult[i][0] != i)
      throw std::domain_error("class-sum method: index 0 is not an identity");
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        if (G.mult[G.mult[i][j]][k] != G.mult[i][G.mult[j][k]])
          throw std::domain_error("class-sum method: multiplication is not associative");

  GroupData D;
  D.n = n;
  D.inverse.assign(n, -1);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (G.mult[i][j] == 0) D.inverse[i] = static_cast<int>(j);
  for (long i = 0; i < n; ++i)
    if (D.inverse[i] < 0) throw std::domain_error("class-sum method: missing inverse");

  D.class_of.assign(n, -1);
  for (long x = 0; x < n; ++x) {
    if (D.class_of[x] >= 0) continue;
    int id = static_cast<int>(D.classes.size());
    std::vector<int> members;
    for (long g = 0; g < n; ++g) {
      int y = G.mult[G.mult[g][x]][D.inverse[g]];
      if (D.class_of[y] < 0) {
        D.class_of[y] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    D.classes.push_back(members);
    D.rep.push_back(members.front());
  }

  D.elt_order.assign(n, 1);
  for (long x = 0; x < n; ++x) {
    long o = 1;
    int y = static_cast<int>(x);
    while (y != 0) {
      y = G.mult[y][x];
      ++o;
    }
    D.elt_order[x] = o;
  }
  return D;
}

} // namespace

CharacterTable dixon_character_table(const FiniteGroup& G) {
  GroupData D = analyze(G);
  long n = D.n;
  int k = static_cast<int>(D.classes.size());

  long expo = 1;
  for (long x = 0; x < n; ++x) expo = std::lcm(expo, D.elt_order[x]);
  long ell = expo + 1;
  while (!is_prime(ell) || ell * ell <= 4 * n) ell += expo;

  // fixed generator of F_ell^*: all roots of unity below are its powers, so
  // the mod-ell reduction is one consistent ring homomorphism
  long z = 2;
  while (true) {
    bool ok = true;
    for (long d = 2; d * d <= ell - 1; ++d)
      if ((ell - 1) % d == 0 &&
          (mod_pow(z, d, ell) == 1 || mod_pow(z, (ell - 1) / d, ell) == 1)) {
        ok = false;
        break;
      }
    if (ok && mod_pow(z, ell - 1, ell) == 1 && mod_pow(z, 1, ell) != 1) break;
    ++z;
  }

  // class multiplication coefficients: A[i][j][kk] = #{x in C_i : x^{-1} z_kk in C_j}
  std::vector<std::vector<std::vector<long>>> A(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int kk = 0; kk < k; ++kk)
      for (int x : D.classes[i]) {
        int j = D.class_of[G.mult[D.inverse[x]][D.rep[kk]]];
        // x * y = z_kk with y = x^{-1} z_kk, so this x contributes to a_{i j kk}
        A[i][j][kk] += 1;
      }

  // split the class-function space into common eigenvectors of all A_i
  std::vector<std::vector<std::vector<long>>> spaces;
  {
    std::vector<std::vector<long>> full;
    for (int i = 0; i < k; ++i) {
      std::vector<long> e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<std::vector<long>>> next;
    for (auto& S : spaces) {
      if (S.size() == 1) {
        next.push_back(std::move(S));
        continue;
      }
      size_t m = S.size();
      // put the basis in reduced echelon form so coordinates can be read off
      // at the pivot columns, then express A_i on it
      auto pivots = echelon(S, ell);
      if (pivots.size() != m) throw std::logic_error("class-sum method: dependent basis");
      std::vector<std::vector<long>> B(m, std::vector<long>(m, 0));
      for (size_t c = 0; c < m; ++c) {
        std::vector<long> w(k, 0);
        for (int col = 0; col < k; ++col) {
          if (S[c][col] == 0) continue;
          for (int row = 0; row < k; ++row)
            w[row] = (w[row] + A[i][row][col] % ell * (S[c][col] % ell)) % ell;
        }
        // peel w against the reduced basis; invariance means nothing remains
        for (size_t r = 0; r < m; ++r) {
          long f = w[pivots[r]] % ell;
          B[r][c] = f;
          if (f == 0) continue;
          for (int col = 0; col < k; ++col)
            w[col] = ((w[col] - f * S[r][col]) % ell + ell) % ell;
        }
        for (int col = 0; col < k; ++col)
          if (w[col] % ell != 0) throw std::logic_error("class-sum method: subspace not invariant");
      }
      bool split_any = false;
      std::vector<std::vector<std::vector<long>>> parts;
      for (long lam = 0; lam < ell; ++lam) {
        std::vector<std::vector<long>> BmL = B;
        for (size_t d = 0; d < m; ++d) BmL[d][d] = ((BmL[d][d] - lam) % ell + ell) % ell;
        auto null_b = nullspace(std::move(BmL), ell, m);
        if (null_b.empty()) continue;
        std::vector<std::vector<long>> sub;
        for (auto& coeffs : null_b) {
          std::vector<long> v(k, 0);
          for (size_t r = 0; r < m; ++r) {
            if (coeffs[r] == 0) continue;
            for (int col = 0; col < k; ++col)
              v[col] = (v[col] + coeffs[r] * S[r][col]) % ell;
          }
          sub.push_back(std::move(v));
        }
        if (sub.size() < m) split_any = true;
        parts.push_back(std::move(sub));
      }
      if (!split_any) {
        next.push_back(std::move(S));
      } else {
        for (auto& p : parts) next.push_back(std::move(p));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k)
    throw std::logic_error("class-sum method: eigenspace count mismatch");

  int id_class = D.class_of[0];
  std::vector<long> csize(k);
  for (int j = 0; j < k; ++j) csize[j] = static_cast<long>(D.classes[j].size());
  std::vector<int> inv_class(k);
  for (int j = 0; j < k; ++j) inv_class[j] = D.class_of[D.inverse[D.rep[j]]];

  CharacterTable T;
  T.group_label = G.label;
  T.n = 0;
  T.group_order = n;
  if (!G.traces.empty()) {
    T.ambient = &G.traces[0].field();
    T.q = T.ambient->size();
  }
  for (int j = 0; j < k; ++j) {
    ConjClass c;
    c.kind = ClassKind::Generic;
    c.params = {j};
    c.size = csize[j];
    if (!G.traces.empty()) c.trace = G.traces[D.rep[j]];
    if (!G.dets.empty()) c.det = G.dets[D.rep[j]];
    std::ostringstream os;
    os << "C" << j << "(" << D.elt_order[D.rep[j]] << ")";
    c.label = os.str();
    T.classes.push_back(std::move(c));
  }

  for (int s = 0; s < k; ++s) {
    if (spaces[s].size() != 1) throw std::logic_error("class-sum method: space not a line");
    std::vector<long>& v = spaces[s][0];
    if (v[id_class] % ell == 0) throw std::logic_error("class-sum method: vanishing at identity");
    long scale = mod_inv(v[id_class], ell);
    std::vector<long> omega(k);
    for (int j = 0; j < k; ++j) omega[j] = v[j] % ell * scale % ell;

    long denom = 0;
    for (int j = 0; j < k; ++j)
      denom = (denom + omega[j] * omega[inv_class[j]] % ell * mod_inv(csize[j], ell)) % ell;
    if (denom == 0) throw std::logic_error("class-sum method: degenerate norm");
    long d2 = n % ell * mod_inv(denom, ell) % ell;
    long dim = -1;
    for (long d = 1; d * d <= n; ++d)
      if (d * d % ell == d2) {
        dim = d;
        break;
      }
    if (dim < 0) throw std::logic_error("class-sum method: no integral degree");

    std::vector<long> chi(k); // value mod ell on each class
    for (int j = 0; j < k; ++j) chi[j] = dim % ell * omega[j] % ell * mod_inv(csize[j], ell) % ell;

    std::vector<CyclotomicNumber> row(k);
    for (int j = 0; j < k; ++j) {
      long og = D.elt_order[D.rep[j]];
      long eta = mod_pow(z, (ell - 1) / og, ell);
      std::vector<long> eta_pow(og);
      eta_pow[0] = 1;
      for (long t = 1; t < og; ++t) eta_pow[t] = eta_pow[t - 1] * eta % ell;
      CyclotomicNumber val(0);
      long mu_total = 0;
      for (long mexp = 0; mexp < og; ++mexp) {
        long mu = 0;
        int g = D.rep[j];
        int y = 0; // g^s
        for (long sexp = 0; sexp < og; ++sexp) {
          long c_s = chi[D.class_of[y]];
          long em = eta_pow[(og - mexp) * sexp % og];
          mu = (mu + c_s * em) % ell;
          y = G.mult[y][g];
        }
        mu = mu * mod_inv(og % ell, ell) % ell;
        if (mu > dim)
          throw std::logic_error("class-sum method: multiplicity lift out of range");
        mu_total += mu;
        if (mu != 0)
          val += CyclotomicNumber::root_of_unity(og, mexp).scaled(BigRational(mu));
      }
      if (mu_total != dim)
        throw std::logic_error("class-sum method: eigenvalue multiplicities do not sum to the degree");
      row[j] = std::move(val);
    }

    Irrep r;
    r.kind = IrrepKind::Generic;
    r.params = {s};
    r.dim = dim;
    r.label = "chi" + std::to_string(s);
    T.irreps.push_back(std::move(r));
    T.values.push_back(std::move(row));
  }
  return T;
}

namespace {

long prime_field_value(const FiniteFieldElement& x) {
  if (x.coords().empty())
    throw std::invalid_argument("table match: class invariant missing");
  for (size_t i = 1; i < x.coords().size(); ++i)
    if (x.coords()[i] != 0)
      throw std::invalid_argument("table match: class invariant not in the prime field");
  return x.coords()[0];
}

} // namespace

bool tables_match_up_to_permutation(const CharacterTable& A, const CharacterTable& B) {
  if (A.group_order != B.group_order) return false;
  if (A.classes.size() != B.classes.size()) return false;
  if (A.irreps.size() != B.irreps.size()) return false;

  using Key = std::tuple<long, long, long>;
  auto keys_of = [](const CharacterTable& T) {
    std::map<Key, int> m;
    for (size_t c = 0; c < T.classes.size(); ++c) {
      Key key{T.classes[c].size, prime_field_value(T.classes[c].trace),
              prime_field_value(T.classes[c].det)};
      if (!m.emplace(key, static_cast<int>(c)).second)
        throw std::invalid_argument("table match: class key (size, trace, det) not unique");
    }
    return m;
  };
  auto ka = keys_of(A), kb = keys_of(B);

  std::vector<int> to_b(A.classes.size(), -1);
  for (const auto& [key, ia] : ka) {
    auto it = kb.find(key);
    if (it == kb.end()) return false;
    to_b[ia] = it->second;
  }

  std::vector<bool> used(B.irreps.size(), false);
  for (size_t i = 0; i < A.irreps.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < B.irreps.size() && !found; ++j) {
      if (used[j] || A.irreps[i].dim != B.irreps[j].dim) continue;
      bool same = true;
      for (size_t c = 0; c < A.classes.size() && same; ++c)
        same = A.values[i][c] == B.values[j][to_b[c]];
      if (same) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::domain_error("cyclic group: order must be positive");
  FiniteGroup G;
  G.label = "C" + std::to_string(n);
  G.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G.mult[i][j] = (i + j) % n;
  return G;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw std::domain_error("symmetric group: n must be in [1, 5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // lexicographic enumeration starts at the identity
  FiniteGroup G;
  G.label = "S" + std::to_string(n);
  int N = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[perms[i]] = i;
  G.mult.assign(N, std::vector<int>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      G.mult[i][j] = index[comp];
    }
  return G;
}

FiniteGroup gl2_group(long q) {
  AdditiveCharacter probe(q);
  long order = (q * q - 1) * (q * q - q);
  if (order > 500) throw std::domain_error("gl2 group: order exceeds the class-sum bound");
  const FiniteField& F = FiniteField::get(probe.p, probe.f);

  struct Mat {
    long a, b, c, d;
  };
  std::vector<Mat> elems;
  std::vector<int> id_of(q * q * q * q, -1);
  auto code = [&](const Mat& m) { return ((m.a * q + m.b) * q + m.c) * q + m.d; };
  std::vector<FiniteFieldElement> fel;
  for (long t = 0; t < q; ++t) fel.push_back(F.from_index(t));
  auto fe = [&](long idx) -> const FiniteFieldElement& { return fel[idx]; };
  // identity first, then enumeration order
  elems.push_back({1, 0, 0, 1});
  id_of[code(elems[0])] = 0;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d) {
          Mat m{a, b, c, d};
          if (id_of[code(m)] >= 0) continue;
          if ((fe(a) * fe(d) - fe(b) * fe(c)).is_zero()) continue;
          id_of[code(m)] = static_cast<int>(elems.size());
          elems.push_back(m);
        }
  if (static_cast<long>(elems.size()) != order)
    throw std::logic_error("gl2 group: enumeration miscount");

  FiniteGroup G;
  G.label = "GL(2," + std::to_string(q) + ")";
  int N = static_cast<int>(order);
  G.mult.assign(N, std::vector<int>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Mat &x = elems[i], &y = elems[j];
      Mat m{(fe(x.a) * fe(y.a) + fe(x.b) * fe(y.c)).index(),
            (fe(x.a) * fe(y.b) + fe(x.b) * fe(y.d)).index(),
            (fe(x.c) * fe(y.a) + fe(x.d) * fe(y.c)).index(),
            (fe(x.c) * fe(y.b) + fe(x.d) * fe(y.d)).index()};
      G.mult[i][j] = id_of[code(m)];
    }
  for (int i = 0; i < N; ++i) {
    G.traces.push_back(fe(elems[i].a) + fe(elems[i].d));
    G.dets.push_back(fe(elems[i].a) * fe(elems[i].d) - fe(elems[i].b) * fe(elems[i].c));
  }
  return G;
}

} // namespace gammalift

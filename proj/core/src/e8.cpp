#include "octe8/e8.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace octe8 {
namespace {

const char* kLowerNames[8] = {"1", "i", "j", "k", "kl", "jl", "il", "l"};
const char* kUpperNames[8] = {"1", "I", "J", "K", "KL", "JL", "IL", "L"};

int conj_sign(int tidx) {
  int s = 1;
  if (tidx >> 3) s = -s;
  if (tidx & 7) s = -s;
  return s;
}

AlgebraPair make_pair_spec(PairKind k) {
  switch (k) {
    case PairKind::OO:
      return {AlgebraSpec::full(AlgKind::Octonion),
              AlgebraSpec::full(AlgKind::Octonion)};
    case PairKind::SplitO:
      return {AlgebraSpec::full(AlgKind::SplitOctonion),
              AlgebraSpec::full(AlgKind::Octonion)};
    case PairKind::SplitSplit:
      return {AlgebraSpec::full(AlgKind::SplitOctonion),
              AlgebraSpec::full(AlgKind::SplitOctonion)};
  }
  throw error("bad pair kind");
}

// 8x8 right multiplication operator on a single algebra.
RatMatrix right_mult8(const AlgElem& a) {
  RatMatrix m(8, 8);
  for (int j = 0; j < 8; ++j) {
    AlgElem col = mul(alg_unit(AlgebraSpec{a.spec.kind, 0xff}, j), a);
    for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

RatMatrix comm8(const RatMatrix& a, const RatMatrix& b) {
  return a * b - b * a;
}

// Derivation of a composition algebra attached to an ordered unit pair,
// normalized so that (p∘q)·Identity acts by it on every off-diagonal block:
// (1/4)(2[L_p,L_q] + [L_p,R_q] + [R_p,L_q] + 2[R_p,R_q]).
RatMatrix derivation8(const Algebra& alg, int p, int q) {
  AlgebraSpec full{alg.kind(), 0xff};
  RatMatrix Lp = left_mult_operator(alg_unit(full, p));
  RatMatrix Lq = left_mult_operator(alg_unit(full, q));
  RatMatrix Rp = right_mult8(alg_unit(full, p));
  RatMatrix Rq = right_mult8(alg_unit(full, q));
  RatMatrix d = comm8(Lp, Lq);
  d *= rat(2);
  d += comm8(Lp, Rq);
  d += comm8(Rp, Lq);
  RatMatrix rr = comm8(Rp, Rq);
  rr *= rat(2);
  d += rr;
  d *= rat(1, 4);
  // In an alternative algebra this equals the Schafer form
  // (1/2)([L,L] + [L,R] + [R,R]); both tables satisfy it.
  RatMatrix schafer = comm8(Lp, Lq) + comm8(Lp, Rq) + comm8(Rp, Rq);
  schafer *= rat(1, 2);
  if (!(schafer == d)) throw error("derivation forms disagree");
  return d;
}

// The conventional normalizations of the nested families, resolved once on
// the split octonions: the G orientation is anchored to
// [G_{K+}, I+ X] = 2 J- X, the G_L orientation to the K+KL eigenvalue +4,
// and A_L to its full action row. The same coefficients are applied to both
// tensor factors of every pair.
struct NestedConventions {
  Rat g_sign;
  Rat gl_sign;
  Rat a7[3];  // coefficients on d(il,i), d(jl,j), d(kl,k)
};

std::vector<Rat> mat_col(const RatMatrix& m, int j) {
  std::vector<Rat> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

const NestedConventions& nested_conventions() {
  static const NestedConventions conv = [] {
    NestedConventions c;
    const Algebra& sp = Algebra::split_octonions();
    // Candidate G_K + G_KL action (coefficient -2 per unit, halved pair):
    // G_Q = -2 (QL ∘ L) I for Q != L.
    auto g_of = [&](int u) {
      UnitProduct w = sp.unit_product(u, 7);
      RatMatrix d = derivation8(sp, w.index, 7);
      d *= rat(-2 * w.sign);
      return d;
    };
    RatMatrix gkp = g_of(3) + g_of(4);  // 2*G_{K+} up to the probed sign
    gkp *= rat(1, 2);
    // Act on I+ = (I + IL)/2; expect ± 2 J- = ±(J - JL).
    std::vector<Rat> img(8);
    for (int i = 0; i < 8; ++i) img[i] = (gkp.at(i, 1) + gkp.at(i, 6)) / 2;
    std::vector<Rat> want(8);
    want[2] = 1;
    want[5] = -1;
    if (img == want)
      c.g_sign = 1;
    else {
      for (auto& x : want) x = -x;
      if (img != want) throw error("G orientation probe failed");
      c.g_sign = -1;
    }
    // G_L = ± -2 (K ∘ KL) I, anchored to eigenvalue +4 on K+KL.
    RatMatrix gl = derivation8(sp, 3, 4);
    gl *= rat(-2);
    std::vector<Rat> iml(8);
    for (int i = 0; i < 8; ++i) iml[i] = gl.at(i, 3) + gl.at(i, 4);
    std::vector<Rat> wl(8);
    wl[3] = 4;
    wl[4] = 4;
    if (iml == wl)
      c.gl_sign = 1;
    else {
      for (auto& x : wl) x = -x;
      if (iml != wl) throw error("G_L orientation probe failed");
      c.gl_sign = -1;
    }
    // A_L: solve alpha d(IL,I) + beta d(JL,J) + gamma d(KL,K) for the action
    // I -> -2 IL, IL -> -2 I, J -> 2 JL, JL -> 2 J, K, KL, L -> 0.
    RatMatrix d1 = derivation8(sp, 6, 1);
    RatMatrix d2 = derivation8(sp, 5, 2);
    RatMatrix d3 = derivation8(sp, 4, 3);
    RatMatrix target(8, 8);
    target.at(6, 1) = -2;
    target.at(1, 6) = -2;
    target.at(5, 2) = 2;
    target.at(2, 5) = 2;
    RatMatrix sys(64, 3);
    std::vector<Rat> rhs(64);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        sys.at(8 * i + j, 0) = d1.at(i, j);
        sys.at(8 * i + j, 1) = d2.at(i, j);
        sys.at(8 * i + j, 2) = d3.at(i, j);
        rhs[8 * i + j] = target.at(i, j);
      }
    auto sol = solve(sys, rhs);
    if (!sol) throw error("A_L action is not realizable");
    for (int i = 0; i < 3; ++i) c.a7[i] = (*sol)[i];
    return c;
  }();
  return conv;
}

}  // namespace

const char* pair_name(PairKind k) {
  switch (k) {
    case PairKind::OO:
      return "O:O";
    case PairKind::SplitO:
      return "O':O";
    case PairKind::SplitSplit:
      return "O':O'";
  }
  return "?";
}

std::optional<PairKind> pair_from_name(std::string_view name) {
  if (name == "O:O") return PairKind::OO;
  if (name == "O':O") return PairKind::SplitO;
  if (name == "O':O'") return PairKind::SplitSplit;
  return std::nullopt;
}

bool E8Vector::is_zero() const {
  for (const auto& x : c)
    if (!octe8::is_zero(x)) return false;
  return true;
}

std::vector<int> E8Vector::support() const {
  std::vector<int> s;
  for (int i = 0; i < 248; ++i)
    if (!octe8::is_zero(c[i])) s.push_back(i);
  return s;
}

E8Vector& E8Vector::operator+=(const E8Vector& o) {
  for (int i = 0; i < 248; ++i) c[i] += o.c[i];
  return *this;
}

E8Vector& E8Vector::operator-=(const E8Vector& o) {
  for (int i = 0; i < 248; ++i) c[i] -= o.c[i];
  return *this;
}

E8Vector& E8Vector::operator*=(const Rat& s) {
  for (int i = 0; i < 248; ++i) c[i] *= s;
  return *this;
}

const E8Algebra& E8Algebra::get(PairKind kind) {
  static E8Algebra* cache[3] = {nullptr, nullptr, nullptr};
  auto& slot = cache[static_cast<int>(kind)];
  if (!slot) slot = new E8Algebra(kind);
  return *slot;
}

E8Algebra::E8Algebra(PairKind kind) : kind_(kind), pair_(make_pair_spec(kind)) {
  build_basis();
  build_diag_actions();
  build_decomposition_systems();
  build_table();
  if (pair_.left.split() && !pair_.right.split()) verify_split_conventions();
}

void E8Algebra::build_basis() {
  basis_.reserve(kDim);
  for (int fam = 0; fam < 3; ++fam)
    for (int t = 0; t < 64; ++t)
      basis_.push_back({static_cast<BasisFamily>(fam),
                        static_cast<std::uint8_t>(t), 0, 0});
  for (int fam = 3; fam < 7; ++fam)
    for (int side = 0; side < 2; ++side)
      for (int u = 1; u <= 7; ++u)
        basis_.push_back({static_cast<BasisFamily>(fam), 0,
                          static_cast<std::uint8_t>(side),
                          static_cast<std::uint8_t>(u)});
}

std::string E8Algebra::basis_name(int i) const {
  const BasisElement& b = basis_[i];
  static const char* fam = "XYZDSGA";
  std::string out(1, fam[static_cast<int>(b.fam)]);
  out += '[';
  if (b.fam <= BasisFamily::Z) {
    out += kUpperNames[b.tidx >> 3];
    out += '*';
    out += kLowerNames[b.tidx & 7];
  } else {
    out += (b.side ? kUpperNames : kLowerNames)[b.unit];
  }
  out += ']';
  return out;
}

int E8Algebra::basis_index(const BasisElement& b) const {
  if (b.fam <= BasisFamily::Z) return off_index(b.fam, b.tidx);
  return diag_index(b.fam, b.side, b.unit);
}

int E8Algebra::off_index(BasisFamily fam, int tidx) const {
  return static_cast<int>(fam) * 64 + tidx;
}

int E8Algebra::diag_index(BasisFamily fam, int side, int unit) const {
  return 192 + (static_cast<int>(fam) - 3) * 14 + side * 7 + (unit - 1);
}

E8Vector E8Algebra::basis_vector(int i) const {
  E8Vector v;
  v.c[i] = 1;
  return v;
}

void E8Algebra::build_diag_actions() {
  diag_actions_.resize(56);
  std::array<TensorOp, 64> L, R;
  for (int t = 0; t < 64; ++t) {
    TensorElem u = tensor_unit(t >> 3, t & 7);
    L[t] = toperator(pair_, u);
    R[t] = right_mult_op(pair_, u);
  }
  auto tensor_idx = [](int side, int unit) {
    return side ? 8 * unit : unit;
  };
  // Genuine diagonal families first: diag(a1,a2,a3) acts on the X/Y/Z labels
  // by L_{a1}-R_{a2}, L_{a2}-R_{a3}, L_{a3}-R_{a1}.
  for (int side = 0; side < 2; ++side)
    for (int u = 1; u <= 7; ++u) {
      int t = tensor_idx(side, u);
      DiagAction d;  // D_u = diag(u, -u, 0)
      d.slot[0] = L[t] + R[t];
      d.slot[1] = rat(-1) * L[t];
      d.slot[2] = rat(-1) * R[t];
      diag_actions_[diag_index(BasisFamily::D, side, u) - 192] = d;
      DiagAction s;  // S_u = diag(u, u, -2u)
      s.slot[0] = L[t] - R[t];
      s.slot[1] = L[t] + rat(2) * R[t];
      s.slot[2] = rat(-2) * L[t] - R[t];
      diag_actions_[diag_index(BasisFamily::S, side, u) - 192] = s;
    }
  // Nested families: derivations, identical on all three blocks.
  const NestedConventions& conv = nested_conventions();
  auto deriv = [&](int side, int p, int q) {
    int tp = tensor_idx(side, p), tq = tensor_idx(side, q);
    TensorOp d = commutator(L[tp], L[tq]);
    d *= rat(2);
    d += commutator(L[tp], R[tq]);
    d += commutator(R[tp], L[tq]);
    TensorOp rr = commutator(R[tp], R[tq]);
    rr *= rat(2);
    d += rr;
    d *= rat(1, 4);
    return d;
  };
  for (int side = 0; side < 2; ++side) {
    const Algebra& alg =
        side ? pair_.left.algebra() : pair_.right.algebra();
    std::array<TensorOp, 8> g;
    for (int u = 1; u <= 6; ++u) {
      UnitProduct w = alg.unit_product(u, 7);
      g[u] = deriv(side, w.index, 7);
      g[u] *= conv.g_sign * rat(-2 * w.sign);
    }
    g[7] = deriv(side, 3, 4);
    g[7] *= conv.gl_sign * rat(-2);
    for (int u = 1; u <= 7; ++u) {
      DiagAction d;
      d.slot[0] = d.slot[1] = d.slot[2] = g[u];
      diag_actions_[diag_index(BasisFamily::G, side, u) - 192] = d;
    }
    std::array<TensorOp, 8> a;
    if (alg.split()) {
      // The A family on a split factor is pinned by [G_{K±}, G_{I∓}] = 6 A_{J±}
      // and its cyclic permutations; A_L comes from its eigenvalue table.
      auto sixth = [&](const TensorOp& x, const TensorOp& y) {
        TensorOp t = commutator(x, y);
        t *= rat(1, 12);
        return t;
      };
      a[1] = sixth(g[2], g[3]) - sixth(g[5], g[4]);
      a[6] = sixth(g[5], g[3]) - sixth(g[2], g[4]);
      a[2] = sixth(g[3], g[1]) - sixth(g[4], g[6]);
      a[5] = sixth(g[4], g[1]) - sixth(g[3], g[6]);
      a[3] = sixth(g[1], g[2]) - sixth(g[6], g[5]);
      a[4] = sixth(g[6], g[2]) - sixth(g[1], g[5]);
      a[7] = conv.a7[0] * deriv(side, 6, 1) + conv.a7[1] * deriv(side, 5, 2) +
             conv.a7[2] * deriv(side, 4, 3);
    } else {
      // Octonion factor: no null labels exist to pin a convention, so A_r is
      // the canonical complement of G_r inside the two-dimensional space of
      // nested identity multiples. The three derivations oriented so that
      // p q = +r sum to zero; G_r lies along one of them and A_r along the
      // difference of the other two (deterministic lexicographic order).
      for (int r = 1; r <= 7; ++r) {
        std::vector<std::pair<int, int>> pairs;
        for (int p = 1; p <= 7; ++p)
          for (int q = 1; q <= 7; ++q) {
            if (p == q) continue;
            UnitProduct w = alg.unit_product(p, q);
            if (w.index != r || w.sign < 0) continue;
            bool dup = false;
            for (auto& [x, y] : pairs)
              if (x == q && y == p) dup = true;
            if (!dup) pairs.push_back({p, q});
          }
        int gp = 3, gq = 4;
        if (r != 7) {
          gp = alg.unit_product(r, 7).index;
          gq = 7;
        }
        std::vector<std::pair<int, int>> rest;
        for (auto& [x, y] : pairs)
          if (!((x == gp && y == gq) || (x == gq && y == gp)))
            rest.push_back({x, y});
        if (pairs.size() != 3 || rest.size() != 2)
          throw error("nested two-space enumeration is off");
        std::sort(rest.begin(), rest.end());
        a[r] = deriv(side, rest[0].first, rest[0].second);
        a[r] -= deriv(side, rest[1].first, rest[1].second);
        a[r] *= rat(2, 3);
      }
    }
    for (int u = 1; u <= 7; ++u) {
      DiagAction d;
      d.slot[0] = d.slot[1] = d.slot[2] = a[u];
      diag_actions_[diag_index(BasisFamily::A, side, u) - 192] = d;
    }
  }
}

std::vector<std::pair<int, Rat>> E8Algebra::vectorize(const DiagAction& a,
                                                      int slot_mask) const {
  std::vector<std::pair<int, Rat>> out;
  for (int s = 0; s < 3; ++s) {
    if (!((slot_mask >> s) & 1)) continue;
    for (int r = 0; r < 64; ++r)
      for (const auto& e : a.slot[s].row(r))
        out.emplace_back(s * 4096 + r * 64 + e.col, e.val);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void E8Algebra::build_decomposition_systems() {
  diag_cols_.resize(56);
  for (int j = 0; j < 56; ++j) diag_cols_[j] = vectorize(diag_actions_[j], 0b111);

  const int masks[3] = {0b110, 0b101, 0b011};
  for (int sysidx = 0; sysidx < 3; ++sysidx) {
    int mask = masks[sysidx];
    std::vector<int> keys;
    for (int j = 0; j < 56; ++j)
      for (const auto& [k, v] : diag_cols_[j])
        if ((mask >> (k / 4096)) & 1) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    auto value_at = [&](int j, int key) -> Rat {
      const auto& col = diag_cols_[j];
      auto it = std::lower_bound(
          col.begin(), col.end(), key,
          [](const auto& e, int k) { return e.first < k; });
      if (it != col.end() && it->first == key) return it->second;
      return Rat(0);
    };

    // Greedy pivot-row selection by incremental elimination.
    std::vector<std::vector<Rat>> reduced;  // rows in echelon form
    std::vector<int> pivcol;
    PivotSystem& sys = systems_[sysidx];
    for (int key : keys) {
      if (sys.keys.size() == 56) break;
      std::vector<Rat> r(56);
      for (int j = 0; j < 56; ++j) r[j] = value_at(j, key);
      for (size_t t = 0; t < reduced.size(); ++t) {
        if (is_zero(r[pivcol[t]])) continue;
        Rat f = r[pivcol[t]];
        for (int j = 0; j < 56; ++j) r[j] -= f * reduced[t][j];
      }
      int pc = -1;
      for (int j = 0; j < 56; ++j)
        if (!is_zero(r[j])) {
          pc = j;
          break;
        }
      if (pc < 0) continue;
      Rat inv = 1 / r[pc];
      for (int j = 0; j < 56; ++j) r[j] *= inv;
      reduced.push_back(std::move(r));
      pivcol.push_back(pc);
      sys.keys.push_back(key);
    }
    if (sys.keys.size() != 56)
      throw error("diagonal decomposition system is rank-deficient");
    // Invert the 56x56 matrix P with P[r][j] = col_j[key_r].
    RatMatrix aug(56, 112);
    for (int r = 0; r < 56; ++r) {
      for (int j = 0; j < 56; ++j) aug.at(r, j) = value_at(j, sys.keys[r]);
      aug.at(r, 56 + r) = 1;
    }
    // Gauss-Jordan.
    for (int col = 0; col < 56; ++col) {
      int p = -1;
      for (int i = col; i < 56; ++i)
        if (!is_zero(aug.at(i, col))) {
          p = i;
          break;
        }
      if (p < 0) throw error("pivot system singular");
      if (p != col)
        for (int j = 0; j < 112; ++j) std::swap(aug.at(p, j), aug.at(col, j));
      Rat inv = 1 / aug.at(col, col);
      for (int j = 0; j < 112; ++j) aug.at(col, j) *= inv;
      for (int i = 0; i < 56; ++i) {
        if (i == col || is_zero(aug.at(i, col))) continue;
        Rat f = aug.at(i, col);
        for (int j = 0; j < 112; ++j) aug.at(i, j) -= f * aug.at(col, j);
      }
    }
    sys.inverse = RatMatrix(56, 56);
    for (int i = 0; i < 56; ++i)
      for (int j = 0; j < 56; ++j) sys.inverse.at(i, j) = aug.at(i, 56 + j);
  }
}

std::array<Rat, 56> E8Algebra::decompose(const DiagAction& a,
                                         int slot_mask) const {
  int sysidx;
  if ((slot_mask & 0b110) == 0b110)
    sysidx = 0;
  else if ((slot_mask & 0b101) == 0b101)
    sysidx = 1;
  else if ((slot_mask & 0b011) == 0b011)
    sysidx = 2;
  else
    throw error("decomposition needs two action slots");
  const PivotSystem& sys = systems_[sysidx];

  auto action_at = [&](int key) -> Rat {
    int s = key / 4096, r = (key % 4096) / 64, c = key % 64;
    for (const auto& e : a.slot[s].row(r))
      if (e.col == c) return e.val;
    return Rat(0);
  };

  std::array<Rat, 56> b{};
  for (int r = 0; r < 56; ++r) b[r] = action_at(sys.keys[r]);
  std::array<Rat, 56> x{};
  for (int r = 0; r < 56; ++r) {
    if (is_zero(b[r])) continue;
    for (int j = 0; j < 56; ++j) {
      if (is_zero(sys.inverse.at(j, r))) continue;
      x[j] += sys.inverse.at(j, r) * b[r];
    }
  }
  // The residual must vanish identically: closure of the bracket onto the
  // 56-dimensional diagonal space is exactly the structure the construction
  // asserts, so any leftover signals a convention bug.
  std::map<int, Rat> recon;
  for (int j = 0; j < 56; ++j) {
    if (is_zero(x[j])) continue;
    for (const auto& [k, v] : diag_cols_[j]) {
      if (!((slot_mask >> (k / 4096)) & 1)) continue;
      recon[k] += x[j] * v;
    }
  }
  for (int s = 0; s < 3; ++s) {
    if (!((slot_mask >> s) & 1)) continue;
    for (int r = 0; r < 64; ++r)
      for (const auto& e : a.slot[s].row(r))
        recon[s * 4096 + r * 64 + e.col] -= e.val;
  }
  for (const auto& [k, v] : recon)
    if (!is_zero(v)) throw error("nonzero diagonal decomposition residual");
  return x;
}

void E8Algebra::build_table() {
  rows_.assign(kDim * kDim, {});
  std::array<TensorElem, 64> units;
  for (int t = 0; t < 64; ++t) units[t] = tensor_unit(t >> 3, t & 7);
  std::array<TensorOp, 64> L, R;
  for (int t = 0; t < 64; ++t) {
    L[t] = toperator(pair_, units[t]);
    R[t] = right_mult_op(pair_, units[t]);
  }

  auto push_elem = [&](SparseVec& row, BasisFamily fam, const TensorElem& e,
                       const Rat& scale) {
    for (int t = 0; t < 64; ++t) {
      if (is_zero(e.c[t])) continue;
      row.emplace_back(off_index(fam, t), scale * e.c[t]);
    }
  };
  auto finish_row = [](SparseVec& row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  };

  for (int i = 0; i < kDim; ++i) {
    const BasisElement& bi = basis_[i];
    for (int j = i + 1; j < kDim; ++j) {
      const BasisElement& bj = basis_[j];
      SparseVec& out = rows_[i * kDim + j];
      bool i_off = bi.fam <= BasisFamily::Z;
      bool j_off = bj.fam <= BasisFamily::Z;
      if (i_off && j_off) {
        int f1 = static_cast<int>(bi.fam), f2 = static_cast<int>(bj.fam);
        if (f1 == f2) {
          // Same block: the bracket is diagonal; its action on the other two
          // blocks follows from the Jacobi identity through honest brackets.
          int ti = bi.tidx, tj = bj.tidx;
          DiagAction d;
          TensorOp actA = rat(conj_sign(tj)) * compose(L[tj], L[ti]);
          actA -= rat(conj_sign(ti)) * compose(L[ti], L[tj]);
          TensorOp actB = rat(conj_sign(tj)) * compose(R[tj], R[ti]);
          actB -= rat(conj_sign(ti)) * compose(R[ti], R[tj]);
          d.slot[(f1 + 1) % 3] = actA;
          d.slot[(f1 + 2) % 3] = actB;
          auto coeffs = decompose(d, 0b111 ^ (1 << f1));
          for (int k = 0; k < 56; ++k)
            if (!is_zero(coeffs[k])) out.emplace_back(192 + k, coeffs[k]);
        } else {
          // Distinct blocks: honest 3x3 matrix commutator.
          TensorElem p = units[bi.tidx], q = units[bj.tidx];
          if (f2 == (f1 + 1) % 3) {
            TensorElem e = tmul(pair_, tconj(q), tconj(p));
            push_elem(out, static_cast<BasisFamily>((f1 + 2) % 3), e, rat(-1));
          } else {
            TensorElem e = tmul(pair_, tconj(p), tconj(q));
            push_elem(out, static_cast<BasisFamily>((f2 + 2) % 3), e, rat(1));
          }
        }
      } else if (i_off != j_off) {
        // Diagonal x off-diagonal: apply the stored adjoint action.
        const BasisElement& off = i_off ? bi : bj;
        const BasisElement& dia = i_off ? bj : bi;
        const DiagAction& act = diag_actions_[basis_index(dia) - 192];
        int f = static_cast<int>(off.fam);
        TensorElem img = act.slot[f].apply(units[off.tidx]);
        // [off, dia] = -[dia, off]
        push_elem(out, off.fam, img, i_off ? rat(-1) : rat(1));
      } else {
        // Diagonal x diagonal: commutator of the action triples.
        const DiagAction& a = diag_actions_[i - 192];
        const DiagAction& b = diag_actions_[j - 192];
        DiagAction d;
        for (int s = 0; s < 3; ++s) d.slot[s] = commutator(a.slot[s], b.slot[s]);
        auto coeffs = decompose(d, 0b111);
        for (int k = 0; k < 56; ++k)
          if (!is_zero(coeffs[k])) out.emplace_back(192 + k, coeffs[k]);
      }
      finish_row(out);
    }
  }
}

void E8Algebra::bracket_basis_acc(int i, int j, const Rat& coeff,
                                  E8Vector& acc) const {
  if (i == j) return;
  if (i < j) {
    for (const auto& [k, v] : row(i, j)) acc.c[k] += coeff * v;
  } else {
    for (const auto& [k, v] : row(j, i)) acc.c[k] -= coeff * v;
  }
}

E8Vector E8Algebra::bracket(const E8Vector& u, const E8Vector& v) const {
  E8Vector out;
  std::vector<int> su = u.support(), sv = v.support();
  for (int i : su)
    for (int j : sv) {
      if (i == j) continue;
      Rat c = u.c[i] * v.c[j];
      bracket_basis_acc(i, j, c, out);
    }
  return out;
}

const DiagAction& E8Algebra::diag_action(int ordinal) const {
  return diag_actions_[ordinal];
}

RatMatrix E8Algebra::ad_matrix(const E8Vector& u) const {
  RatMatrix m(kDim, kDim);
  std::vector<int> su = u.support();
  for (int j = 0; j < kDim; ++j) {
    E8Vector col;
    for (int i : su) bracket_basis_acc(i, j, u.c[i], col);
    for (int k = 0; k < kDim; ++k)
      if (!is_zero(col.c[k])) m.at(k, j) = col.c[k];
  }
  return m;
}

const RatMatrix& E8Algebra::killing_matrix() const {
  if (killing_) return *killing_;
  // K_ij = sum_{a,b} c_{ib}^a c_{ja}^b, computed as dot products of flattened
  // adjoint matrices.
  std::vector<std::vector<std::pair<int, Rat>>> flat(kDim), tflat(kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int b = 0; b < kDim; ++b) {
      if (i == b) continue;
      if (i < b) {
        for (const auto& [a, v] : row(i, b)) flat[i].push_back({a * kDim + b, v});
      } else {
        for (const auto& [a, v] : row(b, i))
          flat[i].push_back({a * kDim + b, Rat(-v)});
      }
    }
    std::sort(flat[i].begin(), flat[i].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, v] : flat[i]) {
      int a = key / kDim, b = key % kDim;
      tflat[i].push_back({b * kDim + a, v});
    }
    std::sort(tflat[i].begin(), tflat[i].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  RatMatrix K(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      Rat s(0);
      const auto& f = flat[i];
      const auto& g = tflat[j];
      size_t a = 0, b = 0;
      while (a < f.size() && b < g.size()) {
        if (f[a].first < g[b].first)
          ++a;
        else if (f[a].first > g[b].first)
          ++b;
        else {
          s += f[a].second * g[b].second;
          ++a;
          ++b;
        }
      }
      K.at(i, j) = s;
      K.at(j, i) = s;
    }
  killing_ = std::move(K);
  return *killing_;
}

Rat E8Algebra::killing(const E8Vector& u, const E8Vector& v) const {
  const RatMatrix& K = killing_matrix();
  Rat s(0);
  for (int i : u.support())
    for (int j : v.support()) s += u.c[i] * K.at(i, j) * v.c[j];
  return s;
}

Signature E8Algebra::killing_signature() const {
  return signature(killing_matrix());
}

const FastTable& E8Algebra::fast_table() const {
  if (fast_) return *fast_;
  FastTable t;
  mpz_class denom = 1;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (const auto& [k, v] : row(i, j))
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
                v.get_den().get_mpz_t());
  if (!denom.fits_slong_p()) throw error("table denominator overflow");
  t.denom = denom.get_si();
  std::uint32_t pos = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      t.offsets[i * kDim + j] = pos;
      if (i < j)
        for (const auto& [k, v] : row(i, j)) {
          Rat scaled = v * Rat(static_cast<long>(t.denom));
          if (scaled.get_den() != 1) throw error("non-integral scaled entry");
          if (!scaled.get_num().fits_slong_p())
            throw error("scaled entry overflow");
          t.entries.push_back({k, scaled.get_num().get_si()});
          ++pos;
        }
    }
  t.offsets[kDim * kDim] = pos;
  fast_ = std::move(t);
  return *fast_;
}

namespace {

struct TripleAccum {
  std::array<__int128, 248> acc{};
  std::vector<int> touched;

  void add(int k, __int128 v) {
    if (acc[k] == 0 && v != 0) touched.push_back(k);
    acc[k] += v;
  }
  bool all_zero_and_clear() {
    bool ok = true;
    for (int k : touched)
      if (acc[k] != 0) {
        ok = false;
        break;
      }
    for (int k : touched) acc[k] = 0;
    touched.clear();
    return ok;
  }
};

// acc += sign * [[a,b], c]
void double_bracket(const FastTable& t, int a, int b, int c,
                    TripleAccum& acc) {
  long long s1 = 1;
  int x = a, y = b;
  if (x > y) {
    std::swap(x, y);
    s1 = -1;
  }
  std::uint32_t beg = t.offsets[x * 248 + y], end = t.offsets[x * 248 + y + 1];
  for (std::uint32_t e = beg; e < end; ++e) {
    auto [k, v] = t.entries[e];
    if (k == c) continue;
    long long s2 = s1;
    int p = k, q = c;
    if (p > q) {
      std::swap(p, q);
      s2 = -s2;
    }
    std::uint32_t b2 = t.offsets[p * 248 + q], e2 = t.offsets[p * 248 + q + 1];
    for (std::uint32_t f = b2; f < e2; ++f) {
      auto [m, w] = t.entries[f];
      acc.add(m, static_cast<__int128>(s2) * v * w);
    }
  }
}

bool jacobi_triple(const FastTable& t, int a, int b, int c, TripleAccum& acc) {
  double_bracket(t, a, b, c, acc);
  double_bracket(t, b, c, a, acc);
  double_bracket(t, c, a, b, acc);
  return acc.all_zero_and_clear();
}

}  // namespace

JacobiReport jacobi_full_over(const FastTable& t) {
  JacobiReport rep;
  TripleAccum acc;
  for (int a = 0; a < 248; ++a)
    for (int b = a + 1; b < 248; ++b)
      for (int c = b + 1; c < 248; ++c) {
        ++rep.triples_checked;
        if (!jacobi_triple(t, a, b, c, acc)) {
          ++rep.violations;
          if (!rep.first_violation) rep.first_violation = {a, b, c};
        }
      }
  return rep;
}

JacobiReport jacobi_sampled_over(const FastTable& t, long long triples,
                                 std::uint64_t seed) {
  JacobiReport rep;
  TripleAccum acc;
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<int>(rng() % 248); };
  for (long long n = 0; n < triples; ++n) {
    int a = draw(), b = draw(), c = draw();
    if (a == b || b == c || a == c) {
      --n;
      continue;
    }
    ++rep.triples_checked;
    if (!jacobi_triple(t, a, b, c, acc)) {
      ++rep.violations;
      if (!rep.first_violation) rep.first_violation = {a, b, c};
    }
  }
  return rep;
}

JacobiReport E8Algebra::jacobi_full() const {
  return jacobi_full_over(fast_table());
}

JacobiReport E8Algebra::jacobi_sampled(long long triples,
                                       std::uint64_t seed) const {
  return jacobi_sampled_over(fast_table(), triples, seed);
}

namespace {

// Incremental reduced row basis over 248 coordinates.
struct RowBasis {
  std::vector<int> pivots;
  std::vector<E8Vector> rows;

  // Reduces v in place; returns true (and stores) if independent.
  bool add(E8Vector v) {
    reduce(v);
    int p = -1;
    for (int k = 0; k < 248; ++k)
      if (!is_zero(v.c[k])) {
        p = k;
        break;
      }
    if (p < 0) return false;
    Rat inv = 1 / v.c[p];
    v *= inv;
    for (size_t r = 0; r < rows.size(); ++r)
      if (!is_zero(rows[r].c[p])) {
        Rat f = rows[r].c[p];
        for (int k = 0; k < 248; ++k) rows[r].c[k] -= f * v.c[k];
      }
    pivots.push_back(p);
    rows.push_back(std::move(v));
    return true;
  }
  void reduce(E8Vector& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (is_zero(v.c[pivots[r]])) continue;
      Rat f = v.c[pivots[r]];
      for (int k = 0; k < 248; ++k) v.c[k] -= f * rows[r].c[k];
    }
  }
  bool contains(E8Vector v) const {
    reduce(v);
    return v.is_zero();
  }
  int dim() const { return static_cast<int>(rows.size()); }
};

}  // namespace

ClosureResult E8Algebra::subalgebra_closure(
    const std::vector<E8Vector>& span) const {
  RowBasis basis;
  for (const auto& v : span) basis.add(v);
  ClosureResult res;
  res.span_dim = basis.dim();
  size_t processed = 0;
  std::vector<E8Vector> work = basis.rows;
  while (processed < work.size() && basis.dim() < kDim) {
    const E8Vector u = work[processed++];
    for (size_t t = 0; t < work.size() && basis.dim() < kDim; ++t) {
      E8Vector w = bracket(u, work[t]);
      if (basis.add(w)) work.push_back(basis.rows.back());
    }
  }
  res.closure_dim = basis.dim();
  res.closed = res.closure_dim == res.span_dim;
  return res;
}

std::vector<E8Vector> E8Algebra::centralizer(
    const std::vector<E8Vector>& subspace) const {
  // Start from the full algebra and intersect with ker(ad s) one s at a time.
  std::vector<E8Vector> kern;
  for (int i = 0; i < kDim; ++i) kern.push_back(basis_vector(i));
  for (const auto& s : subspace) {
    std::vector<E8Vector> images;
    images.reserve(kern.size());
    for (const auto& v : kern) images.push_back(bracket(s, v));
    RatMatrix m(kDim, static_cast<int>(kern.size()));
    for (size_t j = 0; j < kern.size(); ++j)
      for (int i = 0; i < kDim; ++i) m.at(i, static_cast<int>(j)) = images[j].c[i];
    auto null_basis = kernel(m);
    std::vector<E8Vector> next;
    for (const auto& coeffs : null_basis) {
      E8Vector v;
      for (size_t j = 0; j < kern.size(); ++j) {
        if (is_zero(coeffs[j])) continue;
        E8Vector t = kern[j];
        t *= coeffs[j];
        v += t;
      }
      next.push_back(std::move(v));
    }
    kern = std::move(next);
    if (kern.empty()) break;
  }
  return kern;
}

EigenReport E8Algebra::ad_eigen(const E8Vector& h,
                                const std::vector<Rat>& candidates) const {
  return integer_eigenspaces(ad_matrix(h), candidates);
}

namespace {

E8Vector from_coords(const std::vector<Rat>& v) {
  E8Vector out;
  for (int i = 0; i < 248 && i < static_cast<int>(v.size()); ++i)
    out.c[i] = v[i];
  return out;
}

}  // namespace

GradingReport E8Algebra::grading_check(const E8Vector& h,
                                       const std::vector<GradingPiece>& expected,
                                       const std::vector<E8Vector>* within) const {
  GradingReport rep;
  std::vector<Rat> lambdas;
  for (const auto& p : expected) lambdas.push_back(p.lambda);

  std::vector<std::vector<E8Vector>> pieces(expected.size());
  int total_dim;
  if (!within) {
    EigenReport er = ad_eigen(h, lambdas);
    rep.residual_dim = er.residual_dim;
    for (size_t s = 0; s < er.spaces.size(); ++s)
      for (const auto& v : er.spaces[s].basis)
        pieces[s].push_back(from_coords(v));
    total_dim = kDim;
  } else {
    // Restrict ad(h) to the span and decompose there.
    RowBasis basis;
    for (const auto& v : *within) basis.add(v);
    int w = basis.dim();
    RatMatrix m(w, w);
    for (int j = 0; j < w; ++j) {
      E8Vector img = bracket(h, basis.rows[j]);
      // Express img over the reduced basis; the pivots are normalized.
      for (int r = 0; r < w; ++r) {
        Rat f = img.c[basis.pivots[r]];
        if (is_zero(f)) continue;
        m.at(r, j) = f;
        E8Vector t = basis.rows[r];
        t *= f;
        img -= t;
      }
      if (!img.is_zero()) throw error("subspace not ad(h)-invariant");
    }
    EigenReport er = integer_eigenspaces(m, lambdas);
    rep.residual_dim = er.residual_dim;
    for (size_t s = 0; s < er.spaces.size(); ++s)
      for (const auto& coords : er.spaces[s].basis) {
        E8Vector v;
        for (int r = 0; r < w; ++r) {
          if (is_zero(coords[r])) continue;
          E8Vector t = basis.rows[r];
          t *= coords[r];
          v += t;
        }
        pieces[s].push_back(std::move(v));
      }
    total_dim = w;
  }
  (void)total_dim;

  bool dims_ok = true;
  for (size_t s = 0; s < expected.size(); ++s) {
    rep.pieces.push_back(
        {expected[s].lambda, static_cast<int>(pieces[s].size())});
    if (static_cast<int>(pieces[s].size()) != expected[s].dim) dims_ok = false;
  }

  // Grading law: [g_a, g_b] lies in g_{a+b} (zero when a+b is not a piece).
  bool law = dims_ok && rep.residual_dim == 0;
  for (size_t s1 = 0; law && s1 < pieces.size(); ++s1)
    for (size_t s2 = s1; law && s2 < pieces.size(); ++s2) {
      Rat target = expected[s1].lambda + expected[s2].lambda;
      int tgt = -1;
      for (size_t t = 0; t < expected.size(); ++t)
        if (expected[t].lambda == target) tgt = static_cast<int>(t);
      for (const auto& u : pieces[s1]) {
        if (!law) break;
        for (const auto& v : pieces[s2]) {
          E8Vector w = bracket(u, v);
          if (tgt < 0) {
            if (!w.is_zero()) {
              law = false;
              break;
            }
          } else {
            E8Vector hw = bracket(h, w);
            E8Vector tw = w;
            tw *= target;
            if (!(hw == tw)) {
              law = false;
              break;
            }
          }
        }
      }
    }
  rep.law_holds = law;
  return rep;
}

BigradingReport E8Algebra::joint_grading_check(const E8Vector& h1,
                                               const E8Vector& h2) const {
  BigradingReport rep;
  if (!bracket(h1, h2).is_zero()) throw error("bigrading needs commuting elements");
  std::vector<Rat> cands;
  for (int v = -6; v <= 6; ++v) cands.push_back(rat(v));
  EigenReport e1 = ad_eigen(h1, cands);
  rep.residual_dim = e1.residual_dim;

  struct Piece {
    Rat l1, l2;
    std::vector<E8Vector> basis;
  };
  std::vector<Piece> pieces;
  for (const auto& sp : e1.spaces) {
    if (sp.multiplicity == 0) continue;
    // ad(h2) preserves each ad(h1) eigenspace; decompose within it.
    RowBasis basis;
    for (const auto& v : sp.basis) basis.add(from_coords(v));
    int w = basis.dim();
    RatMatrix m(w, w);
    for (int j = 0; j < w; ++j) {
      E8Vector img = bracket(h2, basis.rows[j]);
      for (int r = 0; r < w; ++r) {
        Rat f = img.c[basis.pivots[r]];
        if (is_zero(f)) continue;
        m.at(r, j) = f;
        E8Vector t = basis.rows[r];
        t *= f;
        img -= t;
      }
      if (!img.is_zero()) throw error("h2 does not preserve h1 eigenspace");
    }
    EigenReport e2 = integer_eigenspaces(m, cands);
    if (e2.residual_dim != 0) rep.residual_dim += e2.residual_dim;
    for (const auto& sp2 : e2.spaces) {
      if (sp2.multiplicity == 0) continue;
      Piece p;
      p.l1 = sp.lambda;
      p.l2 = sp2.lambda;
      for (const auto& coords : sp2.basis) {
        E8Vector v;
        for (int r = 0; r < w; ++r) {
          if (is_zero(coords[r])) continue;
          E8Vector t = basis.rows[r];
          t *= coords[r];
          v += t;
        }
        p.basis.push_back(std::move(v));
      }
      pieces.push_back(std::move(p));
    }
  }

  for (const auto& p : pieces)
    rep.pieces.push_back({p.l1, p.l2, static_cast<int>(p.basis.size())});

  std::map<Rat, int> grouped;
  for (const auto& p : pieces) grouped[p.l1] += static_cast<int>(p.basis.size());
  for (const auto& [l, d] : grouped) rep.grouped.push_back({l, d});

  bool law = rep.residual_dim == 0;
  for (size_t s1 = 0; law && s1 < pieces.size(); ++s1)
    for (size_t s2 = s1; law && s2 < pieces.size(); ++s2) {
      Rat t1 = pieces[s1].l1 + pieces[s2].l1;
      Rat t2 = pieces[s1].l2 + pieces[s2].l2;
      const Piece* tgt = nullptr;
      for (const auto& p : pieces)
        if (p.l1 == t1 && p.l2 == t2) tgt = &p;
      for (const auto& u : pieces[s1].basis) {
        if (!law) break;
        for (const auto& v : pieces[s2].basis) {
          E8Vector w = bracket(u, v);
          if (!tgt) {
            if (!w.is_zero()) {
              law = false;
              break;
            }
          } else {
            E8Vector w1 = bracket(h1, w), w2 = bracket(h2, w);
            E8Vector t1w = w, t2w = w;
            t1w *= t1;
            t2w *= t2;
            if (!(w1 == t1w) || !(w2 == t2w)) {
              law = false;
              break;
            }
          }
        }
      }
    }
  rep.law_holds = law;
  return rep;
}

std::vector<E8Vector> E8Algebra::restricted_subalgebra(
    std::uint8_t left_mask, std::uint8_t right_mask) const {
  if (!AlgebraSpec{pair_.left.kind, left_mask}.closed() ||
      !AlgebraSpec{pair_.right.kind, right_mask}.closed())
    throw error("restriction masks must select closed subalgebras");
  std::vector<E8Vector> out;
  for (int fam = 0; fam < 3; ++fam)
    for (int t = 0; t < 64; ++t)
      if (((left_mask >> (t >> 3)) & 1) && ((right_mask >> (t & 7)) & 1))
        out.push_back(basis_vector(off_index(static_cast<BasisFamily>(fam), t)));
  for (int side = 0; side < 2; ++side) {
    std::uint8_t mask = side ? left_mask : right_mask;
    int d = AlgebraSpec{side ? pair_.left.kind : pair_.right.kind, mask}.dim();
    for (int u = 1; u <= 7; ++u) {
      if (!((mask >> u) & 1)) continue;
      out.push_back(basis_vector(diag_index(BasisFamily::D, side, u)));
      out.push_back(basis_vector(diag_index(BasisFamily::S, side, u)));
      if (d >= 4)
        out.push_back(basis_vector(diag_index(BasisFamily::G, side, u)));
      if (d == 8)
        out.push_back(basis_vector(diag_index(BasisFamily::A, side, u)));
    }
  }
  return out;
}

std::vector<E8Vector> E8Algebra::e7_subspace() const {
  return restricted_subalgebra(0b10011001, 0xff);
}

std::vector<E8Vector> E8Algebra::e6_subspace() const {
  return restricted_subalgebra(0b10000001, 0xff);
}

std::vector<E8Vector> E8Algebra::e7_quaternionic_right() const {
  return restricted_subalgebra(0xff, 0b10011001);
}

void E8Algebra::verify_split_conventions() const {
  auto fail = [](const std::string& what) {
    throw error("convention verification failed: " + what);
  };
  auto gvec = [&](int unit, int side = 1) {
    return basis_vector(diag_index(BasisFamily::G, side, unit));
  };
  auto avec = [&](int unit, int side = 1) {
    return basis_vector(diag_index(BasisFamily::A, side, unit));
  };
  // Null labels: base 1..3 paired with unit 7-base; sign selects N±.
  auto gnull = [&](int base, int sign) {
    E8Vector v = gvec(base) + rat(sign) * gvec(7 - base);
    v *= rat(1, 2);
    return v;
  };
  auto anull = [&](int base, int sign) {
    E8Vector v = avec(base) + rat(sign) * avec(7 - base);
    v *= rat(1, 2);
    return v;
  };
  auto xlab = [&](int base, int sign, int o) {  // X_{(e_base ± e_{7-base})/2 ⊗ e_o}
    E8Vector v = basis_vector(off_index(BasisFamily::X, 8 * base + o)) +
                 rat(sign) * basis_vector(off_index(BasisFamily::X, 8 * (7 - base) + o));
    v *= rat(1, 2);
    return v;
  };

  // [G_{K±}, I± x] = 2 J∓ x and cyclic permutations.
  struct Cyc {
    int k, i, j;
  } cyc[3] = {{3, 1, 2}, {1, 2, 3}, {2, 3, 1}};
  for (const auto& t : cyc)
    for (int sign : {+1, -1})
      for (int o = 0; o < 8; ++o) {
        E8Vector lhs = bracket(gnull(t.k, sign), xlab(t.i, sign, o));
        E8Vector want = rat(2) * xlab(t.j, -sign, o);
        if (!(lhs == want)) fail("[G_{K±}, I± x] = 2 J∓ x");
      }

  // Cartan eigenvalue table on Im O' labels, and its extension to G_Q.
  struct Row {
    int base, sign, la, lg;
  } rows[6] = {{1, +1, -2, -2}, {2, +1, +2, -2}, {3, +1, 0, +4},
               {1, -1, +2, +2}, {2, -1, -2, +2}, {3, -1, 0, -4}};
  E8Vector al = avec(7), gl = gvec(7);
  for (const auto& r : rows)
    for (int o = 0; o < 8; ++o) {
      E8Vector lab = xlab(r.base, r.sign, o);
      if (!(bracket(al, lab) == rat(r.la) * lab)) fail("A_L eigenvalue table");
      if (!(bracket(gl, lab) == rat(r.lg) * lab)) fail("G_L eigenvalue table");
    }
  for (int o = 0; o < 8; ++o) {
    E8Vector lab = basis_vector(off_index(BasisFamily::X, 8 * 7 + o));
    if (!bracket(al, lab).is_zero()) fail("A_L kills L labels");
    if (!bracket(gl, lab).is_zero()) fail("G_L kills L labels");
  }
  for (const auto& r : rows) {
    E8Vector gq = gnull(r.base, r.sign);
    if (!(bracket(al, gq) == rat(r.la) * gq)) fail("[A_L, G_Q] = lambda G_Q");
  }

  // Dilation action on the anchors: [G_L, A_{I±}] = ∓6 A_{I±},
  // [G_L, A_{J±}] = ±6 A_{J±}.
  for (int sign : {+1, -1}) {
    E8Vector ai = anull(1, sign), aj = anull(2, sign);
    if (!(bracket(gl, ai) == rat(-6 * sign) * ai)) fail("[G_L, A_{I±}]");
    if (!(bracket(gl, aj) == rat(6 * sign) * aj)) fail("[G_L, A_{J±}]");
  }

  // [G_{K±}, G_{I±}] = -4 G_{J∓} and [G_{K±}, G_{I∓}] = 6 A_{J±}, with
  // cyclic permutations.
  for (const auto& t : cyc)
    for (int sign : {+1, -1}) {
      E8Vector same = bracket(gnull(t.k, sign), gnull(t.i, sign));
      if (!(same == rat(-4) * gnull(t.j, -sign))) fail("[G_{K±}, G_{I±}] = -4 G_{J∓}");
      E8Vector opp = bracket(gnull(t.k, sign), gnull(t.i, -sign));
      if (!(opp == rat(6) * anull(t.j, sign))) fail("[G_{K±}, G_{I∓}] = 6 A_{J±}");
    }
}

}  // namespace octe8

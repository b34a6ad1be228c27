#pragma once
/// @file oracle.hpp
/// Brute-force ground truth over small rings: GL_n enumeration, power-map
/// images, orbits and centralizers, conjugacy classes, the GL_2(Z/p^2)
/// family representatives, and exhaustive checks of the power criteria.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "o2power/power.hpp"

namespace o2power {

using KeySet = std::unordered_set<std::string>;

/// Candidate bound for enumerations; O2POWER_BUDGET overrides.
inline std::uint64_t census_budget() {
  if (const char* env = std::getenv("O2POWER_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000000ULL;
}

namespace detail {

inline std::uint64_t ring_size(const Ring& R) { return R.size(); }
inline std::uint64_t ring_size(const Field& k) { return k.q(); }

template <CoefficientRing R>
std::uint64_t check_budget(const R& r, std::size_t n) {
  const std::uint64_t budget = census_budget();
  const std::uint64_t total = ipow_sat(ring_size(r), n * n, budget);
  if (total > budget)
    fail(ErrorCode::BudgetExceeded, "enumeration of " + std::to_string(n) + "x" + std::to_string(n) +
                                        " matrices exceeds the budget of " + std::to_string(budget));
  return total;
}

}  // namespace detail

/// Every invertible n x n matrix once, in lexicographic order of the
/// row-major entry codes.
template <CoefficientRing R>
std::vector<Matrix<R>> enumerate_gl(const R& r, std::size_t n) {
  const std::uint64_t total = detail::check_budget(r, n);
  const std::uint64_t base = detail::ring_size(r);
  std::vector<Matrix<R>> out;
  std::vector<typename R::elem> e(n * n, r.zero());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = n * n; i-- > 0;) {
      e[i] = typename R::elem{static_cast<std::uint32_t>(x % base)};
      x /= base;
    }
    Matrix<R> M(r, n, e);
    if (is_gl(M)) out.push_back(std::move(M));
  }
  return out;
}

template <CoefficientRing R>
KeySet power_image(const std::vector<Matrix<R>>& gl, std::uint64_t L) {
  KeySet img;
  for (const auto& B : gl) img.insert(B.pow(L).key());
  return img;
}

template <CoefficientRing R>
KeySet power_image(const R& r, std::size_t n, std::uint64_t L) {
  return power_image(enumerate_gl(r, n), L);
}

/// All B in GL_n with B^L = A, in enumeration order.
template <CoefficientRing R>
std::vector<Matrix<R>> power_preimage(const Matrix<R>& A, std::uint64_t L) {
  std::vector<Matrix<R>> out;
  for (auto& B : enumerate_gl(A.ring(), A.n()))
    if (B.pow(L) == A) out.push_back(std::move(B));
  return out;
}

struct OrbitData {
  std::uint64_t orbit_size;
  std::uint64_t centralizer_size;
  std::uint64_t order;
};

template <CoefficientRing R>
OrbitData orbit_and_centralizer(const std::vector<Matrix<R>>& gl, const Matrix<R>& A) {
  KeySet orbit;
  std::uint64_t cent = 0;
  for (const auto& S : gl) {
    if (S * A == A * S) ++cent;
    orbit.insert((S * A * inverse(S)).key());
  }
  std::uint64_t ord = 1;
  const auto I = Matrix<R>::identity(A.ring(), A.n());
  for (Matrix<R> P = A; P != I; P = P * A) {
    ++ord;
    if (ord > gl.size()) fail(ErrorCode::Internal, "matrix has no finite order; is it invertible?");
  }
  if (orbit.size() * cent != gl.size()) fail(ErrorCode::Internal, "orbit-stabilizer count failed");
  return {orbit.size(), cent, ord};
}

template <CoefficientRing R>
OrbitData orbit_and_centralizer(const Matrix<R>& A) {
  return orbit_and_centralizer(enumerate_gl(A.ring(), A.n()), A);
}

/// Partition of GL_n into conjugacy classes; classes are numbered in order of
/// their first element.
template <CoefficientRing R>
struct ClassPartition {
  std::vector<Matrix<R>> elements;
  std::vector<std::size_t> class_of;    // per element
  std::vector<std::size_t> rep;         // per class: index of first element
  std::vector<std::size_t> class_size;  // per class
  std::unordered_map<std::string, std::size_t> index;
};

template <CoefficientRing R>
ClassPartition<R> conjugacy_classes(std::vector<Matrix<R>> gl) {
  ClassPartition<R> cp;
  cp.elements = std::move(gl);
  const std::size_t N = cp.elements.size();
  for (std::size_t i = 0; i < N; ++i) cp.index.emplace(cp.elements[i].key(), i);
  std::vector<Matrix<R>> inv;
  inv.reserve(N);
  for (const auto& S : cp.elements) inv.push_back(inverse(S));
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  cp.class_of.assign(N, none);
  for (std::size_t i = 0; i < N; ++i) {
    if (cp.class_of[i] != none) continue;
    const std::size_t c = cp.rep.size();
    cp.rep.push_back(i);
    cp.class_size.push_back(0);
    const auto& A = cp.elements[i];
    for (std::size_t s = 0; s < N; ++s) {
      const std::size_t j = cp.index.at((cp.elements[s] * A * inv[s]).key());
      if (cp.class_of[j] == none) {
        cp.class_of[j] = c;
        ++cp.class_size[c];
      }
    }
  }
  return cp;
}

// ------------------------------------------------------------- GL_2(Z/p^2)

struct FamilyRep {
  std::string label;  // S, D0, D1, H0, H1, Hp0, Hp1
  std::string params;
  MatO2 matrix;
};

/// Smallest unit of O_2 (by code) that is not a square.
inline O2Elem smallest_nonsquare_unit(const Ring& R) {
  std::unordered_set<std::uint32_t> squares;
  for (auto u : R.units()) squares.insert(R.mul(u, u).v);
  for (auto u : R.units())
    if (!squares.count(u.v)) return u;
  fail(ErrorCode::Internal, "no non-square unit");
}

/// One representative per parameter tuple of the four GL_2(Z/p^2) class types,
/// with ranges chosen so no two tuples give conjugate matrices:
///   S(a)          [[a,0],[0,a]]            a unit
///   D(a,b,i)      [[a,0],[0,b]]            a < b units, a-b in p^i * units
///   H(a,b,0)      [[a,p b],[1,a]]          a unit, b in 0..p-1
///   H(a,0,1)      [[a,0],[p,a]]            a unit
///   H'(a,b,0)     [[a,e b],[b,a]]          a in O_2, b unit taken up to sign
///   H'(a,b,1)     [[a,p e b],[p b,a]]      a unit, b in 1..(p-1)/2
/// where e is the smallest non-square unit.
inline std::vector<FamilyRep> gl2_zp2_families(std::uint32_t p) {
  if (p % 2 == 0 || p > 5 || !detail::is_prime(p)) fail(ErrorCode::BadParams, "p must be 3 or 5");
  const Ring R(RingSpec{RingKind::Zp2, p, 1, {0, 1}});
  const O2Elem eps = smallest_nonsquare_unit(R);
  const O2Elem P = R.pi();
  auto mat = [&](O2Elem a, O2Elem b, O2Elem c, O2Elem d) { return MatO2(R, 2, {a, b, c, d}); };
  auto fmt = [&](std::initializer_list<std::string> xs) {
    std::string s = "(";
    bool first = true;
    for (const auto& x : xs) {
      s += (first ? "" : ",") + x;
      first = false;
    }
    return s + ")";
  };
  const auto units = R.units();
  std::vector<FamilyRep> out;
  for (auto a : units) out.push_back({"S", fmt({R.format(a)}), mat(a, R.zero(), R.zero(), a)});
  for (auto a : units)
    for (auto b : units) {
      if (!(a < b)) continue;
      const O2Elem diff = R.sub(a, b);
      const int i = R.is_unit(diff) ? 0 : 1;
      out.push_back({i == 0 ? "D0" : "D1", fmt({R.format(a), R.format(b), std::to_string(i)}),
                     mat(a, R.zero(), R.zero(), b)});
    }
  for (auto a : units)
    for (std::uint32_t b = 0; b < p; ++b)
      out.push_back({"H0", fmt({R.format(a), std::to_string(b), "0"}), mat(a, R.mul(P, R.from_int(b)), R.one(), a)});
  for (auto a : units) out.push_back({"H1", fmt({R.format(a), "0", "1"}), mat(a, R.zero(), P, a)});
  for (auto a : R.elements())
    for (auto b : units) {
      if (R.neg(b) < b) continue;
      out.push_back({"Hp0", fmt({R.format(a), R.format(b), "0"}), mat(a, R.mul(eps, b), b, a)});
    }
  for (auto a : units)
    for (std::uint32_t bi = 1; bi <= (p - 1) / 2; ++bi) {
      const O2Elem b = R.from_int(bi);
      out.push_back({"Hp1", fmt({R.format(a), std::to_string(bi), "1"}),
                     mat(a, R.mul(P, R.mul(eps, b)), R.mul(P, b), a)});
    }
  return out;
}

// ------------------------------------------------------------------ census

struct CensusReport {
  RingSpec spec;
  std::size_t n = 0;
  std::map<std::string, std::uint64_t> totals;
  double elapsed_seconds = 0;
  std::string order = "lex-row-major";
  std::vector<std::string> counterexamples;
};

namespace detail {
inline bool kind_is_rs_or_cc(MatrixKind k) {
  return k == MatrixKind::RegularSemisimple || k == MatrixKind::CompatibleCyclic;
}
}  // namespace detail

/// Element and class counts of GL_n(O_2) by kind, plus intersections with the
/// image of the L-th power map when L is given. "rs_or_cc" counts the
/// regular semisimple and compatible cyclic elements together.
inline CensusReport census(const Ring& R, std::size_t n, std::optional<std::uint64_t> L) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusReport rep{R.spec(), n, {}, 0, "lex-row-major", {}};
  auto cp = conjugacy_classes(enumerate_gl(R, n));
  std::optional<KeySet> img;
  if (L) img = power_image(cp.elements, *L);
  std::vector<MatrixKind> kind_of_class(cp.rep.size());
  for (std::size_t c = 0; c < cp.rep.size(); ++c) kind_of_class[c] = classify(cp.elements[cp.rep[c]]).kind;
  auto& T = rep.totals;
  T["gl"] = cp.elements.size();
  T["classes"] = cp.rep.size();
  for (auto key : {"rs", "cc", "cyclic_not_compatible", "other", "rs_or_cc", "rs_classes", "rs_or_cc_classes"})
    T[key] = 0;
  if (L)
    for (auto key : {"image", "rs_image", "rs_or_cc_image", "image_classes", "rs_image_classes", "rs_or_cc_image_classes"})
      T[key] = 0;
  for (std::size_t i = 0; i < cp.elements.size(); ++i) {
    const std::size_t c = cp.class_of[i];
    const MatrixKind kd = kind_of_class[c];
    const bool first = cp.rep[c] == i;
    switch (kd) {
      case MatrixKind::RegularSemisimple: ++T["rs"]; break;
      case MatrixKind::CompatibleCyclic: ++T["cc"]; break;
      case MatrixKind::CyclicNotCompatible: ++T["cyclic_not_compatible"]; break;
      case MatrixKind::Other: ++T["other"]; break;
    }
    const bool rs = kd == MatrixKind::RegularSemisimple, rc = detail::kind_is_rs_or_cc(kd);
    T["rs_or_cc"] += rc;
    if (first) {
      T["rs_classes"] += rs;
      T["rs_or_cc_classes"] += rc;
    }
    if (img && img->count(cp.elements[i].key())) {
      ++T["image"];
      T["rs_image"] += rs;
      T["rs_or_cc_image"] += rc;
      if (first) {
        ++T["image_classes"];
        T["rs_image_classes"] += rs;
        T["rs_or_cc_image_classes"] += rc;
      }
    }
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

enum class Theorem { T1, T2, C44 };

inline Theorem parse_theorem(std::string_view s) {
  if (s == "T1") return Theorem::T1;
  if (s == "T2") return Theorem::T2;
  if (s == "C44") return Theorem::C44;
  fail(ErrorCode::ParseError, "unknown theorem '" + std::string(s) + "'");
}

/// Exhaustive comparison of the power criterion with brute membership in the
/// image of the power map:
///   T1  over regular semisimple elements,
///   T2  over compatible cyclic elements that are not regular semisimple,
///   C44 over regular semisimple elements with irreducible reduced
///       characteristic polynomial, comparing brute membership over O_2 with
///       brute membership of the reduction over k.
/// For T1/T2 every positive answer also has its witness root checked.
/// Throws MismatchFound on the first disagreement.
inline CensusReport verify_theorem(Theorem thm, const Ring& R, std::size_t n, std::uint64_t L) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::require_gcd_Lp(L, R.p());
  CensusReport rep{R.spec(), n, {}, 0, "lex-row-major", {}};
  const auto gl = enumerate_gl(R, n);
  const KeySet img = power_image(gl, L);
  std::optional<KeySet> img_k;
  if (thm == Theorem::C44) img_k = power_image(R.residue_field(), n, L);
  std::uint64_t checked = 0, powers = 0, witnesses = 0;
  for (const auto& A : gl) {
    const auto rep_a = classify(A);
    const bool brute = img.count(A.key()) > 0;
    bool claimed = false;
    switch (thm) {
      case Theorem::T1:
      case Theorem::T2: {
        const MatrixKind want = thm == Theorem::T1 ? MatrixKind::RegularSemisimple : MatrixKind::CompatibleCyclic;
        if (rep_a.kind != want) continue;
        const auto dec = is_lth_power(A, L, true);
        claimed = dec.is_power;
        if (dec.witness) {
          if (dec.witness->pow(L) != A) fail(ErrorCode::MismatchFound, "witness is not a root", A.to_text());
          ++witnesses;
        }
        break;
      }
      case Theorem::C44: {
        if (rep_a.kind != MatrixKind::RegularSemisimple || !is_irreducible_k(rep_a.reduction_charpoly)) continue;
        claimed = img_k->count(theta(A).key()) > 0;
        break;
      }
    }
    ++checked;
    powers += brute;
    if (claimed != brute) {
      rep.counterexamples.push_back(A.to_text());
      fail(ErrorCode::MismatchFound,
           std::string("criterion says ") + (claimed ? "power" : "not a power") + ", brute force says " +
               (brute ? "power" : "not a power"),
           A.to_text());
    }
  }
  rep.totals["checked"] = checked;
  rep.totals["powers"] = powers;
  rep.totals["witnesses_verified"] = witnesses;
  rep.totals["mismatches"] = 0;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Monic divisors of F of degree d, scanning all |O_2|^d candidates.
inline std::vector<PolyO2> monic_divisors_brute(const PolyO2& F, std::size_t d) {
  const Ring& R = F.ring();
  const std::uint64_t total = detail::ipow_sat(R.size(), d, census_budget());
  if (total > census_budget()) fail(ErrorCode::BudgetExceeded, "divisor scan exceeds the budget");
  std::vector<PolyO2> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<O2Elem> c(d + 1);
    std::uint64_t x = code;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = O2Elem{static_cast<std::uint32_t>(x % R.size())};
      x /= R.size();
    }
    c[d] = R.one();
    PolyO2 G(R, std::move(c));
    if (monic_mod(F, G).is_zero()) out.push_back(std::move(G));
  }
  std::sort(out.begin(), out.end(), canonical_less<Ring>);
  return out;
}

/// No monic divisor of degree 1..deg(F)/2.
inline bool is_irreducible_brute(const PolyO2& F) {
  if (!F.is_monic() || F.deg() == 0) fail(ErrorCode::NonMonic, "needs a monic polynomial of positive degree");
  for (std::size_t d = 1; 2 * d <= F.deg(); ++d)
    if (!monic_divisors_brute(F, d).empty()) return false;
  return true;
}

struct Table1Row {
  PolyO2 F;
  bool irreducible;
  PolyK reduction;
};

/// All monic quadratic lifts of t^2 + 1 in canonical order, each with the
/// verdict of the brute monic divisor scan.
inline std::vector<Table1Row> table1(const Ring& R) {
  const Field& k = R.residue_field();
  const PolyK f = PolyK::from_ints(k, {1, 0, 1});
  if (!is_irreducible_k(f)) fail(ErrorCode::BadParams, "t^2 + 1 is reducible over the residue field");
  std::vector<PolyO2> lifts;
  for (auto a0 : R.elements())
    for (auto a1 : R.elements()) {
      PolyO2 F(R, {a0, a1, R.one()});
      if (theta(F) == f) lifts.push_back(std::move(F));
    }
  std::sort(lifts.begin(), lifts.end(), canonical_less<Ring>);
  std::vector<Table1Row> rows;
  for (auto& F : lifts) {
    const bool irr = is_irreducible_brute(F);
    rows.push_back({std::move(F), irr, f});
  }
  return rows;
}

/// Uniform random element of GL_n(O_2) by rejection.
inline MatO2 random_gl(const Ring& R, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, R.size() - 1);
  for (;;) {
    std::vector<O2Elem> e(n * n);
    for (auto& x : e) x = O2Elem{pick(rng)};
    MatO2 M(R, n, std::move(e));
    if (is_gl(M)) return M;
  }
}

}  // namespace o2power

// o2power: command-line front end. Every report is JSON with "schema": 1
// unless --format tsv is given. Exit codes: 0 ok, 2 mathematical negative,
// 1 usage or error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "o2power/o2power.hpp"

using namespace o2power;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kError = 1, kNegative = 2;

Json report(const char* kind) {
  Json j;
  j["schema"] = 1;
  j["report"] = kind;
  return j;
}

std::string big(const BigInt& x) { return x.str(); }

Json poly_json(const PolyO2& F) { return Json{{"coeffs", F.to_text()}, {"pretty", F.pretty()}}; }
Json poly_json(const PolyK& f) { return Json{{"coeffs", f.to_text()}, {"pretty", f.pretty()}}; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json factorization_json(const FundFactorization& fac) {
  Json arr = Json::array();
  for (const auto& [F, r] : fac) {
    Json e = poly_json(F);
    e["mult"] = r;
    arr.push_back(e);
  }
  return arr;
}

struct Common {
  std::string ring;
  std::string format = "json";
};

void add_ring(CLI::App* sub, Common& c) {
  sub->add_option("--ring", c.ring, "ring spec: zp2:<p> or fqu2:<p>:<m>[:<g coeffs>]")->required();
}
void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
}

std::string tsv_row(std::initializer_list<std::string> cells) {
  std::string s;
  bool first = true;
  for (const auto& c : cells) {
    s += (first ? "" : "\t") + c;
    first = false;
  }
  return s + "\n";
}

// ---------------------------------------------------------------- commands

int cmd_factor(const Common& c, const std::string& poly) {
  const Ring R(c.ring);
  const PolyO2 F = parse_poly(R, poly);
  Json j = report("factor");
  j["ring"] = R.spec().to_string();
  j["poly"] = poly_json(F);
  Json red = Json::array();
  for (const auto& fac : k_factor(theta(F))) {
    Json e = poly_json(fac.f);
    e["mult"] = fac.mult;
    red.push_back(e);
  }
  j["reduction_factors"] = red;
  const auto split = fundamental_factorization(F);
  Json comps = Json::array();
  for (const auto& pc : split.components) {
    Json e{{"component", poly_json(pc.component)}, {"reduction", poly_json(pc.f)}, {"mult", pc.r}};
    e["fundamental"] = pc.F ? poly_json(*pc.F) : Json(nullptr);
    comps.push_back(e);
  }
  j["components"] = comps;
  j["complete"] = split.complete();
  emit(j);
  return kOk;
}

int cmd_is_l_power(const Common& c, const std::string& poly, std::uint64_t L) {
  const Ring R(c.ring);
  const PolyO2 F = parse_poly(R, poly);
  const bool ok = is_L_power_poly(F, L);
  Json j = report("is-l-power");
  j["ring"] = R.spec().to_string();
  j["poly"] = poly_json(F);
  j["L"] = L;
  j["is_L_power"] = ok;
  Json facs = Json::array();
  if (ok && F.deg() * L <= 512)
    for (const auto& G : l_power_factors(F, L)) facs.push_back(poly_json(G));
  j["factors"] = facs;
  emit(j);
  return ok ? kOk : kNegative;
}

int cmd_classify(const Common& c, const std::string& mat) {
  const Ring R(c.ring);
  const MatO2 A = parse_matrix(R, mat);
  const auto rep = classify(A);
  Json j = report("classify");
  j["ring"] = R.spec().to_string();
  j["matrix"] = A.to_text();
  j["kind"] = to_string(rep.kind);
  j["charpoly"] = poly_json(rep.charpoly);
  j["reduction_charpoly"] = poly_json(rep.reduction_charpoly);
  j["factors"] = rep.factorization ? factorization_json(*rep.factorization) : Json(nullptr);
  j["centralizer_order"] = rep.centralizer_order ? Json(big(*rep.centralizer_order)) : Json(nullptr);
  emit(j);
  return kOk;
}

int cmd_canonical(const Common& c, const std::string& mat) {
  const Ring R(c.ring);
  const MatO2 A = parse_matrix(R, mat);
  const auto cf = canonical_cc(A);
  Json j = report("canonical");
  j["ring"] = R.spec().to_string();
  j["matrix"] = A.to_text();
  j["form"] = cf.form.to_text();
  j["conjugator"] = cf.conjugator.to_text();
  emit(j);
  return kOk;
}

int cmd_is_power(const Common& c, const std::string& mat, std::uint64_t L, bool witness) {
  const Ring R(c.ring);
  const MatO2 A = parse_matrix(R, mat);
  const auto dec = is_lth_power(A, L, witness);
  Json j = report("is-power");
  j["ring"] = R.spec().to_string();
  j["matrix"] = A.to_text();
  j["L"] = L;
  j["is_power"] = dec.is_power;
  Json pf = Json::array();
  for (const auto& f : dec.per_factor) {
    Json e = poly_json(f.F);
    e["mult"] = f.r;
    e["is_L_power"] = f.is_L_power;
    pf.push_back(e);
  }
  j["per_factor"] = pf;
  j["witness"] = dec.witness ? Json(dec.witness->to_text()) : Json(nullptr);
  emit(j);
  return dec.is_power ? kOk : kNegative;
}

int cmd_root(const Common& c, const std::string& mat, std::uint64_t L) {
  const Ring R(c.ring);
  const MatO2 A = parse_matrix(R, mat);
  const MatO2 B = lth_root(A, L);
  Json j = report("root");
  j["ring"] = R.spec().to_string();
  j["matrix"] = A.to_text();
  j["L"] = L;
  j["root"] = B.to_text();
  emit(j);
  return kOk;
}

int cmd_genfun(const Common& c, const std::string& family, std::uint64_t q, std::optional<std::uint64_t> mabs,
               std::optional<std::uint64_t> L, std::size_t N) {
  const auto fam = parse_family(family);
  const Series s = series(fam, q, mabs.value_or(q), L, N);
  if (c.format == "tsv") {
    for (std::size_t n = 0; n < s.coefficients.size(); ++n)
      std::cout << tsv_row({std::to_string(n), big(numerator(s.coefficients[n])), big(denominator(s.coefficients[n]))});
    return kOk;
  }
  Json j = report("genfun");
  j["family"] = to_string(fam);
  j["q"] = q;
  j["mabs"] = s.mabs;
  j["L"] = s.L ? Json(*s.L) : Json(nullptr);
  Json arr = Json::array();
  for (std::size_t n = 0; n < s.coefficients.size(); ++n)
    arr.push_back({{"n", n}, {"numerator", big(numerator(s.coefficients[n]))},
                   {"denominator", big(denominator(s.coefficients[n]))}});
  j["coefficients"] = arr;
  emit(j);
  return kOk;
}

int cmd_counts(std::uint64_t q, std::uint64_t d, std::optional<std::uint64_t> mabs, std::optional<std::uint64_t> L,
               std::optional<std::uint64_t> n) {
  Json j = report("counts");
  j["q"] = q;
  j["d"] = d;
  j["mabs"] = mabs.value_or(q);
  j["N"] = big(count_N(q, d));
  if (L) {
    j["L"] = *L;
    j["N_kL"] = big(count_N_kL(q, d, *L));
    j["N_kL_closed_form"] = big(count_N_kL_closed_form(q, d, *L));
    j["N_O2L"] = big(count_N_O2L(q, mabs.value_or(q), d, *L));
  }
  if (n) {
    j["n"] = *n;
    j["gl_order"] = big(gl_order(*n, q, mabs.value_or(q)));
  }
  emit(j);
  return kOk;
}

Json census_json(const CensusReport& rep, bool timing) {
  Json j = report("census");
  j["ring"] = rep.spec.to_string();
  j["n"] = rep.n;
  j["order"] = rep.order;
  Json t = Json::object();
  for (const auto& [k, v] : rep.totals) t[k] = std::to_string(v);
  j["totals"] = t;
  if (timing) j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

int cmd_census(const Common& c, std::size_t n, std::optional<std::uint64_t> L, const std::string& predicate,
               bool timing) {
  const Ring R(c.ring);
  if (predicate == "families") {
    if (R.kind() != RingKind::Zp2 || n != 2) fail(ErrorCode::BadParams, "families census needs zp2 and n = 2");
    const auto gl = enumerate_gl(R, 2);
    const auto fams = gl2_zp2_families(R.p());
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> agg;
    KeySet covered;
    std::uint64_t sum = 0;
    for (const auto& f : fams) {
      const auto od = orbit_and_centralizer(gl, f.matrix);
      agg[f.label].first += 1;
      agg[f.label].second += od.orbit_size;
      sum += od.orbit_size;
      for (const auto& S : gl) covered.insert((S * f.matrix * inverse(S)).key());
    }
    Json j = report("census");
    j["ring"] = R.spec().to_string();
    j["n"] = n;
    j["predicate"] = "families";
    Json fj = Json::object();
    for (const auto& [label, v] : agg)
      fj[label] = {{"classes", std::to_string(v.first)}, {"elements", std::to_string(v.second)}};
    j["families"] = fj;
    j["totals"] = {{"gl", std::to_string(gl.size())},
                   {"orbit_sum", std::to_string(sum)},
                   {"union", std::to_string(covered.size())}};
    emit(j);
    return sum == gl.size() && covered.size() == gl.size() ? kOk : kNegative;
  }
  const auto rep = census(R, n, L);
  Json j = census_json(rep, timing);
  if (L) j["L"] = *L;
  if (!predicate.empty()) {
    j["predicate"] = predicate;
    Json t = Json::object();
    for (const auto& [k, v] : rep.totals) {
      const bool keep = (predicate == "rs" && k.rfind("rs", 0) == 0 && k.rfind("rs_or_cc", 0) != 0) ||
                        (predicate == "cc" && (k.rfind("cc", 0) == 0 || k.rfind("rs_or_cc", 0) == 0)) ||
                        (predicate == "image" && k.find("image") != std::string::npos);
      if (keep || k == "gl") t[k] = std::to_string(v);
    }
    j["totals"] = t;
  }
  emit(j);
  return kOk;
}

int cmd_verify(const Common& c, const std::string& thm, std::size_t n, std::uint64_t L, bool timing) {
  const Ring R(c.ring);
  try {
    const auto rep = verify_theorem(parse_theorem(thm), R, n, L);
    Json j = census_json(rep, timing);
    j["report"] = "verify";
    j["theorem"] = thm;
    j["L"] = L;
    emit(j);
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MismatchFound) throw;
    Json j = report("verify");
    j["theorem"] = thm;
    j["ring"] = R.spec().to_string();
    j["n"] = n;
    j["L"] = L;
    j["mismatch"] = e.what();
    j["counterexample"] = e.detail();
    emit(j);
    return kNegative;
  }
}

/// Monic quadratic lifts of t^2 + 1 with their irreducibility verdicts.
int cmd_table1(const Common& c) {
  const Ring R(c.ring);
  const auto rows = table1(R);
  if (c.format == "tsv") {
    std::cout << tsv_row({"F(t)", "irreducible", "theta(F)"});
    for (const auto& r : rows) std::cout << tsv_row({r.F.pretty(), r.irreducible ? "yes" : "no", r.reduction.pretty()});
    return kOk;
  }
  Json j = report("table1");
  j["ring"] = R.spec().to_string();
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"F", poly_json(r.F)}, {"irreducible", r.irreducible}, {"reduction", poly_json(r.reduction)}});
  j["rows"] = arr;
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-th powers in GL_n over length-two local rings"};
  app.require_subcommand(1);
  Common c;
  std::string poly, mat, family, theorem, predicate;
  std::uint64_t L = 1, q = 0, d = 1;
  std::size_t n = 2, N = 8;
  std::optional<std::uint64_t> optL, mabs, opt_n;
  bool witness = false, timing = false;

  auto* f = app.add_subcommand("factor", "reduction factors and fundamental factorization of a monic polynomial");
  add_ring(f, c);
  f->add_option("--poly", poly, "little-endian coefficients, e.g. 7,-6,1")->required();

  auto* ilp = app.add_subcommand("is-l-power", "is F an L-power polynomial");
  add_ring(ilp, c);
  ilp->add_option("--poly", poly)->required();
  ilp->add_option("--L", L)->required();

  auto* cl = app.add_subcommand("classify", "class report of a matrix");
  add_ring(cl, c);
  cl->add_option("--matrix", mat, "rows separated by ';', entries by ','")->required();

  auto* can = app.add_subcommand("canonical", "canonical form and conjugator");
  add_ring(can, c);
  can->add_option("--matrix", mat)->required();

  auto* ip = app.add_subcommand("is-power", "is A an L-th power");
  add_ring(ip, c);
  ip->add_option("--matrix", mat)->required();
  ip->add_option("--L", L)->required();
  ip->add_flag("--witness", witness, "also return a root");

  auto* rt = app.add_subcommand("root", "an L-th root of A");
  add_ring(rt, c);
  rt->add_option("--matrix", mat)->required();
  rt->add_option("--L", L)->required();

  auto* gf = app.add_subcommand("genfun", "generating function coefficients");
  gf->add_option("--family", family, "s, sL, r, rL, cs, csL, cr or crL")->required();
  gf->add_option("--q", q)->required();
  gf->add_option("--mabs", mabs, "|m|, defaults to q");
  gf->add_option("--L", optL);
  gf->add_option("--N", N)->default_val(8);
  add_format(gf, c);

  auto* ct = app.add_subcommand("counts", "irreducible and L-power polynomial counts");
  ct->add_option("--q", q)->required();
  ct->add_option("--d", d)->default_val(1);
  ct->add_option("--mabs", mabs);
  ct->add_option("--L", optL);
  ct->add_option("--n", opt_n, "also report |GL_n|");

  auto* cs = app.add_subcommand("census", "brute-force census of GL_n");
  add_ring(cs, c);
  cs->add_option("--n", n)->default_val(2);
  cs->add_option("--L", optL);
  cs->add_option("--predicate", predicate)->check(CLI::IsMember({"rs", "cc", "image", "families"}));
  cs->add_flag("--timing", timing, "include elapsed time");

  auto* vf = app.add_subcommand("verify", "exhaustive check of a power criterion");
  add_ring(vf, c);
  vf->add_option("--theorem", theorem, "T1, T2 or C44")->required();
  vf->add_option("--n", n)->default_val(2);
  vf->add_option("--L", L)->required();
  vf->add_flag("--timing", timing, "include elapsed time");

  auto* t1 = app.add_subcommand("table1", "monic quadratic lifts of t^2 + 1");
  add_ring(t1, c);
  add_format(t1, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*f) return cmd_factor(c, poly);
    if (*ilp) return cmd_is_l_power(c, poly, L);
    if (*cl) return cmd_classify(c, mat);
    if (*can) return cmd_canonical(c, mat);
    if (*ip) return cmd_is_power(c, mat, L, witness);
    if (*rt) return cmd_root(c, mat, L);
    if (*gf) return cmd_genfun(c, family, q, mabs, optL, N);
    if (*ct) return cmd_counts(q, d, mabs, optL, opt_n);
    if (*cs) return cmd_census(c, n, optL, predicate, timing);
    if (*vf) return cmd_verify(c, theorem, n, L, timing);
    if (*t1) return cmd_table1(c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAPower) {
      std::cerr << "error: " << e.what() << "\n";
      return kNegative;
    }
    std::cerr << "error: " << e.what() << "\n";
    if (!e.detail().empty()) std::cerr << "detail: " << e.detail() << "\n";
    return kError;
  }
  return kError;
}

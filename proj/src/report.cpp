#include "qgw/report.hpp"

#include <sstream>

namespace qgw {

std::string version() { return "0.1.0"; }

std::string convention_ledger() {
  return
      "qgw convention ledger v1\n"
      "R-matrix: basic representation, N^2 x N^2, row-major legs (i,k)->(j,l) at "
      "index (i*N+k, j*N+l); series A Hecke-normalized so (Rhat-q)(Rhat+q^-1)=0; "
      "B/C/D metric form solved from the distinguished eigenspace of flip*R and "
      "scaled so q=1 gives the antidiagonal classical form.\n"
      "Classical parts: r = (1/2) dR/dq at q=1; r_minus its leg-flip skew part, "
      "omega the symmetric part.\n"
      "FRT relations: entries of R T1 T2 - T2 T1 R. RE relations: entries of "
      "R21 K1 R12 K2 - K2 R21 K1 R12. Word products concatenate left factor "
      "before right factor.\n"
      "Group models: sharp adds det_q - f^N (series A) or the twisted metric "
      "relations T^t-sandwich = f^2 (B/C/D), with f central of degree 1.\n"
      "Twist transport: Omega_n = (Omega_m x Omega_k) . F_(m,k); elementary "
      "spread orders fixed with first and second leg blocks reversed in the "
      "flow op and the first block reversed in the upper op.\n"
      "Brackets: DS {X1,X2} = [X1 X2, r]; STS {X1,X2} = X1 X2 r- + r- X1 X2 - "
      "X1 r- X2 - X2 r- X1 + X2 omega X1 - X1 omega X2, entries read at "
      "((i,j),(k,l)) from leg index ((i,k),(j,l)).\n"
      "Semiclassical bookkeeping: q = exp(hbar/2); reported c is the single "
      "constant with d/dq[x,y] at q=1 equal to c * {x,y}.\n"
      "Quotient bases: degreewise lexicographic normal-form complements; "
      "freeness complement E is the lexicographic complement of the "
      "center-span columns.\n"
      "Serialization: Laurent coefficients as 'c*q^k' terms joined by ' + ' "
      "with exponents ascending; rationals as 'p/q' lowest terms; JSON keys "
      "in fixed schema order, 2-space indent, trailing newline.\n";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string convention_ledger_hash() {
  std::ostringstream os;
  os << std::hex;
  std::uint64_t h = fnv1a(convention_ledger());
  for (int i = 15; i >= 0; --i) os << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
  return os.str();
}

std::string scalar_string(const QScalar& s) { return s.str(); }

std::string rat_string(const Rat& r) { return r.get_str(); }

static Json dims_json(const std::vector<int>& v) { return Json(v); }

static Json bools_json(const std::vector<bool>& v) {
  Json a = Json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

Json json_of(const FlatnessReport& r) {
  Json j;
  j["quantum_dims"] = dims_json(r.quantum_dims);
  j["classical_dims"] = dims_json(r.classical_dims);
  j["pass"] = r.pass;
  return j;
}

Json json_of(const TwistReport& r) {
  Json j;
  j["quadratic_match"] = r.quadratic_match;
  j["sharp_match"] = r.sharp_match;
  j["partition_independent"] = r.partition_independent;
  j["pass"] = r.pass;
  return j;
}

Json json_of(const VarietyReport& r) {
  Json j;
  j["symbolic"] = r.symbolic;
  j["points_checked"] = r.points_checked;
  j["on_variety"] = r.on_variety;
  j["off_variety_nonzero"] = r.off_variety_nonzero;
  j["pass"] = r.pass;
  return j;
}

Json json_of(const SemiclassicalReport& r) {
  Json j;
  j["c_found"] = r.c_found;
  j["c"] = rat_string(r.c);
  j["pairs_checked"] = r.pairs_checked;
  j["pass"] = r.pass;
  return j;
}

Json json_of(const CenterReport& r) {
  Json j;
  j["quantum_dims"] = dims_json(r.quantum_dims);
  j["classical_dims"] = dims_json(r.classical_dims);
  j["match"] = bools_json(r.match);
  j["routes_agree"] = r.routes_agree;
  j["bases_commute"] = r.bases_commute;
  j["pass"] = r.pass;
  return j;
}

Json json_of(const FreenessReport& r) {
  Json j;
  j["algebra_dims"] = dims_json(r.algebra_dims);
  j["center_dims"] = dims_json(r.center_dims);
  j["complement_dims"] = dims_json(r.complement_dims);
  j["bijective"] = bools_json(r.bijective);
  j["generators_central"] = r.generators_central;
  j["pass"] = r.pass;
  return j;
}

Json report_header(const std::string& command, Series series, int rank,
                   AlgKind algebra, GroupModel model, int max_degree,
                   unsigned seed) {
  Json j;
  j["tool"] = "qgw";
  j["version"] = version();
  j["convention_ledger_hash"] = convention_ledger_hash();
  Json cfg;
  cfg["command"] = command;
  cfg["series"] = series_name(series);
  cfg["rank"] = rank;
  cfg["algebra"] = kind_name(algebra);
  cfg["model"] = (model == GroupModel::Sharp) ? "sharp" : "free";
  cfg["max_degree"] = max_degree;
  cfg["seed"] = seed;
  j["config"] = cfg;
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qgw

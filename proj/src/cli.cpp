#include "hodge/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#include "hodge/deformation.hpp"
#include "hodge/errors.hpp"
#include "hodge/gauss_manin.hpp"
#include "hodge/hodge_residue.hpp"
#include "hodge/mhs_pair.hpp"
#include "hodge/polynomial_parser.hpp"
#include "hodge/twisted_cohomology.hpp"

namespace hodge::cli {

using nlohmann::json;

namespace {

std::size_t inferred_vars(const RunConfig& c, const std::string& text) {
  if (c.vars) return *c.vars;
  // Bare input such as "x0^3" is read as a plane curve, the smallest ambient space.
  return std::max<std::size_t>(parse_polynomial(text).n_vars(), 3);
}

Polynomial input_form(const RunConfig& c) {
  if (c.poly) return parse_polynomial(*c.poly, inferred_vars(c, *c.poly));
  if (c.pair) return HypersurfacePair::named(*c.pair).z().form();
  throw PreconditionError("give --poly or --pair");
}

HypersurfacePair input_pair(const RunConfig& c, const char* fallback = nullptr) {
  if (c.poly) return HypersurfacePair(parse_polynomial(*c.poly, inferred_vars(c, *c.poly)));
  if (c.pair) return HypersurfacePair::named(*c.pair);
  if (fallback) return HypersurfacePair::named(fallback);
  throw PreconditionError("give --poly or --pair");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// One polynomial per line; '#' starts a comment. Forms of degree d-1 are
/// read as Q and lifted to x_N * Q.
std::vector<Polynomial> read_directions(const std::string& path, const Hypersurface& h) {
  std::vector<Polynomial> out;
  std::istringstream in(read_file(path));
  std::string line;
  const std::size_t nv = h.n_vars();
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Polynomial p = parse_polynomial(line, nv);
    if (!p.is_zero() && p.homogeneous_degree() == h.degree() - 1) p = Polynomial::variable(nv, nv - 1) * p;
    out.push_back(std::move(p));
  }
  return out;
}

json monomial_list(const std::vector<Monomial>& ms, std::size_t nv) {
  json out = json::array();
  for (const Monomial& m : ms) out.push_back(Polynomial(m).extend_vars(nv).to_string());
  return out;
}

bool certificate_applicable(const Certificate& c) {
  const json& w = c.witness;
  if (w.value("skipped", false)) return false;
  if (w.value("route", "") == "none") return false;
  if (w.contains("quotient_acyclic") && !w.at("quotient_acyclic").get<bool>()) return false;
  return true;
}

json skipped(const std::string& name, const std::string& reason) {
  return {{"name", name}, {"passed", false}, {"summary", "skipped: " + reason}, {"witness", {{"skipped", true}}}};
}

json jring_report(const RunConfig& c) {
  const Hypersurface h(input_form(c));
  JacobianRing ring(h);
  ring.require_smooth("jring");
  json dims = json::array();
  for (int k = 0; k <= h.socle_degree(); ++k) dims.push_back(ring.dim(k));
  json r = {{"n_vars", h.n_vars()},
            {"degree", h.degree()},
            {"socle_degree", h.socle_degree()},
            {"dims", dims},
            {"hilbert_oracle", hilbert_series_oracle(h.ambient_dim(), h.degree())},
            {"smoothness", to_json(ring.smoothness())}};
  if (c.degree) {
    const GradedQuotient& q = ring.piece(*c.degree);
    r["piece"] = {{"degree", *c.degree}, {"dim", q.dim()}, {"basis", monomial_list(q.quotient_basis(), h.n_vars())}};
  }
  return r;
}

json hodge_report(const RunConfig& c) {
  JacobianRing ring{Hypersurface(input_form(c))};
  const HodgeDiamond d = primitive_hodge_numbers(ring);
  json diamond = json::array();
  for (int p = 0; p <= d.dimension; ++p) {
    json row = json::array();
    for (int q = 0; q <= d.dimension; ++q) row.push_back(d.hodge_number(p, q));
    diamond.push_back(row);
  }
  return {{"dimension", d.dimension},
          {"degree", ring.surface().degree()},
          {"middle_primitive", d.middle_primitive},
          {"middle_full", d.middle_full},
          {"middle_betti", middle_betti(ring)},
          {"degenerate", d.degenerate},
          {"note", d.note},
          {"diamond", diamond}};
}

json twisted_report(const RunConfig& c) {
  JacobianRing ring{Hypersurface(input_form(c))};
  ring.require_smooth("twisted");
  const int n = ring.surface().dimension();
  if (c.p && c.k) {
    const TwistedCell cell = twisted_hodge(ring, *c.p, *c.k);
    return {{"cell", to_json(cell)}, {"consistent", cell.consistent()}};
  }
  const int pmin = c.p ? *c.p : 0, pmax = c.p ? *c.p : n;
  const long kmin = c.k ? *c.k : c.k_min, kmax = c.k ? *c.k : c.k_max;
  const TwistedTable t = twisted_table(ring, pmin, pmax, kmin, kmax);
  bool consistent = true;
  for (const auto& cell : t.cells) consistent = consistent && cell.consistent();
  return {{"p_range", {pmin, pmax}}, {"k_range", {kmin, kmax}}, {"cells", to_json(t)}, {"consistent", consistent}};
}

json mhs_report(const RunConfig& c) {
  const HypersurfacePair pair = input_pair(c, "fermat-cubic-7");
  const MhsReport rep = gysin_assemble(pair);
  std::optional<ClaimTable> claims;
  if (c.paper_table_file) claims = ClaimTable::from_json(json::parse(read_file(*c.paper_table_file)));
  json claim_findings = json::array();
  if (claims)
    for (const auto& f : audit(rep, claims))
      if (f.code == "claim") claim_findings.push_back({{"code", f.code}, {"message", f.message}});
  const Certificate ftop = f_top_cross_check(pair);
  return {{"z", pair.z().form().to_string()},
          {"y", pair.y().form().to_string()},
          {"report", to_json(rep)},
          {"claims_audit", claim_findings},
          {"f_top_cross_check", to_json(ftop)},
          {"f_top_applicable", certificate_applicable(ftop)}};
}

json deform_report(const RunConfig& c) {
  const HypersurfacePair pair = input_pair(c, "fermat-cubic-7");
  const TangentModel t = tangent_space(pair);
  json kappa = json::array();
  const int d = pair.z().degree();
  for (int deg = d - 2; deg <= d; ++deg)
    kappa.push_back({{"degree", deg},
                     {"dim", kappa_image(pair, deg).dim()},
                     {"ideal_rank", pair.z_ring().piece(deg).ideal_rank()}});
  return {{"tangent",
           {{"dim", t.dim()},
            {"lift_rank", t.lift_rank},
            {"lift_injective", t.lift_injective()},
            {"basis", monomial_list(t.basis, pair.z().n_vars())}}},
          {"obstruction", to_json(obstruction_vanishes(pair))},
          {"kappa", kappa},
          {"jb", to_json(jb_certificate(pair))}};
}

std::vector<Polynomial> seeded_y_fixing_directions(const HypersurfacePair& pair, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t nv = pair.z().n_vars();
  const auto quadrics = mono_basis(nv, pair.z().degree() - 1);
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) {
    Polynomial q(nv);
    for (const Monomial& m : quadrics) q.add_term(m, coef(rng));
    out.push_back(Polynomial::variable(nv, nv - 1) * q);
  }
  return out;
}

json gm_bundle(const HypersurfacePair& pair, const std::vector<Polynomial>& dirs) {
  Family fam(std::shared_ptr<const JacobianRing>(&pair.z_ring(), [](const JacobianRing*) {}), dirs);
  Certificate trans;
  trans.name = "transversality";
  trans.passed = true;
  json per = json::array();
  json ks = json::array();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Certificate t = transversality(fam, connection_matrix(fam, i));
    trans.passed = trans.passed && t.passed;
    per.push_back(t.witness);
    ks.push_back(to_json(ks_compatibility(fam, i)));
  }
  trans.witness = {{"directions", per}};
  trans.summary = trans.passed ? "pole order rises by at most one in every direction" : "transversality violated";
  json dir_strings = json::array();
  for (const auto& g : dirs) dir_strings.push_back(g.to_string());
  json symmetry = json::array();
  const bool sym_ok = pair.z().degree() == 3 && (pair.z().socle_degree() - 3) % 2 == 0;
  for (const auto& g : dirs)
    symmetry.push_back(sym_ok ? to_json(symmetry_certificate(pair, {g}))
                              : skipped("symmetry_certificate", "needs a cubic pair of odd dimension"));
  json out = {{"frame_size", fam.frame().size()},
              {"directions", dir_strings},
              {"transversality", to_json(trans)},
              {"ks", ks},
              {"symmetry", symmetry}};
  if (dirs.size() >= 2) out["flatness"] = to_json(flatness(fam, 0, 1));
  return out;
}

json gm_report(const RunConfig& c) {
  if (c.picard_fuchs) {
    if (!c.poly || !c.directions_file) throw PreconditionError("--picard-fuchs needs --poly and --directions");
    const Hypersurface h(input_form(c));
    std::vector<Polynomial> dirs = read_directions(*c.directions_file, h);
    if (dirs.empty()) throw PreconditionError("direction file is empty");
    dirs.resize(1);
    Family fam(h.form(), dirs);
    return {{"family", {{"base", h.form().to_string()}, {"direction", dirs[0].to_string()}}},
            {"class_index", c.class_index},
            {"picard_fuchs", to_json(picard_fuchs(fam, c.class_index, c.max_order))}};
  }
  const HypersurfacePair pair = input_pair(c, "fermat-cubic-7");
  const std::vector<Polynomial> dirs =
      c.directions_file ? read_directions(*c.directions_file, pair.z()) : coordinate_directions(pair);
  return gm_bundle(pair, dirs);
}

json certify_report(const RunConfig& c) {
  const HypersurfacePair pair = input_pair(c, "fermat-cubic-7");
  json certs = json::array();
  certs.push_back(to_json(pair.z_ring().smoothness()));
  certs.push_back(to_json(pair.y_ring().smoothness()));
  const Certificate ftop = f_top_cross_check(pair);
  certs.push_back(certificate_applicable(ftop) ? to_json(ftop) : skipped("f_top_cross_check", ftop.summary));
  const bool cubic = pair.z().degree() == 3;
  if (cubic) {
    certs.push_back(to_json(obstruction_vanishes(pair)));
    certs.push_back(to_json(jb_certificate(pair)));
    if ((pair.z().socle_degree() - 3) % 2 == 0)
      certs.push_back(to_json(symmetry_certificate(pair, coordinate_directions(pair))));
    else
      certs.push_back(skipped("symmetry_certificate", "needs odd-dimensional Z"));
  } else {
    for (const char* name : {"obstruction_vanishes", "jb_certificate", "symmetry_certificate"})
      certs.push_back(skipped(name, "cubic pairs only"));
  }
  return {{"z", pair.z().form().to_string()}, {"certificates", certs}};
}

/// Nonzero h^q(Omega^p(k)) for p, q > 0 and k >= 0 on a smooth cubic 5-fold, as printed.
std::map<std::tuple<int, int, long>, std::size_t> printed_cubic_fivefold_table() {
  std::map<std::tuple<int, int, long>, std::size_t> t;
  for (int i = 1; i <= 5; ++i) t[{i, i, 0}] = 1;
  t[{2, 3, 0}] = 21;
  t[{2, 3, 1}] = 7;
  t[{2, 3, 2}] = 1;
  const std::size_t c3[] = {21, 35, 35, 21, 7, 1};
  for (long k = 0; k <= 5; ++k) t[{3, 2, k}] = c3[k];
  for (long k = 1; k <= 8; ++k) t[{4, 1, k}] = binomial(7, k - 1).get_ui();
  return t;
}

json paper_check_report(const RunConfig& c) {
  const HypersurfacePair pair = input_pair(c, "fermat-cubic-7");
  if (pair.z().n_vars() != 7 || pair.z().degree() != 3)
    throw PreconditionError("paper-check runs on a cubic 5-fold pair");
  json rows = json::array();
  auto add = [&rows](const std::string& item, bool passed, const std::string& detail, json witness) {
    rows.push_back({{"item", item}, {"passed", passed}, {"detail", detail}, {"witness", std::move(witness)}});
  };

  // Twisted forms: every nonzero h^q(Omega^p(k)) with p, q > 0, 0 <= k <= 9.
  const TwistedTable table = twisted_table(pair.z_ring(), 1, 5, 0, 9);
  const auto printed = printed_cubic_fivefold_table();
  json mismatches = json::array();
  std::size_t nonzero = 0;
  for (const auto& [key, v] : table.entries) {
    const auto [p, q, k] = key;
    if (q == 0) continue;
    ++nonzero;
    const auto it = printed.find(key);
    const std::size_t expected = it == printed.end() ? 0 : it->second;
    if (v != expected) mismatches.push_back({{"p", p}, {"q", q}, {"k", k}, {"computed", v}, {"printed", expected}});
  }
  for (const auto& [key, v] : printed) {
    const auto [p, q, k] = key;
    if (table.at(p, q, k) == 0) mismatches.push_back({{"p", p}, {"q", q}, {"k", k}, {"computed", 0}, {"printed", v}});
  }
  add("twisted forms table", mismatches.empty(),
      std::to_string(nonzero) + " nonzero entries with p, q > 0, k in [0, 9]; " + std::to_string(mismatches.size()) +
          " mismatches",
      {{"mismatches", mismatches}});

  const MhsReport rep = gysin_assemble(pair);
  const bool dims_ok = rep.dim_total == 64 && rep.f_dim(2) == 64 && rep.f_dim(3) == 42 && rep.f_dim(4) == 1 &&
                       rep.f_dim(5) == 0 && rep.audit.empty();
  add("Hodge filtration of U", dims_ok,
      "dim H^5(U) = " + std::to_string(rep.dim_total) + ", F^3 = " + std::to_string(rep.f_dim(3)) +
          ", F^4 = " + std::to_string(rep.f_dim(4)) + ", F^5 = " + std::to_string(rep.f_dim(5)),
      to_json(rep));

  const auto findings = audit(rep, ClaimTable::cubic_fivefold_published());
  json notes = json::array();
  for (const auto& f : findings) notes.push_back({{"code", f.code}, {"message", f.message}});
  const bool documented = findings.size() == 1 && findings[0].code == "claim" &&
                          findings[0].message.find("h_6^{3,3}") != std::string::npos;
  add("audit of printed Hodge numbers", documented,
      std::to_string(findings.size()) + " finding(s)" + (documented ? ", the documented h_6^{3,3} inconsistency" : ""),
      {{"findings", notes}});

  const Certificate ftop = f_top_cross_check(pair);
  add("F^4 via the log sequence", ftop.passed, ftop.summary, ftop.witness);
  const Certificate ob = obstruction_vanishes(pair);
  add("obstruction vanishing", ob.passed, ob.summary, ob.witness);
  const Certificate jb = jb_certificate(pair);
  add("contraction and polarization ranks", jb.passed, jb.summary,
      {{"product_rank", jb.witness["product_rank"]}, {"pairing_rank", jb.witness["pairing_rank"]}});

  std::vector<Polynomial> dirs = coordinate_directions(pair);
  for (auto& g : seeded_y_fixing_directions(pair, 10, 2026)) dirs.push_back(std::move(g));
  const Certificate sym = symmetry_certificate(pair, dirs);
  add("Lagrangian symmetry", sym.passed, sym.summary,
      {{"directions", dirs.size()}, {"failures", sym.witness["failures"]}});
  const Certificate control = symmetry_certificate(pair, coordinate_directions(pair), ambient_functional(7, 7, 2026));
  add("symmetry negative control", !control.passed,
      "non-socle functional: " + control.summary, {{"failures", control.witness["failures"]}});

  const json gm = gm_bundle(pair, {dirs[0], dirs[1], dirs.back()});
  bool ks_ok = true;
  for (const auto& k : gm["ks"]) ks_ok = ks_ok && k["passed"].get<bool>();
  const bool gm_ok = gm["transversality"]["passed"].get<bool>() && ks_ok && gm["flatness"]["passed"].get<bool>();
  add("Gauss-Manin structure", gm_ok,
      "frame " + std::to_string(gm["frame_size"].get<std::size_t>()) +
          ", transversality, Kodaira-Spencer scalar -3, flatness",
      {{"transversality", gm["transversality"]["passed"]}, {"ks", ks_ok}, {"flatness", gm["flatness"]["passed"]}});

  bool all = true;
  for (const auto& r : rows) all = all && r["passed"].get<bool>();
  return {{"pair", pair.z().form().to_string()}, {"scoreboard", rows}, {"all_passed", all},
          {"audit_notes", documented ? 1 : static_cast<int>(findings.size())}};
}

}  // namespace

json build_report(const RunConfig& c) {
  if (c.subcommand == "jring") return jring_report(c);
  if (c.subcommand == "hodge") return hodge_report(c);
  if (c.subcommand == "twisted") return twisted_report(c);
  if (c.subcommand == "mhs") return mhs_report(c);
  if (c.subcommand == "deform") return deform_report(c);
  if (c.subcommand == "gm") return gm_report(c);
  if (c.subcommand == "certify") return certify_report(c);
  if (c.subcommand == "paper-check") return paper_check_report(c);
  throw PreconditionError("unknown subcommand " + c.subcommand);
}

int report_status(const RunConfig& c, const json& r) {
  auto failed = [](const json& cert) { return !cert.value("passed", false); };
  if (c.subcommand == "mhs") {
    if (!r["report"]["audit"].empty()) return kCertificateFailure;
    if (r["f_top_applicable"].get<bool>() && failed(r["f_top_cross_check"])) return kCertificateFailure;
  } else if (c.subcommand == "deform") {
    if (failed(r["obstruction"]) || failed(r["jb"])) return kCertificateFailure;
  } else if (c.subcommand == "gm" && !c.picard_fuchs) {
    if (failed(r["transversality"])) return kCertificateFailure;
    for (const auto& k : r["ks"])
      if (failed(k)) return kCertificateFailure;
    for (const auto& s : r["symmetry"])
      if (!s["witness"].value("skipped", false) && failed(s)) return kCertificateFailure;
    if (r.contains("flatness") && failed(r["flatness"])) return kCertificateFailure;
  } else if (c.subcommand == "certify") {
    for (const auto& cert : r["certificates"])
      if (!cert["witness"].value("skipped", false) && failed(cert)) return kCertificateFailure;
  } else if (c.subcommand == "paper-check") {
    if (!r["all_passed"].get<bool>()) return kCertificateFailure;
  } else if (c.subcommand == "twisted") {
    if (!r["consistent"].get<bool>()) return kCertificateFailure;
  }
  return kOk;
}

namespace {

std::string join(const json& arr) {
  std::string s;
  for (const auto& v : arr) s += (s.empty() ? "" : " ") + v.dump();
  return s;
}

std::string dims_string(const json& h) {
  if (h.empty()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& [q, v] : h.items()) {
    s += (first ? "" : ", ") + ("q=" + q + ": " + v.dump());
    first = false;
  }
  return s + "}";
}

const char* verdict(const json& cert) {
  if (cert.contains("witness") && cert["witness"].value("skipped", false)) return "SKIP";
  return cert.value("passed", false) ? "PASS" : "FAIL";
}

void render_cert(std::ostream& out, const json& cert) {
  out << "  [" << verdict(cert) << "] " << cert["name"].get<std::string>() << ": "
      << cert["summary"].get<std::string>() << "\n";
}

}  // namespace

void render_text(const RunConfig& c, const json& r, std::ostream& out) {
  if (c.subcommand == "jring") {
    out << "R_k dims, k = 0.." << r["socle_degree"] << ": " << join(r["dims"]) << "\n";
    out << "Hilbert oracle:         " << join(r["hilbert_oracle"]) << "\n";
    if (r.contains("piece"))
      out << "R_" << r["piece"]["degree"] << " (dim " << r["piece"]["dim"] << "): " << join(r["piece"]["basis"])
          << "\n";
  } else if (c.subcommand == "hodge") {
    out << "dimension " << r["dimension"] << ", degree " << r["degree"] << "\n";
    out << "primitive middle Hodge numbers h^{n-q,q}: " << join(r["middle_primitive"]) << "\n";
    out << "full middle Hodge numbers:               " << join(r["middle_full"]) << "\n";
    out << "middle Betti number: " << r["middle_betti"] << "\n";
    if (r["degenerate"].get<bool>()) out << "note: " << r["note"].get<std::string>() << "\n";
  } else if (c.subcommand == "twisted") {
    if (r.contains("cell")) {
      const json& cell = r["cell"];
      out << "h^q(Omega^" << cell["p"] << "(" << cell["k"] << ")) = " << dims_string(cell["h"]) << "  chi "
          << cell["chi"] << "  route " << cell["route"].get<std::string>() << "\n";
    } else {
      for (const auto& cell : r["cells"])
        out << "p=" << cell["p"] << " k=" << cell["k"] << ": " << dims_string(cell["h"]) << "\n";
    }
  } else if (c.subcommand == "mhs") {
    const json& rep = r["report"];
    out << "dim H^" << rep["n"] << "(U) = " << rep["dim_total"] << ", dim W_" << rep["n"] << " = "
        << rep["dim_W_lower"] << "\n";
    out << "F^p dims, p = 0..n+1: " << join(rep["hodge_filtration_dims"]) << "\n";
    for (const char* key : {"hodge_lower", "gr_upper_hodge"})
      for (const auto& t : rep[key])
        out << "h_" << t["weight"] << "^{" << t["p"] << "," << t["q"] << "} = " << t["h"] << "\n";
    for (const auto& f : rep["audit"]) out << "audit [" << f["code"].get<std::string>() << "] " << f["message"] << "\n";
    for (const auto& f : r["claims_audit"])
      out << "claim audit: " << f["message"].get<std::string>() << "\n";
    render_cert(out, r["f_top_cross_check"]);
  } else if (c.subcommand == "deform") {
    const json& t = r["tangent"];
    out << "tangent space R_2: dim " << t["dim"] << ", lift rank " << t["lift_rank"] << "\n";
    for (const auto& k : r["kappa"])
      out << "kappa image in degree " << k["degree"] << ": dim " << k["dim"] << " (ideal rank " << k["ideal_rank"]
          << ")\n";
    render_cert(out, r["obstruction"]);
    render_cert(out, r["jb"]);
  } else if (c.subcommand == "gm") {
    if (r.contains("picard_fuchs")) {
      const json& pf = r["picard_fuchs"];
      if (!pf["found"].get<bool>()) {
        out << "Picard-Fuchs operator: not found up to order " << c.max_order << "\n";
      } else {
        out << "Picard-Fuchs operator of order " << pf["order"] << ":\n";
        for (std::size_t i = 0; i < pf["coefficients"].size(); ++i)
          out << "  (d/dt)^" << i << ": " << pf["coefficients"][i].get<std::string>() << "\n";
      }
    } else {
      out << "frame size " << r["frame_size"] << ", " << r["directions"].size() << " directions\n";
      render_cert(out, r["transversality"]);
      for (const auto& k : r["ks"]) render_cert(out, k);
      for (const auto& s : r["symmetry"]) render_cert(out, s);
      if (r.contains("flatness")) render_cert(out, r["flatness"]);
    }
  } else if (c.subcommand == "certify") {
    for (const auto& cert : r["certificates"]) render_cert(out, cert);
  } else if (c.subcommand == "paper-check") {
    out << "pair: " << r["pair"].get<std::string>() << "\n";
    for (const auto& row : r["scoreboard"])
      out << "  [" << (row["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << row["item"].get<std::string>() << ": "
          << row["detail"].get<std::string>() << "\n";
    out << "audit notes: " << r["audit_notes"] << "\n";
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const json report = build_report(config);
    if (config.json)
      out << report.dump(2) << "\n";
    else
      render_text(config, report, out);
    return report_status(config, report);
  } catch (const SingularError& e) {
    err << "singular input: " << e.what() << "\n";
    return kSingular;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const json::parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "work budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hodge::cli

#include <iostream>

#include "CLI11.hpp"
#include "hodge/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Hodge-theoretic computations for hypersurfaces and hypersurface pairs"};
  app.require_subcommand(1);
  hodge::cli::RunConfig cfg;

  auto add_input = [&cfg](CLI::App* sub) {
    sub->add_option("--poly", cfg.poly, "homogeneous polynomial in x0..xN");
    sub->add_option("--vars", cfg.vars, "number of variables (default: inferred, at least 3)");
    sub->add_option("--pair", cfg.pair, "built-in pair, e.g. fermat-cubic-7");
    sub->add_flag("--json", cfg.json, "emit the JSON report");
  };

  auto* jring = app.add_subcommand("jring", "graded dimensions of the Jacobian ring");
  add_input(jring);
  jring->add_option("--degree", cfg.degree, "also list a quotient basis of R_degree");

  add_input(app.add_subcommand("hodge", "primitive middle Hodge numbers by Griffiths residues"));

  auto* twisted = app.add_subcommand("twisted", "h^q(Omega^p_Z(k)) on the hypersurface");
  add_input(twisted);
  twisted->add_option("--p", cfg.p, "form degree");
  twisted->add_option("--k", cfg.k, "twist");
  twisted->add_option("--kmin", cfg.k_min, "smallest twist for a table")->capture_default_str();
  twisted->add_option("--kmax", cfg.k_max, "largest twist for a table")->capture_default_str();

  auto* mhs = app.add_subcommand("mhs", "mixed Hodge structure on H^n(Z \\ Y)");
  add_input(mhs);
  mhs->add_option("--paper-table", cfg.paper_table_file, "JSON file of claimed values to audit");

  add_input(app.add_subcommand("deform", "tangent, obstruction and contraction certificates for a cubic pair"));

  auto* gm = app.add_subcommand("gm", "Gauss-Manin connection certificates");
  add_input(gm);
  gm->add_option("--directions", cfg.directions_file, "file with one direction polynomial per line");
  gm->add_flag("--picard-fuchs", cfg.picard_fuchs, "Picard-Fuchs operator along the first direction");
  gm->add_option("--class", cfg.class_index, "frame index of the class")->capture_default_str();
  gm->add_option("--max-order", cfg.max_order, "largest operator order tried")->capture_default_str();

  add_input(app.add_subcommand("certify", "all certificates for a pair"));
  add_input(app.add_subcommand("paper-check", "scoreboard of the checkable claims on a cubic 5-fold pair"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return hodge::cli::run(cfg, std::cout, std::cerr);
}

// ncdeform: normal forms, truncated Groebner bases and quotient dimensions in
// free r-pointed algebras, plus the deformation-theoretic generators
// (dualized A-infinity tables, obstruction lifting, Grassmann and contraction
// models). Exit codes: 0 ok, 1 parse error, 2 contract violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ncdeform/format.hpp"
#include "ncdeform/io_json.hpp"
#include "ncdeform/models.hpp"

using namespace ncdeform;
using Poly = NCPoly<Rational>;
using Pres = Presentation<Rational>;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int resolve_bound(std::optional<int> flag, int fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NCDEFORM_MAX_DEGREE")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
    throw ParseError(0, 0, "NCDEFORM_MAX_DEGREE must be a positive integer");
  }
  return fallback;
}

std::string matrix_str(const std::vector<std::vector<long long>>& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    out += i ? ",[" : "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(m[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

void print_dims_report(const TotalDimReport& rep, bool as_json) {
  if (as_json) {
    std::cout << dims_report_to_json(rep).dump(2) << "\n";
    return;
  }
  for (size_t d = 0; d < rep.dims.size(); ++d)
    std::cout << "d=" << d << " dims=" << matrix_str(rep.dims[d]) << "\n";
  if (rep.finite)
    std::cout << "total " << rep.total << " (finite)\n";
  else
    std::cout << "total " << rep.total << " through degree " << rep.dims.size() - 1
              << " (inconclusive)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic kernel for multi-pointed NC deformation algebra"};
  app.require_subcommand(1);

  std::string pres_file, poly_expr, ainf_file, data_file;
  std::optional<int> max_degree;
  bool as_json = false;

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo a presentation");
  nf->add_option("--pres", pres_file, "presentation file")->required();
  nf->add_option("--poly", poly_expr, "polynomial expression")->required();
  nf->add_option("--max-degree", max_degree, "completion degree bound");

  auto* gb = app.add_subcommand("gb", "completed basis listing");
  gb->add_option("--pres", pres_file, "presentation file")->required();
  gb->add_option("--max-degree", max_degree, "completion degree bound");

  auto* dims = app.add_subcommand("dims", "quotient dimensions by degree");
  dims->add_option("--pres", pres_file, "presentation file")->required();
  dims->add_option("--max-degree", max_degree, "degree bound");
  dims->add_flag("--json", as_json, "emit JSON");

  auto* ab = app.add_subcommand("abelianize", "abelianized presentation (r = 1)");
  ab->add_option("--pres", pres_file, "presentation file")->required();

  auto* deform = app.add_subcommand("deform", "presentation from A-infinity product tables");
  deform->add_option("--ainf", ainf_file, "A-infinity JSON file")->required();

  auto* lift = app.add_subcommand(
      "lift", "presentation from obstruction lifting with the induced oracle");
  lift->add_option("--ainf", ainf_file, "A-infinity JSON file")->required();
  lift->add_option("--max-degree", max_degree, "lifting degree bound");

  auto* grass = app.add_subcommand("grassmann", "linear-subspace deformation model");
  int gm = 0, gn = 0;
  bool want_counts = false, want_pres = false, want_ainf = false;
  grass->add_option("m", gm, "subspace dimension")->required();
  grass->add_option("n", gn, "ambient dimension")->required();
  auto* oc = grass->add_flag("--counts", want_counts, "tangent/obstruction counts");
  auto* op = grass->add_flag("--pres", want_pres, "presentation text");
  auto* oa = grass->add_flag("--ainf", want_ainf, "A-infinity JSON");
  oc->excludes(op)->excludes(oa);
  op->excludes(oa);

  auto* contraction = app.add_subcommand("contraction", "contraction-algebra numerics");
  contraction->add_option("--data", data_file, "degeneration data JSON")->required();

  auto* re = app.add_subcommand("re", "trivial extension R_e presentation");
  int re_r = 1;
  re->add_option("r", re_r, "number of points")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (nf->parsed()) {
      Pres pres = parse_presentation(read_file(pres_file));
      int bound =
          resolve_bound(max_degree, std::max(pres.truncation, pres.max_relation_degree()));
      auto basis = complete(pres, bound);
      Poly f = parse_poly(poly_expr, pres.sig);
      std::cout << poly_to_string(basis.normal_form(f)) << "\n";
    } else if (gb->parsed()) {
      Pres pres = parse_presentation(read_file(pres_file));
      int bound =
          resolve_bound(max_degree, std::max(pres.truncation, pres.max_relation_degree()));
      auto basis = complete(pres, bound);
      std::cout << "complete_up_to " << basis.complete_up_to() << "\n";
      std::cout << "size " << basis.elements().size() << "\n";
      for (const auto& e : basis.elements()) std::cout << poly_to_string(e) << "\n";
    } else if (dims->parsed()) {
      Pres pres = parse_presentation(read_file(pres_file));
      int bound = resolve_bound(max_degree, pres.truncation);
      print_dims_report(total_dim_if_finite(pres, bound), as_json);
    } else if (ab->parsed()) {
      Pres pres = parse_presentation(read_file(pres_file));
      std::cout << presentation_to_string(abelianize(pres));
    } else if (deform->parsed()) {
      AInfinityData a = ainfinity_from_string(read_file(ainf_file));
      std::cout << presentation_to_string(dualize_products(a));
    } else if (lift->parsed()) {
      AInfinityData a = ainfinity_from_string(read_file(ainf_file));
      Pres dual = dualize_products(a);
      int bound = resolve_bound(max_degree, dual.truncation);
      Pres lifted =
          lift_obstructions(a.dims(), dual.sig, truncation_oracle(dual.relations), bound);
      std::cout << presentation_to_string(lifted);
      bool agree = quotient_dims(dual, bound) == quotient_dims(lifted, bound);
      std::cout << "two-path agreement: " << (agree ? "OK" : "FAIL") << " (degrees 0.."
                << bound << ")\n";
      if (!agree) throw ContractViolation("lifted and dualized dimensions disagree");
    } else if (grass->parsed()) {
      GrassmannSpec spec{gm, gn};
      if (want_pres) {
        std::cout << presentation_to_string(grassmann_presentation(spec));
      } else if (want_ainf) {
        std::cout << ainfinity_to_json(grassmann_ainfinity(spec)).dump(2) << "\n";
      } else {
        auto c = grassmann_counts(spec);
        std::cout << "t1=" << c.t1_dim << " t2=" << c.t2_dim << " rank=" << c.relation_rank
                  << "\n";
      }
    } else if (contraction->parsed()) {
      DegenerationData d = degeneration_from_string(read_file(data_file));
      auto num = contraction_numerics(d);
      std::cout << "dim R = " << num.dim_R << ";";
      for (const auto& [deg, count] : num.n_d) std::cout << " n_" << deg << "=" << count;
      std::cout << "\n";
      std::cout << "bimodule dims = " << matrix_str(num.bimodule_dims) << "\n";
    } else if (re->parsed()) {
      std::cout << presentation_to_string(trivial_extension_re(re_r));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

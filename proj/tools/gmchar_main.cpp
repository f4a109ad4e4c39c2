// gmchar_main.cpp: command-line front end.
//
// Exit codes: 0 success, 1 check-suite failure, 2 usage or domain error.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmchar/crosscheck.hpp"
#include "gmchar/discriminant.hpp"
#include "gmchar/hilbert_mumford.hpp"
#include "gmchar/intersection.hpp"
#include "gmchar/render.hpp"
#include "gmchar/semigroup.hpp"
#include "gmchar/singularities.hpp"
#include "gmchar/tables.hpp"

namespace {

using namespace gmchar;

std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw OutOfRange("malformed integer list '" + csv + "'");
    out.push_back(v);
  }
  return out;
}

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

AttachmentConfig parse_attach(const std::string& spec, const SingularityModel& model) {
  if (spec == "all") return AttachmentConfig::all_of(model);
  if (spec == "none") return AttachmentConfig::none();
  AttachmentConfig a;
  for (long v : parse_long_list(spec)) a.attached.insert(static_cast<int>(v));
  return a;
}

std::string delta_parts_str(const Character& c) {
  if (!c.delta_parts()) return "-";
  std::string s;
  for (const auto& [h, v] : *c.delta_parts()) {
    if (!s.empty()) s += " ";
    s += std::to_string(h) + ":" + to_string(v);
  }
  return s;
}

void append_character_fields(Record& rec, const Character& c) {
  rec.fields.emplace_back("chi_lambda", to_string(c.chi_lambda()));
  rec.fields.emplace_back("chi_lambda2", to_string(c.chi_lambda2()));
  rec.fields.emplace_back("chi_delta", to_string(c.chi_delta()));
  rec.fields.emplace_back("delta_parts", delta_parts_str(c));
  rec.fields.emplace_back("chi_K", to_string(c.chi_K()));
  try {
    const auto a = alpha_value(c);
    rec.fields.emplace_back("alpha", a.trivial() ? "trivial" : a.value->str());
  } catch (const DegenerateDenominator&) {
    rec.fields.emplace_back("alpha", "undefined");
  }
  try {
    rec.fields.emplace_back("slope", slope(c).str());
  } catch (const ZeroLambda&) {
    rec.fields.emplace_back("slope", "undefined");
  }
}

struct CharArgs {
  std::string family;
  long k = 1, p = 2, q = 3, b = 1, m = 1, g = 3, ell = 1, i = 1, j = 2;
  std::string gaps;
  std::string attach = "all";
};

SingularityModel build_model(const CharArgs& a) {
  if (a.family == "a-even") return SingularityModel::a_even(a.k);
  if (a.family == "a-odd") return SingularityModel::a_odd(a.k);
  if (a.family == "d-odd") return SingularityModel::d_odd(a.k);
  if (a.family == "d-even") return SingularityModel::d_even(a.k);
  if (a.family == "e6") return SingularityModel::e6();
  if (a.family == "e7") return SingularityModel::e7();
  if (a.family == "e8") return SingularityModel::e8();
  if (a.family == "toric") return SingularityModel::toric(a.p, a.q, a.b);
  if (a.family == "unibranch") return SingularityModel::unibranch(parse_long_list(a.gaps));
  if (a.family == "elliptic") return SingularityModel::elliptic_mfold(a.m);
  if (a.family == "ribbon") return SingularityModel::ribbon(a.g, a.ell);
  if (a.family == "chain-odd-odd") return SingularityModel::chain_odd_odd(a.i, a.j);
  if (a.family == "chain-odd-even") return SingularityModel::chain_odd_even(a.i, a.j);
  throw OutOfRange("unknown family '" + a.family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact G_m-character and stability-index toolkit for curve singularities"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // table
  std::string table_which;
  long k_max = 5;
  CLI::App* c_table = sub("table", "emit a character / dangling / prediction table");
  c_table->add_option("which", table_which, "which table")
      ->required()
      ->check(CLI::IsMember({"characters", "dangling", "predictions"}));
  c_table->add_option("--k-max", k_max, "largest series index")->capture_default_str();

  // semigroup
  long sg_p = 0, sg_q = 0;
  CLI::App* c_semi = sub("semigroup", "gap data of the numerical semigroup <p, q>");
  c_semi->add_option("--p", sg_p)->required();
  c_semi->add_option("--q", sg_q)->required();

  // char
  CharArgs ca;
  CLI::App* c_char = sub("char", "character of a catalogued singularity family");
  c_char->add_option("--family", ca.family, "family tag")
      ->required()
      ->check(CLI::IsMember({"a-even", "a-odd", "d-odd", "d-even", "e6", "e7", "e8", "toric",
                             "unibranch", "elliptic", "ribbon", "chain-odd-odd",
                             "chain-odd-even"}));
  c_char->add_option("--k", ca.k, "series index");
  c_char->add_option("--p", ca.p);
  c_char->add_option("--q", ca.q);
  c_char->add_option("--b", ca.b, "branch multiplicity");
  c_char->add_option("--gaps", ca.gaps, "comma-separated gap list");
  c_char->add_option("--m", ca.m, "elliptic m-fold index");
  c_char->add_option("--g", ca.g, "ribbon genus");
  c_char->add_option("--l", ca.ell, "ribbon twisting parameter");
  c_char->add_option("--i", ca.i, "chain index i");
  c_char->add_option("--j", ca.j, "chain index j");
  c_char->add_option("--attach", ca.attach, "attachment subset: all, none or e.g. 1,2")
      ->capture_default_str();

  // disc
  long d_n = 0, d_w = 1;
  bool d_oracle = false;
  CLI::App* c_disc = sub("disc", "weighted degree of the miniversal discriminant");
  c_disc->add_option("--n", d_n, "polynomial degree")->required();
  c_disc->add_option("--wx", d_w, "weight of x")->capture_default_str();
  c_disc->add_flag("--oracle", d_oracle, "verify via symbolic resultant expansion (n <= 8)");

  // family
  std::string f_name;
  long f_k = 1, f_p = 2, f_q = 3, f_b = 1;
  bool f_threshold = false, f_cross = false;
  CLI::App* c_family = sub("family", "intersection numbers of a one-parameter family");
  c_family->add_option("--name", f_name)
      ->required()
      ->check(CLI::IsMember({"bk", "hk", "trik", "bhk", "toric"}));
  c_family->add_option("--k", f_k, "series index");
  c_family->add_option("--p", f_p);
  c_family->add_option("--q", f_q);
  c_family->add_option("--b", f_b);
  c_family->add_flag("--threshold", f_threshold, "include the negativity threshold");
  c_family->add_flag("--crosscheck", f_cross, "compare against the catalog character");

  // git-index
  std::string gi_lambda = "0", gi_delta = "0";
  long gi_g = 2, gi_n = 1, gi_m = 2;
  bool gi_chow = false;
  CLI::App* c_git = sub("git-index", "Hilbert-Mumford index for characters (chi_lambda, chi_delta)");
  c_git->add_option("--chi-lambda", gi_lambda)->required();
  c_git->add_option("--chi-delta", gi_delta)->required();
  c_git->add_option("--g", gi_g, "arithmetic genus")->required();
  c_git->add_option("--n", gi_n, "canonical power")->capture_default_str();
  c_git->add_option("--m", gi_m, "Hilbert point index")->capture_default_str();
  c_git->add_flag("--chow", gi_chow, "Chow limit instead of the m-th Hilbert point");

  // ribbon-stability
  long rs_g = 3, rs_l = 1, rs_n = 1, rs_m = 2;
  CLI::App* c_ribbon = sub("ribbon-stability", "stability verdict for the ribbon C_l");
  c_ribbon->add_option("--g", rs_g, "genus")->required();
  c_ribbon->add_option("--l", rs_l, "twisting parameter")->required();
  c_ribbon->add_option("--n", rs_n, "canonical power")->capture_default_str();
  c_ribbon->add_option("--m", rs_m, "Hilbert point index")->capture_default_str();

  // check
  CLI::App* c_check = sub("check", "run the full consistency suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = parse_format(format);
  try {
    if (*c_table) {
      Params params = {{"which", table_which}};
      std::vector<TableRow> rows;
      if (table_which == "characters") {
        rows = emit_table_characters(k_max);
        params.emplace_back("k_max", std::to_string(k_max));
      } else if (table_which == "dangling") {
        rows = emit_table_dangling(k_max);
        params.emplace_back("k_max", std::to_string(k_max));
      } else {
        rows = emit_predictions();
      }
      std::cout << render_table("table", params, rows, fmt);
    } else if (*c_semi) {
      const auto sg = gaps_two_generated(sg_p, sg_q);
      Record rec;
      rec.command = "semigroup";
      rec.params = {{"p", std::to_string(sg_p)}, {"q", std::to_string(sg_q)}};
      rec.fields.emplace_back("gaps", join_longs(sg.gaps));
      rec.fields.emplace_back("frobenius", std::to_string(sg.frobenius()));
      rec.fields.emplace_back("genus", std::to_string(sg.genus()));
      rec.fields.emplace_back("sum_of_gaps", to_string(sum_of_gaps(sg.gaps)));
      rec.fields.emplace_back("sum_closed_form", to_string(sum_of_gaps_closed_form(sg_p, sg_q)));
      rec.fields.emplace_back("symmetric", is_symmetric(sg.gaps) ? "true" : "false");
      rec.fields.emplace_back("apery_set", join_longs(apery_set(sg_p, sg_q)));
      std::cout << render_record(rec, fmt);
    } else if (*c_char) {
      const SingularityModel model = build_model(ca);
      const AttachmentConfig attach = parse_attach(ca.attach, model);
      const Character c = chi_family(model, attach);
      Record rec;
      rec.command = "char";
      rec.params = {{"family", ca.family}, {"label", model.label()}};
      std::string att;
      for (int idx : attach.attached) {
        if (!att.empty()) att += ",";
        att += std::to_string(idx);
      }
      rec.params.emplace_back("attach", att.empty() ? "none" : att);
      append_character_fields(rec, c);
      std::cout << render_record(rec, fmt);
    } else if (*c_disc) {
      Record rec;
      rec.command = "disc";
      rec.params = {{"n", std::to_string(d_n)}, {"wx", std::to_string(d_w)}};
      rec.fields.emplace_back("weighted_degree", to_string(disc_weighted_degree(d_n, d_w)));
      if (d_oracle)
        rec.fields.emplace_back("oracle_degree", to_string(disc_oracle(d_n, d_w)));
      std::cout << render_record(rec, fmt);
    } else if (*c_family) {
      FamilyIntersection fi;
      SingularityModel model = SingularityModel::a_odd(1);
      AttachmentConfig attach;
      if (f_name == "bk") {
        fi = family_bk(f_k);
        model = SingularityModel::a_odd(f_k);
        attach = AttachmentConfig::all_of(model);
      } else if (f_name == "hk") {
        fi = family_hk(f_k);
        model = SingularityModel::a_odd(f_k);
        attach = AttachmentConfig::subset({1});
      } else if (f_name == "trik") {
        fi = family_trik(f_k);
        model = SingularityModel::d_even(f_k);
        attach = AttachmentConfig::all_of(model);
      } else if (f_name == "bhk") {
        fi = family_bhk(f_k);
        model = SingularityModel::d_even(f_k);
        attach = AttachmentConfig::subset({1, 2});
      } else {
        fi = family_toric(f_p, f_q, f_b);
        model = SingularityModel::toric(f_p, f_q, f_b);
        attach = AttachmentConfig::all_of(model);
      }
      Record rec;
      rec.command = "family";
      rec.params = {{"name", f_name}};
      rec.fields.emplace_back("family", fi.name);
      rec.fields.emplace_back("lambda", fi.lambda.str());
      rec.fields.emplace_back("delta0", fi.delta0.str());
      std::string psis;
      for (const auto& v : fi.psi) {
        if (!psis.empty()) psis += ",";
        psis += v.str();
      }
      rec.fields.emplace_back("psi", psis);
      rec.fields.emplace_back("deg_b", std::to_string(fi.deg_b));
      if (fi.kappa) rec.fields.emplace_back("kappa", fi.kappa->str());
      if (fi.genus) rec.fields.emplace_back("genus", to_string(*fi.genus));
      if (f_threshold)
        rec.fields.emplace_back("threshold", negativity_threshold(fi).str());
      if (f_cross) {
        const auto rep = crosscheck(model, attach);
        rec.fields.emplace_back("catalog_chi_lambda", to_string(rep.catalog.chi_lambda()));
        rec.fields.emplace_back("catalog_chi_delta", to_string(rep.catalog.chi_delta()));
        rec.fields.emplace_back("family_chi_lambda", to_string(rep.from_family.chi_lambda()));
        rec.fields.emplace_back("family_chi_delta", to_string(rep.from_family.chi_delta()));
        rec.fields.emplace_back("agrees", rep.agrees ? "true" : "false");
      }
      std::cout << render_record(rec, fmt);
    } else if (*c_git) {
      Record rec;
      rec.command = "git-index";
      rec.params = {{"chi_lambda", gi_lambda},
                    {"chi_delta", gi_delta},
                    {"g", std::to_string(gi_g)},
                    {"n", std::to_string(gi_n)}};
      Rational idx;
      if (gi_chow) {
        rec.params.emplace_back("point", "chow");
        idx = hm_index_chow(Rational::parse(gi_lambda), Rational::parse(gi_delta), gi_g, gi_n);
      } else {
        rec.params.emplace_back("m", std::to_string(gi_m));
        idx = hm_index_hilbert(
            {Rational::parse(gi_lambda), Rational::parse(gi_delta), gi_g, gi_n, gi_m});
      }
      rec.fields.emplace_back("index", idx.str());
      std::cout << render_record(rec, fmt);
    } else if (*c_ribbon) {
      const auto v = ribbon_stability(rs_g, rs_l, rs_n, rs_m);
      const Character c = chi_ribbon(rs_g, rs_l);
      Record rec;
      rec.command = "ribbon-stability";
      rec.params = {{"g", std::to_string(rs_g)},
                    {"l", std::to_string(rs_l)},
                    {"n", std::to_string(rs_n)},
                    {"m", std::to_string(rs_m)}};
      rec.fields.emplace_back("chi_lambda", to_string(c.chi_lambda()));
      rec.fields.emplace_back("chi_delta", to_string(c.chi_delta()));
      rec.fields.emplace_back("index", v.index.str());
      rec.fields.emplace_back("status", v.status == Stability::Unstable
                                            ? "Unstable"
                                            : "StrictlySemistableWitness");
      rec.fields.emplace_back("scale_vanishes", v.scale_vanishes ? "true" : "false");
      std::cout << render_record(rec, fmt);
    } else if (*c_check) {
      const Report report = run_crosscheck_suite();
      std::cout << render_report(report, fmt);
      return report.all_pass ? 0 : 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

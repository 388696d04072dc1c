#include "CLI11.hpp"
#include "json.hpp"

#include "z2z4had/autgrp.hpp"
#include "z2z4had/construct.hpp"
#include "z2z4had/equiv.hpp"
#include "z2z4had/invariants.hpp"
#include "z2z4had/io.hpp"
#include "z2z4had/verify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;
using namespace z2z4had;

std::string dec(const BigInt& v) { return v.str(); }

json signature_json(const Signature& s) {
  return json{{"n", s.n}, {"size", s.size}, {"rank", s.rank}, {"kernel_dim", s.kernel_dim}};
}

json order_json(const GroupOrderReport& rep, bool brute_checked) {
  json factors = json::object();
  for (const auto& [name, value] : rep.factors) factors[name] = dec(value);
  return json{{"group", rep.group},
              {"order", dec(rep.order)},
              {"factors", factors},
              {"brute_checked", brute_checked}};
}

json classify_json(const std::vector<ClassificationRow>& rows) {
  json arr = json::array();
  for (const ClassificationRow& r : rows)
    arr.push_back(json{{"t", r.t},
                       {"gamma_dot", r.gamma_dot},
                       {"delta", r.delta},
                       {"type",
                        json{{"alpha", r.type.alpha},
                             {"beta", r.type.beta},
                             {"gamma", r.type.gamma},
                             {"delta", r.type.delta}}},
                       {"signature", signature_json(r.sig)},
                       {"class", r.class_id}});
  return arr;
}

void print_classify_table(const std::vector<ClassificationRow>& rows) {
  std::printf("%3s %9s %5s %20s %6s %4s %6s %5s\n", "t", "gamma_dot", "delta", "type", "size",
              "rank", "kernel", "class");
  for (const ClassificationRow& r : rows) {
    std::string type = "(" + std::to_string(r.type.alpha) + "," + std::to_string(r.type.beta) +
                       ";" + std::to_string(r.type.gamma) + "," + std::to_string(r.type.delta) +
                       ")";
    std::printf("%3zu %9zu %5zu %20s %6zu %4zu %6zu %5zu\n", r.t, r.gamma_dot, r.delta,
                type.c_str(), r.sig.size, r.sig.rank, r.sig.kernel_dim, r.class_id);
  }
}

std::string perm_image_list(const CoordPerm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.img.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.img[i]);
  }
  return s;
}

struct ConstructArgs {
  std::string family;
  int gamma = -1, delta_dot = -1, gamma_dot = -1, delta = -1;
  std::string out;
  bool binary = false, matrices = false;
};

int cmd_construct(const ConstructArgs& a) {
  ConstructedCode code;
  if (a.family == "B") {
    if (a.gamma < 0 || a.delta_dot < 0) {
      std::cerr << "construct: family B needs --gamma and --delta-dot\n";
      return 2;
    }
    if (a.gamma_dot >= 0 || a.delta >= 0) {
      std::cerr << "construct: family B takes --gamma and --delta-dot only\n";
      return 2;
    }
    std::size_t t = std::size_t(a.gamma) + 2 * std::size_t(a.delta_dot) + 1;
    if (t > 12) {
      std::cerr << "construct: length 2^" << t << " is above the desk-scale cap (t <= 12)\n";
      return 2;
    }
    code = build_B(std::size_t(a.gamma), std::size_t(a.delta_dot));
  } else if (a.family == "C") {
    if (a.gamma_dot < 0 || a.delta < 0) {
      std::cerr << "construct: family C needs --gamma-dot and --delta\n";
      return 2;
    }
    if (a.gamma >= 0 || a.delta_dot >= 0) {
      std::cerr << "construct: family C takes --gamma-dot and --delta only\n";
      return 2;
    }
    std::size_t t = std::size_t(a.gamma_dot) + 2 * std::size_t(a.delta);
    if (t < 1 || t > 12) {
      std::cerr << "construct: need 1 <= gamma_dot + 2*delta <= 12\n";
      return 2;
    }
    code = build_C(std::size_t(a.gamma_dot), std::size_t(a.delta));
  } else {
    std::cerr << "construct: --family must be B or C\n";
    return 2;
  }

  std::ostringstream body;
  if (a.binary)
    write_binary_code(body, code.bin);
  else
    write_additive(body, code.additive);

  if (a.out.empty()) {
    std::cout << body.str();
    if (a.matrices) {
      GeneratorMatrices gm = build_GKS(code);
      std::size_t n = code.layout.flat_length();
      for (const auto* rows : {&gm.G, &gm.K, &gm.S}) {
        std::cout << '\n';
        write_matrix(std::cout, *rows, n);
      }
    }
    return 0;
  }
  {
    std::ofstream f(a.out);
    if (!f) {
      std::cerr << "construct: cannot write " << a.out << "\n";
      return 2;
    }
    f << body.str();
  }
  if (a.matrices) {
    GeneratorMatrices gm = build_GKS(code);
    std::size_t n = code.layout.flat_length();
    const std::pair<const char*, const std::vector<BinaryWord>*> parts[] = {
        {"G", &gm.G}, {"K", &gm.K}, {"S", &gm.S}};
    for (const auto& [suffix, rows] : parts) {
      std::string path = a.out + "." + suffix;
      std::ofstream f(path);
      if (!f) {
        std::cerr << "construct: cannot write " << path << "\n";
        return 2;
      }
      write_matrix(f, *rows, n);
    }
  }
  return 0;
}

int emit_aut_order(std::size_t gd, std::size_t d, bool brute, std::size_t n_max) {
  GroupOrderReport rep = perm_aut_order_C(gd, d);
  bool checked = false;
  std::optional<BigInt> brute_order;
  if (brute) {
    if (gd + 2 * d > 12) {
      std::cerr << "aut: parameters above the desk-scale cap\n";
      return 2;
    }
    ConstructedCode code = build_C(gd, d);
    if (code.bin.n > n_max || code.bin.words.size() > 64) {
      std::cerr << "aut: brute force refused, length " << code.bin.n << " above cap\n";
      return 2;
    }
    brute_order = brute_force_automorphisms(code.bin, n_max).order;
    checked = true;
  }
  std::cout << order_json(rep, checked).dump(2) << "\n";
  if (checked && *brute_order != rep.order) {
    std::cerr << "aut: brute force found " << dec(*brute_order) << ", formula gives "
              << dec(rep.order) << "\n";
    return 1;
  }
  return 0;
}

struct MautArgs {
  std::string family;
  int gamma = -1, delta_dot = -1, gamma_dot = -1, delta = -1;
  bool brute = false;
  std::uint64_t cap = std::uint64_t{1} << 24;
};

int cmd_maut(const MautArgs& a) {
  GroupOrderReport rep;
  ConstructedCode code;
  if (a.family == "B") {
    if (a.gamma < 0 || a.delta_dot < 0) {
      std::cerr << "maut: family B needs --gamma and --delta-dot\n";
      return 2;
    }
    std::size_t g = std::size_t(a.gamma), dd = std::size_t(a.delta_dot);
    if (g + 2 * dd + 1 > 12) {
      std::cerr << "maut: parameters above the desk-scale cap\n";
      return 2;
    }
    rep = monomial_aut_order_B(g, dd);
    if (a.brute) code = build_B(g, dd);
  } else if (a.family == "C") {
    if (a.gamma_dot < 0 || a.delta < 0) {
      std::cerr << "maut: family C needs --gamma-dot and --delta\n";
      return 2;
    }
    std::size_t gd = std::size_t(a.gamma_dot), d = std::size_t(a.delta);
    if (gd + 2 * d < 1 || gd + 2 * d > 12) {
      std::cerr << "maut: need 1 <= gamma_dot + 2*delta <= 12\n";
      return 2;
    }
    rep = monomial_aut_order_C(gd, d);
    if (a.brute) code = build_C(gd, d);
  } else {
    std::cerr << "maut: --family must be B or C\n";
    return 2;
  }
  bool checked = false;
  std::optional<BigInt> brute_order;
  if (a.brute) {
    try {
      brute_order = brute_force_monomial_count(code.additive, a.cap);
      checked = true;
    } catch (const CapExceeded& e) {
      std::cerr << "maut: " << e.what() << "\n";
      return 2;
    }
  }
  std::cout << order_json(rep, checked).dump(2) << "\n";
  if (checked && *brute_order != rep.order) {
    std::cerr << "maut: brute force found " << dec(*brute_order) << ", formula gives "
              << dec(rep.order) << "\n";
    return 1;
  }
  return 0;
}

struct ReportArgs {
  std::string signature_file;
  bool aut = false, classify_mode = false, json_mode = false, brute = false;
  int gamma_dot = -1, delta = -1, t = -1;
  int n_max = 16;
};

int cmd_report(const ReportArgs& a) {
  int modes = int(!a.signature_file.empty()) + int(a.aut) + int(a.classify_mode);
  if (modes != 1) {
    std::cerr << "report: pick exactly one of --signature, --aut, --classify\n";
    return 2;
  }
  if (!a.signature_file.empty()) {
    LoadedCode lc = load_code_file(a.signature_file);
    std::cout << signature_json(signature_of(lc.bin)).dump(2) << "\n";
    return 0;
  }
  if (a.aut) {
    if (a.gamma_dot < 0 || a.delta < 0) {
      std::cerr << "report: --aut needs --gamma-dot and --delta\n";
      return 2;
    }
    return emit_aut_order(std::size_t(a.gamma_dot), std::size_t(a.delta), a.brute,
                          std::size_t(a.n_max));
  }
  if (a.t < 3 || a.t > 8) {
    std::cerr << "report: --classify needs --t between 3 and 8\n";
    return 2;
  }
  std::vector<ClassificationRow> rows = classify(std::size_t(a.t));
  if (a.json_mode)
    std::cout << classify_json(rows).dump(2) << "\n";
  else
    print_classify_table(rows);
  return 0;
}

struct EquivArgs {
  std::vector<std::size_t> theorem1;
  std::vector<std::string> search;
  bool check = false;
  int n_max = 16;
};

int cmd_equiv(const EquivArgs& a) {
  if (!a.theorem1.empty()) {
    std::size_t g = a.theorem1[0], dd = a.theorem1[1];
    if (g + 2 * dd + 1 > 12) {
      std::cerr << "equiv: parameters above the desk-scale cap\n";
      return 2;
    }
    CoordPerm p = b_to_c_permutation(g, dd);
    std::cout << perm_image_list(p) << "\n";
    if (a.check) {
      bool ok = apply_coord_perm(build_B(g, dd).bin, p) == build_C(g + 1, dd).bin;
      if (!ok) {
        std::cerr << "equiv: permuted family B image differs from the family C code\n";
        return 1;
      }
    }
    return 0;
  }
  if (a.search.size() == 2) {
    LoadedCode c1 = load_code_file(a.search[0]);
    LoadedCode c2 = load_code_file(a.search[1]);
    std::optional<CoordPerm> p = search_equivalence(c1.bin, c2.bin, std::size_t(a.n_max));
    if (p) {
      std::cout << perm_image_list(*p) << "\n";
      return 0;
    }
    std::cout << "none\n";
    return 1;
  }
  std::cerr << "equiv: give --theorem1 <gamma> <delta-dot> or --search <file1> <file2>\n";
  return 2;
}

int cmd_verify(const VerifyPlan& plan) {
  for (const std::string& tok : plan.only)
    if (!is_verify_family_token(tok)) {
      std::cerr << "verify: unknown check family '" << tok << "'\n";
      return 2;
    }
  for (const std::string& tok : plan.skip)
    if (!is_verify_family_token(tok)) {
      std::cerr << "verify: unknown check family '" << tok << "'\n";
      return 2;
    }
  VerifyReport rep = run_verify(plan, std::cout);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2Z4-additive and Z4-linear Hadamard code toolkit"};
  app.require_subcommand(1);

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "build a code and write it out");
  construct->add_option("--family", ca.family, "B or C")->required();
  construct->add_option("--gamma", ca.gamma, "family B binary parameter")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--delta-dot", ca.delta_dot, "family B quaternary parameter")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--gamma-dot", ca.gamma_dot, "family C binary parameter")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--delta", ca.delta, "family C quaternary parameter")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--out", ca.out, "output file (default stdout)");
  construct->add_flag("--binary", ca.binary, "write the binary Gray image instead");
  construct->add_flag("--matrices", ca.matrices,
                      "also emit G, K, S (to <out>.G/.K/.S, or after the code on stdout)");

  ReportArgs ra;
  CLI::App* report = app.add_subcommand("report", "signatures, group orders, classification");
  report->add_option("--signature", ra.signature_file, "code file to summarize");
  report->add_flag("--aut", ra.aut, "permutation automorphism group order of C(gamma_dot,delta)");
  report->add_flag("--classify", ra.classify_mode, "classification table for one length");
  report->add_option("--gamma-dot", ra.gamma_dot)->check(CLI::NonNegativeNumber);
  report->add_option("--delta", ra.delta)->check(CLI::NonNegativeNumber);
  report->add_option("--t", ra.t, "length exponent for --classify");
  report->add_flag("--json", ra.json_mode, "JSON instead of a table");
  report->add_flag("--brute", ra.brute, "cross-check the order by exhaustive search");
  report->add_option("--n-max", ra.n_max, "brute force length cap")->check(CLI::PositiveNumber);

  CLI::App* inv = app.add_subcommand("invariants", "signature of a code file as JSON");
  std::string inv_file;
  inv->add_option("file", inv_file, "code file")->required();

  int cl_t = -1;
  bool cl_json = false;
  CLI::App* cls = app.add_subcommand("classify", "one row per (gamma_dot,delta) of a length");
  cls->add_option("--t", cl_t, "length exponent, 3..8")->required();
  cls->add_flag("--json", cl_json, "JSON instead of a table");

  EquivArgs ea;
  CLI::App* equiv = app.add_subcommand("equiv", "cross-family permutation and equivalence search");
  equiv->add_option("--theorem1", ea.theorem1,
                    "gamma delta-dot: print the permutation carrying B onto C")
      ->expected(2);
  equiv->add_flag("--check", ea.check, "re-verify the set equality");
  equiv->add_option("--search", ea.search, "two code files: search for an equivalence")
      ->expected(2);
  equiv->add_option("--n-max", ea.n_max, "search length cap")->check(CLI::PositiveNumber);

  int aut_gd = -1, aut_d = -1, aut_nmax = 16;
  bool aut_brute = false;
  CLI::App* aut = app.add_subcommand("aut", "permutation automorphism group order");
  aut->add_option("--gamma-dot", aut_gd)->required()->check(CLI::NonNegativeNumber);
  aut->add_option("--delta", aut_d)->required()->check(CLI::NonNegativeNumber);
  aut->add_flag("--brute", aut_brute, "cross-check by exhaustive search");
  aut->add_option("--n-max", aut_nmax, "brute force length cap")->check(CLI::PositiveNumber);

  MautArgs ma;
  CLI::App* maut = app.add_subcommand("maut", "monomial automorphism group order");
  maut->add_option("--family", ma.family, "B or C")->required();
  maut->add_option("--gamma", ma.gamma)->check(CLI::NonNegativeNumber);
  maut->add_option("--delta-dot", ma.delta_dot)->check(CLI::NonNegativeNumber);
  maut->add_option("--gamma-dot", ma.gamma_dot)->check(CLI::NonNegativeNumber);
  maut->add_option("--delta", ma.delta)->check(CLI::NonNegativeNumber);
  maut->add_flag("--brute", ma.brute, "cross-check by exhaustive search");
  maut->add_option("--cap", ma.cap, "brute force candidate cap");

  VerifyPlan plan;
  CLI::App* verify = app.add_subcommand("verify", "run the self-check families");
  verify->add_option("--t-max", plan.t_max, "length cap 2^t for the per-code checks");
  verify->add_option("--n-max", plan.n_max, "exhaustive permutation search cap");
  verify->add_option("--cap", plan.monomial_cap, "monomial brute force candidate cap");
  verify->add_option("--samples", plan.samples, "affine samples at delta 3");
  verify->add_option("--block-samples", plan.block_samples, "sampled automorphisms per code");
  verify->add_option("--seed", plan.seed, "seed for the randomized checks");
  verify->add_option("--only", plan.only, "run just these check families")
      ->take_all()
      ->allow_extra_args()
      ->delimiter(',');
  verify->add_option("--skip", plan.skip, "leave out these check families")
      ->take_all()
      ->allow_extra_args()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*report) return cmd_report(ra);
    if (*inv) {
      LoadedCode lc = load_code_file(inv_file);
      std::cout << signature_json(signature_of(lc.bin)).dump(2) << "\n";
      return 0;
    }
    if (*cls) {
      if (cl_t < 3 || cl_t > 8) {
        std::cerr << "classify: --t must be between 3 and 8\n";
        return 2;
      }
      std::vector<ClassificationRow> rows = classify(std::size_t(cl_t));
      if (cl_json)
        std::cout << classify_json(rows).dump(2) << "\n";
      else
        print_classify_table(rows);
      return 0;
    }
    if (*equiv) return cmd_equiv(ea);
    if (*aut) return emit_aut_order(std::size_t(aut_gd), std::size_t(aut_d), aut_brute,
                                    std::size_t(aut_nmax));
    if (*maut) return cmd_maut(ma);
    if (*verify) return cmd_verify(plan);
  } catch (const ParseError& e) {
    std::cerr << argv[0] << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << "\n";
    return 1;
  }
  return 2;
}

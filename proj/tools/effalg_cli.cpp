#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "effalg/checks.hpp"
#include "effalg/deduction.hpp"
#include "effalg/dsl.hpp"
#include "effalg/emit.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/fixtures.hpp"
#include "effalg/implication.hpp"
#include "effalg/laws.hpp"
#include "effalg/residuation.hpp"

using namespace effalg;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Usage and input problems, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string name;
  EffectAlgebra algebra;
};

AlgebraSpec read_spec(const std::string& source) {
  std::string text;
  try {
    text = load_source(source);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
  try {
    return parse_spec(text);
  } catch (const ParseError& ex) {
    throw UsageError(source + ":" + ex.what());
  }
}

PartialTable read_table(const std::string& source, AlgebraSpec& spec) {
  spec = read_spec(source);
  try {
    return to_table(spec);
  } catch (const ParseError& ex) {
    throw UsageError(source + ":" + ex.what());
  }
}

// Returns nullopt after printing the axiom report when the table is invalid.
std::optional<Loaded> load(const std::string& source) {
  AlgebraSpec spec;
  PartialTable t = read_table(source, spec);
  ValidationOutcome v = validate(t);
  if (!v.ok()) {
    std::cerr << format_report(v.report, t.labels);
    return std::nullopt;
  }
  return Loaded{spec.name, std::move(*v.algebra)};
}

Element element(const EffectAlgebra& e, const std::string& label) {
  for (Element x = 0; x < e.size(); ++x)
    if (e.label(x) == label) return x;
  throw UsageError("unknown element '" + label + "'");
}

Subset element_list(const EffectAlgebra& e, const std::string& list) {
  Subset s = e.empty_set();
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) s.insert(element(e, item));
  return s;
}

std::vector<std::string> expand_sources(const std::vector<std::string>& sources) {
  std::vector<std::string> out;
  for (const auto& s : sources) {
    if (s == "fixture:*")
      for (const auto& name : fixture_names()) out.push_back("fixture:" + name);
    else
      out.push_back(s);
  }
  return out;
}

void print_law(const EffectAlgebra& e, const LawReport& r) {
  const auto& l = e.labels();
  std::cout << "law: " << r.law << '\n';
  std::cout << "holds: " << (r.holds_globally ? "yes" : "no") << '\n';
  std::cout << "failing pairs: " << r.failing_pairs.size() << '\n';
  for (const auto& f : r.failing_pairs)
    std::cout << "  (" << l[f.x] << ',' << l[f.y] << ") " << format_subset(f.lhs, l) << " vs "
              << format_subset(f.rhs, l) << (f.comparable ? " comparable" : " incomparable") << '\n';
  std::cout << "failures only on incomparable pairs: " << (r.comparable_only_status ? "yes" : "no") << '\n';
}

std::string format_witness(const EffectAlgebra& e, const MonotonicityResult& m) {
  if (!m.witness_x) return "";
  return " witness x=" + e.label(*m.witness_x) + " A=" + format_subset(*m.witness_a, e.labels()) +
         " B=" + format_subset(*m.witness_b, e.labels());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite effect algebras and their unsharp implication"};
  app.require_subcommand(1);

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check the effect algebra axioms");
  validate_cmd->add_option("FILE", file, "Spec file or fixture:NAME")->required();

  bool dot = false;
  auto* order_cmd = app.add_subcommand("order", "Print the induced order");
  order_cmd->add_option("FILE", file)->required();
  order_cmd->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");

  std::string x_label, y_label;
  auto* implies_cmd = app.add_subcommand("implies", "Evaluate x -> y");
  implies_cmd->add_option("FILE", file)->required();
  implies_cmd->add_option("X", x_label)->required();
  implies_cmd->add_option("Y", y_label)->required();

  bool csv = false, sums = false;
  auto* table_cmd = app.add_subcommand("table", "Print the implication table");
  table_cmd->add_option("FILE", file)->required();
  table_cmd->add_flag("--csv", csv, "Comma-separated output");
  table_cmd->add_flag("--sums", sums, "Print the sum table instead");

  bool roundtrip = false;
  auto* residuate_cmd = app.add_subcommand("residuate", "Build and check the residuated poset");
  residuate_cmd->add_option("FILE", file)->required();
  residuate_cmd->add_flag("--roundtrip", roundtrip, "Also rebuild the effect algebra");

  bool ded_enumerate = false, ded_atoms = false;
  std::string ded_generate;
  auto* ded_cmd = app.add_subcommand("ded", "Deductive systems");
  ded_cmd->add_option("FILE", file)->required();
  auto* g1 = ded_cmd->add_flag("--enumerate", ded_enumerate, "List all deductive systems");
  auto* g2 = ded_cmd->add_flag("--atoms", ded_atoms, "List the atoms of Ded(E)");
  auto* g3 = ded_cmd->add_option("--generate", ded_generate, "System generated by x,y,...");
  g1->excludes(g2, g3);
  g2->excludes(g3);

  bool law_contra = false, law_identity = false, law_adjoint = false, law_mono = false;
  auto* laws_cmd = app.add_subcommand("laws", "Contraposition and related laws");
  laws_cmd->add_option("FILE", file)->required();
  laws_cmd->add_flag("--contraposition", law_contra);
  laws_cmd->add_flag("--identity1", law_identity, "x'+(x^y) = y+(x'^y'); lattices only");
  laws_cmd->add_flag("--intro-adjointness", law_adjoint);
  laws_cmd->add_flag("--monotonous", law_mono);

  std::size_t enum_n = 0;
  bool up_to_iso = false, count_only = false;
  std::string emit_dir;
  unsigned threads = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "All effect algebras on N elements");
  enum_cmd->add_option("N", enum_n)->required();
  enum_cmd->add_flag("--up-to-iso", up_to_iso, "One algebra per isomorphism class");
  enum_cmd->add_flag("--count-only", count_only);
  enum_cmd->add_option("--emit", emit_dir, "Write one spec file per algebra into DIR");
  enum_cmd->add_option("--threads", threads, "Worker count (default: THREADS or 1)");

  std::vector<std::string> check_files;
  std::string suites = "all";
  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("FILE", check_files, "Spec files, fixture:NAME or fixture:*")->required();
  check_cmd->add_option("--suite", suites, "Comma list of " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }() + " or all");

  std::string fixture_name;
  bool list = false;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a bundled spec");
  fixture_cmd->add_option("NAME", fixture_name);
  fixture_cmd->add_flag("--list", list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) {
      AlgebraSpec spec;
      PartialTable t = read_table(file, spec);
      ValidationOutcome v = validate(t);
      std::cout << format_report(v.report, t.labels);
      return v.ok() ? kOk : kFailed;
    }

    if (*fixture_cmd) {
      if (list || fixture_name.empty()) {
        for (const auto& n : fixture_names()) std::cout << n << '\n';
        return kOk;
      }
      try {
        std::cout << fixture_text(fixture_name);
      } catch (const std::out_of_range& ex) {
        throw UsageError(ex.what());
      }
      return kOk;
    }

    if (*enum_cmd) {
      EnumerationOptions opt;
      opt.up_to_iso = up_to_iso;
      opt.threads = threads;
      EnumerationResult r;
      try {
        r = enumerate_effect_algebras(enum_n, opt);
      } catch (const std::out_of_range& ex) {
        throw UsageError(ex.what());
      }
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (std::size_t i = 0; i < r.algebras.size(); ++i) {
          const std::string name = "EA" + std::to_string(enum_n) + "_" + std::to_string(i + 1);
          std::ofstream out(std::filesystem::path(emit_dir) / (name + ".ea"));
          out << emit_spec(r.algebras[i], name);
          if (!out) throw std::runtime_error("cannot write into '" + emit_dir + "'");
        }
      } else if (!count_only) {
        for (std::size_t i = 0; i < r.algebras.size(); ++i) {
          if (i) std::cout << "---\n";
          std::cout << emit_spec(r.algebras[i], "EA" + std::to_string(enum_n) + "_" + std::to_string(i + 1));
        }
      }
      std::ostream& counts = (count_only || !emit_dir.empty()) ? std::cout : std::cerr;
      counts << "n: " << r.n << '\n';
      counts << "labeled: " << r.labeled_count << '\n';
      counts << "isomorphism classes: " << r.iso_count << '\n';
      return kOk;
    }

    if (*check_cmd) {
      std::vector<std::string> names;
      try {
        names = parse_suite_list(suites);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      bool all_ok = true;
      for (const auto& src : expand_sources(check_files)) {
        auto l = load(src);
        if (!l) {
          std::cout << src << ": invalid effect algebra\n";
          all_ok = false;
          continue;
        }
        Report r = run_suites(l->algebra, names);
        r.title = src;
        std::cout << "== " << src << '\n' << format_report(r, l->algebra.labels());
        all_ok = all_ok && r.ok();
      }
      return all_ok ? kOk : kFailed;
    }

    auto l = load(file);
    if (!l) return kFailed;
    const EffectAlgebra& e = l->algebra;

    if (*order_cmd) {
      std::cout << (dot ? emit_dot(e.order(), l->name) : emit_order_matrix(e.order()));
      if (!dot) std::cout << "lattice: " << (e.lattice() ? "yes" : "no") << '\n';
      return kOk;
    }

    if (*implies_cmd) {
      std::cout << format_subset(implies(e, element(e, x_label), element(e, y_label)), e.labels()) << '\n';
      return kOk;
    }

    if (*table_cmd) {
      const TableFormat f = csv ? TableFormat::csv : TableFormat::aligned;
      std::cout << (sums ? emit_sum_table(e, f) : emit_table(implication_table(e), f));
      return kOk;
    }

    if (*residuate_cmd) {
      SurpValidation v = validate_surp(from_effect_algebra(e));
      std::cout << format_report(v.report, e.labels());
      std::cout << "divisible: " << (v.structure.divisible ? "yes" : "no");
      if (v.divisibility_witness)
        std::cout << " witness (" << e.label(v.divisibility_witness->first) << ','
                  << e.label(v.divisibility_witness->second) << ')';
      std::cout << '\n';
      bool ok = v.ok();
      if (roundtrip) {
        RoundtripResult rt = roundtrip_check(e);
        std::cout << "roundtrip: " << (rt.equal ? "equal" : "differs") << '\n';
        for (const auto& d : rt.diff)
          std::cout << "  " << e.label(d.x) << '+' << e.label(d.y) << ": "
                    << (d.original ? e.label(*d.original) : "-") << " vs " << (d.rebuilt ? e.label(*d.rebuilt) : "-")
                    << '\n';
        ok = ok && rt.equal;
      }
      return ok ? kOk : kFailed;
    }

    if (*ded_cmd) {
      const auto& labels = e.labels();
      if (!ded_generate.empty()) {
        std::cout << format_subset(generate(e, element_list(e, ded_generate)).members, labels) << '\n';
        return kOk;
      }
      auto systems = ded_atoms ? atoms(e) : enumerate_ded(e);
      for (const auto& d : systems) std::cout << format_subset(d.members, labels) << '\n';
      std::cout << systems.size() << (ded_atoms ? " atoms" : " systems") << '\n';
      return kOk;
    }

    if (*laws_cmd) {
      if (law_identity) {
        try {
          print_law(e, identity_equ1(e));
        } catch (const NotALattice& ex) {
          std::cerr << ex.what() << '\n';
          return kFailed;
        }
      } else if (law_adjoint) {
        IntroAdjointnessResult r = check_intro_adjointness(e);
        std::cout << "adjointness holds: " << (r.holds_globally ? "yes" : "no");
        if (r.failing_triple) {
          const auto& t = *r.failing_triple;
          std::cout << " witness (" << e.label(t[0]) << ',' << e.label(t[1]) << ',' << e.label(t[2]) << ')';
        }
        std::cout << "\nmonotonous: " << (r.monotonicity.holds ? "yes" : "no")
                  << format_witness(e, r.monotonicity) << '\n';
      } else if (law_mono) {
        MonotonicityResult m = is_monotonous(e);
        std::cout << "monotonous: " << (m.holds ? "yes" : "no") << (m.exhaustive ? "" : " (sampled)")
                  << format_witness(e, m) << '\n';
      } else {
        print_law(e, counterexample_search(e));
      }
      return kOk;
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

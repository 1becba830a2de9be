//  Copyright 2026 The spclat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Command-line surface: parses JSON inputs, dispatches to the library
// constructors, and emits JSON or DOT artifacts.  Exit codes: 0 on
// success, 1 on invalid input (including violated theorem hypotheses and
// failed oracle suites), 2 on honest indecision (guarded searches and
// inconclusive bounded decisions).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spclat/spclat.hpp"

namespace {

using spclat::CheckReport;
using spclat::DistLattice;
using spclat::FinPoset;
using spclat::GroupElement;
using spclat::InvalidInput;
using spclat::Json;
using spclat::OrderedAbelianGroup;
using spclat::SpectralSpace;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("cannot parse " + what + ": " + e.what());
  }
}

// Search bound precedence: --bound flag, then the file's own "bound"
// field, then the SPCLAT_BOUND environment variable, then the library
// default.
OrderedAbelianGroup load_group(const std::string& path,
                               const std::optional<std::size_t>& cli_bound) {
  Json j = read_json_file(path);
  if (cli_bound) {
    j["bound"] = *cli_bound;
  } else if (j.is_object() && !j.contains("bound")) {
    if (const char* env = std::getenv("SPCLAT_BOUND")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0)
        throw InvalidInput("SPCLAT_BOUND must be a positive integer, got '" +
                           std::string(env) + "'");
      j["bound"] = static_cast<std::size_t>(v);
    }
  }
  return spclat::group_from_json(j);
}

struct OutputOptions {
  bool json = false;
  bool dot = false;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit the artifact as JSON");
    cmd->add_flag("--dot", dot, "emit the artifact as Graphviz DOT");
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  }

  // One format per artifact; JSON is the default.
  void resolve() {
    if (json && dot)
      throw InvalidInput("choose exactly one of --json and --dot");
    if (!json && !dot) json = true;
  }
};

void write_output(const std::string& text, const OutputOptions& opt) {
  if (opt.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw InvalidInput("cannot write " + opt.out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_lattice(const DistLattice& l, const OutputOptions& opt) {
  if (opt.dot)
    write_output(spclat::lattice_to_dot(l), opt);
  else
    write_output(spclat::lattice_to_json(l).dump(2), opt);
}

void emit_space(const SpectralSpace& x, const OutputOptions& opt) {
  if (opt.dot)
    write_output(spclat::space_to_dot(x), opt);
  else
    write_output(spclat::space_to_json(x).dump(2), opt);
}

void print_report(const CheckReport& r) {
  std::cout << spclat::report_to_json(r).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spclat: spectra of diagram, filtered, and sheaf categories "
               "at the lattice level"};
  app.require_subcommand(1);

  // --- poset ------------------------------------------------------------
  auto* poset_cmd = app.add_subcommand("poset", "validate a poset and re-emit it");
  std::string poset_in;
  OutputOptions poset_out;
  poset_cmd->add_option("--in", poset_in, "poset JSON file")->required();
  poset_out.attach(poset_cmd);

  // --- dlat ---------------------------------------------------------------
  auto* dlat_cmd = app.add_subcommand("dlat", "distributive lattice constructions");
  std::string dlat_op, dlat_in, dlat_with, dlat_set;
  OutputOptions dlat_out;
  dlat_cmd
      ->add_option("op", dlat_op,
                   "one of: downsets, joinirr, free, booleanize, opposite, "
                   "tensor, power")
      ->required();
  dlat_cmd->add_option("--in", dlat_in, "primary input JSON file")->required();
  dlat_cmd->add_option("--with", dlat_with, "second lattice JSON file (tensor)");
  dlat_cmd->add_option("--set", dlat_set, "JSON array of copy names (power)");
  dlat_out.attach(dlat_cmd);

  // --- spec -----------------------------------------------------------
  auto* spec_cmd = app.add_subcommand("spec", "spectrum of a distributive lattice");
  std::string spec_in;
  bool spec_spc = false;
  OutputOptions spec_out;
  spec_cmd->add_option("--in", spec_in, "lattice JSON file")->required();
  spec_cmd->add_flag("--spc", spec_spc,
                     "spectrum of the opposite lattice (the Balmer side)");
  spec_out.attach(spec_cmd);

  // --- arch ------------------------------------------------------------
  auto* arch_cmd = app.add_subcommand(
      "arch", "Archimedean class semilattice of an ordered abelian group");
  std::string arch_group, arch_window;
  std::optional<std::size_t> arch_bound;
  OutputOptions arch_out;
  arch_cmd->add_option("--group", arch_group, "group JSON file")->required();
  arch_cmd->add_option("--window", arch_window, "JSON list of cone elements")
      ->required();
  arch_cmd->add_option("--bound", arch_bound, "search bound override");
  arch_out.attach(arch_cmd);

  // --- balmer -----------------------------------------------------------
  auto* balmer_cmd = app.add_subcommand("balmer", "Zariski lattices of "
                                        "pointwise, sheaf, and Day categories");
  balmer_cmd->require_subcommand(1);

  auto* pw_cmd = balmer_cmd->add_subcommand(
      "pointwise", "functors out of a finite set: power lattice");
  std::string pw_zar, pw_set;
  bool pw_check = false;
  OutputOptions pw_out;
  pw_cmd->add_option("--zar", pw_zar, "coefficient Zariski lattice JSON file")
      ->required();
  pw_cmd->add_option("--set", pw_set, "JSON array of point names")->required();
  pw_cmd->add_flag("--check", pw_check, "verify the instance invariants");
  pw_out.attach(pw_cmd);

  auto* sheaf_cmd = balmer_cmd->add_subcommand(
      "sheaf", "sheaves on the spectrum of a lattice: tensor with the "
      "Booleanization");
  std::string sheaf_zar, sheaf_lattice;
  bool sheaf_check = false;
  OutputOptions sheaf_out;
  sheaf_cmd->add_option("--zar", sheaf_zar, "coefficient Zariski lattice JSON file")
      ->required();
  sheaf_cmd->add_option("--lattice", sheaf_lattice, "base lattice JSON file")
      ->required();
  sheaf_cmd->add_flag("--check", sheaf_check, "verify the instance invariants");
  sheaf_out.attach(sheaf_cmd);

  auto* day_cmd = balmer_cmd->add_subcommand(
      "day", "filtered objects over an ordered group: tensor with the free "
      "lattice on the Archimedean classes");
  std::string day_zar, day_group, day_window;
  std::optional<std::size_t> day_bound;
  bool day_check = false;
  OutputOptions day_out;
  day_cmd->add_option("--zar", day_zar, "coefficient Zariski lattice JSON file")
      ->required();
  day_cmd->add_option("--group", day_group, "group JSON file")->required();
  day_cmd->add_option("--window", day_window, "JSON list of cone elements")
      ->required();
  day_cmd->add_option("--bound", day_bound, "search bound override");
  day_cmd->add_flag("--check", day_check, "verify the instance invariants");
  day_out.attach(day_cmd);

  // --- oracle -----------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "invariant suites");
  oracle_cmd->require_subcommand(1);
  auto* oracle_run = oracle_cmd->add_subcommand("run", "run a suite and print "
                                                "one JSON report per line");
  std::string suite_name = "all";
  std::uint64_t oracle_seed = 20260815;
  oracle_run->add_option("--suite", suite_name,
                         "free, boolean, tensor, birkhoff, or all");
  oracle_run->add_option("--seed", oracle_seed, "seed for randomized corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(poset_cmd)) {
      poset_out.resolve();
      FinPoset p = spclat::poset_from_json(read_json_file(poset_in));
      if (poset_out.dot)
        write_output(spclat::poset_to_dot(p), poset_out);
      else
        write_output(spclat::poset_to_json(p).dump(2), poset_out);
      return 0;
    }

    if (app.got_subcommand(dlat_cmd)) {
      dlat_out.resolve();
      if (dlat_op == "downsets") {
        emit_lattice(spclat::from_downsets(spclat::poset_from_json(read_json_file(dlat_in))),
                     dlat_out);
      } else if (dlat_op == "joinirr") {
        FinPoset ji = spclat::join_irreducibles(
            spclat::lattice_from_json(read_json_file(dlat_in)));
        if (dlat_out.dot)
          write_output(spclat::poset_to_dot(ji), dlat_out);
        else
          write_output(spclat::poset_to_json(ji).dump(2), dlat_out);
      } else if (dlat_op == "free") {
        auto u = spclat::UpperSemilattice::from_poset(
            spclat::poset_from_json(read_json_file(dlat_in)));
        emit_lattice(spclat::free_dlat(u).lattice, dlat_out);
      } else if (dlat_op == "booleanize") {
        emit_lattice(
            spclat::booleanize(spclat::lattice_from_json(read_json_file(dlat_in))).lattice,
            dlat_out);
      } else if (dlat_op == "opposite") {
        emit_lattice(spclat::opposite(spclat::lattice_from_json(read_json_file(dlat_in))),
                     dlat_out);
      } else if (dlat_op == "tensor") {
        if (dlat_with.empty())
          throw InvalidInput("tensor needs --with for the second lattice");
        emit_lattice(
            spclat::tensor(spclat::lattice_from_json(read_json_file(dlat_in)),
                           spclat::lattice_from_json(read_json_file(dlat_with)))
                .lattice,
            dlat_out);
      } else if (dlat_op == "power") {
        if (dlat_set.empty())
          throw InvalidInput("power needs --set with the copy names");
        auto names = spclat::detail::string_list(
            parse_json_text(dlat_set, "--set"), "--set");
        emit_lattice(
            spclat::power(spclat::lattice_from_json(read_json_file(dlat_in)), names)
                .lattice,
            dlat_out);
      } else {
        throw InvalidInput("unknown dlat operation '" + dlat_op + "'");
      }
      return 0;
    }

    if (app.got_subcommand(spec_cmd)) {
      spec_out.resolve();
      DistLattice l = spclat::lattice_from_json(read_json_file(spec_in));
      emit_space(spec_spc ? spclat::spc(l) : spclat::spec(l), spec_out);
      return 0;
    }

    if (app.got_subcommand(arch_cmd)) {
      arch_out.resolve();
      OrderedAbelianGroup g = load_group(arch_group, arch_bound);
      auto window = spclat::elements_from_json(
          parse_json_text(arch_window, "--window"), g);
      spclat::ArchSemilattice a = spclat::arch(g, window, g.default_bound());
      if (arch_out.dot)
        write_output(spclat::semilattice_to_dot(a.semilattice, "arch"), arch_out);
      else
        write_output(spclat::poset_to_json(a.semilattice.poset()).dump(2), arch_out);
      return 0;
    }

    if (app.got_subcommand(balmer_cmd)) {
      if (balmer_cmd->got_subcommand(pw_cmd)) {
        pw_out.resolve();
        DistLattice zar = spclat::lattice_from_json(read_json_file(pw_zar));
        auto names = spclat::detail::string_list(parse_json_text(pw_set, "--set"),
                                                 "--set");
        spclat::PointwiseResult pw = spclat::zar_pointwise(zar, names);
        if (pw_out.dot)
          emit_space(spclat::spc(pw.lattice()), pw_out);
        else
          emit_lattice(pw.lattice(), pw_out);
        if (pw_check) {
          if (names.empty())
            throw InvalidInput("--check needs a nonempty point set");
          CheckReport r{"pointwise_spectrum", 1, 0, std::nullopt};
          // A power of lattices turns into a coproduct of spectra: one
          // copy of spc(zar) per name.
          SpectralSpace left = spclat::spc(pw.lattice());
          SpectralSpace right =
              spclat::space_product(spclat::spc(zar), spclat::discrete_space(names));
          if (!spclat::homeomorphic(left, right, left.size() + 1))
            r.counterexample =
                "spectrum is not a disjoint copy of spc(zar) per name";
          print_report(r);
          if (!r.passed()) return 1;
        }
        return 0;
      }
      if (balmer_cmd->got_subcommand(sheaf_cmd)) {
        sheaf_out.resolve();
        DistLattice zar = spclat::lattice_from_json(read_json_file(sheaf_zar));
        DistLattice l = spclat::lattice_from_json(read_json_file(sheaf_lattice));
        spclat::SheafResult sh = spclat::zar_sheaf(zar, l);
        if (sheaf_out.dot)
          emit_space(spclat::spc(sh.lattice()), sheaf_out);
        else
          emit_lattice(sh.lattice(), sheaf_out);
        if (sheaf_check) {
          CheckReport r{"sheaf_product", 1, 0, std::nullopt};
          try {
            spclat::spc_sheaf(zar, l, sh, sh.lattice().ground().size());
          } catch (const spclat::Error& e) {
            r.counterexample = e.what();
          }
          print_report(r);
          if (!r.passed()) return 1;
        }
        return 0;
      }
      if (balmer_cmd->got_subcommand(day_cmd)) {
        day_out.resolve();
        DistLattice zar = spclat::lattice_from_json(read_json_file(day_zar));
        OrderedAbelianGroup g = load_group(day_group, day_bound);
        auto window = spclat::elements_from_json(
            parse_json_text(day_window, "--window"), g);
        spclat::DayContext ctx = spclat::zar_day(zar, g, window, g.default_bound());
        if (day_out.dot)
          emit_space(ctx.space(), day_out);
        else
          emit_lattice(ctx.lattice(), day_out);
        if (day_check) {
          CheckReport r{"day_product", 1, 0, std::nullopt};
          SpectralSpace left = ctx.space();
          SpectralSpace right = spclat::space_product(
              spclat::spc(ctx.free_part.lattice), spclat::spc(zar));
          if (!spclat::homeomorphic(left, right, left.size()))
            r.counterexample = "spectrum is not the expected product";
          print_report(r);
          if (!r.passed()) return 1;
        }
        return 0;
      }
    }

    if (app.got_subcommand(oracle_cmd)) {
      bool all_passed = true;
      for (const CheckReport& r : spclat::oracle_suite(suite_name, oracle_seed)) {
        print_report(r);
        all_passed = all_passed && r.passed();
      }
      return all_passed ? 0 : 1;
    }

    throw InvalidInput("no subcommand selected");
  } catch (const spclat::Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const spclat::SizeGuard& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return 2;
  } catch (const spclat::CapacityExceeded& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return 2;
  } catch (const spclat::JoinsMissing& e) {
    std::cerr << "hypothesis not met: " << e.what() << '\n';
    return 1;
  } catch (const spclat::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const spclat::Error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  }
}

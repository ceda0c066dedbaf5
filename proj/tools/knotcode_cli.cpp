// knotcode command line front end. Talks to the library only through the C API.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotcode.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "knotcode.report/1";

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInvalidDiagram = 3, kBudget = 4, kInternal = 5 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(kc_status s) {
  switch (s) {
    case KC_OK:
      return kOk;
    case KC_ERR_ARGUMENT:
      return kUsage;
    case KC_ERR_INVALID_DIAGRAM:
      return kInvalidDiagram;
    case KC_ERR_BUDGET:
      return kBudget;
    default:
      return kInternal;
  }
}

void check(kc_status s) {
  if (s != KC_OK) throw Failure{exit_for(s), kc_last_error()};
}

struct DiagramFree {
  void operator()(kc_diagram* d) const { kc_diagram_free(d); }
};
struct FieldFree {
  void operator()(kc_field* f) const { kc_field_free(f); }
};
using DiagramPtr = std::unique_ptr<kc_diagram, DiagramFree>;
using FieldPtr = std::unique_ptr<kc_field, FieldFree>;

std::string take(char* s) {
  std::string out(s);
  kc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Malformed diagram files count as invalid diagrams.
DiagramPtr load_diagram(const std::string& path, const std::string& text) {
  kc_diagram* d = nullptr;
  const kc_status s = kc_diagram_from_json(text.c_str(), &d);
  if (s == KC_ERR_ARGUMENT) throw Failure{kInvalidDiagram, path + ": " + kc_last_error()};
  check(s);
  DiagramPtr out(d);
  int valid = 0;
  char* rep = nullptr;
  check(kc_diagram_validate(d, &valid, &rep));
  const json r = json::parse(take(rep));
  if (!valid) {
    std::string why = r["violations"].empty() ? "invalid" : r["violations"][0].get<std::string>();
    throw Failure{kInvalidDiagram, path + ": " + why};
  }
  return out;
}

// FNV-1a over the command line and the input files.
std::string digest(const std::vector<std::string>& args, const std::vector<std::string>& contents) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& a : args) feed(a);
  for (const auto& c : contents) feed(c);
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Context {
  std::string command;
  std::vector<std::string> args;
  bool batch = false;
};

// Wraps a library report into the versioned envelope and prints it.
int print_report(const Context& ctx, const std::string& body, const std::vector<std::string>& inputs,
                 const std::vector<std::string>& contents) {
  const json r = json::parse(body);
  const int status = r.value("status", 0);
  const char* status_name = status == 0 ? "ok" : status == 4 ? "budget" : "failed";
  json env = {{"schema", kSchema},
              {"command", ctx.command},
              {"args", ctx.args},
              {"inputs", inputs},
              {"inputs_digest", digest(ctx.args, contents)},
              {"outputs", r["outputs"]},
              {"warnings", r["warnings"]},
              {"status", status_name}};
  std::cout << (ctx.batch ? env.dump() : env.dump(2)) << "\n";
  return status == 0 ? kOk : status == 4 ? kBudget : kFailed;
}

int print_error(const Context& ctx, const std::vector<std::string>& inputs, const Failure& f) {
  if (ctx.batch) {
    const json env = {{"schema", kSchema},   {"command", ctx.command}, {"args", ctx.args},
                      {"inputs", inputs},    {"error", f.message},     {"status", "error"},
                      {"exit_code", f.code}};
    std::cout << env.dump() << "\n";
  }
  std::cerr << "knotcode " << ctx.command << ": " << f.message << "\n";
  return f.code;
}

// Runs fn on one diagram file, or on every *.json file of a directory in
// name order (one report per line). Returns the largest exit code seen.
int for_each_diagram(Context ctx, const std::string& file, const std::string& batch_dir,
                     const std::function<std::string(kc_diagram*)>& fn) {
  std::vector<std::string> files;
  if (!batch_dir.empty()) {
    ctx.batch = true;
    for (const auto& e : fs::directory_iterator(batch_dir))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
  } else {
    if (file.empty()) throw Failure{kUsage, "a diagram file or --batch directory is required"};
    files.push_back(file);
  }
  int worst = kOk;
  for (const auto& path : files) {
    int code = kOk;
    try {
      const std::string text = read_file(path);
      DiagramPtr d = load_diagram(path, text);
      code = print_report(ctx, fn(d.get()), {path}, {text});
    } catch (const Failure& f) {
      code = print_error(ctx, {path}, f);
    }
    worst = std::max(worst, code);
  }
  return worst;
}

struct FieldFlags {
  std::string q = "2";
  std::string modulus;
  std::string t = "-1";
};

void add_field_flags(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--q", f.q, "field size: p, p^a or q")->required();
  cmd->add_option("--modulus", f.modulus, "ascending coefficients c0,c1,...,1 of the extension modulus");
  cmd->add_option("--t", f.t, "t: integer (mod p), 'alpha', or coefficient list")->allow_extra_args(false);
}

std::pair<FieldPtr, std::uint64_t> make_field(const FieldFlags& flags) {
  kc_field* f = nullptr;
  check(kc_field_parse(flags.q.c_str(), flags.modulus.empty() ? nullptr : flags.modulus.c_str(), &f));
  FieldPtr field(f);
  std::uint64_t t = 0;
  check(kc_field_parse_element(f, flags.t.c_str(), &t));
  return {std::move(field), t};
}

kc_matrix_kind parse_kind(const std::string& k) {
  if (k == "fox") return KC_FOX;
  if (k == "dehn") return KC_DEHN;
  throw Failure{kUsage, "--kind must be fox or dehn"};
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Failure{kUsage, "not an integer list: " + s};
    }
  }
  return out;
}

void write_diagram(kc_diagram* d, const std::string& output) {
  char* s = nullptr;
  check(kc_diagram_to_json(d, &s));
  const std::string text = json::parse(take(s)).dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write " + output};
  out << text;
}

// Takes char** so the string is read after the call has filled it.
std::string report(kc_status s, char** out) {
  check(s);
  return take(*out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear codes from knot diagram colorings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kc_version());

  Context ctx;
  for (int i = 1; i < argc; ++i) ctx.args.emplace_back(argv[i]);
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a diagram file");
  gen->require_subcommand(1);
  std::string out_path;
  std::string builtin_name;
  auto* gen_builtin = gen->add_subcommand("builtin", "trefoil, figure_eight or unknot");
  gen_builtin->add_option("name", builtin_name)->required();
  gen_builtin->callback([&] {
    action = [&] {
      kc_diagram* d = nullptr;
      check(kc_diagram_builtin(builtin_name.c_str(), &d));
      DiagramPtr p(d);
      write_diagram(d, out_path);
      return int(kOk);
    };
  });
  long ta = 0;
  long tb = 0;
  auto* gen_torus = gen->add_subcommand("torus", "torus knot T(a,b)");
  gen_torus->add_option("--a", ta)->required();
  gen_torus->add_option("--b", tb)->required();
  gen_torus->callback([&] {
    action = [&] {
      kc_diagram* d = nullptr;
      check(kc_diagram_torus(ta, tb, &d));
      DiagramPtr p(d);
      write_diagram(d, out_path);
      return int(kOk);
    };
  });
  std::vector<long> twists;
  auto* gen_pretzel = gen->add_subcommand("pretzel", "pretzel knot P(p1,...,pm)");
  gen_pretzel->add_option("twists", twists)->required()->allow_extra_args();
  gen_pretzel->callback([&] {
    action = [&] {
      kc_diagram* d = nullptr;
      check(kc_diagram_pretzel(twists.data(), twists.size(), &d));
      DiagramPtr p(d);
      write_diagram(d, out_path);
      return int(kOk);
    };
  });
  std::string sum_a;
  std::string sum_b;
  std::size_t arc1 = 0;
  std::size_t arc2 = 0;
  auto* gen_sum = gen->add_subcommand("sum", "connected sum of two diagram files");
  gen_sum->add_option("first", sum_a)->required()->check(CLI::ExistingFile);
  gen_sum->add_option("second", sum_b)->required()->check(CLI::ExistingFile);
  gen_sum->add_option("--arc1", arc1, "arc of the first diagram");
  gen_sum->add_option("--arc2", arc2, "arc of the second diagram");
  gen_sum->callback([&] {
    action = [&] {
      DiagramPtr a = load_diagram(sum_a, read_file(sum_a));
      DiagramPtr b = load_diagram(sum_b, read_file(sum_b));
      kc_diagram* d = nullptr;
      check(kc_diagram_connected_sum(a.get(), arc1, b.get(), arc2, &d));
      DiagramPtr p(d);
      write_diagram(d, out_path);
      return int(kOk);
    };
  });
  std::string twist_file;
  std::size_t twist_edge = 0;
  std::string twist_side = "left";
  bool twist_over = false;
  auto* gen_r1 = gen->add_subcommand("r1", "add a Reidemeister I twist");
  gen_r1->add_option("diagram", twist_file)->required()->check(CLI::ExistingFile);
  gen_r1->add_option("--edge", twist_edge);
  gen_r1->add_option("--side", twist_side)->check(CLI::IsMember({"left", "right"}));
  gen_r1->add_flag("--first-over", twist_over, "the strand passes over first");
  gen_r1->callback([&] {
    action = [&] {
      DiagramPtr a = load_diagram(twist_file, read_file(twist_file));
      kc_diagram* d = nullptr;
      check(kc_diagram_r1(a.get(), twist_edge, twist_side == "left" ? 0 : 1, twist_over ? 1 : 0, &d));
      DiagramPtr p(d);
      write_diagram(d, out_path);
      return int(kOk);
    };
  });

  for (auto* sub : gen->get_subcommands([](CLI::App*) { return true; })) sub->add_option("-o,--output", out_path, "output file (default stdout)");

  // diagram report commands
  std::string file;
  std::string batch_dir;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("diagram", file, "diagram JSON file")->check(CLI::ExistingFile);
    cmd->add_option("--batch", batch_dir, "run on every *.json file of a directory")->check(CLI::ExistingDirectory);
  };

  auto* inv = app.add_subcommand("invariants", "Alexander polynomial, determinant and counts");
  add_input(inv);
  inv->callback([&] {
    action = [&] {
      return for_each_diagram(ctx, file, batch_dir, [](kc_diagram* d) {
        char* s = nullptr;
        return report(kc_report_invariants(d, &s), &s);
      });
    };
  });

  auto* alex = app.add_subcommand("alex", "Alexander polynomial and determinant");
  add_input(alex);
  alex->callback([&] {
    action = [&] {
      return for_each_diagram(ctx, file, batch_dir, [](kc_diagram* d) {
        char* s = nullptr;
        return report(kc_report_alexander(d, &s), &s);
      });
    };
  });

  std::string kind = "fox";
  bool restrict_outer = false;
  std::string at;
  auto* mat = app.add_subcommand("matrix", "Fox or Dehn coloring matrix");
  add_input(mat);
  mat->add_option("--kind", kind)->check(CLI::IsMember({"fox", "dehn"}));
  mat->add_flag("--restrict-outer", restrict_outer, "drop the unbounded region column (Dehn)");
  mat->add_option("--at", at, "also evaluate T at this integer");
  mat->callback([&] {
    action = [&] {
      return for_each_diagram(ctx, file, batch_dir, [&](kc_diagram* d) {
        char* s = nullptr;
        return report(kc_report_matrix(d, parse_kind(kind), restrict_outer ? 1 : 0, at.empty() ? nullptr : at.c_str(), &s),
                      &s);
      });
    };
  });

  FieldFlags field;
  bool min_dist = false;
  bool weights = false;
  std::uint64_t budget = 0;
  auto* code = app.add_subcommand("code", "knot code parameters");
  add_input(code);
  add_field_flags(code, field);
  code->add_option("--kind", kind)->check(CLI::IsMember({"fox", "dehn"}));
  code->add_flag("--min-dist", min_dist, "compute the minimum distance");
  code->add_flag("--weights", weights, "compute the weight enumerator");
  code->add_option("--budget", budget, "enumeration budget (messages); default KNOTCODE_BUDGET or 10^7");
  code->callback([&] {
    action = [&] {
      auto [f, t] = make_field(field);
      return for_each_diagram(ctx, file, batch_dir, [&, fp = f.get(), t = t](kc_diagram* d) {
        char* s = nullptr;
        return report(kc_report_code(d, fp, t, parse_kind(kind), min_dist, weights, budget, &s), &s);
      });
    };
  });

  std::string matrix_file;
  std::string ring = "Z";
  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("matrix", matrix_file, "JSON array of rows")->required()->check(CLI::ExistingFile);
  snf->add_option("--ring", ring, "Z or F_p[T]");
  snf->callback([&] {
    action = [&] {
      const std::string text = read_file(matrix_file);
      char* s = nullptr;
      return print_report(ctx, report(kc_report_snf(text.c_str(), ring.c_str(), &s), &s), {matrix_file}, {text});
    };
  });

  std::string mod;
  std::string poly_mod;
  std::string color_t = "-1";
  auto* col = app.add_subcommand("colorings", "count Fox colorings over Z/(m) or F_p[T]/(f)");
  add_input(col);
  auto* mod_opt = col->add_option("--mod", mod, "integer modulus m");
  auto* poly_opt = col->add_option("--poly-mod", poly_mod, "p:c0,c1,... (ascending coefficients of f)");
  mod_opt->excludes(poly_opt);
  col->add_option("--t", color_t, "t: integer, or coefficient list with --poly-mod");
  col->callback([&] {
    action = [&] {
      if (mod.empty() == poly_mod.empty()) throw Failure{kUsage, "exactly one of --mod and --poly-mod is required"};
      return for_each_diagram(ctx, file, batch_dir, [&](kc_diagram* d) {
        char* s = nullptr;
        return report(kc_report_colorings(d, mod.empty() ? nullptr : mod.c_str(),
                                          poly_mod.empty() ? nullptr : poly_mod.c_str(), color_t.c_str(), &s),
                      &s);
      });
    };
  });

  std::string base_file;
  bool base_unknot = false;
  std::string pairs;
  auto* cable = app.add_subcommand("cable", "dimension of iterated cables via elementary ideals");
  auto* base_opt = cable->add_option("--base", base_file, "companion diagram file")->check(CLI::ExistingFile);
  auto* unknot_opt = cable->add_flag("--base-unknot", base_unknot, "companion is the unknot");
  base_opt->excludes(unknot_opt);
  cable->add_option("--pairs", pairs, "a1,b1,a2,b2,...")->required();
  add_field_flags(cable, field);
  cable->callback([&] {
    action = [&] {
      if (base_file.empty() == !base_unknot) throw Failure{kUsage, "exactly one of --base and --base-unknot is required"};
      const std::vector<long> ps = parse_longs(pairs);
      if (ps.empty() || ps.size() % 2 != 0) throw Failure{kUsage, "--pairs needs an even number of integers"};
      auto [f, t] = make_field(field);
      DiagramPtr base;
      std::vector<std::string> inputs;
      std::vector<std::string> contents;
      if (!base_file.empty()) {
        contents.push_back(read_file(base_file));
        inputs.push_back(base_file);
        base = load_diagram(base_file, contents.back());
      }
      char* s = nullptr;
      return print_report(ctx, report(kc_report_cable(base.get(), f.get(), t, ps.data(), ps.size() / 2, &s), &s),
                          inputs, contents);
    };
  });

  auto* sum = app.add_subcommand("sum", "code of a connected sum through the block construction");
  sum->add_option("first", sum_a)->required()->check(CLI::ExistingFile);
  sum->add_option("second", sum_b)->required()->check(CLI::ExistingFile);
  sum->add_option("--arc1", arc1);
  sum->add_option("--arc2", arc2);
  add_field_flags(sum, field);
  sum->add_flag("--min-dist", min_dist);
  sum->add_flag("--weights", weights);
  sum->add_option("--budget", budget);
  sum->callback([&] {
    action = [&] {
      auto [f, t] = make_field(field);
      const std::string ta_text = read_file(sum_a);
      const std::string tb_text = read_file(sum_b);
      DiagramPtr a = load_diagram(sum_a, ta_text);
      DiagramPtr b = load_diagram(sum_b, tb_text);
      char* s = nullptr;
      return print_report(
          ctx, report(kc_report_sum(a.get(), arc1, b.get(), arc2, f.get(), t, min_dist, weights, budget, &s), &s),
          {sum_a, sum_b}, {ta_text, tb_text});
    };
  });

  auto* chk = app.add_subcommand("check", "run the invariant suite on a diagram");
  add_input(chk);
  chk->callback([&] {
    action = [&] {
      return for_each_diagram(ctx, file, batch_dir, [](kc_diagram* d) {
        char* s = nullptr;
        return report(kc_report_check(d, &s), &s);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (const auto* sub : app.get_subcommands()) {
    ctx.command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) ctx.command += " " + inner->get_name();
  }
  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "knotcode " << ctx.command << ": " << f.message << "\n";
    return f.code;
  }
}

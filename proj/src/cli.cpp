#include "spinkirby/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinkirby/error.hpp"
#include "spinkirby/invariants.hpp"
#include "spinkirby/io.hpp"
#include "spinkirby/kirby_moves.hpp"

namespace spinkirby::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool quiet = false;
  std::string file;
  std::string ops;
  std::string output;
  std::size_t steps = 100;
  std::uint64_t seed = 1;
  std::size_t max_components = 6;
  std::size_t max_order = 2;
  std::string invariant = "I";
  std::string policy;
  std::string knot;
  std::string seifert;
  std::string knot_table;
  long surgery_n = 1;
};

ojson to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ojson to_json(const BitVector& v) {
  ojson arr = ojson::array();
  for (std::size_t k = 0; k < v.size(); ++k) arr.push_back(v[k] ? 1 : 0);
  return arr;
}

ojson to_json(const std::vector<std::size_t>& xs) {
  ojson arr = ojson::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

std::string set_string(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + "}";
}

std::string count_string(std::size_t nullity) {
  if (nullity < 64) return std::to_string(std::uint64_t{1} << nullity);
  return "2^" + std::to_string(nullity);
}

ojson count_json(std::size_t nullity) {
  if (nullity < 64) return std::uint64_t{1} << nullity;
  return count_string(nullity);
}

PresentationFile load_presentation(const Options& o) { return parse_presentation_file(read_text_file(o.file)); }

int cmd_validate(const Options& o, std::ostream& out) {
  const auto f = load_presentation(o);
  const auto nullity = spin_nullity(f.b);
  if (o.json) {
    ojson j;
    j["valid"] = true;
    j["n"] = f.b.size();
    j["c"] = f.c ? to_json(*f.c) : ojson(nullptr);
    j["spin_count"] = count_json(nullity);
    out << j.dump() << '\n';
  } else {
    out << "valid: n = " << f.b.size();
    if (f.c)
      out << ", c = " << f.c->to_string();
    else
      out << ", no characteristic vector";
    out << ", spin structures = " << count_string(nullity) << '\n';
  }
  return kSuccess;
}

int cmd_spins(const Options& o, std::ostream& out) {
  const auto f = load_presentation(o);
  const auto solutions = characteristic_solutions(f.b);
  const std::size_t nullity = solutions.nullity();
  const bool enumerate = nullity <= 20;
  if (o.json) {
    ojson j;
    j["n"] = f.b.size();
    j["nullity"] = nullity;
    j["count"] = count_json(nullity);
    if (enumerate) {
      ojson vs = ojson::array();
      for (const auto& c : solutions.enumerate()) vs.push_back(to_json(c));
      j["vectors"] = vs;
    } else {
      j["particular"] = to_json(*solutions.particular);
      ojson basis = ojson::array();
      for (const auto& k : solutions.kernel_basis) basis.push_back(to_json(k));
      j["kernel_basis"] = basis;
    }
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "spin structures: " << count_string(nullity) << '\n';
  if (enumerate) {
    for (const auto& c : solutions.enumerate()) out << c.to_string() << '\n';
  } else {
    out << "particular: " << solutions.particular->to_string() << '\n';
    for (const auto& k : solutions.kernel_basis) out << "kernel: " << k.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const auto p = load_presentation(o).spin_presentation();
  const auto value = rohlin_mod2(p);
  const auto cbc = p.matrix().quadratic_form(p.characteristic());
  const auto d = det(p.matrix());
  if (o.json) {
    ojson j;
    j["I"] = to_json(value.value());
    j["n"] = p.size();
    j["cBc"] = to_json(cbc);
    j["det"] = to_json(d);
    out << j.dump() << '\n';
  } else {
    out << "I = " << value.value() << '\n';
    out << "n = " << p.size() << ", cBc = " << cbc << ", det = " << d << '\n';
  }
  return kSuccess;
}

int cmd_move(const Options& o, std::ostream& out) {
  const auto f = load_presentation(o);
  const auto p = f.spin_presentation();
  const auto seq = parse_moves(o.ops);
  const auto result = apply_sequence(p, seq);
  const auto text = print_presentation(result, f.name);
  if (o.output.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::InvalidArgument, "cannot write '" + o.output + "'");
  if (o.json) {
    ojson j;
    j["moves"] = to_string(seq);
    j["output"] = o.output;
    j["n"] = result.size();
    out << j.dump() << '\n';
  } else {
    out << "applied " << seq.moves.size() << " moves; wrote " << o.output << " (n = " << result.size() << ")\n";
  }
  return kSuccess;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  const auto p = load_presentation(o).spin_presentation();
  FuzzOptions opts;
  opts.max_components = o.max_components;
  const auto seq = random_sequence(p, o.steps, o.seed, opts);

  const auto nullity = spin_nullity(p.matrix());
  const auto value = rohlin_mod2(p);
  const auto final = apply_sequence(p, seq, [&](std::size_t step, const SpinPresentation& q) {
    if (spin_nullity(q.matrix()) != nullity)
      throw Error(ErrorCode::InvariantViolated, "spin structure count changed at step " + std::to_string(step), step);
    if (rohlin_mod2(q) != value)
      throw Error(ErrorCode::InvariantViolated, "I changed at step " + std::to_string(step), step);
  });

  if (o.json) {
    ojson j;
    j["steps"] = o.steps;
    j["seed"] = o.seed;
    j["moves"] = to_string(seq);
    j["spin_count"] = count_json(nullity);
    j["I"] = to_json(value.value());
    j["final_n"] = final.size();
    j["ok"] = true;
    out << j.dump() << '\n';
  } else {
    out << "steps: " << o.steps << ", seed: " << o.seed << '\n';
    out << "moves: " << to_string(seq) << '\n';
    out << "spin structures: " << count_string(nullity) << " at every step\n";
    out << "I = " << value.value() << " at every step\n";
    out << "final n = " << final.size() << '\n';
  }
  return kSuccess;
}

Invariant select_invariant(const std::string& name) {
  if (name == "I") return rohlin_invariant();
  if (name == "const") return constant_invariant();
  throw Error(ErrorCode::InvalidArgument, "unknown invariant '" + name + "' (expected I or const)");
}

int cmd_vassiliev(const Options& o, std::ostream& out) {
  const auto sf = parse_scheme_file(read_text_file(o.file));
  const auto& scheme = sf.scheme;
  const auto inv = select_invariant(o.invariant);

  ExtensionPolicy policy = scheme.extras_c() ? ExtensionPolicy::Declared : ExtensionPolicy::Unique;
  if (o.policy == "unique")
    policy = ExtensionPolicy::Unique;
  else if (o.policy == "declared")
    policy = ExtensionPolicy::Declared;
  else if (o.policy == "average")
    policy = ExtensionPolicy::Average;
  else if (!o.policy.empty())
    throw Error(ErrorCode::InvalidArgument, "unknown policy '" + o.policy + "'");

  const std::size_t m = scheme.extra_count();
  std::vector<std::vector<SubsetSum>> table;
  std::optional<std::size_t> least;
  for (std::size_t order = 0; order <= o.max_order && order + 1 <= m; ++order) {
    table.push_back(alternating_sums(scheme, inv, policy, order + 1));
    const bool pass = std::all_of(table.back().begin(), table.back().end(),
                                  [](const SubsetSum& s) { return s.value.is_zero(); });
    if (pass) {
      least = order;
      break;
    }
  }

  if (o.json) {
    ojson j;
    j["invariant"] = inv.name;
    j["group"] = to_string(inv.group);
    j["policy"] = to_string(policy);
    j["extras"] = m;
    ojson sums = ojson::array();
    for (std::size_t s = 0; s < table.size(); ++s)
      for (const auto& sum : table[s]) {
        ojson row;
        row["size"] = s + 1;
        row["subset"] = to_json(sum.extras);
        row["value"] = to_json(sum.value.value());
        sums.push_back(row);
      }
    j["sums"] = sums;
    j["order_at_most"] = least ? ojson(*least) : ojson(nullptr);
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "invariant: " << inv.name << " (" << to_string(inv.group) << "), policy: " << to_string(policy)
      << ", extras: " << m << '\n';
  for (std::size_t s = 0; s < table.size(); ++s) {
    out << "size " << s + 1 << ":";
    for (const auto& sum : table[s]) out << ' ' << set_string(sum.extras) << '=' << sum.value.value();
    out << '\n';
  }
  if (least && *least > 0)
    out << "verdict: order <= " << *least << " (order <= " << *least - 1 << " fails)\n";
  else if (least)
    out << "verdict: order <= 0\n";
  else if (table.size() <= o.max_order)
    out << "verdict: undetermined (only " << m << " extras)\n";
  else
    out << "verdict: order > " << o.max_order << '\n';
  return kSuccess;
}

int cmd_casson(const Options& o, std::ostream& out) {
  if (o.knot.empty() == o.seifert.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --knot and --seifert");
  SeifertMatrix v;
  std::string label;
  if (!o.knot.empty()) {
    if (o.knot_table.empty()) {
      v = lookup_knot(builtin_knot_table(), o.knot);
    } else {
      const auto table = parse_knot_table(read_text_file(o.knot_table));
      v = lookup_knot(table, o.knot);
    }
    label = o.knot;
  } else {
    auto sf = parse_seifert_file(read_text_file(o.seifert));
    v = sf.v;
    label = sf.name.value_or(o.seifert);
  }
  const auto delta = alexander_from_seifert(v);
  const auto half = half_second_derivative_at_1(delta);
  const auto lambda = casson(delta, o.surgery_n);
  if (o.json) {
    ojson j;
    j["knot"] = label;
    j["alexander"] = delta.to_string();
    j["half_second_derivative"] = to_json(half);
    j["n"] = o.surgery_n;
    j["lambda"] = to_json(lambda);
    out << j.dump() << '\n';
  } else {
    out << "knot: " << label << '\n';
    out << "Delta = " << delta.to_string() << '\n';
    out << "Delta''(1)/2 = " << half << '\n';
    out << "lambda(M(K_" << o.surgery_n << ")) = " << lambda << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spin surgery presentations: spin structures, Kirby moves, invariants"};
  app.name("spinkirby");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--quiet", o.quiet, "Suppress normal output");

  auto* validate = app.add_subcommand("validate", "Check a presentation file");
  validate->add_option("file", o.file, "Presentation file")->required();

  auto* spins = app.add_subcommand("spins", "List spin structures (characteristic vectors)");
  spins->add_option("file", o.file, "Presentation file")->required();

  auto* invariant = app.add_subcommand("invariant", "Compute I = (n + cBc) mod 2");
  invariant->add_option("file", o.file, "Presentation file")->required();

  auto* move = app.add_subcommand("move", "Apply spin Kirby moves");
  move->add_option("file", o.file, "Presentation file")->required();
  move->add_option("--ops", o.ops, "Moves, e.g. 'blowup:+1; slide:0,1; blowdown:2'")->required();
  move->add_option("-o,--output", o.output, "Write the result here instead of stdout");

  auto* fuzz = app.add_subcommand("fuzz", "Apply a random move sequence and check invariance");
  fuzz->add_option("file", o.file, "Presentation file")->required();
  fuzz->add_option("--steps", o.steps, "Number of moves")->capture_default_str();
  fuzz->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  fuzz->add_option("--max-components", o.max_components, "No blow-ups beyond this size")->capture_default_str();

  auto* vassiliev = app.add_subcommand("vassiliev", "Alternating sums over a surgery scheme");
  vassiliev->add_option("file", o.file, "Scheme file")->required();
  vassiliev->add_option("--max-order", o.max_order, "Largest order tested")->capture_default_str();
  vassiliev->add_option("--invariant", o.invariant, "I or const")->capture_default_str();
  vassiliev->add_option("--policy", o.policy, "unique, declared or average (default: declared when extras_c given)");

  auto* casson_cmd = app.add_subcommand("casson", "Casson invariant of (1,n) surgery on a knot");
  casson_cmd->add_option("--knot", o.knot, "Knot name from the table");
  casson_cmd->add_option("--seifert", o.seifert, "Seifert matrix file");
  casson_cmd->add_option("--knot-table", o.knot_table, "Knot table file (default: built-in table)");
  casson_cmd->add_option("--n", o.surgery_n, "Surgery coefficient")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (*validate)
      code = cmd_validate(o, buffer);
    else if (*spins)
      code = cmd_spins(o, buffer);
    else if (*invariant)
      code = cmd_invariant(o, buffer);
    else if (*move)
      code = cmd_move(o, buffer);
    else if (*fuzz)
      code = cmd_fuzz(o, buffer);
    else if (*vassiliev)
      code = cmd_vassiliev(o, buffer);
    else if (*casson_cmd)
      code = cmd_casson(o, buffer);
  } catch (const Error& e) {
    code = is_input_error(e.code()) ? kInputError : kPreconditionError;
    if (o.json) {
      ojson j;
      j["error"] = to_string(e.code());
      j["message"] = e.what();
      if (!e.subset().empty()) j["subset"] = to_json(e.subset());
      j["exit_code"] = code;
      out << j.dump() << '\n';
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return code;
  }
  if (!o.quiet) out << buffer.str();
  return code;
}

}  // namespace spinkirby::cli

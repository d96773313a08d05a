// Command-line front end for file-based distribution algebra and the law
// suite. All inputs are the JSON documents described in the README; output
// is always canonical (sorted keys, zero weights pruned).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rigdist/integration.hpp"
#include "rigdist/json_io.hpp"
#include "rigdist/lawcheck.hpp"
#include "rigdist/probability.hpp"
#include "rigdist/strength.hpp"

namespace {

using namespace rigdist;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse:
      return 2;
    case Errc::rig_mismatch:
    case Errc::carrier_mismatch:
    case Errc::untagged_element:
    case Errc::unpaired_element:
    case Errc::key_not_coefficient:
      return 3;
    case Errc::map_incomplete:
    case Errc::not_invertible:
    case Errc::not_probability:
    case Errc::cap_exceeded:
    case Errc::overflow:
      return 4;
  }
  return 4;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Dist load_dist(const std::string& path) {
  return dist_from_json_text(slurp(path), ParseMode::lenient);
}

Fn load_fn(const std::string& path) {
  return fn_from_json_text(slurp(path), ParseMode::lenient);
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) raise(Errc::parse, "cannot write '" + out_path + "'");
  out << text;
}

// Coordinate addition on natural-number atom keys, built over the support
// product of the two inputs.
ElementMap addition_map(const Dist& a, const Dist& b) {
  const auto as_nat = [](const Element& e) -> std::int64_t {
    if (!e.is_atom()) raise(Errc::key_not_coefficient, e.text());
    try {
      const Rat r = rat_parse(e.atom_name());
      if (r.den != 1 || r.num < 0) raise(Errc::parse, e.text());
      return r.num;
    } catch (const Error&) {
      raise(Errc::key_not_coefficient,
            "--op add needs natural-number atom keys, got " + e.text());
    }
  };
  std::vector<std::pair<Element, Element>> rows;
  for (const auto& [x, wx] : a.entries())
    for (const auto& [y, wy] : b.entries())
      rows.emplace_back(Element::pair(x, y),
                        Element::atom(std::to_string(
                            checked_add(as_nat(x), as_nat(y)))));
  return ElementMap::from_pairs(std::move(rows));
}

struct Options {
  std::string file_a, file_b, map_file, fn_file, out;
  std::string op;
  int axis = 0;
  unsigned moment_n = 1;
  std::string rig_name = "bool";
  std::size_t size = 2;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

int run(CLI::App& app, Options& opt) {
  if (app.got_subcommand("total")) {
    const Dist p = load_dist(opt.file_a);
    write_out(opt.out, p.rig().format(total(p)) + "\n");
  } else if (app.got_subcommand("push")) {
    const Dist p = load_dist(opt.file_a);
    const ElementMap f = map_from_json_text(slurp(opt.map_file));
    write_out(opt.out, dist_to_json(pushforward(f, p)));
  } else if (app.got_subcommand("tensor")) {
    const Dist p = load_dist(opt.file_a);
    const Dist q = load_dist(opt.file_b);
    write_out(opt.out, dist_to_json(psi(p, q)));
  } else if (app.got_subcommand("convolve")) {
    const Dist p = load_dist(opt.file_a);
    const Dist q = load_dist(opt.file_b);
    if (opt.map_file.empty() == opt.op.empty())
      raise(Errc::parse, "convolve needs exactly one of --map or --op");
    if (!opt.op.empty() && opt.op != "add")
      raise(Errc::parse, "unknown --op '" + opt.op + "'");
    const ElementMap m = opt.op.empty()
                             ? map_from_json_text(slurp(opt.map_file))
                             : addition_map(p, q);
    write_out(opt.out, dist_to_json(convolve(p, q, m)));
  } else if (app.got_subcommand("marginal")) {
    const Dist p = load_dist(opt.file_a);
    const auto [first, second] = marginals(p);
    write_out(opt.out, dist_to_json(opt.axis == 0 ? first : second));
  } else if (app.got_subcommand("expect")) {
    const Dist p = load_dist(opt.file_a);
    write_out(opt.out, p.rig().format(expectation(p)) + "\n");
  } else if (app.got_subcommand("moment")) {
    const Dist p = load_dist(opt.file_a);
    write_out(opt.out, p.rig().format(moment(p, opt.moment_n)) + "\n");
  } else if (app.got_subcommand("mixed-moment")) {
    const Dist p = load_dist(opt.file_a);
    write_out(opt.out, p.rig().format(mixed_moment(p)) + "\n");
  } else if (app.got_subcommand("integrate")) {
    const Dist p = load_dist(opt.file_a);
    const Fn phi = load_fn(opt.fn_file);
    write_out(opt.out, p.rig().format(integrate(p, phi)) + "\n");
  } else if (app.got_subcommand("act")) {
    const Dist p = load_dist(opt.file_a);
    const Fn phi = load_fn(opt.fn_file);
    write_out(opt.out, dist_to_json(act(p, phi)));
  } else if (app.got_subcommand("condition")) {
    const Dist p = load_dist(opt.file_a);
    const Fn event = load_fn(opt.fn_file);
    write_out(opt.out, dist_to_json(condition(p, event)));
  } else if (app.got_subcommand("normalize")) {
    const Dist p = load_dist(opt.file_a);
    write_out(opt.out, dist_to_json(normalize(p)));
  } else if (app.got_subcommand("check-laws")) {
    if (opt.size > 2 && !opt.exhaustive)
      raise(Errc::parse, "--size 3 requires --exhaustive");
    const Rig rig = rig_by_name(opt.rig_name);
    const auto reports = run_suite(rig, opt.size, opt.seed);
    std::string text;
    bool violated = false;
    for (const auto& report : reports) {
      text += report_json_line(report) + "\n";
      violated = violated || !report.passed();
    }
    write_out(opt.out, text);
    return violated ? 5 : 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiring-weighted finite distributions"};
  app.require_subcommand(1);
  Options opt;

  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", opt.out, "write output to FILE");
  };

  auto* total_cmd = app.add_subcommand("total", "total weight of a distribution");
  total_cmd->add_option("file", opt.file_a)->required();
  add_out(total_cmd);

  auto* push = app.add_subcommand("push", "pushforward along a map");
  push->add_option("file", opt.file_a)->required();
  push->add_option("--map", opt.map_file)->required();
  add_out(push);

  auto* tensor = app.add_subcommand("tensor", "tensor product of two distributions");
  tensor->add_option("a", opt.file_a)->required();
  tensor->add_option("b", opt.file_b)->required();
  add_out(tensor);

  auto* conv = app.add_subcommand("convolve", "convolution along a binary map");
  conv->add_option("a", opt.file_a)->required();
  conv->add_option("b", opt.file_b)->required();
  conv->add_option("--map", opt.map_file);
  conv->add_option("--op", opt.op, "built-in map: add");
  add_out(conv);

  auto* marginal = app.add_subcommand("marginal", "marginal of a joint distribution");
  marginal->add_option("file", opt.file_a)->required();
  marginal->add_option("--axis", opt.axis)->check(CLI::Range(0, 1))->required();
  add_out(marginal);

  auto* expect = app.add_subcommand("expect", "expectation of a scalar-keyed distribution");
  expect->add_option("file", opt.file_a)->required();
  add_out(expect);

  auto* mom = app.add_subcommand("moment", "n-th moment of a scalar-keyed distribution");
  mom->add_option("file", opt.file_a)->required();
  mom->add_option("--n", opt.moment_n)->required();
  add_out(mom);

  auto* mixed = app.add_subcommand("mixed-moment", "mixed second moment of a joint");
  mixed->add_option("file", opt.file_a)->required();
  add_out(mixed);

  auto* integ = app.add_subcommand("integrate", "integrate a test function");
  integ->add_option("file", opt.file_a)->required();
  integ->add_option("--fn", opt.fn_file)->required();
  add_out(integ);

  auto* act_cmd = app.add_subcommand("act", "reweight by a test function");
  act_cmd->add_option("file", opt.file_a)->required();
  act_cmd->add_option("--fn", opt.fn_file)->required();
  add_out(act_cmd);

  auto* cond = app.add_subcommand("condition", "condition on an event function");
  cond->add_option("file", opt.file_a)->required();
  cond->add_option("--event", opt.fn_file)->required();
  add_out(cond);

  auto* norm = app.add_subcommand("normalize", "scale to total one");
  norm->add_option("file", opt.file_a)->required();
  add_out(norm);

  auto* laws = app.add_subcommand("check-laws", "run the law suite");
  laws->add_option("--rig", opt.rig_name)->required();
  laws->add_option("--size", opt.size)->check(CLI::Range(1, 3));
  laws->add_option("--seed", opt.seed);
  laws->add_flag("--exhaustive", opt.exhaustive, "allow size 3");
  add_out(laws);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app, opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}

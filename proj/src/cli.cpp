#include "schmidt/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "schmidt/bijections.hpp"
#include "schmidt/colored_partition.hpp"
#include "schmidt/identities.hpp"

namespace schmidt::cli {

namespace {

struct Options {
  std::string id;
  int m = 2;
  std::string s = "1";
  int i = 1;
  int n = 5;
  int q_cap = 12;
  int s_cap = 12;
  bool json = false;
  bool literal = false;
  std::string identity;
  std::string side;
  std::string mono;
  std::string bijection;
  std::string partition;
  std::string removed;
  bool inverse = false;
  std::string cls;
  int top = 0;
  bool by_weight = false;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_counting_id(const std::string& id) {
  return id == "schmidt" || id == "uncu" || id == "ak_main" || id == "franklin_ext";
}

int print_report(const VerificationReport& report, const Options& opt, std::ostream& out) {
  if (opt.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return report.passed ? exit_ok : exit_mismatch;
}

int run_verify(const Options& opt, std::ostream& out) {
  if (opt.id == "cauchy") {
    auto ctx = opt.q_cap >= 0 ? make_context({{"z", opt.n}, {"q", opt.q_cap}}) : cauchy_context(opt.n);
    return print_report(cauchy_check(opt.n, ctx), opt, out);
  }
  if (opt.id == "t1_slice") return print_report(t1_slice_check(opt.n, opt.q_cap), opt, out);
  if (opt.id == "ln") return print_report(ln_check(opt.n, opt.q_cap), opt, out);
  if (is_counting_id(opt.id)) {
    auto theorem = parse_counting_theorem(opt.id);
    auto mode = opt.literal ? BucketMode::literal : BucketMode::fibre;
    return print_report(verify_counting(theorem, parse_residue_set(opt.m, opt.s), opt.n, mode), opt, out);
  }
  auto id = make_identity(opt.id, opt.m, opt.i);
  int cap = is_trivariate(id.kind) ? opt.q_cap : opt.s_cap;
  return print_report(verify_identity(id, identity_context(id.kind, cap)), opt, out);
}

/// Context whose caps are exactly the requested monomial's exponents.
ContextPtr context_for_monomial(const IdentityId& id, const std::string& mono_text, Monomial& target) {
  auto named = parse_named_exponents(mono_text);
  std::vector<std::string> names = is_trivariate(id.kind) ? std::vector<std::string>{"q", "t1", "t2"}
                                                          : std::vector<std::string>{"s", "q"};
  std::vector<SeriesContext::Variable> vars;
  for (const auto& name : names) vars.push_back({name, 0});
  for (const auto& [name, e] : named) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw UsageError("variable '" + name + "' does not occur in identity " + identity_name(id.kind));
    }
    vars[static_cast<std::size_t>(it - names.begin())].cap += e;
  }
  auto ctx = make_context(std::move(vars));
  target = ctx->monomial(named);
  return ctx;
}

int run_coeff(const Options& opt, std::ostream& out) {
  auto id = make_identity(opt.identity, opt.m, opt.i);
  auto side = parse_side(opt.side);
  Monomial target;
  auto ctx = context_for_monomial(id, opt.mono, target);
  auto value = build_side(id, side, ctx).coefficient(target);
  if (opt.json) {
    nlohmann::json j{{"identity", identity_name(id.kind)},
                     {"side", side_name(side)},
                     {"monomial", format_monomial(*ctx, target)},
                     {"coefficient", value.get_str()}};
    out << j.dump(2) << '\n';
  } else {
    out << value.get_str() << '\n';
  }
  return exit_ok;
}

int run_witness(const Options& opt, std::ostream& out) {
  auto id = make_identity(opt.identity, opt.m, opt.i);
  Monomial target;
  auto ctx = context_for_monomial(id, opt.mono, target);
  auto found = witnesses(id, ctx, target);
  if (opt.json) {
    auto arr = nlohmann::json::array();
    for (const auto& w : found) arr.push_back({{"family", w.family}, {"object", w.text}});
    out << nlohmann::json{{"identity", identity_name(id.kind)}, {"monomial", format_monomial(*ctx, target)},
                          {"witnesses", arr}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& w : found) out << w.family << ": " << w.text << '\n';
  }
  return exit_ok;
}

int run_map(const Options& opt, std::ostream& out) {
  if (opt.bijection == "psi") {
    auto s = parse_residue_set(opt.m, opt.s);
    if (opt.inverse) {
      out << to_string(psi_inverse(parse_colored_partition(opt.partition), s)) << '\n';
    } else {
      out << to_string(psi_forward(parse_partition(opt.partition), s)) << '\n';
    }
  } else if (opt.bijection == "mork") {
    auto p = parse_partition(opt.partition);
    out << to_string(opt.inverse ? mork_inverse(p) : mork_forward(p)) << '\n';
  } else if (opt.bijection == "glaisher") {
    if (opt.inverse) {
      out << to_string(glaisher_expand(parse_partition(opt.partition), parse_partition(opt.removed), opt.m)) << '\n';
    } else {
      auto split = glaisher_reduce(parse_partition(opt.partition), opt.m);
      out << "reduced=" << to_string(split.reduced) << " removed=" << to_string(split.removed) << '\n';
    }
  } else if (opt.bijection == "decompose") {
    if (opt.inverse) {
      out << to_string(merge_parts(parse_partition(opt.partition), parse_partition(opt.removed))) << '\n';
    } else {
      auto split = decompose_multiplicity(parse_partition(opt.partition), opt.m);
      out << "restricted=" << to_string(split.restricted) << " repeated=" << to_string(split.repeated) << '\n';
    }
  } else {
    throw UsageError("unknown bijection '" + opt.bijection + "'");
  }
  return exit_ok;
}

int run_enumerate(const Options& opt, std::ostream& out) {
  if (opt.cls == "cs") {
    auto s = parse_residue_set(opt.m, opt.s);
    int top = opt.top > 0 ? opt.top : opt.m + 1;
    for_each_cs(opt.n, s, top, [&](const ColoredPartition& p) { out << to_string(p) << '\n'; });
    return exit_ok;
  }
  if (opt.cls == "over") {
    for_each_overpartition(opt.n, [&](const Overpartition& p) { out << to_string(p) << '\n'; });
    return exit_ok;
  }
  auto cls = parse_partition_class(opt.cls);
  auto print = [&](const Partition& p) { out << to_string(p) << '\n'; };
  if (opt.by_weight) {
    auto s = parse_residue_set(opt.m, opt.s);
    for (const auto& p : enumerate_by_schmidt_weight(opt.n, s, cls)) print(p);
  } else {
    for_each_partition(opt.n, cls, opt.m, print);
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schmidt-type partition statistics and q-series identity checks", "schmidt"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "compare every side of an identity or counting theorem");
  verify->add_option("id", opt.id,
                     "ak_trivariate | overpartition | cor22 | mork_odd | mork_even | psi_all | psi_dm | "
                     "schmidt | uncu | ak_main | franklin_ext | cauchy | t1_slice | ln")
      ->required();
  verify->add_option("--m", opt.m, "modulus m");
  verify->add_option("--s", opt.s, "index set S, comma separated");
  verify->add_option("--i", opt.i, "psi identities: S = {1..i}");
  verify->add_option("--n", opt.n, "weight n (counting), N (cauchy), J (t1_slice), max parts (ln)");
  verify->add_option("--q-cap", opt.q_cap, "q truncation");
  verify->add_option("--s-cap", opt.s_cap, "s truncation");
  verify->add_flag("--literal", opt.literal, "franklin_ext: compare Schmidt buckets one by one");
  verify->add_flag("--json", opt.json, "emit the report as JSON");

  auto* coeff = app.add_subcommand("coeff", "print one exact coefficient of one side");
  coeff->add_option("--identity", opt.identity)->required();
  coeff->add_option("--side", opt.side, "sum | product | enum | recurrence | quotient")->required();
  coeff->add_option("--mono", opt.mono, "monomial, e.g. q=6,t1=1,t2=2")->required();
  coeff->add_option("--m", opt.m);
  coeff->add_option("--i", opt.i);
  coeff->add_flag("--json", opt.json);

  auto* witness = app.add_subcommand("witness", "list the enumerated objects hitting a monomial");
  witness->add_option("--identity", opt.identity)->required();
  witness->add_option("--mono", opt.mono)->required();
  witness->add_option("--m", opt.m);
  witness->add_option("--i", opt.i);
  witness->add_flag("--json", opt.json);

  auto* map = app.add_subcommand("map", "apply a bijection or its inverse");
  map->add_option("--bijection", opt.bijection, "psi | mork | glaisher | decompose")->required();
  map->add_option("--m", opt.m);
  map->add_option("--s", opt.s);
  map->add_option("--partition", opt.partition, "input object")->required();
  map->add_option("--removed", opt.removed, "glaisher/decompose inverse: the second component");
  map->add_flag("--inverse", opt.inverse);

  auto* enumerate = app.add_subcommand("enumerate", "stream serialized objects");
  enumerate->add_option("--class", opt.cls, "P | D | F | R | cs | over")->required();
  enumerate->add_option("--n", opt.n, "size, or Schmidt weight with --schmidt-weight")->required();
  enumerate->add_option("--m", opt.m);
  enumerate->add_option("--s", opt.s);
  enumerate->add_option("--top", opt.top, "cs: color bound (m or m + 1, default m + 1)");
  enumerate->add_flag("--schmidt-weight", opt.by_weight, "enumerate by Schmidt weight instead of size");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_usage;
  }

  bool explicit_q_cap = verify->count("--q-cap") > 0;
  if (*verify && opt.id == "cauchy" && !explicit_q_cap) opt.q_cap = -1;

  try {
    if (*verify) return run_verify(opt, out);
    if (*coeff) return run_coeff(opt, out);
    if (*witness) return run_witness(opt, out);
    if (*map) return run_map(opt, out);
    return run_enumerate(opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace schmidt::cli

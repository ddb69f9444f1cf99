#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "psl2ogs/io.hpp"
#include "psl2ogs/verify.hpp"

namespace {

using namespace psl2ogs;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> a, b;
  std::uint64_t k = 0;
  unsigned ell = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 1;
  std::string matrix;
  std::string suite = "all";
  std::string format = "tsv";
  std::string out;
  bool json = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + opt.out + " for writing");
  file << text;
}

std::optional<Element> element_of(const Field& f, const std::optional<std::uint64_t>& code) {
  if (!code) return std::nullopt;
  return f.element(*code);
}

SeqTables tables_of(const Options& opt, const std::shared_ptr<const Field>& field) {
  return SeqTables::build(field, element_of(*field, opt.a), element_of(*field, opt.b));
}

int cmd_params(const Options& opt) {
  const auto field = Field::of_order(opt.q);
  emit(opt, io::dump(io::to_json(make_params(field, element_of(*field, opt.a), element_of(*field, opt.b)))));
  return kExitOk;
}

int cmd_tables(const Options& opt) {
  const auto field = Field::of_order(opt.q);
  const SeqTables tables = tables_of(opt, field);
  if (opt.format == "tsv")
    emit(opt, io::tables_tsv(tables));
  else
    emit(opt, io::dump(io::tables_json(tables)));
  return kExitOk;
}

int cmd_compose(const Options& opt) {
  const auto field = Field::of_order(opt.q);
  const SeqTables tables = tables_of(opt, field);
  const OgsForm form{opt.k, opt.ell, field->element(opt.x), field->element(opt.y)};
  const ProjMatrix m = ogs_compose(tables, form);
  io::Json out{{"matrix", io::to_json(m)}, {"bn", io::to_json(bn_decompose(m))}};
  emit(opt, io::dump(out));
  return kExitOk;
}

int cmd_decompose(const Options& opt) {
  const auto field = Field::of_order(opt.q);
  const SeqTables tables = tables_of(opt, field);
  const ProjMatrix m = io::parse_matrix(*field, opt.matrix);
  const BnForm bn = bn_decompose(m);
  io::Json out{{"bn", io::to_json(bn)}, {"ogs", io::to_json(bn_to_ogs(tables, bn))}};
  emit(opt, io::dump(out));
  return kExitOk;
}

int cmd_order(const Options& opt) {
  const auto field = Field::of_order(opt.q);
  if (!opt.matrix.empty()) {
    const ProjMatrix m = io::parse_matrix(*field, opt.matrix);
    emit(opt, io::dump({{"matrix", io::to_json(m)}, {"order", element_order(m)}}));
    return kExitOk;
  }
  const OgsParams params = make_params(field, element_of(*field, opt.a));
  const ProjMatrix us = gen_u(params.a) * gen_s(*field);
  emit(opt, io::dump({{"a", params.a.encode()},
                      {"order", element_order(us)},
                      {"sl2_order", sl2_order_of_us(*field, params.a)}}));
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const CheckReport report = run_suite(opt.q, parse_suite(opt.suite));
  emit(opt, opt.json ? io::dump(io::to_json(report)) : io::report_text(report));
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PSL2(q) OGS and BN-pair decompositions"};
  app.require_subcommand(1);
  Options opt;

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", opt.q, "field order, a prime power")->required(); };
  auto add_ab = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "override a (encoding)");
    sub->add_option("--b", opt.b, "override b (encoding, odd q only)");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "write output to this file"); };

  auto* params = app.add_subcommand("params", "selected a, b, t and the field");
  add_q(params);
  add_ab(params);
  add_out(params);

  auto* tables = app.add_subcommand("tables", "sequence tables a_k, b_k, alpha, beta, gamma");
  add_q(tables);
  add_ab(tables);
  add_out(tables);
  tables->add_option("--format", opt.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* compose = app.add_subcommand("compose", "matrix and BN form of an OGS form");
  add_q(compose);
  add_ab(compose);
  add_out(compose);
  compose->add_option("--k", opt.k)->required();
  compose->add_option("--ell", opt.ell)->check(CLI::IsMember({0u, 1u}));
  compose->add_option("--x", opt.x)->required();
  compose->add_option("--y", opt.y)->required();

  auto* decompose = app.add_subcommand("decompose", "BN and OGS forms of a matrix");
  add_q(decompose);
  add_ab(decompose);
  add_out(decompose);
  decompose->add_option("--matrix", opt.matrix, "m11,m12,m21,m22")->required();

  auto* order = app.add_subcommand("order", "order of a matrix, or of u(a)s by default");
  add_q(order);
  order->add_option("--a", opt.a, "override a (encoding)");
  add_out(order);
  order->add_option("--matrix", opt.matrix, "m11,m12,m21,m22");

  auto* verify = app.add_subcommand("verify", "run a check suite");
  add_q(verify);
  add_out(verify);
  verify->add_option("--suite", opt.suite, "field, matrix, sequences, identities, conversion, enumeration, all");
  verify->add_flag("--json", opt.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*params) return cmd_params(opt);
    if (*tables) return cmd_tables(opt);
    if (*compose) return cmd_compose(opt);
    if (*decompose) return cmd_decompose(opt);
    if (*order) return cmd_order(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include "psl2ogs/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace psl2ogs::io {

namespace {

Json indexed(const OffsetSeq& seq) {
  Json out = Json::object();
  for (std::int64_t i = seq.first(); i <= seq.last(); ++i) out[std::to_string(i)] = seq[i].encode();
  return out;
}

std::string cell(const OffsetSeq* seq, std::int64_t i) {
  if (!seq || !seq->contains(i)) return "";
  return std::to_string((*seq)[i].encode());
}

}  // namespace

Json to_json(const Field& field) {
  Json modulus = Json::array();
  for (auto c : field.modulus()) modulus.push_back(c);
  return {{"p", field.characteristic()}, {"kappa", field.degree()}, {"modulus", modulus}};
}

Json to_json(const ProjMatrix& m) {
  const auto& c = m.codes();
  return Json::array({c[0], c[1], c[2], c[3]});
}

Json to_json(const BnForm& form) {
  if (const auto* in = std::get_if<InBorel>(&form))
    return {{"in_borel", true}, {"x", in->x.encode()}, {"y", in->y.encode()}};
  const auto& out = std::get<OutsideBorel>(form);
  return {{"in_borel", false},
          {"a", out.a_tilde.encode()},
          {"x", out.x.encode()},
          {"y", out.y.encode()}};
}

Json to_json(const OgsForm& form) {
  return {{"k", form.k}, {"ell", form.ell}, {"x", form.x.encode()}, {"y", form.y.encode()}};
}

Json to_json(const OgsParams& params) {
  Json out = to_json(*params.field);
  out["q"] = params.field->order();
  out["t"] = params.t;
  out["a"] = params.a.encode();
  if (params.b) out["b"] = params.b->encode();
  return out;
}

Json to_json(const CheckReport& report) {
  Json checks = Json::array();
  for (const CheckResult& r : report.checks) {
    Json entry{{"name", r.name}, {"pass", r.passed()}};
    if (r.status == CheckStatus::Skip) entry["skipped"] = r.skip_reason;
    if (r.counterexample) {
      Json inputs = Json::object();
      for (const auto& [name, value] : r.counterexample->inputs) inputs[name] = value;
      entry["counterexample"] = {{"inputs", inputs},
                                 {"expected", r.counterexample->expected},
                                 {"actual", r.counterexample->actual}};
    }
    checks.push_back(std::move(entry));
  }
  return {{"suite", std::string(to_string(report.suite))},
          {"q", report.q},
          {"pass", report.passed()},
          {"checks", checks}};
}

Json tables_json(const SeqTables& tables) {
  Json out{{"q", tables.field().order()}, {"a", tables.a().encode()}};
  if (tables.has_b()) out["b"] = tables.b().encode();
  out["t"] = tables.t();
  out["a_seq"] = indexed(tables.a_seq());
  if (tables.has_b()) out["b_seq"] = indexed(tables.b_seq());
  out["alpha"] = indexed(tables.alpha());
  if (tables.has_b()) {
    out["beta"] = indexed(tables.beta());
    out["gamma"] = indexed(tables.gamma());
  }
  return out;
}

std::string tables_tsv(const SeqTables& tables) {
  const bool odd = tables.has_b();
  const OffsetSeq* columns[] = {&tables.a_seq(), odd ? &tables.b_seq() : nullptr, &tables.alpha(),
                                odd ? &tables.beta() : nullptr, odd ? &tables.gamma() : nullptr};
  std::ostringstream out;
  out << "index\ta_k\tb_k\talpha\tbeta\tgamma\n";
  for (std::int64_t i = -1; i <= static_cast<std::int64_t>(tables.t()) - 1; ++i) {
    out << i;
    for (const OffsetSeq* col : columns) out << '\t' << cell(col, i);
    out << '\n';
  }
  return out.str();
}

std::string report_text(const CheckReport& report) {
  std::ostringstream out;
  std::size_t failed = 0, skipped = 0;
  for (const CheckResult& r : report.checks) {
    switch (r.status) {
      case CheckStatus::Pass:
        out << "PASS " << r.name << '\n';
        break;
      case CheckStatus::Skip:
        ++skipped;
        out << "SKIP " << r.name << " (" << r.skip_reason << ")\n";
        break;
      case CheckStatus::Fail:
        ++failed;
        out << "FAIL " << r.name;
        if (r.counterexample) {
          out << " at";
          for (const auto& [name, value] : r.counterexample->inputs) out << ' ' << name << '=' << value;
          out << ": expected " << r.counterexample->expected << ", got " << r.counterexample->actual;
        }
        out << '\n';
        break;
    }
  }
  out << "q=" << report.q << " suite=" << to_string(report.suite) << ": " << report.checks.size()
      << " checks, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

ProjMatrix parse_matrix(const Field& field, std::string_view text) {
  std::array<std::uint64_t, 4> codes{};
  std::size_t n = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (n == 4) throw Error(ErrorCode::ParseError, "matrix needs exactly 4 entries");
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), codes[n]);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size())
      throw Error(ErrorCode::ParseError, "bad matrix entry '" + std::string(token) + "'");
    ++n;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (n != 4) throw Error(ErrorCode::ParseError, "matrix needs exactly 4 entries");
  return ProjMatrix::from_codes(field, codes);
}

}  // namespace psl2ogs::io

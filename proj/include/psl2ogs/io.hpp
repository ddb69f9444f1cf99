#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "psl2ogs/decomp.hpp"
#include "psl2ogs/verify.hpp"

namespace psl2ogs::io {

using Json = nlohmann::ordered_json;

// Field elements always appear as their integer encodings.
Json to_json(const Field& field);       // {p, kappa, modulus}
Json to_json(const ProjMatrix& m);      // [m11, m12, m21, m22]
Json to_json(const BnForm& form);       // {in_borel, a?, x, y}
Json to_json(const OgsForm& form);      // {k, ell, x, y}
Json to_json(const OgsParams& params);  // {p, kappa, modulus, q, t, a, b?}
Json to_json(const CheckReport& report);

/// {"q", "a", "b"?, "t", "a_seq", "b_seq"?, "alpha", "beta"?, "gamma"?}; each
/// sequence is an object keyed by its index.
Json tables_json(const SeqTables& tables);

/// Header "index a_k b_k alpha beta gamma", one row per index -1..t-1,
/// tab separated, blank where a sequence has no term.
std::string tables_tsv(const SeqTables& tables);

std::string report_text(const CheckReport& report);

/// Two-space indented, trailing newline.
std::string dump(const Json& json);

/// "m11,m12,m21,m22" of encodings. Throws ParseError, OutOfRange, DetNotOne.
ProjMatrix parse_matrix(const Field& field, std::string_view text);

}  // namespace psl2ogs::io

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psl2ogs/check.hpp"
#include "psl2ogs/decomp.hpp"

namespace psl2ogs {

enum class Suite { Field, Matrix, Sequences, Identities, Conversion, Enumeration, All };

/// Throws ParseError.
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite) noexcept;

/// Statements about PSL2(q) and the sequences that the check registry must
/// cover. Every law is exercised by at least one registered check.
enum class Law {
  BnCanonicalForm,
  GeneratorRelations,
  CosetSoundness,
  IrreducibleRoot,
  CosetOrder,
  UniquePresentation,
  Covering,
  LastTermZero,
  ForwardRecursion,
  ProductFormulas,
  ReciprocalPairs,
  MidpointValue,
  ShiftedRecursion,
  BTermFormulas,
  SymmetricB,
  AlphaIdentities,
  ChebyshevAgreement,
  PowerBnForms,
  OgsToBnFormulas,
};

std::string_view to_string(Law law) noexcept;
const std::vector<Law>& required_laws();

struct CheckInfo {
  std::string name;  // "<suite>.<check>"
  Suite suite;
  std::vector<Law> laws;
};

/// Registered checks in execution order.
std::vector<CheckInfo> registry();

struct CheckReport {
  Suite suite;
  std::uint64_t q;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

/// Largest q run_suite accepts.
inline constexpr std::uint64_t kMaxVerifyOrder = 1024;
/// Above this many legal forms, form-wise checks sample instead of sweeping.
inline constexpr std::uint64_t kExhaustiveFormLimit = 1u << 16;

/// Runs every registered check of the suite (all of them for Suite::All).
/// Deterministic for fixed (q, suite). Throws UnsupportedQ, NotPrimePower.
CheckReport run_suite(std::uint64_t q, Suite suite);

/// BN form of [u(a) s]^k by raw matrix powering and bn_decompose, with no
/// use of the sequence tables. 1 <= k <= t - 1; throws IndexOutOfRange.
BnForm oracle_bn_of_power(const OgsParams& params, std::uint64_t k);

}  // namespace psl2ogs

#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qgw/center.hpp"
#include "qgw/poisson.hpp"
#include "qgw/qfun.hpp"
#include "qgw/rmat.hpp"
#include "qgw/twist.hpp"

namespace qgw {

using Json = nlohmann::ordered_json;

std::string version();

/// Human-readable statement of every convention the exact results depend on
/// (index layouts, bracket signs, twist spread orders, complement choice,
/// serialization format). Hashed into every report so golden files detect
/// convention drift.
std::string convention_ledger();
std::uint64_t fnv1a(const std::string& s);
std::string convention_ledger_hash();  // fixed-width lowercase hex of fnv1a

/// Canonical Laurent-coefficient string, exponents ascending.
std::string scalar_string(const QScalar& s);
std::string rat_string(const Rat& r);

Json json_of(const FlatnessReport& r);
Json json_of(const TwistReport& r);
Json json_of(const VarietyReport& r);
Json json_of(const SemiclassicalReport& r);
Json json_of(const CenterReport& r);
Json json_of(const FreenessReport& r);

/// Report skeleton: version, ledger hash, config echo.
Json report_header(const std::string& command, Series series, int rank,
                   AlgKind algebra, GroupModel model, int max_degree,
                   unsigned seed);

/// Serialize with sorted stable layout and trailing newline.
std::string render(const Json& j);

}  // namespace qgw

#pragma once

#include <string>

#include "json.hpp"

#include "chisini/arith.hpp"
#include "chisini/criterion.hpp"
#include "chisini/families.hpp"
#include "chisini/invariants.hpp"

namespace chisini_cli {

using ordered_json = nlohmann::ordered_json;

/// Exact integer as JSON: a number when it fits 64 bits, otherwise its decimal
/// string.
ordered_json jint(const chisini::Int& v);

/// Exact rational as the string "80/13", or "6" when integral.
ordered_json jrat(const chisini::Rat& q);

ordered_json curve_json(const chisini::curve_invariants& inv);
ordered_json dual_json(const chisini::dual_invariants& dual);
ordered_json morphism_json(const chisini::morphism_invariants& m);
ordered_json verdict_json(const chisini::chisini_verdict& v);
ordered_json validation_json(const chisini::validation_report& rep);
ordered_json family_json(const chisini::family_output& fam);

/// Root record shared by every command: {"schema_version": 1, "command": name}.
ordered_json make_record(const std::string& command);

/// One "path = value" line per leaf, in document order: nested keys joined
/// with '.', array elements as "[i]". The text output of every command is
/// exactly the flattening of its JSON record.
std::string flatten_record(const ordered_json& rec);

}  // namespace chisini_cli

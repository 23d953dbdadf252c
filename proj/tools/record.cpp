#include "record.hpp"

namespace chisini_cli {

using chisini::Int;
using chisini::Rat;

ordered_json jint(const Int& v) {
  if (chisini::fits_int64(v)) return v.convert_to<long long>();
  return v.str();
}

ordered_json jrat(const Rat& q) { return chisini::rat_string(q); }

ordered_json curve_json(const chisini::curve_invariants& inv) {
  ordered_json j;
  j["plane_degree"] = jint(2 * inv.d);
  j["d"] = jint(inv.d);
  j["g"] = jint(inv.g);
  j["c"] = jint(inv.c);
  j["n"] = jint(inv.n);
  return j;
}

ordered_json dual_json(const chisini::dual_invariants& dual) {
  ordered_json j;
  j["delta"] = jint(dual.delta);
  j["gamma"] = jint(dual.gamma);
  j["nu"] = jint(dual.nu);
  return j;
}

ordered_json morphism_json(const chisini::morphism_invariants& m) {
  ordered_json j;
  j["N"] = jint(m.N);
  j["K2"] = jint(m.K2);
  j["euler"] = jint(m.euler);
  j["chi"] = jint(m.p_a);
  j["R2"] = jint(m.R2);
  j["line_preimage_genus"] = jint(m.gE);
  return j;
}

ordered_json verdict_json(const chisini::chisini_verdict& v) {
  ordered_json j;
  j["threshold"] = jrat(v.threshold);
  j["unique"] = v.unique;
  j["max_competing_degree"] = jint(v.max_competing_degree);
  return j;
}

ordered_json validation_json(const chisini::validation_report& rep) {
  ordered_json j;
  j["all_passed"] = rep.all_passed();
  j["smooth_double_plane"] = rep.smooth_double_plane;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (c.waived) e["waived"] = true;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

ordered_json family_json(const chisini::family_output& fam) {
  ordered_json j;
  j["curve"] = curve_json(fam.curve);
  j["N"] = jint(fam.N);
  j["smooth_double_plane"] = fam.smooth_double_plane;
  if (fam.verdict) j["verdict"] = verdict_json(*fam.verdict);
  if (!fam.notes.empty()) j["notes"] = fam.notes;
  return j;
}

ordered_json make_record(const std::string& command) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = command;
  return j;
}

namespace {

void flatten_into(const ordered_json& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    if (node.empty()) {
      out += path + " = {}\n";
      return;
    }
    for (const auto& [key, value] : node.items()) {
      flatten_into(value, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  if (node.is_array()) {
    if (node.empty()) {
      out += path + " = []\n";
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten_into(node[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += path + " = ";
  if (node.is_string()) {
    out += node.get<std::string>();
  } else {
    out += node.dump();
  }
  out += '\n';
}

}  // namespace

std::string flatten_record(const ordered_json& rec) {
  std::string out;
  flatten_into(rec, "", out);
  return out;
}

}  // namespace chisini_cli

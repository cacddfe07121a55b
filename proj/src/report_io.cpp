#include "sympow/report_io.hpp"

#include <set>

#include "sympow/errors.hpp"
#include "sympow/parser.hpp"

namespace sympow {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be a JSON object", 0);
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) throw ParseError("unknown key '" + item.key() + "' in " + where, 0);
}

template <class T>
T required(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError("missing key '" + std::string(key) + "' in " + where, 0);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError("bad value for '" + std::string(key) + "' in " + where + ": " + e.what(), 0);
  }
}

std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(to_input_string(g));
  return out;
}

Ideal ideal_from(const std::vector<std::string>& gens, const Ring& ring) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
  return Ideal(ring, polys);
}

}  // namespace

ordered_json instance_to_json(const ConjectureInstance& inst) {
  ordered_json ring;
  ring["characteristic"] = inst.ring->characteristic();
  ring["variables"] = inst.ring->variables();
  if (inst.ring->has_relation()) ring["relation"] = to_input_string(inst.ring->relation());
  else ring["relation"] = nullptr;
  ordered_json j;
  j["ring"] = ring;
  j["p"] = generator_strings(inst.p);
  j["q"] = generator_strings(inst.q);
  j["f"] = to_input_string(inst.f);
  j["m"] = inst.m;
  j["n"] = inst.n;
  j["check"] = to_string(inst.check);
  if (inst.separator) j["separator"] = to_input_string(*inst.separator);
  if (inst.seed) j["seed"] = *inst.seed;
  return j;
}

ConjectureInstance instance_from_json(const json& j) {
  reject_unknown(j, {"ring", "p", "q", "f", "m", "n", "check", "separator", "seed"}, "instance");
  const json& rj = required<json>(j, "ring", "instance");
  reject_unknown(rj, {"characteristic", "variables", "relation"}, "ring");
  const auto characteristic = required<std::uint32_t>(rj, "characteristic", "ring");
  const auto variables = required<std::vector<std::string>>(rj, "variables", "ring");
  const Field field = Field::of_characteristic(characteristic);
  Ring ring;
  if (rj.contains("relation") && !rj.at("relation").is_null())
    ring = RingSpec::create(variables, field, required<std::string>(rj, "relation", "ring"));
  else
    ring = RingSpec::create(variables, field);

  ConjectureInstance inst{ring, ideal_from(required<std::vector<std::string>>(j, "p", "instance"), ring),
                          ideal_from(required<std::vector<std::string>>(j, "q", "instance"), ring),
                          parse_poly(required<std::string>(j, "f", "instance"), ring)};
  inst.m = required<unsigned>(j, "m", "instance");
  inst.n = required<unsigned>(j, "n", "instance");
  inst.check = parse_check_kind(required<std::string>(j, "check", "instance"));
  if (j.contains("separator")) inst.separator = parse_poly(required<std::string>(j, "separator", "instance"), ring);
  if (j.contains("seed")) inst.seed = required<std::uint64_t>(j, "seed", "instance");
  if (inst.f.is_zero()) throw UsageError("instance element f must be nonzero");
  if (inst.m == 0 || inst.n == 0) throw UsageError("instance exponents m, n must be positive");
  return inst;
}

ordered_json report_to_json(const Report& report) {
  ordered_json j;
  j["status"] = to_string(report.status);
  ordered_json quantities = ordered_json::object();
  for (const auto& [name, value] : report.quantities)
    std::visit([&, &key = name](const auto& v) { quantities[key] = v; }, value);
  j["quantities"] = quantities;
  ordered_json witnesses = ordered_json::object();
  for (const auto& [name, text] : report.witnesses) witnesses[name] = text;
  j["witnesses"] = witnesses;
  j["assumptions"] = report.assumptions;
  if (report.seed) j["seed"] = *report.seed;
  else j["seed"] = nullptr;
  j["toolkit_version"] = report.toolkit_version;
  return j;
}

Report report_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("report must be a JSON object", 0);
  for (const auto& item : j.items())
    if (!std::set<std::string>{"status", "quantities", "witnesses", "assumptions", "seed", "toolkit_version"}.count(
            item.key()))
      throw ParseError("unknown key '" + item.key() + "' in report", 0);
  for (const char* key : {"status", "quantities", "witnesses", "assumptions", "toolkit_version"})
    if (!j.contains(key)) throw ParseError("missing key '" + std::string(key) + "' in report", 0);
  Report r;
  try {
    r.status = parse_status(j.at("status").get<std::string>());
    for (const auto& item : j.at("quantities").items()) {
      if (item.value().is_boolean()) r.quantities.emplace_back(item.key(), item.value().get<bool>());
      else if (item.value().is_number_integer()) r.quantities.emplace_back(item.key(), item.value().get<std::int64_t>());
      else throw ParseError("quantity '" + item.key() + "' must be an integer or boolean", 0);
    }
    for (const auto& item : j.at("witnesses").items())
      r.witnesses.emplace_back(item.key(), item.value().get<std::string>());
    r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    if (j.contains("seed") && !j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.toolkit_version = j.at("toolkit_version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report field: ") + e.what(), 0);
  } catch (const UsageError& e) {
    throw ParseError(e.what(), 0);
  }
  return r;
}

ConjectureInstance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  return instance_from_json(j);
}

Report parse_report(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  return report_from_json(j);
}

}  // namespace sympow

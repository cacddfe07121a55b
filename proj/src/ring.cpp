#include "sympow/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sympow/errors.hpp"
#include "sympow/parser.hpp"
#include "sympow/polynomial.hpp"

namespace sympow {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> variables, Field field, std::optional<std::vector<Term>> relation)
    : variables_(std::move(variables)), field_(field), relation_(std::move(relation)) {
  if (variables_.size() > kMaxVariables)
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_identifier(v)) throw UsageError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw UsageError("duplicate variable name '" + v + "'");
  }
  if (relation_) {
    if (relation_->empty()) throw UsageError("ring relation must be nonzero");
    for (const auto& t : *relation_)
      if (t.mono.degree() == 0) throw UsageError("ring relation must have every term of degree >= 1");
  }
}

Ring RingSpec::create(std::vector<std::string> variables, Field field) {
  return Ring(new RingSpec(std::move(variables), field, std::nullopt));
}

Ring RingSpec::create(std::vector<std::string> variables, Field field, const std::string& relation) {
  Ring base = create(std::move(variables), field);
  return base->with_relation(parse_poly(relation, base));
}

Ring RingSpec::parse(const std::string& text) {
  std::optional<std::uint32_t> characteristic;
  std::optional<std::vector<std::string>> vars;
  std::optional<std::string> rel;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string part = trim(text.substr(start, end - start));
    start = end + 1;
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in ring spec", start);
    std::string key = trim(part.substr(0, eq));
    std::string value = trim(part.substr(eq + 1));
    if (key == "char") {
      try {
        std::size_t used = 0;
        unsigned long c = std::stoul(value, &used);
        if (used != value.size() || c > 0xFFFFFFFFul) throw std::invalid_argument("");
        characteristic = static_cast<std::uint32_t>(c);
      } catch (const std::exception&) {
        throw ParseError("invalid characteristic '" + value + "'", start);
      }
    } else if (key == "vars") {
      std::vector<std::string> names;
      std::size_t s = 0;
      while (s <= value.size()) {
        std::size_t e = value.find(',', s);
        if (e == std::string::npos) e = value.size();
        names.push_back(trim(value.substr(s, e - s)));
        s = e + 1;
      }
      vars = std::move(names);
    } else if (key == "rel") {
      rel = value;
    } else {
      throw ParseError("unknown ring key '" + key + "'", start);
    }
  }
  if (!vars) throw ParseError("ring spec needs vars=", 0);
  Field k = Field::of_characteristic(characteristic.value_or(0));
  if (rel && !rel->empty() && *rel != "null") return create(std::move(*vars), k, *rel);
  return create(std::move(*vars), k);
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

Polynomial RingSpec::relation() const {
  if (!relation_) throw UsageError("ring has no relation");
  return Polynomial::from_sorted(shared_from_this(), *relation_, MonomialOrder::degrevlex());
}

Ring RingSpec::ambient() const {
  if (!relation_) return shared_from_this();
  return Ring(new RingSpec(variables_, field_, std::nullopt));
}

Ring RingSpec::with_tag() const {
  std::string name = "_t";
  while (index_of(name)) name += "_";
  std::vector<std::string> vars;
  vars.push_back(name);
  vars.insert(vars.end(), variables_.begin(), variables_.end());
  std::optional<std::vector<Term>> rel;
  if (relation_) {
    rel.emplace();
    for (const auto& t : *relation_) rel->push_back(Term{t.coeff, t.mono.shifted(1)});
  }
  return Ring(new RingSpec(std::move(vars), field_, std::move(rel)));
}

Ring RingSpec::with_relation(const Polynomial& relation) const {
  if (relation.ring()->variables() != variables_ || relation.field() != field_)
    throw UsageError("relation lives in a different ring");
  Polynomial r = relation.with_order(MonomialOrder::degrevlex());
  return Ring(new RingSpec(variables_, field_, r.terms()));
}

bool RingSpec::same_as(const RingSpec& other) const {
  return this == &other ||
         (variables_ == other.variables_ && field_ == other.field_ && relation_ == other.relation_);
}

std::string RingSpec::to_string() const {
  std::string s = "char=" + std::to_string(field_.characteristic()) + "; vars=";
  for (std::size_t i = 0; i < variables_.size(); ++i) s += (i ? "," : "") + variables_[i];
  if (relation_) s += "; rel=" + to_input_string(relation());
  return s;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace sympow

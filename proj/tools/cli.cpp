#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sympow/charp.hpp"
#include "sympow/errors.hpp"
#include "sympow/harness.hpp"
#include "sympow/limits.hpp"
#include "sympow/parser.hpp"
#include "sympow/report_io.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 4;

struct Globals {
  std::string ring = "char=0; vars=x,y,z";
  std::string order = "degrevlex";
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<unsigned> cap_degree;
  std::optional<std::size_t> cap_basis;
};

MonomialOrder order_of(const std::string& name) {
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw UsageError("unknown order '" + name + "' (expected lex or degrevlex)");
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(to_input_string(p));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_lines(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << '\n';
}

void print_report(std::ostream& out, const Report& r, bool json) {
  if (json) {
    out << report_to_json(r).dump(2) << '\n';
    return;
  }
  out << "status: " << to_string(r.status) << '\n';
  for (const auto& [name, value] : r.quantities) {
    out << "  " << name << " = ";
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, bool>) out << (v ? "true" : "false");
          else out << v;
        },
        value);
    out << '\n';
  }
  for (const auto& [name, text] : r.witnesses) out << "  witness " << name << ": " << text << '\n';
  for (const auto& a : r.assumptions) out << "  assumes: " << a << '\n';
  if (r.seed) out << "  seed: " << *r.seed << '\n';
}

int worst(const std::vector<Report>& reports) {
  int code = kExitOk;
  for (const auto& r : reports) {
    const int c = exit_code(r.status);
    if (c == 2) return 2;
    code = std::max(code, c);
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with symbolic powers, multiplicities and Frobenius powers", "sympow"};
  app.set_version_flag("--version", toolkit_version());
  app.require_subcommand(1);
  Globals g;
  app.add_option("--ring", g.ring, "inline ring: \"char=N; vars=a,b[; rel=poly]\"");
  app.add_option("--order", g.order, "lex or degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}));
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for all randomness");
  app.add_option("--cap-degree", g.cap_degree, "cap on symbolic orders and Hilbert degrees");
  app.add_option("--cap-basis", g.cap_basis, "cap on polynomials created by one Groebner run");

  std::string gens, f, p_text, a_text, b_text, z_text, c_text;
  unsigned m = 1, E = 2, s = 3, q = 2;
  std::uint32_t characteristic = 5;
  std::string family_name;
  FamilyParams fp;
  std::string check_kind;
  bool run_family = false;
  std::vector<std::string> paths;

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto* gb = add("gb", "reduced Groebner basis");
  gb->add_option("--gens", gens, "comma-separated generators")->required();
  auto* member = add("member", "ideal membership");
  member->add_option("--gens", gens)->required();
  member->add_option("--f", f)->required();
  auto* dim = add("dim", "Krull dimension of R/I");
  dim->add_option("--gens", gens)->required();
  auto* inter = add("intersect", "intersection of two ideals");
  inter->add_option("--a", a_text)->required();
  inter->add_option("--b", b_text)->required();
  auto* sat = add("saturate", "saturation (I : f^infinity)");
  sat->add_option("--gens", gens)->required();
  sat->add_option("--f", f)->required();
  auto* symorder = add("symorder", "symbolic order of f along an asserted prime");
  symorder->add_option("--p", p_text)->required();
  symorder->add_option("--f", f)->required();
  auto* spm = add("sympow-member", "f in p^(m)");
  spm->add_option("--p", p_text)->required();
  spm->add_option("--f", f)->required();
  spm->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  auto* chk = add("check", "check instance files (a file or a directory of .json files)");
  chk->add_option("paths", paths)->required();
  auto* kr = add("kr-example", "the xy(z+u) - u^s z example");
  kr->add_option("--s", s)->check(CLI::Range(3u, 1000u));
  kr->add_option("--q", q)->check(CLI::PositiveNumber);
  kr->add_option("--char", characteristic);
  auto* probe = add("probe-tc", "tight-closure non-membership probe");
  probe->add_option("--z", z_text)->required();
  probe->add_option("--ideal", gens)->required();
  probe->add_option("--c", c_text)->required();
  probe->add_option("--E", E);
  auto* fam = add("family", "generate (and optionally check) an instance family");
  fam->add_option("name", family_name)
      ->required()
      ->check(CLI::IsMember({"coordinate", "coordinate-hypersurface", "monomial-curve-345", "kurano-roberts"}));
  fam->add_option("--nvars", fp.nvars);
  fam->add_option("--split", fp.split);
  fam->add_option("--overlap", fp.overlap);
  fam->add_option("--m", fp.m);
  fam->add_option("--n", fp.n);
  fam->add_option("--char", fp.characteristic);
  fam->add_option("--count", fp.count);
  fam->add_option("--terms", fp.terms);
  fam->add_option("--extra-degree", fp.extra_degree);
  fam->add_option("--s", fp.s);
  fam->add_option("--q", fp.q);
  fam->add_option("--check", check_kind);
  fam->add_flag("--run", run_family, "check the generated instances and print reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << toolkit_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Limits lim = limits();
    if (g.cap_degree) {
      lim.symbolic_order_cap = *g.cap_degree;
      lim.hilbert_degree_cap = *g.cap_degree;
    }
    if (g.cap_basis) lim.max_basis = *g.cap_basis;
    LimitsScope scope(lim);
    const MonomialOrder order = order_of(g.order);
    auto ring = [&] { return RingSpec::parse(g.ring); };

    if (gb->parsed()) {
      const Ring r = ring();
      const auto polys = parse_poly_list(gens, r);
      const auto basis = strings(buchberger(polys, order).generators());
      if (g.json) out << ordered_json{{"order", order.name()}, {"basis", basis}}.dump(2) << '\n';
      else print_lines(out, basis);
      return kExitOk;
    }
    if (member->parsed()) {
      const Ring r = ring();
      const bool v = ideal_member(parse_poly(f, r), parse_poly_list(gens, r));
      if (g.json) out << ordered_json{{"member", v}}.dump(2) << '\n';
      else out << (v ? "true" : "false") << '\n';
      return kExitOk;
    }
    if (dim->parsed()) {
      const Ring r = ring();
      const unsigned d = krull_dim(Ideal(r, parse_poly_list(gens, r)));
      if (g.json) out << ordered_json{{"dim", d}}.dump(2) << '\n';
      else out << d << '\n';
      return kExitOk;
    }
    if (inter->parsed()) {
      const Ring r = ring();
      const auto res = strings(intersect(Ideal::parse(a_text, r), Ideal::parse(b_text, r)).generators());
      if (g.json) out << ordered_json{{"generators", res}}.dump(2) << '\n';
      else print_lines(out, res);
      return kExitOk;
    }
    if (sat->parsed()) {
      const Ring r = ring();
      const auto res = strings(saturate(Ideal::parse(gens, r), parse_poly(f, r)).generators());
      if (g.json) out << ordered_json{{"generators", res}}.dump(2) << '\n';
      else print_lines(out, res);
      return kExitOk;
    }
    if (symorder->parsed()) {
      const Ring r = ring();
      const unsigned v = symbolic_order(parse_poly(f, r), AssertedPrime(Ideal::parse(p_text, r)));
      if (g.json) out << ordered_json{{"symbolic_order", v}}.dump(2) << '\n';
      else out << v << '\n';
      return kExitOk;
    }
    if (spm->parsed()) {
      const Ring r = ring();
      const SymbolicMembership sm = symbolic_member(parse_poly(f, r), AssertedPrime(Ideal::parse(p_text, r)), m);
      if (g.json) {
        ordered_json j{{"member", sm.verdict}, {"exponent", sm.exponent}};
        j["witness"] = sm.witness ? ordered_json(to_input_string(*sm.witness)) : ordered_json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << (sm.verdict ? "true" : "false") << '\n';
        if (sm.witness) out << "witness: " << to_input_string(*sm.witness) << '\n';
      }
      return kExitOk;
    }
    if (chk->parsed()) {
      std::vector<std::filesystem::path> files;
      for (const auto& p : paths) {
        if (std::filesystem::is_directory(p)) {
          std::vector<std::filesystem::path> found;
          for (const auto& e : std::filesystem::directory_iterator(p))
            if (e.is_regular_file() && e.path().extension() == ".json") found.push_back(e.path());
          std::sort(found.begin(), found.end());
          files.insert(files.end(), found.begin(), found.end());
        } else {
          files.emplace_back(p);
        }
      }
      std::vector<ConjectureInstance> instances;
      for (const auto& file : files) instances.push_back(parse_instance(read_file(file)));
      const std::vector<Report> reports = check_batch(instances);
      if (files.size() == 1 && paths.size() == 1 && !std::filesystem::is_directory(paths[0])) {
        print_report(out, reports[0], g.json);
      } else if (g.json) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < files.size(); ++i)
          arr.push_back(ordered_json{{"file", files[i].string()}, {"report", report_to_json(reports[i])}});
        out << arr.dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < files.size(); ++i) {
          out << files[i].string() << '\n';
          print_report(out, reports[i], false);
        }
      }
      return worst(reports);
    }
    if (kr->parsed()) {
      const Report r = kr_example(s, q, characteristic);
      print_report(out, r, g.json);
      return exit_code(r.status);
    }
    if (probe->parsed()) {
      const Ring r = ring();
      const TCProbeResult res = tc_nonmembership_probe(parse_poly(z_text, r), Ideal::parse(gens, r), parse_poly(c_text, r), E);
      ordered_json j;
      if (const auto* fail = std::get_if<NotInTightClosure>(&res.outcome)) {
        j["outcome"] = "NOT_IN_TIGHT_CLOSURE";
        j["failing_e"] = fail->failing_e;
        j["certificate"] = to_input_string(fail->certificate);
      } else {
        j["outcome"] = "CONSISTENT";
        j["E"] = std::get<ConsistentUpTo>(res.outcome).E;
      }
      j["assumption"] = res.assumption;
      if (g.json) {
        out << j.dump(2) << '\n';
      } else if (res.not_in_tight_closure()) {
        out << "not in tight closure (fails at e=" << j["failing_e"].get<unsigned>() << ")\n";
        out << "certificate: " << j["certificate"].get<std::string>() << '\n';
        out << "assumes: " << res.assumption << '\n';
      } else {
        out << "consistent with membership up to e=" << j["E"].get<unsigned>() << '\n';
        out << "assumes: " << res.assumption << '\n';
      }
      return kExitOk;
    }
    if (fam->parsed()) {
      fp.seed = g.seed;
      if (!check_kind.empty()) fp.check = parse_check_kind(check_kind);
      const auto instances = gen_family(family_name, fp);
      if (!run_family) {
        ordered_json arr = ordered_json::array();
        for (const auto& inst : instances) arr.push_back(instance_to_json(inst));
        out << arr.dump(2) << '\n';
        return kExitOk;
      }
      const auto reports = check_batch(instances);
      if (g.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& r : reports) print_report(out, r, false);
      }
      return worst(reports);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotProper& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sympow

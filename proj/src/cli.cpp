// Copyright 2026 The affsteiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affsteiner/cli.hpp"

#include <bit>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "affsteiner/code.hpp"
#include "affsteiner/designs.hpp"
#include "affsteiner/report.hpp"
#include "affsteiner/wdist.hpp"

namespace affsteiner::cli {
namespace {

constexpr int kMaxBuildM = 12;
constexpr int kMaxSteinerM = 14;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_hex(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos, 16);
  if (pos != s.size()) throw std::invalid_argument("bad hex value: " + s);
  return static_cast<std::uint32_t>(v);
}

EnumOptions enum_options(const RunConfig& cfg) {
  EnumOptions o;
  o.guard = cfg.guard;
  o.shard_bits = static_cast<unsigned>(std::bit_width(std::max(1u, cfg.shards)) - 1);
  return o;
}

std::optional<std::uint32_t> poly_for(const RunConfig& cfg, int m) {
  auto it = cfg.field_polys.find(m);
  if (it == cfg.field_polys.end()) return std::nullopt;
  return it->second;
}

void require_me(int m, int e) {
  if (m < 4 || m > kMaxExtensionDegree) {
    throw std::invalid_argument("m=" + std::to_string(m) + " out of range: need 4 <= m <= 16");
  }
  if (e < 1 || e > m / 2) {
    throw std::invalid_argument("e=" + std::to_string(e) + " out of range: need 1 <= e <= " +
                                std::to_string(m / 2));
  }
}

void require_buildable(int m) {
  if (m > kMaxBuildM) {
    throw std::invalid_argument("codes are only built for m <= " + std::to_string(kMaxBuildM));
  }
}

// --- code ----------------------------------------------------------------

struct Distance {
  std::optional<std::size_t> d;
  std::string method;
};

Distance distance_of(const LinearCode& c, const EnumOptions& opt) {
  if (c.dimension() <= opt.guard) return {min_distance(enumerate_wd(c, opt)), "enumeration"};
  const std::size_t co = c.length() - c.dimension();
  if (co <= opt.guard) {
    return {min_distance(macwilliams(enumerate_wd(dual(c), opt), co)),
            "macwilliams(enumerated dual)"};
  }
  if (c.info().extended && c.info().m >= 4) {
    const auto [cf, wd] = closed_form_dual_wd(c.info().m, c.info().e);
    if (c.info().dual) return {min_distance(wd), "closed form"};
    return {min_distance(macwilliams(wd, cf.dual_dimension)), "macwilliams(closed-form dual)"};
  }
  return {std::nullopt, "unavailable (raise --guard)"};
}

int cmd_code(const RunConfig& cfg, std::ostream& out) {
  require_me(cfg.m, cfg.e);
  require_buildable(cfg.m);
  const FieldCtx ctx(cfg.m, poly_for(cfg, cfg.m));
  const auto opt = enum_options(cfg);
  const LinearCode cyc = build_cyclic(ctx, cfg.e);
  const LinearCode ext = extend(cyc);
  const LinearCode dl = dual(ext);

  nlohmann::ordered_json j;
  j["m"] = cfg.m;
  j["e"] = cfg.e;
  std::ostringstream poly;
  poly << std::hex << ctx.primitive_poly();
  j["primitive_poly_hex"] = poly.str();
  j["codes"] = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "m=" << cfg.m << " e=" << cfg.e << " primitive_poly=0x" << poly.str()
       << " g_E=0x" << cyc.info().generator_poly.to_hex() << " (degree "
       << cyc.info().generator_poly.degree() << ")\n";
  for (const LinearCode* c : {&cyc, &ext, &dl}) {
    const Distance d = distance_of(*c, opt);
    auto desc = code_descriptor(*c);
    desc["min_distance"] = d.d ? nlohmann::ordered_json(*d.d) : nlohmann::ordered_json(nullptr);
    desc["distance_method"] = d.method;
    j["codes"].push_back(desc);
    text << std::left << std::setw(9) << c->kind() << " [" << c->length() << ", "
         << c->dimension() << ", " << (d.d ? std::to_string(*d.d) : std::string("?"))
         << "]  d via " << d.method << "\n";
  }
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

// --- wdist ---------------------------------------------------------------

struct Column {
  std::string name;
  std::optional<WeightDistribution> wd;
  std::string why_missing;
};

int cmd_wdist(const RunConfig& cfg, std::ostream& out) {
  require_me(cfg.m, cfg.e);
  if (cfg.side != "dual" && cfg.side != "code") {
    throw std::invalid_argument("--side must be dual or code");
  }
  const std::vector<std::string> all = {"enum", "macwilliams", "closed"};
  if (cfg.method != "all" &&
      std::find(all.begin(), all.end(), cfg.method) == all.end()) {
    throw std::invalid_argument("--method must be enum, macwilliams, closed or all");
  }
  const auto opt = enum_options(cfg);
  const bool dual_side = cfg.side == "dual";
  const int m = cfg.m;
  const int e = cfg.e;
  const auto [cf, closed_dual] = closed_form_dual_wd(m, e);
  const std::size_t code_dim = (std::size_t{1} << m) - cf.dual_dimension;

  std::optional<FieldCtx> ctx;
  std::optional<LinearCode> ext, dl;
  auto codes = [&] {
    if (!ext) {
      require_buildable(m);
      ctx.emplace(m, poly_for(cfg, m));
      ext.emplace(extend(build_cyclic(*ctx, e)));
      dl.emplace(dual(*ext));
    }
  };
  auto want = [&](const std::string& n) { return cfg.method == "all" || cfg.method == n; };

  std::vector<Column> cols;
  if (want("enum")) {
    Column c{"enum", std::nullopt, ""};
    const std::size_t dim = dual_side ? cf.dual_dimension : code_dim;
    if (dim <= opt.guard) {
      codes();
      c.wd = enumerate_wd(dual_side ? *dl : *ext, opt);
    } else if (cfg.method == "enum") {
      throw GuardExceeded("dimension " + std::to_string(dim) + " exceeds the enumeration guard " +
                          std::to_string(opt.guard) + "; use --method macwilliams or closed");
    } else {
      c.why_missing = "skipped (guard)";
    }
    cols.push_back(std::move(c));
  }
  if (want("macwilliams")) {
    Column c{"macwilliams", std::nullopt, ""};
    if (dual_side) {
      if (code_dim <= opt.guard) {
        codes();
        c.wd = macwilliams(enumerate_wd(*ext, opt), code_dim);
      } else if (code_expansion_applies(m, e) && m <= kMaxBuildM) {
        c.wd = macwilliams(closed_form_code_wd(m, e), code_dim);
      } else {
        c.why_missing = "skipped (no code-side distribution)";
      }
    } else if (cf.dual_dimension <= opt.guard && m <= kMaxBuildM) {
      codes();
      c.wd = macwilliams(enumerate_wd(*dl, opt), cf.dual_dimension);
    } else {
      c.wd = macwilliams(closed_dual, cf.dual_dimension);
    }
    if (!c.wd && cfg.method == "macwilliams") throw std::invalid_argument(c.why_missing);
    cols.push_back(std::move(c));
  }
  if (want("closed")) {
    Column c{"closed", std::nullopt, ""};
    if (dual_side) {
      c.wd = closed_dual;
    } else if (code_expansion_applies(m, e) && m <= kMaxBuildM) {
      c.wd = closed_form_code_wd(m, e);
    } else {
      c.why_missing = "skipped (no code-side closed form)";
    }
    if (!c.wd && cfg.method == "closed") throw std::invalid_argument(c.why_missing);
    cols.push_back(std::move(c));
  }

  std::set<std::size_t> weights;
  const std::optional<WeightDistribution>* first = nullptr;
  for (const auto& c : cols) {
    if (!c.wd) continue;
    if (!first) first = &c.wd;
    for (const auto& [w, n] : c.wd->counts()) weights.insert(w);
  }
  bool agree = true;
  for (const auto& c : cols) {
    if (c.wd && first && !(*c.wd == **first)) agree = false;
  }

  nlohmann::ordered_json j;
  j["m"] = m;
  j["e"] = e;
  j["side"] = cfg.side;
  j["case"] = to_string(cf.tag);
  for (const auto& c : cols) {
    j["distributions"][c.name] =
        c.wd ? nlohmann::ordered_json(to_json(*c.wd)) : nlohmann::ordered_json(c.why_missing);
  }
  j["agree"] = agree;

  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw std::invalid_argument("cannot write " + cfg.out);
    f << j.dump(2) << "\n";
  }
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << (dual_side ? "dual" : "extended") << " code, m=" << m << " e=" << e << " (case "
        << to_string(cf.tag) << ")\n";
    out << std::left << std::setw(8) << "weight";
    for (const auto& c : cols) out << " " << std::setw(24) << c.name;
    if (cols.size() > 1) out << " status";
    out << "\n";
    auto cell = [](const Column& c, std::size_t w) {
      return c.wd ? c.wd->count(w).str() : std::string("skipped");
    };
    for (auto w : weights) {
      out << std::setw(8) << w;
      std::set<std::string> seen;
      for (const auto& c : cols) {
        out << " " << std::setw(24) << cell(c, w);
        if (c.wd) seen.insert(cell(c, w));
      }
      if (cols.size() > 1) out << " " << (seen.size() <= 1 ? "OK" : "MISMATCH");
      out << "\n";
    }
    out << std::setw(8) << "sum";
    for (const auto& c : cols) {
      out << " " << std::setw(24) << (c.wd ? c.wd->total().str() : std::string("skipped"));
    }
    out << "\n";
    for (const auto& c : cols) {
      if (!c.wd) out << c.name << ": " << c.why_missing << "\n";
    }
    if (cols.size() > 1) out << (agree ? "all available engines agree\n" : "MISMATCH\n");
  }
  return agree ? kExitOk : kExitMismatch;
}

// --- steiner -------------------------------------------------------------

int cmd_steiner(const RunConfig& cfg, std::ostream& out) {
  const int m = cfg.m;
  const int e = cfg.e;
  if (m < 4 || m % 2 || m > kMaxSteinerM) {
    throw std::invalid_argument("the Steiner construction needs even m with 4 <= m <= " +
                                std::to_string(kMaxSteinerM) + ", got m=" + std::to_string(m));
  }
  if (e < 2 || e > m / 2 || std::gcd(m, e) != 2) {
    throw std::invalid_argument("the Steiner construction needs 2 <= e <= m/2 and gcd(m, e) = 2;"
                                " got m=" + std::to_string(m) + ", e=" + std::to_string(e) +
                                ", gcd=" + std::to_string(std::gcd(m, e)));
  }
  const FieldCtx ctx(m, poly_for(cfg, m));
  const Design d = extract_weight4_blocks(ctx, e);
  const CoverageReport rep = verify_design(d);
  const bool steiner = rep.uniform && rep.lambda == 1;

  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw std::invalid_argument("cannot write " + cfg.out);
    if (cfg.format == "json") {
      f << design_to_json(d).dump() << "\n";
    } else {
      write_block_file(f, d);
    }
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["e"] = e;
    j["v"] = d.v;
    j["b"] = d.b();
    j["pairs"] = rep.pairs;
    j["uniform"] = rep.uniform;
    j["lambda"] = rep.lambda;
    j["steiner"] = steiner;
    out << j.dump(2) << "\n";
  } else {
    out << "m=" << m << " e=" << e << ": " << d.b() << " blocks on " << d.v << " points, ";
    if (rep.uniform) {
      out << "every one of " << rep.pairs << " pairs covered " << rep.lambda << " time(s)";
      if (steiner) out << ": S(2,4," << d.v << ")";
      out << "\n";
    } else {
      out << "pair coverage ranges " << rep.min_count << ".." << rep.max_count << "\n";
      for (const auto& o : rep.offenders) {
        out << "  pair (" << std::hex << o.p << ", " << o.q << std::dec << ") covered " << o.count
            << " time(s)\n";
      }
    }
  }
  return steiner ? kExitOk : kExitMismatch;
}

// --- report --------------------------------------------------------------

std::vector<int> parse_m_list(const std::string& s) {
  std::vector<int> ms;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = trim(tok);
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const int m = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad m value: " + tok);
    ms.push_back(m);
  }
  if (ms.empty()) throw std::invalid_argument("--m needs at least one value");
  return ms;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  ReportOptions opt;
  opt.enumeration = enum_options(cfg);
  opt.seed = cfg.seed;
  std::vector<ReportRow> rows;
  for (int m : parse_m_list(cfg.m_list)) {
    std::vector<int> es;
    if (cfg.e_rule == "all") {
      for (int e = 1; e <= m / 2; ++e) es.push_back(e);
    } else {
      es.push_back(std::stoi(cfg.e_rule));
    }
    for (int e : es) {
      require_me(m, e);
      opt.primitive_poly = poly_for(cfg, m);
      auto r = build_report(m, e, opt);
      rows.insert(rows.end(), r.begin(), r.end());
    }
  }
  const std::string text = cfg.format == "json" ? render_json(rows).dump(2) + "\n"
                                                : render_markdown(rows);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw std::invalid_argument("cannot write " + cfg.out);
    f << text;
  }
  out << text;
  return all_ok(rows) ? kExitOk : kExitMismatch;
}

// --- plumbing ------------------------------------------------------------

void apply_config(const std::map<std::string, std::string>& kv, CLI::App& sub, RunConfig& cfg) {
  auto unset = [&](const char* flag) {
    auto* o = sub.get_option_no_throw(flag);
    return o == nullptr || o->count() == 0;
  };
  for (const auto& [key, val] : kv) {
    if (key.rfind("field.poly.", 0) == 0) {
      cfg.field_polys[std::stoi(key.substr(11))] = parse_hex(val);
    } else if (key == "guard") {
      if (unset("--guard")) cfg.guard = std::stoul(val);
    } else if (key == "shards") {
      if (unset("--shards")) cfg.shards = static_cast<unsigned>(std::stoul(val));
    } else if (key == "format") {
      if (unset("--format")) cfg.format = val;
    } else if (key == "out") {
      if (unset("--out")) cfg.out = val;
    } else if (key == "seed") {
      if (unset("--seed")) cfg.seed = std::stoull(val);
    } else if (key == "method") {
      if (unset("--method")) cfg.method = val;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& is) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + " has no '='");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string config_path;
  CLI::App app{"Extended cyclic codes, their weight distributions and support designs"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--guard", cfg.guard, "Largest code dimension to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--shards", cfg.shards, "Enumeration shards (rounded down to a power of 2)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Output file");
    sub->add_option("--seed", cfg.seed, "Seed for randomized spot checks");
    sub->add_option("--config", config_path, "key=value config file (flags take precedence)");
  };

  auto* code = app.add_subcommand("code", "Build C_E, its extension and the dual");
  code->add_option("--m", cfg.m, "Extension degree")->required();
  code->add_option("--e", cfg.e, "Exponent e in 1 + 2^e");
  common(code);

  auto* wdist = app.add_subcommand("wdist", "Weight distributions from the three engines");
  wdist->add_option("--m", cfg.m, "Extension degree")->required();
  wdist->add_option("--e", cfg.e, "Exponent e in 1 + 2^e");
  wdist->add_option("--method", cfg.method, "enum, macwilliams, closed or all")
      ->check(CLI::IsMember({"enum", "macwilliams", "closed", "all"}));
  wdist->add_option("--side", cfg.side, "dual (default) or code")
      ->check(CLI::IsMember({"dual", "code"}));
  common(wdist);

  auto* steiner = app.add_subcommand("steiner", "Extract and verify the S(2,4,2^m) blocks");
  steiner->add_option("--m", cfg.m, "Extension degree")->required();
  steiner->add_option("--e", cfg.e, "Exponent e in 1 + 2^e");
  common(steiner);

  auto* report = app.add_subcommand("report", "Formula-versus-computation report");
  report->add_option("--m", cfg.m_list, "Comma-separated extension degrees")->required();
  report->add_option("--e", cfg.e_rule, "A fixed e or 'all'");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& pe) {
    const int rc = app.exit(pe, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::invalid_argument("cannot read config file " + config_path);
      apply_config(parse_config(f), *sub, cfg);
    }
    if (sub == code) return cmd_code(cfg, out);
    if (sub == wdist) return cmd_wdist(cfg, out);
    if (sub == steiner) return cmd_steiner(cfg, out);
    return cmd_report(cfg, out);
  } catch (const VerificationError& ex) {
    err << "verification mismatch: " << ex.what() << "\n";
    return kExitMismatch;
  } catch (const InconsistencyError& ex) {
    err << "internal inconsistency: " << ex.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace affsteiner::cli

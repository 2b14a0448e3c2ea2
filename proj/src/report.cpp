#include "liecheck/report.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "liecheck/chevalley.hpp"
#include "liecheck/cohomology.hpp"
#include "liecheck/errors.hpp"
#include "liecheck/reference.hpp"

namespace liecheck {

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> g = {"tables",       "translators",   "words", "f4-roots",
                                             "cohomology",   "constructions", "scans"};
  return g;
}

std::vector<std::pair<char, int>> default_targets() {
  return {{'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'C', 3},
          {'C', 4}, {'C', 5}, {'D', 4}, {'F', 4}, {'G', 2}};
}

void validate(const RunConfig& cfg) {
  if (cfg.targets.empty()) throw ConfigError("no targets");
  for (auto [t, n] : cfg.targets)
    if (!is_valid_type(t, n)) throw ConfigError("invalid type " + std::string(1, t) + std::to_string(n));
  for (const auto& c : cfg.checks)
    if (c != "all" && std::find(check_groups().begin(), check_groups().end(), c) == check_groups().end())
      throw ConfigError("unknown check group '" + c + "'");
  if (cfg.budget == 0) throw ConfigError("budget must be positive");
  if (cfg.format != "json" && cfg.format != "markdown") throw ConfigError("format must be json or markdown");
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
}

Word parse_word(const std::string& s, int rank) {
  Word w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    int x = 0;
    try {
      std::size_t pos = 0;
      x = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("malformed word letter '" + tok + "'");
    }
    if (x < 1 || x > rank) throw ConfigError("word letter " + tok + " out of range 1.." + std::to_string(rank));
    w.push_back(x - 1);
  }
  return w;
}

std::pair<char, int> parse_type(const std::string& type, int rank) {
  if (type.size() != 1) throw ConfigError("type must be one letter A-G");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  if (!is_valid_type(t, rank)) throw ConfigError("invalid type " + std::string(1, t) + std::to_string(rank));
  return {t, rank};
}

namespace {

bool selected(const RunConfig& cfg, const std::string& g) {
  return cfg.checks.empty() || cfg.checks.count("all") || cfg.checks.count(g);
}

bool constructed(const RootSystem& rs) { return !rs.simply_laced(); }

CaseReport tables_case(const RootSystem& rs, const std::optional<ClassConstruction>& cc) {
  const int n = rs.rank();
  const std::string T = "tables";
  CaseReport c;
  c.id = rs.label() + "/tables";
  std::vector<int> com = rs.co_minuscule_roots();
  if (auto exp = reference::cominuscule_table(rs.type(), n))
    c.add(T, "co-minuscule roots", "co-minuscule set of " + rs.label() + " is " + indices_string(*exp), com == *exp,
          "computed " + indices_string(com) + ", highest root " + alpha_string(rs.highest_root().alpha));
  if (auto g = reference::dual_coxeter_table(rs.type(), n))
    c.add(T, "dual Coxeter number", "g(" + rs.label() + ") = " + std::to_string(*g), rs.dual_coxeter_number() == *g,
          "computed " + std::to_string(rs.dual_coxeter_number()));
  if (rs.simply_laced()) {
    std::vector<int> mw = rs.minuscule_weights();
    c.add(T, "minuscule equals co-minuscule", "simply laced: minuscule weights index the co-minuscule roots", mw == com,
          "minuscule " + indices_string(mw) + ", co-minuscule " + indices_string(com));
  }
  {
    const RootCoeffs a0 = rs.highest_root().alpha;
    bool ok = true;
    std::string wit;
    for (int r = 0; r < n; ++r) {
      RootCoeffs img = longest_element(rs, ParabolicSubset::full(n).without(r)).act_alpha(RootCoeffs::unit(n, r));
      bool is_com = a0[r] == 1;
      if ((img == a0) != is_com) ok = false;
      wit += (r ? "; " : "") + std::to_string(r + 1) + ": " + alpha_string(img);
    }
    c.add(T, "co-minuscule characterization", "w_{0,S\\r}(a_r) = a0 iff a_r is co-minuscule", ok, wit);
  }
  if (cc) {
    const int r = cc->r;
    RootCoeffs img = longest_element(rs, ParabolicSubset::full(n).without(r)).act_alpha(RootCoeffs::unit(n, r));
    RootCoeffs exp = rs.highest_root().alpha - RootCoeffs::unit(n, r);
    c.add(T, "longest element on the special root",
          "w_{0,S\\{" + std::to_string(r + 1) + "}}(a" + std::to_string(r + 1) + ") = a0 - a" + std::to_string(r + 1),
          img == exp, alpha_string(img));
  }
  return c;
}

CaseReport translators_case(const RootSystem& rs, std::uint64_t budget) {
  const std::string T = "translators";
  CaseReport c;
  c.id = rs.label() + "/translators";
  const int g = rs.dual_coxeter_number();
  for (int i = 0; i < rs.rank(); ++i) {
    const std::string a = "a" + std::to_string(i + 1);
    if (!rs.simple_is_long(i)) {
      bool threw = false;
      try {
        find_v_alpha(rs, i, budget);
      } catch (const ShortRoot&) {
        threw = true;
      }
      c.add(T, "translator for " + a, a + " is short: no translator is defined", threw,
            threw ? "rejected as short" : "short root accepted");
      continue;
    }
    Translators t = find_v_alpha(rs, i, budget);
    const WeylElement s = WeylElement::reflection(rs, i);
    const RootCoeffs ai = RootCoeffs::unit(rs.rank(), i);
    const RootCoeffs a0 = rs.highest_root().alpha;
    bool ok = t.u.length() == g - 2 && t.v == t.u * s && t.v.length() == t.u.length() + 1 &&
              t.u.inverse().act_alpha(a0) == ai && t.v.inverse().act_alpha(a0) == -ai;
    c.add(T, "translator for " + a, "l(u) = g - 2 = " + std::to_string(g - 2) + ", v = u s" + std::to_string(i + 1) +
                                        ", v^-1(a0) = -" + a,
          ok,
          "u = " + t.u.to_string() + " (l = " + std::to_string(t.u.length()) + "), v = " + t.v.to_string() +
              ", s" + std::to_string(i + 1) + "u " + (s * t.u == t.v ? "=" : "!=") + " v");
  }
  return c;
}

CaseReport words_case(const RootSystem& rs, const ClassConstruction& cc, const Word& chain, std::uint64_t budget) {
  const std::string T = "words";
  CaseReport c;
  c.id = rs.label() + "/words";
  const std::string vr = "v" + std::to_string(cc.v_root + 1);
  Translators t = find_v_alpha(rs, cc.v_root, budget);
  const WeylElement v = WeylElement::from_word(rs, cc.v_word);
  c.add(T, vr + " reduced word", vr + " = " + word_to_string(cc.v_word),
        t.v == v && is_reduced(rs, cc.v_word), "search found " + t.v.to_string());
  if (chain != cc.v_word) {
    bool red = is_reduced(rs, chain);
    c.add(T, vr + " chain word", vr + " = " + word_to_string(chain), red && WeylElement::from_word(rs, chain) == v,
          red ? "element " + WeylElement::from_word(rs, chain).to_string() : "not reduced");
  }
  for (const auto& id : reference::image_identities(rs, cc)) {
    RootCoeffs img = id.g.act_alpha(id.input);
    bool ok = id.expected ? img == *id.expected : (img.all_nonpositive() && !img.is_zero());
    c.add(T, "image identity", id.anchor, ok, alpha_string(img));
  }
  return c;
}

CaseReport f4_case(const RootSystem& rs) {
  const std::string T = "f4-roots";
  CaseReport c;
  c.id = rs.label() + "/f4-roots";
  const auto& table = reference::f4_positive_roots();
  std::vector<std::array<int, 4>> gen;
  std::array<int, 11> counts{};
  for (int k = 0; k < rs.num_positive(); ++k) {
    const Root& r = rs.root(k);
    gen.push_back({r.alpha[0], r.alpha[1], r.alpha[2], r.alpha[3]});
    if (r.height >= 1 && r.height <= 11) ++counts[r.height - 1];
  }
  auto a = gen, b = table;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  c.add(T, "positive roots", "F4 has the 24 tabulated positive roots", a == b,
        std::to_string(gen.size()) + " generated, " + std::to_string(table.size()) + " tabulated");
  bool heights = counts == reference::kF4HeightCounts;
  for (std::size_t k = 0; k < table.size() && heights; ++k) {
    auto idx = rs.index_of([&] {
      RootCoeffs x(4);
      for (int i = 0; i < 4; ++i) x += table[k][i] * RootCoeffs::unit(4, i);
      return x;
    }());
    int h = table[k][0] + table[k][1] + table[k][2] + table[k][3];
    heights = idx && rs.root(*idx).height == h;
  }
  std::string cs;
  for (int k = 0; k < 11; ++k) cs += (k ? "," : "") + std::to_string(counts[k]);
  c.add(T, "height partition", "roots per height 1..11 are 4,3,3,3,3,2,2,1,1,1,1", heights, cs);
  RootCoeffs top(4);
  for (int i = 0; i < 4; ++i) top += table.back()[i] * RootCoeffs::unit(4, i);
  c.add(T, "highest root", "a0 = 2a1+3a2+4a3+2a4", rs.highest_root().alpha == top, alpha_string(rs.highest_root().alpha));
  return c;
}

std::string dims_string(const std::vector<int>& d) {
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s;
}

CharacterPoly negatives_character(const RootSystem& rs, const std::vector<RootCoeffs>& roots) {
  CharacterPoly p;
  for (const auto& r : roots) p.add(-rs.omega_of(r), 1);
  return p;
}

CaseReport cohomology_case(const LieAlgebra& lie, const ClassConstruction& cc, const Word& chain) {
  const RootSystem& rs = lie.system();
  const int n = rs.rank();
  const std::string T = "cohomology";
  CaseReport c;
  c.id = rs.label() + "/cohomology";
  {
    LieAlgebra::JacobiStats js = n <= 4 ? lie.check_jacobi_exhaustive() : lie.check_jacobi_sampled(10000, 1);
    c.add(T, "Jacobi identity", n <= 4 ? "Jacobi holds on all basis triples" : "Jacobi holds on 10^4 sampled triples",
          js.ok, std::to_string(js.triples) + " triples" + (js.ok ? "" : ", " + js.failure));
  }
  std::vector<Word> words{chain};
  if (rs.type() == 'B' && cc.v_word != chain) words.push_back(cc.v_word);
  const std::string vr = "v" + std::to_string(cc.v_root + 1);
  for (const Word& w : words) {
    const std::string ws = word_to_string(w);
    CohomChainResult r;
    try {
      r = h0_chain(w, TSubspace::borel(lie));
    } catch (const NotReduced& e) {
      c.add(T, "chain on b", "H^0(" + vr + ", b) = H^1(" + vr + ", b) = 0", false, e.what());
      continue;
    }
    std::optional<bool> eu = euler_crosscheck(w, TSubspace::borel(lie));
    std::string wit = "word " + ws + ", dims " + dims_string(r.dims());
    if (!r.all_vanish) wit += ", H^1 nonzero at step " + std::to_string(r.inconclusive_step) + ": " +
                              r.step_h1[r.inconclusive_step - 1].to_string(rs);
    c.add(T, "chain on b", "H^0(" + vr + ", b) = H^1(" + vr + ", b) = 0", r.all_vanish && r.final_h0().dim() == 0,
          wit);
    c.add(T, "Euler cross-check on b", "Demazure character of b along " + ws + " equals the chain H^0",
          eu.value_or(false), eu ? (*eu ? "agrees" : "disagrees") : "chain inconclusive");

    if (w == chain && rs.type() == 'G') {
      c.add(T, "G2 chain dimensions", "dims along s2s1s2 on b are 8,6,1,0", r.dims() == std::vector<int>{8, 6, 1, 0},
            dims_string(r.dims()));
      CharacterPoly exp = CharacterPoly::monomial(rs.zero_weight()) +
                          negatives_character(rs, {RootCoeffs::unit(2, 0), RootCoeffs::unit(2, 0) + RootCoeffs::unit(2, 1),
                                                   2 * RootCoeffs::unit(2, 0) + RootCoeffs::unit(2, 1),
                                                   3 * RootCoeffs::unit(2, 0) + RootCoeffs::unit(2, 1),
                                                   3 * RootCoeffs::unit(2, 0) + 2 * RootCoeffs::unit(2, 1)});
      bool ok = r.step_h0.size() > 1 && r.step_h0[1].character() == exp;
      c.add(T, "G2 first step", "H^0(s2, b) has weights 0, -a1, -(a1+a2), -(2a1+a2), -(3a1+a2), -(3a1+2a2)", ok,
            r.step_h0.size() > 1 ? r.step_h0[1].character().to_string(rs) : "missing");
    }
    if (w == chain && rs.type() == 'F' && chain == cc.v_word) {
      std::vector<RootCoeffs> rest;
      auto co = [&](int a, int b2, int c2, int d) {
        RootCoeffs x(4);
        x += a * RootCoeffs::unit(4, 0);
        x += b2 * RootCoeffs::unit(4, 1);
        x += c2 * RootCoeffs::unit(4, 2);
        x += d * RootCoeffs::unit(4, 3);
        return x;
      };
      rest = {co(1, 2, 2, 0), co(1, 2, 2, 1), co(1, 2, 2, 2), co(1, 2, 3, 1)};
      for (int k = 0; k < rs.num_positive(); ++k)
        if (rs.root(k).height >= 8) rest.push_back(rs.root(k).alpha);
      CharacterPoly exp = negatives_character(rs, rest);
      bool ok = r.step_h0.size() > 4 && r.step_h0[4].dim() == 8 && r.step_h0[4].character() == exp;
      c.add(T, "F4 dimension-8 stage",
            "after s4s3s1s2 the module is spanned by x_{-b} for b in {1220,1221,1222,1231} and height >= 8", ok,
            r.step_h0.size() > 4 ? r.step_h0[4].character().to_string(rs) : "missing");
    }
  }
  for (const Word& w : words) {
    const std::string ws = word_to_string(w);
    const ParabolicSubset Q{cc.d};
    try {
      ParabolicVanishing pv = parabolic_vanishing(lie, w, Q);
      c.add(T, "chain on p_d",
            "H^0(" + vr + ", p_" + std::to_string(cc.d + 1) + ") = H^1(" + vr + ", p_" + std::to_string(cc.d + 1) +
                ") = 0",
            pv.vanishes() && pv.euler.value_or(false),
            "word " + ws + ", dims " + dims_string(pv.direct.dims()) + ", " + pv.summary());
    } catch (const NotReduced& e) {
      c.add(T, "chain on p_d", "H^0 = H^1 = 0 on p_" + std::to_string(cc.d + 1), false, e.what());
    }
  }
  return c;
}

}  // namespace

std::vector<CaseReport> run_target(char type, int rank, const RunConfig& cfg) {
  RootSystem rs(type, rank);
  const bool need_lie = selected(cfg, "cohomology") || selected(cfg, "constructions") || selected(cfg, "scans");
  std::optional<LieAlgebra> lie;
  if (need_lie) lie.emplace(rs);
  std::optional<ClassConstruction> cc;
  if (constructed(rs)) cc = construct_translator_classes(rs);
  Word chain = cc ? cc->chain_word : Word{};
  if (cc && cfg.word_override) chain = *cfg.word_override;

  std::vector<CaseReport> out;
  if (selected(cfg, "tables")) out.push_back(tables_case(rs, cc));
  if (selected(cfg, "translators")) out.push_back(translators_case(rs, cfg.budget));
  if (cc && selected(cfg, "words")) out.push_back(words_case(rs, *cc, chain, cfg.budget));
  if (rs.type() == 'F' && selected(cfg, "f4-roots")) out.push_back(f4_case(rs));
  if (cc && selected(cfg, "cohomology")) out.push_back(cohomology_case(*lie, *cc, chain));
  if (selected(cfg, "constructions") || selected(cfg, "scans")) {
    for (auto& cr : classification_report(*lie, cfg.budget)) {
      bool is_scan = cr.id.find("/scan") != std::string::npos;
      if (is_scan ? selected(cfg, "scans") : selected(cfg, "constructions")) out.push_back(std::move(cr));
    }
  }
  return out;
}

VerificationReport build_report(const RunConfig& cfg) {
  validate(cfg);
  const std::size_t nt = cfg.targets.size();
  std::vector<std::vector<CaseReport>> results(nt);
  std::vector<std::exception_ptr> errors(nt);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < nt;) {
      try {
        results[k] = run_target(cfg.targets[k].first, cfg.targets[k].second, cfg);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int nj = std::min<int>(cfg.jobs, static_cast<int>(nt));
  std::vector<std::thread> pool;
  for (int j = 1; j < nj; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  VerificationReport rep;
  for (auto& r : results)
    for (auto& c : r) rep.cases.push_back(std::move(c));
  return rep;
}

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const VerificationReport& r, const std::string& timestamp) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = kReportVersion;
  j["timestamp"] = timestamp;
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json jc;
    jc["id"] = c.id;
    ordered_json checks = ordered_json::array();
    for (const auto& k : c.checks) {
      ordered_json jk;
      jk["name"] = k.name;
      jk["anchor"] = k.anchor;
      jk["pass"] = k.pass;
      jk["witness"] = k.witness;
      if (k.skipped) jk["skipped"] = true;
      checks.push_back(std::move(jk));
    }
    jc["checks"] = std::move(checks);
    jc["overall"] = c.overall();
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}, {"skipped", r.skipped()}};
  return j.dump(2) + "\n";
}

std::string to_markdown(const VerificationReport& r, const std::string& timestamp) {
  auto esc = [](std::string s) {
    std::string o;
    for (char ch : s) {
      if (ch == '|') o += "\\|";
      else o += ch;
    }
    return o;
  };
  std::ostringstream md;
  md << "# Verification report\n\n";
  md << "Version " << kReportVersion << ", generated " << timestamp << ".\n\n";
  md << "Passed " << r.passed() << ", failed " << r.failed() << ", skipped " << r.skipped() << ".\n";
  for (const auto& topic : check_groups()) {
    bool any = false;
    for (const auto& c : r.cases)
      for (const auto& k : c.checks)
        if (k.topic == topic) any = true;
    if (!any) continue;
    md << "\n## " << topic << "\n\n| case | check | claim | result | witness |\n|---|---|---|---|---|\n";
    for (const auto& c : r.cases)
      for (const auto& k : c.checks)
        if (k.topic == topic)
          md << "| " << esc(c.id) << " | " << esc(k.name) << " | " << esc(k.anchor) << " | "
             << (k.skipped ? "SKIP" : k.pass ? "PASS" : "FAIL") << " | " << esc(k.witness) << " |\n";
  }
  return md.str();
}

int run(const RunConfig& cfg, std::ostream& err) {
  VerificationReport rep;
  try {
    rep = build_report(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 4;
  } catch (const InvalidType& e) {
    err << "config error: " << e.what() << "\n";
    return 4;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  }
  const std::string ts = utc_timestamp();
  const std::string doc = cfg.format == "markdown" ? to_markdown(rep, ts) : to_json(rep, ts);
  if (cfg.out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "io error: cannot write " << cfg.out << "\n";
      return 4;
    }
    f << doc;
  }
  for (const auto& c : rep.cases)
    for (const auto& k : c.checks)
      if (!k.skipped && !k.pass) err << "FAIL " << c.id << ": " << k.name << " [" << k.anchor << "] " << k.witness << "\n";
  return rep.all_pass() ? 0 : 2;
}

}  // namespace liecheck

#include "cwb/run.hpp"

#include <sstream>

#include "cwb/cder.hpp"
#include "cwb/cmod.hpp"
#include "cwb/coeff.hpp"
#include "cwb/cohom.hpp"

namespace cwb {

namespace {

using njson = nlohmann::ordered_json;

njson point_json(const std::map<Sym, Rat>& pt) {
  njson j = njson::object();
  for (const auto& [s, q] : pt) j[s.text()] = to_string(q);
  return j;
}

std::string point_text(const std::map<Sym, Rat>& pt) {
  if (pt.empty()) return "symbolic";
  std::string s;
  for (const auto& [p, q] : pt) {
    if (!s.empty()) s += ",";
    s += p.text() + "=" + to_string(q);
  }
  return s;
}

njson genericity_json(const std::vector<Poly>& gen) {
  njson j = njson::array();
  for (const Poly& g : gen) j.push_back(g.render());
  return j;
}

njson checks_json(const VerifyReport& rep) {
  njson items = njson::array();
  for (const CheckItem& it : rep.items) {
    njson o;
    o["check"] = it.check;
    o["pass"] = it.pass;
    if (!it.pass) o["witness"] = it.witness;
    items.push_back(std::move(o));
  }
  return items;
}

// "a(L,L)=l^3" / "b(L,M)=1; b(Y,Y)=-2*l": entries with i <= j, the skew
// partners being implied.
std::string render_cocycle(const std::string& name, const Cocycle& c,
                           const std::vector<std::string>& gens) {
  std::string s;
  for (int i = 0; i < c.rank; ++i)
    for (int j = i; j < c.rank; ++j) {
      if (c.at(i, j).is_zero()) continue;
      if (!s.empty()) s += "; ";
      s += name + "(" + gens[static_cast<size_t>(i)] + "," +
           gens[static_cast<size_t>(j)] + ")=" + c.at(i, j).render();
    }
  return s.empty() ? name + "=0" : s;
}

std::string rep_letter(size_t k) {
  std::string s(1, static_cast<char>('a' + (k % 26)));
  if (k >= 26) s += std::to_string(k / 26);
  return s;
}

LcaPresentation presentation_at(const AlgebraDoc& doc, const RunOptions& opt) {
  if (opt.at.empty()) return doc.presentation;
  return doc.presentation.specialized(opt.at);
}

RunResult do_check(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  std::ostringstream text;
  njson j;
  if (doc.has_bracket_block) {
    LcaPresentation a = presentation_at(doc, opt);
    VerifyReport skew = check_skew(a);
    VerifyReport jac = check_jacobi(a);
    j["skew"] = checks_json(skew);
    j["jacobi"] = checks_json(jac);
    bool ok = skew.ok() && jac.ok();
    j["ok"] = ok;
    text << skew.summary() << "\n" << jac.summary() << "\n";
    rr.exit_code = ok ? 0 : 1;
  } else if (doc.has_gd_block) {
    VerifyReport gd = check_gd(doc.bialgebra);
    j["gd"] = checks_json(gd);
    j["ok"] = gd.ok();
    text << gd.summary() << "\n";
    rr.exit_code = gd.ok() ? 0 : 1;
  } else {
    throw std::invalid_argument("check: document has no clauses to verify");
  }
  rr.json = std::move(j);
  rr.text = text.str();
  return rr;
}

njson h2_entry_json(const std::map<Sym, Rat>& pt, const CocycleSolution& sol,
                    const std::vector<std::string>& gens) {
  njson e;
  e["point"] = point_json(pt);
  e["dim_z2"] = sol.dim_z2();
  e["dim_b2"] = sol.dim_b2();
  e["dim_h2"] = sol.dim_h2();
  njson reps = njson::array();
  for (size_t k = 0; k < sol.h2_reps.size(); ++k)
    reps.push_back(render_cocycle(rep_letter(k),
                                  sol.cocycle_from_vector(sol.h2_reps[k]), gens));
  e["representatives"] = std::move(reps);
  e["genericity"] = genericity_json(sol.genericity);
  return e;
}

RunResult do_h2(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  LcaPresentation a = presentation_at(doc, opt);
  std::ostringstream text;
  njson entries = njson::array();
  if (opt.survey && !a.params.empty() && opt.at.empty()) {
    for (const CocycleSurveyEntry& e : survey_cocycles(a, opt.h2_deg)) {
      entries.push_back(h2_entry_json(e.point, e.sol, doc.gens));
      text << "[" << point_text(e.point) << "] dim H2 = " << e.sol.dim_h2()
           << "\n";
    }
  } else {
    CocycleSolution sol = solve_cocycles(a, opt.h2_deg);
    entries.push_back(h2_entry_json(opt.at, sol, doc.gens));
    text << "dim H2 = " << sol.dim_h2() << "\n";
  }
  rr.json["deg"] = opt.h2_deg;
  rr.json["entries"] = std::move(entries);
  rr.text = text.str();
  return rr;
}

njson derivation_map_json(const DerivationMap& m,
                          const std::vector<std::string>& gens) {
  njson o = njson::object();
  for (int i = 0; i < m.rank; ++i) {
    njson row = njson::object();
    for (int j = 0; j < m.rank; ++j)
      if (!m.at(i, j).is_zero()) row[gens[static_cast<size_t>(j)]] = m.at(i, j).render();
    if (!row.empty()) o[gens[static_cast<size_t>(i)]] = std::move(row);
  }
  return o;
}

RunResult do_cder(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  LcaPresentation a = presentation_at(doc, opt);
  DerivationSpace d = solve_derivations(a, opt.cder_deg_l, opt.cder_deg_d);
  rr.json["deg_l"] = opt.cder_deg_l;
  rr.json["deg_d"] = opt.cder_deg_d;
  rr.json["dim_all"] = d.dim_all();
  rr.json["dim_inner"] = d.dim_inner();
  rr.json["outer_dim"] = d.outer_dim();
  njson reps = njson::array();
  for (const VecF& r : d.outer_reps)
    reps.push_back(derivation_map_json(d.map_from_vector(r), doc.gens));
  rr.json["outer_representatives"] = std::move(reps);
  rr.json["genericity"] = genericity_json(d.genericity);
  std::ostringstream text;
  text << "dim CDer = " << d.dim_all() << " within bounds (stable evidence), "
       << "dim CInn = " << d.dim_inner() << ", outer dim = " << d.outer_dim()
       << "\n";
  rr.text = text.str();
  return rr;
}

RunResult do_coeff(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  LcaPresentation a = presentation_at(doc, opt);
  CoeffWindow w = build_window(a, opt.coeff_window);
  VerifyReport jac = check_window_jacobi(w);
  rr.json["window"] = opt.coeff_window;
  njson lines = njson::array();
  std::istringstream dump(w.dump());
  for (std::string line; std::getline(dump, line);) lines.push_back(line);
  rr.json["brackets"] = std::move(lines);
  rr.json["jacobi"] = checks_json(jac);
  rr.json["ok"] = jac.ok();
  rr.exit_code = jac.ok() ? 0 : 1;
  std::ostringstream text;
  text << jac.summary() << "\n";
  rr.text = text.str();
  return rr;
}

njson family_json(const Rank1Family& f, const std::vector<std::string>& gens) {
  njson o;
  njson act = njson::object();
  for (size_t i = 0; i < f.action.act.size(); ++i)
    act[gens[i]] = f.action.act[i].render();
  o["action"] = std::move(act);
  njson free = njson::array();
  for (const Sym& s : f.module_params) free.push_back(s.text());
  o["free_parameters"] = std::move(free);
  o["trivial"] = f.trivial;
  o["note"] = f.note;
  return o;
}

RunResult do_modules(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  LcaPresentation a = presentation_at(doc, opt);
  std::ostringstream text;
  njson entries = njson::array();
  auto entry = [&](const Rank1Classification& c) {
    njson e;
    e["point"] = point_json(c.point);
    njson fams = njson::array();
    for (const Rank1Family& f : c.families) fams.push_back(family_json(f, doc.gens));
    e["families"] = std::move(fams);
    e["genericity"] = genericity_json(c.genericity);
    e["ym_compatibility_vacuous"] = c.h_branch_vacuous;
    entries.push_back(std::move(e));
    text << "[" << point_text(c.point) << "] " << c.families.size()
         << " families";
    for (const Rank1Family& f : c.families)
      if (!f.trivial) {
        text << ";";
        for (size_t i = 0; i < f.action.act.size(); ++i)
          text << " " << doc.gens[i] << "->"
               << (f.action.act[i].is_zero() ? "0" : f.action.act[i].render());
      }
    text << "\n";
  };
  if (opt.survey && !a.params.empty() && opt.at.empty())
    for (const Rank1Classification& c : survey_rank1(a, opt.rank1_deg)) entry(c);
  else
    entry(classify_rank1(a, opt.rank1_deg));
  rr.json["deg"] = opt.rank1_deg;
  rr.json["entries"] = std::move(entries);
  rr.text = text.str();
  return rr;
}

RunResult do_gd(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  std::ostringstream text;
  bool ok = true;
  if (doc.has_gd_block) {
    GdBialgebra g = opt.at.empty() ? doc.bialgebra : specialized(doc.bialgebra, opt.at);
    VerifyReport axioms = check_gd(g);
    rr.json["axioms"] = checks_json(axioms);
    ok = axioms.ok();
    text << axioms.summary() << "\n";
    if (axioms.ok()) {
      LcaPresentation q = to_quadratic(g);
      njson tbl = njson::object();
      for (int i = 0; i < q.rank; ++i)
        for (int j = 0; j < q.rank; ++j) {
          std::string key = "[" + doc.gens[static_cast<size_t>(i)] + "_l " +
                            doc.gens[static_cast<size_t>(j)] + "]";
          std::string val;
          for (int k = 0; k < q.rank; ++k)
            if (!q.entry(i, j, k).is_zero()) {
              if (!val.empty()) val += "+";
              val += "(" + q.entry(i, j, k).render() + ")*" +
                     doc.gens[static_cast<size_t>(k)];
            }
          if (!val.empty()) tbl[key] = val;
        }
      rr.json["quadratic_bracket"] = std::move(tbl);
      if (doc.has_bracket_block) {
        LcaPresentation a = presentation_at(doc, opt);
        bool match = q.table_equal(a);
        rr.json["matches_declared_brackets"] = match;
        ok = ok && match;
        text << "quadratic bracket "
             << (match ? "matches" : "DOES NOT match") << " the declared table\n";
      }
    }
  } else if (doc.has_bracket_block) {
    FromQuadratic fq = from_quadratic(presentation_at(doc, opt));
    rr.json["quadratic"] = fq.ok;
    if (fq.ok) {
      njson circ = njson::object(), lie = njson::object();
      const GdBialgebra& g = fq.bialgebra;
      for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
          std::string key = "(" + doc.gens[static_cast<size_t>(i)] + "," +
                            doc.gens[static_cast<size_t>(j)] + ")";
          std::string c, l;
          for (int k = 0; k < g.dim; ++k) {
            if (!g.circ_at(i, j, k).is_zero())
              c += (c.empty() ? "" : "+") + ("(" + g.circ_at(i, j, k).render() +
                                             ")*" + doc.gens[static_cast<size_t>(k)]);
            if (!g.lie_at(i, j, k).is_zero())
              l += (l.empty() ? "" : "+") + ("(" + g.lie_at(i, j, k).render() +
                                             ")*" + doc.gens[static_cast<size_t>(k)]);
          }
          if (!c.empty()) circ[key] = c;
          if (!l.empty()) lie[key] = l;
        }
      rr.json["novikov"] = std::move(circ);
      rr.json["lie"] = std::move(lie);
      text << "presentation is quadratic; Gel'fand-Dorfman data recovered\n";
    } else {
      rr.json["error"] = fq.error;
      text << "not a quadratic presentation: " << fq.error << "\n";
      ok = false;
    }
  } else {
    throw std::invalid_argument("gd: document has neither product nor bracket clauses");
  }
  rr.json["ok"] = ok;
  rr.exit_code = ok ? 0 : 1;
  rr.text = text.str();
  return rr;
}

RunResult do_solve(const AlgebraDoc& doc, const RunOptions& opt) {
  RunResult rr;
  std::vector<Sym> unknowns;
  for (const std::string& u : opt.unknowns) {
    Sym s = Sym::param(u);
    bool known = false;
    for (const Sym& p : doc.params) known = known || p == s;
    if (!known)
      throw std::invalid_argument("solve: unknown parameter '" + u + "'");
    unknowns.push_back(s);
  }
  ConstraintSolution sol = solve_parameter_constraints(doc.presentation, unknowns);
  std::ostringstream text;
  if (!sol.consistent) {
    rr.json["consistent"] = false;
    rr.json["rejection"] = sol.rejection;
    rr.exit_code = 1;
    text << "rejected: " << sol.rejection << "\n";
  } else {
    rr.json["consistent"] = true;
    njson solved = njson::object();
    for (const auto& [u, e] : sol.solved) solved[u.text()] = e.render();
    rr.json["solved"] = std::move(solved);
    njson free = njson::array();
    for (const Sym& f : sol.free_unknowns) free.push_back(f.text());
    rr.json["free"] = std::move(free);
    rr.json["genericity"] = genericity_json(sol.genericity);
    for (const auto& [u, e] : sol.solved)
      text << u.text() << " = " << e.render() << "\n";
    text << "free:";
    for (const Sym& f : sol.free_unknowns) text << " " << f.text();
    text << "\n";
  }
  rr.text = text.str();
  return rr;
}

}  // namespace

std::map<Sym, Rat> parse_at(const AlgebraDoc& doc, const std::string& spec) {
  std::map<Sym, Rat> out;
  if (spec.empty()) return out;
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--at expects name=value, got '" + item + "'");
    std::string name = item.substr(0, eq);
    Sym s = Sym::param(name);
    bool known = false;
    for (const Sym& p : doc.params) known = known || p == s;
    if (!known) throw std::invalid_argument("--at: unknown parameter '" + name + "'");
    out[s] = rat_from_string(item.substr(eq + 1));
  }
  return out;
}

RunResult run_command(const AlgebraDoc& doc, const std::string& command,
                      const RunOptions& opt) {
  RunResult rr;
  if (command == "check") {
    rr = do_check(doc, opt);
  } else if (command == "h2") {
    rr = do_h2(doc, opt);
  } else if (command == "cder") {
    rr = do_cder(doc, opt);
  } else if (command == "coeff") {
    rr = do_coeff(doc, opt);
  } else if (command == "modules") {
    rr = do_modules(doc, opt);
  } else if (command == "gd") {
    rr = do_gd(doc, opt);
  } else if (command == "solve") {
    rr = do_solve(doc, opt);
  } else if (command == "report") {
    njson full;
    std::ostringstream text;
    int code = 0;
    auto add = [&](const std::string& name, RunResult sub) {
      full[name] = std::move(sub.json);
      text << "== " << name << " ==\n" << sub.text;
      code = std::max(code, sub.exit_code);
    };
    if (doc.has_bracket_block || doc.has_gd_block) add("check", do_check(doc, opt));
    if (doc.has_bracket_block) {
      add("h2", do_h2(doc, opt));
      add("cder", do_cder(doc, opt));
      add("coeff", do_coeff(doc, opt));
      try {
        add("modules", do_modules(doc, opt));
      } catch (const std::invalid_argument& e) {
        full["modules"] = njson{{"skipped", e.what()}};
        text << "== modules ==\nskipped: " << e.what() << "\n";
      }
    }
    if (doc.has_gd_block) {
      add("gd", do_gd(doc, opt));
    } else if (doc.has_bracket_block) {
      // Recovery of GD data from a bracket-only document is informational
      // here: a non-quadratic table is a finding, not a failed check.
      RunResult sub = do_gd(doc, opt);
      full["gd"] = std::move(sub.json);
      text << "== gd ==\n" << sub.text;
    }
    rr.json = std::move(full);
    rr.text = text.str();
    rr.exit_code = code;
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  njson wrapped;
  wrapped["algebra"] = doc.name;
  wrapped["command"] = command;
  wrapped["parameters"] = point_json(opt.at);
  wrapped["results"] = std::move(rr.json);
  rr.json = std::move(wrapped);
  return rr;
}

RunResult run_jobs(const AlgebraDoc& doc, const RunOptions& base) {
  RunResult rr;
  njson jobs = njson::array();
  std::ostringstream text;
  for (const JobDirective& jd : doc.jobs) {
    RunOptions opt = base;
    // Positional job arguments: `job h2 D;`, `job cder A B;`,
    // `job coeff W;`, `job modules G;`, `job solve u1 u2 ...;`.
    if (jd.command == "h2" && !jd.args.empty()) opt.h2_deg = std::stoi(jd.args[0]);
    if (jd.command == "modules" && !jd.args.empty())
      opt.rank1_deg = std::stoi(jd.args[0]);
    if (jd.command == "coeff" && !jd.args.empty())
      opt.coeff_window = std::stoi(jd.args[0]);
    if (jd.command == "cder" && jd.args.size() >= 2) {
      opt.cder_deg_l = std::stoi(jd.args[0]);
      opt.cder_deg_d = std::stoi(jd.args[1]);
    }
    if (jd.command == "solve")
      opt.unknowns.assign(jd.args.begin(), jd.args.end());
    RunResult sub = run_command(doc, jd.command, opt);
    jobs.push_back(std::move(sub.json));
    text << "== job " << jd.command << " ==\n" << sub.text;
    rr.exit_code = std::max(rr.exit_code, sub.exit_code);
  }
  rr.json["algebra"] = doc.name;
  rr.json["command"] = "run";
  rr.json["jobs"] = std::move(jobs);
  rr.text = text.str();
  return rr;
}

}  // namespace cwb

#include "superpv/runner.hpp"

#include <future>
#include <sstream>

#include <json.hpp>

#include "superpv/boson.hpp"
#include "superpv/doublering.hpp"
#include "superpv/dual.hpp"
#include "superpv/errors.hpp"
#include "superpv/expr_io.hpp"
#include "superpv/pvring.hpp"
#include "superpv/reduction.hpp"
#include "superpv/solver.hpp"
#include "superpv/wronskian.hpp"

namespace superpv {

using nlohmann::json;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hashHex(const std::string& s) {
  std::ostringstream out;
  out << std::hex << fnv1a(s);
  return out.str();
}

namespace {

constexpr uint64_t kCheckSeed = 0x5eed5eedull;
constexpr int kCheckSamples = 200;

json checkJson(const CheckReport& r) {
  json j;
  j["pass"] = r.pass;
  if (!r.pass) j["detail"] = r.detail;
  return j;
}

// Detects the built-in solver family on the config's own structures.
SeriesModel modelFromConfig(const ProblemConfig& cfg) {
  if (cfg.ring->bodyVarCount() != 1)
    throw ValidationError("solve: the model needs exactly one body variable");
  SeriesModel model;
  model.ring = cfg.ring;
  model.lie = cfg.lie;
  model.action = cfg.action;
  model.tVar = 0;
  int evenCount = 0, oddCount = 0;
  int del = -1, delta = -1;
  for (int g = 0; g < cfg.lie->genCount(); ++g) {
    if (cfg.lie->parity(g) == Parity::Even) {
      ++evenCount;
      del = g;
    } else {
      ++oddCount;
      delta = g;
    }
  }
  if (evenCount != 1 || oddCount > 1)
    throw ValidationError("solve: the model family has one even and at most one odd generator");
  model.delGen = del;
  model.deltaGen = oddCount == 1 ? delta : -1;
  if (cfg.action->onBodyVar(del, 0) != SuperElem::one(cfg.ring))
    throw ValidationError("solve: the even generator must act as d/dt");
  if (model.deltaGen >= 0) {
    GenCombo br = cfg.lie->bracket(delta, delta);
    GenCombo want{{del, Rat(2)}};
    if (br != want)
      throw ValidationError("solve: expected [delta,delta] = 2*del");
    if (cfg.ring->oddSlotCount() < 1)
      throw ValidationError("solve: delta model needs an odd ring generator");
    int th1 = cfg.ring->genOfOddSlot(0);
    if (cfg.action->onBodyVar(delta, 0) != SuperElem::generator(cfg.ring, th1) ||
        cfg.action->onGen(delta, th1) != SuperElem::one(cfg.ring))
      throw ValidationError("solve: delta must act by delta t = th1, delta th1 = 1");
  }
  if (!cfg.module) throw ValidationError("solve: config has no module");
  return model;
}

std::string matrixJsonStr(const SuperMatrix& x) { return x.str(); }

TaskRecord runOneTask(const ProblemConfig& cfg, const TaskSpec& task, int index,
                      const RunOptions& opts, const std::string& configText) {
  TaskRecord rec;
  rec.index = index;
  rec.task = task.name;
  {
    std::ostringstream key;
    key << configText << "#" << index << ":" << task.name;
    for (auto& [k, v] : task.params) key << " " << k << "=" << v;
    for (auto& e : task.elements) key << " " << e;
    rec.inputsHash = hashHex(key.str());
  }
  json witness;
  try {
    if (task.name == "check") {
      json parts;
      CheckReport lieRep = checkLieSpec(*cfg.lie);
      parts["lie_spec"] = checkJson(lieRep);
      CheckReport leib = checkSuperLeibniz(*cfg.action, kCheckSamples, kCheckSeed);
      parts["super_leibniz"] = checkJson(leib);
      CheckReport brk = checkBracketCompat(*cfg.action, *cfg.lie);
      parts["bracket_compat"] = checkJson(brk);
      bool all = lieRep.pass && leib.pass && brk.pass;
      if (cfg.module) {
        CheckReport mc = checkModuleConsistency(*cfg.module, *cfg.action);
        parts["module_consistency"] = checkJson(mc);
        all = all && mc.pass;
      }
      rec.pass = all;
      witness = parts;
    } else if (task.name == "solve") {
      int order = opts.solveOrderOverride > 0 ? opts.solveOrderOverride
                                              : task.intParam("order", 8);
      SeriesModel model = modelFromConfig(cfg);
      SeriesSolution sol = seriesSolve(*cfg.module, model, order);
      CheckReport res = seriesResidualCheck(*cfg.module, model, sol.X, order);
      SplittingReport srep = splittingReport(*cfg.module, model, order);
      witness["order"] = order;
      witness["solution"] = matrixJsonStr(sol.X) + " mod t^" + std::to_string(order);
      witness["residuals"] = checkJson(res);
      witness["count_even"] = srep.evenCount;
      witness["count_odd"] = srep.oddCount;
      witness["full_count"] = srep.fullCount;
      witness["body_consistent"] = checkJson(srep.bodyConsistent);
      rec.pass = res.pass && srep.fullCount && srep.bodyConsistent.pass;
    } else if (task.name == "pvring") {
      if (!cfg.module) throw ValidationError("pvring: config has no module");
      PVRing pv = buildPvRing(*cfg.module, *cfg.action);
      CheckReport leib = checkSuperLeibniz(*pv.action, kCheckSamples / 2, kCheckSeed);
      CheckReport brk = checkBracketCompat(*pv.action, *cfg.lie);
      witness["super_leibniz"] = checkJson(leib);
      witness["bracket_compat"] = checkJson(brk);
      witness["grid"] = matrixJsonStr(pv.gridMatrix());
      rec.pass = leib.pass && brk.pass;
    } else if (task.name == "zw") {
      if (!cfg.module) throw ValidationError("zw: config has no module");
      ZWReport rep = zwCheck(*cfg.module, *cfg.action);
      witness["invariance"] = checkJson(rep.invariance);
      witness["inverses"] = checkJson(rep.inverses);
      witness["antipode_flip"] = checkJson(rep.antipode);
      rec.pass = rep.invariance.pass && rep.inverses.pass && rep.antipode.pass;
    } else if (task.name == "hopf") {
      if (!cfg.module) throw ValidationError("hopf: config has no module");
      ZWReport rep = hopfDataCheck(*cfg.module, *cfg.action);
      witness["invariance"] = checkJson(rep.invariance);
      witness["inverses"] = checkJson(rep.inverses);
      witness["antipode_flip"] = checkJson(rep.antipode);
      witness["comatrix"] = checkJson(rep.comatrix);
      witness["coaction"] = checkJson(rep.coaction);
      rec.pass = rep.pass();
    } else if (task.name == "wronskian") {
      int bound = task.intParam("bound", 2);
      std::vector<SuperElem> elements;
      for (auto& e : task.elements) elements.push_back(parseElement(e, cfg.ring));
      WronskianCertificate cert =
          wronskianSearch(elements, task.evenCount, *cfg.action, bound);
      witness["bound"] = bound;
      if (cert.found) {
        json words = json::array();
        for (auto& w : cert.words) {
          std::string s = "1";
          for (size_t i = 0; i < w.size(); ++i)
            s = (i ? s + "*" : std::string()) + cfg.lie->gen(w[i]).name;
          words.push_back(s);
        }
        witness["words"] = words;
        witness["matrix"] = matrixJsonStr(cert.matrix);
      } else {
        witness["result"] = "not_found";
      }
      rec.pass = cert.found;
    } else if (task.name == "dualize") {
      if (!cfg.module) throw ValidationError("dualize: config has no module");
      Side side = task.strParam("side", "left") == "right" ? Side::Right : Side::Left;
      DModule dual = dualStructure(*cfg.module, *cfg.action, side);
      json mats;
      for (int d = 0; d < cfg.lie->genCount(); ++d)
        mats[cfg.lie->gen(d).name] = matrixJsonStr(dual.F(d));
      witness["dual"] = mats;
      rec.pass = true;
    } else if (task.name == "bosonize-verify") {
      int bound = task.intParam("bound", 3);
      CheckReport co = checkCoassociativity(cfg.lie, bound);
      CheckReport anti = checkAntipodeIdentities(cfg.lie, bound);
      CheckReport alg = checkAntipodeAlgebra(cfg.lie, bound);
      witness["coassociativity"] = checkJson(co);
      witness["antipode_identities"] = checkJson(anti);
      witness["antipode_algebra"] = checkJson(alg);
      rec.pass = co.pass && anti.pass && alg.pass;
    } else if (task.name == "reduce") {
      if (!cfg.module) throw ValidationError("reduce: config has no module");
      EvenReduction red = evenReduction(*cfg.module, *cfg.action);
      json mats;
      for (size_t e = 0; e < red.matrices.size(); ++e)
        mats[red.evenLie->gen(static_cast<int>(e)).name] = matrixJsonStr(red.matrices[e]);
      witness["reduced"] = mats;
      rec.pass = true;
    } else {
      throw ValidationError("unknown task '" + task.name + "'");
    }
  } catch (const ParseError& e) {
    rec.pass = false;
    witness = json{{"error", std::string("parse: ") + e.what()}};
  } catch (const std::exception& e) {
    rec.pass = false;
    witness = json{{"error", e.what()}};
  }
  rec.witness = witness.dump();
  return rec;
}

}  // namespace

RunResult runConfig(const ProblemConfig& cfg, const RunOptions& opts) {
  RunResult out;
  std::string configText = cfg.serialize();
  std::vector<const TaskSpec*> selected;
  std::vector<int> indices;
  TaskSpec implicitCheck;
  implicitCheck.name = "check";
  if (opts.checksOnly) {
    selected.push_back(&implicitCheck);
    indices.push_back(0);
  } else {
    for (size_t i = 0; i < cfg.tasks.size(); ++i) {
      selected.push_back(&cfg.tasks[i]);
      indices.push_back(static_cast<int>(i));
    }
  }

  out.records.resize(selected.size());
  if (opts.parallel && selected.size() > 1) {
    std::vector<std::future<TaskRecord>> futs;
    for (size_t i = 0; i < selected.size(); ++i)
      futs.push_back(std::async(std::launch::async, [&, i] {
        return runOneTask(cfg, *selected[i], indices[i], opts, configText);
      }));
    for (size_t i = 0; i < selected.size(); ++i) out.records[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < selected.size(); ++i)
      out.records[i] = runOneTask(cfg, *selected[i], indices[i], opts, configText);
  }
  bool all = true;
  for (auto& r : out.records) all = all && r.pass;
  out.exitCode = all ? 0 : 1;
  return out;
}

std::string emitReport(const std::vector<TaskRecord>& records) {
  std::ostringstream out;
  for (auto& r : records) {
    json j;
    j["inputs_hash"] = r.inputsHash;
    j["task"] = r.task;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["witness"] = json::parse(r.witness);
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace superpv

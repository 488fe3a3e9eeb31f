#include "superpv/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "superpv/errors.hpp"
#include "superpv/expr_io.hpp"

namespace superpv {

namespace {

const std::set<std::string> kSectionKeywords = {"ring", "lie", "action", "module", "task"};
const std::set<std::string> kRingKeywords = {"body", "odd", "even"};
const std::set<std::string> kTaskNames = {"check",     "solve", "pvring",
                                          "zw",        "hopf",  "wronskian",
                                          "dualize",   "reduce", "bosonize-verify"};

bool isSym(const Token& t, const char* s) { return t.kind == Token::Sym && t.text == s; }

void expectSym(Lexer& lex, const char* s) {
  if (!isSym(lex.peek(), s)) lex.fail(std::string("expected '") + s + "'");
  lex.next();
}

std::string expectName(Lexer& lex, const char* what) {
  if (lex.peek().kind != Token::Name) lex.fail(std::string("expected ") + what);
  return lex.next().text;
}

int expectInt(Lexer& lex, const char* what) {
  if (lex.peek().kind != Token::Int) lex.fail(std::string("expected ") + what);
  return std::stoi(lex.next().text);
}

Rat parseRat(Lexer& lex) {
  bool neg = false;
  while (isSym(lex.peek(), "-") || isSym(lex.peek(), "+")) neg ^= lex.next().text == "-";
  if (lex.peek().kind != Token::Int) lex.fail("expected a rational coefficient");
  mpz_class num(lex.next().text);
  mpz_class den(1);
  if (isSym(lex.peek(), "/")) {
    lex.next();
    if (lex.peek().kind != Token::Int) lex.fail("expected a denominator");
    den = mpz_class(lex.next().text);
  }
  Rat r(num, den);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

// Linear combination of Lie generators: [-] [r '*'] name (('+'|'-') ...)*
GenCombo parseGenCombo(Lexer& lex, const LieSpec& lie) {
  GenCombo combo;
  bool first = true;
  for (;;) {
    Rat sign(1);
    if (isSym(lex.peek(), "-")) {
      lex.next();
      sign = -1;
    } else if (isSym(lex.peek(), "+")) {
      lex.next();
    } else if (!first) {
      break;
    }
    Rat coeff(1);
    if (lex.peek().kind == Token::Int) {
      coeff = parseRat(lex);
      if (isSym(lex.peek(), "*")) lex.next();
    }
    if (lex.peek().kind == Token::Name) {
      auto g = lie.findGen(lex.peek().text);
      if (!g) throw ValidationError("undeclared Lie generator '" + lex.peek().text + "'");
      lex.next();
      combo[*g] += sign * coeff;
      if (is_zero(combo[*g])) combo.erase(*g);
    } else if (!is_zero(coeff)) {
      lex.fail("expected a Lie generator name");
    }
    first = false;
  }
  return combo;
}

SuperMatrix parseMatrixRows(Lexer& lex, const RingPtr& ring, int m, int n) {
  SuperMatrix x(ring, m, n);
  expectSym(lex, "[");
  for (int i = 0; i < x.dim(); ++i) {
    if (i) expectSym(lex, ",");
    expectSym(lex, "[");
    for (int j = 0; j < x.dim(); ++j) {
      if (j) expectSym(lex, ",");
      x.at(i, j) = parseElementFromLexer(lex, ring);
    }
    expectSym(lex, "]");
  }
  expectSym(lex, "]");
  return x;
}

}  // namespace

int TaskSpec::intParam(const std::string& key, int fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : std::stoi(it->second);
}

std::string TaskSpec::strParam(const std::string& key, const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

ProblemConfig parseConfig(const std::string& text) {
  Lexer lex(text);
  ProblemConfig cfg;
  std::shared_ptr<RingSpec> ring;
  std::shared_ptr<LieSpec> lie;
  int modM = -1, modN = -1;
  std::vector<std::pair<std::string, SuperMatrix>> modEntries;

  while (!lex.atEnd()) {
    std::string section = expectName(lex, "a section (ring/lie/action/module/task)");
    if (section == "ring") {
      if (ring) throw ValidationError("duplicate ring section");
      expectSym(lex, "{");
      std::vector<std::string> body;
      std::vector<RingGen> gens;
      while (!isSym(lex.peek(), "}")) {
        std::string kw = expectName(lex, "body/odd/even");
        if (!kRingKeywords.count(kw)) lex.fail("expected body/odd/even");
        while (lex.peek().kind == Token::Name && !kRingKeywords.count(lex.peek().text)) {
          std::string name = lex.next().text;
          if (kw == "body")
            body.push_back(name);
          else
            gens.push_back({name, kw == "odd" ? Parity::Odd : Parity::Even});
        }
      }
      lex.next();  // }
      ring = std::make_shared<RingSpec>(std::move(body), std::move(gens));
      cfg.ring = ring;
    } else if (section == "lie") {
      if (lie) throw ValidationError("duplicate lie section");
      expectSym(lex, "{");
      std::vector<LieGen> gens;
      std::vector<std::tuple<std::string, std::string, std::string>> brackets;
      // First pass collects generators; brackets are parsed against them, so
      // gather raw bracket text spans.
      while (!isSym(lex.peek(), "}")) {
        std::string kw = expectName(lex, "gen/bracket");
        if (kw == "gen") {
          std::string name = expectName(lex, "a generator name");
          std::string par = expectName(lex, "even/odd");
          if (par != "even" && par != "odd") lex.fail("expected even/odd");
          gens.push_back({name, par == "odd" ? Parity::Odd : Parity::Even});
        } else if (kw == "bracket") {
          if (gens.empty()) lex.fail("brackets must follow generator declarations");
          if (!lie) lie = std::make_shared<LieSpec>(gens);
          expectSym(lex, "[");
          std::string a = expectName(lex, "a generator name");
          expectSym(lex, ",");
          std::string b = expectName(lex, "a generator name");
          expectSym(lex, "]");
          expectSym(lex, "=");
          auto ga = lie->findGen(a), gb = lie->findGen(b);
          if (!ga || !gb)
            throw ValidationError("undeclared Lie generator in bracket [" + a + "," + b + "]");
          lie->setBracket(*ga, *gb, parseGenCombo(lex, *lie));
        } else {
          lex.fail("expected gen/bracket");
        }
      }
      lex.next();  // }
      if (!lie) lie = std::make_shared<LieSpec>(gens);
      cfg.lie = lie;
    } else if (section == "action") {
      if (!ring || !lie) throw ValidationError("action section requires ring and lie");
      if (cfg.action) throw ValidationError("duplicate action section");
      cfg.action = std::make_shared<DAction>(cfg.lie, cfg.ring);
      expectSym(lex, "{");
      while (!isSym(lex.peek(), "}")) {
        std::string dname = expectName(lex, "a Lie generator name");
        auto d = lie->findGen(dname);
        if (!d) throw ValidationError("undeclared Lie generator '" + dname + "'");
        expectSym(lex, ":");
        std::string target = expectName(lex, "a ring generator or body variable");
        expectSym(lex, "-");
        expectSym(lex, ">");
        SuperElem value = parseElementFromLexer(lex, cfg.ring);
        if (auto v = ring->findBodyVar(target))
          cfg.action->setOnBodyVar(*d, *v, value);
        else if (auto g = ring->findGen(target))
          cfg.action->setOnGen(*d, *g, value);
        else
          throw ValidationError("undeclared action target '" + target + "'");
      }
      lex.next();  // }
    } else if (section == "module") {
      if (!ring || !lie) throw ValidationError("module section requires ring and lie");
      expectSym(lex, "{");
      while (!isSym(lex.peek(), "}")) {
        std::string kw = expectName(lex, "format/F");
        if (kw == "format") {
          modM = expectInt(lex, "m");
          expectSym(lex, "|");
          modN = expectInt(lex, "n");
        } else if (kw == "F") {
          if (modM < 0) lex.fail("format must precede F entries");
          std::string dname = expectName(lex, "a Lie generator name");
          expectSym(lex, "=");
          modEntries.emplace_back(dname, parseMatrixRows(lex, cfg.ring, modM, modN));
        } else {
          lex.fail("expected format/F");
        }
      }
      lex.next();  // }
    } else if (section == "task") {
      TaskSpec task;
      task.name = expectName(lex, "a task name");
      if (!kTaskNames.count(task.name) && task.name == "bosonize") {
        // allow `bosonize-verify` split by the lexer at '-'
        if (isSym(lex.peek(), "-")) {
          lex.next();
          std::string tail = expectName(lex, "verify");
          task.name = "bosonize-" + tail;
        }
      }
      if (!kTaskNames.count(task.name))
        throw ValidationError("unknown task '" + task.name + "'");
      while (lex.peek().kind == Token::Name) {
        std::string key = lex.next().text;
        expectSym(lex, "=");
        if (isSym(lex.peek(), "[")) {
          if (key != "elements") lex.fail("only elements takes a list value");
          lex.next();
          bool sawBar = false;
          if (isSym(lex.peek(), "|")) {  // all-odd list
            lex.next();
            sawBar = true;
            task.evenCount = 0;
          }
          if (!isSym(lex.peek(), "]")) {
            for (;;) {
              task.elements.push_back(
                  elementToString(parseElementFromLexer(lex, cfg.ring)));
              if (!sawBar) task.evenCount = static_cast<int>(task.elements.size());
              if (isSym(lex.peek(), ",")) {
                lex.next();
                continue;
              }
              if (isSym(lex.peek(), "|")) {
                lex.next();
                if (sawBar) lex.fail("only one '|' divider allowed");
                sawBar = true;
                task.evenCount = static_cast<int>(task.elements.size());
                continue;
              }
              break;
            }
          }
          expectSym(lex, "]");
          task.params[key] = "";  // presence marker for serialization order
        } else if (lex.peek().kind == Token::Int) {
          task.params[key] = lex.next().text;
        } else {
          task.params[key] = expectName(lex, "a parameter value");
        }
      }
      cfg.tasks.push_back(std::move(task));
    } else {
      lex.fail("unknown section '" + section + "'");
    }
  }

  if (!cfg.ring) throw ValidationError("missing ring section");
  if (!cfg.lie) throw ValidationError("missing lie section");
  if (!cfg.action) {
    if (!cfg.ring || !cfg.lie) throw ValidationError("missing action section");
    cfg.action = std::make_shared<DAction>(cfg.lie, cfg.ring);
  }
  if (modM >= 0) {
    std::vector<SuperMatrix> F(cfg.lie->genCount(),
                               SuperMatrix(cfg.ring, modM, modN));
    for (auto& [dname, mat] : modEntries) {
      auto d = cfg.lie->findGen(dname);
      if (!d) throw ValidationError("undeclared Lie generator '" + dname + "' in module");
      F[*d] = mat;
    }
    cfg.module.emplace(cfg.lie, cfg.ring, modM, modN, std::move(F));
  }
  return cfg;
}

ProblemConfig parseConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseConfig(ss.str());
}

std::string ProblemConfig::serialize() const {
  std::ostringstream out;
  out << "ring {\n";
  if (ring->bodyVarCount() > 0) {
    out << "  body";
    for (auto& v : ring->bodyVars()) out << " " << v;
    out << "\n";
  }
  std::string odd, even;
  for (auto& g : ring->gens())
    (g.parity == Parity::Odd ? odd : even) += " " + g.name;
  if (!odd.empty()) out << "  odd" << odd << "\n";
  if (!even.empty()) out << "  even" << even << "\n";
  out << "}\n\nlie {\n";
  for (int g = 0; g < lie->genCount(); ++g)
    out << "  gen " << lie->gen(g).name << " " << to_string(lie->parity(g)) << "\n";
  for (auto& [pair, combo] : lie->declaredBrackets()) {
    out << "  bracket [" << lie->gen(pair.first).name << ", "
        << lie->gen(pair.second).name << "] =";
    if (combo.empty()) out << " 0";
    bool first = true;
    for (auto& [g, c] : combo) {
      std::string cs = to_string(abs(c));
      out << (sgn(c) < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
      if (abs(c) != 1) out << cs << "*";
      out << lie->gen(g).name;
      first = false;
    }
    out << "\n";
  }
  out << "}\n\naction {\n";
  for (int d = 0; d < lie->genCount(); ++d) {
    for (int v = 0; v < ring->bodyVarCount(); ++v)
      if (!action->onBodyVar(d, v).isZero())
        out << "  " << lie->gen(d).name << " : " << ring->bodyVars()[v] << " -> "
            << action->onBodyVar(d, v).str() << "\n";
    for (int g = 0; g < ring->genCount(); ++g)
      if (!action->onGen(d, g).isZero())
        out << "  " << lie->gen(d).name << " : " << ring->gen(g).name << " -> "
            << action->onGen(d, g).str() << "\n";
  }
  out << "}\n";
  if (module) {
    out << "\nmodule {\n  format " << module->m() << "|" << module->n() << "\n";
    for (int d = 0; d < lie->genCount(); ++d) {
      out << "  F " << lie->gen(d).name << " = [";
      for (int i = 0; i < module->F(d).dim(); ++i) {
        if (i) out << ", ";
        out << "[";
        for (int j = 0; j < module->F(d).dim(); ++j) {
          if (j) out << ", ";
          out << module->F(d).at(i, j).str();
        }
        out << "]";
      }
      out << "]\n";
    }
    out << "}\n";
  }
  if (!tasks.empty()) out << "\n";
  for (auto& t : tasks) {
    out << "task " << t.name;
    for (auto& [k, v] : t.params) {
      if (k == "elements") continue;
      out << " " << k << "=" << v;
    }
    if (!t.elements.empty()) {
      out << " elements=[";
      for (size_t i = 0; i < t.elements.size(); ++i) {
        if (i == 0) {
          if (t.evenCount == 0) out << "| ";
        } else {
          out << (static_cast<int>(i) == t.evenCount ? " | " : ", ");
        }
        out << t.elements[i];
      }
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace superpv

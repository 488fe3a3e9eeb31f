#include "superpv/lie.hpp"

#include <set>
#include <sstream>

#include "superpv/errors.hpp"

namespace superpv {

namespace {

void tidy(GenCombo& c) {
  for (auto it = c.begin(); it != c.end();) {
    if (is_zero(it->second))
      it = c.erase(it);
    else
      ++it;
  }
}

GenCombo scaledCombo(const GenCombo& c, const Rat& s) {
  GenCombo r;
  for (auto& [g, co] : c)
    if (!is_zero(co * s)) r[g] = co * s;
  return r;
}

void addCombo(GenCombo& acc, const GenCombo& c, const Rat& s) {
  for (auto& [g, co] : c) {
    acc[g] += co * s;
    if (is_zero(acc[g])) acc.erase(g);
  }
}

}  // namespace

LieSpec::LieSpec(std::vector<LieGen> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (auto& g : gens_)
    if (!seen.insert(g.name).second)
      throw ValidationError("duplicate Lie generator '" + g.name + "'");
}

std::optional<int> LieSpec::findGen(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

void LieSpec::setBracket(int i, int j, GenCombo combo) {
  if (i < 0 || j < 0 || i >= genCount() || j >= genCount())
    throw ValidationError("bracket index out of range");
  tidy(combo);
  declared_[{i, j}] = std::move(combo);
}

GenCombo LieSpec::bracket(int i, int j) const {
  auto it = declared_.find({i, j});
  if (it != declared_.end()) return it->second;
  auto op = declared_.find({j, i});
  if (op != declared_.end()) {
    // [x,y] = -(-1)^{|x||y|} [y,x]
    Rat s = (parity(i) == Parity::Odd && parity(j) == Parity::Odd) ? Rat(1) : Rat(-1);
    return scaledCombo(op->second, s);
  }
  return {};
}

CheckReport checkLieSpec(const LieSpec& spec) {
  auto comboStr = [&](const GenCombo& c) {
    std::ostringstream out;
    if (c.empty()) return std::string("0");
    bool first = true;
    for (auto& [g, co] : c) {
      if (!first) out << " + ";
      out << to_string(co) << "*" << spec.gen(g).name;
      first = false;
    }
    return out.str();
  };

  // Bracket parity: every term of [x,y] must have parity |x|+|y|.
  for (auto& [pair, combo] : spec.declaredBrackets()) {
    Parity want = spec.parity(pair.first) + spec.parity(pair.second);
    for (auto& [g, co] : combo) {
      if (spec.parity(g) != want)
        return CheckReport::failed("bracket parity violated: [" +
                                   spec.gen(pair.first).name + "," +
                                   spec.gen(pair.second).name + "] contains " +
                                   spec.gen(g).name + " of parity " +
                                   to_string(spec.parity(g)));
    }
  }

  // Super-antisymmetry on declared pairs (the accessor enforces it for
  // undeclared opposites).
  for (auto& [pair, combo] : spec.declaredBrackets()) {
    auto [i, j] = pair;
    if (i == j && spec.parity(i) == Parity::Even && !combo.empty())
      return CheckReport::failed("antisymmetry violated: [" + spec.gen(i).name +
                                 "," + spec.gen(i).name + "] must vanish for an even generator");
    if (i == j) continue;
    if (!spec.declared(j, i)) continue;
    Rat s = (spec.parity(i) == Parity::Odd && spec.parity(j) == Parity::Odd) ? Rat(1)
                                                                             : Rat(-1);
    GenCombo expect = scaledCombo(spec.bracket(j, i), s);
    if (expect != spec.bracket(i, j))
      return CheckReport::failed("antisymmetry violated between [" +
                                 spec.gen(i).name + "," + spec.gen(j).name +
                                 "] and its opposite");
  }

  // Super Jacobi in derivation form: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]].
  auto bracketWithCombo = [&](int x, const GenCombo& c) {
    GenCombo acc;
    for (auto& [g, co] : c) addCombo(acc, spec.bracket(x, g), co);
    return acc;
  };
  auto comboBracketWith = [&](const GenCombo& c, int z) {
    GenCombo acc;
    for (auto& [g, co] : c) addCombo(acc, spec.bracket(g, z), co);
    return acc;
  };
  int N = spec.genCount();
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int z = 0; z < N; ++z) {
        GenCombo lhs = bracketWithCombo(x, spec.bracket(y, z));
        GenCombo rhs = comboBracketWith(spec.bracket(x, y), z);
        Rat s = (spec.parity(x) == Parity::Odd && spec.parity(y) == Parity::Odd)
                    ? Rat(-1)
                    : Rat(1);
        addCombo(rhs, bracketWithCombo(y, spec.bracket(x, z)), s);
        if (lhs != rhs)
          return CheckReport::failed(
              "super Jacobi violated on (" + spec.gen(x).name + "," +
              spec.gen(y).name + "," + spec.gen(z).name + "): lhs = " +
              comboStr(lhs) + ", rhs = " + comboStr(rhs));
      }
  return CheckReport::ok();
}

}  // namespace superpv

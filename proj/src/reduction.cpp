#include "superpv/reduction.hpp"

#include "superpv/errors.hpp"

namespace superpv {

EvenReduction evenReduction(const DModule& mod, const DAction& baseAction) {
  const LieSpec& lie = *mod.lie();
  EvenReduction red;
  std::vector<LieGen> evenGens;
  std::vector<int> evenIndexOfBase(lie.genCount(), -1);
  for (int g = 0; g < lie.genCount(); ++g) {
    if (lie.parity(g) != Parity::Even) continue;
    evenIndexOfBase[g] = static_cast<int>(evenGens.size());
    evenGens.push_back(lie.gen(g));
    red.baseGenOfEven.push_back(g);
  }
  auto evenLie = std::make_shared<LieSpec>(std::move(evenGens));
  // Brackets of even generators only involve even generators (parity).
  for (auto& [pair, combo] : lie.declaredBrackets()) {
    int i = evenIndexOfBase[pair.first], j = evenIndexOfBase[pair.second];
    if (i < 0 || j < 0) continue;
    GenCombo mapped;
    for (auto& [g, c] : combo) {
      if (evenIndexOfBase[g] < 0)
        throw ValidationError("even reduction: bracket of even generators leaves the even part");
      mapped[evenIndexOfBase[g]] = c;
    }
    evenLie->setBracket(i, j, std::move(mapped));
  }
  red.evenLie = evenLie;
  red.evenRing = makeEvenSubring(*mod.ring());

  red.action = std::make_shared<DAction>(red.evenLie, red.evenRing);
  for (size_t e = 0; e < red.baseGenOfEven.size(); ++e) {
    int g = red.baseGenOfEven[e];
    for (int v = 0; v < mod.ring()->bodyVarCount(); ++v)
      red.action->setOnBodyVar(static_cast<int>(e), v,
                               substituteOddZero(baseAction.onBodyVar(g, v), red.evenRing));
    for (int rg = 0; rg < mod.ring()->genCount(); ++rg) {
      if (mod.ring()->genParity(rg) != Parity::Even) continue;
      int target = *red.evenRing->findGen(mod.ring()->gen(rg).name);
      red.action->setOnGen(static_cast<int>(e), target,
                           substituteOddZero(baseAction.onGen(g, rg), red.evenRing));
    }
  }

  for (int g : red.baseGenOfEven) {
    SuperMatrix out(red.evenRing, mod.m(), mod.n());
    for (int i = 0; i < out.dim(); ++i)
      for (int j = 0; j < out.dim(); ++j)
        out.at(i, j) = substituteOddZero(mod.F(g).at(i, j), red.evenRing);
    red.matrices.push_back(std::move(out));
  }
  return red;
}

DModule reductionModule(const EvenReduction& red, int m, int n) {
  return DModule(red.evenLie, red.evenRing, m, n, red.matrices);
}

}  // namespace superpv

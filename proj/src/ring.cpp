#include "superpv/ring.hpp"

#include <set>

#include "superpv/errors.hpp"

namespace superpv {

RingSpec::RingSpec(std::vector<std::string> bodyVars, std::vector<RingGen> gens)
    : bodyVars_(std::move(bodyVars)), gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (auto& v : bodyVars_)
    if (!seen.insert(v).second)
      throw ValidationError("duplicate body variable '" + v + "'");
  for (auto& g : gens_)
    if (!seen.insert(g.name).second)
      throw ValidationError("duplicate generator '" + g.name + "'");
  slotOfGen_.resize(gens_.size());
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].parity == Parity::Odd) {
      slotOfGen_[i] = static_cast<int>(oddGenOfSlot_.size());
      oddGenOfSlot_.push_back(static_cast<int>(i));
    } else {
      slotOfGen_[i] = static_cast<int>(evenGenOfSlot_.size());
      evenGenOfSlot_.push_back(static_cast<int>(i));
    }
  }
  if (oddGenOfSlot_.size() > 64)
    throw ValidationError("at most 64 odd generators are supported");
}

std::optional<int> RingSpec::findGen(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> RingSpec::findBodyVar(const std::string& name) const {
  for (size_t i = 0; i < bodyVars_.size(); ++i)
    if (bodyVars_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> RingSpec::findDen(const std::string& name) const {
  for (size_t i = 0; i < dens_.size(); ++i)
    if (dens_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

RingPtr makeEvenSubring(const RingSpec& ring) {
  std::vector<RingGen> gens;
  for (auto& g : ring.gens())
    if (g.parity == Parity::Even) gens.push_back(g);
  auto even = std::make_shared<RingSpec>(ring.bodyVars(), std::move(gens));
  for (auto& den : ring.dens()) {
    TermMap t;
    for (auto& [k, c] : den.terms) {
      TermKey nk;
      nk.exp.assign(even->evenSlotCount(), 0);
      for (int s = 0; s < ring.evenSlotCount(); ++s) {
        if (k.exp[s] == 0) continue;
        nk.exp[even->slotOfGen(*even->findGen(ring.gen(ring.genOfEvenSlot(s)).name))] =
            k.exp[s];
      }
      t[nk] = c;
    }
    even->addDenominator(den.name, std::move(t));
  }
  return even;
}

void RingSpec::addDenominator(std::string name, TermMap terms) {
  if (findGen(name) || findBodyVar(name) || findDen(name))
    throw ValidationError("denominator name '" + name + "' already in use");
  if (terms.empty())
    throw ValidationError("denominator '" + name + "' is zero");
  for (auto& [key, c] : terms) {
    if (key.odd != 0)
      throw ValidationError("denominator '" + name + "' has odd content");
    if (static_cast<int>(key.exp.size()) != evenSlotCount())
      throw ValidationError("denominator '" + name + "' has a malformed term");
  }
  dens_.push_back({std::move(name), std::move(terms)});
}

}  // namespace superpv

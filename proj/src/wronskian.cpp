#include "superpv/wronskian.hpp"

#include "superpv/errors.hpp"

namespace superpv {

namespace {

// Next k-combination of indices in lexicographic order; false when exhausted.
bool nextCombination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> firstCombination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

WronskianCertificate wronskianSearch(const std::vector<SuperElem>& elements, int m,
                                     const DAction& action, int bound) {
  int total = static_cast<int>(elements.size());
  int n = total - m;
  if (m < 0 || n < 0 || total < 1)
    throw ValidationError("wronskian_search: need at least one element, even count in range");
  for (int j = 0; j < total; ++j) {
    Parity want = j < m ? Parity::Even : Parity::Odd;
    if (!elements[j].homogeneousOfParity(want))
      throw ValidationError(
          "wronskian_search: elements must be homogeneous and listed even-first");
  }

  std::vector<DWord::Mono> evenWords, oddWords;
  for (auto& w : enumeratePbwMonos(*action.lie(), bound)) {
    if (DWord::monoParity(*action.lie(), w) == Parity::Even)
      evenWords.push_back(w);
    else
      oddWords.push_back(w);
  }

  WronskianCertificate cert;
  cert.bound = bound;
  if (static_cast<int>(evenWords.size()) < m || static_cast<int>(oddWords.size()) < n)
    return cert;

  // Rows of candidates, cached: word index -> applied row.
  auto rowOf = [&](const DWord::Mono& w) {
    std::vector<SuperElem> row;
    row.reserve(total);
    for (auto& a : elements) row.push_back(action.applySequence(w, a));
    return row;
  };
  std::map<DWord::Mono, std::vector<SuperElem>> cache;
  auto cachedRow = [&](const DWord::Mono& w) -> const std::vector<SuperElem>& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, rowOf(w)).first;
    return it->second;
  };

  std::vector<int> ec = firstCombination(m);
  do {
    std::vector<int> oc = firstCombination(n);
    do {
      SuperMatrix X(elements.empty() ? action.ring() : elements[0].ring(), m, n);
      for (int i = 0; i < m; ++i) {
        auto& row = cachedRow(evenWords[ec[i]]);
        for (int j = 0; j < total; ++j) X.at(i, j) = row[j];
      }
      for (int i = 0; i < n; ++i) {
        auto& row = cachedRow(oddWords[oc[i]]);
        for (int j = 0; j < total; ++j) X.at(m + i, j) = row[j];
      }
      if (X.isGl()) {
        cert.found = true;
        for (int i = 0; i < m; ++i) cert.words.push_back(evenWords[ec[i]]);
        for (int i = 0; i < n; ++i) cert.words.push_back(oddWords[oc[i]]);
        cert.matrix = X;
        return cert;
      }
    } while (n > 0 && nextCombination(oc, static_cast<int>(oddWords.size())));
  } while (m > 0 && nextCombination(ec, static_cast<int>(evenWords.size())));
  return cert;
}

}  // namespace superpv

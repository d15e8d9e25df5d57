#include "schubert/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

void fill(const Partition& shape, std::vector<int>& remaining, Tableau& t,
          std::size_t row, std::size_t col, std::vector<Tableau>& out) {
  if (row == shape.size()) {
    out.push_back(t);
    return;
  }
  const std::size_t next_row = col + 1 == static_cast<std::size_t>(shape[row]) ? row + 1 : row;
  const std::size_t next_col = next_row == row ? col + 1 : 0;
  int lo = 1;
  if (col > 0) lo = std::max(lo, t.rows[row][col - 1]);
  if (row > 0 && static_cast<std::size_t>(shape[row - 1]) > col)
    lo = std::max(lo, t.rows[row - 1][col] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
    --remaining[static_cast<std::size_t>(v - 1)];
    t.rows[row][col] = v;
    fill(shape, remaining, t, next_row, next_col, out);
    ++remaining[static_cast<std::size_t>(v - 1)];
  }
}

} // namespace

std::vector<Tableau> ssyt(const Partition& shape, const std::vector<int>& content) {
  std::vector<Tableau> out;
  int boxes = 0;
  for (int c : content) boxes += c;
  if (boxes != weight(shape)) return out;
  Tableau t;
  t.shape = shape;
  for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> remaining = content;
  if (shape.empty()) {
    out.push_back(t);
    return out;
  }
  fill(shape, remaining, t, 0, 0, out);
  return out;
}

int charge(const Tableau& t) {
  // reading word: bottom row first, each row left to right
  std::vector<int> word;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());

  int maxletter = 0;
  for (int x : word) maxletter = std::max(maxletter, x);
  std::vector<int> count(static_cast<std::size_t>(maxletter), 0);
  for (int x : word) ++count[static_cast<std::size_t>(x - 1)];
  for (std::size_t k = 1; k < count.size(); ++k)
    if (count[k] > count[k - 1]) throw std::invalid_argument("content must be a partition");

  const int len = static_cast<int>(word.size());
  std::vector<bool> used(static_cast<std::size_t>(len), false);
  int total = 0;
  int left = len;
  while (left > 0) {
    // letters 1..top form the next extracted standard subword
    int top = 0;
    while (top < maxletter && count[static_cast<std::size_t>(top)] > 0) ++top;
    // pick letters scanning right-to-left cyclically
    std::vector<int> pos_of(static_cast<std::size_t>(top) + 1, -1);
    int scan = len;  // one past the right end
    for (int letter = 1; letter <= top; ++letter) {
      int found = -1;
      for (int step = 0; step < len; ++step) {
        int idx = ((scan - 1 - step) % len + len) % len;
        if (!used[static_cast<std::size_t>(idx)] && word[static_cast<std::size_t>(idx)] == letter) {
          found = idx;
          break;
        }
      }
      used[static_cast<std::size_t>(found)] = true;
      --count[static_cast<std::size_t>(letter - 1)];
      --left;
      pos_of[static_cast<std::size_t>(letter)] = found;
      scan = found;
    }
    // charge of the standard subword: the index climbs exactly when the
    // next letter sits to the right of the previous one
    int index = 0;
    for (int letter = 2; letter <= top; ++letter) {
      if (pos_of[static_cast<std::size_t>(letter)] > pos_of[static_cast<std::size_t>(letter - 1)]) ++index;
      total += index;
    }
  }
  return total;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu)) return QPoly();
  std::vector<int> content(mu.begin(), mu.end());
  QPoly out;
  for (const Tableau& t : ssyt(lambda, content)) out.add_monomial(charge(t));
  return out;
}

} // namespace schubert

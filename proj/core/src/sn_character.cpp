#include "schubert/sn_character.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

// beta-numbers b_j = lambda_j + (len-1-j); removing a border strip of size
// k is subtracting k from one b_j while keeping all values distinct, with
// sign (-1)^{number of betas passed over}.
Partition from_betas(std::vector<int> betas) {
  std::sort(betas.begin(), betas.end(), std::greater<int>());
  Partition out;
  const int len = static_cast<int>(betas.size());
  for (int j = 0; j < len; ++j) {
    int part = betas[static_cast<std::size_t>(j)] - (len - 1 - j);
    if (part > 0) out.push_back(part);
  }
  return out;
}

} // namespace

long mn_character(const Partition& lambda, const Partition& rho) {
  if (weight(lambda) != weight(rho)) throw std::invalid_argument("size mismatch");
  if (lambda.empty()) return 1;
  const int k = rho.front();
  Partition rest(rho.begin() + 1, rho.end());

  const int len = static_cast<int>(lambda.size());
  std::vector<int> betas(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j)
    betas[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] + (len - 1 - j);

  long acc = 0;
  for (int j = 0; j < len; ++j) {
    const int target = betas[static_cast<std::size_t>(j)] - k;
    if (target < 0) continue;
    bool clash = false;
    int passed = 0;
    for (int t = 0; t < len; ++t) {
      if (t == j) continue;
      if (betas[static_cast<std::size_t>(t)] == target) clash = true;
      if (betas[static_cast<std::size_t>(t)] < betas[static_cast<std::size_t>(j)] &&
          betas[static_cast<std::size_t>(t)] > target)
        ++passed;
    }
    if (clash) continue;
    std::vector<int> next = betas;
    next[static_cast<std::size_t>(j)] = target;
    long sub = mn_character(from_betas(std::move(next)), rest);
    acc += (passed % 2 == 0) ? sub : -sub;
  }
  return acc;
}

std::vector<long> sn_character(const Partition& lambda) {
  std::vector<long> out;
  for (const Partition& rho : partitions_of(weight(lambda)))
    out.push_back(mn_character(lambda, rho));
  return out;
}

unsigned long long class_size(const Partition& rho) {
  const int n = weight(rho);
  unsigned long long fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<unsigned long long>(k);
  unsigned long long z = 1;  // centralizer order: prod parts * prod mult!
  int run = 0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    z *= static_cast<unsigned long long>(rho[j]);
    run = (j > 0 && rho[j] == rho[j - 1]) ? run + 1 : 1;
    z *= static_cast<unsigned long long>(run);
  }
  return fact / z;
}

long character_inner_product(int n, const std::vector<long>& a, const std::vector<long>& b) {
  const auto classes = partitions_of(n);
  if (a.size() != classes.size() || b.size() != classes.size())
    throw std::invalid_argument("class-function length mismatch");
  long long acc = 0;
  for (std::size_t k = 0; k < classes.size(); ++k)
    acc += static_cast<long long>(class_size(classes[k])) * a[k] * b[k];
  unsigned long long fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<unsigned long long>(k);
  if (acc % static_cast<long long>(fact) != 0)
    throw std::logic_error("inner product not integral");
  return static_cast<long>(acc / static_cast<long long>(fact));
}

} // namespace schubert

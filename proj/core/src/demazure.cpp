#include "schubert/demazure.hpp"

#include <stdexcept>

namespace schubert {

namespace {

std::vector<CellPoint> sample_points(const ChainElement& phi, RandomSource& rng,
                                     std::size_t count) {
  CellMatrix cell = build_cell_matrix(phi);
  std::vector<CellPoint> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) pts.push_back(specialize_random(cell, rng));
  return pts;
}

} // namespace

IndependenceCertificate independence_check(const ChainElement& phi, RandomSource& rng,
                                           std::size_t extra_points) {
  IndependenceCertificate cert;
  cert.phi = phi;
  cert.tuples = enumerate_admissible(phi);
  cert.points = cert.tuples.size() + extra_points;
  std::vector<CellPoint> pts = sample_points(phi, rng, cert.points);

  Matrix eval(cert.points, cert.tuples.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < cert.tuples.size(); ++j)
      eval(i, j) = evaluate_plucker(pts[i], cert.tuples[j]);
  cert.rank = rank(eval);
  cert.valid = cert.rank == cert.tuples.size();
  if (!cert.valid) {
    // right-kernel vector of eval = relation among the tuple columns
    Matrix t(eval.cols(), eval.rows());
    for (std::size_t i = 0; i < eval.rows(); ++i)
      for (std::size_t j = 0; j < eval.cols(); ++j) t(j, i) = eval(i, j);
    auto ker = left_kernel(t);
    if (!ker.empty()) cert.kernel_witness = ker.front();
  }
  return cert;
}

std::size_t demazure_dimension(const ChainElement& phi, RandomSource& rng) {
  IndependenceCertificate cert = independence_check(phi, rng);
  if (!cert.valid) throw std::runtime_error("independence not certified");
  return cert.tuples.size();
}

bool spanning_check(const ChainElement& phi, RandomSource& rng, std::size_t points) {
  std::vector<Tuple> basis = enumerate_admissible(phi);
  std::vector<CellPoint> pts = sample_points(phi, rng, points);

  // rows = functions, columns = points
  Matrix base(basis.size(), points);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < points; ++j)
      base(i, j) = evaluate_plucker(pts[j], basis[i]);
  const std::size_t base_rank = rank(base);

  // every nonvanishing label must stay inside the row space
  const int r = phi.ctx.r(), rn = phi.ctx.r() * phi.ctx.n;
  Tuple I(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) I[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    if (!vanishing_criterion(I, phi) && !is_admissible(I, phi.ctx)) {
      Matrix aug(basis.size() + 1, points);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < points; ++j) aug(i, j) = base(i, j);
      for (std::size_t j = 0; j < points; ++j)
        aug(basis.size(), j) = evaluate_plucker(pts[j], I);
      if (rank(aug) != base_rank) return false;
    }
    int k = r - 1;
    while (k >= 0 && I[static_cast<std::size_t>(k)] == rn - (r - 1 - k)) --k;
    if (k < 0) break;
    ++I[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < r; ++t)
      I[static_cast<std::size_t>(t)] = I[static_cast<std::size_t>(t - 1)] + 1;
  }
  return true;
}

} // namespace schubert

#include "dvb/sampling.hpp"

namespace dvb {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(stream),
          static_cast<std::uint32_t>(stream >> 32)};
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Eigen::Index Sampler::index(Eigen::Index lo, Eigen::Index hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<Eigen::Index>(engine_() % span);
}

Vec Sampler::vec(Eigen::Index n, double lo, double hi) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

Mat Sampler::mat(Eigen::Index rows, Eigen::Index cols, double lo, double hi) {
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = uniform(lo, hi);
  }
  return m;
}

Mat Sampler::antisymmetric(Eigen::Index n) {
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m(i, j) = uniform();
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

Expr Sampler::quadratic(std::size_t dim) {
  Expr acc = uniform();
  for (std::size_t i = 0; i < dim; ++i) {
    const Expr yi = Expr::variable(i);
    acc += Expr(uniform()) * yi;
    for (std::size_t j = i; j < dim; ++j) acc += Expr(uniform()) * yi * Expr::variable(j);
  }
  return acc;
}

std::vector<Expr> Sampler::quadratic_components(std::size_t dim) {
  std::vector<Expr> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(quadratic(dim));
  return out;
}

}  // namespace dvb

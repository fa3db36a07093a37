#include "gpd/rep.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace gpd {

QiMatrix Representation::apply(const AlgebraElement& f) const {
  QiMatrix out(dimension, dimension);
  for (Mor m : f.support()) {
    const QiMatrix& img = delta_image[m];
    const GaussianRational& c = f.coeff(m);
    for (std::size_t i = 0; i < dimension; ++i)
      for (std::size_t j = 0; j < dimension; ++j)
        if (!img.at(i, j).is_zero()) out.at(i, j) += c * img.at(i, j);
  }
  return out;
}

namespace {

Representation rep_on_unit_list(GroupoidRef g, std::vector<int> units_in_basis) {
  const FiniteGroupoid& G = *g;
  Representation rep;
  rep.groupoid = g;
  rep.dimension = units_in_basis.size();
  std::vector<int> pos(G.unit_count(), -1);
  for (std::size_t i = 0; i < units_in_basis.size(); ++i) {
    pos[units_in_basis[i]] = static_cast<int>(i);
    rep.basis_labels.push_back(G.label(G.unit_morphism(units_in_basis[i])));
  }
  rep.delta_image.reserve(G.size());
  for (Mor m = 0; m < static_cast<Mor>(G.size()); ++m) {
    QiMatrix img(rep.dimension, rep.dimension);
    int s = pos[G.source_unit(m)];
    int r = pos[G.range_unit(m)];
    if (s >= 0 && r >= 0) img.at(r, s) = GaussianRational(1);
    rep.delta_image.push_back(std::move(img));
  }
  return rep;
}

}  // namespace

Representation rep_free_module(GroupoidRef g, const UnitSet& w) {
  if (!is_invariant(*g, w)) throw NotInvariant("the basis unit set must be invariant");
  return rep_on_unit_list(std::move(g), w.members);
}

std::size_t kernel_dimension(const Representation& rep) {
  const std::size_t n = rep.groupoid->size();
  std::vector<QiVector> equations;
  equations.reserve(rep.dimension * rep.dimension);
  for (std::size_t i = 0; i < rep.dimension; ++i) {
    for (std::size_t j = 0; j < rep.dimension; ++j) {
      QiVector row(n);
      bool nonzero = false;
      for (Mor m = 0; m < static_cast<Mor>(n); ++m) {
        row[m] = rep.delta_image[m].at(i, j);
        nonzero = nonzero || !row[m].is_zero();
      }
      if (nonzero) equations.push_back(std::move(row));
    }
  }
  return n - rank_of(equations, n);
}

Representation rep_orbit(GroupoidRef g, int unit) {
  if (unit < 0 || unit >= static_cast<int>(g->unit_count()))
    throw PreconditionError("no such unit");
  for (const auto& block : orbits(*g)) {
    if (std::find(block.begin(), block.end(), unit) != block.end())
      return rep_on_unit_list(std::move(g), block);
  }
  throw std::logic_error("unit missing from its own orbit partition");
}

Representation rep_regular(GroupoidRef g, int unit) {
  const FiniteGroupoid& G = *g;
  if (unit < 0 || unit >= static_cast<int>(G.unit_count()))
    throw PreconditionError("no such unit");
  const std::vector<Mor>& basis = G.with_source(unit);
  std::vector<int> pos(G.size(), -1);
  Representation rep;
  rep.groupoid = g;
  rep.dimension = basis.size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    pos[basis[i]] = static_cast<int>(i);
    rep.basis_labels.push_back(G.label(basis[i]));
  }
  // delta_c sends basis vector m to c.m whenever the product is defined.
  rep.delta_image.reserve(G.size());
  for (Mor c = 0; c < static_cast<Mor>(G.size()); ++c) {
    QiMatrix img(rep.dimension, rep.dimension);
    for (Mor m : basis) {
      Mor cm = G.compose(c, m);
      if (cm != kNoMor) img.at(pos[cm], pos[m]) = GaussianRational(1);
    }
    rep.delta_image.push_back(std::move(img));
  }
  return rep;
}

Representation rep_augmentation(GroupoidRef g) {
  const FiniteGroupoid& G = *g;
  auto blocks = orbits(G);
  std::vector<Representation> parts;
  parts.reserve(blocks.size());
  for (const auto& block : blocks)
    parts.push_back(rep_orbit(g, *std::min_element(block.begin(), block.end())));

  Representation rep;
  rep.groupoid = g;
  for (const auto& p : parts) {
    rep.dimension += p.dimension;
    rep.basis_labels.insert(rep.basis_labels.end(), p.basis_labels.begin(),
                            p.basis_labels.end());
  }
  rep.delta_image.assign(G.size(), QiMatrix(rep.dimension, rep.dimension));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (Mor m = 0; m < static_cast<Mor>(G.size()); ++m) {
      for (std::size_t i = 0; i < p.dimension; ++i)
        for (std::size_t j = 0; j < p.dimension; ++j)
          rep.delta_image[m].at(offset + i, offset + j) = p.delta_image[m].at(i, j);
    }
    offset += p.dimension;
  }
  return rep;
}

double operator_norm(const QiMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::MatrixXcd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::complex<double>(m.at(i, j).to_double_re(), m.at(i, j).to_double_im());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

}  // namespace gpd

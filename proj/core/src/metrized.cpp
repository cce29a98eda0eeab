#include "hermk/metrized.hpp"

#include <set>
#include <stdexcept>

namespace hermk {

MetrizedSpace::MetrizedSpace() : data_(std::make_shared<const Data>()) {}

MetrizedSpace::MetrizedSpace(std::vector<std::string> labels, Matrix gram) {
  if (gram.rows() != labels.size() || gram.cols() != labels.size())
    throw std::invalid_argument("MetrizedSpace: Gram size does not match labels");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw std::invalid_argument("MetrizedSpace: labels are not distinct");
  if (!is_positive_definite(gram))
    throw std::invalid_argument("MetrizedSpace: Gram is not symmetric positive definite");
  data_ = std::make_shared<const Data>(Data{std::move(labels), std::move(gram)});
}

MetrizedSpace MetrizedSpace::trusted(std::vector<std::string> labels, Matrix gram) {
  return MetrizedSpace(std::make_shared<const Data>(Data{std::move(labels), std::move(gram)}));
}

MetrizedSpace MetrizedSpace::orthonormal(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return trusted(std::move(labels), Matrix::identity(dim));
}

bool MetrizedSpace::operator==(const MetrizedSpace& rhs) const {
  return data_ == rhs.data_ || (labels() == rhs.labels() && gram() == rhs.gram());
}

std::string MetrizedSpace::key() const {
  std::string k = "{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) k += ',';
    k += labels()[i];
  }
  return k + "}" + gram().to_string();
}

SpaceMap::SpaceMap(MetrizedSpace domain, MetrizedSpace codomain, ScaledMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
    throw std::invalid_argument("SpaceMap: matrix shape does not match spaces");
}

SpaceMap SpaceMap::identity(const MetrizedSpace& space) {
  return SpaceMap(space, space, ScaledMatrix::identity(space.dim()));
}

SpaceMap SpaceMap::zero(const MetrizedSpace& domain, const MetrizedSpace& codomain) {
  return SpaceMap(domain, codomain, ScaledMatrix::zero(codomain.dim(), domain.dim()));
}

SpaceMap SpaceMap::after(const SpaceMap& inner) const {
  if (inner.codomain_.dim() != domain_.dim())
    throw std::invalid_argument("SpaceMap::after: dimension mismatch");
  return SpaceMap(inner.domain_, codomain_, matrix_ * inner.matrix_);
}

SpaceMap SpaceMap::rescaled(const Rational& factor_sq) const {
  return SpaceMap(domain_, codomain_, matrix_.rescaled(factor_sq));
}

Matrix kernel_basis(const SpaceMap& f) { return nullspace(f.matrix().entries()); }

Matrix image_basis(const SpaceMap& f) { return span_basis(f.matrix().entries()); }

namespace {

void require_independent(const Matrix& basis, const char* who) {
  if (rank(basis) != basis.cols())
    throw std::invalid_argument(std::string(who) + ": basis vectors are dependent");
}

}  // namespace

MetrizedSpace induced_subspace_metric(const MetrizedSpace& ambient, const Matrix& basis) {
  if (basis.rows() != ambient.dim())
    throw std::invalid_argument("induced_subspace_metric: vector length mismatch");
  require_independent(basis, "induced_subspace_metric");
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < basis.cols(); ++c) labels.push_back(vector_label(basis.col(c)));
  return MetrizedSpace::trusted(std::move(labels), basis.transpose() * ambient.gram() * basis);
}

Matrix orthogonal_complement(const MetrizedSpace& ambient, const Matrix& basis) {
  if (basis.rows() != ambient.dim())
    throw std::invalid_argument("orthogonal_complement: vector length mismatch");
  require_independent(basis, "orthogonal_complement");
  if (basis.cols() == 0) return Matrix::identity(ambient.dim());
  return nullspace(basis.transpose() * ambient.gram());
}

Matrix orthogonal_projector(const MetrizedSpace& ambient, const Matrix& basis) {
  if (basis.cols() == 0) return Matrix::zero(ambient.dim(), ambient.dim());
  // P = B (B^T G B)^{-1} B^T G
  const Matrix btg = basis.transpose() * ambient.gram();
  return basis * inverse(btg * basis) * btg;
}

MetrizedSpace quotient_metric(const SpaceMap& f) {
  const Matrix& m = f.matrix().entries();
  if (rank(m) != f.codomain().dim())
    throw std::invalid_argument("quotient_metric: map is not surjective");
  const Matrix complement = orthogonal_complement(f.domain(), kernel_basis(f));
  // Preimages of the codomain basis inside the complement, undoing sqrt(s).
  const Matrix lift = complement * inverse(m * complement);
  Matrix gram = lift.transpose() * f.domain().gram() * lift;
  gram *= 1 / f.matrix().scale_sq();
  return MetrizedSpace::trusted(f.codomain().labels(), std::move(gram));
}

bool is_isometric_embedding(const SpaceMap& f) {
  const Matrix& m = f.matrix().entries();
  Matrix pulled = m.transpose() * f.codomain().gram() * m;
  pulled *= f.matrix().scale_sq();
  return pulled == f.domain().gram();
}

bool is_isometry(const SpaceMap& f) {
  if (f.domain().dim() != f.codomain().dim()) return false;
  if (rank(f.matrix().entries()) != f.domain().dim()) return false;
  return is_isometric_embedding(f);
}

MetrizedSpace tensor_of_spaces(const MetrizedSpace& v, const MetrizedSpace& w) {
  std::vector<std::string> labels;
  labels.reserve(v.dim() * w.dim());
  for (const auto& a : v.labels())
    for (const auto& b : w.labels()) labels.push_back(a + "⊗" + b);
  return MetrizedSpace::trusted(std::move(labels), kron(v.gram(), w.gram()));
}

SpaceMap tensor_of_maps(const SpaceMap& f, const SpaceMap& g) {
  return SpaceMap(tensor_of_spaces(f.domain(), g.domain()),
                  tensor_of_spaces(f.codomain(), g.codomain()), kron(f.matrix(), g.matrix()));
}

MetrizedSpace orthogonal_sum(const std::vector<std::pair<std::string, MetrizedSpace>>& summands) {
  std::vector<const std::pair<std::string, MetrizedSpace>*> kept;
  for (const auto& s : summands)
    if (s.second.dim() > 0) kept.push_back(&s);
  if (kept.empty()) return MetrizedSpace();
  if (kept.size() == 1) return kept.front()->second;
  std::vector<std::string> labels;
  std::vector<Matrix> blocks;
  for (const auto* s : kept) {
    for (const auto& l : s->second.labels()) labels.push_back(s->first + ":" + l);
    blocks.push_back(s->second.gram());
  }
  return MetrizedSpace::trusted(std::move(labels), block_diag(blocks));
}

bool is_exact(const ShortExactMetrized& s) {
  const Matrix& i = s.inject.matrix().entries();
  const Matrix& p = s.project.matrix().entries();
  if (rank(i) != s.sub.dim()) return false;
  if (rank(p) != s.quot.dim()) return false;
  if (!(p * i).is_zero()) return false;
  return s.sub.dim() + s.quot.dim() == s.total.dim();
}

bool is_hermitian_split(const ShortExactMetrized& s) {
  if (!is_isometric_embedding(s.inject)) return false;
  const Matrix complement =
      orthogonal_complement(s.total, span_basis(s.inject.matrix().entries()));
  if (complement.cols() != s.quot.dim()) return false;
  const MetrizedSpace comp_space = induced_subspace_metric(s.total, complement);
  const SpaceMap restricted(comp_space, s.quot,
                            ScaledMatrix(s.project.matrix().entries() * complement,
                                         s.project.matrix().scale_sq()));
  return is_isometry(restricted);
}

ShortExactMetrized tensor_sequence(const ShortExactMetrized& s, const MetrizedSpace& factor) {
  const SpaceMap id = SpaceMap::identity(factor);
  return ShortExactMetrized{tensor_of_spaces(s.sub, factor), tensor_of_spaces(s.total, factor),
                            tensor_of_spaces(s.quot, factor), tensor_of_maps(s.inject, id),
                            tensor_of_maps(s.project, id)};
}

}  // namespace hermk

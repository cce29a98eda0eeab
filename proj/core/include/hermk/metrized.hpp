#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hermk/linalg.hpp"
#include "hermk/scaled_matrix.hpp"

namespace hermk {

/// A based finite-dimensional rational vector space with a symmetric
/// positive-definite Gram form. Cheap to copy (shared immutable storage).
class MetrizedSpace {
 public:
  /// The zero space.
  MetrizedSpace();
  /// Validates symmetry, positive definiteness and label distinctness.
  MetrizedSpace(std::vector<std::string> labels, Matrix gram);

  /// Skips validation; for spaces derived from already-validated data.
  static MetrizedSpace trusted(std::vector<std::string> labels, Matrix gram);
  static MetrizedSpace orthonormal(std::size_t dim, const std::string& prefix = "e");

  std::size_t dim() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const Matrix& gram() const { return data_->gram; }

  bool operator==(const MetrizedSpace& rhs) const;
  /// Literal identity key: labels and Gram entries.
  std::string key() const;

 private:
  struct Data {
    std::vector<std::string> labels;
    Matrix gram;
  };
  explicit MetrizedSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

class SpaceMap {
 public:
  SpaceMap() = default;
  SpaceMap(MetrizedSpace domain, MetrizedSpace codomain, ScaledMatrix matrix);
  SpaceMap(MetrizedSpace domain, MetrizedSpace codomain, Matrix matrix)
      : SpaceMap(std::move(domain), std::move(codomain), ScaledMatrix(std::move(matrix))) {}

  static SpaceMap identity(const MetrizedSpace& space);
  static SpaceMap zero(const MetrizedSpace& domain, const MetrizedSpace& codomain);

  const MetrizedSpace& domain() const { return domain_; }
  const MetrizedSpace& codomain() const { return codomain_; }
  const ScaledMatrix& matrix() const { return matrix_; }

  /// this ∘ inner.
  SpaceMap after(const SpaceMap& inner) const;
  SpaceMap rescaled(const Rational& factor_sq) const;

 private:
  MetrizedSpace domain_;
  MetrizedSpace codomain_;
  ScaledMatrix matrix_;
};

/// Basis (as columns) of the kernel; the scale plays no role.
Matrix kernel_basis(const SpaceMap& f);
Matrix image_basis(const SpaceMap& f);

/// Subspace spanned by the columns of `basis`, with Gram B^T G B and labels
/// equal to the ambient coordinates of each basis vector.
MetrizedSpace induced_subspace_metric(const MetrizedSpace& ambient, const Matrix& basis);

/// Metric on the codomain of a surjection: the norm of w is the norm of its
/// unique preimage orthogonal to ker f.
MetrizedSpace quotient_metric(const SpaceMap& f);

/// Columns spanning the G-orthogonal complement of span(basis).
Matrix orthogonal_complement(const MetrizedSpace& ambient, const Matrix& basis);

/// Matrix of the G-orthogonal projection onto span(basis) (basis independent).
Matrix orthogonal_projector(const MetrizedSpace& ambient, const Matrix& basis);

bool is_isometry(const SpaceMap& f);
/// s M^T G_cod M == G_dom (no bijectivity requirement).
bool is_isometric_embedding(const SpaceMap& f);

/// Gram = Kronecker product; labels "a⊗b".
MetrizedSpace tensor_of_spaces(const MetrizedSpace& v, const MetrizedSpace& w);
SpaceMap tensor_of_maps(const SpaceMap& f, const SpaceMap& g);

/// Orthogonal direct sum. Zero-dimensional summands are dropped; a single
/// remaining summand is returned unchanged; otherwise labels become
/// "tag:label".
MetrizedSpace orthogonal_sum(const std::vector<std::pair<std::string, MetrizedSpace>>& summands);

/// 0 -> sub -> total -> quot -> 0 with metrized objects.
struct ShortExactMetrized {
  MetrizedSpace sub;
  MetrizedSpace total;
  MetrizedSpace quot;
  SpaceMap inject;
  SpaceMap project;
};

/// inject injective, project surjective, im(inject) = ker(project).
bool is_exact(const ShortExactMetrized& s);

/// The sub metric is induced through inject, and project restricted to the
/// orthogonal complement of im(inject) is an isometry onto quot.
bool is_hermitian_split(const ShortExactMetrized& s);

ShortExactMetrized tensor_sequence(const ShortExactMetrized& s, const MetrizedSpace& factor);

}  // namespace hermk

#pragma once

#include <stdexcept>

#include "hermk/scaled_matrix.hpp"

namespace hermk {

// Assembles a block matrix whose nonzero blocks share one scale.
class BlockAssembler {
 public:
  BlockAssembler(std::size_t rows, std::size_t cols) : entries_(rows, cols) {}

  void place(std::size_t row, std::size_t col, const ScaledMatrix& block) {
    if (block.is_zero()) return;
    if (has_scale_ && block.scale_sq() != scale_sq_)
      throw std::invalid_argument("BlockAssembler: blocks carry different scales");
    has_scale_ = true;
    scale_sq_ = block.scale_sq();
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) entries_(row + r, col + c) = block.entries()(r, c);
  }

  ScaledMatrix build() const { return ScaledMatrix(entries_, has_scale_ ? scale_sq_ : Rational(1)); }

 private:
  Matrix entries_;
  Rational scale_sq_ = 1;
  bool has_scale_ = false;
};

}  // namespace hermk

#pragma once

#include <stdexcept>
#include <vector>

#include "spanv/cells.hpp"

namespace spanv {

// A running vertical composite that follows a path of 1-cells through
// rewrites (a 2-cell on a window) and structural re-bracketings.
template <Backend B>
class Walk {
 public:
  Walk(const B& bk, std::vector<Cell1<B>> start)
      : bk_(bk), path_(make_path(bk, std::move(start))), cell_(identity2(bk, eval(bk, path_))) {}

  // Structural step to a path whose composite has the same legs.
  Walk& to(std::vector<Cell1<B>> next) {
    Path<B> p = make_path(bk_, std::move(next));
    Cell2<B> s = structural2(bk_, eval(bk_, path_), eval(bk_, p));
    if (!s.map().is_bijective()) throw std::logic_error("structural step is not invertible");
    cell_ = vcomp2(bk_, s, cell_);
    path_ = std::move(p);
    return *this;
  }

  Walk& apply(std::size_t pos, std::size_t len, const Cell2<B>& theta, std::vector<Cell1<B>> repl) {
    Path<B> r = make_path(bk_, std::move(repl));
    cell_ = vcomp2(bk_, rewrite(bk_, path_, pos, len, theta, r), cell_);
    path_ = replace(path_, pos, len, r);
    return *this;
  }

  const Cell2<B>& cell() const { return cell_; }
  const Path<B>& path() const { return path_; }
  Cell1<B> end() const { return eval(bk_, path_); }

 private:
  const B& bk_;
  Path<B> path_;
  Cell2<B> cell_;
};

}  // namespace spanv

#include "crl/sympoly.hpp"

namespace crl {

std::string Pattern::str() const {
  switch (kind) {
    case Kind::DoubleDiagonal: return "double-diagonal";
    case Kind::DoubleTDiagonal: return "t-diagonal(" + param.str() + ")";
    case Kind::DoubleShift: return "shift(" + param.str() + ")";
    case Kind::PFold: return "pfold(" + std::to_string(p) + ")";
  }
  return "?";
}

std::vector<AffineImage<Rat>> pattern_images(const Pattern& pat, int n) {
  if (pat.kind == Pattern::Kind::PFold && pat.p < 2) throw BadPattern("pfold needs p >= 2");
  if (pat.arity() > n) throw BadPattern(pat.str() + " needs at least " + std::to_string(pat.arity()) + " variables");
  std::vector<AffineImage<Rat>> im(static_cast<std::size_t>(n));
  if (pat.kind == Pattern::Kind::PFold) {
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = {i < pat.p ? 0 : i - pat.p + 1, Rat(1), Rat(0)};
    return im;
  }
  Rat scale(1), shift(0);
  if (pat.kind == Pattern::Kind::DoubleTDiagonal) scale = pat.param;
  if (pat.kind == Pattern::Kind::DoubleShift) shift = pat.param;
  im[0] = {0, Rat(1), Rat(0)};
  im[1] = {0, scale, shift};
  im[2] = {1, Rat(1), Rat(0)};
  im[3] = {1, scale, shift};
  for (int i = 4; i < n; ++i) im[static_cast<std::size_t>(i)] = {i - 2, Rat(1), Rat(0)};
  return im;
}

}  // namespace crl

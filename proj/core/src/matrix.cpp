#include "twoatom/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace twoatom {

Mat4 Mat4::identity() { return diagonal({1.0, 1.0, 1.0, 1.0}); }

Mat4 Mat4::diagonal(const std::array<double, 4>& d) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
  return m;
}

Mat4 Mat4::outer(const Vec4& u, const Vec4& v) {
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

Mat4 Mat4::adjoint() const {
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

Mat4 Mat4::transpose() const {
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = (*this)(c, r);
  return m;
}

Mat4 Mat4::conj() const {
  Mat4 m;
  for (std::size_t k = 0; k < 16; ++k) m.data_[k] = std::conj(data_[k]);
  return m;
}

Complex Mat4::trace() const { return data_[0] + data_[5] + data_[10] + data_[15]; }

Mat4& Mat4::operator+=(const Mat4& o) {
  for (std::size_t k = 0; k < 16; ++k) data_[k] += o.data_[k];
  return *this;
}

Mat4& Mat4::operator-=(const Mat4& o) {
  for (std::size_t k = 0; k < 16; ++k) data_[k] -= o.data_[k];
  return *this;
}

Mat4& Mat4::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < 4; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += a(r, c) * v[c];
  return out;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

double hermiticity_defect(const Mat4& m) { return max_abs_diff(m, m.adjoint()); }

Complex inner(const Vec4& u, const Vec4& v) {
  Complex s{};
  for (std::size_t k = 0; k < 4; ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double norm(const Vec4& v) { return std::sqrt(inner(v, v).real()); }

}  // namespace twoatom

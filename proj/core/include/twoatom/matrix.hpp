#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace twoatom {

using Complex = std::complex<double>;
using Vec4 = std::array<Complex, 4>;

inline constexpr Complex kI{0.0, 1.0};

// Fixed-size dense 4x4 complex matrix, row-major. Two qubits never need more.
class Mat4 {
 public:
  constexpr Mat4() = default;

  static Mat4 identity();
  static Mat4 diagonal(const std::array<double, 4>& d);
  // |u><v|
  static Mat4 outer(const Vec4& u, const Vec4& v);

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * 4 + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * 4 + c]; }

  Mat4 adjoint() const;
  Mat4 transpose() const;
  Mat4 conj() const;
  Complex trace() const;

  Mat4& operator+=(const Mat4& o);
  Mat4& operator-=(const Mat4& o);
  Mat4& operator*=(Complex s);

  friend Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
  friend Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
  friend Mat4 operator*(Mat4 a, Complex s) { return a *= s; }
  friend Mat4 operator*(Complex s, Mat4 a) { return a *= s; }
  friend Mat4 operator*(const Mat4& a, const Mat4& b);
  friend Vec4 operator*(const Mat4& a, const Vec4& v);

  friend bool operator==(const Mat4&, const Mat4&) = default;

 private:
  std::array<Complex, 16> data_{};
};

// Largest elementwise modulus of a - b.
double max_abs_diff(const Mat4& a, const Mat4& b);
// Largest elementwise modulus of m - m^dagger.
double hermiticity_defect(const Mat4& m);

Complex inner(const Vec4& u, const Vec4& v);  // <u|v>
double norm(const Vec4& v);

}  // namespace twoatom

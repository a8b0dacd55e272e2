// Copyright 2026 The opgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

namespace opgrid {

/// Exact complex number re + i·im with arbitrary-precision rational parts.
/// Both parts are kept in lowest terms with positive denominators.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// re_num/re_den + i·im_num/im_den; denominators must be nonzero.
  static GaussianRational from_fractions(long re_num, long re_den, long im_num = 0,
                                         long im_den = 1);
  static GaussianRational i() { return GaussianRational(0, 1); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conjugate() const;
  /// |z|^2, exact.
  mpq_class norm2() const;
  std::complex<double> to_complex() const;

  GaussianRational operator-() const;
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws ArgumentError on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// "a", "a/b", "i", "-i/2", "1+i", "1/2-3/4i" style rendering.
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Hooks found by ADL from Eigen's numext functions.
inline GaussianRational conj(const GaussianRational& z) { return z.conjugate(); }
inline mpq_class real(const GaussianRational& z) { return z.real(); }
inline mpq_class imag(const GaussianRational& z) { return z.imag(); }
inline mpq_class abs2(const GaussianRational& z) { return z.norm2(); }

}  // namespace opgrid

namespace Eigen {

template <>
struct NumTraits<opgrid::GaussianRational> : GenericNumTraits<opgrid::GaussianRational> {
  using Real = mpq_class;
  using NonInteger = opgrid::GaussianRational;
  using Literal = opgrid::GaussianRational;
  using Nested = opgrid::GaussianRational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

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

#include "opgrid/numlin/gaussian_rational.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "opgrid/errors.hpp"

namespace opgrid {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_fractions(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw ArgumentError("zero denominator");
  return GaussianRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

GaussianRational GaussianRational::conjugate() const {
  GaussianRational r = *this;
  r.im_ = -r.im_;
  return r;
}

mpq_class GaussianRational::norm2() const { return mpq_class(re_ * re_ + im_ * im_); }

std::complex<double> GaussianRational::to_complex() const { return {re_.get_d(), im_.get_d()}; }

GaussianRational GaussianRational::operator-() const {
  GaussianRational r;
  r.re_ = -re_;
  r.im_ = -im_;
  return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  if (o.is_zero()) return *this;
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  if (o.is_zero()) return *this;
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    re_ = 0;
    im_ = 0;
    return *this;
  }
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArgumentError("division by zero");
  const mpq_class d = o.norm2();
  *this *= o.conjugate();
  re_ /= d;
  im_ /= d;
  return *this;
}

namespace {

std::string imag_part(const mpq_class& q) {
  // 1 -> "i", 1/2 -> "i/2", 3/4 -> "3/4i"
  if (q == 1) return "i";
  if (q.get_num() == 1) return "i/" + q.get_den().get_str();
  return q.get_str() + "i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  mpq_class mag = abs(im_);
  if (sgn(im_) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  out += imag_part(mag);
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace opgrid

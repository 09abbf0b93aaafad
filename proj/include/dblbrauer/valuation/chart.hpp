#pragma once

#include <array>

#include "dblbrauer/polycore.hpp"

namespace dblbrauer {

// Projective change of coordinates: original point = T * chart point.
template <class K>
class Chart {
 public:
  using E = typename K::element;
  using Mat = std::array<std::array<E, 3>, 3>;

  static Chart identity(const K& k) {
    Mat t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i][j] = i == j ? k.one() : k.zero();
    return Chart(k, t);
  }
  static Chart random(const K& k, Rng& rng) {
    while (true) {
      Mat t;
      for (auto& r : t)
        for (auto& v : r) v = sample_element(k, rng);
      if (!is_zero(det3(t))) return Chart(k, t);
    }
  }
  Chart(const K& k, const Mat& t) : field_(k), t_(t) {
    E d = det3(t);
    if (is_zero(d)) throw domain_error("chart matrix is singular");
    E inv = k.one() / d;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        tinv_[i][j] = (t[r0][c0] * t[r1][c1] - t[r0][c1] * t[r1][c0]) * inv;
      }
  }

  const Mat& matrix() const { return t_; }
  const Mat& inverse() const { return tinv_; }
  const K& field() const { return field_; }

  // f expressed in chart coordinates.
  MPoly<K> pull(const MPoly<K>& f) const {
    std::array<MPoly<K>, 3> im;
    for (int i = 0; i < 3; ++i) {
      im[i] = MPoly<K>(field_);
      for (int j = 0; j < 3; ++j) im[i] += MPoly<K>::variable(field_, all_vars[j]).scaled(t_[i][j]);
    }
    return f.substitute({&im[0], &im[1], &im[2], nullptr});
  }

  friend bool operator==(const Chart& a, const Chart& b) { return a.t_ == b.t_; }

 private:
  static E det3(const Mat& t) {
    return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
           t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
  }

  K field_;
  Mat t_, tinv_;
};

}  // namespace dblbrauer

#include "arcforge/plane.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "arcforge/error.hpp"

namespace arcforge {

std::uint32_t default_qmax() {
  if (const char* env = std::getenv("ARCFORGE_QMAX")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint32_t>(v);
  }
  return kDefaultQMax;
}

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_ranges(PlaneIndex count, unsigned workers,
                     const std::function<void(PlaneIndex, PlaneIndex)>& fn) {
  if (workers == 0) workers = default_workers();
  if (workers <= 1 || count < 2 * static_cast<PlaneIndex>(workers)) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const PlaneIndex chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const PlaneIndex begin = w * chunk;
    const PlaneIndex end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

Plane::Plane(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::BadParameters, "null field");
  q_ = field_->q();
  size_ = static_cast<PlaneIndex>(q_) * q_ + q_ + 1;
}

void Plane::require_enumerable(std::uint32_t qmax) const {
  if (q_ > qmax)
    throw Error(Errc::TooLarge,
                "q = " + std::to_string(q_) + " exceeds plane cap " + std::to_string(qmax));
}

Triple Plane::normalize(Triple v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      const Elem s = f.inv(v[i]);
      for (auto& c : v) c = f.mul(c, s);
      return v;
    }
  }
  throw Error(Errc::ZeroVector, "the zero triple is not a projective point");
}

PlaneIndex Plane::index(const Triple& t) const noexcept {
  const PlaneIndex q = q_;
  if (t[0] != 0) return static_cast<PlaneIndex>(t[1]) * q + t[2];
  if (t[1] != 0) return q * q + t[2];
  return q * q + q;
}

Triple Plane::triple_at(PlaneIndex idx) const noexcept {
  const PlaneIndex q = q_;
  if (idx < q * q) return {1, static_cast<Elem>(idx / q), static_cast<Elem>(idx % q)};
  if (idx < q * q + q) return {0, 1, static_cast<Elem>(idx - q * q)};
  return {0, 0, 1};
}

Elem Plane::dot(const Triple& a, const Triple& b) const noexcept {
  const Field& f = *field_;
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

namespace {

Triple cross(const Field& f, const Triple& a, const Triple& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

bool is_zero(const Triple& t) { return t[0] == 0 && t[1] == 0 && t[2] == 0; }

}  // namespace

ProjLine Plane::line_through(const ProjPoint& a, const ProjPoint& b) const {
  const Triple c = cross(*field_, a.coords, b.coords);
  if (is_zero(c)) throw Error(Errc::SamePoint, "a line needs two distinct points");
  return ProjLine{normalize(c)};
}

ProjPoint Plane::meet(const ProjLine& a, const ProjLine& b) const {
  const Triple c = cross(*field_, a.coeffs, b.coeffs);
  if (is_zero(c)) throw Error(Errc::SamePoint, "identical lines have no unique meet");
  return ProjPoint{normalize(c)};
}

Triple Plane::orthogonal_at(const Triple& n, std::uint32_t i) const noexcept {
  const Field& f = *field_;
  if (n[2] != 0) {
    const Elem minus_inv = f.neg(f.inv(n[2]));
    if (i < q_) return {1, i, f.mul(f.add(n[0], f.mul(n[1], i)), minus_inv)};
    return {0, 1, f.mul(n[1], minus_inv)};
  }
  if (n[1] != 0) {
    if (i < q_) return {1, f.neg(f.div(n[0], n[1])), i};
    return {0, 0, 1};
  }
  if (i < q_) return {0, 1, i};
  return {0, 0, 1};
}

void Plane::orthogonal_indices(const Triple& n, std::span<PlaneIndex> out) const noexcept {
  const Field& f = *field_;
  const PlaneIndex q = q_;
  if (n[2] != 0) {
    const Elem minus_inv = f.neg(f.inv(n[2]));
    const Elem slope = f.mul(n[1], minus_inv);
    const Elem offset = f.mul(n[0], minus_inv);
    for (Elem x = 0; x < q_; ++x) out[x] = static_cast<PlaneIndex>(x) * q + f.add(offset, f.mul(slope, x));
    out[q_] = q * q + slope;
    return;
  }
  if (n[1] != 0) {
    const PlaneIndex base = static_cast<PlaneIndex>(f.neg(f.div(n[0], n[1]))) * q;
    for (Elem z = 0; z < q_; ++z) out[z] = base + z;
    out[q_] = q * q + q;
    return;
  }
  for (Elem z = 0; z < q_; ++z) out[z] = q * q + z;
  out[q_] = q * q + q;
}

std::vector<ProjPoint> Plane::enumerate_points(std::uint32_t qmax) const {
  require_enumerable(qmax);
  std::vector<ProjPoint> out;
  out.reserve(size_);
  for (PlaneIndex i = 0; i < size_; ++i) out.push_back(point_at(i));
  return out;
}

std::vector<ProjPoint> Plane::points_on_line(const ProjLine& l) const {
  std::vector<ProjPoint> out;
  out.reserve(q_ + 1);
  for (std::uint32_t i = 0; i <= q_; ++i) out.push_back(ProjPoint{orthogonal_at(l.coeffs, i)});
  return out;
}

std::vector<ProjLine> Plane::pencil(const ProjPoint& p) const {
  std::vector<ProjLine> out;
  out.reserve(q_ + 1);
  for (std::uint32_t i = 0; i <= q_; ++i) out.push_back(ProjLine{orthogonal_at(p.coords, i)});
  return out;
}

}  // namespace arcforge

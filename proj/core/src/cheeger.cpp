#include "dlap/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "dlap/error.hpp"

namespace dlap {

namespace {

template <class T>
void require_subset(std::size_t n, Subset subset) {
  if (n > 63) throw CapacityError("subset masks support at most 63 vertices");
  const Subset full = (Subset{1} << n) - 1;
  if (subset == 0 || (subset & full) == full || (subset & ~full) != 0) {
    throw ValidationError("cut subset must be a proper nonempty subset of the vertices");
  }
}

template <class T>
T min_vol(const Cut<T>& c) {
  return std::min(c.vol, c.vol_complement);
}

// h as a value of the right number type.
template <class T>
CheegerValue<T> ratio(T num, T den) {
  if constexpr (std::is_integral_v<T>) {
    return Rational(num, den);
  } else {
    return num / den;
  }
}

// Largest total distance for which every cross-multiplied comparison fits in
// 128 bits and every running sum fits in 64.
constexpr std::int64_t kMaxExactTotal = std::int64_t{1} << 61;

}  // namespace

template <class T>
std::vector<std::size_t> Cut<T>::vertices(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n; ++u)
    if (subset >> u & 1U) out.push_back(u);
  return out;
}

template struct Cut<std::int64_t>;
template struct Cut<double>;

template <class T>
Cut<T> make_cut(const DistanceMatrix<T>& d, const TransmissionVector<T>& t, Subset subset) {
  const std::size_t n = d.size();
  require_subset<T>(n, subset);
  Cut<T> c;
  c.subset = subset;
  for (std::size_t u = 0; u < n; ++u) {
    if (subset >> u & 1U) {
      c.vol += t[u];
      for (std::size_t v = 0; v < n; ++v)
        if (!(subset >> v & 1U)) c.cross += d(u, v);
    } else {
      c.vol_complement += t[u];
    }
  }
  return c;
}

template <class T>
CheegerValue<T> h_of_cut(const DistanceMatrix<T>& d, const TransmissionVector<T>& t, Subset subset) {
  Cut<T> c = make_cut(d, t, subset);
  return ratio(c.cross, min_vol(c));
}

template <class T>
CheegerResult<T> cheeger_exact(const DistanceMatrix<T>& d, const TransmissionVector<T>& t,
                               CheegerOptions opts) {
  const std::size_t n = d.size();
  const std::size_t cap = std::min(opts.max_n, kCheegerHardCap);
  if (n < 2) throw ValidationError("Cheeger constant needs n >= 2");
  if (n > cap) {
    throw CapacityError("exhaustive Cheeger enumeration is capped at n = " + std::to_string(cap) +
                        " (got n = " + std::to_string(n) +
                        "); raise the cap or skip the Cheeger computation");
  }
  if (t.size() != n) throw std::invalid_argument("cheeger_exact: transmission size mismatch");

  T total{};
  for (T x : t) total += x;
  if constexpr (std::is_integral_v<T>) {
    if (total >= kMaxExactTotal) throw CapacityError("distances too large for exact Cheeger arithmetic");
  }

  // into_s[x] = D({x}, S) for the current S.
  std::vector<T> into_s(n);
  for (std::size_t x = 0; x < n; ++x) into_s[x] = d(x, 0);
  std::vector<bool> in_s(n, false);
  in_s[0] = true;
  Subset mask = 1;
  T cross = t[0];
  T vol = t[0];

  const Subset full = (n == 64) ? ~Subset{0} : (Subset{1} << n) - 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);

  CheegerResult<T> best;
  bool have_best = false;
  T best_num{};
  T best_den{};
  // Relative tie window for floating distances; exact for integers.
  constexpr double kRealTieTol = 1e-12;

  auto consider = [&]() {
    const T den = std::min(vol, total - vol);
    int cmp;
    if (!have_best) {
      cmp = -1;
    } else if constexpr (std::is_integral_v<T>) {
      auto o = compare_fractions(cross, den, best_num, best_den);
      cmp = o < 0 ? -1 : (o > 0 ? 1 : 0);
    } else {
      const double a = cross / den;
      const double b = best_num / best_den;
      const double scale = std::max(std::abs(a), std::abs(b));
      cmp = std::abs(a - b) <= kRealTieTol * scale ? 0 : (a < b ? -1 : 1);
    }
    if (cmp < 0) {
      have_best = true;
      best_num = cross;
      best_den = den;
      best.cut = Cut<T>{mask, cross, vol, total - vol};
      best.ties = 1;
    } else if (cmp == 0) {
      ++best.ties;
    }
  };

  consider();
  for (std::uint64_t k = 1; k < steps; ++k) {
    const std::size_t x = 1 + static_cast<std::size_t>(std::countr_zero(k));
    const auto row = d.row(x);
    if (in_s[x]) {
      cross += 2 * into_s[x] - t[x];
      vol -= t[x];
      for (std::size_t y = 0; y < n; ++y) into_s[y] -= row[y];
    } else {
      cross += t[x] - 2 * into_s[x];
      vol += t[x];
      for (std::size_t y = 0; y < n; ++y) into_s[y] += row[y];
    }
    in_s[x] = !in_s[x];
    mask ^= Subset{1} << x;
    if (mask == full) continue;
    consider();
  }
  best.h = ratio(best_num, best_den);
  return best;
}

template Cut<std::int64_t> make_cut(const IntDistanceMatrix&, const TransmissionVector<std::int64_t>&, Subset);
template Cut<double> make_cut(const RealDistanceMatrix&, const TransmissionVector<double>&, Subset);
template Rational h_of_cut(const IntDistanceMatrix&, const TransmissionVector<std::int64_t>&, Subset);
template double h_of_cut(const RealDistanceMatrix&, const TransmissionVector<double>&, Subset);
template CheegerResult<std::int64_t> cheeger_exact(const IntDistanceMatrix&,
                                                   const TransmissionVector<std::int64_t>&, CheegerOptions);
template CheegerResult<double> cheeger_exact(const RealDistanceMatrix&, const TransmissionVector<double>&,
                                             CheegerOptions);

Rational cheeger_floor(std::size_t n) {
  if (n < 2) throw ValidationError("Cheeger floor needs n >= 2");
  const auto m = static_cast<std::int64_t>(n);
  if (n % 2 == 0) return Rational(m, 3 * m - 4);
  return Rational(m + 1, 3 * m - 5);
}

Rational cut_slack(const IntDistanceMatrix& d, Subset subset) {
  const std::size_t n = d.size();
  require_subset<std::int64_t>(n, subset);
  std::int64_t s = 0;
  std::int64_t inner = 0;
  std::int64_t cross = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!(subset >> u & 1U)) continue;
    ++s;
    for (std::size_t v = 0; v < n; ++v) {
      if (subset >> v & 1U) {
        inner += d(u, v);
      } else {
        cross += d(u, v);
      }
    }
  }
  const std::int64_t sbar = static_cast<std::int64_t>(n) - s;
  return Rational(2 * (s - 1) * cross - sbar * inner, sbar);
}

bool complement_is_geodesic(const IntDistanceMatrix& d, Subset subset) {
  const std::size_t n = d.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!(subset >> u & 1U)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || !(subset >> v & 1U)) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (subset >> w & 1U) continue;
        if (d(u, v) != d(u, w) + d(w, v)) return false;
      }
    }
  }
  return true;
}

CheegerBoundReport check_cheeger_bounds(const CheegerResult<std::int64_t>& res, double gap,
                                        std::size_t n, double tol) {
  CheegerBoundReport out;
  out.floor = cheeger_floor(n);
  const Rational& h = res.h;
  const double hd = h.to_double();

  const bool floor_ok = h >= out.floor;
  out.attains_floor = h == out.floor;
  out.checks.add({"h >= floor (exact)", floor_ok, hd, out.floor.to_double(), (h - out.floor).to_double(),
                  "floor " + out.floor.str() + (out.attains_floor ? ", attained" : ", strict")});
  const Rational third(1, 3);
  out.checks.add({"h > 1/3 (exact)", h > third, hd, third.to_double(), (h - third).to_double(), {}});
  out.checks.at_most("h^2/2 <= gap", hd * hd / 2.0, gap, tol);
  out.checks.at_most("gap <= 2h", gap, 2.0 * hd, tol);
  return out;
}

namespace {

template <class T>
nlohmann::json cut_json(const CheegerResult<T>& r, std::size_t n) {
  nlohmann::json j;
  j["subset"] = r.cut.vertices(n);
  j["cross"] = r.cut.cross;
  j["vol"] = r.cut.vol;
  j["vol_complement"] = r.cut.vol_complement;
  j["ties"] = r.ties;
  return j;
}

}  // namespace

nlohmann::json to_json(const CheegerResult<std::int64_t>& r, std::size_t n) {
  nlohmann::json j = cut_json(r, n);
  j["h"] = {{"num", r.h.num()}, {"den", r.h.den()}};
  j["h_decimal"] = r.h.to_double();
  return j;
}

nlohmann::json to_json(const CheegerResult<double>& r, std::size_t n) {
  nlohmann::json j = cut_json(r, n);
  j["h"] = nullptr;
  j["h_decimal"] = r.h;
  return j;
}

}  // namespace dlap

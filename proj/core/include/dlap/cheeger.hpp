#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlap/constants.hpp"
#include "dlap/graph.hpp"
#include "dlap/metric.hpp"
#include "dlap/rational.hpp"
#include "dlap/report.hpp"

namespace dlap {

/// Vertex subset as a bitmask: bit u set iff u is in S.
using Subset = std::uint64_t;

/// Exact for integer distances, floating point otherwise.
template <class T>
using CheegerValue = std::conditional_t<std::is_integral_v<T>, Rational, double>;

/// A proper nonempty cut S | S-bar with its cross-distance sum and volumes.
/// vol = D(S,S) + cross and vol_complement = D(S-bar,S-bar) + cross.
template <class T>
struct Cut {
  Subset subset = 0;
  T cross{};
  T vol{};
  T vol_complement{};

  std::vector<std::size_t> vertices(std::size_t n) const;
};

template <class T>
struct CheegerResult {
  CheegerValue<T> h{};
  Cut<T> cut;
  /// Number of optimal unordered cuts {S, S-bar}. h(S) = h(S-bar), so the
  /// count over ordered subsets is exactly twice this.
  std::uint64_t ties = 0;
};

struct CheegerOptions {
  std::size_t max_n = 24;
};

/// Hard ceiling for `CheegerOptions::max_n`.
inline constexpr std::size_t kCheegerHardCap = 30;

template <class T>
Cut<T> make_cut(const DistanceMatrix<T>& d, const TransmissionVector<T>& t, Subset subset);

/// h(S) = D(S, S-bar) / min(vol S, vol S-bar).
template <class T>
CheegerValue<T> h_of_cut(const DistanceMatrix<T>& d, const TransmissionVector<T>& t, Subset subset);

/// Minimum of h(S) over all proper nonempty S. Vertex 0 is pinned into S and
/// the remaining vertices are walked in Gray-code order, so each of the
/// 2^{n-1} - 1 cuts costs O(n) to update.
template <class T>
CheegerResult<T> cheeger_exact(const DistanceMatrix<T>& d, const TransmissionVector<T>& t,
                               CheegerOptions opts = {});

extern template Cut<std::int64_t> make_cut(const IntDistanceMatrix&, const TransmissionVector<std::int64_t>&, Subset);
extern template Cut<double> make_cut(const RealDistanceMatrix&, const TransmissionVector<double>&, Subset);
extern template Rational h_of_cut(const IntDistanceMatrix&, const TransmissionVector<std::int64_t>&, Subset);
extern template double h_of_cut(const RealDistanceMatrix&, const TransmissionVector<double>&, Subset);
extern template CheegerResult<std::int64_t> cheeger_exact(const IntDistanceMatrix&,
                                                          const TransmissionVector<std::int64_t>&,
                                                          CheegerOptions);
extern template CheegerResult<double> cheeger_exact(const RealDistanceMatrix&,
                                                    const TransmissionVector<double>&, CheegerOptions);

/// Sharp lower bound on h over n-vertex graphs: n/(3n-4) for even n,
/// (n+1)/(3n-5) for odd n.
Rational cheeger_floor(std::size_t n);

/// (2(s-1)/s-bar) D(S, S-bar) - D(S, S), where D(S, S) runs over ordered
/// pairs. Nonnegative for every metric.
Rational cut_slack(const IntDistanceMatrix& d, Subset subset);

/// True when d(u,v) = d(u,w) + d(w,v) for all distinct u, v in S and every
/// w outside S, i.e. the pointwise condition for zero slack.
bool complement_is_geodesic(const IntDistanceMatrix& d, Subset subset);

struct CheegerBoundReport {
  CheckReport checks;
  Rational floor;
  bool attains_floor = false;
};

/// Exact floor and 1/3 checks plus the two-sided Cheeger inequality
/// h^2/2 <= gap <= 2h within `tol`.
CheegerBoundReport check_cheeger_bounds(const CheegerResult<std::int64_t>& res, double gap,
                                        std::size_t n, double tol = kCheckTolerance);

nlohmann::json to_json(const CheegerResult<std::int64_t>& r, std::size_t n);
nlohmann::json to_json(const CheegerResult<double>& r, std::size_t n);

// -- Equality cases of the Cheeger floor ------------------------------------

enum class EqualityClass {
  None,
  /// Balanced complete bipartite K_{m,m}.
  EvenExtremal,
  /// K_{m,m+1} with at most n-1 edges added inside the larger part.
  OddExtremal,
  /// One of the three sporadic 5-vertex graphs.
  N5Exceptional,
};

struct EqualityClassification {
  EqualityClass kind = EqualityClass::None;
  /// Independent part A (size floor(n/2)) for the bipartite classes.
  std::vector<std::size_t> part;
  /// Edges inside the larger part B.
  std::size_t larger_part_edges = 0;
  /// Edge budgets that appear for the odd family: n - 1 is enforced, n is
  /// the looser count that also appears in the literature.
  std::size_t edge_limit = 0;
  std::size_t edge_limit_alt = 0;
  std::string label;
};

const char* to_string(EqualityClass c) noexcept;

/// Structural classifier; needs a connected graph with n >= 2.
EqualityClassification classify_equality(const Graph& g);

/// The three sporadic 5-vertex equality graphs: P_5, C_4 plus a pendant edge,
/// and C_4 uvwx plus pendant xy plus chord uw.
const std::vector<Graph>& n5_exceptional_graphs();

/// Brute-force isomorphism test (all n! relabelings). Meant for n <= 8.
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace dlap

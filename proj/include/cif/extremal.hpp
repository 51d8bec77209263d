#ifndef CIF_EXTREMAL_HPP
#define CIF_EXTREMAL_HPP

#include "cif/constructions.hpp"
#include "cif/full_space.hpp"
#include "cif/search.hpp"

namespace cif {

enum class Engine { Prefix, Full };
std::string engine_name(Engine e);

/// The form the equality characterization takes for a profile.
enum class Shape {
  Classes,             ///< finitely many classes, all produced by extremal_candidates
  ComplementPair,      ///< r = 2 tight case: F_c = all k_c-sets whose complement is outside F_o
  CommonIntersecting,  ///< r > 2 tight case with a common maximum intersecting family
};
std::string shape_name(Shape s);

struct ExtremalCase {
  Shape shape = Shape::Classes;
  std::size_t center = 0;
  int h = 0;                ///< common uniformity opposite the center
  std::uint64_t lo = 0;     ///< size range of the other family (ComplementPair)
  std::uint64_t hi = 0;
  BigCount bound;
};

/// Classifies p under theorem t17 (descending, n >= k_1 + k_2) or t16
/// (istar set). Throws HypothesisError outside the hypothesis.
ExtremalCase classify_extremal(const Profile& p, TheoremId theorem);

struct ExtremalOptions {
  Engine engine = Engine::Full;
  TheoremId theorem = TheoremId::T17;
  FullSpaceOptions full;
};

/// All optima with their canonical classes (full engine) or optimal size
/// vectors (prefix engine), checked against the characterization.
/// bound_agreement holds iff the optimum equals the bound and every check
/// that applies passes. For CommonIntersecting the classes are reported
/// without a completeness claim.
Certificate enumerate_extremal(const Profile& p, const ExtremalOptions& opts = {});

/// All k-sets whose complement is not in f (uniformity n - k of f).
Family complement_partner_of(const Family& f, int k);

}  // namespace cif

#endif  // CIF_EXTREMAL_HPP

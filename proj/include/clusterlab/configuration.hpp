#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>

#include <json.hpp>

#include "clusterlab/bipartite.hpp"
#include "clusterlab/matrix.hpp"
#include "clusterlab/quiver.hpp"

namespace clusterlab {

enum class Flavor { vector, projective };

/// n vectors in Q^m stored as the columns of an m x n matrix.
struct Configuration {
  int m = 0;
  int n = 0;
  RationalMatrix columns;
  Flavor flavor = Flavor::projective;

  Configuration() = default;
  Configuration(RationalMatrix cols, Flavor f = Flavor::projective);

  /// Column i, 1-based, index taken mod n.
  Vector column(int i) const;
};

enum class Genericity { consecutive, total };

/// Determinant of the columns in I, ascending. Throws InputError unless |I| = m.
Rational plucker(const Configuration& c, IndexSet I);

bool genericity(const Configuration& c, Genericity mode);

/// Column i of the result is column i + k of c (indices mod n).
Configuration cyclic_shift(const Configuration& c, int k);

/// Output column i is the covector of the m-1 columns cyclically preceding i.
/// The vector flavor carries the signs of the boundary covectors.
Configuration dt_geometric(const Configuration& c);

/// Output column i is the covector of columns 2-i, ..., m-i (mod n).
Configuration star_geometric(const Configuration& c);

/// DT written directly as hyperplanes through the predecessors, wedged in
/// increasing cyclic order.
Configuration dt_h_formula(const Configuration& c);

/// Equality modulo GL_m and per-column scaling.
bool equal_projective(const Configuration& a, const Configuration& b);

/// X_f = prod_g Delta_{I(g)}^{eps_fg} for every interior face f.
ClusterPoint<Rational> psi_coords(const Configuration& c, const BipartiteGraph& g);
ClusterPoint<Rational> psi_coords(const Configuration& c, const BipartiteGraph& g, const Analysis& a, const Seed& q);

/// Boundary measurement of values on interior faces, boundary faces set to
/// `boundary` entries when present and 1 otherwise. Column j of the result is
/// the measurement column of marked point j - m.
Configuration chi(const BipartiteGraph& g, const ClusterPoint<Rational>& interior,
                  const ClusterPoint<Rational>& boundary = {});

/// Inverse of psi_coords on g: values 1/X_f on the mirror image of g
/// (i -> n+1-i), the raw boundary measurement there, then star.
Configuration psi_inverse(const BipartiteGraph& g, const ClusterPoint<Rational>& interior);

/// Integer entries in [-9, 9], resampled until totally generic.
Configuration random_configuration(int m, int n, std::mt19937_64& rng);

nlohmann::json to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace clusterlab

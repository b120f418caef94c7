#ifndef GRAPHMOTIVE_KIRCHHOFF_HPP
#define GRAPHMOTIVE_KIRCHHOFF_HPP

#include <cstddef>

#include "graphmotive/graph.hpp"
#include "graphmotive/poly.hpp"

namespace graphmotive {

struct KirchhoffResult {
  EdgePoly psi;
  std::size_t loop_number = 0;
};

// Sum over maximal spanning forests of the product of the edge variables not
// in the forest. Variable t_{i+1} belongs to edge i.
KirchhoffResult psi(const MultiGraph& g);

// Number of maximal spanning forests, by the matrix-tree theorem (product of
// reduced Laplacian determinants over components).
Integer spanning_forest_count(const MultiGraph& g);

// Psi = t_e F + G with F = dPsi/dt_e and G = Psi|_{t_e = 0}.
struct DelConSplit {
  EdgePoly F;
  EdgePoly G;
  bool F_zero = false;  // e is a bridge
  bool G_zero = false;  // e is a loop
};
DelConSplit deletion_contraction_split(const MultiGraph& g, std::size_t e);
DelConSplit deletion_contraction_split(const EdgePoly& psi, std::size_t e);

}  // namespace graphmotive

#endif

#pragma once

#include <string>
#include <vector>

#include "polydist/ncseries.hpp"

namespace polydist {

/// Bookkeeping for the composite path a morphism or report refers to, e.g.
/// "ε_ζ·j_ζ(γ)" or "π_2(γ)". Atoms compose left to right.
struct PathLabel {
  std::vector<std::string> atoms;

  PathLabel then(std::string atom) const {
    PathLabel out = *this;
    out.atoms.push_back(std::move(atom));
    return out;
  }
  std::string to_string() const;
};

/// π_{rn,r}: level rn → level r.
///   standard: X ↦ nX, Y_j ↦ e^{kX} Y_i e^{−kX} with j = i + kr
///   tilde:    X ↦ nX, Y_j ↦ Y_{j mod r}
AlgebraMorphism pi_morphism(std::uint32_t r, std::uint32_t n, Flavor flavor, std::size_t degree);

/// j_ζ for ζ = e^{−2πis/n}, conjugated by δ_ζ (standard) or ε_ζ (tilde): level n → level 1.
///   X ↦ X; tilde: Y_s ↦ Y; standard: Y_0 ↦ Y when s = 0, else Y_s ↦ e^{ad X}(Y); other Y's ↦ 0.
AlgebraMorphism j_zeta_morphism(std::uint32_t n, std::uint32_t s, Flavor flavor, std::size_t degree);

/// Provenance label of the path the j_ζ morphism transports.
PathLabel j_zeta_path(std::uint32_t n, std::uint32_t s, Flavor flavor);
PathLabel pi_path(std::uint32_t r, std::uint32_t n);

/// Lie log of σ(δ_ζ)δ_ζ^{−1} for ζ = e^{2πis/n}: (s/n)(χ − 1)·X at level 1; zero for ε-paths.
NCSeries<SymbolicPoly> galois_twist_delta(std::uint32_t s, std::uint32_t n, Flavor flavor,
                                          const SymbolicPoly::Context& ring, std::size_t degree,
                                          std::string_view chi_symbol = "chi");

}  // namespace polydist

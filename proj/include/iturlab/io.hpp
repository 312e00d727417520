#ifndef ITURLAB_IO_HPP
#define ITURLAB_IO_HPP

#include <string>

#include "iturlab/core.hpp"
#include "iturlab/matgeo.hpp"

namespace iturlab {

/// Load a density from CSV with header `x,value`; the x column holds the
/// midpoint coordinates of a uniform grid (spacing enforced to 1e-9
/// relative).
GriddedDensity load_density(const std::string& path);

/// Load a wavefunction from CSV with header `x,re,im`.
GriddedWaveFunction load_wavefunction(const std::string& path, double hbar);

/// Load a complex matrix from a headerless CSV of row-major entries,
/// each `re` or `re+imj` (e.g. `0.5`, `1-2j`, `0.70710678j`).
TransformMatrix load_matrix(const std::string& path);

void save_density(const GriddedDensity& density, const std::string& path);
void save_wavefunction(const GriddedWaveFunction& psi, const std::string& path);

/// Format a double with 9 significant digits (the library-wide output
/// convention; bit-stable across runs).
std::string format_number(double value);

} // namespace iturlab

#endif

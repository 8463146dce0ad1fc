#pragma once

#include <string>
#include <vector>

#include "nsest/field.hpp"

namespace nsest {

/// NSFLD1 container: ASCII header "NSFLD1 <nx> <ny> <nz> <ncomp>\n" followed
/// by ncomp * nx * ny * nz little-endian IEEE doubles, row-major (x fastest)
/// per component, components back to back. Only cubic grids are accepted on
/// read since every field in this toolkit lives on one.
void write_nsfld(const std::string& path, const std::vector<const ScalarField*>& components);
void write_nsfld(const std::string& path, const ScalarField& u);
void write_nsfld(const std::string& path, const VectorField& u);

std::vector<ScalarField> read_nsfld(const std::string& path);
VectorField read_nsfld_vector(const std::string& path);
ScalarField read_nsfld_scalar(const std::string& path);

} // namespace nsest

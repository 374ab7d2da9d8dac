#pragma once

#include <iosfwd>
#include <string>

#include "willmin/trimesh.hpp"

namespace willmin {

// Wavefront OBJ (v/f records, 1-based indices) and OFF. Format chosen by
// file extension; floats written with 9 significant digits. Polygons with
// more than three sides are fan-triangulated on read.

TriMesh read_mesh(const std::string& path);
void write_mesh(const std::string& path, const TriMesh& mesh);

TriMesh read_obj(std::istream& in);
TriMesh read_off(std::istream& in);
void write_obj(std::ostream& out, const TriMesh& mesh);
void write_off(std::ostream& out, const TriMesh& mesh);

}  // namespace willmin

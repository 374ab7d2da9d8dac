#include "willmin/mesh_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace willmin {

namespace {

std::string lower_ext(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

void fan_triangulate(const std::vector<int>& poly, std::vector<TriMesh::Face>& faces,
                     const char* what) {
  if (poly.size() < 3) throw MeshError(std::string(what) + ": face with fewer than 3 vertices");
  for (std::size_t i = 1; i + 1 < poly.size(); ++i)
    faces.push_back({poly[0], poly[i], poly[i + 1]});
}

std::string fmt9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

TriMesh read_obj(std::istream& in) {
  std::vector<Vec3d> vertices;
  std::vector<TriMesh::Face> faces;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3d p;
      if (!(ls >> p.x >> p.y >> p.z))
        throw MeshError("obj line " + std::to_string(lineno) + ": malformed vertex");
      vertices.push_back(p);
    } else if (tag == "f") {
      std::vector<int> poly;
      std::string tok;
      while (ls >> tok) {
        // "f 3", "f 3/1", "f 3/1/2", "f 3//2" all reference vertex 3.
        const int idx = std::atoi(tok.c_str());
        if (idx <= 0 || idx > static_cast<int>(vertices.size()))
          throw MeshError("obj line " + std::to_string(lineno) + ": face index " + tok +
                          " out of range");
        poly.push_back(idx - 1);
      }
      fan_triangulate(poly, faces, "obj");
    }
    // vn/vt/usemtl and friends are ignored.
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

TriMesh read_off(std::istream& in) {
  std::string header;
  if (!(in >> header) || header != "OFF") throw MeshError("off: missing OFF header");
  long nv = 0, nf = 0, ne = 0;
  if (!(in >> nv >> nf >> ne)) throw MeshError("off: malformed counts");
  std::vector<Vec3d> vertices(static_cast<std::size_t>(nv));
  for (auto& p : vertices)
    if (!(in >> p.x >> p.y >> p.z)) throw MeshError("off: malformed vertex");
  std::vector<TriMesh::Face> faces;
  faces.reserve(static_cast<std::size_t>(nf));
  for (long f = 0; f < nf; ++f) {
    int n = 0;
    if (!(in >> n) || n < 3) throw MeshError("off: malformed face");
    std::vector<int> poly(n);
    for (int& idx : poly) {
      if (!(in >> idx) || idx < 0 || idx >= nv)
        throw MeshError("off: face index out of range");
    }
    fan_triangulate(poly, faces, "off");
  }
  return TriMesh(std::move(vertices), std::move(faces));
}

void write_obj(std::ostream& out, const TriMesh& mesh) {
  for (const Vec3d& p : mesh.positions())
    out << "v " << fmt9(p.x) << ' ' << fmt9(p.y) << ' ' << fmt9(p.z) << '\n';
  for (const auto& f : mesh.faces())
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_off(std::ostream& out, const TriMesh& mesh) {
  out << "OFF\n" << mesh.vertex_count() << ' ' << mesh.face_count() << " 0\n";
  for (const Vec3d& p : mesh.positions())
    out << fmt9(p.x) << ' ' << fmt9(p.y) << ' ' << fmt9(p.z) << '\n';
  for (const auto& f : mesh.faces())
    out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

TriMesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file: " + path);
  const std::string ext = lower_ext(path);
  if (ext == "obj") return read_obj(in);
  if (ext == "off") return read_off(in);
  throw MeshError("unsupported mesh format: " + path);
}

void write_mesh(const std::string& path, const TriMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw MeshError("cannot open mesh file for writing: " + path);
  const std::string ext = lower_ext(path);
  if (ext == "obj") write_obj(out, mesh);
  else if (ext == "off") write_off(out, mesh);
  else throw MeshError("unsupported mesh format: " + path);
  if (!out) throw MeshError("error writing mesh file: " + path);
}

}  // namespace willmin

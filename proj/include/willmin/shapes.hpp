#pragma once

#include <cstdint>

#include "willmin/trimesh.hpp"

namespace willmin {

// Procedural test fixtures. All shapes are closed and outward oriented.

// Subdivided icosahedron projected to a sphere. Subdivision level L has
// 10*4^L + 2 vertices (L=2: 162, L=3: 642, L=4: 2562).
TriMesh icosphere(int subdivisions, double radius = 1.0);

// Icosphere scaled per axis; vertices lie exactly on the ellipsoid
// x^2/a^2 + y^2/b^2 + z^2/c^2 = 1.
TriMesh ellipsoid(int subdivisions, double a, double b, double c);

// Torus of major radius R and tube radius r.
TriMesh torus(double major_radius, double tube_radius, int major_segments,
              int minor_segments);

// Regular tetrahedron with the given edge length.
TriMesh tetrahedron(double edge_length = 1.0);

// Unit icosphere with random radial + tangential vertex noise. The same
// seed always yields the same mesh.
TriMesh perturbed_sphere(int subdivisions, double amplitude, std::uint32_t seed);

// Hexagonal drum: two flat triangulated caps joined by a side band. The
// two cap centers are interior vertices of exactly flat regions.
TriMesh hex_drum(double radius = 1.0, double height = 0.5);

// Flat plate over a 5x3 cell grid with two square through-holes; a closed
// orientable surface of genus 2 (Euler characteristic -2).
TriMesh genus2_plate();

}  // namespace willmin

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simplexity {

// A vertex of the 0/1 n-cube packed into a bit mask. Coordinate j
// (1-based) lives at bit (n - j), so the mask equals the vertex string
// "x1 x2 ... xn" read as a base-2 integer, and ascending mask order is
// lexicographic order of vertex strings.
using VertexBits = std::uint32_t;

constexpr int kMaxDim = 20;

inline int coordinate(VertexBits v, int j, int n) {
    return static_cast<int>((v >> (n - j)) & 1u);
}

VertexBits vertex_from_string(const std::string& s, int n);
std::string vertex_to_string(VertexBits v, int n);

// An n-dimensional simplex with n+1 distinct vertices of the 0/1 n-cube.
// Vertices are always stored in canonical order: ascending by mask, which
// fixes one representative per vertex set. Construction enforces this.
class Simplex01 {
  public:
    Simplex01(int dim, std::vector<VertexBits> vertices);

    static Simplex01 from_strings(int dim, const std::vector<std::string>& vertex_strings);

    int dim() const { return dim_; }
    const std::vector<VertexBits>& vertices() const { return vertices_; }
    VertexBits vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

    std::vector<std::string> vertex_strings() const;

    friend bool operator==(const Simplex01&, const Simplex01&) = default;

  private:
    int dim_;
    std::vector<VertexBits> vertices_;  // sorted ascending, pairwise distinct
};

}  // namespace simplexity

#include "simplexity/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplexity {

VertexBits vertex_from_string(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("vertex string \"" + s + "\" has length " +
                                    std::to_string(s.size()) + ", expected " + std::to_string(n));
    VertexBits v = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("vertex string \"" + s + "\" contains a character other than 0/1");
        v = (v << 1) | static_cast<VertexBits>(c - '0');
    }
    return v;
}

std::string vertex_to_string(VertexBits v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 1; j <= n; ++j)
        if (coordinate(v, j, n)) s[static_cast<std::size_t>(j - 1)] = '1';
    return s;
}

Simplex01::Simplex01(int dim, std::vector<VertexBits> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1 || dim_ > kMaxDim)
        throw std::invalid_argument("simplex dimension " + std::to_string(dim_) + " out of range");
    if (vertices_.size() != static_cast<std::size_t>(dim_) + 1)
        throw std::invalid_argument("simplex in dimension " + std::to_string(dim_) + " needs " +
                                    std::to_string(dim_ + 1) + " vertices, got " +
                                    std::to_string(vertices_.size()));
    const VertexBits limit = VertexBits{1} << dim_;
    for (VertexBits v : vertices_)
        if (v >= limit) throw std::invalid_argument("vertex mask out of range for dimension");
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i - 1])
            throw std::invalid_argument("simplex has a repeated vertex: " +
                                        vertex_to_string(vertices_[i], dim_));
}

Simplex01 Simplex01::from_strings(int dim, const std::vector<std::string>& vertex_strings) {
    std::vector<VertexBits> verts;
    verts.reserve(vertex_strings.size());
    for (const auto& s : vertex_strings) verts.push_back(vertex_from_string(s, dim));
    return Simplex01(dim, std::move(verts));
}

std::vector<std::string> Simplex01::vertex_strings() const {
    std::vector<std::string> out;
    out.reserve(vertices_.size());
    for (VertexBits v : vertices_) out.push_back(vertex_to_string(v, dim_));
    return out;
}

}  // namespace simplexity

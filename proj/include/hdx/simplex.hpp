#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "hdx/errors.hpp"

namespace hdx {

using VertexId = std::int32_t;
using VertexList = std::vector<VertexId>;

/**
 * A simplex held as a sorted list of distinct non-negative vertex ids.
 *
 * The empty simplex (dimension -1) is a valid value and is the unique
 * face of every complex at dimension -1.
 */
class Simplex {
public:
    Simplex() = default;

    Simplex(std::initializer_list<VertexId> verts)
        : Simplex(VertexList(verts)) {}

    explicit Simplex(VertexList verts) : verts_(std::move(verts)) {
        std::sort(verts_.begin(), verts_.end());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (verts_[i] < 0) {
                throw DomainError("simplex vertex ids must be non-negative");
            }
            if (i > 0 && verts_[i] == verts_[i - 1]) {
                throw DomainError("simplex has a repeated vertex: " +
                                  std::to_string(verts_[i]));
            }
        }
    }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    const VertexList& vertices() const { return verts_; }
    VertexId operator[](std::size_t i) const { return verts_[i]; }

    bool contains(VertexId v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool contains(const Simplex& other) const {
        return std::includes(verts_.begin(), verts_.end(),
                             other.verts_.begin(), other.verts_.end());
    }

    bool disjoint_from(const Simplex& other) const {
        auto a = verts_.begin();
        auto b = other.verts_.begin();
        while (a != verts_.end() && b != other.verts_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return false;
        }
        return true;
    }

    /** Facet obtained by deleting the vertex at position `i`. */
    Simplex facet(std::size_t i) const {
        VertexList out;
        out.reserve(verts_.size() - 1);
        for (std::size_t j = 0; j < verts_.size(); ++j) {
            if (j != i) out.push_back(verts_[j]);
        }
        return Simplex::presorted(std::move(out));
    }

    /** Union with a disjoint simplex. */
    Simplex unite(const Simplex& other) const {
        VertexList out;
        out.reserve(verts_.size() + other.verts_.size());
        std::merge(verts_.begin(), verts_.end(), other.verts_.begin(),
                   other.verts_.end(), std::back_inserter(out));
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (out[i] == out[i - 1]) {
                throw DomainError("union of non-disjoint simplices");
            }
        }
        return Simplex::presorted(std::move(out));
    }

    /** Set difference: vertices of *this not in `other`. */
    Simplex minus(const Simplex& other) const {
        VertexList out;
        std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(),
                            other.verts_.end(), std::back_inserter(out));
        return Simplex::presorted(std::move(out));
    }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.verts_ == b.verts_;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b) {
        return !(a == b);
    }
    /** Lexicographic order on vertex lists; the canonical face order. */
    friend bool operator<(const Simplex& a, const Simplex& b) {
        return a.verts_ < b.verts_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(verts_[i]);
        }
        return s + "}";
    }

    /** Wraps a vertex list that is already sorted and duplicate-free. */
    static Simplex presorted(VertexList verts) {
        Simplex s;
        s.verts_ = std::move(verts);
        return s;
    }

private:
    VertexList verts_;
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    return os << s.to_string();
}

}  // namespace hdx

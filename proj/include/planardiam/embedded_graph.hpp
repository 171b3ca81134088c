#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "planardiam/errors.hpp"

namespace planardiam {

inline constexpr int kNone = -1;

// One undirected edge of the input. Edge i materializes as darts 2i (u->v)
// and 2i+1 (v->u).
struct EdgeSpec {
    int u = 0;
    int v = 0;
    double length = 0.0;
    bool artificial = false;
};

// One face boundary. Applying twin-then-next_around_origin to each dart
// yields its successor in the list (cyclically).
struct FaceCycle {
    std::vector<int> darts;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void flag(const std::string& what) {
        ok = false;
        violations.push_back(what);
    }
};

// Dart-based planar multigraph with an explicit rotation system.
// Structurally immutable after construction; the marked flags are the only
// mutable state (they carry the recursion's bookkeeping, not topology).
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    // Validating constructor for external inputs.
    static EmbeddedGraph build(int vertex_count,
                               const std::vector<EdgeSpec>& edges,
                               const std::vector<std::vector<int>>& rotations) {
        EmbeddedGraph g = from_parts(vertex_count, edges, rotations);
        ValidationReport rep = g.validate();
        if (!rep.ok) {
            const std::string& first = rep.violations.front();
            if (first.find("euler") != std::string::npos)
                fail(ErrorCode::NonPlanarEmbedding, first);
            if (first.find("length") != std::string::npos)
                fail(ErrorCode::NegativeLength, first);
            fail(ErrorCode::MalformedRotation, first);
        }
        return g;
    }

    // Assembles without running the full certificate. Internal transforms use
    // this; they produce graphs that are valid by construction and the driver
    // can re-certify behind its validation flag.
    static EmbeddedGraph from_parts(int vertex_count,
                                    const std::vector<EdgeSpec>& edges,
                                    const std::vector<std::vector<int>>& rotations) {
        require(vertex_count >= 0, ErrorCode::MalformedRotation, "negative vertex count");
        require(static_cast<int>(rotations.size()) == vertex_count, ErrorCode::MalformedRotation,
                "rotation list count != vertex count");
        EmbeddedGraph g;
        g.vertex_count_ = vertex_count;
        const int dart_count = static_cast<int>(edges.size()) * 2;
        g.origin_.assign(dart_count, kNone);
        g.twin_.assign(dart_count, kNone);
        g.next_.assign(dart_count, kNone);
        g.length_.assign(dart_count, 0.0);
        g.artificial_.assign(dart_count, 0);
        g.marked_.assign(vertex_count, 1);
        g.first_dart_.assign(vertex_count, kNone);
        g.degree_.assign(vertex_count, 0);

        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            const EdgeSpec& e = edges[i];
            require(e.u >= 0 && e.u < vertex_count && e.v >= 0 && e.v < vertex_count,
                    ErrorCode::MalformedRotation, "edge endpoint out of range");
            require(e.u != e.v, ErrorCode::ValidationError, "self-loop edge rejected");
            require(e.length >= 0.0, ErrorCode::NegativeLength,
                    "edge " + std::to_string(i) + " has negative length");
            const int d0 = 2 * i, d1 = 2 * i + 1;
            g.origin_[d0] = e.u;
            g.origin_[d1] = e.v;
            g.twin_[d0] = d1;
            g.twin_[d1] = d0;
            g.length_[d0] = g.length_[d1] = e.length;
            g.artificial_[d0] = g.artificial_[d1] = e.artificial ? 1 : 0;
        }

        std::vector<char> seen(dart_count, 0);
        for (int v = 0; v < vertex_count; ++v) {
            const std::vector<int>& rot = rotations[v];
            for (std::size_t j = 0; j < rot.size(); ++j) {
                const int d = rot[j];
                require(d >= 0 && d < dart_count, ErrorCode::MalformedRotation,
                        "rotation references unknown dart");
                require(!seen[d], ErrorCode::MalformedRotation, "dart appears twice in rotations");
                require(g.origin_[d] == v, ErrorCode::MalformedRotation,
                        "dart listed at a vertex that is not its origin");
                seen[d] = 1;
                g.next_[d] = rot[(j + 1) % rot.size()];
            }
            if (!rot.empty()) g.first_dart_[v] = rot[0];
            g.degree_[v] = static_cast<int>(rot.size());
        }
        for (int d = 0; d < dart_count; ++d)
            require(seen[d], ErrorCode::MalformedRotation, "dart missing from rotations");
        return g;
    }

    int vertex_count() const { return vertex_count_; }
    int dart_count() const { return static_cast<int>(origin_.size()); }
    int edge_count() const { return dart_count() / 2; }

    int origin(int d) const { return origin_[d]; }
    int twin(int d) const { return twin_[d]; }
    int next(int d) const { return next_[d]; }
    int head(int d) const { return origin_[twin_[d]]; }
    double length(int d) const { return length_[d]; }
    bool artificial(int d) const { return artificial_[d] != 0; }

    // Successor of d along its face boundary.
    int face_successor(int d) const { return next_[twin_[d]]; }

    int first_dart(int v) const { return first_dart_[v]; }
    int degree(int v) const { return degree_[v]; }

    bool marked(int v) const { return marked_[v] != 0; }
    void set_marked(int v, bool m) { marked_[v] = m ? 1 : 0; }
    void set_all_marked(bool m) { std::fill(marked_.begin(), marked_.end(), m ? char(1) : char(0)); }
    int marked_count() const {
        int c = 0;
        for (char m : marked_) c += m;
        return c;
    }
    const std::vector<char>& marks() const { return marked_; }
    void set_marks(std::vector<char> marks) {
        require(static_cast<int>(marks.size()) == vertex_count_, ErrorCode::ValidationError,
                "marks size mismatch");
        marked_ = std::move(marks);
    }

    template <class F>
    void for_darts_at(int v, F&& fn) const {
        const int d0 = first_dart_[v];
        if (d0 == kNone) return;
        int d = d0;
        do {
            fn(d);
            d = next_[d];
        } while (d != d0);
    }

    std::vector<int> darts_at(int v) const {
        std::vector<int> out;
        out.reserve(degree_[v]);
        for_darts_at(v, [&](int d) { out.push_back(d); });
        return out;
    }

    // Lists every face once. Each cycle starts at its smallest dart id and
    // faces appear ordered by that dart id.
    std::vector<FaceCycle> faces() const {
        std::vector<FaceCycle> out;
        std::vector<char> seen(dart_count(), 0);
        for (int d = 0; d < dart_count(); ++d) {
            if (seen[d]) continue;
            FaceCycle f;
            int cur = d;
            do {
                seen[cur] = 1;
                f.darts.push_back(cur);
                cur = face_successor(cur);
            } while (cur != d);
            out.push_back(std::move(f));
        }
        return out;
    }

    // Connectivity over all edges (artificial included).
    bool connected_structurally() const { return connected_impl(true); }
    // Connectivity over traversable (non-artificial) edges only.
    bool connected_real() const { return connected_impl(false); }

    // Full structural certificate: twin involution, rotation permutation,
    // per-component Euler formula, and length sanity.
    ValidationReport validate() const {
        ValidationReport rep;
        const int nd = dart_count();

        for (int d = 0; d < nd; ++d) {
            if (twin_[d] < 0 || twin_[d] >= nd || twin_[twin_[d]] != d) {
                rep.flag("twin involution broken at dart " + std::to_string(d));
                return rep;
            }
            if (twin_[d] == d) rep.flag("twin fixed point at dart " + std::to_string(d));
            if (origin_[d] < 0 || origin_[d] >= vertex_count_)
                rep.flag("dart origin out of range at dart " + std::to_string(d));
        }
        if (!rep.ok) return rep;

        for (int d = 0; d < nd; ++d) {
            if (origin_[d] == origin_[twin_[d]])
                rep.flag("self-loop at dart " + std::to_string(d));
            if (length_[d] < 0.0) rep.flag("negative length at dart " + std::to_string(d));
            if (length_[d] != length_[twin_[d]])
                rep.flag("twin darts disagree on length at dart " + std::to_string(d));
            if (artificial_[d] != artificial_[twin_[d]])
                rep.flag("twin darts disagree on artificial flag at dart " + std::to_string(d));
        }

        // Rotation system: next_ restricted to each vertex's darts must be a
        // single cycle covering exactly the darts originating there.
        std::vector<char> seen(nd, 0);
        for (int v = 0; v < vertex_count_; ++v) {
            const int d0 = first_dart_[v];
            if (d0 == kNone) {
                if (degree_[v] != 0) rep.flag("degree mismatch at isolated vertex " + std::to_string(v));
                continue;
            }
            int d = d0, steps = 0;
            do {
                if (d < 0 || d >= nd || origin_[d] != v || seen[d]) {
                    rep.flag("rotation not a per-vertex permutation at vertex " + std::to_string(v));
                    return rep;
                }
                seen[d] = 1;
                d = next_[d];
                if (++steps > nd) {
                    rep.flag("rotation cycle does not close at vertex " + std::to_string(v));
                    return rep;
                }
            } while (d != d0);
            if (steps != degree_[v])
                rep.flag("stored degree mismatch at vertex " + std::to_string(v));
        }
        for (int d = 0; d < nd; ++d)
            if (!seen[d]) {
                rep.flag("dart unreachable from any rotation: " + std::to_string(d));
                return rep;
            }

        // Per-component Euler certificate. Isolated vertices count one face.
        std::vector<int> comp(vertex_count_, -1);
        int comp_count = 0;
        std::vector<int> stack;
        for (int s = 0; s < vertex_count_; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = comp_count;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for_darts_at(v, [&](int d) {
                    int w = head(d);
                    if (comp[w] == -1) {
                        comp[w] = comp_count;
                        stack.push_back(w);
                    }
                });
            }
            ++comp_count;
        }
        std::vector<long long> cv(comp_count, 0), ce(comp_count, 0), cf(comp_count, 0);
        for (int v = 0; v < vertex_count_; ++v) {
            cv[comp[v]]++;
            if (degree_[v] == 0) cf[comp[v]]++;  // isolated vertex: one face
        }
        for (int d = 0; d < nd; ++d)
            if (d < twin_[d]) ce[comp[origin_[d]]]++;
        for (const FaceCycle& f : faces()) cf[comp[origin_[f.darts.front()]]]++;
        for (int c = 0; c < comp_count; ++c) {
            if (cv[c] - ce[c] + cf[c] != 2)
                rep.flag("euler formula violated in component " + std::to_string(c) + ": V=" +
                         std::to_string(cv[c]) + " E=" + std::to_string(ce[c]) + " F=" +
                         std::to_string(cf[c]));
        }
        return rep;
    }

    // Testing hook: deliberately damage the twin pointer of one dart.
    void corrupt_twin_for_test(int d, int t) { twin_[d] = t; }

private:
    bool connected_impl(bool include_artificial) const {
        if (vertex_count_ == 0) return true;
        std::vector<char> vis(vertex_count_, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const int d0 = first_dart_[v];
            if (d0 == kNone) continue;
            int d = d0;
            do {
                if (include_artificial || !artificial_[d]) {
                    int w = head(d);
                    if (!vis[w]) {
                        vis[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
                }
                d = next_[d];
            } while (d != d0);
        }
        return reached == vertex_count_;
    }

    int vertex_count_ = 0;
    std::vector<int> origin_, twin_, next_;
    std::vector<double> length_;
    std::vector<char> artificial_;
    std::vector<char> marked_;
    std::vector<int> first_dart_;
    std::vector<int> degree_;
};

}  // namespace planardiam

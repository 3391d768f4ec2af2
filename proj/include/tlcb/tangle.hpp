#pragma once

// Crossing-free decorated tangles: non-crossing perfect matchings of north
// and south boundary nodes, with an ordered sequence of decorations on each
// edge.  Nodes are numbered from 1 at the western end of each face.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tlcb {

enum class Deco : char { circle = 'c', square = 's' };
enum class Face : char { north = 'N', south = 'S' };

struct Endpoint {
  Face face;
  int index;  // 1-based
  auto operator<=>(const Endpoint&) const = default;
};

/// An edge between two boundary nodes, oriented so that a < b (north before
/// south, then by index).  Decorations are listed in traversal order a -> b.
struct Edge {
  Endpoint a, b;
  std::vector<Deco> decos;
  bool propagating() const { return a.face != b.face; }
  int count(Deco d) const;
  auto operator<=>(const Edge&) const = default;
};

enum class EdgeType { p1, p2, p3 };
std::string to_string(EdgeType t);

class Tangle {
 public:
  Tangle() = default;
  /// Validates: perfect matching, non-crossing, decorations only on edges
  /// exposed to the west face.  Throws DomainError otherwise.
  Tangle(int n_north, int n_south, std::vector<Edge> edges);

  static Tangle identity(int n);
  /// U_i on n strands: cup and cap at (i, i+1), circled iff i == 1.
  static Tangle generator(int n, int i);
  /// "n=3; N1-N2[c]; S1-S2[c]; N3-S3".  A single n means n north and n south
  /// nodes; "n=3,1" gives 3 north and 1 south.
  static Tangle parse(std::string_view text);
  std::string to_string() const;

  int n_north() const { return n_north_; }
  int n_south() const { return n_south_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(Endpoint e) const;
  /// Exposed to the west face: not nested inside another edge when the
  /// boundary is read N1..Nn, Sm..S1.
  bool exposed(const Edge& e) const;
  EdgeType edge_type(const Edge& e) const;
  int propagating_count() const;
  int decoration_count() const;
  /// Every decoration replaced by d.
  Tangle with_decorations(Deco d) const;
  /// Reflection in the horizontal axis (north and south faces swapped).
  Tangle reflected() const;

  auto operator<=>(const Tangle&) const = default;

 private:
  int position(Endpoint e) const;

  int n_north_ = 0, n_south_ = 0;
  std::vector<Edge> edges_;
};

/// Result of stacking two tangles without applying any reduction.
struct RawComposite {
  Tangle tangle;
  std::vector<std::vector<Deco>> loops;  // decorations met along each closed curve
};

/// `top` stacked on `bottom`: top's south face glued to bottom's north face.
RawComposite compose_raw(const Tangle& top, const Tangle& bottom);

/// All non-crossing matchings on n north and n south nodes, undecorated.
std::vector<Tangle> noncrossing_matchings(int n);

}  // namespace tlcb

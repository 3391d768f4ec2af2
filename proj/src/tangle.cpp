#include "tlcb/tangle.hpp"

#include "tlcb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace tlcb {

namespace {

std::string endpoint_text(Endpoint e) { return std::string(1, static_cast<char>(e.face)) + std::to_string(e.index); }

std::string deco_text(const std::vector<Deco>& d) {
  if (d.empty()) return "";
  std::string s = "[";
  for (Deco x : d) s += static_cast<char>(x);
  return s + "]";
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Endpoint parse_endpoint(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'N' && s[0] != 'S')) throw DomainError("bad tangle endpoint '" + s + "'");
  try {
    std::size_t used = 0;
    const int idx = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw DomainError("bad tangle endpoint '" + s + "'");
    return {static_cast<Face>(s[0]), idx};
  } catch (const std::logic_error&) {
    throw DomainError("bad tangle endpoint '" + s + "'");
  }
}

}  // namespace

int Edge::count(Deco d) const { return static_cast<int>(std::count(decos.begin(), decos.end(), d)); }

std::string to_string(EdgeType t) {
  switch (t) {
    case EdgeType::p1: return "p1";
    case EdgeType::p2: return "p2";
    case EdgeType::p3: return "p3";
  }
  return "?";
}

Tangle::Tangle(int n_north, int n_south, std::vector<Edge> edges)
    : n_north_(n_north), n_south_(n_south), edges_(std::move(edges)) {
  if (n_north < 0 || n_south < 0 || (n_north + n_south) % 2)
    throw DomainError("tangle needs an even number of boundary nodes");
  std::vector<int> seen(static_cast<std::size_t>(n_north + n_south), 0);
  for (auto& e : edges_) {
    if (e.b < e.a) {
      std::swap(e.a, e.b);
      std::reverse(e.decos.begin(), e.decos.end());
    }
    for (Endpoint p : {e.a, e.b}) {
      const int limit = p.face == Face::north ? n_north : n_south;
      if (p.index < 1 || p.index > limit) throw DomainError("tangle endpoint " + endpoint_text(p) + " out of range");
      if (seen[static_cast<std::size_t>(position(p))]++) throw DomainError("tangle node " + endpoint_text(p) + " used twice");
    }
    if (e.a == e.b) throw DomainError("tangle edge joins a node to itself");
  }
  if (static_cast<int>(edges_.size()) * 2 != n_north + n_south) throw DomainError("tangle matching is not perfect");
  std::sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_)
    for (const auto& f : edges_) {
      const int a = position(e.a), b = position(e.b), c = position(f.a), d = position(f.b);
      const int lo1 = std::min(a, b), hi1 = std::max(a, b), lo2 = std::min(c, d), hi2 = std::max(c, d);
      if (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) throw DomainError("tangle edges cross");
    }
  for (const auto& e : edges_)
    if (!e.decos.empty() && !exposed(e))
      throw DomainError("decorated edge " + endpoint_text(e.a) + "-" + endpoint_text(e.b) + " is not exposed to the west face");
}

int Tangle::position(Endpoint e) const {
  return e.face == Face::north ? e.index - 1 : n_north_ + n_south_ - e.index;
}

Tangle Tangle::identity(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({{Face::north, i}, {Face::south, i}, {}});
  return Tangle(n, n, std::move(edges));
}

Tangle Tangle::generator(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("generator U_" + std::to_string(i) + " needs 1 <= i < " + std::to_string(n));
  std::vector<Deco> d;
  if (i == 1) d.push_back(Deco::circle);
  std::vector<Edge> edges{{{Face::north, i}, {Face::north, i + 1}, d}, {{Face::south, i}, {Face::south, i + 1}, d}};
  for (int k = 1; k <= n; ++k)
    if (k != i && k != i + 1) edges.push_back({{Face::north, k}, {Face::south, k}, {}});
  return Tangle(n, n, std::move(edges));
}

Tangle Tangle::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  if (parts.empty() || parts[0].rfind("n=", 0) != 0) throw DomainError("tangle text must start with n=");
  int nn = 0, ns = 0;
  try {
    const std::string counts = parts[0].substr(2);
    const auto comma = counts.find(',');
    nn = std::stoi(counts.substr(0, comma));
    ns = comma == std::string::npos ? nn : std::stoi(counts.substr(comma + 1));
  } catch (const std::logic_error&) {
    throw DomainError("bad node count in '" + parts[0] + "'");
  }
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::string p = parts[k];
    if (p.empty()) continue;
    std::vector<Deco> decos;
    if (auto br = p.find('['); br != std::string::npos) {
      if (p.back() != ']') throw DomainError("unterminated decoration list in '" + p + "'");
      for (char c : p.substr(br + 1, p.size() - br - 2)) {
        if (c != 'c' && c != 's') throw DomainError("unknown decoration '" + std::string(1, c) + "'");
        decos.push_back(static_cast<Deco>(c));
      }
      p = p.substr(0, br);
    }
    const auto dash = p.find('-');
    if (dash == std::string::npos) throw DomainError("edge '" + p + "' needs two endpoints");
    edges.push_back({parse_endpoint(trim(p.substr(0, dash))), parse_endpoint(trim(p.substr(dash + 1))), decos});
  }
  return Tangle(nn, ns, std::move(edges));
}

std::string Tangle::to_string() const {
  std::string s = "n=" + std::to_string(n_north_);
  if (n_south_ != n_north_) s += "," + std::to_string(n_south_);
  for (const auto& e : edges_) s += "; " + endpoint_text(e.a) + "-" + endpoint_text(e.b) + deco_text(e.decos);
  return s;
}

const Edge& Tangle::edge_at(Endpoint p) const {
  for (const auto& e : edges_)
    if (e.a == p || e.b == p) return e;
  throw DomainError("no edge at " + endpoint_text(p));
}

bool Tangle::exposed(const Edge& e) const {
  const int lo = std::min(position(e.a), position(e.b)), hi = std::max(position(e.a), position(e.b));
  for (const auto& f : edges_) {
    const int l = std::min(position(f.a), position(f.b)), h = std::max(position(f.a), position(f.b));
    if (l < lo && hi < h) return false;
  }
  return true;
}

EdgeType Tangle::edge_type(const Edge& e) const {
  const Endpoint n1{Face::north, 1}, s1{Face::south, 1};
  if (e.a == n1 && e.b == s1) return EdgeType::p1;
  if (e.a == n1 || e.b == n1 || e.a == s1 || e.b == s1) return EdgeType::p2;
  return EdgeType::p3;
}

int Tangle::propagating_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.propagating(); }));
}

int Tangle::decoration_count() const {
  int n = 0;
  for (const auto& e : edges_) n += static_cast<int>(e.decos.size());
  return n;
}

Tangle Tangle::with_decorations(Deco d) const {
  Tangle t = *this;
  for (auto& e : t.edges_) std::fill(e.decos.begin(), e.decos.end(), d);
  return t;
}

Tangle Tangle::reflected() const {
  std::vector<Edge> edges;
  auto flip = [](Endpoint p) { return Endpoint{p.face == Face::north ? Face::south : Face::north, p.index}; };
  for (const auto& e : edges_) edges.push_back({flip(e.a), flip(e.b), e.decos});
  return Tangle(n_south_, n_north_, std::move(edges));
}

RawComposite compose_raw(const Tangle& top, const Tangle& bottom) {
  if (top.n_south() != bottom.n_north())
    throw DomainError("cannot compose: " + std::to_string(top.n_south()) + " south nodes against " +
                      std::to_string(bottom.n_north()) + " north nodes");
  // Half-edges: for each (diagram, endpoint) the partner and the decorations
  // met when leaving from that endpoint.
  struct Half {
    Endpoint to;
    std::vector<Deco> decos;
  };
  std::map<Endpoint, Half> up, down;
  for (const auto& e : top.edges()) {
    up[e.a] = {e.b, e.decos};
    up[e.b] = {e.a, {e.decos.rbegin(), e.decos.rend()}};
  }
  for (const auto& e : bottom.edges()) {
    down[e.a] = {e.b, e.decos};
    down[e.b] = {e.a, {e.decos.rbegin(), e.decos.rend()}};
  }
  const int mid = top.n_south();
  std::vector<char> mid_used(static_cast<std::size_t>(mid) + 1, 0);

  // Walk from a half-edge until reaching an outer node; middle nodes switch
  // between the two diagrams.
  auto walk = [&](bool in_top, Endpoint start, std::vector<Deco>& decos) {
    Endpoint p = start;
    for (;;) {
      const Half& h = (in_top ? up : down).at(p);
      decos.insert(decos.end(), h.decos.begin(), h.decos.end());
      const Endpoint q = h.to;
      const bool outer = in_top ? q.face == Face::north : q.face == Face::south;
      if (outer) return std::pair{in_top, q};
      mid_used[static_cast<std::size_t>(q.index)] = 1;
      in_top = !in_top;
      p = in_top ? Endpoint{Face::south, q.index} : Endpoint{Face::north, q.index};
    }
  };

  std::vector<Edge> edges;
  std::map<std::pair<bool, Endpoint>, bool> done;
  auto outer_start = [&](bool in_top, Endpoint p) {
    if (done.count({in_top, p})) return;
    std::vector<Deco> decos;
    auto [end_top, q] = walk(in_top, p, decos);
    done[{in_top, p}] = done[{end_top, q}] = true;
    edges.push_back({p, q, decos});
  };
  for (int i = 1; i <= top.n_north(); ++i) outer_start(true, {Face::north, i});
  for (int i = 1; i <= bottom.n_south(); ++i) outer_start(false, {Face::south, i});

  RawComposite out;
  for (int j = 1; j <= mid; ++j) {
    if (mid_used[static_cast<std::size_t>(j)]) continue;
    std::vector<Deco> decos;
    const Endpoint start{Face::south, j};
    mid_used[static_cast<std::size_t>(j)] = 1;
    Endpoint p = start;
    bool in_top = true;
    do {
      const Half& h = (in_top ? up : down).at(p);
      decos.insert(decos.end(), h.decos.begin(), h.decos.end());
      mid_used[static_cast<std::size_t>(h.to.index)] = 1;
      in_top = !in_top;
      p = in_top ? Endpoint{Face::south, h.to.index} : Endpoint{Face::north, h.to.index};
    } while (!(in_top && p == start));
    out.loops.push_back(std::move(decos));
  }
  out.tangle = Tangle(top.n_north(), bottom.n_south(), std::move(edges));
  return out;
}

std::vector<Tangle> noncrossing_matchings(int n) {
  const int total = 2 * n;
  auto endpoint = [&](int pos) {
    return pos < n ? Endpoint{Face::north, pos + 1} : Endpoint{Face::south, total - pos};
  };
  using Pairs = std::vector<std::pair<int, int>>;
  std::function<std::vector<Pairs>(int, int)> rec = [&](int lo, int hi) {
    if (lo >= hi) return std::vector<Pairs>{{}};
    std::vector<Pairs> res;
    for (int k = lo + 1; k < hi; k += 2)
      for (const auto& inner : rec(lo + 1, k))
        for (const auto& outer : rec(k + 1, hi)) {
          Pairs p{{lo, k}};
          p.insert(p.end(), inner.begin(), inner.end());
          p.insert(p.end(), outer.begin(), outer.end());
          res.push_back(std::move(p));
        }
    return res;
  };
  std::vector<Tangle> out;
  for (const auto& pairs : rec(0, total)) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({endpoint(a), endpoint(b), {}});
    out.emplace_back(n, n, std::move(edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tlcb

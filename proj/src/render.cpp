#include "tlcb/render.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace tlcb {

namespace {

constexpr int kColumnPitch = 4;
constexpr double kPitch = 40.0;
constexpr double kLevel = 20.0;

int column(int index) { return kColumnPitch * (index - 1) + 1; }

char marker(Deco d) { return d == Deco::circle ? '*' : '#'; }

/// Nesting depth of each same-face edge (innermost = 1), keyed by edge index.
std::map<std::size_t, int> arc_levels(const Tangle& t, Face f) {
  std::vector<std::size_t> arcs;
  for (std::size_t k = 0; k < t.edges().size(); ++k)
    if (t.edges()[k].a.face == f && t.edges()[k].b.face == f) arcs.push_back(k);
  auto span = [&](std::size_t k) { return t.edges()[k].b.index - t.edges()[k].a.index; };
  std::sort(arcs.begin(), arcs.end(), [&](auto x, auto y) { return span(x) < span(y); });
  std::map<std::size_t, int> level;
  for (std::size_t k : arcs) {
    int l = 1;
    const auto& e = t.edges()[k];
    for (const auto& [j, lj] : level) {
      const auto& g = t.edges()[j];
      if (g.a.index > e.a.index && g.b.index < e.b.index) l = std::max(l, lj + 1);
    }
    level[k] = l;
  }
  return level;
}

int max_level(const std::map<std::size_t, int>& levels) {
  int m = 0;
  for (const auto& [k, l] : levels) m = std::max(m, l);
  return m;
}

void put(std::string& row, int col, char c) {
  if (col < 0) return;
  if (static_cast<int>(row.size()) <= col) row.resize(col + 1, ' ');
  row[col] = c;
}

std::string trimmed(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

}  // namespace

std::string render_ascii(const Tangle& t) {
  const auto north = arc_levels(t, Face::north), south = arc_levels(t, Face::south);
  const int ln = max_level(north), ls = max_level(south);
  int middle = 1;
  for (const auto& e : t.edges())
    if (e.propagating())
      middle = std::max({middle, std::abs(column(e.a.index) - column(e.b.index)), static_cast<int>(e.decos.size())});

  std::vector<std::string> rows(2 + ln + middle + ls);
  for (int i = 1; i <= t.n_north(); ++i) put(rows.front(), column(i), 'o');
  for (int i = 1; i <= t.n_south(); ++i) put(rows.back(), column(i), 'o');

  auto draw_arc = [&](std::size_t k, int level, bool is_north) {
    const auto& e = t.edges()[k];
    const int ca = column(e.a.index), cb = column(e.b.index);
    for (int r = 1; r <= level; ++r) {
      std::string& row = is_north ? rows[r] : rows[rows.size() - 1 - r];
      if (r < level) {
        put(row, ca, '|');
        put(row, cb, '|');
        continue;
      }
      put(row, ca, is_north ? '\\' : '/');
      put(row, cb, is_north ? '/' : '\\');
      for (int c = ca + 1; c < cb; ++c) put(row, c, is_north ? '_' : '-');
      for (std::size_t d = 0; d < e.decos.size() && ca + 1 + static_cast<int>(d) < cb; ++d)
        put(row, ca + 1 + static_cast<int>(d), marker(e.decos[d]));
    }
  };
  for (const auto& [k, l] : north) draw_arc(k, l, true);
  for (const auto& [k, l] : south) draw_arc(k, l, false);

  for (const auto& e : t.edges()) {
    if (!e.propagating()) continue;
    const int ca = column(e.a.index), cb = column(e.b.index);
    for (int r = 1; r <= ln; ++r) put(rows[r], ca, '|');
    for (int r = 1; r <= ls; ++r) put(rows[rows.size() - 1 - r], cb, '|');
    const int dist = std::abs(cb - ca), step = cb > ca ? 1 : -1;
    for (int r = 0; r < middle; ++r) {
      std::string& row = rows[1 + ln + r];
      int x;
      if (r < dist) {
        x = ca + step * r;
        put(row, x, step > 0 ? '\\' : '/');
      } else {
        x = cb;
        put(row, x, '|');
      }
      if (r < static_cast<int>(e.decos.size())) put(row, x - 1, marker(e.decos[r]));
    }
  }

  std::string out;
  for (const auto& r : rows) out += trimmed(r) + "\n";
  return out;
}

std::string render_svg(const Tangle& t) {
  const auto north = arc_levels(t, Face::north), south = arc_levels(t, Face::south);
  const int ln = max_level(north), ls = max_level(south);
  const double top = kLevel, mid_top = top + kLevel * (ln + 1), mid_bottom = mid_top + kPitch;
  const double bottom = mid_bottom + kLevel * (ls + 1);
  const double width = kPitch * (std::max(t.n_north(), t.n_south()) + 1), height = bottom + kLevel;
  auto x_of = [](int index) { return kPitch * index; };

  std::string body;
  auto decoration = [&](Deco d, double x, double y) {
    if (d == Deco::circle)
      body += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"5\" fill=\"black\"/>\n";
    else
      body += "  <rect x=\"" + num(x - 5) + "\" y=\"" + num(y - 5) + "\" width=\"10\" height=\"10\" fill=\"black\"/>\n";
  };

  for (std::size_t k = 0; k < t.edges().size(); ++k) {
    const auto& e = t.edges()[k];
    const double xa = x_of(e.a.index), xb = x_of(e.b.index);
    const std::size_t m = e.decos.size();
    if (e.propagating()) {
      body += "  <path d=\"M " + num(xa) + " " + num(top) + " L " + num(xa) + " " + num(mid_top) + " L " + num(xb) +
              " " + num(mid_bottom) + " L " + num(xb) + " " + num(bottom) + "\" fill=\"none\" stroke=\"black\"/>\n";
      for (std::size_t d = 0; d < m; ++d) {
        const double s = (d + 1.0) / (m + 1.0);
        decoration(e.decos[d], xa + (xb - xa) * s, mid_top + kPitch * s);
      }
      continue;
    }
    const bool is_north = e.a.face == Face::north;
    const double y0 = is_north ? top : bottom;
    const double h = kLevel * (is_north ? north.at(k) : south.at(k)) * (is_north ? 1 : -1);
    const double yc = y0 + h * 4.0 / 3.0;
    body += "  <path d=\"M " + num(xa) + " " + num(y0) + " C " + num(xa) + " " + num(yc) + ", " + num(xb) + " " +
            num(yc) + ", " + num(xb) + " " + num(y0) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t d = 0; d < m; ++d) {
      const double s = 0.15 + 0.3 * (d + 0.5) / m;
      const double bx = 3 * s * s * (1 - s) + s * s * s, by = 3 * s * (1 - s);
      decoration(e.decos[d], xa + (xb - xa) * bx, y0 + (yc - y0) * by);
    }
  }
  for (int i = 1; i <= t.n_north(); ++i)
    body += "  <circle cx=\"" + num(x_of(i)) + "\" cy=\"" + num(top) + "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
  for (int i = 1; i <= t.n_south(); ++i)
    body += "  <circle cx=\"" + num(x_of(i)) + "\" cy=\"" + num(bottom) + "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";

  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n  <desc>" + t.to_string() + "</desc>\n" + body +
         "</svg>\n";
}

}  // namespace tlcb

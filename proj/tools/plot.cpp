#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "cli.hpp"

namespace hecke_cells::cli {

namespace {

using Point = std::array<double, 2>;

const char* const kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                "#a6cee3", "#b15928", "#f781bf", "#999999", "#66c2a5"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

// Euclidean images of the fundamental weights of a rank-2 datum
std::array<Point, 2> fundamental_weight_vectors(const RootDatum& d) {
  double g[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i][j] = d.cartan(i, j) * d.root_length_sq(i) / 2.0;  // (alpha_i, alpha_j)
  Point a0{std::sqrt(g[0][0]), 0.0};
  Point a1{g[0][1] / a0[0], std::sqrt(g[1][1] - g[0][1] * g[0][1] / g[0][0])};
  // (omega_i, alpha_j) = delta_ij |alpha_j|^2 / 2
  const double det = a0[0] * a1[1] - a0[1] * a1[0];
  std::array<Point, 2> w;
  for (int i = 0; i < 2; ++i) {
    double r0 = i == 0 ? g[0][0] / 2 : 0.0;
    double r1 = i == 1 ? g[1][1] / 2 : 0.0;
    w[i] = {(r0 * a1[1] - r1 * a0[1]) / det, (a0[0] * r1 - a1[0] * r0) / det};
  }
  return w;
}

}  // namespace

std::string render_cell_diagram(const CellPartition& P, int p) {
  const AffineWeylGroup& G = P.group();
  const RootDatum& d = G.datum();
  if (d.rank() != 2) throw UnsupportedError("cell diagrams need a rank-2 type");
  const auto omega = fundamental_weight_vectors(d);
  const Weight& c = d.theta().coroot;
  const int M = std::lcm(c[0], c[1]);
  // vertices of the fundamental alcove, scaled by M
  const Weight verts[3] = {d.zero(), d.fundamental_weight(0) * (M / c[0]), d.fundamental_weight(1) * (M / c[1])};

  std::vector<std::array<Point, 3>> polys;
  double lo[2] = {0, 0}, hi[2] = {0, 0};
  for (int i = 0; i < P.num_elements(); ++i) {
    const AffineElement& w = P.ball->element(i);
    std::array<Point, 3> poly;
    for (int k = 0; k < 3; ++k) {
      Weight x = w.finite().apply(d, verts[k] + w.translation() * M);
      Point q{(x[0] * omega[0][0] + x[1] * omega[1][0]) / M, (x[0] * omega[0][1] + x[1] * omega[1][1]) / M};
      poly[k] = q;
      for (int a = 0; a < 2; ++a) {
        lo[a] = std::min(lo[a], q[a]);
        hi[a] = std::max(hi[a], q[a]);
      }
    }
    polys.push_back(poly);
  }
  const double pad = 10.0;
  const double scale = 760.0 / std::max(hi[0] - lo[0], hi[1] - lo[1]);
  auto X = [&](const Point& q) { return pad + (q[0] - lo[0]) * scale; };
  auto Y = [&](const Point& q) { return pad + (hi[1] - q[1]) * scale; };
  const double width = 2 * pad + (hi[0] - lo[0]) * scale;
  const double height = 2 * pad + (hi[1] - lo[1]) * scale;

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
       "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\" data-type=\"" + d.type().to_string() +
       "\" data-length-bound=\"" + std::to_string(P.length_bound) + "\" data-alcoves=\"" +
       std::to_string(P.num_elements()) + "\">\n";
  s += "<g stroke=\"#333333\" stroke-width=\"0.5\">\n";
  int label = 0;
  std::string labels;
  for (int i = 0; i < P.num_elements(); ++i) {
    const AffineElement& w = P.ball->element(i);
    const int cell = P.cell_of[i];
    const bool trusted = P.trusted_element(w);
    std::string pts;
    for (int k = 0; k < 3; ++k) pts += (k ? " " : "") + fmt(X(polys[i][k])) + "," + fmt(Y(polys[i][k]));
    s += "<polygon class=\"alcove\" points=\"" + pts + "\" fill=\"" + kPalette[cell % 10] + "\" fill-opacity=\"" +
         (trusted ? "0.85" : "0.3") + "\" data-cell=\"" + std::to_string(cell) + "\" data-word=\"" + P.word(i) +
         "\"><title>" + P.word(i);
    if (p > 0) s += " : " + G.dot_action(w, d.zero(), p).to_string();
    s += "</title></polygon>\n";
    if (G.coset_minimality(w).in_fWf) {
      Point centre{(polys[i][0][0] + polys[i][1][0] + polys[i][2][0]) / 3,
                   (polys[i][0][1] + polys[i][1][1] + polys[i][2][1]) / 3};
      labels += "<text x=\"" + fmt(X(centre)) + "\" y=\"" + fmt(Y(centre)) + "\">" + std::to_string(++label) +
                "</text>\n";
    }
  }
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
  s += labels;
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace hecke_cells::cli

#include "compaug/svg.hpp"

#include "compaug/boundary_cost.hpp"
#include "compaug/embedding.hpp"

#include <set>
#include <sstream>

namespace compaug {

std::string fixed6(const Scalar& s) {
  const mpz_class scale = 1000000;
  Scalar scaled = abs(s) * scale;
  // Round half away from zero on the magnitude.
  mpz_class q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  mpz_class whole = q / scale, frac = q % scale;
  std::string f = frac.get_str();
  f.insert(0, 6 - f.size(), '0');
  return (s < 0 && q != 0 ? "-" : "") + whole.get_str() + "." + f;
}

std::vector<std::vector<Point2>> fattenings(const PlanarDrawing& drawing) {
  std::vector<std::vector<Point2>> out;
  const PlanarDrawing one[1] = {drawing};
  const Scalar eps = safe_epsilon(one);
  const Embedding emb = derive_embedding(drawing);
  for (int c : emb.faces.outer_cycle_of_component) {
    out.push_back(offset_polygon(emb.faces.cycles[c], drawing.position, eps));
  }
  return out;
}

std::string render_svg(const PlanarDrawing& drawing, const SvgLayers& layers) {
  const LabelledGraph& g = *drawing.graph;
  std::vector<const Point2*> all;
  for (const auto& p : drawing.position) all.push_back(&p);
  for (const auto& poly : layers.underlay) {
    for (const auto& p : poly) all.push_back(&p);
  }
  Scalar x0, y0, x1, y1;
  if (!all.empty()) {
    x0 = x1 = all[0]->x;
    y0 = y1 = all[0]->y;
  }
  for (const Point2* p : all) {
    if (p->x < x0) x0 = p->x;
    if (p->x > x1) x1 = p->x;
    if (p->y < y0) y0 = p->y;
    if (p->y > y1) y1 = p->y;
  }
  Scalar span = std::max(Scalar(x1 - x0), Scalar(y1 - y0));
  if (span == 0) span = 1;
  const Scalar margin = span / 20, stroke = span / 400, dot = span / 150;
  // Flip y so the picture matches the drawing's orientation.
  auto X = [&](const Point2& p) { return fixed6(p.x); };
  auto Y = [&](const Point2& p) { return fixed6(-p.y); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed6(x0 - margin) << ' '
      << fixed6(-y1 - margin) << ' ' << fixed6(x1 - x0 + 2 * margin) << ' ' << fixed6(y1 - y0 + 2 * margin)
      << "\">\n";
  if (!drawing.name.empty()) {
    out << "<title>";
    for (char c : drawing.name) {
      if (c == '<') out << "&lt;";
      else if (c == '>') out << "&gt;";
      else if (c == '&') out << "&amp;";
      else out << c;
    }
    out << "</title>\n";
  }
  out << "<g fill=\"#dddddd\" fill-opacity=\"0.5\" stroke=\"#bbbbbb\" stroke-width=\"" << fixed6(stroke / 2) << "\">\n";
  for (const auto& poly : layers.underlay) {
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " " : "") << X(poly[i]) << ',' << Y(poly[i]);
    out << "\"/>\n";
  }
  out << "</g>\n";

  std::set<std::pair<int, int>> red;
  for (auto [a, b] : layers.highlighted) red.insert({std::min(a, b), std::max(a, b)});
  auto line = [&](const LabelledGraph::Edge& e) {
    const Point2& a = drawing.position[e.first];
    const Point2& b = drawing.position[e.second];
    out << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b) << "\"/>\n";
  };
  out << "<g stroke=\"black\" stroke-width=\"" << fixed6(stroke) << "\">\n";
  for (const auto& e : g.edges()) {
    if (!red.count(e)) line(e);
  }
  out << "</g>\n<g stroke=\"red\" stroke-width=\"" << fixed6(stroke) << "\">\n";
  for (const auto& e : g.edges()) {
    if (red.count(e)) line(e);
  }
  out << "</g>\n<g fill=\"black\">\n";
  std::set<int> red_vertices;
  for (auto [a, b] : red) {
    red_vertices.insert(a);
    red_vertices.insert(b);
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Point2& p = drawing.position[v];
    const bool small = red_vertices.count(static_cast<int>(v)) && g.adjacency()[v].size() == 2;
    out << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"" << fixed6(small ? dot / 3 : dot) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace compaug

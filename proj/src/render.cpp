#include "hangwire/render.hpp"

namespace hangwire {

namespace {

constexpr int kMaxRenderNails = 16;
constexpr int kMargin = 50;
constexpr int kSpacing = 70;
constexpr int kNailY = 50;
constexpr int kNailRadius = 5;
constexpr int kHookHalfWidth = 16;
constexpr int kTravelTop = 80;
constexpr int kTravelStep = 9;

int nail_x(int nail) { return kMargin + (nail - 1) * kSpacing; }

}  // namespace

std::string render_svg(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cannot render the zero word");
  WordAnalysis info = analyze(w);
  int n = 0;
  for (int j : info.support.to_vector()) n = std::max(n, j);
  if (n > kMaxRenderNails)
    throw std::invalid_argument("rendering limited to 16 nails");

  const int len = w.length();
  const int width = 2 * kMargin + (n - 1) * kSpacing;
  const int anchor_y = kTravelTop + len * kTravelStep + 20;
  const int height = anchor_y + 30;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";

  for (int j = 1; j <= n; ++j) {
    int x = nail_x(j);
    svg += "  <circle cx=\"" + std::to_string(x) + "\" cy=\"" +
           std::to_string(kNailY) + "\" r=\"" + std::to_string(kNailRadius) +
           "\" fill=\"#333333\"/>\n";
    svg += "  <text x=\"" + std::to_string(x) + "\" y=\"" +
           std::to_string(kNailY - 14) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"14\">" +
           std::to_string(j) + "</text>\n";
  }

  // One hook per letter: drop to this pass's travel level, run under the
  // nails to the approach side, rise, arc over the nail, come back down.
  std::string d = "M " + std::to_string(kMargin - 30) + " " +
                  std::to_string(kTravelTop - 10);
  for (int t = 0; t < len; ++t) {
    int letter = w[t];
    int nail = letter > 0 ? letter : -letter;
    int x = nail_x(nail);
    int travel = kTravelTop + t * kTravelStep;
    int from_x = letter > 0 ? x - kHookHalfWidth : x + kHookHalfWidth;
    int to_x = letter > 0 ? x + kHookHalfWidth : x - kHookHalfWidth;
    int sweep = letter > 0 ? 1 : 0;
    d += " L " + std::to_string(from_x) + " " + std::to_string(travel);
    d += " L " + std::to_string(from_x) + " " + std::to_string(kNailY);
    d += " A " + std::to_string(kHookHalfWidth) + " " +
         std::to_string(kHookHalfWidth) + " 0 0 " + std::to_string(sweep) +
         " " + std::to_string(to_x) + " " + std::to_string(kNailY);
    d += " L " + std::to_string(to_x) + " " +
         std::to_string(travel + kTravelStep);
  }
  d += " L " + std::to_string(width - kMargin + 30) + " " +
       std::to_string(anchor_y);

  svg += "  <path d=\"" + d +
         "\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"2\" "
         "stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace hangwire

#include "cli/render.hpp"

#include <sstream>
#include <stdexcept>

namespace cdc::cli {

namespace {

char region_letter(std::size_t i) {
  if (i < 26) return static_cast<char>('A' + i);
  if (i < 52) return static_cast<char>('a' + (i - 26));
  return '+';
}

}  // namespace

std::string render_ascii(const std::vector<PixelRegion>& regions) {
  if (regions.empty()) return {};
  const Frame f = regions.front().frame();
  std::string out;
  for (int l = f.ny - 1; l >= 0; --l) {
    for (int k = 0; k < f.nx; ++k) {
      char c = '.';
      for (std::size_t i = 0; i < regions.size(); ++i) {
        if (!regions[i].contains(k, l)) continue;
        c = c == '.' ? region_letter(i) : '#';
      }
      out += c;
    }
    out += '\n';
  }
  return out;
}

std::string to_pbm(const PixelRegion& region) {
  const Frame f = region.frame();
  std::ostringstream os;
  os << "P1\n" << f.nx << ' ' << f.ny << '\n';
  for (int l = f.ny - 1; l >= 0; --l) {
    for (int k = 0; k < f.nx; ++k) os << (k ? " " : "") << (region.contains(k, l) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

PixelRegion parse_pbm(std::string_view text) {
  // Strip comments, then read tokens. Bits in P1 may be packed without spaces.
  std::string clean;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) clean += c;
  }
  std::istringstream in(clean);
  std::string magic;
  int nx = -1;
  int ny = -1;
  if (!(in >> magic) || magic != "P1") throw std::invalid_argument("not a plain PBM (P1) image");
  if (!(in >> nx >> ny) || nx < 0 || ny < 0) throw std::invalid_argument("bad PBM dimensions");
  PixelRegion out(Frame{nx, ny});
  long long seen = 0;
  const long long total = static_cast<long long>(nx) * ny;
  for (char c; seen < total && in.get(c);) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("bad PBM pixel value");
    const int row = static_cast<int>(seen / nx);
    const int k = static_cast<int>(seen % nx);
    if (c == '1') out.set(k, ny - 1 - row);
    ++seen;
  }
  if (seen != total) throw std::invalid_argument("truncated PBM data");
  for (char c; in.get(c);)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
      throw std::invalid_argument("trailing PBM data");
  return out;
}

}  // namespace cdc::cli

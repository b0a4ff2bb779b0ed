#include "charlab/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace charlab {

namespace {

constexpr double kUnit = 24.0;
constexpr double kMargin = 8.0;

struct Point3 {
  double x, y, z;
};

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

class Canvas {
 public:
  Canvas(int a, int b, int c) : u0_(b * std::cos(M_PI / 6)), v0_(a) {
    width_ = (b + c) * std::cos(M_PI / 6) * kUnit + 2 * kMargin;
    height_ = (a + 0.5 * (b + c)) * kUnit + 2 * kMargin;
  }

  void face(const Point3 (&corners)[4], const char* cls) {
    body_ << "  <polygon class=\"" << cls << "\" points=\"";
    for (int k = 0; k < 4; ++k) {
      const auto& q = corners[k];
      const double u = (q.y - q.x) * std::cos(M_PI / 6) + u0_;
      const double v = v0_ - (q.z - (q.x + q.y) / 2);
      body_ << (k ? " " : "") << fixed4(u * kUnit + kMargin) << ',' << fixed4(v * kUnit + kMargin);
    }
    body_ << "\"/>\n";
  }

  std::string document() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed4(width_) << "\" height=\"" << fixed4(height_)
        << "\" viewBox=\"0 0 " << fixed4(width_) << ' ' << fixed4(height_) << "\">\n"
        << "  <style>polygon{stroke:#222;stroke-width:1;stroke-linejoin:round}"
           ".top{fill:#f2e6c9}.xwall{fill:#8fb3d9}.ywall{fill:#d98f8f}</style>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double u0_, v0_, width_ = 0, height_ = 0;
  std::ostringstream body_;
};

}  // namespace

std::string render_svg(const PlanePartition& p) {
  const int a = p.height(), b = p.rows(), c = p.cols();
  auto pi = [&](int i, int j) {
    if (i < 0 || j < 0) return a;
    if (i >= b || j >= c) return 0;
    return p(i, j);
  };
  Canvas canvas(a, b, c);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < c; ++j) {
      const double z = pi(i, j);
      const Point3 q[4] = {{double(i), double(j), z}, {i + 1.0, double(j), z}, {i + 1.0, j + 1.0, z}, {double(i), j + 1.0, z}};
      canvas.face(q, "top");
    }
  for (int j = 0; j < c; ++j)
    for (int i = 0; i <= b; ++i)
      for (int z = pi(i, j); z < pi(i - 1, j); ++z) {
        const Point3 q[4] = {{double(i), double(j), double(z)}, {double(i), j + 1.0, double(z)}, {double(i), j + 1.0, z + 1.0}, {double(i), double(j), z + 1.0}};
        canvas.face(q, "xwall");
      }
  for (int i = 0; i < b; ++i)
    for (int j = 0; j <= c; ++j)
      for (int z = pi(i, j); z < pi(i, j - 1); ++z) {
        const Point3 q[4] = {{double(i), double(j), double(z)}, {i + 1.0, double(j), double(z)}, {i + 1.0, double(j), z + 1.0}, {double(i), double(j), z + 1.0}};
        canvas.face(q, "ywall");
      }
  return canvas.document();
}

}  // namespace charlab

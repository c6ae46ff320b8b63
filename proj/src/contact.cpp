#include "transknot/contact.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace transknot {

std::string_view name(ModelForm form) {
  switch (form) {
    case ModelForm::standard: return "std";
    case ModelForm::symmetric: return "sym";
    case ModelForm::overtwisted_radial: return "ot";
  }
  return "?";
}

ModelForm parse_model_form(std::string_view text) {
  if (text == "std" || text == "standard") return ModelForm::standard;
  if (text == "sym" || text == "symmetric") return ModelForm::symmetric;
  if (text == "ot" || text == "overtwisted" || text == "overtwisted-radial") return ModelForm::overtwisted_radial;
  throw ContactError("unknown model form '" + std::string(text) + "' (expected std, sym or ot)");
}

bool is_cylindrical(ModelForm form) { return form != ModelForm::standard; }

std::array<double, 3> coefficients(ModelForm form, const Point3& p) {
  switch (form) {
    case ModelForm::standard:
      return {-p.b, 0.0, 1.0};
    case ModelForm::symmetric:
      return {0.0, p.a * p.a, 1.0};
    case ModelForm::overtwisted_radial:
      return {0.0, p.a * std::sin(p.a), std::cos(p.a)};
  }
  return {0, 0, 0};
}

namespace {

using Field = std::function<std::array<double, 3>(const Point3&)>;

Point3 shifted(Point3 p, int axis, double delta) {
  (axis == 0 ? p.a : axis == 1 ? p.b : p.c) += delta;
  return p;
}

// Partial derivatives of all three coefficients along `axis`.
std::array<double, 3> partial(const Field& f, const Point3& p, int axis, double h, bool forward) {
  std::array<double, 3> out{};
  if (forward) {
    const auto f0 = f(p), f1 = f(shifted(p, axis, h)), f2 = f(shifted(p, axis, 2 * h));
    for (int k = 0; k < 3; ++k) out[k] = (-3 * f0[k] + 4 * f1[k] - f2[k]) / (2 * h);
  } else {
    const auto fp = f(shifted(p, axis, h)), fm = f(shifted(p, axis, -h));
    for (int k = 0; k < 3; ++k) out[k] = (fp[k] - fm[k]) / (2 * h);
  }
  return out;
}

// alpha ^ d(alpha) for alpha = A da + B db + C dc.
double wedge_density(const Field& f, const Point3& p, double h, bool forward_first_axis) {
  const auto [A, B, C] = f(p);
  const auto da = partial(f, p, 0, h, forward_first_axis);
  const auto db = partial(f, p, 1, h, false);
  const auto dc = partial(f, p, 2, h, false);
  return A * (db[2] - dc[1]) + B * (dc[0] - da[2]) + C * (da[1] - db[0]);
}

void check_inputs(ModelForm form, const Point3& p, double h) {
  if (!(h > 0)) throw ContactError("finite-difference step must be positive");
  if (is_cylindrical(form) && p.a < 0) throw ContactError("radial coordinate must be nonnegative");
}

// sin(r)/r, smooth through r = 0.
double sinc(double r) {
  if (std::abs(r) < 1e-4) return 1 - r * r / 6 + r * r * r * r / 120;
  return std::sin(r) / r;
}

}  // namespace

double contact_density(ModelForm form, const Point3& p, double h) {
  check_inputs(form, p, h);
  const Field f = [form](const Point3& q) { return coefficients(form, q); };
  const bool one_sided = is_cylindrical(form) && p.a < h;
  return wedge_density(f, p, h, one_sided);
}

double euclidean_contact_density(ModelForm form, const Point3& p, double h) {
  check_inputs(form, p, h);
  if (!is_cylindrical(form)) return contact_density(form, p, h);

  // B dtheta = (B / r^2)(x dy - y dx); both forms have no dr term.
  const Field cartesian = [form](const Point3& q) -> std::array<double, 3> {
    const double r = std::hypot(q.a, q.b);
    const double g = form == ModelForm::symmetric ? 1.0 : sinc(r);
    const double c = form == ModelForm::symmetric ? 1.0 : std::cos(r);
    return {-q.b * g, q.a * g, c};
  };
  const Point3 xyz{p.a * std::cos(p.b), p.a * std::sin(p.b), p.c};
  return wedge_density(cartesian, xyz, h, false);
}

// ---------------------------------------------------------------------------
// Grids

GridSpec parse_grid(std::string_view text) {
  GridSpec grid;
  std::string s(text);
  std::size_t pos = 0;
  for (int axis = 0; axis < 3; ++axis) {
    const std::size_t comma = s.find(',', pos);
    if ((axis < 2) != (comma != std::string::npos)) {
      throw ContactError("grid must have three comma-separated axes lo:hi:count");
    }
    const std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma + 1;

    const char* cur = part.c_str();
    char* endp = nullptr;
    AxisRange range;
    range.lo = std::strtod(cur, &endp);
    if (endp == cur || *endp != ':') throw ContactError("bad grid axis '" + part + "'");
    cur = endp + 1;
    range.hi = std::strtod(cur, &endp);
    if (endp == cur || *endp != ':') throw ContactError("bad grid axis '" + part + "'");
    cur = endp + 1;
    const long count = std::strtol(cur, &endp, 10);
    if (endp == cur || *endp != '\0') throw ContactError("bad grid axis '" + part + "'");
    if (count < 1 || count > 100000) throw ContactError("grid axis count must be in [1, 100000]");
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.hi < range.lo) {
      throw ContactError("grid axis needs finite lo <= hi");
    }
    range.count = static_cast<int>(count);
    grid.axes[axis] = range;
  }
  return grid;
}

std::string to_string(const GridSpec& grid) {
  std::ostringstream out;
  out.precision(17);
  for (int axis = 0; axis < 3; ++axis) {
    if (axis) out << ',';
    out << grid.axes[axis].lo << ':' << grid.axes[axis].hi << ':' << grid.axes[axis].count;
  }
  return out.str();
}

GridSpec default_grid(ModelForm form) {
  constexpr double two_pi = 2 * std::numbers::pi;
  switch (form) {
    case ModelForm::standard:
      return {{AxisRange{-2, 2, 21}, AxisRange{-2, 2, 21}, AxisRange{-2, 2, 21}}};
    case ModelForm::symmetric:
      return {{AxisRange{0.06, 3, 50}, AxisRange{0, two_pi * 49 / 50, 50}, AxisRange{-1, 1, 10}}};
    case ModelForm::overtwisted_radial:
      return {{AxisRange{3 * std::numbers::pi / 50, 3 * std::numbers::pi, 50},
               AxisRange{0, two_pi * 49 / 50, 50}, AxisRange{-1, 1, 10}}};
  }
  return {};
}

ContactReport is_contact_on_grid(ModelForm form, const GridSpec& grid, double h, double tolerance) {
  if (!(h > 0)) throw ContactError("finite-difference step must be positive");
  for (const auto& axis : grid.axes) {
    if (axis.count < 1) throw ContactError("empty grid");
  }
  if (is_cylindrical(form) && grid.axes[0].lo < 0) throw ContactError("radial range must be nonnegative");

  ContactReport report;
  report.form = form;
  report.tolerance = tolerance;
  report.min_abs_density = std::numeric_limits<double>::infinity();
  report.min_abs_coordinate_density = std::numeric_limits<double>::infinity();

  for (int i = 0; i < grid.axes[0].count; ++i) {
    for (int j = 0; j < grid.axes[1].count; ++j) {
      for (int k = 0; k < grid.axes[2].count; ++k) {
        const Point3 p{grid.axes[0].at(i), grid.axes[1].at(j), grid.axes[2].at(k)};
        const double d = std::abs(euclidean_contact_density(form, p, h));
        if (d < report.min_abs_density) {
          report.min_abs_density = d;
          report.argmin = p;
        }
        if (!is_cylindrical(form) || p.a > 0) {
          report.min_abs_coordinate_density =
              std::min(report.min_abs_coordinate_density, std::abs(contact_density(form, p, h)));
        }
        ++report.samples;
      }
    }
  }
  report.passed = report.min_abs_density > tolerance;
  return report;
}

}  // namespace transknot

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transknot {

// The three model contact forms on R^3.
//   standard             dz - y dx                (cartesian x, y, z)
//   symmetric            dz + r^2 dtheta          (cylindrical r, theta, z)
//   overtwisted_radial   cos(r) dz + r sin(r) dtheta
enum class ModelForm { standard, symmetric, overtwisted_radial };

std::string_view name(ModelForm form);
// Accepts std|standard, sym|symmetric, ot|overtwisted.
ModelForm parse_model_form(std::string_view text);
bool is_cylindrical(ModelForm form);

class ContactError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coordinates in the form's own system: (x, y, z) or (r, theta, z).
struct Point3 {
  double a = 0, b = 0, c = 0;
};

inline constexpr double kDefaultStep = 1e-4;
inline constexpr double kDefaultTolerance = 1e-6;

// Coefficients (A, B, C) of the form against the coordinate 1-forms
// (dx, dy, dz) or (dr, dtheta, dz).
std::array<double, 3> coefficients(ModelForm form, const Point3& p);

// Coefficient of alpha ^ d(alpha) against the coordinate volume element
// (dx^dy^dz, or dr^dtheta^dz for cylindrical forms), with d(alpha) taken by
// second-order finite differences of step h. Near r = 0 the radial
// derivative uses a one-sided stencil. Vanishes on the axis for the
// cylindrical forms because dr^dtheta^dz degenerates there.
double contact_density(ModelForm form, const Point3& p, double h = kDefaultStep);

// Coefficient of alpha ^ d(alpha) against the euclidean volume dx^dy^dz,
// computed from the cartesian pullback of the form. Equal to
// contact_density / r off the axis and finite on it.
double euclidean_contact_density(ModelForm form, const Point3& p, double h = kDefaultStep);

struct AxisRange {
  double lo = 0, hi = 0;
  int count = 1;

  double at(int i) const { return count == 1 ? lo : lo + (hi - lo) * i / (count - 1); }
};

struct GridSpec {
  std::array<AxisRange, 3> axes;
};

// "lo:hi:count,lo:hi:count,lo:hi:count" in the form's coordinates.
GridSpec parse_grid(std::string_view text);
std::string to_string(const GridSpec& grid);
GridSpec default_grid(ModelForm form);

struct ContactReport {
  ModelForm form;
  std::size_t samples = 0;
  // Minimum |density| over the grid, against dx^dy^dz, and where it occurs.
  double min_abs_density = 0;
  Point3 argmin;
  // Minimum |contact_density| over samples off the axis (coordinate volume).
  double min_abs_coordinate_density = 0;
  double tolerance = kDefaultTolerance;
  bool passed = false;
};

ContactReport is_contact_on_grid(ModelForm form, const GridSpec& grid, double h = kDefaultStep,
                                 double tolerance = kDefaultTolerance);

}  // namespace transknot

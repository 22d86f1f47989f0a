#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ssrm/problem.hpp"

namespace ssrm::benchmarks {

/// Cracked pipe under bending; flow stress in Pa, half-crack angle in rad, g in N m.
double lsf_pipe(double flow_stress, double half_angle);

/// g = 1 - x1^3 - x2^3.
double lsf_cubic(double x1, double x2);

/// Cantilever beam deflection margin; depth must be nonzero.
double lsf_beam(double load, double depth);

/// Speed reducer shaft stress margin in MPa; diameter must be positive.
double lsf_reducer(double diameter, double span, double force, double torque, double strength);

/// Which angle multiplies F2 in the axial stress of the tube problem.
enum class TubeAxialAngle { Theta2, Theta1AsPrinted };

struct TubeStress {
  double inertia;         // I
  double polar_inertia;   // J
  double area;            // A
  double shear;           // tau_zx
  double moment;          // M
  double normal_stress;   // sigma_x
  double g;
};

/// Cantilever tube intermediates; requires 0 < 2 t < d.
TubeStress tube_stress(double t, double d, double l1, double l2, double f1, double f2, double p,
                       double torque, double yield, TubeAxialAngle axial = TubeAxialAngle::Theta2);

double lsf_tube(double t, double d, double l1, double l2, double f1, double f2, double p,
                double torque, double yield, TubeAxialAngle axial = TubeAxialAngle::Theta2);

/// Undamped nonlinear oscillator; mass and total stiffness must be positive.
double lsf_oscillator(double c1, double c2, double mass, double r, double t1, double f1);

ProblemDefinition pipe();
ProblemDefinition cubic();
ProblemDefinition beam();
ProblemDefinition reducer();
ProblemDefinition tube(TubeAxialAngle axial = TubeAxialAngle::Theta2);
ProblemDefinition oscillator();

/// Registered names in sorted order.
std::vector<std::string> problem_names();

/// Throws LookupError for unknown names.
ProblemDefinition get_problem(std::string_view name);

}  // namespace ssrm::benchmarks

#pragma once

#include <vector>

namespace nlwave {

// Uniform grid on [-a, a] with an odd node count, so x = 0 is exactly a node.
// Nodes are generated by index arithmetic: node(i) = (i - center) * h.
struct Grid {
    double a = 0.0;
    double h = 0.0;
    int n = 0;

    int center_index() const { return (n - 1) / 2; }
    double node(int i) const { return (i - center_index()) * h; }
    std::vector<double> nodes() const;
};

// Largest h <= h_target that divides a evenly; a is recomputed as ((n-1)/2)*h
// so the endpoints and the center node are exact.
Grid make_grid(double a, double h_target);

// Nodal values plus the constant far-field extension on each side.
struct Profile {
    std::vector<double> values;
    double left_ext = 1.0;
    double right_ext = 0.0;
};

// left_ext for x < -a, right_ext for x > a, linear interpolation inside.
double extend_value(const Profile& p, const Grid& g, double x);

}  // namespace nlwave

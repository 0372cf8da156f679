#pragma once

// Generated by scripts/generate_manufactured.py; edit that script, not this file.

#include <array>
#include <cmath>

namespace hsgn::manufactured {

/** Bathymetry of the manufactured problem. */
inline std::array<double, 1> bathymetry1(double x, double y) {
    const double x0 = 4*M_PI;
    const double x1 = 2*M_PI;
    return {(1.0/25.0)*cos(x*x0)*cos(x0*y) + (2.0/25.0)*cos(x*x1)*cos(x1*y)};
}

/** Exact fields (h, u, v, w, eta) at one point. */
inline std::array<double, 5> exact_state(double t, double x, double y) {
    const double x0 = 2*M_PI;
    const double x1 = x*x0;
    const double x2 = cos(x1);
    const double x3 = x0*y;
    const double x4 = cos(x3);
    const double x5 = 4*M_PI;
    const double x6 = x*x5;
    const double x7 = cos(x6);
    const double x8 = x5*y;
    const double x9 = cos(x8);
    const double x10 = sin(x1);
    const double x11 = sin(x3);
    const double x12 = t*x0;
    const double x13 = x10*x11*cos(x12);
    const double x14 = (1.0/2.0)*x13 - 2.0/25.0*x2*x4 - 1.0/25.0*x7*x9 + 2;
    const double x15 = sin(x12);
    const double x16 = (3.0/10.0)*x15;
    const double x17 = 25*x13;
    return {x14, x10*x16, x11*x16, (3.0/250.0)*M_PI*x15*(-6*pow(x10, 2)*x4 - 6*x10*x9*sin(x6) - 6*pow(x11, 2)*x2 - 6*x11*x7*sin(x8) - x17*x2 - x17*x4 + 4*pow(x2, 2)*x4 + 4*x2*pow(x4, 2) + 2*x2*x7*x9 - 100*x2 + 2*x4*x7*x9 - 100*x4), x14};
}

/** Time derivatives (h_t, u_t, v_t, w_t, eta_t) at one point. */
inline std::array<double, 5> exact_state_dt(double t, double x, double y) {
    const double x0 = 2*M_PI;
    const double x1 = t*x0;
    const double x2 = sin(x1);
    const double x3 = x0*y;
    const double x4 = sin(x3);
    const double x5 = x*x0;
    const double x6 = sin(x5);
    const double x7 = M_PI*x6;
    const double x8 = -x2*x4*x7;
    const double x9 = cos(x1);
    const double x10 = (3.0/5.0)*x9;
    const double x11 = cos(x5);
    const double x12 = 100*x9;
    const double x13 = cos(x3);
    const double x14 = 6*x9;
    const double x15 = 4*M_PI;
    const double x16 = x15*y;
    const double x17 = cos(x16);
    const double x18 = x*x15;
    const double x19 = cos(x18);
    const double x20 = pow(x2, 2);
    const double x21 = 25*x4*x6*pow(x9, 2);
    return {x8, x10*x7, M_PI*x10*x4, (3.0/125.0)*pow(M_PI, 2)*(4*pow(x11, 2)*x13*x9 - x11*x12 + 4*x11*pow(x13, 2)*x9 - x11*x14*pow(x4, 2) + 2*x11*x17*x19*x9 + 25*x11*x20*x4*x6 - x11*x21 - x12*x13 - x13*x14*pow(x6, 2) + 2*x13*x17*x19*x9 + 25*x13*x20*x4*x6 - x13*x21 - x14*x17*x6*sin(x18) - x14*x19*x4*sin(x16)), x8};
}

/** Source terms (S_h, S_u, S_v, S_w, S_eta); S_eta coincides with S_h
 *  and none of the sources depend on the relaxation strength. */
inline std::array<double, 5> source_terms(double t, double x, double y, double g) {
    const double x0 = 2*M_PI;
    const double x1 = t*x0;
    const double x2 = sin(x1);
    const double x3 = x*x0;
    const double x4 = cos(x3);
    const double x5 = x0*y;
    const double x6 = cos(x5);
    const double x7 = sin(x3);
    const double x8 = sin(x5);
    const double x9 = x7*x8;
    const double x10 = pow(x7, 2);
    const double x11 = (6.0/125.0)*x6;
    const double x12 = pow(x8, 2);
    const double x13 = (6.0/125.0)*x4;
    const double x14 = pow(x6, 2);
    const double x15 = pow(x4, 2);
    const double x16 = 4*M_PI;
    const double x17 = x16*y;
    const double x18 = cos(x17);
    const double x19 = x*x16;
    const double x20 = sin(x19);
    const double x21 = x18*x20*x7;
    const double x22 = cos(x19);
    const double x23 = sin(x17);
    const double x24 = x22*x23*x8;
    const double x25 = x18*x22;
    const double x26 = (3.0/125.0)*x25;
    const double x27 = cos(x1);
    const double x28 = (3.0/5.0)*x27;
    const double x29 = x28*x9;
    const double x30 = M_PI*x2*(x10*x11 - x11*x15 + x12*x13 - x13*x14 + (6.0/125.0)*x21 + (6.0/125.0)*x24 - x26*x4 - x26*x6 + x29*x4 + x29*x6 + (6.0/5.0)*x4 + (6.0/5.0)*x6 - x9);
    const double x31 = g*x27;
    const double x32 = pow(x2, 2);
    const double x33 = (9.0/50.0)*x32;
    const double x34 = 1000*x27;
    const double x35 = 60*x27;
    const double x36 = x10*x6;
    const double x37 = x12*x4;
    const double x38 = 12*x32;
    const double x39 = 250*pow(x27, 2)*x9;
    const double x40 = 60*x32;
    const double x41 = 42*x25;
    const double x42 = 30*x32;
    const double x43 = 75*x27*x32*x9;
    return {x30, M_PI*(x28*x7 + x31*x4*x8 + x33*x4*x7), M_PI*(x28*x8 + x31*x6*x7 + x33*x6*x8), (3.0/1250.0)*pow(M_PI, 2)*(36*x10*x12*x32 - x10*x14*x38 - x10*x32*x41 + 300*x10*x32 - x12*x15*x38 - x12*x32*x41 + 300*x12*x32 + 40*x14*x27*x4 - x14*x43 + 40*x15*x27*x6 - x15*x43 + 20*x18*x22*x27*x4 + 20*x18*x22*x27*x6 + 72*x20*x23*x32*x7*x8 - x21*x35 - x21*x38*x6 - x21*x4*x42 - x24*x35 - x24*x38*x4 - x24*x42*x6 - 150*x27*x32*x4*x6*x9 + 75*x27*x32*pow(x7, 3)*x8 + 75*x27*x32*x7*pow(x8, 3) + 250*x32*x4*x7*x8 + 250*x32*x6*x7*x8 - x34*x4 - x34*x6 - x35*x36 - x35*x37 - x36*x4*x40 - x37*x40*x6 - x39*x4 - x39*x6), x30};
}

} // namespace hsgn::manufactured

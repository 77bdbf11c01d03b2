#pragma once
// Generated by tests/oracle/oracle.py (mpmath, 50 digits). Do not edit.
namespace oracle {
inline constexpr double area_0 = 1.0471975511965977462;
inline constexpr double area_1 = 6.2831853071795864769;
inline constexpr double area_2 = 6.2831853071795864769;
inline constexpr double area_3 = 25.282340878889288443;
inline constexpr double area_4 = 38.798669271833946495;
inline constexpr double area_5 = 13.089969389957471827;
inline constexpr double c3_l2_once_re = -0.52941176470588235294;
inline constexpr double c3_l2_once_im = 0.11764705882352941176;
inline constexpr double c3_l2_twice_re = 0.04;
inline constexpr double c3_l2_twice_im = 0.72;
inline constexpr double c3_l2_cube_re = 0.5;
inline constexpr double c3_l2_cube_im = -6.6819117752304891154e-52;
inline constexpr double c3_l2_matrix_form_gap = 1.6704779438076222788e-51;
inline constexpr double vertex_l2_m3_abs = 0.26794919243112270647;
inline constexpr double vertex_l5_m7_abs = 0.86191862458447114058;
inline constexpr double vertex_l6_m5_abs = 0.83982151414291804474;
inline constexpr double vertex_l6_m8_abs = 0.89879713519205776105;
inline constexpr double vertex_l4_m4_abs = 0.7071067811865475244;
inline constexpr double vertex_l3_m2_abs = 0.26794919243112270647;
inline constexpr double aux_l2_m3_Q_arg = 2.214297435588181006;
inline constexpr double aux_l2_m3_P_arg = 0.92729521800161223243;
inline constexpr double iso_cinf_l2_center_re = 1.0;
inline constexpr double iso_cinf_l2_center_im = 1.0;
inline constexpr double iso_cinf_l2_radius = 1.0;
inline constexpr double iso_a1_l1_center_re = 1.0;
inline constexpr double iso_a1_l1_center_im = 1.0;
inline constexpr double iso_a1_l1_radius = 1.0;
inline constexpr double comm_l1_image_of_1_re = 1.0;
inline constexpr double comm_l1_image_of_1_im = 8.0650680728569949217e-51;
inline constexpr double comm_l1_derivative_at_1 = 1.0;
inline constexpr double f_example_arg = 3.2415926535897932385;
inline constexpr double F_example_u_arg = 6.1415926535897932385;
inline constexpr double cycle_0231_c0_arg = 4.7123889803846898577;
inline constexpr double cycle_0231_c1_arg = 3.1415926535897932385;
inline constexpr double cycle_0231_c2_arg = 6.3562251577200746035e-51;
inline constexpr double cycle_0231_c3_arg = 4.7123889803846898577;
inline constexpr double cinf_l3_of_1_arg = 2.0943951023931954923;
inline constexpr double cinf_l3_of_v_arg = 1.0471975511965977462;
}  // namespace oracle

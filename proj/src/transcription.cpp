#include "transcription.hpp"

namespace flagcoh::detail {

// Relations of the integral presentation of H*(E8/T), in the extended
// grammar over t1..t8, t, g3..g15 and the abbreviations c1..c8, u, v, w, x.
const std::vector<TranscribedFormula>& e8t_relation_text() {
  static const std::vector<TranscribedFormula> formulas = {
      {"rho1", R"(c1 - 3*t)"},
      {"rho2", R"(c2 - 4*t^2)"},
      {"rho3", R"(c3 - 2*g3)"},
      {"rho4", R"(c4 + 2*t^4 - 3*g4)"},
      {"rho5", R"(c5 - 3*t*g4 + 2*t^2*g3 - 2*g5)"},
      {"rho6", R"(c6 - 2*g3^2 - t*g5 + t^2*g4 - 2*t^6 - 5*g6)"},
      {"rho8", R"(- 3*c8 + 3*g4^2 - 2*g3*g5 + t*(2*c7 - 6*g3*g4) + t^2*(2*g3^2 - 5*g6) + 3*t^3*g5 + 4*t^4*g4
        - 6*t^5*g3 + t^8)"},
      {"rho9", R"(2*c6*g3 + t*c8 + t^2*c7 - 3*t^3*c6 - 2*g9)"},
      {"rho10", R"(g5^2 - 2*c7*g3 - t^2*c8 + 3*t^3*c7 - 3*g10)"},
      {"rho12", R"(15*g6^2 + 2*g3*g4*g5 - 2*c7*g5 + 2*g3^4 + 10*g3^2*g6 - 3*c8*g4 - 2*g4^3 + t*(c8*g3
        - 2*g3^2*g5 + 4*c7*g4 + 6*g3*g4^2) + t^2*(3*g10 - 25*g4*g6 - c7*g3 - 16*g3^2*g4)
        + t^3*(25*g3*g6 - 3*g4*g5 + 10*g3^3) + t^4*(3*c8 + 3*g3*g5 + 5*g4^2) + t^5*( - 3*c7
        - 5*g3*g4) + 4*t^6*g3^2 - 7*t^8*g4 + 4*t^9*g3)"},
      {"rho14", R"(c7^2 - 3*c8*g6 + 6*g4*g10 - 4*c8*g3^2 + 6*c7*g3*g4 - 6*g3^2*g4^2 - 12*g4^2*g6 - 2*g3*g5*g6
        + t*(24*g3*g4*g6 - 8*c7*g3^2 - 8*c7*g6 + 4*c8*g5 - 6*g3*g10 + 12*g3^3*g4) + t^2*(
        - 2*g3*g4*g5 + 6*g4^3 + 2*g3^2*g6 + 20*g6^2 - 4*g3^4 - c7*g5) + t^3*( - 12*g3*g4^2
        + 8*c8*g3 - 5*c7*g4 + 3*g5*g6) + t^4*(3*g10 - 26*g4*g6 + 6*c7*g3 - 4*g3^2*g4)
        + t^5*(24*g3*g6 + 3*g4*g5 + 12*g3^3) + t^6*( - 6*c8 + 2*g4^2) - 4*t^7*c7 + t^8*(6*g6
        - 6*g3^2) - 6*t^10*g4 + 12*t^11*g3 - 2*t^14)"},
      {"rho15", R"((c8 - t^2*c6 + 2*t^3*g5 + 3*t^4*g4 - t^8)*(c7 - 3*t*c6) - 2*(g3^2 + c6)*(g9 - c6*g3)
        - 2*g15)"},
      {"rho18", R"(g9^2 - 9*c8*g10 - 6*g4^2*g10 - 4*g3^3*g9 - 10*g3*g6*g9 + 2*g3*g5*g10 - 2*g3*g4*g5*g6
        - 6*c7*g3*g4^2 + 3*c8*g4*g6 + c8*g3^2*g4 + 6*g3^2*g4^3 + 12*g4^3*g6 + 2*c7^2*g4
        + 2*c7*g3^2*g5 - 2*g3^3*g4*g5 + 2*c7*g5*g6 + 4*g3^6 - 10*g6^3 + 18*g3^4*g6 + 15*g3^2*g6^2
        - 9*c7*c8*g3 + t*( - 2*g3*g5*g9 - 24*c7*g4*g6 + 8*c8*g4*g5 + 4*c7*g3^2*g4 + 4*c7*g10
        - c8*g9 + 2*c7^2*g3 + 4*c8*g3*g6 + 12*g3*g4*g10 - 36*g3*g4^2*g6 + 12*g3^2*g5*g6 + c8*g3^3
        + 6*g3^4*g5 - 18*g3^3*g4^2) + t^2*(24*g3^4*g4 - 2*c8^2 - c7*g9 - 11*g3^2*g10 + 2*g3*g4*g9
        - 2*c8*g3*g5 + 16*c7*g3*g6 - 3*c7*g4*g5 + 75*g4*g6^2 - 6*g4^4 - 9*c8*g4^2 + 81*g3^2*g4*g6
        - 13*g6*g10 + 4*g3*g4^2*g5 - c7*g3^3) + t^3*( - 3*g5*g10 - 150*g3*g6^2 - 135*g3^3*g6
        + 6*g3^2*g9 - 2*c7*g3*g5 + 21*c7*g4^2 + 15*c7*c8 + 3*g4*g5*g6 - 3*g3^2*g4*g5 + 18*g3*g4^3
        + 15*g6*g9 + 14*c8*g3*g4 - 30*g3^5) + t^4*( - 13*c8*g6 + 2*g4*g10 - 5*c7^2 - 33*g3^2*g4^2
        + 3*g5*g9 - 28*g3*g5*g6 - 45*g4^2*g6 - 41*c7*g3*g4 - 13*g3^3*g5 - 9*c8*g3^2)
        + t^5*(3*c7*g6 - 6*g4^2*g5 + 23*c7*g3^2 + 105*g3*g4*g6 - 6*c8*g5 - 3*g4*g9 + 45*g3^3*g4)
        + t^6*(11*g4^3 - 4*g3*g9 + 4*c7*g5 + 9*g3*g4*g5 + 12*g3^4 + 66*g3^2*g6 + 75*g6^2
        + 2*c8*g4) + t^7*( - 33*g3*g4^2 + 12*g3^2*g5 + 15*g5*g6) + t^8*( - 4*g10 + 21*g3^2*g4
        - 5*c7*g3 - 3*g4*g6) + t^9*(6*g9 - 42*g3^3 - 99*g3*g6) + t^10*( - 4*c8 - 6*g4^2
        - 13*g3*g5) + t^11*(3*c7 + 27*g3*g4) + t^12*(60*g6 + 18*g3^2) + 6*t^13*g5 - 9*t^14*g4
        - 12*t^15*g3 + 10*t^18)"},
      {"rho20", R"(9*u^20 + 45*u^14*v + 12*u^10*w + 60*u^8*v^2 + 30*u^4*v*w + 10*u^2*v^3 + 3*w^2)"},
      {"rho24", R"(11*u^24 + 60*u^18*v + 21*u^14*w + 105*u^12*v^2 + 60*u^8*v*w + 60*u^6*v^3 + 9*u^4*w^2
        + 30*u^2*v^2*w + 5*v^4)"},
      {"rho30", R"(- 9*x^2 - 12*u^9*v*x - 6*u^5*w*x + 9*u^14*v*w - 10*u^12*v^3 - 3*u^10*w^2 + 30*u^8*v^2*w
        - 35*u^6*v^4 + 6*u^4*v*w^2 - 10*u^2*v^3*w - 4*v^5 - 2*w^3)"},
  };
  return formulas;
}

// Relations of H*(E8/C) in u, v, w, x.
const std::vector<TranscribedFormula>& e8c_relation_text() {
  static const std::vector<TranscribedFormula> formulas = {
      {"r15", R"(u^15 - 2*x)"},
      {"r20", R"(9*u^20 + 45*u^14*v + 12*u^10*w + 60*u^8*v^2 + 30*u^4*v*w + 10*u^2*v^3 + 3*w^2)"},
      {"r24", R"(11*u^24 + 60*u^18*v + 21*u^14*w + 105*u^12*v^2 + 60*u^8*v*w + 60*u^6*v^3 + 9*u^4*w^2
        + 30*u^2*v^2*w + 5*v^4)"},
      {"r30", R"(- 9*x^2 - 12*u^9*v*x - 6*u^5*w*x + 9*u^14*v*w - 10*u^12*v^3 - 3*u^10*w^2 + 30*u^8*v^2*w
        - 35*u^6*v^4 + 6*u^4*v*w^2 - 10*u^2*v^3*w - 4*v^5 - 2*w^3)"},
  };
  return formulas;
}

// u, v, w, x as polynomials in t, u = t8, the gammas and c7. Each may refer
// only to the ones before it.
const std::vector<TranscribedFormula>& uvwx_text() {
  static const std::vector<TranscribedFormula> formulas = {
      {"u", R"(t8)"},
      {"v", R"(2*g6 + g3^2 - u*g5 + g4*( - t^2 + u^2) - u^3*g3 + t^6 - t^4*u^2 + t^3*u^3 + t^2*u^4
        - t*u^5)"},
      {"w", R"(g10 + u*g9 - u^3*c7 - u*g4*g5 + 2*u^2*g4^2 - 2*u^2*g3*g5 + g3*g4*( - 6*t*u^2 + 2*u^3)
        + g3^2*(2*t^2*u^2 + 2*t*u^3 - 2*u^4) + g6*( - 5*t^2*u^2 + 5*t*u^3) + g5*(t^4*u + 3*t^3*u^2
        + t^2*u^3) + g4*(6*t^4*u^2 - 3*t^3*u^3 - 2*t^2*u^4 - t*u^5 + u^6) + g3*( - 6*t^5*u^2
        - 2*t^4*u^3 + 4*t^3*u^4 + 6*t^2*u^5 - 4*t*u^6 + u^7) + 4*t^7*u^3 - 6*t^5*u^5 + 2*t^4*u^6
        + t^3*u^7 - t^2*u^8)"},
      {"x", R"(g15 - 20*g3*g6^2 + 3*g3^2*g9 - 23*g3^3*g6 - 6*g3^5 + 4*g6*g9 + 3*u*g4*g10 - u*g5*g9
        - 3*u*g3^2*g4^2 + 3*u*c7*g3*g4 - 6*u*g4^2*g6 + ( - 3*t + 2*u)*g3^3*g5 + ( - 4*t
        + 4*u)*g3*g5*g6 + ( - t^2 - u^2)*g4*g9 + (t^2 + t*u - u^2)*c7*g3^2 + (9*t^2 + 12*t*u
        + 5*u^2)*g3*g4*g6 + (5*t^2 + 6*t*u + 2*u^2)*g3^3*g4 + (3*t^2 + 4*t*u + u^2)*c7*g6 + (
        - 6*t^3 - 2*t^2*u - 6*t*u^2 + 5*u^3)*g3^4 - u^3*g3*g9 + (3*t^2*u + u^3)*g4^3 + (2*t^2*u
        + 3*t*u^2)*c7*g5 + ( - 45*t^3 + 10*t^2*u - 40*t*u^2)*g6^2 + (t^3 - 2*t^2*u + t*u^2
        - u^3)*g3*g4*g5 + ( - 33*t^3 + t^2*u - 31*t*u^2 + 13*u^3)*g3^2*g6 + ( - 2*t^4 - 4*t^3*u
        - 3*t*u^3 + 3*u^4)*c7*g4 + ( - 9*t^4 - 6*t^3*u - 18*t^2*u^2 + 5*t*u^3 - 3*u^4)*g5*g6 + (
        - 3*t^4 - 3*t^3*u - 7*t^2*u^2 + 5*t*u^3 - 4*u^4)*g3^2*g5 + ( - t^4 - 6*t^3*u - t^2*u^2
        - 3*t*u^3)*g3*g4^2 + ( - 3*t^4*u - 6*t^3*u^2 + 3*t^2*u^3 + 15*t*u^4)*g10 + ( - 3*t^4*u
        + t^3*u^2 + 5*t^2*u^3 + 10*t*u^4 - u^5)*c7*g3 + (15*t^5 - 2*t^4*u + 3*t^3*u^2 + 14*t^2*u^3
        - 16*t*u^4 + 3*u^5)*g3^2*g4 + (39*t^5 - 13*t^4*u + 8*t^3*u^2 + 35*t^2*u^3 - 31*t*u^4
        - 3*u^5)*g4*g6 + (t^6 - t^4*u^2 - t^3*u^3 - t^2*u^4 - t*u^5 - u^6)*g9 + ( - 13*t^6
        + 12*t^5*u + 5*t^4*u^2 - 56*t^3*u^3 + 8*t^2*u^4 + 21*t*u^5 + 2*u^6)*g3*g6 + (6*t^6
        + 3*t^5*u + 2*t^4*u^2 + 7*t^3*u^3 + t^2*u^4 - 8*t*u^5 + 3*u^6)*g4*g5 + ( - 8*t^6 + 6*t^5*u
        + 2*t^4*u^2 - 22*t^3*u^3 + 6*t^2*u^4 + 8*t*u^5 - 2*u^6)*g3^3 + ( - 6*t^7 + t^6*u
        - 7*t^4*u^3 + 5*t^3*u^4 + 3*t^2*u^5 + 3*t*u^6 - 63*u^7)*g4^2 + ( - t^7 + 2*t^6*u + t^5*u^2
        - 11*t^4*u^3 + 6*t^3*u^4 + 5*t^2*u^5 + 6*t*u^6 + 39*u^7)*g3*g5 + (2*t^8 + 6*t^7*u
        + 3*t^6*u^2 - 4*t^5*u^3 - 15*t^4*u^4 + 6*t^3*u^5 + 3*t^2*u^6 - 40*t*u^7 + 59*u^8)*c7
        + (3*t^8 + t^6*u^2 + 11*t^5*u^3 + 14*t^4*u^4 - 20*t^3*u^5 - 4*t^2*u^6 + 118*t*u^7
        + 3*u^8)*g3*g4 + ( - 48*t^9 + 3*t^8*u - 41*t^7*u^2 + 18*t^6*u^3 + 16*t^5*u^4 - 13*t^4*u^5
        - 67*t^3*u^6 + 125*t^2*u^7 - 15*t*u^8 - 291*u^9)*g6 + ( - 18*t^9 - 3*t^8*u - 16*t^7*u^2
        + 10*t^6*u^3 - 4*t^5*u^4 - 8*t^4*u^5 - 16*t^3*u^6 - 23*t^2*u^7 - 10*t*u^8 - 115*u^9)*g3^2
        + ( - 6*t^10 - 3*t^9*u - 9*t^8*u^2 + 5*t^7*u^3 - 5*t^6*u^4 - 14*t^4*u^6 - 52*t^3*u^7
        + 6*t^2*u^8 - 60*t*u^9 + 117*u^10)*g5 + (18*t^11 - 3*t^10*u + 5*t^9*u^2 + 11*t^8*u^3
        - 28*t^7*u^4 + 8*t^6*u^5 + 20*t^5*u^6 - 64*t^4*u^7 - 15*t^3*u^8 + 54*t^2*u^9 + 178*t*u^10
        - 177*u^11)*g4 + ( - 2*t^12 + 6*t^11*u + 2*t^10*u^2 - 20*t^9*u^3 + 11*t^8*u^4 + 22*t^7*u^5
        - 8*t^6*u^6 + 83*t^5*u^7 + 15*t^4*u^8 + 5*t^3*u^9 - 116*t^2*u^10 + t*u^11 + 117*u^12)*g3
        - 12*t^15 - t^14*u - 10*t^13*u^2 + 6*t^12*u^3 + 7*t^11*u^4 - 13*t^10*u^5 - 31*t^9*u^6
        + 9*t^8*u^7 - t^7*u^8 - 118*t^6*u^9 - 18*t^5*u^10 + 131*t^4*u^11 - 6*t^3*u^12
        - 233*t^2*u^13 + 175*t*u^14 - 58*u^15)"},
  };
  return formulas;
}

}  // namespace flagcoh::detail

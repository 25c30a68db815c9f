//! Polynomials and constants expected from the pipeline.

pub const Y_AT_A1: &str = "1 + a/2*x + (b/2 - a^2/8)*x^2";
pub const U_P: &str = "-s";
pub const U_Q: &str = "-s*a/2";
pub const U_R: &str = "-s*b/2 + s*a^2/8";
pub const B_VALUE: &str = "a^2/4 - 25/12";
pub const R_OVER_S: (i64, i64) = (25, 24);
pub const X_A2: &str = "576/49*c + 600/49*a";
pub const Y_A2: &str = "1 - 705888/2401*a*c - 360300/2401*a^2 - 345600/2401*c^2";

/// `q0 .. q5` in terms of `a, c, r0 .. r3`.
pub const Q_FORMULAS: [&str; 6] = [
    "3*a^4*c*r3/256 - a^4*r2/128 - a^3*r3/16 - 5*a^2*c^3*r3/128 + 3*a^2*c^2*r2/64 - a^2*c*r1/16 - 25*a^2*c*r3/128 + a^2*r0/8 + 25*a^2*r2/192 + 3*a*c^2*r3/16 - a*c*r2/4 + a*r1/2 + 25*a*r3/48 + 7*c^5*r3/256 - 5*c^4*r2/128 + c^3*r1/16 + 125*c^3*r3/384 - c^2*r0/8 - 25*c^2*r2/64 + 25*c*r1/48 + 433*c*r3/768 - 25*r0/24 - 49*r2/1152",
    "-a^4*r3/128 + 3*a^2*c^2*r3/64 - a^2*c*r2/16 + a^2*r1/8 + 25*a^2*r3/192 - a*c*r3/4 + a*r2/2 - 5*c^4*r3/128 + c^3*r2/16 - c^2*r1/8 - 25*c^2*r3/64 + c*r0/2 + 25*c*r2/48 - 25*r1/24 - 49*r3/1152",
    "-a^2*c*r3/16 + a^2*r2/8 + a*r3/2 + c^3*r3/16 - c^2*r2/8 + c*r1/2 + 25*c*r3/48 + r0 - 25*r2/24",
    "a^2*r3/8 - c^2*r3/8 + c*r2/2 + r1 - 25*r3/24",
    "c*r3/2 + r2",
    "r3",
];

/// `2304` times the `x^0` and `x^1` conditions at `A1`.
pub const A1_ROWS: [&str; 2] = [
    "27*a^4*c*r3 - 18*a^4*r2 - 144*a^3*r3 - 90*a^2*c^3*r3 + 108*a^2*c^2*r2 - 144*a^2*c*r1 - 450*a^2*c*r3 + 288*a^2*r0 + 300*a^2*r2 + 432*a*c^2*r3 - 576*a*c*r2 + 1152*a*r1 + 1200*a*r3 + 63*c^5*r3 - 90*c^4*r2 + 144*c^3*r1 + 750*c^3*r3 - 288*c^2*r0 - 900*c^2*r2 + 1200*c*r1 + 1299*c*r3 - 96*r0 - 98*r2",
    "-18*a^4*r3 + 108*a^2*c^2*r3 - 144*a^2*c*r2 + 288*a^2*r1 + 300*a^2*r3 - 576*a*c*r3 + 1152*a*r0 + 1152*a*r2 - 90*c^4*r3 + 144*c^3*r2 - 288*c^2*r1 - 900*c^2*r3 + 1152*c*r0 + 1200*c*r2 - 96*r1 - 98*r3",
];

/// `y = y2 (1 + (147/2) G / D^2 (x - x2)) + O((x - x2)^2)` with this `G`.
pub const A2_SLOPE_NUMERATOR: &str = "288240100*a^3 + 847310496*a^2*c + 830131200*a*c^2 - 1961617*a + 271060992*c^3 - 1920800*c";

pub const L_FACTOR: &str = "25*a + 24*c";
pub const D_FACTOR: &str = "-2401 + 705888*a*c + 360300*a^2 + 345600*c^2";
pub const DET_CONSTANT: i64 = 29365647704064;
pub const F10: &str = "12150*a^10 - 24786*a^9*c - 34992*a^8*c^2 - 793881*a^8 + 97200*a^7*c^3 + 1215000*a^7*c + 20412*a^6*c^4 + 1959552*a^6*c^2 + 22690800*a^6 - 142884*a^5*c^5 - 2150064*a^5*c^3 - 20615148*a^5*c + 27216*a^4*c^6 - 5596290*a^4*c^4 - 84035232*a^4*c^2 - 367482654*a^4 + 93312*a^3*c^7 + 6627096*a^3*c^5 + 113888592*a^3*c^3 + 419560344*a^3*c - 36450*a^2*c^8 + 2517480*a^2*c^6 + 28335096*a^2*c^4 + 323616384*a^2*c^2 + 2594160450*a^2 - 22842*a*c^9 - 5692032*a*c^7 - 95264100*a*c^5 - 435983184*a*c^3 - 103766418*a*c + 11664*c^10 + 1913139*c^8 + 34999992*c^6 + 60289110*c^4 - 2490394032*c^2 - 13841287201";
pub const F10_CONSTANT: i64 = -13841287201;
pub const F10_PRINTED_TERMS: usize = 36;

/// `k1 = K1_NUMERATOR / (2352 K1_DENOMINATOR)`.
pub const K1_NUMERATOR: &str = "-2025*a^9 - 1944*a^8*c + 67500*a^7 + 259200*a^6*c + 12150*a^5*c^4 + 186624*a^5*c^2 - 1621350*a^5 + 11664*a^4*c^5 - 388800*a^4*c^3 - 4796496*a^4*c - 16200*a^3*c^6 - 575748*a^3*c^4 - 3110400*a^3*c^2 + 9007500*a^3 - 15552*a^2*c^7 + 3240000*a^2*c^3 + 26294400*a^2*c + 6075*a*c^8 + 321624*a*c^6 + 4731750*a*c^4 + 25581312*a*c^2 - 60025*a + 5832*c^9 + 129600*c^7 + 1556496*c^5 + 8294400*c^3 - 57624*c";
pub const K1_DENOMINATOR: &str = "-27*a^6 + 81*a^4*c^2 + 891*a^4 + 864*a^3*c - 81*a^2*c^4 - 2646*a^2*c^2 - 14409*a^2 - 864*a*c^3 - 288*a*c + 27*c^6 + 1755*c^4 + 14697*c^2 + 2401";
pub const K1_PREFACTOR: (i64, i64) = (1, 2352);

pub const RESIDUE_DEGREE: u32 = 21;
pub const RESIDUE_A20: &str = "76527504000000";
pub const RESIDUE_CONSTANT: &str = "7819771121260579336605617";

pub const CASE_FACTORS: [&str; 5] = [
    "301*a^4 + 2688*a^2 + 36864",
    "133*a^4 + 896*a^2 - 12288",
    "4725*a^4 + 342405*a^2 + 4477456",
    "5670*a^4 - 1439865*a^2 + 13942756",
    "190005517894500*a^8 + 36552364751718900*a^6 + 7708662622309824945*a^4 + 69471491411890643040*a^2 + 1517090351363521026304",
];

/// Index (from one) of the case expected to be Belyi.
pub const EXPECTED_BELYI_CASE: usize = 4;
pub const CASE4_DISCRIMINANT: (i64, i64) = (105, 129357);

/// Third critical value for `r3 = s = 1`.
pub const CRITICAL_VALUE: &str = "525/101838848*a*(6040879 + 352815*a^2)";

/// Approximate j-invariants of the two curves.
pub const J_PLUS: f64 = 1315.640;
pub const J_MINUS: f64 = 20.3167;

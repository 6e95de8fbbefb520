//! Published per-outcome results for the turtle trial designs, transcribed as
//! printed (4 decimals).

pub struct OutcomeLine {
    pub x: usize,
    pub delta_ev: f64,
    pub vsi: f64,
    pub p: f64,
    /// The recommended-action column, verbatim.
    pub change: &'static str,
}

const fn line(x: usize, delta_ev: f64, vsi: f64, p: f64, change: &'static str) -> OutcomeLine {
    OutcomeLine {
        x,
        delta_ev,
        vsi,
        p,
        change,
    }
}

const Y3: &str = "Yes, release 3-year olds instead";
const Y5: &str = "Yes, release 5-year olds instead";
const N4: &str = "No, still release 4-year olds";

pub const D1_OUTCOMES: [OutcomeLine; 11] = [
    line(0, -0.0689, 0.0449, 0.0000, Y3),
    line(1, -0.0680, 0.0416, 0.0001, Y3),
    line(2, -0.0669, 0.0377, 0.0011, Y3),
    line(3, -0.0653, 0.0331, 0.0064, Y3),
    line(4, -0.0626, 0.0275, 0.0252, Y3),
    line(5, -0.0576, 0.0204, 0.0694, Y3),
    line(6, -0.0476, 0.0110, 0.1391, Y3),
    line(7, -0.0279, 0.0, 0.2105, N4),
    line(8, 0.0135, 0.0, 0.2456, N4),
    line(9, 0.0544, 0.0, 0.2079, N4),
    line(10, 0.0854, 0.0026, 0.0947, Y5),
];

pub const D2_OUTCOMES: [OutcomeLine; 11] = [
    line(0, -0.0730, 0.0630, 0.0000, Y3),
    line(1, -0.0730, 0.0630, 0.0006, Y3),
    line(2, -0.0730, 0.0628, 0.0043, Y3),
    line(3, -0.0729, 0.0625, 0.0170, Y3),
    line(4, -0.0725, 0.0612, 0.0451, Y3),
    line(5, -0.0708, 0.0570, 0.0837, Y3),
    line(6, -0.0641, 0.0438, 0.1163, Y3),
    line(7, -0.0419, 0.0110, 0.1410, Y3),
    line(8, 0.0273, 0.0, 0.1844, N4),
    line(9, 0.0871, 0.0099, 0.2347, Y5),
    line(10, 0.1129, 0.0172, 0.1729, Y5),
];

pub const D3_OUTCOMES: [OutcomeLine; 11] = [
    line(0, -0.0730, 0.0630, 0.0024, Y3),
    line(1, -0.0730, 0.0630, 0.0161, Y3),
    line(2, -0.0730, 0.0630, 0.0484, Y3),
    line(3, -0.0730, 0.0630, 0.0860, Y3),
    line(4, -0.0729, 0.0627, 0.1006, Y3),
    line(5, -0.0714, 0.0598, 0.0821, Y3),
    line(6, -0.0575, 0.0365, 0.0556, Y3),
    line(7, 0.0227, 0.0, 0.0629, N4),
    line(8, 0.0982, 0.0185, 0.1345, Y5),
    line(9, 0.1128, 0.0219, 0.2276, Y5),
    line(10, 0.1165, 0.0208, 0.1838, Y5),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    Up,
    Down,
}

use Shift::{Down as D, Up as U};

/// (x, p(x), [(p(s_i | x), arrow); 3])
pub type PosteriorLine = (usize, f64, [(f64, Shift); 3]);

pub const D1_POSTERIORS: [PosteriorLine; 11] = [
    (0, 0.0000, [(0.0005, D), (0.1162, D), (0.8834, U)]),
    (1, 0.0001, [(0.0012, D), (0.1372, D), (0.8617, U)]),
    (2, 0.0011, [(0.0030, D), (0.1610, D), (0.8359, U)]),
    (3, 0.0064, [(0.0078, D), (0.1875, D), (0.8046, U)]),
    (4, 0.0252, [(0.0198, D), (0.2156, U), (0.7646, U)]),
    (5, 0.0694, [(0.0490, D), (0.2420, U), (0.7090, U)]),
    (6, 0.1391, [(0.1153, D), (0.2586, U), (0.6261, U)]),
    (7, 0.2105, [(0.2467, D), (0.2510, U), (0.5023, U)]),
    (8, 0.2456, [(0.4494, U), (0.2075, U), (0.3431, D)]),
    (9, 0.2079, [(0.6685, U), (0.1401, D), (0.1914, D)]),
    (10, 0.0947, [(0.8316, U), (0.0791, D), (0.0893, D)]),
];

pub const D2_POSTERIORS: [PosteriorLine; 11] = [
    (0, 0.0000, [(0.0000, D), (0.0001, D), (0.9999, U)]),
    (1, 0.0006, [(0.0000, D), (0.0003, D), (0.9997, U)]),
    (2, 0.0043, [(0.0000, D), (0.0010, D), (0.9989, U)]),
    (3, 0.0170, [(0.0002, D), (0.0033, D), (0.9965, U)]),
    (4, 0.0451, [(0.0012, D), (0.0107, D), (0.9881, U)]),
    (5, 0.0837, [(0.0071, D), (0.0337, D), (0.9592, U)]),
    (6, 0.1163, [(0.0384, D), (0.0986, D), (0.8630, U)]),
    (7, 0.1410, [(0.1629, D), (0.2270, U), (0.6101, U)]),
    (8, 0.1844, [(0.4201, U), (0.3176, U), (0.2623, D)]),
    (9, 0.2347, [(0.6604, U), (0.2709, U), (0.0687, D)]),
    (10, 0.1729, [(0.8066, U), (0.1795, D), (0.0140, D)]),
];

pub const D3_POSTERIORS: [PosteriorLine; 11] = [
    (0, 0.0024, [(0.0000, D), (0.0000, D), (1.0000, U)]),
    (1, 0.0161, [(0.0000, D), (0.0000, D), (1.0000, U)]),
    (2, 0.0484, [(0.0000, D), (0.0000, D), (1.0000, U)]),
    (3, 0.0860, [(0.0000, D), (0.0002, D), (0.9998, U)]),
    (4, 0.1006, [(0.0005, D), (0.0017, D), (0.9977, U)]),
    (5, 0.0821, [(0.0072, D), (0.0155, D), (0.9772, U)]),
    (6, 0.0556, [(0.0803, D), (0.1174, D), (0.8022, U)]),
    (7, 0.0629, [(0.3652, D), (0.3645, U), (0.2702, D)]),
    (8, 0.1345, [(0.5760, U), (0.3924, U), (0.0316, D)]),
    (9, 0.2276, [(0.6807, U), (0.3165, U), (0.0028, D)]),
    (10, 0.1838, [(0.7589, U), (0.2408, U), (0.0002, D)]),
];

//! A fixed set of small semistable curves with known rational torsion, used
//! by the test suites and the `audit` command.

use super::{CurvePoint, WeierstrassCurveQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusCurve {
    /// Cremona label.
    pub label: &'static str,
    pub a: [i64; 5],
    /// A point of maximal order in the rational torsion, with that order.
    pub torsion: Option<((i64, i64), u64)>,
}

impl CorpusCurve {
    pub fn curve(&self) -> WeierstrassCurveQ {
        WeierstrassCurveQ::from_i64s(self.a).expect("corpus curves are nonsingular")
    }

    pub fn generator(&self) -> Option<(CurvePoint, u64)> {
        self.torsion
            .map(|((x, y), n)| (CurvePoint::affine(x, y), n))
    }
}

const fn c(label: &'static str, a: [i64; 5], torsion: Option<((i64, i64), u64)>) -> CorpusCurve {
    CorpusCurve { label, a, torsion }
}

static CORPUS: [CorpusCurve; 31] = [
    c("11a1", [0, -1, 1, -10, -20], Some(((5, 5), 5))),
    c("11a2", [0, -1, 1, -7820, -263580], None),
    c("11a3", [0, -1, 1, 0, 0], Some(((0, 0), 5))),
    c("14a1", [1, 0, 1, 4, -6], Some(((9, 23), 6))),
    c("14a4", [1, 0, 1, -1, 0], Some(((1, 0), 6))),
    c("14a6", [1, 0, 1, -11, 12], Some(((0, 3), 6))),
    c("15a1", [1, 1, 1, -10, -10], Some(((-2, 3), 4))),
    c("15a3", [1, 1, 1, -5, 2], Some(((0, 1), 4))),
    c("15a4", [1, 1, 1, 35, -28], Some(((2, 6), 8))),
    c("15a8", [1, 1, 1, 0, 0], Some(((0, 0), 4))),
    c("17a1", [1, -1, 1, -1, -14], Some(((7, 13), 4))),
    c("17a4", [1, -1, 1, -1, 0], Some(((0, 0), 4))),
    c("19a1", [0, 1, 1, -9, -15], Some(((5, 9), 3))),
    c("19a3", [0, 1, 1, 1, 0], Some(((0, 0), 3))),
    c("21a1", [1, 0, 0, -4, -1], Some(((-1, 2), 4))),
    c("26a1", [1, 0, 1, -5, -8], Some(((4, 4), 3))),
    c("26b1", [1, -1, 1, -3, 3], Some(((1, 0), 7))),
    c("30a1", [1, 0, 1, 1, 2], Some(((3, 4), 6))),
    c("33a1", [1, 1, 0, -11, 0], Some(((0, 0), 2))),
    c("35a1", [0, 1, 1, 9, 1], Some(((1, 3), 3))),
    c("37a1", [0, 0, 1, -1, 0], None),
    c("37b1", [0, 1, 1, -23, -50], Some(((8, 18), 3))),
    c("43a1", [0, 1, 1, 0, 0], None),
    c("53a1", [1, -1, 1, 0, 0], None),
    c("61a1", [1, 0, 0, -2, 1], None),
    c("65a1", [1, 0, 0, -1, 0], Some(((0, 0), 2))),
    c("79a1", [1, 1, 1, -2, 0], None),
    c("91b1", [0, 1, 1, -7, 5], Some(((1, 0), 3))),
    c("123a1", [0, 1, 1, -10, 10], Some(((2, 1), 5))),
    c("389a1", [0, 1, 1, -2, 0], None),
    c("5077a1", [0, 0, 1, -7, 6], None),
];

pub fn corpus() -> &'static [CorpusCurve] {
    &CORPUS
}

//! The sheet-exchanging involution of a double cover, acting on arcs.

use crate::arcs::{ArcClass, Chart, Corner, CrossingWord, Letter};
use crate::error::{Error, Result};
use crate::mutation::Dissection;
use crate::surface::{ArcEnd, Side};

/// Orientation-preserving ribbon automorphism of a two-point chart that
/// swaps the points and reverses every chart arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeckInvolution {
    point: [usize; 2],
}

impl DeckInvolution {
    /// Builds the involution and checks that it commutes with the face walk.
    pub fn of_double_cover(chart: &Chart) -> Result<Self> {
        let sk = chart.skeleton();
        if sk.m() != 2 {
            return Err(Error::Domain(format!(
                "the deck involution needs exactly two marked points, found {}",
                sk.m()
            )));
        }
        let deck = Self { point: [1, 0] };
        for p in 0..2 {
            if sk.next(deck.point[p]) != deck.point[sk.next(p)] {
                return Err(Error::Structural("point swap does not preserve the boundary".into()));
            }
            let (fan, image) = (sk.fan(p), sk.fan(deck.point[p]));
            if fan.len() != image.len()
                || fan
                    .iter()
                    .zip(image)
                    .any(|(e, f)| *f != ArcEnd { arc: e.arc, end: 1 - e.end })
            {
                return Err(Error::Structural(format!(
                    "the fans of the two points are not exchanged by the swap at point {}",
                    p + 1
                )));
            }
            for c in 0..sk.corner_count(p) {
                let (side, (q, d)) = sk.step(p, c);
                let (side2, (q2, d2)) = sk.step(deck.point[p], c);
                let mapped = match side {
                    Side::Arc { arc, side } => Side::Arc { arc, side: 1 - side },
                    Side::Boundary { from } => Side::Boundary {
                        from: deck.point[from],
                    },
                };
                if side2 != mapped || (q2, d2) != (deck.point[q], d) {
                    return Err(Error::Structural(format!(
                        "the swap does not commute with the face walk at corner ({}, {c})",
                        p + 1
                    )));
                }
            }
        }
        Ok(deck)
    }

    fn corner(&self, c: Corner) -> Corner {
        Corner::new(self.point[c.point], c.corner)
    }

    pub fn image(&self, chart: &Chart, a: &ArcClass) -> ArcClass {
        let w = a.word();
        let mapped = CrossingWord::new(
            self.corner(w.start),
            w.letters.iter().map(|l| Letter::new(l.arc, 1 - l.side)).collect(),
            self.corner(w.end),
        );
        chart.canonical(&mapped)
    }

    pub fn fixes(&self, chart: &Chart, a: &ArcClass) -> bool {
        &self.image(chart, a) == a
    }

    /// Every arc of the dissection is mapped to itself.
    pub fn fixes_dissection(&self, d: &Dissection) -> bool {
        d.arcs().iter().all(|a| self.fixes(d.chart(), a))
    }

    /// Indices (1-based) of the arcs that are moved.
    pub fn moved_arcs(&self, d: &Dissection) -> Vec<usize> {
        d.arcs()
            .iter()
            .enumerate()
            .filter(|(_, a)| !self.fixes(d.chart(), a))
            .map(|(k, _)| k + 1)
            .collect()
    }
}

/// The dissection after the `power`-th Dehn twist about boundary component
/// `component` (0-based).
pub fn twist_dissection(d: &Dissection, component: usize, power: i64) -> Result<Dissection> {
    let arcs = d
        .arcs()
        .iter()
        .map(|a| d.chart().boundary_twist(a, component, power))
        .collect::<Result<Vec<_>>>()?;
    Ok(Dissection::new(d.chart().clone(), arcs))
}

//! Graded gentle quivers of dissections and Hom counts by boundary paths.
//!
//! Arcs are vertices. Each pair of fan-consecutive arc-ends at a marked
//! point gives an arrow from the earlier end to the later one. Two arrows
//! compose to a nonzero path iff they meet at the same end of the middle arc;
//! otherwise the composition is a relation.
//!
//! Gradings are stored as one integer offset per arc-end; the degree of a
//! boundary path from end `u` to end `v` is `offset(u) - offset(v)`, which
//! makes degrees additive under concatenation by construction.

use std::collections::BTreeMap;
use std::fmt;

use crate::arcs::ArcClass;
use crate::error::{parse_err, Error, Result};
use crate::mutation::Dissection;
use crate::surface::{content_lines, validate_dissection, ArcEnd, Skeleton, Violation};

/// Per arc-end degree offsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingData {
    offsets: Vec<[i64; 2]>,
}

impl GradingData {
    /// All arrows in degree zero.
    pub fn zero(n: usize) -> Self {
        Self {
            offsets: vec![[0, 0]; n],
        }
    }

    pub fn from_offsets(offsets: Vec<[i64; 2]>) -> Self {
        Self { offsets }
    }

    pub fn offsets(&self) -> &[[i64; 2]] {
        &self.offsets
    }

    pub fn offset(&self, e: ArcEnd) -> i64 {
        self.offsets[e.arc][e.end]
    }

    /// Degree of the boundary path from end `u` to end `v`.
    pub fn path_degree(&self, u: ArcEnd, v: ArcEnd) -> i64 {
        self.offset(u) - self.offset(v)
    }

    /// Offsets realizing the given arrow degrees; every arrow of the
    /// skeleton must be named.
    pub fn from_arrow_degrees(skeleton: &Skeleton, degrees: &BTreeMap<String, i64>) -> Result<Self> {
        let mut offsets = vec![[0i64; 2]; skeleton.n()];
        for (p, fan) in skeleton.fans().iter().enumerate() {
            for j in 1..fan.len() {
                let name = arrow_name(p, j - 1);
                let deg = *degrees
                    .get(&name)
                    .ok_or_else(|| Error::Domain(format!("grading has no degree for arrow {name}")))?;
                let prev = offsets[fan[j - 1].arc][fan[j - 1].end];
                offsets[fan[j].arc][fan[j].end] = prev - deg;
            }
        }
        let known: std::collections::BTreeSet<String> = skeleton
            .fans()
            .iter()
            .enumerate()
            .flat_map(|(p, fan)| (1..fan.len()).map(move |j| arrow_name(p, j - 1)))
            .collect();
        if let Some(extra) = degrees.keys().find(|k| !known.contains(*k)) {
            return Err(Error::Domain(format!("grading names unknown arrow {extra}")));
        }
        Ok(Self { offsets })
    }

    /// Parses lines `name degree`.
    pub fn parse(skeleton: &Skeleton, text: &str) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        for (ln, line) in content_lines(text) {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 2 {
                return Err(parse_err(ln, "grading", "expected `name degree`"));
            }
            let d: i64 = f[1]
                .parse()
                .map_err(|_| parse_err(ln, "degree", format!("`{}` is not an integer", f[1])))?;
            if degrees.insert(f[0].to_string(), d).is_some() {
                return Err(parse_err(ln, "name", format!("arrow {} listed twice", f[0])));
            }
        }
        Self::from_arrow_degrees(skeleton, &degrees)
    }

    /// Offsets after acting by generator `g` on `before`, with the
    /// convention that the boundary path from the fixed arc to the mutated
    /// one at a dragged end has the negated degree of the path it replaces,
    /// and the undragged end is shifted by one (the three paths of a
    /// triangle have degrees summing to one).
    pub fn transport(&self, before: &Dissection, g: i32, after: &Dissection) -> Result<Self> {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= before.n() || after.n() != before.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: before.n().saturating_sub(1),
            });
        }
        let (a1, a2) = (&before.arcs()[i - 1], &before.arcs()[i]);
        let (o1, o2) = (self.offsets[i - 1], self.offsets[i]);
        let mut offsets = self.offsets.clone();
        if g > 0 {
            offsets[i - 1] = o2;
            offsets[i] = mutated_offsets((a1, o1), (a2, o2), &after.arcs()[i], 1);
        } else {
            offsets[i - 1] = mutated_offsets((a2, o2), (a1, o1), &after.arcs()[i - 1], -1);
            offsets[i] = o1;
        }
        Ok(Self { offsets })
    }
}

fn end_at(a: &ArcClass, p: usize) -> Option<usize> {
    let (s, e) = a.endpoints();
    if s == p {
        Some(0)
    } else if e == p {
        Some(1)
    } else {
        None
    }
}

fn mutated_offsets(moved: (&ArcClass, [i64; 2]), by: (&ArcClass, [i64; 2]), result: &ArcClass, sign: i64) -> [i64; 2] {
    let (rs, re) = result.endpoints();
    let mut out = [0; 2];
    for (k, y) in [rs, re].into_iter().enumerate() {
        let dragged = end_at(by.0, y).and_then(|by_y| {
            let (b0, b1) = by.0.endpoints();
            let x = if by_y == 0 { b1 } else { b0 };
            end_at(moved.0, x).map(|mx| by.1[by_y] - by.1[1 - by_y] + moved.1[mx])
        });
        out[k] = match dragged {
            Some(v) => v,
            None => end_at(moved.0, y).map(|my| moved.1[my] + sign).unwrap_or(0),
        };
    }
    out
}

/// Arrow names: a letter for the fan position (`a` for the first pair) and
/// the 1-based point, so the quiver of the genus-one example reads `a1 a2
/// b1 b2 c1 c2`.
pub fn arrow_name(point: usize, position: usize) -> String {
    let letter = if position < 26 {
        ((b'a' + position as u8) as char).to_string()
    } else {
        format!("e{position}_")
    };
    format!("{letter}{}", point + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub point: usize,
    pub source: ArcEnd,
    pub target: ArcEnd,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    /// Pairs of arrow indices `(first, second)` whose composition vanishes.
    pub relations: Vec<(usize, usize)>,
}

pub fn quiver_of(skeleton: &Skeleton, grading: &GradingData) -> Result<GradedQuiver> {
    let v = validate_dissection(skeleton);
    if !v.is_valid() {
        return Err(Error::Precondition(format!(
            "quiver of an invalid dissection: {}",
            v.violations[0]
        )));
    }
    if grading.offsets.len() != skeleton.n() {
        return Err(Error::Domain(format!(
            "grading covers {} arcs, dissection has {}",
            grading.offsets.len(),
            skeleton.n()
        )));
    }
    let mut arrows = Vec::new();
    for (p, fan) in skeleton.fans().iter().enumerate() {
        for j in 1..fan.len() {
            arrows.push(Arrow {
                name: arrow_name(p, j - 1),
                point: p,
                source: fan[j - 1],
                target: fan[j],
                degree: grading.path_degree(fan[j - 1], fan[j]),
            });
        }
    }
    let mut relations = Vec::new();
    for (x, a) in arrows.iter().enumerate() {
        for (y, b) in arrows.iter().enumerate() {
            if a.target.arc == b.source.arc && a.target != b.source {
                relations.push((x, y));
            }
        }
    }
    Ok(GradedQuiver {
        vertices: skeleton.n(),
        arrows,
        relations,
    })
}

impl GradedQuiver {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in 1..=self.vertices {
            out.push_str(&format!("  {v};\n"));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}:{}\"];\n",
                a.source.arc + 1,
                a.target.arc + 1,
                a.name,
                a.degree
            ));
        }
        out.push_str("}\n# relations:\n");
        for &(x, y) in &self.relations {
            out.push_str(&format!("# {} {} = 0\n", self.arrows[x].name, self.arrows[y].name));
        }
        out
    }
}

impl fmt::Display for GradedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertices)?;
        writeln!(f, "arrows {}", self.arrows.len())?;
        for a in &self.arrows {
            writeln!(f, "{} {} -> {} degree {}", a.name, a.source.arc + 1, a.target.arc + 1, a.degree)?;
        }
        writeln!(f, "relations {}", self.relations.len())?;
        for &(x, y) in &self.relations {
            writeln!(f, "{} {} = 0", self.arrows[x].name, self.arrows[y].name)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomDim {
    Finite { total: usize, by_degree: BTreeMap<i64, usize> },
    Infinite,
}

impl HomDim {
    pub fn total(&self) -> Option<usize> {
        match self {
            HomDim::Finite { total, .. } => Some(*total),
            HomDim::Infinite => None,
        }
    }
}

/// Dimension of the morphism space from arc `i` to arc `j` (0-based),
/// counting nonzero boundary paths and, for `i == j`, the identity.
pub fn hom_dim(skeleton: &Skeleton, grading: &GradingData, i: usize, j: usize) -> Result<HomDim> {
    let n = skeleton.n();
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange {
            index: i.max(j) + 1,
            max: n,
        });
    }
    let mut by_degree = BTreeMap::new();
    let mut total = 0;
    if i == j {
        by_degree.insert(0, 1);
        total = 1;
    }
    // A nonzero path stays at one marked point, since switching ends of a
    // middle arc is a relation, and fans are linearly ordered, so the paths
    // from an end are the later ends of the same fan and there are finitely
    // many. `Infinite` is reserved for arc systems with cyclic fans, which
    // skeletons cannot express.
    for fan in skeleton.fans() {
        for (s, e) in fan.iter().enumerate() {
            if e.arc != i {
                continue;
            }
            for f in &fan[s + 1..] {
                if f.arc == j {
                    total += 1;
                    *by_degree.entry(grading.path_degree(*e, *f)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(HomDim::Finite { total, by_degree })
}

/// Why an ordered arc list fails to be a full exceptional sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    Arcs(Violation),
    Fullness { expected: usize, found: usize },
    Backward { from: usize, to: usize, dim: usize },
    Endomorphism { arc: usize, dim: Option<usize> },
    Dissection(Violation),
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceViolation::Arcs(v) | SequenceViolation::Dissection(v) => v.fmt(f),
            SequenceViolation::Fullness { expected, found } => {
                write!(f, "fullness: {found} arcs, a full sequence has {expected}")
            }
            SequenceViolation::Backward { from, to, dim } => write!(
                f,
                "order: hom({from},{to})={dim}, arc {from} precedes arc {to} counterclockwise"
            ),
            SequenceViolation::Endomorphism { arc, dim } => match dim {
                Some(d) => write!(f, "endomorphism: hom({arc},{arc})={d}"),
                None => write!(f, "endomorphism: hom({arc},{arc}) is infinite"),
            },
        }
    }
}

/// `Ok(())` iff the arcs form a full exceptional sequence; otherwise the
/// first violation found.
pub fn is_exceptional_sequence(d: &Dissection) -> std::result::Result<(), SequenceViolation> {
    if let Some(v) = d.arc_violations().into_iter().next() {
        return Err(SequenceViolation::Arcs(v));
    }
    let sk = d.skeleton().map_err(|e| {
        SequenceViolation::Arcs(Violation::Ribbon {
            message: e.to_string(),
        })
    })?;
    let expected = sk.surface().arc_count();
    if sk.n() != expected {
        return Err(SequenceViolation::Fullness {
            expected,
            found: sk.n(),
        });
    }
    let grading = GradingData::zero(sk.n());
    for i in 0..sk.n() {
        for j in 0..i {
            let dim = hom_dim(&sk, &grading, i, j).expect("indices in range");
            if dim.total() != Some(0) {
                return Err(SequenceViolation::Backward {
                    from: i + 1,
                    to: j + 1,
                    dim: dim.total().unwrap_or(usize::MAX),
                });
            }
        }
        let dim = hom_dim(&sk, &grading, i, i).expect("index in range");
        if dim.total() != Some(1) {
            return Err(SequenceViolation::Endomorphism {
                arc: i + 1,
                dim: dim.total(),
            });
        }
    }
    if let Some(v) = validate_dissection(&sk).violations.into_iter().next() {
        return Err(SequenceViolation::Dissection(v));
    }
    Ok(())
}

/// Index of an oriented transverse intersection of two graded curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionIndex(pub i64);

/// The two orientations of one intersection have indices summing to one.
pub fn index_symmetry_check(forward: IntersectionIndex, backward: IntersectionIndex) -> bool {
    forward.0 + backward.0 == 1
}

//! Marked surfaces and the ribbon structure of ordered arc systems.
//!
//! Orientation conventions, fixed once here:
//!
//! * every boundary component lists its marked points in the direction that
//!   keeps the interior of the surface on the left; the segment leaving `p`
//!   in that direction is the *forward* segment of `p` and ends at `next(p)`;
//! * the fan of a marked point lists its arc-ends counterclockwise, starting
//!   next to the forward segment and ending next to the backward one;
//! * fan corner `j` of a point with `k` arc-ends is the sector between ray
//!   `j - 1` and ray `j`, where ray `-1` is the forward segment and ray `k`
//!   the backward segment;
//! * faces are walked counterclockwise (face on the left). The walk arrives
//!   at corner `j` along ray `j` and departs along ray `j - 1`.
//!
//! Euler bookkeeping: every marked point is a vertex, every arc and every
//! boundary segment between consecutive marked points is an edge, every face
//! cycle is a face.

use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::perm::{cycle_type, product, surface_invariants, HurwitzSystem, Transposition};

/// Genus plus the number of marked points on each boundary component.
///
/// Equality ignores the order of boundary components: the marks are kept
/// sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedSurface {
    genus: usize,
    boundary_marks: Vec<usize>,
}

impl MarkedSurface {
    pub fn new(genus: usize, mut boundary_marks: Vec<usize>) -> Result<Self> {
        if boundary_marks.is_empty() {
            return Err(Error::Domain("a marked surface has at least one boundary component".into()));
        }
        if boundary_marks.contains(&0) {
            return Err(Error::Domain(
                "each boundary component carries at least one marked point".into(),
            ));
        }
        boundary_marks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self {
            genus,
            boundary_marks,
        })
    }

    pub fn disk(m: usize) -> Result<Self> {
        Self::new(0, vec![m])
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_marks(&self) -> &[usize] {
        &self.boundary_marks
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_marks.len()
    }

    pub fn marked_points(&self) -> usize {
        self.boundary_marks.iter().sum()
    }

    /// Number of arcs in an exceptional dissection, `m + b + 2g - 2`.
    pub fn arc_count(&self) -> usize {
        self.marked_points() + self.boundary_count() + 2 * self.genus - 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count() as i64
    }
}

impl fmt::Display for MarkedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.boundary_marks.iter().map(|k| k.to_string()).collect();
        write!(f, "g={} b={} marks=[{}]", self.genus, self.boundary_count(), marks.join(","))
    }
}

/// One end of an arc: `end` is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcEnd {
    pub arc: usize,
    pub end: usize,
}

/// An edge of a face.
///
/// `Arc { arc, side }` is the arc traversed from end `side` to end
/// `1 - side`; each arc contributes both sides, to the same or to different
/// faces. `Boundary { from }` is the forward boundary segment of `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Arc { arc: usize, side: usize },
    Boundary { from: usize },
}

/// A face cycle. `sides[i]` departs from `corners[i]`; corners are
/// `(point, fan corner)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<(usize, usize)>,
    pub sides: Vec<Side>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn boundary_edges(&self) -> usize {
        self.sides.iter().filter(|s| matches!(s, Side::Boundary { .. })).count()
    }
}

/// Ribbon structure of an ordered arc system on a marked surface.
///
/// Points and arcs are 0-based internally; the text format is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Skeleton {
    genus: usize,
    boundaries: Vec<Vec<usize>>,
    fans: Vec<Vec<ArcEnd>>,
    arcs: Vec<[usize; 2]>,
    next: Vec<usize>,
    prev: Vec<usize>,
    fan_pos: Vec<[usize; 2]>,
}

impl Skeleton {
    /// Checks structural consistency: every marked point lies on exactly one
    /// boundary component, every arc-end occupies exactly one fan position,
    /// in the fan of its own endpoint.
    pub fn new(
        genus: usize,
        boundaries: Vec<Vec<usize>>,
        fans: Vec<Vec<ArcEnd>>,
        arcs: Vec<[usize; 2]>,
    ) -> Result<Self> {
        let m = fans.len();
        if boundaries.is_empty() {
            return Err(Error::Structural("no boundary component".into()));
        }
        let mut next = vec![usize::MAX; m];
        let mut prev = vec![usize::MAX; m];
        for comp in &boundaries {
            if comp.is_empty() {
                return Err(Error::Structural("boundary component without marked points".into()));
            }
            for (k, &p) in comp.iter().enumerate() {
                if p >= m {
                    return Err(Error::Structural(format!("marked point {} out of range", p + 1)));
                }
                if next[p] != usize::MAX {
                    return Err(Error::Structural(format!(
                        "marked point {} lies on two boundary positions",
                        p + 1
                    )));
                }
                let q = comp[(k + 1) % comp.len()];
                next[p] = q;
            }
        }
        if let Some(p) = next.iter().position(|&q| q == usize::MAX) {
            return Err(Error::Structural(format!("marked point {} is on no boundary", p + 1)));
        }
        for p in 0..m {
            prev[next[p]] = p;
        }
        let mut fan_pos = vec![[usize::MAX; 2]; arcs.len()];
        for (p, fan) in fans.iter().enumerate() {
            for (k, e) in fan.iter().enumerate() {
                if e.arc >= arcs.len() || e.end > 1 {
                    return Err(Error::Structural(format!(
                        "fan of point {} names unknown arc-end {}.{}",
                        p + 1,
                        e.arc + 1,
                        e.end
                    )));
                }
                if arcs[e.arc][e.end] != p {
                    return Err(Error::Structural(format!(
                        "arc {} end {} is at point {} but listed in the fan of point {}",
                        e.arc + 1,
                        e.end,
                        arcs[e.arc][e.end] + 1,
                        p + 1
                    )));
                }
                if fan_pos[e.arc][e.end] != usize::MAX {
                    return Err(Error::Structural(format!(
                        "arc-end {}.{} appears twice in the fans",
                        e.arc + 1,
                        e.end
                    )));
                }
                fan_pos[e.arc][e.end] = k;
            }
        }
        for (a, pos) in fan_pos.iter().enumerate() {
            for (end, &k) in pos.iter().enumerate() {
                if k == usize::MAX {
                    return Err(Error::Structural(format!(
                        "arc-end {}.{} is missing from the fans",
                        a + 1,
                        end
                    )));
                }
            }
        }
        Ok(Self {
            genus,
            boundaries,
            fans,
            arcs,
            next,
            prev,
            fan_pos,
        })
    }

    pub fn declared_genus(&self) -> usize {
        self.genus
    }

    pub fn boundaries(&self) -> &[Vec<usize>] {
        &self.boundaries
    }

    pub fn fans(&self) -> &[Vec<ArcEnd>] {
        &self.fans
    }

    pub fn fan(&self, p: usize) -> &[ArcEnd] {
        &self.fans[p]
    }

    pub fn arcs(&self) -> &[[usize; 2]] {
        &self.arcs
    }

    pub fn m(&self) -> usize {
        self.fans.len()
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn next(&self, p: usize) -> usize {
        self.next[p]
    }

    pub fn prev(&self, p: usize) -> usize {
        self.prev[p]
    }

    /// Fan position of an arc-end at its endpoint.
    pub fn fan_position(&self, e: ArcEnd) -> usize {
        self.fan_pos[e.arc][e.end]
    }

    /// Number of fan corners at `p`, one more than the number of arc-ends.
    pub fn corner_count(&self, p: usize) -> usize {
        self.fans[p].len() + 1
    }

    /// The ambient surface declared by the skeleton.
    pub fn surface(&self) -> MarkedSurface {
        MarkedSurface::new(self.genus, self.boundaries.iter().map(Vec::len).collect())
            .expect("validated at construction")
    }

    /// The corner reached after departing from corner `(p, j)` along its
    /// departure ray, together with the side traversed.
    pub fn step(&self, p: usize, j: usize) -> (Side, (usize, usize)) {
        if j == 0 {
            let q = self.next[p];
            (Side::Boundary { from: p }, (q, self.fans[q].len()))
        } else {
            let e = self.fans[p][j - 1];
            let other = ArcEnd {
                arc: e.arc,
                end: 1 - e.end,
            };
            let q = self.arcs[e.arc][other.end];
            (
                Side::Arc {
                    arc: e.arc,
                    side: e.end,
                },
                (q, self.fan_position(other)),
            )
        }
    }

    /// The same arc system with arcs renumbered: new arc `k` is old arc `order[k]`.
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.n() {
            return Err(Error::Domain("reordering must list every arc once".into()));
        }
        let mut inverse = vec![usize::MAX; self.n()];
        for (k, &old) in order.iter().enumerate() {
            if old >= self.n() || inverse[old] != usize::MAX {
                return Err(Error::Domain("reordering must list every arc once".into()));
            }
            inverse[old] = k;
        }
        let fans = self
            .fans
            .iter()
            .map(|f| {
                f.iter()
                    .map(|e| ArcEnd {
                        arc: inverse[e.arc],
                        end: e.end,
                    })
                    .collect()
            })
            .collect();
        let arcs = order.iter().map(|&old| self.arcs[old]).collect();
        Self::new(self.genus, self.boundaries.clone(), fans, arcs)
    }

    /// The skeleton with one arc removed.
    pub fn without_arc(&self, arc: usize) -> Result<Self> {
        if arc >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: arc + 1,
                max: self.n(),
            });
        }
        let shift = |a: usize| if a > arc { a - 1 } else { a };
        let fans = self
            .fans
            .iter()
            .map(|f| {
                f.iter()
                    .filter(|e| e.arc != arc)
                    .map(|e| ArcEnd {
                        arc: shift(e.arc),
                        end: e.end,
                    })
                    .collect()
            })
            .collect();
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .filter(|&(a, _)| a != arc)
            .map(|(_, &ends)| ends)
            .collect();
        Self::new(self.genus, self.boundaries.clone(), fans, arcs)
    }
}

/// Walks every face cycle of the ribbon structure.
///
/// Every arc side and every boundary segment appears in exactly one face.
pub fn face_traversal(skeleton: &Skeleton) -> Vec<Face> {
    let m = skeleton.m();
    let mut visited: Vec<Vec<bool>> = (0..m).map(|p| vec![false; skeleton.corner_count(p)]).collect();
    let mut faces = Vec::new();
    for p in 0..m {
        for j in 0..skeleton.corner_count(p) {
            if visited[p][j] {
                continue;
            }
            let mut face = Face {
                corners: Vec::new(),
                sides: Vec::new(),
            };
            let (mut q, mut k) = (p, j);
            while !visited[q][k] {
                visited[q][k] = true;
                let (side, nxt) = skeleton.step(q, k);
                face.corners.push((q, k));
                face.sides.push(side);
                (q, k) = nxt;
            }
            debug_assert_eq!((q, k), (p, j), "the step map is a permutation of corners");
            faces.push(face);
        }
    }
    faces
}

/// A named failure of one of the exceptional-dissection conditions.
/// Points and arcs are reported 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    /// An arc whose two ends are at the same marked point.
    Loop { arc: usize },
    ArcCount { expected: usize, found: usize },
    /// `V - E + F` differs from `2 - 2g - b`: some complementary region is not a disk.
    Euler { expected: i64, found: i64 },
    /// A face with other than exactly one boundary edge.
    FaceBoundary { face: usize, boundary_edges: usize },
    /// `later` follows `earlier` counterclockwise at `point` but has a smaller index.
    Order { point: usize, earlier: usize, later: usize },
    /// An arc without an embedded representative.
    SelfCrossing { arc: usize },
    /// Two arcs whose interiors cannot be made disjoint.
    Crossing { first: usize, second: usize },
    /// Two arcs in the same isotopy class.
    Isotopic { first: usize, second: usize },
    /// The arcs do not assemble into a ribbon structure.
    Ribbon { message: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { arc } => write!(f, "loop: arc {arc} has both ends at one marked point"),
            Violation::ArcCount { expected, found } => {
                write!(f, "arc-count: expected m+b+2g-2={expected} arcs, found {found}")
            }
            Violation::Euler { expected, found } => {
                write!(f, "euler: V-E+F={found}, surface has {expected}")
            }
            Violation::FaceBoundary {
                face,
                boundary_edges,
            } => write!(f, "face: face {face} has {boundary_edges} boundary edges"),
            Violation::Order {
                point,
                earlier,
                later,
            } => write!(
                f,
                "order: arc {later} follows arc {earlier} counterclockwise at point {point}"
            ),
            Violation::SelfCrossing { arc } => write!(f, "self-crossing: arc {arc} is not embedded"),
            Violation::Crossing { first, second } => {
                write!(f, "crossing: arcs {first} and {second} intersect in their interiors")
            }
            Violation::Isotopic { first, second } => {
                write!(f, "isotopic: arcs {first} and {second} are the same arc")
            }
            Violation::Ribbon { message } => write!(f, "ribbon: {message}"),
        }
    }
}

/// Outcome of [`validate_dissection`]: valid iff no violation was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "Valid");
        }
        writeln!(f, "Invalid")?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// `V - E + F` of the ribbon structure.
pub fn euler_characteristic(skeleton: &Skeleton, faces: &[Face]) -> i64 {
    let v = skeleton.m() as i64;
    let e = (skeleton.n() + skeleton.m()) as i64;
    v - e + faces.len() as i64
}

/// Checks every condition of an exceptional dissection and names each failure.
pub fn validate_dissection(skeleton: &Skeleton) -> Validation {
    let mut violations = Vec::new();
    for (a, ends) in skeleton.arcs().iter().enumerate() {
        if ends[0] == ends[1] {
            violations.push(Violation::Loop { arc: a + 1 });
        }
    }
    let surface = skeleton.surface();
    if skeleton.n() != surface.arc_count() {
        violations.push(Violation::ArcCount {
            expected: surface.arc_count(),
            found: skeleton.n(),
        });
    }
    let faces = face_traversal(skeleton);
    let chi = euler_characteristic(skeleton, &faces);
    if chi != surface.euler_characteristic() {
        violations.push(Violation::Euler {
            expected: surface.euler_characteristic(),
            found: chi,
        });
    }
    for (k, face) in faces.iter().enumerate() {
        let be = face.boundary_edges();
        if be != 1 {
            violations.push(Violation::FaceBoundary {
                face: k + 1,
                boundary_edges: be,
            });
        }
    }
    violations.extend(order_violations(skeleton));
    Validation { violations }
}

/// Fan-consecutive pairs whose indices decrease counterclockwise.
pub fn order_violations(skeleton: &Skeleton) -> Vec<Violation> {
    let mut out = Vec::new();
    for (p, fan) in skeleton.fans().iter().enumerate() {
        for w in fan.windows(2) {
            if w[1].arc < w[0].arc {
                out.push(Violation::Order {
                    point: p + 1,
                    earlier: w[0].arc + 1,
                    later: w[1].arc + 1,
                });
            }
        }
    }
    out
}

/// True iff some face cycle carries no boundary segment, i.e. the arcs
/// enclose a region touching no boundary segment.
pub fn encloses_boundary_free_region(skeleton: &Skeleton) -> bool {
    face_traversal(skeleton).iter().any(|f| f.boundary_edges() == 0)
}

/// The polygon condition checked directly: all regions are disks, each with
/// exactly one boundary edge.
pub fn polygon_condition(skeleton: &Skeleton) -> bool {
    let faces = face_traversal(skeleton);
    euler_characteristic(skeleton, &faces) == skeleton.surface().euler_characteristic()
        && faces.iter().all(|f| f.boundary_edges() == 1)
}

/// The same condition through the maximality route: no boundary-free
/// region, and exactly `m + b + 2g - 2` arcs.
pub fn maximality_condition(skeleton: &Skeleton) -> bool {
    !encloses_boundary_free_region(skeleton) && skeleton.n() == skeleton.surface().arc_count()
}

/// The Hurwitz system of a dissection: `t_i` swaps the endpoints of arc `i`.
pub fn hurwitz_of(skeleton: &Skeleton) -> Result<HurwitzSystem> {
    let tuple = skeleton
        .arcs()
        .iter()
        .enumerate()
        .map(|(a, ends)| {
            Transposition::new(ends[0] + 1, ends[1] + 1)
                .map_err(|_| Error::Domain(format!("arc {} has both ends at point {}", a + 1, ends[0] + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    HurwitzSystem::new(crate::perm::MarkedPointSet::new(skeleton.m())?, tuple)
}

/// The surface of the simple branched cover with monodromy `h`: one boundary
/// component per cycle of the product, genus from the arc count.
pub fn surface_from_hurwitz(h: &HurwitzSystem) -> Result<MarkedSurface> {
    let inv = surface_invariants(h)?;
    MarkedSurface::new(inv.genus, inv.distribution.parts().to_vec())
}

/// The cut-and-glue realization of `h` as a ribbon structure.
///
/// Marked points are the sheets over the base point. Arc `i` joins the two
/// sheets swapped by `t_i`. Fans list incident arcs in increasing index,
/// and walking the boundary forward from sheet `x` reaches `product(h)(x)`.
pub fn skeleton_from_hurwitz(h: &HurwitzSystem) -> Result<Skeleton> {
    let inv = surface_invariants(h)?;
    let pi = product(h);
    let boundaries: Vec<Vec<usize>> = pi
        .cycles()
        .into_iter()
        .map(|c| c.into_iter().map(|x| x - 1).collect())
        .collect();
    let mut fans = vec![Vec::new(); h.m()];
    let mut arcs = Vec::with_capacity(h.n());
    for (a, t) in h.tuple().iter().enumerate() {
        arcs.push([t.x() - 1, t.y() - 1]);
        fans[t.x() - 1].push(ArcEnd { arc: a, end: 0 });
        fans[t.y() - 1].push(ArcEnd { arc: a, end: 1 });
    }
    Skeleton::new(inv.genus, boundaries, fans, arcs)
}

/// The standard Hurwitz system of a marked surface with at least two marked points.
///
/// Pattern: the chain `(1 2)(2 3)...(m-1 m)`, whose product is an `m`-cycle;
/// then for each boundary component but the last, the lexicographically
/// first transposition splitting off a cycle of the requested length; then
/// `g` copies of `(1 2)(1 2)`.
pub fn standard_hurwitz(surface: &MarkedSurface) -> Result<HurwitzSystem> {
    let m = surface.marked_points();
    if m < 2 {
        return Err(Error::Domain(
            "the standard chart needs at least two marked points".into(),
        ));
    }
    let mut pairs: Vec<(usize, usize)> = (1..m).map(|x| (x, x + 1)).collect();
    let parts = surface.boundary_marks();
    let mut split: Vec<usize> = Vec::new();
    let mut rest = m;
    for &part in &parts[..parts.len() - 1] {
        split.push(part);
        rest -= part;
        let mut target = split.clone();
        target.push(rest);
        target.sort_unstable_by(|a, b| b.cmp(a));
        let mut found = false;
        'search: for x in 1..=m {
            for y in (x + 1)..=m {
                let mut trial = pairs.clone();
                trial.push((x, y));
                let h = HurwitzSystem::from_pairs(m, &trial)?;
                if cycle_type(&product(&h)).parts() == target.as_slice() {
                    pairs = trial;
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            return Err(Error::Internal(format!("no splitting transposition for {surface}")));
        }
    }
    for _ in 0..surface.genus() {
        pairs.push((1, 2));
        pairs.push((1, 2));
    }
    let h = HurwitzSystem::from_pairs(m, &pairs)?;
    debug_assert_eq!(&surface_from_hurwitz(&h)?, surface);
    Ok(h)
}

/// A deterministic exceptional dissection of the given surface.
pub fn standard_skeleton(surface: &MarkedSurface) -> Result<Skeleton> {
    skeleton_from_hurwitz(&standard_hurwitz(surface)?)
}

/// True iff `surface_from_hurwitz(hurwitz_of(d))` is the ambient surface of `d`.
pub fn roundtrip_check(skeleton: &Skeleton) -> Result<bool> {
    let validation = validate_dissection(skeleton);
    if !validation.is_valid() {
        return Err(Error::Precondition(format!(
            "roundtrip needs a valid dissection: {}",
            validation.violations[0]
        )));
    }
    Ok(surface_from_hurwitz(&hurwitz_of(skeleton)?)? == skeleton.surface())
}

fn parse_arc_end(token: &str, line: usize) -> Result<(usize, Option<usize>)> {
    let (arc, end) = match token.split_once('.') {
        Some((a, e)) => {
            let e: usize = e.parse().map_err(|_| parse_err(line, "fan", format!("bad arc-end `{token}`")))?;
            if e > 1 {
                return Err(parse_err(line, "fan", format!("bad arc-end `{token}`")));
            }
            (a, Some(e))
        }
        None => (token, None),
    };
    let arc: usize = arc
        .parse()
        .map_err(|_| parse_err(line, "fan", format!("bad arc-end `{token}`")))?;
    if arc == 0 {
        return Err(parse_err(line, "fan", "arcs are numbered from 1"));
    }
    Ok((arc - 1, end))
}

/// Iterator over the meaningful lines of a text file: comments after `#`
/// and blank lines are dropped, line numbers are 1-based.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_usize(token: &str, line: usize, field: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, field, format!("`{token}` is not a non-negative integer")))
}

/// Parses the skeleton section of a dissection file, returning the
/// skeleton and the remaining lines.
pub(crate) fn parse_skeleton_lines<'a, I>(lines: &mut I) -> Result<Skeleton>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "header", "empty input"))?;
    let f: Vec<&str> = header.split_whitespace().collect();
    if f.len() != 4 {
        return Err(parse_err(hl, "header", "expected `g b m n`"));
    }
    let g = parse_usize(f[0], hl, "g")?;
    let b = parse_usize(f[1], hl, "b")?;
    let m = parse_usize(f[2], hl, "m")?;
    let n = parse_usize(f[3], hl, "n")?;
    let mut boundaries = Vec::with_capacity(b);
    for k in 0..b {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hl, "b", format!("expected {b} boundary lines, found {k}")))?;
        let comp = line
            .split_whitespace()
            .map(|t| {
                let p = parse_usize(t, ln, "boundary")?;
                if p == 0 || p > m {
                    return Err(parse_err(ln, "boundary", format!("point {p} not in 1..={m}")));
                }
                Ok(p - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        boundaries.push(comp);
    }
    let mut raw_fans = Vec::with_capacity(m);
    for k in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hl, "m", format!("expected {m} fan lines, found {k}")))?;
        let fan = if line == "-" {
            Vec::new()
        } else {
            line.split_whitespace()
                .map(|t| parse_arc_end(t, ln))
                .collect::<Result<Vec<_>>>()?
        };
        raw_fans.push((ln, fan));
    }
    let mut arcs = vec![[usize::MAX; 2]; n];
    for k in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hl, "n", format!("expected {n} arc lines, found {k}")))?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(parse_err(ln, "arc", "expected `index end0 end1`"));
        }
        let idx = parse_usize(f[0], ln, "index")?;
        if idx == 0 || idx > n || arcs[idx - 1][0] != usize::MAX {
            return Err(parse_err(ln, "index", format!("arc index {idx} invalid or repeated")));
        }
        let e0 = parse_usize(f[1], ln, "end0")?;
        let e1 = parse_usize(f[2], ln, "end1")?;
        for (e, field) in [(e0, "end0"), (e1, "end1")] {
            if e == 0 || e > m {
                return Err(parse_err(ln, field, format!("point {e} not in 1..={m}")));
            }
        }
        arcs[idx - 1] = [e0 - 1, e1 - 1];
    }
    let mut fans = Vec::with_capacity(m);
    for (p, (ln, raw)) in raw_fans.into_iter().enumerate() {
        let mut fan = Vec::with_capacity(raw.len());
        for (arc, end) in raw {
            if arc >= n {
                return Err(parse_err(ln, "fan", format!("arc {} does not exist", arc + 1)));
            }
            let end = match end {
                Some(e) => e,
                None => {
                    let ends = arcs[arc];
                    if ends[0] == p && ends[1] == p {
                        return Err(parse_err(
                            ln,
                            "fan",
                            format!("arc {} is a loop; name its ends as {0}.0 and {0}.1", arc + 1),
                        ));
                    } else if ends[0] == p {
                        0
                    } else if ends[1] == p {
                        1
                    } else {
                        return Err(parse_err(
                            ln,
                            "fan",
                            format!("arc {} has no end at point {}", arc + 1, p + 1),
                        ));
                    }
                }
            };
            fan.push(ArcEnd { arc, end });
        }
        fans.push(fan);
    }
    Skeleton::new(g, boundaries, fans, arcs).map_err(|e| parse_err(hl, "skeleton", e.to_string()))
}

/// Parses a skeleton file (see the README for the layout).
pub fn parse_skeleton(text: &str) -> Result<Skeleton> {
    let mut lines = content_lines(text);
    let sk = parse_skeleton_lines(&mut lines)?;
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailer", "unexpected content after the arc lines"));
    }
    Ok(sk)
}

pub fn format_skeleton(skeleton: &Skeleton) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        skeleton.genus,
        skeleton.boundaries.len(),
        skeleton.m(),
        skeleton.n()
    );
    for comp in &skeleton.boundaries {
        let s: Vec<String> = comp.iter().map(|p| (p + 1).to_string()).collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    for (p, fan) in skeleton.fans.iter().enumerate() {
        if fan.is_empty() {
            out.push_str("-\n");
            continue;
        }
        let s: Vec<String> = fan
            .iter()
            .map(|e| {
                let ends = skeleton.arcs[e.arc];
                if ends[0] == p && ends[1] == p {
                    format!("{}.{}", e.arc + 1, e.end)
                } else {
                    (e.arc + 1).to_string()
                }
            })
            .collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    for (a, ends) in skeleton.arcs.iter().enumerate() {
        out.push_str(&format!("{} {} {}\n", a + 1, ends[0] + 1, ends[1] + 1));
    }
    out
}

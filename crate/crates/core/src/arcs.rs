//! Arcs on a marked surface encoded as crossing words over a reference
//! dissection (the *chart*).
//!
//! Cutting the surface along the chart arcs leaves polygons, one per face
//! cycle. The universal cover is tiled by lifts of these polygons, and the
//! tiles are the vertices of a tree whose edges are lifted chart arcs. A
//! [`Letter`] `(r, s)` leaves the current tile through side `(r, s)` and
//! enters the tile that carries side `(r, 1 - s)`.
//!
//! A lift of a marked point touches a finite chain of tiles, one per fan
//! corner. An arc in minimal position is determined by its two end lifts,
//! and its word is the tree geodesic between the two chains. Reduction
//! computes that geodesic; two arcs are isotopic iff their canonical words
//! agree.
//!
//! Lifted vertices are described relative to a root tile by a reduced
//! letter path. Ordering vertices along the boundary of the cover uses a
//! lexicographic key: in each tile of the path, the position of the next exit
//! (or of the final corner) counted counterclockwise from where the tile was
//! entered.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::surface::{face_traversal, validate_dissection, Face, Side, Skeleton};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arc: usize,
    pub side: usize,
}

impl Letter {
    pub fn new(arc: usize, side: usize) -> Self {
        Self { arc, side }
    }

    pub fn inverse(self) -> Self {
        Self {
            arc: self.arc,
            side: 1 - self.side,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.arc + 1, self.side)
    }
}

/// A fan corner `corner` at marked point `point`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub point: usize,
    pub corner: usize,
}

impl Corner {
    pub fn new(point: usize, corner: usize) -> Self {
        Self { point, corner }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.point + 1, self.corner)
    }
}

/// An arc from corner `start` through the tiles crossed by `letters` to
/// corner `end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingWord {
    pub start: Corner,
    pub letters: Vec<Letter>,
    pub end: Corner,
}

impl CrossingWord {
    pub fn new(start: Corner, letters: Vec<Letter>, end: Corner) -> Self {
        Self {
            start,
            letters,
            end,
        }
    }

    /// The same arc traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            start: self.end,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            end: self.start,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Little-endian u16 encoding: start point and corner, letter count,
    /// `(arc, side)` pairs, end point and corner.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(10 + 4 * self.letters.len());
        let mut put = |v: usize| out.extend_from_slice(&(v as u16).to_le_bytes());
        put(self.start.point);
        put(self.start.corner);
        put(self.letters.len());
        for l in &self.letters {
            put(l.arc);
            put(l.side);
        }
        put(self.end.point);
        put(self.end.corner);
        out
    }
}

impl fmt::Display for CrossingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "start={} letters=[{}] end={}",
            self.start,
            letters.join(","),
            self.end
        )
    }
}

/// An isotopy class of arcs, stored as its canonical crossing word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcClass(CrossingWord);

impl ArcClass {
    pub fn word(&self) -> &CrossingWord {
        &self.0
    }

    /// The two endpoints, in canonical orientation.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.0.start.point, self.0.end.point)
    }

    pub fn is_loop(&self) -> bool {
        self.0.start.point == self.0.end.point
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.to_bytes()
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A lift of a marked point to the universal cover: the lift touching the
/// tile reached from the root tile by `path` at fan corner `corner`.
///
/// Normalized vertices use the tile of the chain closest to the root, which
/// makes equality of lifts structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftedVertex {
    pub point: usize,
    pub corner: usize,
    pub path: Vec<Letter>,
}

/// Root tile of the cover plus the boundary position that keys count from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    pub root: Corner,
}

/// A valid reference dissection with its face structure indexed.
#[derive(Debug, Clone)]
pub struct Chart {
    skeleton: Skeleton,
    faces: Vec<Face>,
    corner_loc: Vec<Vec<(usize, usize)>>,
    side_loc: Vec<[(usize, usize); 2]>,
}

fn free_push(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

/// Cancels adjacent inverse letters.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        free_push(&mut out, l);
    }
    out
}

impl Chart {
    /// Indexes a reference dissection; it must be a valid exceptional dissection.
    pub fn new(skeleton: Skeleton) -> Result<Self> {
        let validation = validate_dissection(&skeleton);
        if !validation.is_valid() {
            return Err(Error::Precondition(format!(
                "a chart must be a valid dissection: {}",
                validation.violations[0]
            )));
        }
        let faces = face_traversal(&skeleton);
        let mut corner_loc: Vec<Vec<(usize, usize)>> = (0..skeleton.m())
            .map(|p| vec![(usize::MAX, 0); skeleton.corner_count(p)])
            .collect();
        let mut side_loc = vec![[(usize::MAX, 0); 2]; skeleton.n()];
        for (f, face) in faces.iter().enumerate() {
            for (i, (&(p, c), side)) in face.corners.iter().zip(&face.sides).enumerate() {
                corner_loc[p][c] = (f, i);
                if let Side::Arc { arc, side } = *side {
                    side_loc[arc][side] = (f, i);
                }
            }
        }
        Ok(Self {
            skeleton,
            faces,
            corner_loc,
            side_loc,
        })
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn m(&self) -> usize {
        self.skeleton.m()
    }

    pub fn n(&self) -> usize {
        self.skeleton.n()
    }

    /// Face and walk index of a corner.
    pub fn corner_face(&self, c: Corner) -> (usize, usize) {
        self.corner_loc[c.point][c.corner]
    }

    /// Face and walk index of an arc side.
    pub fn side_face(&self, l: Letter) -> (usize, usize) {
        self.side_loc[l.arc][l.side]
    }

    /// Face entered by letter `l`.
    pub fn target_face(&self, l: Letter) -> usize {
        self.side_face(l.inverse()).0
    }

    fn corner_count(&self, p: usize) -> usize {
        self.skeleton.corner_count(p)
    }

    /// Letter crossing from the tile at corner `c` to the tile at corner `c + 1`.
    pub fn chain_up(&self, p: usize, c: usize) -> Letter {
        let e = self.skeleton.fan(p)[c];
        Letter::new(e.arc, 1 - e.end)
    }

    /// Letter crossing from the tile at corner `c` to the tile at corner `c - 1`.
    pub fn chain_down(&self, p: usize, c: usize) -> Letter {
        let e = self.skeleton.fan(p)[c - 1];
        Letter::new(e.arc, e.end)
    }

    /// The chart arc `arc` as a crossing word (not yet canonical).
    pub fn reference_word(&self, arc: usize) -> CrossingWord {
        let ends = self.skeleton.arcs()[arc];
        let e0 = crate::surface::ArcEnd { arc, end: 0 };
        let e1 = crate::surface::ArcEnd { arc, end: 1 };
        CrossingWord::new(
            Corner::new(ends[0], self.skeleton.fan_position(e0) + 1),
            Vec::new(),
            Corner::new(ends[1], self.skeleton.fan_position(e1)),
        )
    }

    pub fn reference_arc(&self, arc: usize) -> ArcClass {
        self.canonical(&self.reference_word(arc))
    }

    /// Checks that every letter leaves the current tile and that both
    /// corners belong to the tiles where the word starts and ends.
    pub fn check_word(&self, w: &CrossingWord) -> Result<()> {
        for c in [w.start, w.end] {
            if c.point >= self.m() || c.corner >= self.corner_count(c.point) {
                return Err(Error::Domain(format!("corner {c} does not exist")));
            }
        }
        let mut face = self.corner_face(w.start).0;
        for (k, &l) in w.letters.iter().enumerate() {
            if l.arc >= self.n() || l.side > 1 {
                return Err(Error::Domain(format!("letter {l} does not exist")));
            }
            if self.side_face(l).0 != face {
                return Err(Error::Domain(format!(
                    "letter {} ({l}) does not leave the current face",
                    k + 1
                )));
            }
            face = self.target_face(l);
        }
        if self.corner_face(w.end).0 != face {
            return Err(Error::Domain(format!(
                "end corner {} is not on the final face",
                w.end
            )));
        }
        Ok(())
    }

    /// Free reduction, then sliding both ends along their chains while the
    /// word starts or ends with a chain crossing. The result is the geodesic
    /// between the two chains.
    pub fn reduce(&self, w: &CrossingWord) -> CrossingWord {
        let w = CrossingWord::new(w.start, free_reduce(&w.letters), w.end);
        self.trim_end(&self.trim_start(&w))
    }

    fn trim_start(&self, w: &CrossingWord) -> CrossingWord {
        let mut start = w.start;
        let mut head = 0;
        while head < w.letters.len() {
            let l = w.letters[head];
            let p = start.point;
            if start.corner + 1 < self.corner_count(p) && self.chain_up(p, start.corner) == l {
                start.corner += 1;
            } else if start.corner > 0 && self.chain_down(p, start.corner) == l {
                start.corner -= 1;
            } else {
                break;
            }
            head += 1;
        }
        CrossingWord::new(start, w.letters[head..].to_vec(), w.end)
    }

    fn trim_end(&self, w: &CrossingWord) -> CrossingWord {
        let mut end = w.end;
        let mut tail = w.letters.len();
        while tail > 0 {
            let l = w.letters[tail - 1];
            let q = end.point;
            // `l` enters the tile at `end`; coming from corner c - 1 or c + 1
            // of the same chain makes the crossing redundant.
            if end.corner > 0 && self.chain_up(q, end.corner - 1) == l {
                end.corner -= 1;
            } else if end.corner + 1 < self.corner_count(q) && self.chain_down(q, end.corner + 1) == l {
                end.corner += 1;
            } else {
                break;
            }
            tail -= 1;
        }
        CrossingWord::new(w.start, w.letters[..tail].to_vec(), end)
    }

    /// All reduced words of the same arc in the given orientation. There is
    /// more than one only when both ends lie on two common tiles.
    fn alternatives(&self, w: &CrossingWord) -> Vec<CrossingWord> {
        let mut out = vec![w.clone()];
        if !w.letters.is_empty() {
            return out;
        }
        let p = w.start.point;
        for up in [true, false] {
            let moved = if up {
                (w.start.corner + 1 < self.corner_count(p))
                    .then(|| (Corner::new(p, w.start.corner + 1), self.chain_up(p, w.start.corner)))
            } else {
                (w.start.corner > 0)
                    .then(|| (Corner::new(p, w.start.corner - 1), self.chain_down(p, w.start.corner)))
            };
            if let Some((start, l)) = moved {
                let cand = self.trim_end(&CrossingWord::new(start, vec![l.inverse()], w.end));
                if cand.letters.is_empty() && cand.start == start {
                    out.push(cand);
                }
            }
        }
        out
    }

    /// The canonical representative: the least reduced word over both
    /// orientations.
    pub fn canonical(&self, w: &CrossingWord) -> ArcClass {
        let r = self.reduce(w);
        let mut best: Option<CrossingWord> = None;
        for cand in self
            .alternatives(&r)
            .into_iter()
            .chain(self.alternatives(&r.reversed()))
        {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        ArcClass(best.expect("at least one alternative"))
    }

    /// Validates and canonicalizes a user-supplied word.
    pub fn arc(&self, w: &CrossingWord) -> Result<ArcClass> {
        self.check_word(w)?;
        let a = self.canonical(w);
        if a.0.letters.is_empty() && a.0.start == a.0.end {
            return Err(Error::Domain(format!("word {w} is a null-homotopic path")));
        }
        Ok(a)
    }

    /// Moves a lifted vertex to the tile of its chain closest to the root.
    pub fn normalize(&self, mut v: LiftedVertex) -> LiftedVertex {
        while let Some(&last) = v.path.last() {
            let p = v.point;
            if v.corner + 1 < self.corner_count(p) && self.chain_up(p, v.corner) == last.inverse() {
                v.corner += 1;
            } else if v.corner > 0 && self.chain_down(p, v.corner) == last.inverse() {
                v.corner -= 1;
            } else {
                break;
            }
            v.path.pop();
        }
        v
    }

    /// Path to the tile at another corner of the same lifted vertex.
    fn path_to_corner(&self, v: &LiftedVertex, corner: usize) -> Vec<Letter> {
        let mut path = v.path.clone();
        let p = v.point;
        if corner > v.corner {
            for c in v.corner..corner {
                free_push(&mut path, self.chain_up(p, c));
            }
        } else {
            for c in (corner + 1..=v.corner).rev() {
                free_push(&mut path, self.chain_down(p, c));
            }
        }
        path
    }

    /// The other end of the lift of `w` whose start is `v`.
    pub fn lift_end(&self, w: &CrossingWord, v: &LiftedVertex) -> LiftedVertex {
        debug_assert_eq!(w.start.point, v.point);
        let mut path = self.path_to_corner(v, w.start.corner);
        for &l in &w.letters {
            free_push(&mut path, l);
        }
        self.normalize(LiftedVertex {
            point: w.end.point,
            corner: w.end.corner,
            path,
        })
    }

    /// The arc joining two lifted vertices.
    pub fn word_between(&self, x: &LiftedVertex, y: &LiftedVertex) -> CrossingWord {
        let mut letters: Vec<Letter> = x.path.iter().rev().map(|l| l.inverse()).collect();
        for &l in &y.path {
            free_push(&mut letters, l);
        }
        let letters = free_reduce(&letters);
        self.reduce(&CrossingWord::new(
            Corner::new(x.point, x.corner),
            letters,
            Corner::new(y.point, y.corner),
        ))
    }

    /// Boundary-order key of a normalized vertex.
    pub fn key(&self, frame: Frame, v: &LiftedVertex) -> Vec<usize> {
        let (mut face, idx) = self.corner_face(frame.root);
        let mut entry = 2 * idx;
        let mut key = Vec::with_capacity(v.path.len() + 1);
        for &l in &v.path {
            let len2 = 2 * self.faces[face].len();
            let (f, i) = self.side_face(l);
            debug_assert_eq!(f, face);
            key.push((2 * i + 1 + len2 - entry) % len2);
            let (g, j) = self.side_face(l.inverse());
            face = g;
            entry = 2 * j + 1;
        }
        let len2 = 2 * self.faces[face].len();
        let (f, i) = self.corner_face(Corner::new(v.point, v.corner));
        debug_assert_eq!(f, face);
        key.push((2 * i + len2 - entry) % len2);
        key
    }

    /// Lift of `w` anchored with its start at the root of its own start tile.
    fn root_lift(&self, w: &CrossingWord) -> (Frame, LiftedVertex, LiftedVertex) {
        let frame = Frame { root: w.start };
        let x = LiftedVertex {
            point: w.start.point,
            corner: w.start.corner,
            path: Vec::new(),
        };
        let y = self.lift_end(w, &x);
        (frame, x, y)
    }

    /// Every lift of `b` that passes through a tile of the lift of `a`
    /// rooted at `a`'s start, as endpoint pairs.
    fn lifts_through(&self, a: &CrossingWord, b: &CrossingWord) -> Vec<(LiftedVertex, LiftedVertex)> {
        // Tiles of a: path prefixes and base faces.
        let mut a_faces = Vec::with_capacity(a.letters.len() + 1);
        a_faces.push(self.corner_face(a.start).0);
        for &l in &a.letters {
            a_faces.push(self.target_face(l));
        }
        let mut b_faces = Vec::with_capacity(b.letters.len() + 1);
        b_faces.push(self.corner_face(b.start).0);
        for &l in &b.letters {
            b_faces.push(self.target_face(l));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (i, &fa) in a_faces.iter().enumerate() {
            for (k, &fb) in b_faces.iter().enumerate() {
                if fa != fb {
                    continue;
                }
                // Only the first tile of a run shared with the same lift.
                if i > 0 && k > 0 && a.letters[i - 1] == b.letters[k - 1] {
                    continue;
                }
                if i > 0 && k + 1 < b_faces.len() && a.letters[i - 1] == b.letters[k].inverse() {
                    continue;
                }
                let prefix = &a.letters[..i];
                let mut start_path = prefix.to_vec();
                for &l in b.letters[..k].iter().rev() {
                    free_push(&mut start_path, l.inverse());
                }
                let x = self.normalize(LiftedVertex {
                    point: b.start.point,
                    corner: b.start.corner,
                    path: start_path,
                });
                let mut end_path = prefix.to_vec();
                for &l in &b.letters[k..] {
                    free_push(&mut end_path, l);
                }
                let y = self.normalize(LiftedVertex {
                    point: b.end.point,
                    corner: b.end.corner,
                    path: end_path,
                });
                let pair = if self_order(&x, &y) { (x, y) } else { (y, x) };
                if seen.insert(pair.clone()) {
                    out.push(pair);
                }
            }
        }
        out
    }

    /// True iff the interiors of `a` and `b` must intersect.
    pub fn crosses(&self, a: &ArcClass, b: &ArcClass) -> bool {
        self.crossing_lifts(&a.0, &b.0, false)
    }

    /// True iff the arc has an embedded representative.
    pub fn embedded(&self, a: &ArcClass) -> bool {
        !self.crossing_lifts(&a.0, &a.0, true)
    }

    fn crossing_lifts(&self, a: &CrossingWord, b: &CrossingWord, same: bool) -> bool {
        let (frame, v0, q) = self.root_lift(a);
        let kq = self.key(frame, &q);
        let inside = |v: &LiftedVertex| v != &v0 && v != &q && self.key(frame, v) < kq;
        for (x, y) in self.lifts_through(a, b) {
            if same && ((x == v0 && y == q) || (x == q && y == v0)) {
                continue;
            }
            if x == v0 || x == q || y == v0 || y == q {
                continue;
            }
            if inside(&x) != inside(&y) {
                return true;
            }
        }
        false
    }

    /// Key of the far end of `w` lifted from the lift of point `p` at the
    /// root corner `(p, 0)`, or `None` if `w` has no end at `p`. Loops are
    /// not supported and give the key of the start-anchored lift.
    fn far_key_at(&self, w: &CrossingWord, p: usize) -> Option<Vec<usize>> {
        let oriented = if w.start.point == p {
            w.clone()
        } else if w.end.point == p {
            w.reversed()
        } else {
            return None;
        };
        let frame = Frame {
            root: Corner::new(p, 0),
        };
        let root = LiftedVertex {
            point: p,
            corner: 0,
            path: Vec::new(),
        };
        Some(self.key(frame, &self.lift_end(&oriented, &root)))
    }

    /// How two distinct arcs meet.
    pub fn relation(&self, a: &ArcClass, b: &ArcClass) -> PairRelation {
        let crossing = self.crosses(a, b);
        let mut shared = Vec::new();
        let (a0, a1) = a.endpoints();
        let mut points = vec![a0];
        if a1 != a0 {
            points.push(a1);
        }
        for p in points {
            if let (Some(ka), Some(kb)) = (self.far_key_at(&a.0, p), self.far_key_at(&b.0, p)) {
                shared.push(SharedEndpoint {
                    point: p,
                    second_follows_first: ka < kb,
                });
            }
        }
        PairRelation { crossing, shared }
    }

    /// The image of `target` after dragging each of its ends that is an
    /// endpoint of `by` to the far end of the lift of `by` there.
    ///
    /// This is the smoothing of the concatenation at common endpoints: with
    /// one common endpoint the result joins the two free ends; with two it
    /// runs along `by`, back along `target` and along `by` again.
    fn drag_ends(&self, target: &ArcClass, by: &ArcClass) -> ArcClass {
        let (_, x, y) = self.root_lift(&target.0);
        let drag = |v: &LiftedVertex| -> LiftedVertex {
            let w = if by.0.start.point == v.point {
                Some(by.0.clone())
            } else if by.0.end.point == v.point {
                Some(by.0.reversed())
            } else {
                None
            };
            match w {
                Some(w) => self.lift_end(&w, v),
                None => v.clone(),
            }
        };
        let (x2, y2) = (drag(&x), drag(&y));
        self.canonical(&self.word_between(&x2, &y2))
    }

    fn check_exceptional_pair(&self, a1: &ArcClass, a2: &ArcClass) -> Result<PairRelation> {
        if a1 == a2 {
            return Err(Error::Precondition("the two arcs are isotopic".into()));
        }
        if a1.is_loop() || a2.is_loop() {
            return Err(Error::Precondition("mutation of loops is not supported".into()));
        }
        let rel = self.relation(a1, a2);
        if !rel.is_exceptional_pair() {
            return Err(Error::Precondition(format!("not an ordered exceptional pair: {rel}")));
        }
        Ok(rel)
    }

    /// Right mutation `R_{a2} a1` of an ordered exceptional pair `(a1, a2)`.
    pub fn right_mutation(&self, a1: &ArcClass, a2: &ArcClass) -> Result<(ArcClass, MutationCase)> {
        let rel = self.check_exceptional_pair(a1, a2)?;
        Ok((self.drag_ends(a1, a2), rel.case()))
    }

    /// Left mutation `L_{a1} a2` of an ordered exceptional pair `(a1, a2)`.
    pub fn left_mutation(&self, a1: &ArcClass, a2: &ArcClass) -> Result<(ArcClass, MutationCase)> {
        let rel = self.check_exceptional_pair(a1, a2)?;
        Ok((self.drag_ends(a2, a1), rel.case()))
    }

    /// Slides a lifted vertex along the lifted boundary: each forward step
    /// moves to the lift of `next(p)` reached along the forward segment.
    pub fn slide(&self, v: &LiftedVertex, steps: i64) -> LiftedVertex {
        let mut v = v.clone();
        for _ in 0..steps.unsigned_abs() {
            let p = v.point;
            if steps > 0 {
                let path = self.path_to_corner(&v, 0);
                let q = self.skeleton.next(p);
                v = LiftedVertex {
                    point: q,
                    corner: self.corner_count(q) - 1,
                    path,
                };
            } else {
                let path = self.path_to_corner(&v, self.corner_count(p) - 1);
                v = LiftedVertex {
                    point: self.skeleton.prev(p),
                    corner: 0,
                    path,
                };
            }
            v = self.normalize(v);
        }
        v
    }

    /// Image of an arc under the `power`-th Dehn twist about a curve
    /// parallel to boundary component `component`: every end on that
    /// component slides once around it.
    pub fn boundary_twist(&self, a: &ArcClass, component: usize, power: i64) -> Result<ArcClass> {
        let comp = self
            .skeleton
            .boundaries()
            .get(component)
            .ok_or(Error::IndexOutOfRange {
                index: component + 1,
                max: self.skeleton.boundaries().len(),
            })?;
        let steps = power * comp.len() as i64;
        let (_, x, y) = self.root_lift(&a.0);
        let move_end = |v: LiftedVertex| if comp.contains(&v.point) { self.slide(&v, steps) } else { v };
        let (x, y) = (move_end(x), move_end(y));
        Ok(self.canonical(&self.word_between(&x, &y)))
    }

    /// Every embedded arc between distinct points whose canonical word has
    /// at most `max_letters` letters, sorted.
    pub fn enumerate_arcs(&self, max_letters: usize) -> Vec<ArcClass> {
        let mut found = std::collections::BTreeSet::new();
        let mut path = Vec::new();
        for p in 0..self.m() {
            for c in 0..self.corner_count(p) {
                let start = Corner::new(p, c);
                self.enumerate_from(start, self.corner_face(start).0, &mut path, max_letters, &mut found);
            }
        }
        found
            .into_iter()
            .filter(|a: &ArcClass| a.0.letters.len() <= max_letters && self.embedded(a))
            .collect()
    }

    fn enumerate_from(
        &self,
        start: Corner,
        face: usize,
        path: &mut Vec<Letter>,
        budget: usize,
        found: &mut std::collections::BTreeSet<ArcClass>,
    ) {
        for &(q, c) in &self.faces[face].corners {
            if q == start.point {
                continue;
            }
            let w = CrossingWord::new(start, path.clone(), Corner::new(q, c));
            let r = self.reduce(&w);
            if r.letters.len() == path.len() {
                found.insert(self.canonical(&r));
            }
        }
        if path.len() == budget {
            return;
        }
        for side in &self.faces[face].sides {
            if let Side::Arc { arc, side } = *side {
                let l = Letter::new(arc, side);
                if path.last() == Some(&l.inverse()) {
                    continue;
                }
                path.push(l);
                self.enumerate_from(start, self.target_face(l), path, budget, found);
                path.pop();
            }
        }
    }
}

fn self_order(x: &LiftedVertex, y: &LiftedVertex) -> bool {
    (x.point, x.corner, &x.path) <= (y.point, y.corner, &y.path)
}

/// Which configuration a mutation was applied in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MutationCase {
    Disjoint,
    OneCommonEndpoint,
    TwoCommonEndpoints,
}

impl fmt::Display for MutationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MutationCase::Disjoint => "disjoint",
            MutationCase::OneCommonEndpoint => "one-endpoint",
            MutationCase::TwoCommonEndpoints => "two-endpoints",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedEndpoint {
    pub point: usize,
    /// The second arc follows the first counterclockwise at `point`.
    pub second_follows_first: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRelation {
    pub crossing: bool,
    pub shared: Vec<SharedEndpoint>,
}

impl PairRelation {
    /// Interiors disjoint and the second arc following the first at each
    /// common endpoint.
    pub fn is_exceptional_pair(&self) -> bool {
        !self.crossing && self.shared.iter().all(|s| s.second_follows_first)
    }

    pub fn case(&self) -> MutationCase {
        match self.shared.len() {
            0 => MutationCase::Disjoint,
            1 => MutationCase::OneCommonEndpoint,
            _ => MutationCase::TwoCommonEndpoints,
        }
    }
}

impl fmt::Display for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "crossing={}", self.crossing)?;
        for s in &self.shared {
            write!(
                f,
                " shared={}:{}",
                s.point + 1,
                if s.second_follows_first { "ccw" } else { "cw" }
            )?;
        }
        Ok(())
    }
}

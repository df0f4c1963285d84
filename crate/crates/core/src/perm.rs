//! Permutations, transpositions and Hurwitz systems.
//!
//! Products are read left to right: `compose(p, q)` applies `p` first and
//! then `q`, so the product of a tuple `(t1, t2, ..., tn)` sends a label `x`
//! to `tn(...t2(t1(x)))`. The convention is used everywhere in the crate.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{parse_err, Error, Result};

/// The label set `{1, ..., m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedPointSet {
    m: usize,
}

impl MarkedPointSet {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("a marked point set needs at least one label".into()));
        }
        Ok(Self { m })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> {
        1..=self.m
    }
}

/// A bijection of `{1, ..., m}` stored as a 0-based image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return Err(Error::Domain(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `{1..m}` from 1-based disjoint cycles.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > m || touched[x - 1] {
                    return Err(Error::Domain(format!("bad cycle {cycle:?} on {m} labels")));
                }
                touched[x - 1] = true;
                let y = cycle[(k + 1) % cycle.len()];
                if y == 0 || y > m {
                    return Err(Error::Domain(format!("bad cycle {cycle:?} on {m} labels")));
                }
                images[x - 1] = y - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based label.
    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    /// Disjoint cycles with 1-based labels, each starting at its smallest
    /// label, ordered by that label. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.images.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// `p` first, then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::Domain(format!(
            "cannot compose permutations of degrees {} and {}",
            p.degree(),
            q.degree()
        )));
    }
    Ok(Permutation {
        images: p.images.iter().map(|&i| q.images[i]).collect(),
    })
}

/// A transposition `(x y)` of 1-based labels, normalized so that `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    x: usize,
    y: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Domain("labels are 1-based".into()));
        }
        if a == b {
            return Err(Error::Domain(format!("({a} {b}) is not a transposition")));
        }
        Ok(Self {
            x: a.min(b),
            y: a.max(b),
        })
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn moves(&self, label: usize) -> bool {
        label == self.x || label == self.y
    }

    /// Image of a label under the transposition.
    pub fn apply(&self, label: usize) -> usize {
        if label == self.x {
            self.y
        } else if label == self.y {
            self.x
        } else {
            label
        }
    }

    /// `t * self * t` for an involution `t`, which is again a transposition.
    pub fn conjugate_by(&self, t: &Transposition) -> Transposition {
        Transposition::new(t.apply(self.x), t.apply(self.y)).expect("conjugate of a transposition")
    }

    pub fn to_permutation(&self, m: usize) -> Result<Permutation> {
        if self.y > m {
            return Err(Error::Domain(format!("{self} is not a permutation of {m} labels")));
        }
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(self.x - 1, self.y - 1);
        Ok(Permutation { images })
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.x, self.y)
    }
}

/// Multiset of cycle lengths, stored in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    CycleType::new(p.cycles().iter().map(Vec::len).collect()).expect("cycles of a permutation")
}

/// True iff the transpositions generate the full symmetric group, i.e. the
/// graph on the labels with one edge per transposition is connected.
pub fn generates_full(tuple: &[Transposition], points: MarkedPointSet) -> bool {
    let m = points.len();
    if tuple.iter().any(|t| t.y > m) {
        return false;
    }
    if m == 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = m;
    for t in tuple {
        let (a, b) = (find(&mut parent, t.x - 1), find(&mut parent, t.y - 1));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

/// An ordered tuple of transpositions generating the symmetric group of its
/// marked point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzSystem {
    m: usize,
    tuple: Vec<Transposition>,
}

impl HurwitzSystem {
    pub fn new(points: MarkedPointSet, tuple: Vec<Transposition>) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::Domain("a Hurwitz system has at least one transposition".into()));
        }
        if !generates_full(&tuple, points) {
            return Err(Error::Domain(format!(
                "transpositions do not generate the symmetric group on {} labels",
                points.len()
            )));
        }
        Ok(Self {
            m: points.len(),
            tuple,
        })
    }

    /// Convenience constructor from 1-based label pairs.
    pub fn from_pairs(m: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let tuple = pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(MarkedPointSet::new(m)?, tuple)
    }

    pub fn points(&self) -> MarkedPointSet {
        MarkedPointSet { m: self.m }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.tuple.len()
    }

    pub fn tuple(&self) -> &[Transposition] {
        &self.tuple
    }

    /// Length-prefixed little-endian encoding of the normalized pairs.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 4 * self.tuple.len());
        out.extend_from_slice(&(self.tuple.len() as u32).to_le_bytes());
        for t in &self.tuple {
            out.extend_from_slice(&(t.x as u16).to_le_bytes());
            out.extend_from_slice(&(t.y as u16).to_le_bytes());
        }
        out
    }
}

impl fmt::Display for HurwitzSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tuple {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Left-to-right product `t1 * t2 * ... * tn`.
pub fn product(h: &HurwitzSystem) -> Permutation {
    let mut images: Vec<usize> = (0..h.m).collect();
    for image in images.iter_mut() {
        let mut label = *image + 1;
        for t in &h.tuple {
            label = t.apply(label);
        }
        *image = label - 1;
    }
    Permutation { images }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Applies the braid generator `sigma_i` (1-based `i`) or its inverse.
///
/// Forward replaces `(t_i, t_{i+1})` by `(t_{i+1}, t_{i+1} t_i t_{i+1})`,
/// inverse replaces it by `(t_i t_{i+1} t_i, t_i)`.
pub fn hurwitz_move(h: &HurwitzSystem, i: usize, direction: Direction) -> Result<HurwitzSystem> {
    let n = h.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut tuple = h.tuple.clone();
    let (a, b) = (tuple[i - 1], tuple[i]);
    match direction {
        Direction::Forward => {
            tuple[i - 1] = b;
            tuple[i] = a.conjugate_by(&b);
        }
        Direction::Inverse => {
            tuple[i - 1] = b.conjugate_by(&a);
            tuple[i] = a;
        }
    }
    Ok(HurwitzSystem { m: h.m, tuple })
}

/// Applies a signed word of generators (`+i` for `sigma_i`, `-i` for its inverse), left to right.
pub fn hurwitz_word(h: &HurwitzSystem, word: &[i32]) -> Result<HurwitzSystem> {
    let mut cur = h.clone();
    for &g in word {
        let dir = if g > 0 { Direction::Forward } else { Direction::Inverse };
        cur = hurwitz_move(&cur, g.unsigned_abs() as usize, dir)?;
    }
    Ok(cur)
}

/// Genus, boundary count and boundary point distribution of the surface
/// determined by a Hurwitz system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceInvariants {
    pub genus: usize,
    pub boundary: usize,
    pub distribution: CycleType,
}

pub fn surface_invariants(h: &HurwitzSystem) -> Result<SurfaceInvariants> {
    let distribution = cycle_type(&product(h));
    let (n, m, b) = (h.n() as i64, h.m() as i64, distribution.len() as i64);
    let twice_genus = n - m - b + 2;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "n - m - b + 2 = {twice_genus} for n={n}, m={m}, b={b}"
        )));
    }
    Ok(SurfaceInvariants {
        genus: (twice_genus / 2) as usize,
        boundary: b as usize,
        distribution,
    })
}

/// Result of a breadth-first orbit closure.
#[derive(Debug, Clone)]
pub struct HurwitzOrbit {
    /// Systems in discovery order, seed first.
    pub systems: Vec<HurwitzSystem>,
    pub complete: bool,
}

impl HurwitzOrbit {
    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    /// Summary header followed by one system per line, sorted by canonical
    /// encoding so the output does not depend on discovery order.
    pub fn report(&self) -> String {
        let ct = self
            .systems
            .first()
            .map(|h| cycle_type(&product(h)).to_string())
            .unwrap_or_default();
        let mut sorted = self.systems.clone();
        sorted.sort_by_key(|h| h.canonical_bytes());
        let mut out = format!(
            "orbit_size={} complete={} cycle_type={}\n",
            self.systems.len(),
            self.complete,
            ct
        );
        for h in sorted {
            out.push_str(&h.to_string());
            out.push('\n');
        }
        out
    }
}

/// Breadth-first closure of `h` under all moves and their inverses.
///
/// When more than `limit` systems would be needed the partial orbit is
/// returned with `complete == false`.
pub fn hurwitz_orbit(h: &HurwitzSystem, limit: usize) -> Result<HurwitzOrbit> {
    if limit == 0 {
        return Err(Error::Domain("orbit limit must be at least 1".into()));
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut systems = vec![h.clone()];
    let mut queue = VecDeque::from([h.clone()]);
    seen.insert(h.canonical_bytes());
    while let Some(cur) = queue.pop_front() {
        for i in 1..cur.n() {
            for dir in [Direction::Forward, Direction::Inverse] {
                let next = hurwitz_move(&cur, i, dir)?;
                if seen.insert(next.canonical_bytes()) {
                    if systems.len() == limit {
                        return Ok(HurwitzOrbit {
                            systems,
                            complete: false,
                        });
                    }
                    systems.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(HurwitzOrbit {
        systems,
        complete: true,
    })
}

/// Every generating `n`-tuple of transpositions on `m` labels, in
/// lexicographic order.
pub fn all_hurwitz_systems(m: usize, n: usize) -> Vec<HurwitzSystem> {
    let mut transpositions = Vec::new();
    for x in 1..=m {
        for y in (x + 1)..=m {
            transpositions.push(Transposition { x, y });
        }
    }
    let points = MarkedPointSet { m };
    let mut out = Vec::new();
    if transpositions.is_empty() || n == 0 {
        return out;
    }
    let mut idx = vec![0usize; n];
    loop {
        let tuple: Vec<_> = idx.iter().map(|&k| transpositions[k]).collect();
        if generates_full(&tuple, points) {
            out.push(HurwitzSystem { m, tuple });
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < transpositions.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Connected components of the move graph on all generating `n`-tuples over
/// `m` labels. Components are listed in order of their smallest member.
pub fn move_graph_components(m: usize, n: usize) -> Vec<Vec<HurwitzSystem>> {
    let all = all_hurwitz_systems(m, n);
    let index: HashMap<&HurwitzSystem, usize> = all.iter().enumerate().map(|(k, h)| (h, k)).collect();
    let mut comp = vec![usize::MAX; all.len()];
    let mut out = Vec::new();
    for start in 0..all.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(k) = stack.pop() {
            for i in 1..n {
                for dir in [Direction::Forward, Direction::Inverse] {
                    let next = hurwitz_move(&all[k], i, dir).expect("index in range");
                    let j = index[&next];
                    if comp[j] == usize::MAX {
                        comp[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members.into_iter().map(|k| all[k].clone()).collect());
    }
    out
}

/// Parses the text format: a header line `m n` followed by `n` lines `x y`.
pub fn parse_hurwitz(text: &str) -> Result<HurwitzSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "header", "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(hl, "header", "expected `m n`"));
    }
    let m: usize = fields[0].parse().map_err(|_| parse_err(hl, "m", "not an integer"))?;
    let n: usize = fields[1].parse().map_err(|_| parse_err(hl, "n", "not an integer"))?;
    let points = MarkedPointSet::new(m).map_err(|e| parse_err(hl, "m", e.to_string()))?;
    let mut tuple = Vec::with_capacity(n);
    for k in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hl, "n", format!("expected {n} transpositions, found {k}")))?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 2 {
            return Err(parse_err(ln, "transposition", "expected `x y`"));
        }
        let x: usize = f[0].parse().map_err(|_| parse_err(ln, "x", "not an integer"))?;
        let y: usize = f[1].parse().map_err(|_| parse_err(ln, "y", "not an integer"))?;
        if x == 0 || y == 0 || x > m || y > m {
            return Err(parse_err(ln, "transposition", format!("labels must lie in 1..={m}")));
        }
        if x >= y {
            return Err(parse_err(ln, "transposition", "expected x < y"));
        }
        tuple.push(Transposition { x, y });
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "n", format!("more than {n} transpositions")));
    }
    HurwitzSystem::new(points, tuple).map_err(|e| parse_err(hl, "tuple", e.to_string()))
}

pub fn format_hurwitz(h: &HurwitzSystem) -> String {
    let mut out = format!("{} {}\n", h.m, h.n());
    for t in &h.tuple {
        out.push_str(&format!("{} {}\n", t.x, t.y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    /// Image of each label under a tuple applied left to right, evaluated
    /// one transposition at a time without going through `Permutation`.
    fn hand_product(m: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
        (1..=m)
            .map(|mut x| {
                for &(a, b) in pairs {
                    if x == a {
                        x = b;
                    } else if x == b {
                        x = a;
                    }
                }
                x
            })
            .collect()
    }

    #[test]
    fn compose_identity_and_involution() {
        let p = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(compose(&Permutation::identity(3), &p).unwrap(), p);
        let s = t(1, 2).to_permutation(3).unwrap();
        assert!(compose(&s, &s).unwrap().is_identity());
    }

    #[test]
    fn compose_is_left_to_right() {
        let r = compose(&t(1, 2).to_permutation(3).unwrap(), &t(2, 3).to_permutation(3).unwrap()).unwrap();
        assert_eq!(hand_product(3, &[(1, 2), (2, 3)]), vec![3, 1, 2]);
        assert_eq!((r.apply(1), r.apply(2), r.apply(3)), (3, 1, 2));
        assert_eq!(r, Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap());
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        assert!(compose(&Permutation::identity(2), &Permutation::identity(3)).is_err());
    }

    #[test]
    fn product_examples() {
        let h = HurwitzSystem::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(product(&h), t(1, 2).to_permutation(2).unwrap());
        let h = HurwitzSystem::from_pairs(2, &[(1, 2); 4]).unwrap();
        assert!(product(&h).is_identity());
        let h = HurwitzSystem::from_pairs(3, &[(1, 2), (2, 3), (1, 2)]).unwrap();
        assert_eq!(hand_product(3, &[(1, 2), (2, 3), (1, 2)]), vec![3, 2, 1]);
        assert_eq!(product(&h), t(1, 3).to_permutation(3).unwrap());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&Permutation::identity(2)).parts(), &[1, 1]);
        assert_eq!(cycle_type(&t(1, 3).to_permutation(3).unwrap()).parts(), &[2, 1]);
        assert_eq!(cycle_type(&t(1, 2).to_permutation(2).unwrap()).parts(), &[2]);
    }

    /// Subgroup closure by brute force: multiply generators until nothing new appears.
    fn closure_size(m: usize, gens: &[Transposition]) -> usize {
        let gens: Vec<Permutation> = gens.iter().map(|g| g.to_permutation(m).unwrap()).collect();
        let mut seen = HashSet::from([Permutation::identity(m)]);
        let mut frontier = vec![Permutation::identity(m)];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = compose(&p, g).unwrap();
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn generation_matches_closure_oracle_on_all_triples() {
        let pts = MarkedPointSet::new(3).unwrap();
        let ts = [t(1, 2), t(1, 3), t(2, 3)];
        let mut generating = 0;
        for a in ts {
            for b in ts {
                for c in ts {
                    let tuple = [a, b, c];
                    let oracle = closure_size(3, &tuple) == 6;
                    assert_eq!(generates_full(&tuple, pts), oracle, "{tuple:?}");
                    generating += usize::from(oracle);
                }
            }
        }
        assert_eq!(generating, 24);
        assert!(generates_full(&[t(1, 2), t(2, 3)], pts));
        assert!(!generates_full(&[t(1, 2), t(1, 2)], pts));
    }

    #[test]
    fn move_examples() {
        let h = HurwitzSystem::from_pairs(3, &[(1, 2), (2, 3), (1, 2)]).unwrap();
        let moved = hurwitz_move(&h, 1, Direction::Forward).unwrap();
        assert_eq!(moved, HurwitzSystem::from_pairs(3, &[(2, 3), (1, 3), (1, 2)]).unwrap());
        assert_eq!(hurwitz_move(&moved, 1, Direction::Inverse).unwrap(), h);
        let h2 = HurwitzSystem::from_pairs(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(hurwitz_move(&h2, 1, Direction::Forward).unwrap(), h2);
        assert!(matches!(
            hurwitz_move(&h, 3, Direction::Forward),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        ));
        assert!(hurwitz_move(&h, 0, Direction::Forward).is_err());
    }

    #[test]
    fn invariants_examples() {
        let inv = surface_invariants(&HurwitzSystem::from_pairs(2, &[(1, 2)]).unwrap()).unwrap();
        assert_eq!((inv.genus, inv.boundary, inv.distribution.parts().to_vec()), (0, 1, vec![2]));
        let inv = surface_invariants(&HurwitzSystem::from_pairs(2, &[(1, 2); 4]).unwrap()).unwrap();
        assert_eq!((inv.genus, inv.boundary, inv.distribution.parts().to_vec()), (1, 2, vec![1, 1]));
        let inv =
            surface_invariants(&HurwitzSystem::from_pairs(3, &[(1, 2), (2, 3), (1, 2)]).unwrap()).unwrap();
        assert_eq!((inv.genus, inv.boundary, inv.distribution.parts().to_vec()), (0, 2, vec![2, 1]));
    }

    #[test]
    fn orbit_examples() {
        let h = HurwitzSystem::from_pairs(3, &[(1, 2), (2, 3), (1, 2)]).unwrap();
        let orbit = hurwitz_orbit(&h, 1000).unwrap();
        assert!(orbit.complete);
        // Moves fix the product (1 3), so the orbit is a third of the 24 generating triples.
        assert_eq!(orbit.len(), 8);
        let target = product(&h);
        assert!(orbit.systems.iter().all(|k| product(k) == target));
        let same_product = all_hurwitz_systems(3, 3)
            .into_iter()
            .filter(|k| product(k) == target)
            .count();
        assert_eq!(same_product, 8);
        for n in 1..6 {
            let h = HurwitzSystem::from_pairs(2, &vec![(1, 2); n]).unwrap();
            assert_eq!(hurwitz_orbit(&h, 10).unwrap().len(), 1);
        }
        let partial = hurwitz_orbit(&h, 5).unwrap();
        assert!(!partial.complete);
        assert_eq!(partial.len(), 5);
        assert!(hurwitz_orbit(&h, 0).is_err());
    }

    #[test]
    fn text_format_roundtrip_and_errors() {
        let h = HurwitzSystem::from_pairs(3, &[(1, 2), (2, 3), (1, 2)]).unwrap();
        assert_eq!(parse_hurwitz(&format_hurwitz(&h)).unwrap(), h);
        let err = parse_hurwitz("3 2\n1 2\n2 x\n").unwrap_err();
        assert_eq!(err, parse_err(3, "y", "not an integer"));
        assert!(parse_hurwitz("3 2\n1 2\n1 2\n").is_err());
        assert!(parse_hurwitz("3 1\n2 1\n").is_err());
    }

    #[test]
    fn canonical_bytes_are_length_prefixed() {
        let h = HurwitzSystem::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(h.canonical_bytes(), vec![1, 0, 0, 0, 1, 0, 2, 0]);
    }
}

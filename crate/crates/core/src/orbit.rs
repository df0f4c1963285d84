//! Orbit search over ordered dissections under the braid action.
//!
//! States are deduplicated by their tuple of canonical arcs. Frontiers are
//! expanded in parallel and merged sequentially in a fixed order, so the
//! visited list does not depend on the number of threads.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arcs::{ArcClass, Chart};
use crate::deck::{twist_dissection, DeckInvolution};
use crate::error::{Error, Result};
use crate::mutation::{braid_act, hurwitz_generator, hurwitz_of_dissection, BraidWord, Dissection};
use crate::perm::{hurwitz_orbit, product, HurwitzSystem};
use crate::surface::{standard_skeleton, MarkedSurface};

/// Registered invariants of one visited state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateRecord {
    pub dissection: Dissection,
    /// Replays from the seed to this state.
    pub word: BraidWord,
    pub hurwitz: HurwitzSystem,
    /// Whether the deck involution fixes every arc; `None` off double covers.
    pub deck_fixed: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub states: Vec<StateRecord>,
    /// Number of completed BFS levels.
    pub depth: usize,
    /// No new state exists beyond the visited ones.
    pub complete: bool,
}

impl OrbitReport {
    pub fn seed(&self) -> &Dissection {
        &self.states[0].dissection
    }

    pub fn contains(&self, d: &Dissection) -> bool {
        self.states.iter().any(|s| &s.dissection == d)
    }

    pub fn keys(&self) -> BTreeSet<Vec<ArcClass>> {
        self.states.iter().map(|s| s.dissection.state_key()).collect()
    }
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "states={} depth={} complete={}",
            self.states.len(),
            self.depth,
            self.complete
        )?;
        for (k, s) in self.states.iter().enumerate() {
            let deck = match s.deck_fixed {
                Some(v) => format!(" deck_fixed={v}"),
                None => String::new(),
            };
            writeln!(f, "state {} word=[{}] hurwitz={}{}", k + 1, s.word, s.hurwitz, deck)?;
        }
        Ok(())
    }
}

fn generators(n: usize) -> Vec<i32> {
    (1..n as i32).flat_map(|g| [g, -g]).collect()
}

fn deck_of(chart: &Chart) -> Option<DeckInvolution> {
    if chart.m() == 2 {
        DeckInvolution::of_double_cover(chart).ok()
    } else {
        None
    }
}

/// One validated step from `parent`, with the registered invariants checked
/// against the parent's: the Hurwitz system must follow the matching move,
/// and deck invariance must be preserved.
fn step(parent: &StateRecord, g: i32, deck: Option<&DeckInvolution>) -> Result<StateRecord> {
    let (d, _) = braid_act(&parent.dissection, &BraidWord(vec![g]))?;
    let hurwitz = hurwitz_of_dissection(&d)?;
    if hurwitz != hurwitz_generator(&parent.hurwitz, g)? {
        return Err(Error::Internal(format!(
            "Hurwitz system of the mutated dissection does not follow the move {g}"
        )));
    }
    let deck_fixed = deck.map(|k| k.fixes_dissection(&d));
    if deck_fixed != parent.deck_fixed {
        return Err(Error::Internal(format!(
            "deck invariance changed under generator {g}"
        )));
    }
    let mut word = parent.word.clone();
    word.0.push(g);
    Ok(StateRecord {
        dissection: d,
        word,
        hurwitz,
        deck_fixed,
    })
}

fn record_of(d: &Dissection, deck: Option<&DeckInvolution>) -> Result<StateRecord> {
    let v = d.validate();
    if !v.is_valid() {
        return Err(Error::Precondition(format!(
            "the seed is not a valid dissection: {}",
            v.violations[0]
        )));
    }
    Ok(StateRecord {
        dissection: d.clone(),
        word: BraidWord::default(),
        hurwitz: hurwitz_of_dissection(d)?,
        deck_fixed: deck.map(|k| k.fixes_dissection(d)),
    })
}

/// Successors of a frontier, in frontier order then generator order.
fn expand(frontier: &[StateRecord], deck: Option<&DeckInvolution>) -> Result<Vec<StateRecord>> {
    let gens = generators(frontier.first().map_or(0, |s| s.dissection.n()));
    let nested: Vec<Result<Vec<StateRecord>>> = frontier
        .par_iter()
        .map(|s| gens.iter().map(|&g| step(s, g, deck)).collect())
        .collect();
    let mut out = Vec::new();
    for r in nested {
        out.extend(r?);
    }
    Ok(out)
}

/// Breadth-first closure of `seed` under all generators and their inverses.
pub fn explore(seed: &Dissection, max_depth: usize, max_states: usize) -> Result<OrbitReport> {
    if max_states == 0 {
        return Err(Error::Domain("max_states must be positive".into()));
    }
    let deck = deck_of(seed.chart());
    let root = record_of(seed, deck.as_ref())?;
    let mut index: HashMap<Vec<ArcClass>, usize> = HashMap::new();
    index.insert(root.dissection.state_key(), 0);
    let mut states = vec![root];
    let mut frontier = vec![0usize];
    let mut depth = 0;
    let mut complete = false;
    while depth < max_depth {
        let current: Vec<StateRecord> = frontier.iter().map(|&k| states[k].clone()).collect();
        let succ = expand(&current, deck.as_ref())?;
        let mut next = Vec::new();
        let mut full = false;
        for s in succ {
            let key = s.dissection.state_key();
            if index.contains_key(&key) {
                continue;
            }
            if states.len() >= max_states {
                full = true;
                break;
            }
            index.insert(key, states.len());
            next.push(states.len());
            states.push(s);
        }
        depth += 1;
        if full {
            break;
        }
        if next.is_empty() {
            complete = true;
            break;
        }
        frontier = next;
    }
    if seed.n() <= 1 {
        complete = true;
    }
    Ok(OrbitReport {
        states,
        depth,
        complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparationCertificate {
    /// Replaying the word from the first dissection gives the second.
    Path(BraidWord),
    /// A braid-invariant takes different values.
    Witness {
        invariant: String,
        first: String,
        second: String,
    },
    /// Neither found within the explored radius.
    Inconclusive { depth: usize },
}

impl SeparationCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            SeparationCertificate::Path(_) => "path",
            SeparationCertificate::Witness { .. } => "witness",
            SeparationCertificate::Inconclusive { .. } => "inconclusive",
        }
    }
}

impl fmt::Display for SeparationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeparationCertificate::Path(w) => writeln!(f, "path word=[{w}]")?,
            SeparationCertificate::Witness {
                invariant,
                first,
                second,
            } => writeln!(f, "witness invariant={invariant} first={first} second={second}")?,
            SeparationCertificate::Inconclusive { depth } => writeln!(f, "inconclusive depth={depth}")?,
        }
        write!(f, "certificate={}", self.kind())
    }
}

/// Hurwitz-orbit states visited before giving up on orbit membership.
const HURWITZ_ORBIT_LIMIT: usize = 200_000;

/// Decides whether two dissections on one chart lie in one braid orbit.
///
/// Registered invariants are compared first: the product permutation and
/// Hurwitz move orbit of the projections, then deck invariance on double
/// covers. Otherwise a bidirectional search runs to total depth `max_depth`,
/// directly and then through the chart's own dissection.
pub fn separate(d1: &Dissection, d2: &Dissection, max_depth: usize, max_states: usize) -> Result<SeparationCertificate> {
    if d1.chart().skeleton() != d2.chart().skeleton() {
        return Err(Error::Domain("the dissections live on different charts".into()));
    }
    let deck = deck_of(d1.chart());
    let r1 = record_of(d1, deck.as_ref())?;
    let r2 = record_of(d2, deck.as_ref())?;
    let (p1, p2) = (product(&r1.hurwitz), product(&r2.hurwitz));
    if p1 != p2 {
        return Ok(SeparationCertificate::Witness {
            invariant: "hurwitz_class".into(),
            first: p1.to_string(),
            second: p2.to_string(),
        });
    }
    let orbit = hurwitz_orbit(&r1.hurwitz, HURWITZ_ORBIT_LIMIT)?;
    if orbit.complete && !orbit.systems.contains(&r2.hurwitz) {
        return Ok(SeparationCertificate::Witness {
            invariant: "hurwitz_class".into(),
            first: r1.hurwitz.to_string(),
            second: r2.hurwitz.to_string(),
        });
    }
    if let (Some(a), Some(b)) = (r1.deck_fixed, r2.deck_fixed) {
        if a != b {
            return Ok(SeparationCertificate::Witness {
                invariant: "deck_invariance".into(),
                first: a.to_string(),
                second: b.to_string(),
            });
        }
    }
    let (found, depth) = search(r1.clone(), r2.clone(), deck.as_ref(), max_depth, max_states)?;
    if let Some(w) = found {
        return verified_path(d1, d2, w);
    }
    // Relay through the chart's own dissection: two searches of the full
    // radius reach pairs twice as far apart as one direct search.
    let hub = Dissection::reference(d1.chart().clone());
    if &hub != d1 && &hub != d2 {
        let rh = record_of(&hub, deck.as_ref())?;
        let (a, _) = search(r1, rh.clone(), deck.as_ref(), max_depth, max_states)?;
        if let Some(a) = a {
            let (b, _) = search(r2, rh, deck.as_ref(), max_depth, max_states)?;
            if let Some(b) = b {
                return verified_path(d1, d2, concat(&a, &b.inverse()));
            }
        }
    }
    Ok(SeparationCertificate::Inconclusive { depth })
}

/// Concatenation with adjacent inverse generators cancelled.
fn concat(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let mut out: Vec<i32> = Vec::with_capacity(a.0.len() + b.0.len());
    for &g in a.0.iter().chain(&b.0) {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    BraidWord(out)
}

/// Bidirectional search; returns a word from the first state to the second
/// and the depth spent.
fn search(
    r1: StateRecord,
    r2: StateRecord,
    deck: Option<&DeckInvolution>,
    max_depth: usize,
    max_states: usize,
) -> Result<(Option<BraidWord>, usize)> {
    let mut sides = [Side::new(r1), Side::new(r2)];
    if let Some(w) = sides[0].meet(&sides[1]) {
        return Ok((Some(w), 0));
    }
    let mut depth = 0;
    while depth < max_depth {
        if sides.iter().map(|s| s.seen.len()).sum::<usize>() >= max_states {
            break;
        }
        let k = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        if sides[k].frontier.is_empty() {
            break;
        }
        let (a, b) = sides.split_at_mut(1);
        let (me, other) = if k == 0 { (&mut a[0], &b[0]) } else { (&mut b[0], &a[0]) };
        let hit = me.advance(deck, other)?;
        depth += 1;
        if let Some((mine, theirs)) = hit {
            let word = if k == 0 {
                concat(&mine, &theirs.inverse())
            } else {
                concat(&theirs, &mine.inverse())
            };
            return Ok((Some(word), depth));
        }
    }
    Ok((None, depth))
}

fn verified_path(d1: &Dissection, d2: &Dissection, word: BraidWord) -> Result<SeparationCertificate> {
    let (end, _) = braid_act(d1, &word)?;
    if &end != d2 {
        return Err(Error::Internal(format!("path [{word}] does not replay")));
    }
    Ok(SeparationCertificate::Path(word))
}

struct Side {
    seen: HashMap<Vec<ArcClass>, BraidWord>,
    frontier: Vec<StateRecord>,
}

impl Side {
    fn new(root: StateRecord) -> Self {
        let mut seen = HashMap::new();
        seen.insert(root.dissection.state_key(), BraidWord::default());
        Self {
            seen,
            frontier: vec![root],
        }
    }

    fn meet(&self, other: &Side) -> Option<BraidWord> {
        let key = self.frontier[0].dissection.state_key();
        other.seen.get(&key).map(|w| w.inverse())
    }

    /// Expands one level; returns the words of the first state seen by both sides.
    fn advance(&mut self, deck: Option<&DeckInvolution>, other: &Side) -> Result<Option<(BraidWord, BraidWord)>> {
        let succ = expand(&self.frontier, deck)?;
        let mut next = Vec::new();
        for s in succ {
            let key = s.dissection.state_key();
            if self.seen.contains_key(&key) {
                continue;
            }
            if let Some(w) = other.seen.get(&key) {
                return Ok(Some((s.word.clone(), w.clone())));
            }
            self.seen.insert(key, s.word.clone());
            next.push(s);
        }
        self.frontier = next;
        Ok(None)
    }
}

/// Every valid dissection whose arcs are embedded arcs with canonical
/// words of at most `max_letters` letters, found by independent
/// enumeration of ordered tuples.
pub fn enumerate_dissections(chart: &Arc<Chart>, max_letters: usize, limit: usize) -> Result<(Vec<Dissection>, bool)> {
    let arcs = chart.enumerate_arcs(max_letters);
    let n = chart.n();
    let mut compatible = vec![vec![false; arcs.len()]; arcs.len()];
    for i in 0..arcs.len() {
        for j in 0..arcs.len() {
            compatible[i][j] = i != j && !chart.crosses(&arcs[i], &arcs[j]);
        }
    }
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(n);
    let complete = extend_tuple(chart, &arcs, &compatible, n, &mut tuple, &mut out, limit);
    Ok((out, complete))
}

fn extend_tuple(
    chart: &Arc<Chart>,
    arcs: &[ArcClass],
    compatible: &[Vec<bool>],
    n: usize,
    tuple: &mut Vec<usize>,
    out: &mut Vec<Dissection>,
    limit: usize,
) -> bool {
    if tuple.len() == n {
        let d = Dissection::new(chart.clone(), tuple.iter().map(|&k| arcs[k].clone()).collect());
        if d.validate().is_valid() {
            if out.len() >= limit {
                return false;
            }
            out.push(d);
        }
        return true;
    }
    for k in 0..arcs.len() {
        if tuple.iter().all(|&t| compatible[t][k]) {
            tuple.push(k);
            let ok = extend_tuple(chart, arcs, compatible, n, tuple, out, limit);
            tuple.pop();
            if !ok {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct Genus0Report {
    pub marked_points: usize,
    pub word_bound: usize,
    pub enumerated: usize,
    pub reached: usize,
    pub explored: usize,
    pub depth: usize,
    pub missing: Vec<Dissection>,
}

impl Genus0Report {
    pub fn transitive(&self) -> bool {
        self.missing.is_empty()
    }
}

impl fmt::Display for Genus0Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "disk m={} word_bound={} enumerated={} reached={} explored={} depth={}",
            self.marked_points, self.word_bound, self.enumerated, self.reached, self.explored, self.depth
        )?;
        write!(f, "transitive={}", self.transitive())
    }
}

/// Enumerates the bounded dissections of the `m`-marked disk and checks
/// that the orbit of the standard one reaches all of them.
pub fn genus0_transitivity_check(m: usize, word_bound: usize, max_depth: usize, max_states: usize) -> Result<Genus0Report> {
    if m < 2 {
        return Err(Error::Domain("the disk needs at least two marked points".into()));
    }
    let chart = Arc::new(Chart::new(standard_skeleton(&MarkedSurface::disk(m)?)?)?);
    let (all, complete) = enumerate_dissections(&chart, word_bound, max_states)?;
    if !complete {
        return Err(Error::Domain(format!("more than {max_states} bounded dissections")));
    }
    let report = explore(&Dissection::reference(chart), max_depth, max_states)?;
    let keys = report.keys();
    let missing: Vec<Dissection> = all.iter().filter(|d| !keys.contains(&d.state_key())).cloned().collect();
    Ok(Genus0Report {
        marked_points: m,
        word_bound,
        enumerated: all.len(),
        reached: all.len() - missing.len(),
        explored: report.states.len(),
        depth: report.depth,
        missing,
    })
}

#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub base: Dissection,
    pub twisted: Dissection,
    pub base_hurwitz: HurwitzSystem,
    pub twisted_hurwitz: HurwitzSystem,
    pub certificate: SeparationCertificate,
    pub explored: usize,
    pub depth: usize,
    pub twisted_reached: bool,
    pub all_explored_deck_fixed: bool,
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surface genus=1 boundary=2 marks=[1,1] arcs=4")?;
        writeln!(f, "base_hurwitz={}", self.base_hurwitz)?;
        writeln!(f, "twisted_hurwitz={}", self.twisted_hurwitz)?;
        writeln!(f, "hurwitz_equal={}", self.base_hurwitz == self.twisted_hurwitz)?;
        writeln!(f, "base:")?;
        write!(f, "{}", self.base)?;
        writeln!(f, "twisted (Dehn twist about boundary component 1):")?;
        write!(f, "{}", self.twisted)?;
        writeln!(
            f,
            "bfs depth={} states={} twisted_reached={} deck_fixed_on_all_states={}",
            self.depth, self.explored, self.twisted_reached, self.all_explored_deck_fixed
        )?;
        write!(f, "{}", self.certificate)
    }
}

/// The genus-one surface with two boundary components and one marked point
/// on each: its standard dissection and the Dehn twist of it about one
/// boundary component lie in different braid orbits.
pub fn counterexample_g1b2(bfs_depth: usize, max_states: usize) -> Result<CounterexampleReport> {
    let surface = MarkedSurface::new(1, vec![1, 1])?;
    let chart = Arc::new(Chart::new(standard_skeleton(&surface)?)?);
    let base = Dissection::reference(chart);
    let twisted = twist_dissection(&base, 0, 1)?;
    let certificate = separate(&base, &twisted, 0, max_states)?;
    let report = explore(&base, bfs_depth, max_states)?;
    Ok(CounterexampleReport {
        base_hurwitz: base.hurwitz()?,
        twisted_hurwitz: twisted.hurwitz()?,
        twisted_reached: report.contains(&twisted),
        all_explored_deck_fixed: report.states.iter().all(|s| s.deck_fixed == Some(true)),
        explored: report.states.len(),
        depth: report.depth,
        base,
        twisted,
        certificate,
    })
}

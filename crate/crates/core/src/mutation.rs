//! Ordered arc systems over a chart and the braid group action by mutations.

use std::fmt;
use std::sync::Arc;

use crate::arcs::{ArcClass, Chart, Corner, CrossingWord, Frame, Letter, LiftedVertex, MutationCase};
use crate::error::{parse_err, Error, Result};
use crate::perm::{hurwitz_move, Direction, HurwitzSystem};
use crate::surface::{
    content_lines, format_skeleton, hurwitz_of, parse_skeleton_lines, validate_dissection, ArcEnd,
    Skeleton, Validation, Violation,
};

/// An ordered tuple of arc classes over a shared chart.
#[derive(Debug, Clone)]
pub struct Dissection {
    chart: Arc<Chart>,
    arcs: Vec<ArcClass>,
}

impl PartialEq for Dissection {
    fn eq(&self, other: &Self) -> bool {
        self.arcs == other.arcs
    }
}

impl Eq for Dissection {}

impl Dissection {
    pub fn new(chart: Arc<Chart>, arcs: Vec<ArcClass>) -> Self {
        Self { chart, arcs }
    }

    /// The chart's own arcs, in chart order.
    pub fn reference(chart: Arc<Chart>) -> Self {
        let arcs = (0..chart.n()).map(|r| chart.reference_arc(r)).collect();
        Self { chart, arcs }
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn arcs(&self) -> &[ArcClass] {
        &self.arcs
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    /// Canonical state key: the tuple of canonical arc words.
    pub fn state_key(&self) -> Vec<ArcClass> {
        self.arcs.clone()
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = (self.arcs.len() as u32).to_le_bytes().to_vec();
        for a in &self.arcs {
            out.extend(a.to_bytes());
        }
        out
    }

    /// Violations that prevent the arcs from forming a ribbon structure:
    /// self-crossings, pairwise crossings and repeated classes.
    pub fn arc_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, a) in self.arcs.iter().enumerate() {
            if !self.chart.embedded(a) {
                out.push(Violation::SelfCrossing { arc: i + 1 });
            }
        }
        for i in 0..self.arcs.len() {
            for j in i + 1..self.arcs.len() {
                if self.arcs[i] == self.arcs[j] {
                    out.push(Violation::Isotopic {
                        first: i + 1,
                        second: j + 1,
                    });
                } else if self.chart.crosses(&self.arcs[i], &self.arcs[j]) {
                    out.push(Violation::Crossing {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        out
    }

    /// The ribbon structure of the arcs, assuming they are embedded,
    /// pairwise disjoint and pairwise non-isotopic.
    pub fn skeleton(&self) -> Result<Skeleton> {
        let chart = &self.chart;
        let sk = chart.skeleton();
        let mut fans: Vec<Vec<(Vec<usize>, ArcEnd)>> = vec![Vec::new(); sk.m()];
        for (k, a) in self.arcs.iter().enumerate() {
            for end in 0..2 {
                let w = if end == 0 { a.word().clone() } else { a.word().reversed() };
                let p = w.start.point;
                let root = LiftedVertex {
                    point: p,
                    corner: 0,
                    path: Vec::new(),
                };
                let far = chart.lift_end(&w, &root);
                let key = chart.key(
                    Frame {
                        root: Corner::new(p, 0),
                    },
                    &far,
                );
                fans[p].push((key, ArcEnd { arc: k, end }));
            }
        }
        let mut out_fans = Vec::with_capacity(sk.m());
        for (p, mut fan) in fans.into_iter().enumerate() {
            fan.sort();
            if fan.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Structural(format!(
                    "two arc-ends leave point {} in the same direction",
                    p + 1
                )));
            }
            out_fans.push(fan.into_iter().map(|(_, e)| e).collect());
        }
        let ends = self.arcs.iter().map(|a| [a.word().start.point, a.word().end.point]).collect();
        Skeleton::new(sk.declared_genus(), sk.boundaries().to_vec(), out_fans, ends)
    }

    /// Full validity: embedded, pairwise disjoint, distinct arcs whose
    /// ribbon structure is an exceptional dissection.
    pub fn validate(&self) -> Validation {
        let violations = self.arc_violations();
        if !violations.is_empty() {
            return Validation { violations };
        }
        match self.skeleton() {
            Ok(sk) => validate_dissection(&sk),
            Err(e) => Validation {
                violations: vec![Violation::Ribbon {
                    message: e.to_string(),
                }],
            },
        }
    }

    /// Hurwitz system of the arcs: `t_i` swaps the endpoints of arc `i`.
    pub fn hurwitz(&self) -> Result<HurwitzSystem> {
        let pairs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|a| {
                let (p, q) = a.endpoints();
                (p.min(q) + 1, p.max(q) + 1)
            })
            .collect();
        HurwitzSystem::from_pairs(self.chart.m(), &pairs)
    }

    /// One braid generator: `g > 0` is `sigma_g`, `g < 0` its inverse.
    /// Applies the mutation formula without re-validating the result.
    pub fn apply_generator(&self, g: i32) -> Result<(Dissection, MutationCase)> {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n().saturating_sub(1),
            });
        }
        let (a, b) = (&self.arcs[i - 1], &self.arcs[i]);
        let mut arcs = self.arcs.clone();
        let case = if g > 0 {
            let (r, case) = self.chart.right_mutation(a, b)?;
            arcs[i - 1] = b.clone();
            arcs[i] = r;
            case
        } else {
            let (l, case) = self.chart.left_mutation(a, b)?;
            arcs[i - 1] = l;
            arcs[i] = a.clone();
            case
        };
        Ok((
            Dissection {
                chart: self.chart.clone(),
                arcs,
            },
            case,
        ))
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.arcs.iter().enumerate() {
            writeln!(f, "{} {}", k + 1, a)?;
        }
        Ok(())
    }
}

/// A braid word: `k` stands for `sigma_k`, `-k` for its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord(pub Vec<i32>);

impl BraidWord {
    /// Parses whitespace- or comma-separated nonzero integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (k, tok) in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let g: i32 = tok
                .parse()
                .map_err(|_| parse_err(1, "word", format!("generator {} `{tok}` is not an integer", k + 1)))?;
            if g == 0 {
                return Err(parse_err(1, "word", format!("generator {} is zero", k + 1)));
            }
            out.push(g);
        }
        Ok(Self(out))
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|g| -g).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

/// Counts of mutation configurations met while acting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CaseCounts {
    pub disjoint: usize,
    pub one_endpoint: usize,
    pub two_endpoints: usize,
}

impl CaseCounts {
    pub fn record(&mut self, case: MutationCase) {
        match case {
            MutationCase::Disjoint => self.disjoint += 1,
            MutationCase::OneCommonEndpoint => self.one_endpoint += 1,
            MutationCase::TwoCommonEndpoints => self.two_endpoints += 1,
        }
    }

    pub fn merge(&mut self, other: CaseCounts) {
        self.disjoint += other.disjoint;
        self.one_endpoint += other.one_endpoint;
        self.two_endpoints += other.two_endpoints;
    }
}

/// Acts by a braid word, generator by generator from the left of the word,
/// validating every intermediate dissection.
pub fn braid_act(d: &Dissection, word: &BraidWord) -> Result<(Dissection, CaseCounts)> {
    let mut cur = d.clone();
    let mut counts = CaseCounts::default();
    for (k, &g) in word.0.iter().enumerate() {
        let (next, case) = cur.apply_generator(g)?;
        counts.record(case);
        let v = next.validate();
        if !v.is_valid() {
            return Err(Error::Internal(format!(
                "generator {} ({g}) produced an invalid dissection: {}",
                k + 1,
                v.violations.first().map(|v| v.to_string()).unwrap_or_default()
            )));
        }
        cur = next;
    }
    Ok((cur, counts))
}

/// The move of Hurwitz systems matching generator `g`.
pub fn hurwitz_generator(h: &HurwitzSystem, g: i32) -> Result<HurwitzSystem> {
    let dir = if g > 0 { Direction::Forward } else { Direction::Inverse };
    hurwitz_move(h, g.unsigned_abs() as usize, dir)
}

/// Hurwitz system of the dissection's ribbon structure.
pub fn hurwitz_of_dissection(d: &Dissection) -> Result<HurwitzSystem> {
    hurwitz_of(&d.skeleton()?)
}

fn parse_pair(text: &str, line: usize, field: &str) -> Result<(usize, usize)> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| parse_err(line, field, format!("expected `(a,b)`, found `{text}`")))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| parse_err(line, field, format!("expected `(a,b)`, found `{text}`")))?;
    let a = a.trim().parse().map_err(|_| parse_err(line, field, format!("bad number in `{text}`")))?;
    let b = b.trim().parse().map_err(|_| parse_err(line, field, format!("bad number in `{text}`")))?;
    Ok((a, b))
}

/// Parses one arc line `start=(p,c) letters=[(r,s),...] end=(q,c)`;
/// points and arcs are 1-based, corners and sides 0-based.
pub fn parse_arc_line(line: &str, ln: usize) -> Result<CrossingWord> {
    let rest = line
        .strip_prefix("start=")
        .ok_or_else(|| parse_err(ln, "start", "expected `start=(p,c)`"))?;
    let (start, rest) = rest
        .split_once(')')
        .ok_or_else(|| parse_err(ln, "start", "unclosed `(`"))?;
    let (sp, sc) = parse_pair(&format!("{start})"), ln, "start")?;
    let rest = rest
        .trim_start()
        .strip_prefix("letters=[")
        .ok_or_else(|| parse_err(ln, "letters", "expected `letters=[...]`"))?;
    let (body, rest) = rest
        .split_once(']')
        .ok_or_else(|| parse_err(ln, "letters", "unclosed `[`"))?;
    let mut letters = Vec::new();
    let mut body = body.trim();
    while !body.is_empty() {
        let close = body
            .find(')')
            .ok_or_else(|| parse_err(ln, "letters", "unclosed `(`"))?;
        let (r, s) = parse_pair(&body[..=close], ln, "letters")?;
        if r == 0 || s > 1 {
            return Err(parse_err(ln, "letters", format!("bad letter `{}`", &body[..=close])));
        }
        letters.push(Letter::new(r - 1, s));
        body = body[close + 1..].trim_start().trim_start_matches(',').trim_start();
    }
    let end = rest
        .trim_start()
        .strip_prefix("end=")
        .ok_or_else(|| parse_err(ln, "end", "expected `end=(q,c)`"))?;
    let (ep, ec) = parse_pair(end, ln, "end")?;
    if sp == 0 || ep == 0 {
        return Err(parse_err(ln, "point", "points are numbered from 1"));
    }
    Ok(CrossingWord::new(Corner::new(sp - 1, sc), letters, Corner::new(ep - 1, ec)))
}

/// Parses a dissection file: a chart skeleton, optionally followed by
/// `arcs k` and `k` arc lines. Without an arcs section the dissection is
/// the chart itself.
pub fn parse_dissection(text: &str) -> Result<Dissection> {
    let mut lines = content_lines(text);
    let sk = parse_skeleton_lines(&mut lines)?;
    let chart = Arc::new(Chart::new(sk).map_err(|e| parse_err(1, "chart", e.to_string()))?);
    let Some((hl, header)) = lines.next() else {
        return Ok(Dissection::reference(chart));
    };
    let count = header
        .strip_prefix("arcs")
        .and_then(|t| t.trim().parse::<usize>().ok())
        .ok_or_else(|| parse_err(hl, "arcs", "expected `arcs k`"))?;
    let mut arcs = Vec::with_capacity(count);
    for k in 0..count {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hl, "arcs", format!("expected {count} arc lines, found {k}")))?;
        let w = parse_arc_line(line, ln)?;
        arcs.push(chart.arc(&w).map_err(|e| parse_err(ln, "arc", e.to_string()))?);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailer", "unexpected content after the arcs section"));
    }
    Ok(Dissection::new(chart, arcs))
}

pub fn format_dissection(d: &Dissection) -> String {
    let mut out = format_skeleton(d.chart.skeleton());
    out.push_str(&format!("arcs {}\n", d.n()));
    for a in d.arcs() {
        out.push_str(&a.to_string());
        out.push('\n');
    }
    out
}

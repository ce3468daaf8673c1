//! Which of the extension outcomes holds for a good wheel inside a
//! 5-boundary disc instance `(H, t)` with mandatory set `s`.
//!
//! With `U` the rim vertices off the center's neighbourhood, the outcomes are:
//! (i) some `s`-vertex off the wheel has neighbourhood `{a, b}` inside `U`,
//! with `a = b` or `ab` a rim edge; (ii) a separation with cut `{a, b, w}`
//! puts two `s`-vertices off the wheel and exactly one spoke on side 1 and
//! the rest of `t` on side 2; (iii) `|s| = 3` and a separation with cut
//! `{a, b, s1, s2}` puts `s` on side 1 and the center with `t - s` on side
//! 2; (iv) a separation with cut `{a, b, c}`, `c` off the wheel, has side 1
//! free of the center and spokes and meeting `t` in two `s`-vertices.

use serde::{Deserialize, Serialize};

use crate::embedding::DiscEmbedding;
use crate::error::{Error, Result};
use crate::graph::{Graph, PathSystem, VertexSet};
use crate::wheels::{is_extendable, is_good, verify_extension, wheel_at, Extension, Wheel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExtensionOutcome {
    SExtendable { paths: Vec<Vec<usize>> },
    OutcomeI { s: usize, a: usize, b: usize },
    OutcomeIi { s1: usize, s2: usize, a: usize, b: usize, w: usize, side1: Vec<usize>, side2: Vec<usize> },
    OutcomeIii { s1: usize, s2: usize, a: usize, b: usize, side1: Vec<usize>, side2: Vec<usize> },
    OutcomeIv { a: usize, b: usize, c: usize, side1: Vec<usize>, side2: Vec<usize> },
    None,
}

impl ExtensionOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            ExtensionOutcome::SExtendable { .. } => "S_EXTENDABLE",
            ExtensionOutcome::OutcomeI { .. } => "OUTCOME_I",
            ExtensionOutcome::OutcomeIi { .. } => "OUTCOME_II",
            ExtensionOutcome::OutcomeIii { .. } => "OUTCOME_III",
            ExtensionOutcome::OutcomeIv { .. } => "OUTCOME_IV",
            ExtensionOutcome::None => "NONE",
        }
    }
}

struct Ctx<'a> {
    h: &'a Graph,
    t: VertexSet,
    s: VertexSet,
    w: usize,
    spokes: VertexSet,
    wheel: VertexSet,
    non_spokes: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn new(h: &'a Graph, t: VertexSet, s: VertexSet, wheel: &Wheel) -> Self {
        Ctx {
            h,
            t,
            s,
            w: wheel.center,
            spokes: wheel.spoke_set(),
            wheel: wheel.vertices(),
            non_spokes: wheel.non_spokes().to_vec(),
        }
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let u = &self.non_spokes;
        (0..u.len()).flat_map(|i| (i + 1..u.len()).map(move |j| (u[i], u[j]))).collect()
    }

    /// First grouping (in increasing bitmask order over the components of
    /// `H - cut`) with `must1` on side 1, `must2` off side 1, both sides
    /// reaching outside the cut, and `accept` true of side 1.
    fn split(
        &self,
        cut: VertexSet,
        must1: VertexSet,
        must2: VertexSet,
        accept: impl Fn(VertexSet) -> bool,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let rest = self.h.vertices().difference(cut);
        if !must1.union(must2).is_subset(rest) || !must1.intersection(must2).is_empty() {
            return None;
        }
        let comps = self.h.components_within(rest);
        for mask in 0u64..1 << comps.len() {
            let a: VertexSet = comps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(VertexSet::EMPTY, |x, (_, c)| x.union(*c));
            let b = rest.difference(a);
            if a.is_empty() || b.is_empty() || !must1.is_subset(a) || !must2.intersection(a).is_empty() || !accept(a) {
                continue;
            }
            return Some((cut.union(a).to_vec(), cut.union(b).to_vec()));
        }
        None
    }

    fn outcome_i(&self) -> Option<ExtensionOutcome> {
        let u: VertexSet = self.non_spokes.iter().collect();
        for s in self.s.difference(self.wheel).iter() {
            let nb = self.h.neighbors(s);
            if nb.is_empty() || nb.len() > 2 || !nb.is_subset(u) {
                continue;
            }
            let v = nb.to_vec();
            let (a, b) = (v[0], *v.last().unwrap());
            if a == b || self.h.has_edge(a, b) {
                return Some(ExtensionOutcome::OutcomeI { s, a, b });
            }
        }
        None
    }

    fn outcome_ii(&self) -> Option<ExtensionOutcome> {
        let off = self.s.difference(self.wheel).to_vec();
        for (i, &s1) in off.iter().enumerate() {
            for &s2 in &off[i + 1..] {
                let pair = VertexSet::singleton(s1).with(s2);
                for (a, b) in self.pairs() {
                    let cut = VertexSet::singleton(a).with(b).with(self.w);
                    if let Some((side1, side2)) =
                        self.split(cut, pair, self.t.difference(pair), |x| x.intersection(self.spokes).len() == 1)
                    {
                        return Some(ExtensionOutcome::OutcomeIi { s1, s2, a, b, w: self.w, side1, side2 });
                    }
                }
            }
        }
        None
    }

    fn outcome_iii(&self) -> Option<ExtensionOutcome> {
        if self.s.len() != 3 {
            return None;
        }
        let sv = self.s.to_vec();
        for (i, &s1) in sv.iter().enumerate() {
            for &s2 in &sv[i + 1..] {
                let third = self.s.without(s1).without(s2);
                let must2 = self.t.difference(self.s).with(self.w);
                for (a, b) in self.pairs() {
                    let cut = VertexSet::singleton(a).with(b).with(s1).with(s2);
                    if let Some((side1, side2)) = self.split(cut, third, must2, |_| true) {
                        return Some(ExtensionOutcome::OutcomeIii { s1, s2, a, b, side1, side2 });
                    }
                }
            }
        }
        None
    }

    fn outcome_iv(&self) -> Option<ExtensionOutcome> {
        let must2 = self.spokes.with(self.w);
        for (a, b) in self.pairs() {
            for c in self.h.vertices().difference(self.wheel).iter() {
                let cut = VertexSet::singleton(a).with(b).with(c);
                let ok = |x: VertexSet| {
                    let hit = x.union(cut).intersection(self.t);
                    hit.len() == 2 && hit.is_subset(self.s)
                };
                if let Some((side1, side2)) = self.split(cut, VertexSet::EMPTY, must2, ok) {
                    return Some(ExtensionOutcome::OutcomeIv { a, b, c, side1, side2 });
                }
            }
        }
        None
    }
}

fn check_instance(e: &DiscEmbedding, t: &[usize], s: VertexSet, wheel: &Wheel) -> Result<VertexSet> {
    let h = e.host();
    let tset: VertexSet = t.iter().collect();
    if t.len() != 5 || tset.len() != 5 || !tset.is_subset(h.vertices()) {
        return Err(Error::Precondition("t must be five distinct host vertices".into()));
    }
    if let Some((u, v)) = h.edges().into_iter().find(|&(u, v)| tset.contains(u) && tset.contains(v)) {
        return Err(Error::Precondition(format!("t is not independent: edge {u}-{v}")));
    }
    if !s.is_subset(tset) {
        return Err(Error::Precondition("s is not a subset of t".into()));
    }
    wheel.validate(h).map_err(Error::Precondition)?;
    if tset.contains(wheel.center) {
        return Err(Error::Precondition("the center lies in t".into()));
    }
    if wheel_at(e, wheel.center)?.wheel().as_ref() != Some(wheel) {
        return Err(Error::Precondition("wheel is not the cofacial wheel of its center".into()));
    }
    if !is_good(wheel, tset) {
        return Err(Error::Precondition("wheel is not good for t".into()));
    }
    Ok(tset)
}

/// S_EXTENDABLE when `wheel` is `(t, s)`-extendable, else the first outcome
/// of (i)..(iv) found, else NONE.
pub fn classify_extension_outcomes(
    e: &DiscEmbedding,
    t: &[usize],
    s: VertexSet,
    wheel: &Wheel,
) -> Result<ExtensionOutcome> {
    let tset = check_instance(e, t, s, wheel)?;
    if let Extension::Paths(p) = is_extendable(e, wheel, t, s)? {
        return Ok(ExtensionOutcome::SExtendable { paths: p.paths });
    }
    let ctx = Ctx::new(e.host(), tset, s, wheel);
    let found = ctx
        .outcome_i()
        .or_else(|| ctx.outcome_ii())
        .or_else(|| ctx.outcome_iii())
        .or_else(|| ctx.outcome_iv())
        .unwrap_or(ExtensionOutcome::None);
    Ok(found)
}

/// Whether `(side1, side2)` is a separation of `h` with the given cut.
fn separation_ok(h: &Graph, side1: &[usize], side2: &[usize], cut: VertexSet) -> std::result::Result<(), String> {
    let a: VertexSet = side1.iter().collect();
    let b: VertexSet = side2.iter().collect();
    if a.union(b) != h.vertices() || a.intersection(b) != cut {
        return Err("sides do not cover the host or meet outside the cut".into());
    }
    if a.difference(cut).is_empty() || b.difference(cut).is_empty() {
        return Err("one side lies inside the other".into());
    }
    if let Some((u, v)) = h.edges().into_iter().find(|&(u, v)| !(a.contains(u) && a.contains(v)) && !(b.contains(u) && b.contains(v))) {
        return Err(format!("edge {u}-{v} crosses the separation"));
    }
    Ok(())
}

/// Re-checks the defining condition of `outcome` from scratch.
pub fn verify_outcome(
    e: &DiscEmbedding,
    t: &[usize],
    s: VertexSet,
    wheel: &Wheel,
    outcome: &ExtensionOutcome,
) -> std::result::Result<(), String> {
    let tset = check_instance(e, t, s, wheel).map_err(|x| x.to_string())?;
    let h = e.host();
    let w = wheel.center;
    let u = wheel.non_spokes();
    let spokes = wheel.spoke_set();
    let on_wheel = wheel.vertices();
    let set = |v: &[usize]| -> VertexSet { v.iter().collect() };
    let need = |c: bool, what: &str| if c { Ok(()) } else { Err(what.to_string()) };
    match outcome {
        ExtensionOutcome::SExtendable { paths } => verify_extension(h, wheel, tset, s, &PathSystem::new(paths.clone())),
        ExtensionOutcome::OutcomeI { s: x, a, b } => {
            need(s.contains(*x) && !on_wheel.contains(*x), "s-vertex not in s or on the wheel")?;
            need(u.contains(*a) && u.contains(*b), "a or b is not a non-spoke rim vertex")?;
            need(h.neighbors(*x) == VertexSet::singleton(*a).with(*b), "neighbourhood differs from {a, b}")?;
            need(a == b || wheel.has_edge(*a, *b), "ab is not a rim edge")
        }
        ExtensionOutcome::OutcomeIi { s1, s2, a, b, w: c, side1, side2 } => {
            need(*c == w, "cut vertex is not the center")?;
            need(s1 != s2 && a != b, "repeated witness vertices")?;
            need([s1, s2].iter().all(|&&x| s.contains(x) && !on_wheel.contains(x)), "s1, s2 not in s off the wheel")?;
            need(u.contains(*a) && u.contains(*b), "a or b is not a non-spoke rim vertex")?;
            let cut = VertexSet::singleton(*a).with(*b).with(w);
            separation_ok(h, side1, side2, cut)?;
            let (x, y) = (set(side1), set(side2));
            need(x.contains(*s1) && x.contains(*s2), "s1, s2 not on side 1")?;
            need(spokes.intersection(x).len() == 1, "side 1 does not hold exactly one spoke")?;
            need(tset.without(*s1).without(*s2).is_subset(y), "rest of t not on side 2")
        }
        ExtensionOutcome::OutcomeIii { s1, s2, a, b, side1, side2 } => {
            need(s.len() == 3, "|s| is not 3")?;
            need(s1 != s2 && a != b && s.contains(*s1) && s.contains(*s2), "s1, s2 not distinct s-vertices")?;
            need(u.contains(*a) && u.contains(*b), "a or b is not a non-spoke rim vertex")?;
            let cut = VertexSet::singleton(*a).with(*b).with(*s1).with(*s2);
            separation_ok(h, side1, side2, cut)?;
            need(s.is_subset(set(side1)), "s not on side 1")?;
            need(tset.difference(s).with(w).is_subset(set(side2)), "center or t - s not on side 2")
        }
        ExtensionOutcome::OutcomeIv { a, b, c, side1, side2 } => {
            need(a != b && u.contains(*a) && u.contains(*b), "a or b is not a non-spoke rim vertex")?;
            need(!on_wheel.contains(*c), "c lies on the wheel")?;
            let cut = VertexSet::singleton(*a).with(*b).with(*c);
            separation_ok(h, side1, side2, cut)?;
            let (x, y) = (set(side1), set(side2));
            need(spokes.with(w).intersection(x).is_empty(), "side 1 meets the center or a spoke")?;
            let hit = x.intersection(tset);
            need(hit.len() == 2 && hit.is_subset(s), "side 1 does not meet t in two s-vertices")?;
            need(spokes.with(w).is_subset(y.difference(x)), "center or spokes not strictly on side 2")
        }
        // Nothing to witness: the claim is that the exhaustive search fails.
        ExtensionOutcome::None => match classify_extension_outcomes(e, t, s, wheel).map_err(|x| x.to_string())? {
            ExtensionOutcome::None => Ok(()),
            found => Err(format!("{} holds", found.tag())),
        },
    }
}
